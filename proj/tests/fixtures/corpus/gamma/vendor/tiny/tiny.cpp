#include "tiny.h"

// vendored

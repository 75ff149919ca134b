#include "input.h"
#include <beta/core/core.h>

// device polling

#include "config.h"

namespace alpha { struct Editor { bool open; }; }

#include "core.h"
#include "log.h"

// subsystem registry

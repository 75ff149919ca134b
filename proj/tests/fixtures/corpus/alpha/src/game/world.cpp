#include "world.h"
#include "../core/engine.h"
/* #include "nothere.h" */

// world stepping

#include "menu.h"
#include "core/util.h"

// item activation

#include "body.h"
#include "solver.h"

// integration step

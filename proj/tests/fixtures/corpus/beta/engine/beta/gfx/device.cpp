#include "device.h"
#include "shader.h"
#include <beta/core/log.h>

// command submission

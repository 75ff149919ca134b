#include "core/os.h"
#include "render/device.h"

namespace alpha { int run(); }

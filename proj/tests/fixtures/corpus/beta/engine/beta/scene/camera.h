#include "../gfx/device.h"

namespace beta { struct Camera { double fov; }; }

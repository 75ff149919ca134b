#include "../core/base.h"

namespace gamma { struct View { int w, h; }; }

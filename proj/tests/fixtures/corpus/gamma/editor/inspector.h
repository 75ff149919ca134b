#include "../core/base.h"

namespace gamma { struct Inspector { u32 target; }; }

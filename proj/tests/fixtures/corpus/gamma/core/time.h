#include "base.h"

namespace gamma { u32 now_ms(); }

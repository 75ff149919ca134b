#include "../core/variant.h"

namespace beta { struct Shader { int stage; }; }

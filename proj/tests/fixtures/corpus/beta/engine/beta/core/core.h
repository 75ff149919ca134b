#include "variant.h"

namespace beta { struct Core { int version; }; }

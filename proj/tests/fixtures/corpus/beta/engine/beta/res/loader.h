#include "registry.h"

namespace beta { struct Loader { int slots; }; }

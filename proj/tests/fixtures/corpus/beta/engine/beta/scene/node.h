#include <beta/core/variant.h>

namespace beta { struct Node { int id; }; }

#include "script.h"

namespace gamma { struct Play { int level; }; }

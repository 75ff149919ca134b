#include "widget.h"

namespace gamma { struct Menu { int items; }; }

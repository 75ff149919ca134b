#include "../../ui/view.h"

namespace gamma { struct PanelView { View view; }; }

#include "editor.h"
#include "game/world.h"
#include "render/device.h"

// panels and gizmos

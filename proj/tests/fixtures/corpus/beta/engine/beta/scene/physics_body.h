#include "../physics/body.h"

namespace beta { struct PhysicsBody { double inertia; }; }

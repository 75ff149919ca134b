#include <beta/scene/node.h>

namespace demo { struct App { beta::Node* root; }; }

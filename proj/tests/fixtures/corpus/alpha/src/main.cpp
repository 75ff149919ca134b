#include "app.h"
#include "core/engine.h"
#include <vector>

int main() { return alpha::run(); }

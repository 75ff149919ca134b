#include "math.h"
#  include "os.h"

double alpha::lerp(double a, double b, double t) { return a + (b - a) * t; }

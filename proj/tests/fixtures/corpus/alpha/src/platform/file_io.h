#include "config.h"

namespace alpha { bool read_all(const char* path); }

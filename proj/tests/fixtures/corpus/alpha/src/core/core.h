#include <cstdint>

namespace alpha { using id_t = unsigned; }

#include "device.h"
#include "gl/gl_context.h"
#include "texture.h"
#include "texture.h"

// texture.h intentionally included twice

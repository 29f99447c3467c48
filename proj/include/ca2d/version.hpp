#pragma once

#define CA2D_VERSION_MAJOR 0
#define CA2D_VERSION_MINOR 1
#define CA2D_VERSION_PATCH 0
#define CA2D_VERSION_STRING "0.1.0"

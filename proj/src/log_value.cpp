#include "hartogs/log_value.hpp"

// LogValue is header-only; this TU anchors the header for the build.

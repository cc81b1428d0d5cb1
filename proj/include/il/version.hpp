#pragma once

namespace il {

// Version tag embedded in report configs so every report names the code
// that produced it.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace il

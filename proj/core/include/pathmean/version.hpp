#pragma once

namespace pathmean {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pathmean

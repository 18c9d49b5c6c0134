#pragma once

namespace pavek {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pavek

#pragma once

namespace phipoly {

inline constexpr const char* kToolName = "phipoly";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace phipoly

#pragma once

namespace morphoprot {

inline constexpr const char* kToolName = "morphoprot";
inline constexpr const char* kVersion = "0.1.0";

} // namespace morphoprot

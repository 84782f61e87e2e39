#pragma once

namespace spv {

inline constexpr const char* kToolName = "spv";
inline constexpr const char* kVersion = "0.1.0";

} // namespace spv

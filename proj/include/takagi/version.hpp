#pragma once

namespace takagi {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "takagi";

}  // namespace takagi

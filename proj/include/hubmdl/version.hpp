#pragma once

namespace hubmdl {

inline constexpr const char* kToolName = "hubmdl";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace hubmdl

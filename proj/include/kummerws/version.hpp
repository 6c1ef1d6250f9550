#pragma once

namespace kummerws {

inline constexpr const char* tool_name = "kummerws";
inline constexpr const char* tool_version = "1.0.0";
inline constexpr int schema_version = 1;

}  // namespace kummerws

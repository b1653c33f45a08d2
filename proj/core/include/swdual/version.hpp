#pragma once

namespace swdual {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

} // namespace swdual

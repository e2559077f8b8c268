#pragma once

namespace relieflab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kRecordsSchemaVersion = 1;

}  // namespace relieflab

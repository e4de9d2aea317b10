#pragma once

namespace aoastat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aoastat

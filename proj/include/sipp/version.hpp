#pragma once

namespace sipp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sipp

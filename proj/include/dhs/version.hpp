#pragma once

namespace dhs {

inline constexpr const char* kVersion = "dhs 0.1.0";

}  // namespace dhs

#pragma once

namespace ctqw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ctqw

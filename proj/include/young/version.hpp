#pragma once

namespace young {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace young

#pragma once

namespace confirm {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace confirm

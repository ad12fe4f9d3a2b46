#pragma once

namespace bikecount {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace bikecount

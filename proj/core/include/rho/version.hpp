#pragma once

namespace rho {

// Bumped whenever the serialized spectrum format or the enumeration kernel
// changes in a way that invalidates previously cached results.
inline constexpr int kKernelVersion = 1;

inline constexpr const char* kVersionString = "0.1.0";

}  // namespace rho

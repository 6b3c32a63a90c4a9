#pragma once

namespace weilcomb {

inline constexpr const char* kToolName = "weilcomb";
inline constexpr const char* kToolVersion = "1.0.0";

// Salt mixed into cache keys so cached verifier results are invalidated
// whenever the result format or algorithm changes incompatibly.
inline constexpr const char* kCacheEpoch = "1";

}  // namespace weilcomb

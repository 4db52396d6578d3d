#ifndef BLOCKSORT_VERSION_HPP
#define BLOCKSORT_VERSION_HPP

namespace blocksort {

inline constexpr const char* kVersion = "1.0.0";

// Stamped into every machine-readable report so consumers can detect
// incompatible layout changes.
inline constexpr const char* kSchema = "blocksort/1";

}  // namespace blocksort

#endif  // BLOCKSORT_VERSION_HPP

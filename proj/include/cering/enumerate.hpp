#ifndef CERING_ENUMERATE_HPP
#define CERING_ENUMERATE_HPP

#include <functional>

#include "cering/linalg.hpp"

namespace cering {

/// Hard cap on projective enumerations.
inline constexpr uint64_t kEnumerationCap = uint64_t(1) << 24;

/// Point budget above which exact enumeration falls back to sampling
/// for the subspace-per-point checks (invariance, locality).
inline constexpr uint64_t kHeavyEnumerationCap = uint64_t(1) << 16;

struct EnumStats {
    uint64_t visited = 0;
    bool completed = false;   // every point was visited
    bool early_stop = false;  // callback asked to stop
};

/// Number of projective points of F^n, saturating at 2^63 for large
/// spaces; infinite fields report the saturated value.
uint64_t projective_point_count(const FieldSpec& f, size_t n);

/// Visits one canonical representative per 1-dimensional subspace of
/// F^n over a prime field: first non-zero coordinate scaled to 1.
/// Order: by support weight, then support set (lex), then value tuple
/// (lex): low-weight points first, and the order is the deterministic
/// tie-break for first-witness results. The callback returns false to
/// stop. Stops after `cap` points with completed = false.
EnumStats for_each_projective_point(const FieldSpec& f, size_t n, uint64_t cap,
                                    const std::function<bool(const Vec&)>& fn);

}  // namespace cering

#endif

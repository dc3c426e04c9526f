#ifndef CERING_DIFFMAT_HPP
#define CERING_DIFFMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cering/bivar.hpp"

namespace cering {

/// Element T(f, g) of the upper-triangular ring over Q(x, y) whose
/// matrix form is rows (f, f_x, g), (0, f, f_y), (0, 0, f). The ring is
/// infinite-dimensional over Q, so it lives outside the
/// structure-constant machinery; products use the closed form
/// T(f, g) T(f', g') = T(f f', f g' + g f' + f_x f'_y).
struct DiffMat {
    RatFun f;
    RatFun g;

    static DiffMat identity() { return {RatFun(BigRational(1)), RatFun()}; }
    static DiffMat zero() { return {RatFun(), RatFun()}; }

    bool is_zero() const { return f.is_zero() && g.is_zero(); }
    bool operator==(const DiffMat& o) const { return f == o.f && g == o.g; }

    DiffMat operator+(const DiffMat& o) const { return {f + o.f, g + o.g}; }
    DiffMat operator-(const DiffMat& o) const { return {f - o.f, g - o.g}; }
    DiffMat operator-() const { return {-f, -g}; }
    DiffMat operator*(const DiffMat& o) const;
    DiffMat commutator(const DiffMat& o) const { return *this * o - o * *this; }

    /// Central iff the diagonal entry is a constant.
    bool is_central() const;

    std::string to_string() const { return "T(" + f.to_string() + ", " + g.to_string() + ")"; }
};

/// Seeded random element of Q(x, y) with small degrees and coefficients.
RatFun random_ratfun(uint64_t& state, bool allow_denominator = true);

struct DiffmatCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct DiffmatReport {
    uint64_t seed = 0;
    size_t samples = 0;
    std::vector<DiffmatCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Randomized verification of the ring laws and of the central-multiple
/// behaviour: associativity, centrality of constant-diagonal elements,
/// the witness law T(f, g) T(0, 1) = T(0, f), the least ideal
/// H = {T(0, g)} with H * H = 0, and the concrete non-commutativity
/// commutator [T(x, 0), T(y, 0)] = T(0, 1).
DiffmatReport diffmat_checks(uint64_t seed, size_t samples);

}  // namespace cering

#endif

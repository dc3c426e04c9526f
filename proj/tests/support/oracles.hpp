#ifndef CERING_TESTS_ORACLES_HPP
#define CERING_TESTS_ORACLES_HPP

#include <array>

#include "cering/diffmat.hpp"
#include "cering/structure.hpp"

namespace cering::tests {

/// Independent radical oracle for small prime-field algebras: the span
/// of all elements whose two-sided ideal is nilpotent, by enumeration
/// of every projective point of the algebra. Exponential; dim <= 8.
Subspace brute_force_largest_nil_ideal(AlgebraPtr a);

/// Independent minimal-right-ideal oracle: enumerate the cyclic right
/// ideal of every projective point of the whole algebra and keep the
/// inclusion-minimal ones (no socle shortcut).
std::vector<Subspace> brute_force_minimal_right_ideals(AlgebraPtr a);

/// Literal 3x3 upper-triangular matrix over Q(x, y) for the diffmat
/// oracle: entries (f, f_x, g; 0, f, f_y; 0, 0, f).
using RatMat3 = std::array<std::array<RatFun, 3>, 3>;

RatMat3 diffmat_to_matrix(const DiffMat& d);
RatMat3 ratmat_mul(const RatMat3& a, const RatMat3& b);
bool ratmat_eq(const RatMat3& a, const RatMat3& b);

}  // namespace cering::tests

#endif

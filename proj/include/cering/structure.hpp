#ifndef CERING_STRUCTURE_HPP
#define CERING_STRUCTURE_HPP

#include "cering/verdict.hpp"

namespace cering {

/// Solution space of [x, b_i] = 0 over all basis elements; contains the
/// unit and is a commutative subalgebra.
Subspace center(AlgebraPtr a);

/// The radical as a subspace: the largest nilpotent two-sided ideal.
/// Over the rationals this is the kernel of the left-regular trace form;
/// over GF(p) a descending chain cut out by the p-power characteristic
/// polynomial coefficients. Throws UnsupportedField over Q(x, y).
Subspace jacobson_radical(AlgebraPtr a);

/// Span of pairwise products of basis vectors of u and v.
Subspace subspace_product(const Subspace& u, const Subspace& v);

/// Smallest k >= 1 with J^k = 0 (1 when J = 0); throws Internal if the
/// subspace is not nilpotent.
size_t nilpotence_index(const Subspace& j);

/// {x : x J = 0}, the right socle of the regular module.
Subspace socle_right(AlgebraPtr a, const Subspace& radical);
/// {x : J x = 0}.
Subspace socle_left(AlgebraPtr a, const Subspace& radical);
/// {x : J x = x J = 0}; minimal two-sided ideals live here.
Subspace socle_bimodule(AlgebraPtr a, const Subspace& radical);

/// All minimal right ideals: over prime fields by projective
/// enumeration of the right socle, over infinite fields only when the
/// socle is 1-dimensional (then it is the unique one). Throws
/// InconclusiveOverInfiniteField otherwise.
std::vector<Ideal> minimal_right_ideals(AlgebraPtr a);

struct CoreTriple {
    Verdict right;     // least non-zero right ideal
    Verdict left;      // least non-zero left ideal
    Verdict two_sided;  // least non-zero ideal
};

/// For each sidedness: True with the least ideal, False with two
/// ideals meeting in zero, or Inconclusive (infinite field, socle
/// dimension > 1).
CoreTriple cores(AlgebraPtr a);

/// True iff A/J(A) is a division ring. Exact over prime fields (and
/// whenever dim A/J = 1); over the rationals a witness zero-divisor
/// yields False, otherwise Inconclusive.
Verdict is_local(AlgebraPtr a);

/// True iff every one-sided ideal is two-sided, i.e. aR = Ra for all a.
/// Exact by projective enumeration over prime fields at desk scale;
/// sampled (basis elements, pairwise sums, random draws) otherwise.
Verdict is_invariant(AlgebraPtr a, uint64_t seed = 1);

/// True iff all basis commutators lie in the radical.
bool quotient_is_commutative(AlgebraPtr a, const Subspace& radical);

struct StructureOptions {
    bool with_cores = true;
    bool with_invariant = true;
    bool with_local = true;
    bool with_minimal_right_ideals = true;
    uint64_t seed = 1;
};

struct StructureReport {
    Subspace center;
    Subspace radical;
    size_t radical_nilpotence_index = 0;
    Subspace center_radical;          // J(C), embedded in the parent coordinates
    bool center_radical_matches = false;  // J(C) == C intersect J(R)
    Subspace right_socle;
    Subspace left_socle;
    Subspace bimodule_socle;
    std::optional<CoreTriple> cores;
    std::optional<CoreTriple> center_cores;  // cores of the center as a ring
    Verdict local;
    Verdict invariant;
    bool quotient_commutative = false;
    std::optional<std::vector<Ideal>> minimal_right;
};

StructureReport structure_report(AlgebraPtr a, const StructureOptions& opts = {});

}  // namespace cering

#endif

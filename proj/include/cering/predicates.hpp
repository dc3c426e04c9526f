#ifndef CERING_PREDICATES_HPP
#define CERING_PREDICATES_HPP

#include "cering/structure.hpp"

namespace cering {

/// Central multiple witness: for non-zero a, central x with
/// 0 != a x = y central, when one exists. For central a the witness is
/// (1, a). `c` must be center(a's algebra).
std::optional<std::pair<Vec, Vec>> ce_witness(AlgebraPtr a, const Vec& elem, const Subspace& c);

/// Decision method for the centrally essential property.
enum class CeMethod { Exhaustive, Annihilator, CentralCore, Auto };

const char* ce_method_name(CeMethod m);
CeMethod ce_method_from_name(const std::string& name);

/// Definition-level decider over prime fields: one representative per
/// projective point, every representative must admit a central multiple
/// witness (scaling invariance makes this sufficient). Commutative
/// algebras are True by definition. Throws UnsupportedField over
/// infinite fields and CapExceeded past 2^24 points.
Verdict is_centrally_essential_exhaustive(AlgebraPtr a);

/// The annihilator N = {r in J(R) : r J(C) = 0} and whether it is
/// contained in J(C), the subspace form of "no element outside J(C)
/// annihilates J(C)".
struct AnnihilatorCheck {
    Subspace n;
    bool contained_in_jc = false;
};

/// Criterion route via the radical annihilator: requires the two-sided
/// core verdict True and is_local True (PreconditionFailed otherwise).
/// For J = 0 the algebra is a division ring and the verdict is its
/// commutativity. Works over any field with a radical algorithm.
Verdict is_centrally_essential_annihilator(AlgebraPtr a, AnnihilatorCheck* out = nullptr);

/// Criterion route via the core of the center: requires the center to
/// be subdirectly indecomposable as a ring with core H; decides whether
/// rC meets H for every non-zero r. Exact over prime fields; over
/// infinite fields falls back to the annihilator route plus seeded
/// randomized falsification.
Verdict is_centrally_essential_central_core(AlgebraPtr a, uint64_t seed = 1,
                                            size_t samples = 10000);

struct CeDecision {
    Verdict verdict;
    CeMethod method_used = CeMethod::Auto;
    std::string method_detail;
};

/// Runs the selected method; Auto tries the criterion routes first and
/// falls back to exhaustive enumeration over prime fields.
CeDecision decide_centrally_essential(AlgebraPtr a, CeMethod method, uint64_t seed = 1);

struct RegularityRecord {
    bool right_regular = false;   // r x != 0 for all x != 0
    bool left_regular = false;    // x r != 0 for all x != 0
    bool c_torsion_free = false;  // r c != 0 for all non-zero central c

    bool regular() const { return right_regular && left_regular; }
};

/// Kernel-based regularity data for a non-zero element.
RegularityRecord regularity_checks(AlgebraPtr a, const Vec& r);

struct SocleInCenterResult {
    bool contained = false;        // Soc(A_A) subset of C(A)
    bool theorem_violation = false;  // set when the preconditions held but containment failed
    Subspace socle;
    Subspace center;
};

/// Requires quotient_is_commutative and a True centrally essential
/// verdict (PreconditionFailed otherwise); under those hypotheses the
/// containment is a theorem, so a false return is flagged.
SocleInCenterResult socle_in_center_check(AlgebraPtr a, uint64_t seed = 1);

/// Central c with x c = a prescribed non-zero element of H, when one
/// exists (used to spot-check the central-core criterion's witnesses).
std::optional<Vec> central_multiple_into(AlgebraPtr a, const Subspace& c, const Subspace& h,
                                         const Vec& x);

}  // namespace cering

#endif

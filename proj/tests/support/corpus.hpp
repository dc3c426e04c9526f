#ifndef CERING_TESTS_CORPUS_HPP
#define CERING_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "cering/constructions.hpp"

namespace cering::tests {

/// Full matrix algebra M_m(F) with basis E11, E12, ..., Emm (row-major).
AlgebraPtr matrix_algebra(const FieldSpec& f, size_t m);

/// F[C_m], the cyclic group algebra.
AlgebraPtr cyclic_group_algebra(const FieldSpec& f, size_t m);

struct CorpusMember {
    std::string name;
    AlgebraPtr algebra;
};

/// The fixed reference family: exterior algebras n = 2, 3, 4 over GF(2)
/// and GF(3), the quaternion group algebra over GF(2), GF(3)[C2],
/// GF(2)[C4], and M2(GF(2)).
std::vector<CorpusMember> reference_corpus();

}  // namespace cering::tests

#endif

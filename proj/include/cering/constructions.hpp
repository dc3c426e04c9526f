#ifndef CERING_CONSTRUCTIONS_HPP
#define CERING_CONSTRUCTIONS_HPP

#include "cering/algebra.hpp"

namespace cering {

/// Exterior algebra on n generators: dimension 2^n, basis indexed by
/// index subsets in graded-lex order ("1", "e1", ..., "e1^e2", ...).
/// Products vanish on a repeated generator, otherwise merge with the
/// sign of the interleaving permutation. n is capped at 12.
AlgebraPtr exterior_algebra(const FieldSpec& f, size_t n);

/// Multiplication table of a finite group. Validated on construction:
/// identity, associativity, unique inverses.
struct CayleyTable {
    size_t order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<size_t>> product;  // product[i][j] = index of g_i g_j
    size_t identity = 0;

    void validate() const;  // throws InvalidGroupTable
};

/// The order-8 quaternion group in the element order
/// {e, a, a2, b, ab, a3, a2b, a3b}; relations a^4 = e, a^2 = b^2,
/// a b a^-1 = b^-1.
CayleyTable quaternion_group();

/// Cyclic group of order m with labels e, g, g2, ...
CayleyTable cyclic_group(size_t m);

/// Parses the Cayley file format: first line is the order m, then m
/// rows of m labels; row i column j is the label of g_i * g_j and the
/// first listed element must be the identity (so row 0 names the
/// elements in order).
CayleyTable cayley_from_text(const std::string& text);

/// Group algebra F[G]: basis the group elements, c_ijk = 1 iff
/// g_i g_j = g_k. Registers "Ghat" (and for the quaternion group
/// "Qhat") as the sum-of-group-elements shorthand.
AlgebraPtr group_algebra(const FieldSpec& f, const CayleyTable& g, std::string name = "");

}  // namespace cering

#endif

#ifndef CERING_ALGEBRA_HPP
#define CERING_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cering/linalg.hpp"

namespace cering {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

enum class Sidedness { Right, Left, TwoSided };

const char* sidedness_name(Sidedness s);

/// One structure constant: b_i * b_j contains c * b_k.
struct TableEntry {
    size_t i, j, k;
    Scalar c;
};

/// Finite-dimensional unital associative algebra presented by structure
/// constants: b_i * b_j = sum_k c_ijk b_k with only non-zero c_ijk
/// stored. Immutable once built.
class Algebra {
  public:
    using SparseRow = std::vector<std::pair<size_t, Scalar>>;

    Algebra(FieldSpec field, std::vector<std::string> labels, const std::vector<TableEntry>& table,
            Vec unit, std::string name);

    const FieldSpec& field() const { return field_; }
    size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::string& name() const { return name_; }
    const Vec& unit() const { return unit_; }

    /// b_i * b_j as a sparse coefficient list (empty when the product is 0).
    const SparseRow& basis_product(size_t i, size_t j) const;

    Vec basis_vector(size_t i) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec commutator(const Vec& a, const Vec& b) const { return vec_sub(multiply(a, b), multiply(b, a)); }

    /// Matrix of x -> v * x in the basis (columns are v * b_j).
    Mat left_mul_matrix(const Vec& v) const;
    /// Matrix of x -> x * v.
    Mat right_mul_matrix(const Vec& v) const;

    bool is_commutative() const;

    /// Extra element names resolvable in expressions (e.g. the group-sum
    /// shorthand of a group algebra).
    const std::map<std::string, Vec>& named_elements() const { return named_; }
    void add_named_element(const std::string& name, Vec v) { named_[name] = std::move(v); }

    std::string format_element(const Vec& v) const;

  private:
    FieldSpec field_;
    size_t dim_;
    std::vector<std::string> labels_;
    std::map<uint64_t, SparseRow> table_;  // key (i << 32) | j; absent key = zero product
    Vec unit_;
    std::string name_;
    std::map<std::string, Vec> named_;
};

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> labels,
                        const std::vector<TableEntry>& table, Vec unit, std::string name);

/// Element of a specific algebra; arithmetic checks algebra identity.
struct Element {
    AlgebraPtr alg;
    Vec coeffs;

    Element() = default;
    Element(AlgebraPtr a, Vec c);

    bool is_zero() const { return vec_is_zero(coeffs); }
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element commutator(const Element& o) const;
    bool operator==(const Element& o) const;
    std::string to_string() const { return alg->format_element(coeffs); }
};

/// Associativity/unit diagnostic over all basis triples.
struct CheckReport {
    bool associative = true;
    bool unital = true;
    std::vector<std::array<size_t, 3>> assoc_violations;
    std::vector<size_t> unit_violations;

    bool ok() const { return associative && unital; }
};

CheckReport check_algebra(const Algebra& a);

/// Linear subspace of an algebra in reduced row echelon form: pivots 1,
/// entries above/below pivots cleared, pivot columns increasing. The
/// representation is canonical, so equality is structural.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(AlgebraPtr a);
    static Subspace full(AlgebraPtr a);
    static Subspace span(AlgebraPtr a, Mat vectors);

    const AlgebraPtr& algebra() const { return alg_; }
    size_t dim() const { return rows_.size(); }
    size_t ambient_dim() const;
    bool is_zero() const { return rows_.empty(); }
    const Mat& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the echelon basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

  private:
    void check_compatible(const Subspace& other) const;

    AlgebraPtr alg_;
    Mat rows_;
    std::vector<size_t> pivots_;
};

struct Ideal {
    Subspace space;
    Sidedness side = Sidedness::TwoSided;
};

/// True if U is closed under the stated one- or two-sided multiplication
/// by every basis element.
bool is_ideal(const Subspace& u, Sidedness side);

/// Smallest ideal of the given side containing the generators, by
/// closing the span under basis multiplication until the dimension
/// stabilizes.
Ideal ideal_generated_by(AlgebraPtr a, const Mat& generators, Sidedness side);

/// Quotient by a proper two-sided ideal. Coset representatives are the
/// standard basis vectors at the non-pivot columns of the ideal's
/// echelon matrix, in increasing index order.
struct QuotientResult {
    AlgebraPtr algebra;
    std::vector<size_t> rep_indices;  // index into the parent basis

    Vec project(const Vec& v) const;  // parent coords -> quotient coords
    Vec lift(const Vec& q) const;     // quotient coords -> canonical representative

    AlgebraPtr parent;
    Subspace ideal;
};

QuotientResult quotient(AlgebraPtr a, const Ideal& ideal);

/// A multiplicatively closed unital subspace as an algebra in its own
/// right, with the row basis of `u` as its basis.
struct SubalgebraResult {
    AlgebraPtr algebra;
    AlgebraPtr parent;
    Mat basis;  // rows in parent coordinates

    Vec embed(const Vec& sub_coords) const;  // subalgebra -> parent
    /// Pushes a subspace of the subalgebra forward into the parent.
    Subspace embed_subspace(const Subspace& s) const;
};

SubalgebraResult subalgebra(AlgebraPtr a, const Subspace& u);

/// Parses an element expression: basis labels (which may contain '^'),
/// named elements, integers/fractions, '+', '-', '*', parentheses.
Vec parse_element(const Algebra& a, const std::string& text);

}  // namespace cering

#endif

#ifndef CERING_BIVAR_HPP
#define CERING_BIVAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cering/error.hpp"

namespace cering {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exponent pair (i, j) for x^i y^j.
struct Monomial2 {
    int32_t x = 0;
    int32_t y = 0;

    int32_t total() const { return x + y; }
    bool operator==(const Monomial2&) const = default;
};

/// Graded-lexicographic order, x before y: compare total degree, then
/// x-exponent. Used for leading terms and for canonical normalization.
struct GradedLex {
    bool operator()(const Monomial2& a, const Monomial2& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.x < b.x;
    }
};

/// Sparse polynomial in Q[x, y]. Zero coefficients are never stored;
/// the zero polynomial has an empty term map.
class BivarPoly {
  public:
    using TermMap = std::map<Monomial2, BigRational, GradedLex>;

    BivarPoly() = default;
    explicit BivarPoly(const BigRational& c);
    static BivarPoly variable(char v, int32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    int32_t total_degree() const;  // -1 for the zero polynomial
    int32_t degree_x() const;
    int32_t degree_y() const;

    /// Largest term under graded-lex. Polynomial must be non-zero.
    const std::pair<const Monomial2, BigRational>& leading_term() const;

    void set_coeff(const Monomial2& m, const BigRational& c);
    const BigRational* coeff(const Monomial2& m) const;

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator-() const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly scaled(const BigRational& c) const;
    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

    BivarPoly derivative(char v) const;

    /// Exact division; throws Internal if `d` does not divide this
    /// polynomial (callers only divide by known factors).
    BivarPoly divide_exact(const BivarPoly& d) const;

    std::string to_string() const;

  private:
    TermMap terms_;
};

/// GCD in Q[x, y], computed by a content/primitive-part recursion with
/// the polynomials viewed as univariate in x over Q[y]. Result is
/// normalized to leading coefficient 1 under graded-lex; gcd(0, 0) = 0.
BivarPoly poly_gcd(const BivarPoly& a, const BivarPoly& b);

/// Element of Q(x, y) in canonical form: gcd(num, den) = 1, den != 0,
/// den monic under graded-lex. Equality is structural.
class RatFun {
  public:
    RatFun() : num_(), den_(BigRational(1)) {}
    explicit RatFun(const BigRational& c) : num_(BivarPoly(c)), den_(BigRational(1)) {}
    RatFun(BivarPoly num, BivarPoly den);

    static RatFun variable(char v) { return RatFun(BivarPoly::variable(v), BivarPoly(BigRational(1))); }

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator-() const;
    RatFun operator*(const RatFun& o) const;
    RatFun inverse() const;  // throws DivisionByZero on zero
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Quotient-rule partial derivative, canonical form. v is 'x' or 'y'.
    RatFun derivative(char v) const;

    std::string to_string() const;

  private:
    void normalize();

    BivarPoly num_;
    BivarPoly den_;
};

}  // namespace cering

#endif

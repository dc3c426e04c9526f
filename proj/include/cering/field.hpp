#ifndef CERING_FIELD_HPP
#define CERING_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "cering/bivar.hpp"
#include "cering/error.hpp"

namespace cering {

enum class FieldKind {
    PrimeField,         // GF(p), machine-word p
    Rationals,          // Q, arbitrary precision
    RationalFunctions,  // Q(x, y)
};

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    int64_t p = 0;  // prime modulus, PrimeField only

    static FieldSpec prime(int64_t p);
    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec rational_functions() { return {FieldKind::RationalFunctions, 0}; }

    bool is_finite() const { return kind == FieldKind::PrimeField; }
    bool operator==(const FieldSpec&) const = default;

    std::string name() const;
    /// Accepts "gf<p>", "q"/"qq"/"rationals", "qxy"/"rational-functions-2var".
    static FieldSpec from_name(const std::string& name);
};

/// An exact field element tagged with its field. Values are canonical:
/// GF(p) residues in [0, p), rationals reduced with positive denominator,
/// rational functions per RatFun. Immutable in practice; every
/// operation returns a fresh value.
class Scalar {
  public:
    Scalar() : spec_(FieldSpec::rationals()), v_(BigRational(0)) {}
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, int64_t n);
    static Scalar from_rational(const FieldSpec& f, const BigRational& q);
    static Scalar from_ratfun(RatFun r);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// GF(p) residue / rational / rational function accessors; each
    /// throws unless the scalar has the matching kind.
    int64_t residue() const;
    const BigRational& rational() const;
    const RatFun& ratfun() const;

    std::string to_string() const;

  private:
    Scalar(FieldSpec spec, std::variant<int64_t, BigRational, RatFun> v)
        : spec_(spec), v_(std::move(v)) {}
    void check_same(const Scalar& o) const;

    FieldSpec spec_;
    std::variant<int64_t, BigRational, RatFun> v_;
};

/// Parses the textual scalar syntax: integers, fractions "a/b", and (for
/// the rational-function field) polynomial expressions in x and y built
/// from "+", "-", "*", "^", "/" and parentheses.
Scalar parse_scalar(const FieldSpec& f, const std::string& text);

}  // namespace cering

#endif

#include "cering/field.hpp"

#include <cctype>

namespace cering {

namespace {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_norm(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// extended Euclid; a in [1, p)
int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_norm(t, p);
}

}  // namespace

FieldSpec FieldSpec::prime(int64_t p) {
    if (p >= (int64_t(1) << 31))
        throw Error(ErrorCode::UnsupportedField, "prime modulus exceeds machine-word cap");
    if (!is_prime(p))
        throw Error(ErrorCode::UnsupportedField, "modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
    switch (kind) {
        case FieldKind::PrimeField: return "gf" + std::to_string(p);
        case FieldKind::Rationals: return "q";
        case FieldKind::RationalFunctions: return "qxy";
    }
    return "?";
}

FieldSpec FieldSpec::from_name(const std::string& name) {
    if (name == "q" || name == "qq" || name == "rationals") return rationals();
    if (name == "qxy" || name == "rational-functions-2var") return rational_functions();
    if (name.size() > 2 && name.substr(0, 2) == "gf") {
        try {
            return prime(std::stoll(name.substr(2)));
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, "bad field '" + name + "': " + e.what());
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw Error(ErrorCode::ParseError, "unknown field: " + name);
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, int64_t n) {
    switch (f.kind) {
        case FieldKind::PrimeField: return Scalar(f, mod_norm(n, f.p));
        case FieldKind::Rationals: return Scalar(f, BigRational(n));
        case FieldKind::RationalFunctions: return Scalar(f, RatFun(BigRational(n)));
    }
    throw Error(ErrorCode::Internal, "bad field kind");
}

Scalar Scalar::from_rational(const FieldSpec& f, const BigRational& q) {
    switch (f.kind) {
        case FieldKind::PrimeField: {
            BigInt num = boost::multiprecision::numerator(q);
            BigInt den = boost::multiprecision::denominator(q);
            int64_t n = static_cast<int64_t>(num % f.p);
            int64_t d = static_cast<int64_t>(den % f.p);
            if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by p");
            return Scalar(f, mod_norm(mod_norm(n, f.p) * mod_inverse(mod_norm(d, f.p), f.p), f.p));
        }
        case FieldKind::Rationals: return Scalar(f, q);
        case FieldKind::RationalFunctions: return Scalar(f, RatFun(q));
    }
    throw Error(ErrorCode::Internal, "bad field kind");
}

Scalar Scalar::from_ratfun(RatFun r) {
    return Scalar(FieldSpec::rational_functions(), std::move(r));
}

bool Scalar::is_zero() const {
    switch (spec_.kind) {
        case FieldKind::PrimeField: return std::get<int64_t>(v_) == 0;
        case FieldKind::Rationals: return std::get<BigRational>(v_) == 0;
        case FieldKind::RationalFunctions: return std::get<RatFun>(v_).is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == Scalar::one(spec_); }

void Scalar::check_same(const Scalar& o) const {
    if (!(spec_ == o.spec_))
        throw Error(ErrorCode::FieldMismatch,
                    "mixed fields: " + spec_.name() + " vs " + o.spec_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    switch (spec_.kind) {
        case FieldKind::PrimeField:
            return Scalar(spec_, mod_norm(std::get<int64_t>(v_) + std::get<int64_t>(o.v_), spec_.p));
        case FieldKind::Rationals:
            return Scalar(spec_, std::get<BigRational>(v_) + std::get<BigRational>(o.v_));
        case FieldKind::RationalFunctions:
            return Scalar(spec_, std::get<RatFun>(v_) + std::get<RatFun>(o.v_));
    }
    throw Error(ErrorCode::Internal, "bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    switch (spec_.kind) {
        case FieldKind::PrimeField:
            return Scalar(spec_, mod_norm(std::get<int64_t>(v_) * std::get<int64_t>(o.v_), spec_.p));
        case FieldKind::Rationals:
            return Scalar(spec_, std::get<BigRational>(v_) * std::get<BigRational>(o.v_));
        case FieldKind::RationalFunctions:
            return Scalar(spec_, std::get<RatFun>(v_) * std::get<RatFun>(o.v_));
    }
    throw Error(ErrorCode::Internal, "bad field kind");
}

Scalar Scalar::operator-() const {
    switch (spec_.kind) {
        case FieldKind::PrimeField:
            return Scalar(spec_, mod_norm(-std::get<int64_t>(v_), spec_.p));
        case FieldKind::Rationals:
            return Scalar(spec_, -std::get<BigRational>(v_));
        case FieldKind::RationalFunctions:
            return Scalar(spec_, -std::get<RatFun>(v_));
    }
    throw Error(ErrorCode::Internal, "bad field kind");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    switch (spec_.kind) {
        case FieldKind::PrimeField:
            return Scalar(spec_, mod_inverse(std::get<int64_t>(v_), spec_.p));
        case FieldKind::Rationals:
            return Scalar(spec_, BigRational(1) / std::get<BigRational>(v_));
        case FieldKind::RationalFunctions:
            return Scalar(spec_, std::get<RatFun>(v_).inverse());
    }
    throw Error(ErrorCode::Internal, "bad field kind");
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(spec_ == o.spec_)) return false;
    return v_ == o.v_;
}

int64_t Scalar::residue() const {
    if (spec_.kind != FieldKind::PrimeField)
        throw Error(ErrorCode::FieldMismatch, "not a prime-field scalar");
    return std::get<int64_t>(v_);
}

const BigRational& Scalar::rational() const {
    if (spec_.kind != FieldKind::Rationals)
        throw Error(ErrorCode::FieldMismatch, "not a rational scalar");
    return std::get<BigRational>(v_);
}

const RatFun& Scalar::ratfun() const {
    if (spec_.kind != FieldKind::RationalFunctions)
        throw Error(ErrorCode::FieldMismatch, "not a rational-function scalar");
    return std::get<RatFun>(v_);
}

std::string Scalar::to_string() const {
    switch (spec_.kind) {
        case FieldKind::PrimeField: return std::to_string(std::get<int64_t>(v_));
        case FieldKind::Rationals: return std::get<BigRational>(v_).str();
        case FieldKind::RationalFunctions: return std::get<RatFun>(v_).to_string();
    }
    return "?";
}

/* Scalar expression parser
 * ============================================================
 * expr   := term (('+'|'-') term)*
 * term   := factor (('*'|'/') factor)*
 * factor := ('-')* atom ('^' uint)*
 * atom   := uint | 'x' | 'y' | '(' expr ')'
 * Evaluated in Q(x, y), then lowered to the requested field; variables
 * are rejected outside the rational-function field, and lowering to
 * GF(p) rejects denominators divisible by p.
 */

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error(ErrorCode::ParseError,
                    "scalar '" + s + "': " + why + " at offset " + std::to_string(pos));
    }

    RatFun parse_expr() {
        RatFun v = parse_term();
        while (true) {
            if (eat('+')) v = v + parse_term();
            else if (eat('-')) v = v - parse_term();
            else return v;
        }
    }

    RatFun parse_term() {
        RatFun v = parse_factor();
        while (true) {
            if (eat('*')) v = v * parse_factor();
            else if (eat('/')) v = v * parse_factor().inverse();
            else return v;
        }
    }

    RatFun parse_factor() {
        bool neg = false;
        while (eat('-')) neg = !neg;
        RatFun v = parse_atom();
        while (eat('^')) {
            int64_t e = parse_uint();
            RatFun base = v;
            v = RatFun(BigRational(1));
            for (int64_t i = 0; i < e; i++) v = v * base;
        }
        return neg ? -v : v;
    }

    RatFun parse_atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFun v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x' || c == 'y') {
            pos++;
            return RatFun::variable(c);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(BigRational(parse_biguint()));
        fail("expected number, variable or '('");
    }

    int64_t parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (int64_t(1) << 40)) fail("exponent too large");
            pos++;
        }
        return v;
    }

    BigInt parse_biguint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
        if (start == pos) fail("expected integer");
        return BigInt(s.substr(start, pos - start));
    }
};

}  // namespace

Scalar parse_scalar(const FieldSpec& f, const std::string& text) {
    ScalarParser p(text);
    RatFun v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");

    if (f.kind == FieldKind::RationalFunctions) return Scalar::from_ratfun(std::move(v));
    if (!v.is_constant())
        throw Error(ErrorCode::ParseError,
                    "scalar '" + text + "': variables not allowed over " + f.name());
    const BigRational* nc = v.num().coeff(Monomial2{0, 0});
    const BigRational* dc = v.den().coeff(Monomial2{0, 0});
    BigRational q = (nc ? *nc : BigRational(0)) / (dc ? *dc : BigRational(1));
    return Scalar::from_rational(f, q);
}

}  // namespace cering

#include "cering/bivar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cering {

BivarPoly::BivarPoly(const BigRational& c) {
    if (c != 0) terms_[Monomial2{0, 0}] = c;
}

BivarPoly BivarPoly::variable(char v, int32_t exp) {
    BivarPoly p;
    if (exp < 0) throw Error(ErrorCode::Internal, "negative exponent");
    Monomial2 m;
    if (v == 'x') m.x = exp;
    else if (v == 'y') m.y = exp;
    else throw Error(ErrorCode::ParseError, std::string("unknown variable: ") + v);
    p.terms_[m] = 1;
    return p;
}

bool BivarPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial2{0, 0};
}

int32_t BivarPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

int32_t BivarPoly::degree_x() const {
    int32_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

int32_t BivarPoly::degree_y() const {
    int32_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
}

const std::pair<const Monomial2, BigRational>& BivarPoly::leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
    return *terms_.rbegin();
}

void BivarPoly::set_coeff(const Monomial2& m, const BigRational& c) {
    if (c == 0) terms_.erase(m);
    else terms_[m] = c;
}

const BigRational* BivarPoly::coeff(const Monomial2& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial2 m{ma.x + mb.x, ma.y + mb.y};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                BigRational c = ca * cb;
                if (c != 0) r.terms_[m] = std::move(c);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BivarPoly BivarPoly::scaled(const BigRational& c) const {
    BivarPoly r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

BivarPoly BivarPoly::derivative(char v) const {
    BivarPoly r;
    for (const auto& [m, c] : terms_) {
        if (v == 'x') {
            if (m.x > 0) r.terms_[Monomial2{m.x - 1, m.y}] = c * m.x;
        } else {
            if (m.y > 0) r.terms_[Monomial2{m.x, m.y - 1}] = c * m.y;
        }
    }
    return r;
}

BivarPoly BivarPoly::divide_exact(const BivarPoly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    BivarPoly q;
    BivarPoly rem = *this;
    const auto& [dm, dc] = d.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (rm.x < dm.x || rm.y < dm.y)
            throw Error(ErrorCode::Internal, "inexact polynomial division");
        Monomial2 qm{rm.x - dm.x, rm.y - dm.y};
        BigRational qc = rc / dc;
        BivarPoly t;
        t.terms_[qm] = qc;
        q = q + t;
        rem = rem - d * t;
    }
    return q;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigRational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.x > 0 || m.y > 0;
        if (a != 1 || !has_vars) {
            out << a.str();
            if (has_vars) out << "*";
        }
        if (m.x > 0) {
            out << "x";
            if (m.x > 1) out << "^" << m.x;
            if (m.y > 0) out << "*";
        }
        if (m.y > 0) {
            out << "y";
            if (m.y > 1) out << "^" << m.y;
        }
    }
    return out.str();
}

/* GCD in Q[x, y]
 * ============================================================
 * Polynomials are handled as univariate in x with coefficients in
 * Q[y]. Both layers run primitive pseudo-remainder sequences over the
 * integers (inputs are scaled integral first), which keeps coefficient
 * growth polynomial; rational Euclid blows up on the sizes the
 * rational-function arithmetic produces.
 */

namespace {

// Univariate polynomial in y, dense, coefficient of y^i at index i.
// Values are rationals, but the gcd kernels keep them integral.
using UniPoly = std::vector<BigRational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// scales to integer coefficients, divides by their gcd, makes the
// leading coefficient positive
UniPoly uni_primitive(UniPoly p) {
    uni_trim(p);
    if (p.empty()) return p;
    BigInt l = 1;
    for (const auto& c : p) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    BigInt g = 0;
    std::vector<BigInt> ints(p.size());
    for (size_t i = 0; i < p.size(); i++) {
        ints[i] = boost::multiprecision::numerator(BigRational(p[i] * l));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    if (ints.back() < 0) g = -g;
    for (size_t i = 0; i < p.size(); i++) p[i] = BigRational(ints[i] / g);
    return p;
}

// pseudo-remainder: prem(a, b) with integer coefficients in, integer out
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigRational alead = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= b.back();
        for (size_t i = 0; i < b.size(); i++) a[shift + i] -= alead * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_divexact(UniPoly a, const UniPoly& b) {
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        BigRational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); i++) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    if (!a.empty()) throw Error(ErrorCode::Internal, "inexact univariate division");
    uni_trim(q);
    return q;
}

// primitive integer gcd in Q[y] (positive leading coefficient)
UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_primitive(std::move(a));
    b = uni_primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        UniPoly r = uni_primitive(uni_prem(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// View of p in Q[x, y] as a vector of Q[y] coefficients, index = x-degree.
std::vector<UniPoly> to_x_coeffs(const BivarPoly& p) {
    std::vector<UniPoly> cs(static_cast<size_t>(std::max(p.degree_x(), -1) + 1));
    for (const auto& [m, c] : p.terms()) {
        auto& u = cs[static_cast<size_t>(m.x)];
        if (u.size() <= static_cast<size_t>(m.y)) u.resize(static_cast<size_t>(m.y) + 1);
        u[static_cast<size_t>(m.y)] = c;
    }
    for (auto& u : cs) uni_trim(u);
    return cs;
}

BivarPoly from_x_coeffs(const std::vector<UniPoly>& cs) {
    BivarPoly p;
    for (size_t i = 0; i < cs.size(); i++)
        for (size_t j = 0; j < cs[i].size(); j++)
            if (cs[i][j] != 0) p.set_coeff(Monomial2{(int32_t)i, (int32_t)j}, cs[i][j]);
    return p;
}

BivarPoly embed_y(const UniPoly& u) {
    BivarPoly p;
    for (size_t j = 0; j < u.size(); j++)
        if (u[j] != 0) p.set_coeff(Monomial2{0, (int32_t)j}, u[j]);
    return p;
}

// content of p w.r.t. x: monic gcd over Q[y] of the x-coefficients
UniPoly content_x(const BivarPoly& p) {
    UniPoly g;
    for (const auto& u : to_x_coeffs(p)) g = uni_gcd(g, u);
    return g;
}

BivarPoly primitive_part_x(const BivarPoly& p, const UniPoly& content) {
    if (p.is_zero()) return p;
    auto cs = to_x_coeffs(p);
    for (auto& u : cs) u = uni_divexact(u, content);
    return from_x_coeffs(cs);
}

// strips the common integer factor of all (integer) coefficients
BivarPoly strip_int_content(const BivarPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = 0;
    for (const auto& [m, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
        if (g == 1) return p;
    }
    return p.scaled(BigRational(BigInt(1), g));
}

// pseudo-remainder of a by b w.r.t. x, with integer content stripped
// after each elimination step to tame coefficient growth
BivarPoly pseudo_rem_x(BivarPoly a, const BivarPoly& b) {
    auto bc = to_x_coeffs(b);
    int32_t db = (int32_t)bc.size() - 1;
    const UniPoly& blead = bc.back();
    BivarPoly blead_p = embed_y(blead);
    while (!a.is_zero()) {
        auto ac = to_x_coeffs(a);
        int32_t da = (int32_t)ac.size() - 1;
        if (da < db) break;
        const UniPoly& alead = ac.back();
        // a <- blead * a - alead * x^(da-db) * b
        BivarPoly shift;
        shift.set_coeff(Monomial2{da - db, 0}, 1);
        a = strip_int_content(a * blead_p - embed_y(alead) * shift * b);
    }
    return a;
}

// evaluates at y = c, giving a univariate polynomial in x
UniPoly eval_y(const BivarPoly& p, int64_t c) {
    std::vector<BigRational> coeffs(static_cast<size_t>(p.degree_x() + 1));
    for (const auto& [m, coef] : p.terms()) {
        BigRational power(1);
        for (int32_t i = 0; i < m.y; i++) power *= c;
        coeffs[static_cast<size_t>(m.x)] += coef * power;
    }
    UniPoly u(coeffs.begin(), coeffs.end());
    uni_trim(u);
    return u;
}

// True when an evaluation y = c certifies that gcd(a, b) has x-degree 0.
// The evaluation must preserve both leading x-coefficients.
bool coprime_in_x_by_evaluation(const BivarPoly& a, const BivarPoly& b) {
    int32_t da = a.degree_x(), db = b.degree_x();
    if (da == 0 || db == 0) return false;  // handled by the content path anyway
    for (int64_t c : {1, -1, 2, -2, 3, 5}) {
        UniPoly ua = eval_y(a, c), ub = eval_y(b, c);
        if ((int32_t)ua.size() - 1 != da || (int32_t)ub.size() - 1 != db) continue;
        if (uni_gcd(ua, ub).size() == 1) return true;
    }
    return false;
}

}  // namespace

namespace {

// clears rational denominators so the PRS layers work integrally
BivarPoly scale_integral(const BivarPoly& p) {
    BigInt l = 1;
    for (const auto& [m, c] : p.terms())
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    return p.scaled(BigRational(l));
}

}  // namespace

BivarPoly poly_gcd(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() && b.is_zero()) return BivarPoly();
    BivarPoly g;
    if (a.is_zero()) g = b;
    else if (b.is_zero()) g = a;
    else {
        BivarPoly ia = scale_integral(a), ib = scale_integral(b);
        UniPoly ca = content_x(ia), cb = content_x(ib);
        BivarPoly pa = primitive_part_x(ia, ca);
        BivarPoly pb = primitive_part_x(ib, cb);
        if (pa.degree_x() < pb.degree_x()) std::swap(pa, pb);
        if (coprime_in_x_by_evaluation(pa, pb)) {
            // primitive parts are coprime; only the contents contribute
            g = embed_y(uni_gcd(ca, cb));
        } else {
            while (!pb.is_zero()) {
                BivarPoly r = pseudo_rem_x(pa, pb);
                pa = std::move(pb);
                if (r.is_zero()) {
                    pb = BivarPoly();
                } else {
                    pb = primitive_part_x(r, content_x(r));
                }
            }
            g = embed_y(uni_gcd(ca, cb)) * primitive_part_x(pa, content_x(pa));
        }
    }
    // normalize: leading coefficient 1 under graded-lex
    return g.scaled(BigRational(1) / g.leading_term().second);
}

/* Rational functions
 * ============================================================
 */

RatFun::RatFun(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = BivarPoly(BigRational(1));
        return;
    }
    BivarPoly g = poly_gcd(num_, den_);
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
    BigRational lead = den_.leading_term().second;
    if (lead != 1) {
        BigRational inv = BigRational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    // common-denominator split keeps the final gcd small
    BivarPoly g = poly_gcd(den_, o.den_);
    BivarPoly da = den_.divide_exact(g), db = o.den_.divide_exact(g);
    return RatFun(num_ * db + o.num_ * da, den_ * db);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
    // cross-reduce so the product is already in lowest terms
    BivarPoly g1 = poly_gcd(num_, o.den_);
    BivarPoly g2 = poly_gcd(o.num_, den_);
    return RatFun(num_.divide_exact(g1) * o.num_.divide_exact(g2),
                  den_.divide_exact(g2) * o.den_.divide_exact(g1));
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::derivative(char v) const {
    // (n/d)' = (n' d - n d') / d^2
    return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::string RatFun::to_string() const {
    if (den_.is_constant()) {
        if (num_.is_zero()) return "0";
        return num_.to_string();
    }
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace cering

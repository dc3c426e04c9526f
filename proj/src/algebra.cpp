#include "cering/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cering {

const char* sidedness_name(Sidedness s) {
    switch (s) {
        case Sidedness::Right: return "right";
        case Sidedness::Left: return "left";
        case Sidedness::TwoSided: return "two-sided";
    }
    return "?";
}

static uint64_t pair_key(size_t i, size_t j) {
    return (static_cast<uint64_t>(i) << 32) | static_cast<uint64_t>(j);
}

Algebra::Algebra(FieldSpec field, std::vector<std::string> labels,
                 const std::vector<TableEntry>& table, Vec unit, std::string name)
    : field_(field),
      dim_(labels.size()),
      labels_(std::move(labels)),
      unit_(std::move(unit)),
      name_(std::move(name)) {
    if (dim_ == 0) throw Error(ErrorCode::Internal, "zero-dimensional algebra");
    if (unit_.size() != dim_) throw Error(ErrorCode::Internal, "unit vector length mismatch");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != dim_) throw Error(ErrorCode::Internal, "basis labels not distinct");
    for (const auto& e : table) {
        if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
            throw Error(ErrorCode::Internal, "table index out of range");
        if (e.c.is_zero()) continue;
        if (!(e.c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "table coefficient field");
        table_[pair_key(e.i, e.j)].emplace_back(e.k, e.c);
    }
    // merge duplicate (i, j, k) entries and drop resulting zeros
    for (auto& [key, row] : table_) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow merged;
        for (auto& [k, c] : row) {
            if (!merged.empty() && merged.back().first == k) {
                merged.back().second = merged.back().second + c;
            } else {
                merged.emplace_back(k, c);
            }
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& t) { return t.second.is_zero(); }),
                     merged.end());
        row = std::move(merged);
    }
}

const Algebra::SparseRow& Algebra::basis_product(size_t i, size_t j) const {
    static const SparseRow empty;
    auto it = table_.find(pair_key(i, j));
    return it == table_.end() ? empty : it->second;
}

Vec Algebra::basis_vector(size_t i) const {
    Vec v = zero_vec(field_, dim_);
    v[i] = Scalar::one(field_);
    return v;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    Vec r = zero_vec(field_, dim_);
    for (size_t i = 0; i < dim_; i++) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; j++) {
            if (b[j].is_zero()) continue;
            Scalar f = a[i] * b[j];
            for (const auto& [k, c] : basis_product(i, j)) r[k] = r[k] + f * c;
        }
    }
    return r;
}

Mat Algebra::left_mul_matrix(const Vec& v) const {
    Mat m(dim_, zero_vec(field_, dim_));
    for (size_t j = 0; j < dim_; j++) {
        Vec col = multiply(v, basis_vector(j));
        for (size_t i = 0; i < dim_; i++) m[i][j] = col[i];
    }
    return m;
}

Mat Algebra::right_mul_matrix(const Vec& v) const {
    Mat m(dim_, zero_vec(field_, dim_));
    for (size_t j = 0; j < dim_; j++) {
        Vec col = multiply(basis_vector(j), v);
        for (size_t i = 0; i < dim_; i++) m[i][j] = col[i];
    }
    return m;
}

bool Algebra::is_commutative() const {
    for (size_t i = 0; i < dim_; i++)
        for (size_t j = i + 1; j < dim_; j++) {
            Vec ij = zero_vec(field_, dim_), ji = zero_vec(field_, dim_);
            for (const auto& [k, c] : basis_product(i, j)) ij[k] = ij[k] + c;
            for (const auto& [k, c] : basis_product(j, i)) ji[k] = ji[k] + c;
            if (!(ij == ji)) return false;
        }
    return true;
}

std::string Algebra::format_element(const Vec& v) const {
    std::string out;
    for (size_t i = 0; i < dim_; i++) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (out.empty()) {
            if (neg) { out += "-"; c = c.substr(1); }
        } else {
            out += neg ? "-" : "+";
            if (neg) c = c.substr(1);
        }
        bool needs_paren = c.find('+') != std::string::npos || c.find('-') != std::string::npos;
        if (c == "1") {
            out += labels_[i];
        } else if (needs_paren) {
            out += "(" + c + ")*" + labels_[i];
        } else {
            out += c + "*" + labels_[i];
        }
    }
    return out.empty() ? "0" : out;
}

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> labels,
                        const std::vector<TableEntry>& table, Vec unit, std::string name) {
    return std::make_shared<Algebra>(field, std::move(labels), table, std::move(unit),
                                     std::move(name));
}

/* Elements
 * ============================================================
 */

Element::Element(AlgebraPtr a, Vec c) : alg(std::move(a)), coeffs(std::move(c)) {
    if (coeffs.size() != alg->dim())
        throw Error(ErrorCode::Internal, "element coefficient length mismatch");
}

static void check_same_algebra(const Element& a, const Element& b) {
    if (a.alg.get() != b.alg.get())
        throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
}

Element Element::operator+(const Element& o) const {
    check_same_algebra(*this, o);
    return Element(alg, vec_add(coeffs, o.coeffs));
}

Element Element::operator-(const Element& o) const {
    check_same_algebra(*this, o);
    return Element(alg, vec_sub(coeffs, o.coeffs));
}

Element Element::operator*(const Element& o) const {
    check_same_algebra(*this, o);
    return Element(alg, alg->multiply(coeffs, o.coeffs));
}

Element Element::commutator(const Element& o) const {
    check_same_algebra(*this, o);
    return Element(alg, alg->commutator(coeffs, o.coeffs));
}

bool Element::operator==(const Element& o) const {
    return alg.get() == o.alg.get() && coeffs == o.coeffs;
}

/* Structure checks
 * ============================================================
 */

CheckReport check_algebra(const Algebra& a) {
    CheckReport rep;
    size_t n = a.dim();
    const FieldSpec& f = a.field();
    for (size_t i = 0; i < n; i++) {
        Vec bi = a.basis_vector(i);
        Vec left = a.multiply(a.unit(), bi);
        Vec right = a.multiply(bi, a.unit());
        if (!(left == bi) || !(right == bi)) {
            rep.unital = false;
            rep.unit_violations.push_back(i);
        }
    }
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            const auto& ij = a.basis_product(i, j);
            for (size_t k = 0; k < n; k++) {
                // (b_i b_j) b_k vs b_i (b_j b_k), accumulated sparsely
                Vec lhs = zero_vec(f, n);
                for (const auto& [s, c] : ij)
                    for (const auto& [t, d] : a.basis_product(s, k)) lhs[t] = lhs[t] + c * d;
                Vec rhs = zero_vec(f, n);
                for (const auto& [s, c] : a.basis_product(j, k))
                    for (const auto& [t, d] : a.basis_product(i, s)) rhs[t] = rhs[t] + c * d;
                if (!(lhs == rhs)) {
                    rep.associative = false;
                    rep.assoc_violations.push_back({i, j, k});
                }
            }
        }
    return rep;
}

/* Subspaces
 * ============================================================
 */

Subspace Subspace::zero(AlgebraPtr a) {
    Subspace s;
    s.alg_ = std::move(a);
    return s;
}

Subspace Subspace::full(AlgebraPtr a) {
    Mat rows;
    for (size_t i = 0; i < a->dim(); i++) rows.push_back(a->basis_vector(i));
    return span(std::move(a), std::move(rows));
}

Subspace Subspace::span(AlgebraPtr a, Mat vectors) {
    Subspace s;
    s.alg_ = std::move(a);
    for (const auto& v : vectors)
        if (v.size() != s.alg_->dim())
            throw Error(ErrorCode::Internal, "spanning vector length mismatch");
    s.rows_ = std::move(vectors);
    s.pivots_ = rref(s.rows_);
    return s;
}

size_t Subspace::ambient_dim() const { return alg_ ? alg_->dim() : 0; }

void Subspace::check_compatible(const Subspace& other) const {
    if (alg_.get() != other.alg_.get())
        throw Error(ErrorCode::AlgebraMismatch, "subspaces of different algebras");
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce_row(rows_, pivots_, v));
}

bool Subspace::contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!vec_is_zero(reduce_row(rows_, pivots_, v))) return std::nullopt;
    Vec c;
    c.reserve(rows_.size());
    for (size_t p : pivots_) c.push_back(v[p]);  // reduced form: rows[i][pivots[j]] = delta_ij
    return c;
}

Subspace Subspace::sum(const Subspace& other) const {
    check_compatible(other);
    Mat rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return span(alg_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    check_compatible(other);
    if (is_zero() || other.is_zero()) return zero(alg_);
    // Zassenhaus: rows [u | u] and [v | 0]; after elimination, rows with
    // zero left half carry an intersection basis in the right half.
    size_t n = alg_->dim();
    const FieldSpec& f = alg_->field();
    Mat m;
    for (const auto& u : rows_) {
        Vec row = zero_vec(f, 2 * n);
        for (size_t i = 0; i < n; i++) { row[i] = u[i]; row[n + i] = u[i]; }
        m.push_back(std::move(row));
    }
    for (const auto& v : other.rows_) {
        Vec row = zero_vec(f, 2 * n);
        for (size_t i = 0; i < n; i++) row[i] = v[i];
        m.push_back(std::move(row));
    }
    rref(m);
    Mat inter;
    for (const auto& row : m) {
        bool left_zero = true;
        for (size_t i = 0; i < n && left_zero; i++) left_zero = row[i].is_zero();
        if (!left_zero) continue;
        Vec v(row.begin() + n, row.end());
        if (!vec_is_zero(v)) inter.push_back(std::move(v));
    }
    return span(alg_, std::move(inter));
}

bool Subspace::operator==(const Subspace& other) const {
    return alg_.get() == other.alg_.get() && rows_ == other.rows_;
}

/* Ideals
 * ============================================================
 */

bool is_ideal(const Subspace& u, Sidedness side) {
    const Algebra& a = *u.algebra();
    for (const auto& r : u.rows()) {
        for (size_t i = 0; i < a.dim(); i++) {
            Vec b = a.basis_vector(i);
            if (side != Sidedness::Left && !u.contains(a.multiply(r, b))) return false;
            if (side != Sidedness::Right && !u.contains(a.multiply(b, r))) return false;
        }
    }
    return true;
}

Ideal ideal_generated_by(AlgebraPtr a, const Mat& generators, Sidedness side) {
    Subspace cur = Subspace::span(a, generators);
    while (true) {
        Mat next = cur.rows();
        for (const auto& r : cur.rows()) {
            for (size_t i = 0; i < a->dim(); i++) {
                Vec b = a->basis_vector(i);
                if (side != Sidedness::Left) next.push_back(a->multiply(r, b));
                if (side != Sidedness::Right) next.push_back(a->multiply(b, r));
            }
        }
        Subspace grown = Subspace::span(a, std::move(next));
        if (grown.dim() == cur.dim()) break;
        cur = std::move(grown);
    }
    return Ideal{cur, side};
}

/* Quotients
 * ============================================================
 */

Vec QuotientResult::project(const Vec& v) const {
    Vec residual = reduce_row(ideal.rows(), ideal.pivots(), v);
    Vec q;
    q.reserve(rep_indices.size());
    for (size_t idx : rep_indices) q.push_back(residual[idx]);
    return q;
}

Vec QuotientResult::lift(const Vec& q) const {
    Vec v = zero_vec(parent->field(), parent->dim());
    for (size_t i = 0; i < rep_indices.size(); i++) v[rep_indices[i]] = q[i];
    return v;
}

QuotientResult quotient(AlgebraPtr a, const Ideal& ideal) {
    if (ideal.space.algebra().get() != a.get())
        throw Error(ErrorCode::AlgebraMismatch, "ideal of a different algebra");
    if (ideal.side != Sidedness::TwoSided || !is_ideal(ideal.space, Sidedness::TwoSided))
        throw Error(ErrorCode::NotTwoSided, "quotient requires a two-sided ideal");
    if (ideal.space.dim() == a->dim())
        throw Error(ErrorCode::ImproperIdeal, "quotient by the whole algebra");

    QuotientResult res;
    res.parent = a;
    res.ideal = ideal.space;
    std::vector<bool> pivot(a->dim(), false);
    for (size_t p : ideal.space.pivots()) pivot[p] = true;
    for (size_t i = 0; i < a->dim(); i++)
        if (!pivot[i]) res.rep_indices.push_back(i);

    size_t q = res.rep_indices.size();
    std::vector<std::string> labels;
    labels.reserve(q);
    for (size_t idx : res.rep_indices) labels.push_back(a->basis_labels()[idx]);

    std::vector<TableEntry> table;
    for (size_t u = 0; u < q; u++)
        for (size_t v = 0; v < q; v++) {
            Vec prod = a->multiply(a->basis_vector(res.rep_indices[u]),
                                   a->basis_vector(res.rep_indices[v]));
            Vec pq = res.project(prod);
            for (size_t k = 0; k < q; k++)
                if (!pq[k].is_zero()) table.push_back({u, v, k, pq[k]});
        }

    Vec unit = res.project(a->unit());
    std::string name = a->name() + "/I" + std::to_string(ideal.space.dim());
    auto qa = std::make_shared<Algebra>(a->field(), std::move(labels), table, std::move(unit),
                                        name);
    // carry named elements through when their projections stay non-zero
    for (const auto& [nm, vec] : a->named_elements()) {
        Vec pv = res.project(vec);
        if (!vec_is_zero(pv)) qa->add_named_element(nm, pv);
    }
    res.algebra = qa;
    return res;
}

/* Subalgebras
 * ============================================================
 */

Vec SubalgebraResult::embed(const Vec& sub_coords) const {
    Vec v = zero_vec(parent->field(), parent->dim());
    for (size_t i = 0; i < basis.size(); i++)
        if (!sub_coords[i].is_zero()) v = vec_add(v, vec_scale(basis[i], sub_coords[i]));
    return v;
}

Subspace SubalgebraResult::embed_subspace(const Subspace& s) const {
    Mat rows;
    for (const auto& r : s.rows()) rows.push_back(embed(r));
    return Subspace::span(parent, rows);
}

SubalgebraResult subalgebra(AlgebraPtr a, const Subspace& u) {
    if (u.algebra().get() != a.get())
        throw Error(ErrorCode::AlgebraMismatch, "subspace of a different algebra");
    auto unit_coords = u.coordinates(a->unit());
    if (!unit_coords)
        throw Error(ErrorCode::PreconditionFailed, "subalgebra must contain the unit");

    size_t m = u.dim();
    std::vector<TableEntry> table;
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) {
            Vec prod = a->multiply(u.rows()[i], u.rows()[j]);
            auto coords = u.coordinates(prod);
            if (!coords)
                throw Error(ErrorCode::PreconditionFailed,
                            "subspace is not multiplicatively closed");
            for (size_t k = 0; k < m; k++)
                if (!(*coords)[k].is_zero()) table.push_back({i, j, k, (*coords)[k]});
        }

    std::vector<std::string> labels;
    for (size_t i = 0; i < m; i++) {
        // reuse the parent label when the basis row is a standard basis vector
        const Vec& row = u.rows()[i];
        size_t nonzero = 0, where = 0;
        for (size_t k = 0; k < row.size(); k++)
            if (!row[k].is_zero()) { nonzero++; where = k; }
        if (nonzero == 1 && row[where].is_one()) labels.push_back(a->basis_labels()[where]);
        else labels.push_back("u" + std::to_string(i));
    }

    SubalgebraResult res;
    res.parent = a;
    res.basis = u.rows();
    res.algebra = make_algebra(a->field(), std::move(labels), table, *unit_coords,
                               a->name() + ".sub" + std::to_string(m));
    return res;
}

/* Element expressions
 * ============================================================
 * expr := term (('+'|'-') term)*, term := factor (('*'|'/') factor)*,
 * factor := ('-')* atom ('^' uint)*, atom := number | label | '(' expr ')'.
 * Labels may contain '^' between identifiers (wedge monomials), so a
 * caret chain of identifiers is first resolved as one label.
 */

namespace {

struct ElementParser {
    const Algebra& a;
    const std::string& s;
    size_t pos = 0;

    ElementParser(const Algebra& alg, const std::string& text) : a(alg), s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { pos++; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error(ErrorCode::ParseError,
                    "element '" + s + "': " + why + " at offset " + std::to_string(pos));
    }

    Vec scalar_times_unit(const Scalar& c) {
        return vec_scale(a.unit(), c);
    }

    // v must be c * unit for some scalar c
    std::optional<Scalar> as_scalar(const Vec& v) {
        size_t k = 0;
        while (k < v.size() && a.unit()[k].is_zero()) k++;
        Scalar c = v[k] / a.unit()[k];
        if (vec_is_zero(vec_sub(v, vec_scale(a.unit(), c)))) return c;
        return std::nullopt;
    }

    Vec parse_expr() {
        Vec v = parse_term();
        while (true) {
            if (eat('+')) v = vec_add(v, parse_term());
            else if (eat('-')) v = vec_sub(v, parse_term());
            else return v;
        }
    }

    Vec parse_term() {
        Vec v = parse_factor();
        while (true) {
            if (eat('*')) {
                v = a.multiply(v, parse_factor());
            } else if (eat('/')) {
                Vec d = parse_factor();
                auto c = as_scalar(d);
                if (!c || c->is_zero()) fail("can only divide by a non-zero scalar");
                v = vec_scale(v, c->inverse());
            } else {
                return v;
            }
        }
    }

    Vec parse_factor() {
        bool neg = false;
        while (eat('-')) neg = !neg;
        Vec v = parse_atom();
        while (true) {
            skip_ws();
            // '^' followed by a digit is a power; otherwise it belonged to a label
            if (pos < s.size() && s[pos] == '^' && pos + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                pos++;
                int64_t e = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    e = e * 10 + (s[pos] - '0');
                    if (e > 1024) fail("exponent too large");
                    pos++;
                }
                Vec base = v;
                v = a.unit();
                for (int64_t i = 0; i < e; i++) v = a.multiply(v, base);
            } else {
                break;
            }
        }
        if (neg) v = vec_sub(zero_vec(a.field(), a.dim()), v);
        return v;
    }

    std::string lex_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            pos++;
        return s.substr(start, pos - start);
    }

    Vec parse_atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Vec v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
            BigInt n(s.substr(start, pos - start));
            return scalar_times_unit(Scalar::from_rational(a.field(), BigRational(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // join ident ('^' ident)* into a label candidate
            std::string label = lex_ident();
            while (pos < s.size() && s[pos] == '^' && pos + 1 < s.size() &&
                   (std::isalpha(static_cast<unsigned char>(s[pos + 1])) || s[pos + 1] == '_')) {
                pos++;
                label += "^" + lex_ident();
            }
            const auto& labels = a.basis_labels();
            for (size_t i = 0; i < labels.size(); i++)
                if (labels[i] == label) return a.basis_vector(i);
            auto named = a.named_elements().find(label);
            if (named != a.named_elements().end()) return named->second;
            if (a.field().kind == FieldKind::RationalFunctions && (label == "x" || label == "y"))
                return scalar_times_unit(Scalar::from_ratfun(RatFun::variable(label[0])));
            fail("unknown basis label '" + label + "'");
        }
        fail("expected number, label or '('");
    }
};

}  // namespace

Vec parse_element(const Algebra& a, const std::string& text) {
    ElementParser p(a, text);
    Vec v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace cering

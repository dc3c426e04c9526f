#include "cering/structure.hpp"

#include <algorithm>

#include "cering/enumerate.hpp"

namespace cering {

/* Projective enumeration
 * ============================================================
 */

uint64_t projective_point_count(const FieldSpec& f, size_t n) {
    const uint64_t sat = uint64_t(1) << 63;
    if (f.kind != FieldKind::PrimeField) return sat;
    uint64_t q = static_cast<uint64_t>(f.p);
    // (q^n - 1) / (q - 1) = 1 + q + ... + q^(n-1), saturating
    uint64_t total = 0, power = 1;
    for (size_t i = 0; i < n; i++) {
        if (total > sat - power) return sat;
        total += power;
        if (power > sat / q) return i + 1 == n ? total : sat;
        power *= q;
    }
    return total;
}

EnumStats for_each_projective_point(const FieldSpec& f, size_t n, uint64_t cap,
                                    const std::function<bool(const Vec&)>& fn) {
    if (f.kind != FieldKind::PrimeField)
        throw Error(ErrorCode::UnsupportedField, "projective enumeration needs a prime field");
    EnumStats stats;
    int64_t q = f.p;
    std::vector<Scalar> units;  // non-zero field values 1..q-1
    for (int64_t v = 1; v < q; v++) units.push_back(Scalar::from_int(f, v));

    std::vector<size_t> support(n);
    for (size_t weight = 1; weight <= n; weight++) {
        // lex-first support set 0..weight-1
        for (size_t i = 0; i < weight; i++) support[i] = i;
        bool more_supports = true;
        while (more_supports) {
            // value odometer over the last weight-1 support positions
            std::vector<size_t> digits(weight - 1, 0);
            bool more_values = true;
            while (more_values) {
                Vec v = zero_vec(f, n);
                v[support[0]] = units[0];  // leading coordinate 1
                for (size_t i = 1; i < weight; i++) v[support[i]] = units[digits[i - 1]];
                stats.visited++;
                if (!fn(v)) {
                    stats.early_stop = true;
                    return stats;
                }
                if (stats.visited >= cap) return stats;  // completed stays false
                size_t d = digits.size();
                while (d > 0 && digits[d - 1] + 1 == units.size()) digits[--d] = 0;
                if (d == 0) more_values = false;
                else digits[d - 1]++;
            }
            // next support combination in lex order
            size_t i = weight;
            while (i > 0 && support[i - 1] == n - weight + (i - 1)) i--;
            if (i == 0) {
                more_supports = false;
            } else {
                support[i - 1]++;
                for (size_t k = i; k < weight; k++) support[k] = support[k - 1] + 1;
            }
        }
    }
    stats.completed = true;
    return stats;
}

// visits projective points of a subspace (ambient coordinates)
static EnumStats for_each_subspace_point(const Subspace& s, uint64_t cap,
                                         const std::function<bool(const Vec&)>& fn) {
    const AlgebraPtr& a = s.algebra();
    return for_each_projective_point(a->field(), s.dim(), cap, [&](const Vec& coords) {
        Vec v = zero_vec(a->field(), a->dim());
        for (size_t i = 0; i < coords.size(); i++)
            if (!coords[i].is_zero()) v = vec_add(v, vec_scale(s.rows()[i], coords[i]));
        return fn(v);
    });
}

/* Center
 * ============================================================
 */

Subspace center(AlgebraPtr a) {
    size_t n = a->dim();
    const FieldSpec& f = a->field();
    Mat conditions;
    conditions.reserve(n * n);
    for (size_t i = 0; i < n; i++) {
        Mat l = a->left_mul_matrix(a->basis_vector(i));
        Mat r = a->right_mul_matrix(a->basis_vector(i));
        for (size_t row = 0; row < n; row++) conditions.push_back(vec_sub(l[row], r[row]));
    }
    return Subspace::span(a, kernel(std::move(conditions), f, n));
}

/* Jacobson radical
 * ============================================================
 */

namespace {

// trace of left multiplication by each basis vector, via the sparse table
Vec basis_traces(const Algebra& a) {
    size_t n = a.dim();
    Vec t = zero_vec(a.field(), n);
    for (size_t k = 0; k < n; k++)
        for (size_t j = 0; j < n; j++)
            for (const auto& [idx, c] : a.basis_product(k, j))
                if (idx == j) t[k] = t[k] + c;
    return t;
}

// characteristic 0: radical of the trace form tr(L_xy)
Subspace dickson_radical(AlgebraPtr a) {
    size_t n = a->dim();
    const FieldSpec& f = a->field();
    Vec t = basis_traces(*a);
    Mat g(n, zero_vec(f, n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            for (const auto& [k, c] : a->basis_product(i, j)) g[i][j] = g[i][j] + c * t[k];
    return Subspace::span(a, kernel(std::move(g), f, n));
}

// characteristic p: descending chain cut out by the char-poly
// coefficients c_{p^j} of products, j = 0..floor(log_p n)
Subspace prime_field_radical(AlgebraPtr a) {
    size_t n = a->dim();
    const FieldSpec& f = a->field();
    int64_t p = f.p;

    std::vector<size_t> powers;
    for (uint64_t q = 1; q <= n; q *= static_cast<uint64_t>(p)) powers.push_back(q);

    Subspace cur = Subspace::full(a);
    for (size_t q : powers) {
        size_t m = cur.dim();
        if (m == 0) break;
        std::vector<Mat> lmats;
        lmats.reserve(m);
        for (const auto& row : cur.rows()) lmats.push_back(a->left_mul_matrix(row));
        // conditions[y][x] = c_q(L_x L_y); kernel over the x-coordinates
        Mat conditions(m, zero_vec(f, m));
        for (size_t y = 0; y < m; y++)
            for (size_t x = 0; x < m; x++) {
                Mat prod = mat_mul(lmats[x], lmats[y]);
                std::vector<Scalar> cp = charpoly(prod, f);
                conditions[y][x] = cp[n - q];  // coefficient of t^(n-q), sign immaterial
            }
        Mat coeff_kernel = kernel(std::move(conditions), f, m);
        Mat rows;
        for (const auto& coords : coeff_kernel) {
            Vec v = zero_vec(f, n);
            for (size_t i = 0; i < m; i++)
                if (!coords[i].is_zero()) v = vec_add(v, vec_scale(cur.rows()[i], coords[i]));
            rows.push_back(std::move(v));
        }
        cur = Subspace::span(a, std::move(rows));
    }
    return cur;
}

}  // namespace

Subspace jacobson_radical(AlgebraPtr a) {
    Subspace j;
    switch (a->field().kind) {
        case FieldKind::Rationals:
            j = dickson_radical(a);
            break;
        case FieldKind::PrimeField:
            j = prime_field_radical(a);
            break;
        case FieldKind::RationalFunctions:
            throw Error(ErrorCode::UnsupportedField,
                        "radical computation is not supported over Q(x, y)");
    }
    if (!is_ideal(j, Sidedness::TwoSided))
        throw Error(ErrorCode::Internal, "computed radical is not a two-sided ideal");
    nilpotence_index(j);  // throws if not nilpotent
    return j;
}

Subspace subspace_product(const Subspace& u, const Subspace& v) {
    const AlgebraPtr& a = u.algebra();
    if (a.get() != v.algebra().get())
        throw Error(ErrorCode::AlgebraMismatch, "subspace product across algebras");
    Mat rows;
    for (const auto& x : u.rows())
        for (const auto& y : v.rows()) rows.push_back(a->multiply(x, y));
    return Subspace::span(a, std::move(rows));
}

size_t nilpotence_index(const Subspace& j) {
    if (j.is_zero()) return 1;
    Subspace cur = j;
    size_t k = 1;
    while (!cur.is_zero()) {
        cur = subspace_product(j, cur);
        k++;
        if (k > j.ambient_dim() + 1)
            throw Error(ErrorCode::Internal, "subspace is not nilpotent");
    }
    return k;
}

/* Socles
 * ============================================================
 */

static Subspace annihilator(AlgebraPtr a, const Subspace& radical, bool right_factor) {
    if (radical.is_zero()) return Subspace::full(a);
    Mat conditions;
    for (const auto& j : radical.rows()) {
        // x * j = 0 is (right-mul by j) x = 0; j * x = 0 is (left-mul by j) x = 0
        Mat m = right_factor ? a->right_mul_matrix(j) : a->left_mul_matrix(j);
        for (auto& row : m) conditions.push_back(std::move(row));
    }
    return Subspace::span(a, kernel(std::move(conditions), a->field(), a->dim()));
}

Subspace socle_right(AlgebraPtr a, const Subspace& radical) {
    return annihilator(a, radical, /*right_factor=*/true);
}

Subspace socle_left(AlgebraPtr a, const Subspace& radical) {
    return annihilator(a, radical, /*right_factor=*/false);
}

Subspace socle_bimodule(AlgebraPtr a, const Subspace& radical) {
    return socle_right(a, radical).intersect(socle_left(a, radical));
}

/* Minimal ideals and cores
 * ============================================================
 */

namespace {

Subspace principal_ideal(AlgebraPtr a, const Vec& v, Sidedness side) {
    if (side == Sidedness::TwoSided) return ideal_generated_by(a, {v}, side).space;
    Mat rows;
    rows.reserve(a->dim());
    for (size_t i = 0; i < a->dim(); i++) {
        Vec b = a->basis_vector(i);
        rows.push_back(side == Sidedness::Right ? a->multiply(v, b) : a->multiply(b, v));
    }
    return Subspace::span(a, std::move(rows));
}

// distinct cyclic ideals generated by socle points, then the
// inclusion-minimal ones (= the simple submodules)
std::vector<Subspace> minimal_cyclic_ideals(AlgebraPtr a, const Subspace& socle,
                                            Sidedness side) {
    std::vector<Subspace> found;
    EnumStats stats = for_each_subspace_point(socle, kEnumerationCap, [&](const Vec& v) {
        Subspace ideal = principal_ideal(a, v, side);
        for (const auto& known : found)
            if (known == ideal) return true;
        found.push_back(std::move(ideal));
        return true;
    });
    if (!stats.completed)
        throw Error(ErrorCode::CapExceeded,
                    "projective enumeration over the socle exceeds the point cap");
    std::vector<Subspace> minimal;
    for (const auto& cand : found) {
        bool is_min = true;
        for (const auto& other : found)
            if (!(other == cand) && cand.contains(other)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(cand);
    }
    return minimal;
}

Verdict core_verdict(AlgebraPtr a, const Subspace& socle, Sidedness side) {
    if (socle.is_zero()) {
        // cannot happen for a non-zero Artinian algebra; kept as a guard
        return Verdict::unknown("socle is zero");
    }
    if (socle.dim() == 1) {
        Verdict v = Verdict::yes("1-dimensional socle is the least non-zero ideal");
        v.witness_space = socle;
        return v;
    }
    if (a->field().kind != FieldKind::PrimeField)
        return Verdict::unknown("socle dimension " + std::to_string(socle.dim()) +
                                " over an infinite field");
    std::vector<Subspace> minimal = minimal_cyclic_ideals(a, socle, side);
    if (minimal.size() == 1) {
        Verdict v = Verdict::yes("unique minimal ideal");
        v.witness_space = minimal[0];
        v.enumeration_complete = true;
        return v;
    }
    Verdict v = Verdict::no("two non-zero ideals meet in zero");
    v.witness_spaces = std::make_pair(minimal[0], minimal[1]);
    return v;
}

}  // namespace

std::vector<Ideal> minimal_right_ideals(AlgebraPtr a) {
    Subspace j = jacobson_radical(a);
    Subspace socle = socle_right(a, j);
    if (socle.dim() == 1) return {Ideal{socle, Sidedness::Right}};
    if (a->field().kind != FieldKind::PrimeField)
        throw Error(ErrorCode::InconclusiveOverInfiniteField,
                    "socle dimension > 1 over an infinite field");
    std::vector<Ideal> out;
    for (auto& s : minimal_cyclic_ideals(a, socle, Sidedness::Right))
        out.push_back(Ideal{std::move(s), Sidedness::Right});
    return out;
}

CoreTriple cores(AlgebraPtr a) {
    Subspace j = jacobson_radical(a);
    Subspace sr = socle_right(a, j);
    Subspace sl = socle_left(a, j);
    Subspace sb = sr.intersect(sl);
    CoreTriple t;
    t.right = core_verdict(a, sr, Sidedness::Right);
    t.left = core_verdict(a, sl, Sidedness::Left);
    t.two_sided = core_verdict(a, sb, Sidedness::TwoSided);
    return t;
}

/* Locality and invariance
 * ============================================================
 */

Verdict is_local(AlgebraPtr a) {
    Subspace j = jacobson_radical(a);
    QuotientResult q = quotient(a, Ideal{j, Sidedness::TwoSided});
    const AlgebraPtr& qa = q.algebra;
    if (qa->dim() == 1) return Verdict::yes("A/J is the ground field");

    auto invertible = [&](const Vec& v) {
        Mat l = qa->left_mul_matrix(v);
        return rref(l).size() == qa->dim();
    };

    if (a->field().kind == FieldKind::PrimeField) {
        uint64_t points = projective_point_count(a->field(), qa->dim());
        if (points <= kHeavyEnumerationCap) {
            Verdict result = Verdict::yes("every non-zero element of A/J is invertible");
            for_each_projective_point(a->field(), qa->dim(), kEnumerationCap,
                                      [&](const Vec& v) {
                                          if (!invertible(v)) {
                                              result = Verdict::no("non-invertible coset");
                                              result.witness_element = q.lift(v);
                                              return false;
                                          }
                                          return true;
                                      });
            result.enumeration_complete = result.is_true();
            return result;
        }
        return Verdict::unknown("quotient too large for exact enumeration");
    }

    // infinite field: look for a witness zero-divisor among basis cosets
    // and pairwise sums; no idempotent factorization is attempted
    for (size_t i = 0; i < qa->dim(); i++) {
        Vec v = qa->basis_vector(i);
        if (!vec_is_zero(v) && !invertible(v)) {
            Verdict no = Verdict::no("non-invertible coset");
            no.witness_element = q.lift(v);
            return no;
        }
        for (size_t k = i + 1; k < qa->dim(); k++) {
            Vec s = vec_add(v, qa->basis_vector(k));
            if (!vec_is_zero(s) && !invertible(s)) {
                Verdict no = Verdict::no("non-invertible coset");
                no.witness_element = q.lift(s);
                return no;
            }
        }
    }
    return Verdict::unknown("no zero-divisor found among sampled cosets of A/J (dim " +
                            std::to_string(qa->dim()) + "); exact over Q only when dim A/J = 1");
}

namespace {

uint64_t splitmix(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Vec random_element(const Algebra& a, uint64_t& state) {
    Vec v = zero_vec(a.field(), a.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        int64_t c = static_cast<int64_t>(splitmix(state) % 7) - 3;
        v[i] = Scalar::from_int(a.field(), c);
    }
    return v;
}

bool two_sided_principal_match(const Algebra& a, AlgebraPtr ap, const Vec& v, Vec* witness) {
    Mat right_rows, left_rows;
    for (size_t i = 0; i < a.dim(); i++) {
        Vec b = a.basis_vector(i);
        right_rows.push_back(a.multiply(v, b));
        left_rows.push_back(a.multiply(b, v));
    }
    Subspace vr = Subspace::span(ap, std::move(right_rows));
    Subspace vl = Subspace::span(ap, std::move(left_rows));
    if (vr == vl) return true;
    if (witness) *witness = v;
    return false;
}

}  // namespace

Verdict is_invariant(AlgebraPtr a, uint64_t seed) {
    if (a->is_commutative()) return Verdict::yes("commutative");

    if (a->field().kind == FieldKind::PrimeField) {
        uint64_t points = projective_point_count(a->field(), a->dim());
        if (points <= kHeavyEnumerationCap) {
            Verdict result = Verdict::yes("aR = Ra for every non-zero a");
            for_each_projective_point(a->field(), a->dim(), kEnumerationCap, [&](const Vec& v) {
                Vec w;
                if (!two_sided_principal_match(*a, a, v, &w)) {
                    result = Verdict::no("one-sided principal ideal is not two-sided");
                    result.witness_element = w;
                    return false;
                }
                return true;
            });
            result.enumeration_complete = result.is_true();
            return result;
        }
    }

    // sampled check: basis elements, pairwise sums, then random draws
    uint64_t state = seed;
    uint64_t checked = 0;
    Vec w;
    for (size_t i = 0; i < a->dim(); i++) {
        checked++;
        if (!two_sided_principal_match(*a, a, a->basis_vector(i), &w)) {
            Verdict no = Verdict::no("one-sided principal ideal is not two-sided");
            no.witness_element = w;
            return no;
        }
        for (size_t k = i + 1; k < a->dim(); k++) {
            checked++;
            Vec s = vec_add(a->basis_vector(i), a->basis_vector(k));
            if (!two_sided_principal_match(*a, a, s, &w)) {
                Verdict no = Verdict::no("one-sided principal ideal is not two-sided");
                no.witness_element = w;
                return no;
            }
        }
    }
    for (size_t r = 0; r < 200; r++) {
        Vec v = random_element(*a, state);
        if (vec_is_zero(v)) continue;
        checked++;
        if (!two_sided_principal_match(*a, a, v, &w)) {
            Verdict no = Verdict::no("one-sided principal ideal is not two-sided");
            no.witness_element = w;
            return no;
        }
    }
    Verdict v = Verdict::unknown("no violation among sampled elements");
    v.seed = seed;
    v.samples = checked;
    return v;
}

bool quotient_is_commutative(AlgebraPtr a, const Subspace& radical) {
    for (size_t i = 0; i < a->dim(); i++)
        for (size_t k = i + 1; k < a->dim(); k++) {
            Vec c = a->commutator(a->basis_vector(i), a->basis_vector(k));
            if (!radical.contains(c)) return false;
        }
    return true;
}

/* Full report
 * ============================================================
 */

StructureReport structure_report(AlgebraPtr a, const StructureOptions& opts) {
    StructureReport rep;
    rep.center = center(a);
    rep.radical = jacobson_radical(a);
    rep.radical_nilpotence_index = nilpotence_index(rep.radical);

    SubalgebraResult c = subalgebra(a, rep.center);
    Subspace jc = jacobson_radical(c.algebra);
    rep.center_radical = c.embed_subspace(jc);
    rep.center_radical_matches = rep.center_radical == rep.center.intersect(rep.radical);

    rep.right_socle = socle_right(a, rep.radical);
    rep.left_socle = socle_left(a, rep.radical);
    rep.bimodule_socle = rep.right_socle.intersect(rep.left_socle);
    rep.quotient_commutative = quotient_is_commutative(a, rep.radical);

    if (opts.with_cores) {
        rep.cores = cores(a);
        CoreTriple cc = cores(c.algebra);
        // re-embed witness subspaces into the parent coordinates
        auto embed_verdict = [&](Verdict& v) {
            if (v.witness_space) v.witness_space = c.embed_subspace(*v.witness_space);
            if (v.witness_spaces)
                v.witness_spaces = std::make_pair(c.embed_subspace(v.witness_spaces->first),
                                                  c.embed_subspace(v.witness_spaces->second));
            if (v.witness_element) v.witness_element = c.embed(*v.witness_element);
        };
        embed_verdict(cc.right);
        embed_verdict(cc.left);
        embed_verdict(cc.two_sided);
        rep.center_cores = cc;
    }
    if (opts.with_local) rep.local = is_local(a);
    if (opts.with_invariant) rep.invariant = is_invariant(a, opts.seed);
    if (opts.with_minimal_right_ideals) {
        try {
            rep.minimal_right = minimal_right_ideals(a);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InconclusiveOverInfiniteField &&
                e.code() != ErrorCode::CapExceeded)
                throw;
        }
    }
    return rep;
}

}  // namespace cering

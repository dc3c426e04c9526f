#include "cering/linalg.hpp"

namespace cering {

Vec zero_vec(const FieldSpec& f, size_t n) { return Vec(n, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); i++) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); i++) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const Vec& v, const Scalar& c) {
    Vec r = v;
    for (auto& x : r) x = x * c;
    return r;
}

Mat identity_mat(const FieldSpec& f, size_t n) {
    Mat m(n, zero_vec(f, n));
    for (size_t i = 0; i < n; i++) m[i][i] = Scalar::one(f);
    return m;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r;
    r.reserve(m.size());
    for (const auto& row : m) {
        Scalar s = Scalar::zero(v.empty() ? row[0].field() : v[0].field());
        for (size_t j = 0; j < row.size(); j++)
            if (!row[j].is_zero() && !v[j].is_zero()) s = s + row[j] * v[j];
        r.push_back(s);
    }
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    const FieldSpec& f = a[0][0].field();
    Mat r(n, zero_vec(f, m));
    for (size_t i = 0; i < n; i++)
        for (size_t l = 0; l < k; l++) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; j++)
                if (!b[l][j].is_zero()) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

Scalar mat_trace(const Mat& m) {
    Scalar t = Scalar::zero(m[0][0].field());
    for (size_t i = 0; i < m.size(); i++) t = t + m[i][i];
    return t;
}

std::vector<size_t> rref(Mat& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); col++) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) sel++;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][col].inverse();
        for (size_t j = col; j < ncols; j++) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); i++) {
            if (i == r || rows[i][col].is_zero()) continue;
            Scalar f = rows[i][col];
            for (size_t j = col; j < ncols; j++)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(col);
        r++;
    }
    rows.resize(r);
    return pivots;
}

Vec reduce_row(const Mat& rows, const std::vector<size_t>& pivots, Vec v) {
    for (size_t i = 0; i < rows.size(); i++) {
        const Scalar& c = v[pivots[i]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot entries are 1
        for (size_t j = 0; j < v.size(); j++)
            if (!rows[i][j].is_zero()) v[j] = v[j] - f * rows[i][j];
    }
    return v;
}

Mat kernel(Mat m, const FieldSpec& f, size_t ncols) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    Mat basis;
    for (size_t free = 0; free < ncols; free++) {
        if (is_pivot[free]) continue;
        Vec x = zero_vec(f, ncols);
        x[free] = Scalar::one(f);
        for (size_t i = 0; i < pivots.size(); i++) x[pivots[i]] = -m[i][free];
        basis.push_back(std::move(x));
    }
    rref(basis);  // canonical echelon form
    return basis;
}

std::optional<Vec> solve_columns(const std::vector<Vec>& cols, const Vec& target,
                                 const FieldSpec& f) {
    size_t nrows = target.size(), nvars = cols.size();
    Mat aug(nrows, zero_vec(f, nvars + 1));
    for (size_t j = 0; j < nvars; j++)
        for (size_t i = 0; i < nrows; i++) aug[i][j] = cols[j][i];
    for (size_t i = 0; i < nrows; i++) aug[i][nvars] = target[i];
    std::vector<size_t> pivots = rref(aug);
    Vec sol = zero_vec(f, nvars);
    for (size_t i = 0; i < pivots.size(); i++) {
        if (pivots[i] == nvars) return std::nullopt;  // inconsistent
        sol[pivots[i]] = aug[i][nvars];
    }
    return sol;
}

std::vector<Scalar> charpoly(const Mat& m, const FieldSpec& f) {
    size_t n = m.size();
    const Scalar one = Scalar::one(f);
    if (n == 0) return {one};
    // coefficients high-to-low while iterating
    std::vector<Scalar> p = {one, -m[0][0]};
    for (size_t k = 1; k < n; k++) {
        // principal submatrix of size k+1; R, C border the leading k x k block
        std::vector<Scalar> col0;
        col0.reserve(k + 2);
        col0.push_back(one);
        col0.push_back(-m[k][k]);
        Vec v(k, Scalar::zero(f));
        for (size_t i = 0; i < k; i++) v[i] = m[i][k];  // C
        for (size_t i = 1; i <= k; i++) {
            Scalar s = Scalar::zero(f);
            for (size_t j = 0; j < k; j++)
                if (!m[k][j].is_zero() && !v[j].is_zero()) s = s + m[k][j] * v[j];  // R . v
            col0.push_back(-s);
            if (i < k) {
                Vec nv(k, Scalar::zero(f));
                for (size_t r = 0; r < k; r++)
                    for (size_t c = 0; c < k; c++)
                        if (!m[r][c].is_zero() && !v[c].is_zero()) nv[r] = nv[r] + m[r][c] * v[c];
                v = std::move(nv);
            }
        }
        // p_{k+1} = Toeplitz(col0) * p_k
        std::vector<Scalar> np(k + 2, Scalar::zero(f));
        for (size_t r = 0; r < k + 2; r++)
            for (size_t c = 0; c <= std::min(r, k); c++)
                if (!col0[r - c].is_zero() && !p[c].is_zero()) np[r] = np[r] + col0[r - c] * p[c];
        p = std::move(np);
    }
    std::vector<Scalar> low_to_high(p.rbegin(), p.rend());
    return low_to_high;
}

}  // namespace cering

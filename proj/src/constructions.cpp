#include "cering/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cering {

/* Exterior algebras
 * ============================================================
 * Monomials are bitmasks over generator indices. Basis order is
 * graded-lex: by popcount, then by the sorted index tuple.
 */

namespace {

std::vector<uint32_t> exterior_basis_masks(size_t n) {
    std::vector<std::vector<uint32_t>> by_degree(n + 1);
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); mask++)
        by_degree[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
    // within a degree, lex on index tuples = numeric order of the mask
    // with low bits as low indices, which is plain numeric order after
    // comparing the lowest set bits; sort by tuple explicitly
    auto tuple_of = [n](uint32_t mask) {
        std::vector<uint32_t> t;
        for (uint32_t b = 0; b < n; b++)
            if (mask & (uint32_t(1) << b)) t.push_back(b);
        return t;
    };
    std::vector<uint32_t> order;
    for (auto& deg : by_degree) {
        std::sort(deg.begin(), deg.end(), [&](uint32_t a, uint32_t b) {
            return tuple_of(a) < tuple_of(b);
        });
        order.insert(order.end(), deg.begin(), deg.end());
    }
    return order;
}

std::string exterior_label(uint32_t mask, size_t n) {
    if (mask == 0) return "1";
    std::string s;
    for (uint32_t b = 0; b < n; b++) {
        if (!(mask & (uint32_t(1) << b))) continue;
        if (!s.empty()) s += "^";
        s += "e" + std::to_string(b + 1);
    }
    return s;
}

// sign of merging the generators of `a` in front of those of `b`:
// count transpositions needed to sort the concatenation
int merge_sign(uint32_t a, uint32_t b) {
    int inversions = 0;
    for (uint32_t i = 0; i < 32; i++) {
        if (!(b & (uint32_t(1) << i))) continue;
        uint32_t higher = a >> (i + 1);
        inversions += __builtin_popcount(higher);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

AlgebraPtr exterior_algebra(const FieldSpec& f, size_t n) {
    if (n < 1 || n > 12)
        throw Error(ErrorCode::DimensionCap, "exterior algebra needs 1 <= n <= 12");
    std::vector<uint32_t> masks = exterior_basis_masks(n);
    std::map<uint32_t, size_t> index;
    std::vector<std::string> labels;
    for (size_t i = 0; i < masks.size(); i++) {
        index[masks[i]] = i;
        labels.push_back(exterior_label(masks[i], n));
    }
    std::vector<TableEntry> table;
    Scalar one = Scalar::one(f);
    for (size_t i = 0; i < masks.size(); i++)
        for (size_t j = 0; j < masks.size(); j++) {
            if (masks[i] & masks[j]) continue;  // repeated generator
            int sign = merge_sign(masks[i], masks[j]);
            table.push_back({i, j, index[masks[i] | masks[j]], sign == 1 ? one : -one});
        }
    Vec unit = zero_vec(f, masks.size());
    unit[0] = one;
    return make_algebra(f, std::move(labels), table, std::move(unit),
                        "exterior:" + f.name() + ":" + std::to_string(n));
}

/* Cayley tables and group algebras
 * ============================================================
 */

void CayleyTable::validate() const {
    if (order == 0 || labels.size() != order || product.size() != order)
        throw Error(ErrorCode::InvalidGroupTable, "bad table shape");
    for (const auto& row : product) {
        if (row.size() != order) throw Error(ErrorCode::InvalidGroupTable, "bad row length");
        for (size_t v : row)
            if (v >= order) throw Error(ErrorCode::InvalidGroupTable, "index out of range");
    }
    if (identity >= order) throw Error(ErrorCode::InvalidGroupTable, "bad identity index");
    for (size_t g = 0; g < order; g++)
        if (product[identity][g] != g || product[g][identity] != g)
            throw Error(ErrorCode::InvalidGroupTable,
                        "identity law fails at " + labels[g]);
    for (size_t g = 0; g < order; g++) {
        bool has_inverse = false;
        for (size_t h = 0; h < order; h++)
            if (product[g][h] == identity && product[h][g] == identity) has_inverse = true;
        if (!has_inverse)
            throw Error(ErrorCode::InvalidGroupTable, "no inverse for " + labels[g]);
    }
    for (size_t i = 0; i < order; i++)
        for (size_t j = 0; j < order; j++)
            for (size_t k = 0; k < order; k++)
                if (product[product[i][j]][k] != product[i][product[j][k]])
                    throw Error(ErrorCode::InvalidGroupTable,
                                "associativity fails at (" + labels[i] + "," + labels[j] + "," +
                                    labels[k] + ")");
}

CayleyTable quaternion_group() {
    // elements as a^i b^j with i mod 4, j mod 2; b a^k = a^-k b, b^2 = a^2
    auto mul = [](std::pair<int, int> u, std::pair<int, int> v) {
        auto [i, j] = u;
        auto [k, l] = v;
        int exp_a = j == 0 ? i + k : i - k;
        int exp_b = j + l;
        if (exp_b == 2) {
            exp_a += 2;
            exp_b = 0;
        }
        return std::make_pair(((exp_a % 4) + 4) % 4, exp_b);
    };
    // the conventional element order e, a, a2, b, ab, a3, a2b, a3b
    std::vector<std::pair<int, int>> elems = {{0, 0}, {1, 0}, {2, 0}, {0, 1},
                                              {1, 1}, {3, 0}, {2, 1}, {3, 1}};
    std::vector<std::string> labels = {"e", "a", "a2", "b", "ab", "a3", "a2b", "a3b"};
    std::map<std::pair<int, int>, size_t> index;
    for (size_t i = 0; i < elems.size(); i++) index[elems[i]] = i;

    CayleyTable t;
    t.order = 8;
    t.labels = labels;
    t.identity = 0;
    t.product.assign(8, std::vector<size_t>(8));
    for (size_t i = 0; i < 8; i++)
        for (size_t j = 0; j < 8; j++) t.product[i][j] = index[mul(elems[i], elems[j])];
    t.validate();
    return t;
}

CayleyTable cyclic_group(size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidGroupTable, "cyclic group of order 0");
    CayleyTable t;
    t.order = m;
    t.identity = 0;
    for (size_t i = 0; i < m; i++)
        t.labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    t.product.assign(m, std::vector<size_t>(m));
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) t.product[i][j] = (i + j) % m;
    t.validate();
    return t;
}

CayleyTable cayley_from_text(const std::string& text) {
    std::istringstream in(text);
    size_t m = 0;
    if (!(in >> m) || m == 0)
        throw Error(ErrorCode::InvalidGroupTable, "missing or bad order header");
    std::vector<std::vector<std::string>> rows(m, std::vector<std::string>(m));
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++)
            if (!(in >> rows[i][j]))
                throw Error(ErrorCode::InvalidGroupTable,
                            "table truncated at row " + std::to_string(i + 1));
    CayleyTable t;
    t.order = m;
    t.identity = 0;
    // first listed element must be the identity, so row 0 is the element list
    t.labels = rows[0];
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < m; i++) {
        if (index.count(t.labels[i]))
            throw Error(ErrorCode::InvalidGroupTable, "duplicate label " + t.labels[i]);
        index[t.labels[i]] = i;
    }
    t.product.assign(m, std::vector<size_t>(m));
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) {
            auto it = index.find(rows[i][j]);
            if (it == index.end())
                throw Error(ErrorCode::InvalidGroupTable, "unknown label " + rows[i][j]);
            t.product[i][j] = it->second;
        }
    t.validate();
    return t;
}

AlgebraPtr group_algebra(const FieldSpec& f, const CayleyTable& g, std::string name) {
    g.validate();
    if (name.empty()) name = "group:" + f.name() + ":" + std::to_string(g.order);
    std::vector<TableEntry> table;
    Scalar one = Scalar::one(f);
    for (size_t i = 0; i < g.order; i++)
        for (size_t j = 0; j < g.order; j++) table.push_back({i, j, g.product[i][j], one});
    Vec unit = zero_vec(f, g.order);
    unit[g.identity] = one;
    auto alg = std::make_shared<Algebra>(f, g.labels, table, unit, std::move(name));
    Vec ghat(g.order, one);
    alg->add_named_element("Ghat", ghat);
    static const CayleyTable q8 = quaternion_group();
    if (g.labels == q8.labels && g.product == q8.product) alg->add_named_element("Qhat", ghat);
    return alg;
}

}  // namespace cering

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cering/linalg.hpp"

using namespace cering;

namespace {

Mat mat_from_ints(const FieldSpec& f, const std::vector<std::vector<int64_t>>& rows) {
    Mat m;
    for (const auto& r : rows) {
        Vec v;
        for (int64_t x : r) v.push_back(Scalar::from_int(f, x));
        m.push_back(std::move(v));
    }
    return m;
}

Mat rand_mat(const FieldSpec& f, size_t n, std::mt19937_64& rng) {
    Mat m(n, zero_vec(f, n));
    for (auto& row : m)
        for (auto& e : row) e = Scalar::from_int(f, static_cast<int64_t>(rng() % 7) - 3);
    return m;
}

}  // namespace

TEST_CASE("rref canonical form") {
    FieldSpec q = FieldSpec::rationals();
    Mat m = mat_from_ints(q, {{2, 4, 6}, {1, 2, 3}, {0, 1, 1}});
    auto pivots = rref(m);
    CHECK(pivots == std::vector<size_t>{0, 1});
    CHECK(m.size() == 2);
    CHECK(m == mat_from_ints(q, {{1, 0, 1}, {0, 1, 1}}));
    // reduction recognizes membership
    Vec in = {Scalar::from_int(q, 3), Scalar::from_int(q, 2), Scalar::from_int(q, 5)};
    CHECK(vec_is_zero(reduce_row(m, pivots, in)));
    Vec out = {Scalar::from_int(q, 0), Scalar::from_int(q, 0), Scalar::from_int(q, 1)};
    CHECK(!vec_is_zero(reduce_row(m, pivots, out)));
}

TEST_CASE("kernel") {
    FieldSpec f3 = FieldSpec::prime(3);
    // x + 2y + z = 0 over GF(3): kernel dimension 2
    Mat m = mat_from_ints(f3, {{1, 2, 1}});
    Mat k = kernel(std::move(m), f3, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) {
        Scalar s = v[0] + Scalar::from_int(f3, 2) * v[1] + v[2];
        CHECK(s.is_zero());
    }
    // identity has zero kernel
    Mat id = identity_mat(f3, 4);
    CHECK(kernel(std::move(id), f3, 4).empty());
}

TEST_CASE("solve_columns") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<Vec> cols = {{Scalar::from_int(q, 1), Scalar::from_int(q, 0)},
                             {Scalar::from_int(q, 1), Scalar::from_int(q, 1)}};
    Vec target = {Scalar::from_int(q, 3), Scalar::from_int(q, 2)};
    auto sol = solve_columns(cols, target, q);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Scalar::from_int(q, 1));
    CHECK((*sol)[1] == Scalar::from_int(q, 2));
    std::vector<Vec> dep = {{Scalar::from_int(q, 1), Scalar::from_int(q, 0)}};
    CHECK(!solve_columns(dep, {Scalar::from_int(q, 0), Scalar::from_int(q, 1)}, q).has_value());
}

TEST_CASE("charpoly on known matrices") {
    FieldSpec q = FieldSpec::rationals();
    // diagonal(1, 2): t^2 - 3t + 2
    Mat d = mat_from_ints(q, {{1, 0}, {0, 2}});
    auto cp = charpoly(d, q);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Scalar::from_int(q, 2));
    CHECK(cp[1] == Scalar::from_int(q, -3));
    CHECK(cp[2] == Scalar::from_int(q, 1));
    // companion matrix of t^3 - t - 1
    Mat c = mat_from_ints(q, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
    cp = charpoly(c, q);
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == Scalar::from_int(q, -1));
    CHECK(cp[1] == Scalar::from_int(q, -1));
    CHECK(cp[2] == Scalar::from_int(q, 0));
    CHECK(cp[3] == Scalar::from_int(q, 1));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
    std::mt19937_64 rng(2024);
    for (const FieldSpec& f : {FieldSpec::prime(3), FieldSpec::rationals()}) {
        for (int round = 0; round < 10; round++) {
            size_t n = 2 + rng() % 3;
            Mat m = rand_mat(f, n, rng);
            auto cp = charpoly(m, f);
            // evaluate sum cp[i] * M^i
            Mat acc(n, zero_vec(f, n));
            Mat power = identity_mat(f, n);
            for (size_t i = 0; i <= n; i++) {
                for (size_t r = 0; r < n; r++)
                    for (size_t c = 0; c < n; c++)
                        acc[r][c] = acc[r][c] + cp[i] * power[r][c];
                if (i < n) power = mat_mul(power, m);
            }
            for (size_t r = 0; r < n; r++) CHECK(vec_is_zero(acc[r]));
            // trace and determinant coefficients
            CHECK(cp[n - 1] == -mat_trace(m));
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"

using namespace cering;
using namespace cering::tests;

namespace {

DiffMat T(const RatFun& f, const RatFun& g) { return DiffMat{f, g}; }
RatFun rf(int64_t n) { return RatFun(BigRational(n)); }
RatFun X() { return RatFun::variable('x'); }
RatFun Y() { return RatFun::variable('y'); }

}  // namespace

TEST_CASE("closed-form product agrees with the literal 3x3 matrix product") {
    uint64_t state = 424242;
    for (int round = 0; round < 60; round++) {
        DiffMat a{random_ratfun(state), random_ratfun(state)};
        DiffMat b{random_ratfun(state), random_ratfun(state)};
        DiffMat prod = a * b;
        RatMat3 oracle = ratmat_mul(diffmat_to_matrix(a), diffmat_to_matrix(b));
        // the product must itself have the triangular shape and match
        CHECK(ratmat_eq(oracle, diffmat_to_matrix(prod)));
    }
}

TEST_CASE("specific products") {
    // T(f, g) * T(0, 1) = T(0, f)
    DiffMat a = T(X() * Y(), rf(3));
    CHECK(a * T(rf(0), rf(1)) == T(rf(0), X() * Y()));
    // identity element
    CHECK(T(rf(1), rf(0)) * a == a);
    CHECK(a * T(rf(1), rf(0)) == a);
    // [T(x,0), T(y,0)] = T(0, 1)
    CHECK(T(X(), rf(0)).commutator(T(Y(), rf(0))) == T(rf(0), rf(1)));
    // diagonal embedding is not multiplicative: corner term d1(x) d2(y) = 1
    CHECK(T(X(), rf(0)) * T(Y(), rf(0)) == T(X() * Y(), rf(1)));
}

TEST_CASE("centrality is exactly constant diagonal") {
    CHECK(T(rf(5), X() + Y()).is_central());
    CHECK(T(rf(0), rf(1)).is_central());
    CHECK(!T(X(), rf(0)).is_central());
    CHECK(!T(RatFun(BivarPoly(BigRational(1)), BivarPoly::variable('y')), rf(0)).is_central());
    // commutator with central element vanishes against arbitrary elements
    uint64_t state = 7;
    DiffMat central = T(rf(2), random_ratfun(state));
    for (int i = 0; i < 20; i++) {
        DiffMat other{random_ratfun(state), random_ratfun(state)};
        CHECK(central.commutator(other).is_zero());
    }
}

TEST_CASE("randomized check report passes") {
    DiffmatReport rep = diffmat_checks(2026, 100);
    CHECK(rep.ok());
    CHECK(rep.seed == 2026);
    CHECK(rep.checks.size() == 6);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    // deterministic given the seed
    DiffmatReport rep2 = diffmat_checks(2026, 100);
    for (size_t i = 0; i < rep.checks.size(); i++) CHECK(rep.checks[i].pass == rep2.checks[i].pass);
}

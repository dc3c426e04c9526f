#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "support/corpus.hpp"

using namespace cering;
using namespace cering::tests;

namespace {

size_t label_index(const Algebra& a, const std::string& label) {
    const auto& labels = a.basis_labels();
    for (size_t i = 0; i < labels.size(); i++)
        if (labels[i] == label) return i;
    throw std::runtime_error("missing label " + label);
}

}  // namespace

TEST_CASE("exterior algebra basis and labels") {
    auto a2 = exterior_algebra(FieldSpec::rationals(), 2);
    CHECK(a2->dim() == 4);
    CHECK(a2->basis_labels() == std::vector<std::string>{"1", "e1", "e2", "e1^e2"});

    auto a3 = exterior_algebra(FieldSpec::prime(3), 3);
    CHECK(a3->dim() == 8);
    CHECK(a3->basis_labels() ==
          std::vector<std::string>{"1", "e1", "e2", "e3", "e1^e2", "e1^e3", "e2^e3",
                                   "e1^e2^e3"});
    CHECK_THROWS_AS(exterior_algebra(FieldSpec::rationals(), 0), Error);
    CHECK_THROWS_AS(exterior_algebra(FieldSpec::rationals(), 13), Error);
}

TEST_CASE("exterior products: anticommutation and squares") {
    auto a = exterior_algebra(FieldSpec::rationals(), 2);
    Vec e1 = a->basis_vector(1), e2 = a->basis_vector(2);
    Vec e12 = a->basis_vector(3);
    CHECK(a->multiply(e1, e2) == e12);
    CHECK(a->multiply(e2, e1) == vec_scale(e12, Scalar::from_int(a->field(), -1)));
    CHECK(vec_is_zero(a->multiply(e1, e1)));
    CHECK(a->multiply(e1, a->unit()) == e1);
    // commutator [e1, e2] = 2 e1^e2 over Q
    CHECK(a->commutator(e1, e2) == vec_scale(e12, Scalar::from_int(a->field(), 2)));
}

TEST_CASE("exterior algebras pass the table check") {
    for (const FieldSpec& f : {FieldSpec::prime(3), FieldSpec::rationals()})
        for (size_t n = 1; n <= 6; n++) CHECK(check_algebra(*exterior_algebra(f, n)).ok());
}

TEST_CASE("graded anticommutation u v = (-1)^{jk} v u") {
    for (const FieldSpec& f : {FieldSpec::prime(3), FieldSpec::rationals()}) {
        auto a = exterior_algebra(f, 4);
        // recover each monomial's degree from its label
        auto degree = [&](size_t idx) {
            const std::string& l = a->basis_labels()[idx];
            if (l == "1") return size_t(0);
            return static_cast<size_t>(std::count(l.begin(), l.end(), '^')) + 1;
        };
        for (size_t i = 0; i < a->dim(); i++)
            for (size_t j = 0; j < a->dim(); j++) {
                Vec uv = a->multiply(a->basis_vector(i), a->basis_vector(j));
                Vec vu = a->multiply(a->basis_vector(j), a->basis_vector(i));
                Scalar sign = Scalar::from_int(f, (degree(i) * degree(j)) % 2 == 0 ? 1 : -1);
                CHECK(uv == vec_scale(vu, sign));
            }
    }
}

TEST_CASE("exterior over GF(2) is commutative, otherwise not (n >= 2)") {
    CHECK(exterior_algebra(FieldSpec::prime(2), 2)->is_commutative());
    CHECK(exterior_algebra(FieldSpec::prime(2), 3)->is_commutative());
    CHECK(!exterior_algebra(FieldSpec::prime(3), 2)->is_commutative());
    CHECK(!exterior_algebra(FieldSpec::rationals(), 3)->is_commutative());
    CHECK(exterior_algebra(FieldSpec::rationals(), 1)->is_commutative());
}

TEST_CASE("quaternion group table") {
    CayleyTable q8 = quaternion_group();
    CHECK(q8.order == 8);
    CHECK(q8.labels == std::vector<std::string>{"e", "a", "a2", "b", "ab", "a3", "a2b", "a3b"});
    auto idx = [&](const std::string& l) {
        for (size_t i = 0; i < 8; i++)
            if (q8.labels[i] == l) return i;
        throw std::runtime_error("bad label");
    };
    // b b = a^2
    CHECK(q8.product[idx("b")][idx("b")] == idx("a2"));
    // a a3 = e
    CHECK(q8.product[idx("a")][idx("a3")] == idx("e"));
    // a b a^-1 = a2b (= b^-1)
    size_t ab = q8.product[idx("a")][idx("b")];
    CHECK(q8.product[ab][idx("a3")] == idx("a2b"));
    // center of Q8 is {e, a2}
    for (size_t g = 0; g < 8; g++) {
        bool central = true;
        for (size_t h = 0; h < 8; h++)
            if (q8.product[g][h] != q8.product[h][g]) central = false;
        CHECK(central == (g == idx("e") || g == idx("a2")));
    }
}

TEST_CASE("group algebra structure") {
    auto r = group_algebra(FieldSpec::prime(2), quaternion_group(), "group:gf2:q8");
    CHECK(r->dim() == 8);
    CHECK(check_algebra(*r).ok());
    // Qhat absorbs every group element: Qhat * g = Qhat
    Vec qhat = r->named_elements().at("Qhat");
    for (size_t g = 0; g < 8; g++) {
        CHECK(r->multiply(qhat, r->basis_vector(g)) == qhat);
        CHECK(r->multiply(r->basis_vector(g), qhat) == qhat);
    }
    // two-sided ideal generated by Qhat is 1-dimensional
    CHECK(ideal_generated_by(r, {qhat}, Sidedness::TwoSided).space.dim() == 1);

    auto c2 = cyclic_group_algebra(FieldSpec::prime(3), 2);
    CHECK(c2->dim() == 2);
    CHECK(c2->is_commutative());
}

TEST_CASE("augmentation map is a ring homomorphism on random pairs") {
    std::mt19937_64 rng(31);
    auto r = group_algebra(FieldSpec::prime(3), quaternion_group());
    auto aug = [&](const Vec& v) {
        Scalar s = Scalar::zero(r->field());
        for (const auto& c : v) s = s + c;
        return s;
    };
    for (int round = 0; round < 40; round++) {
        Vec x = zero_vec(r->field(), 8), y = zero_vec(r->field(), 8);
        for (auto& c : x) c = Scalar::from_int(r->field(), static_cast<int64_t>(rng() % 3));
        for (auto& c : y) c = Scalar::from_int(r->field(), static_cast<int64_t>(rng() % 3));
        CHECK(aug(r->multiply(x, y)) == aug(x) * aug(y));
        CHECK(aug(vec_add(x, y)) == aug(x) + aug(y));
    }
}

TEST_CASE("cayley file parsing") {
    // C3 with first row naming the elements (identity first)
    std::string text = "3\ne g h\ng h e\nh e g\n";
    CayleyTable t = cayley_from_text(text);
    CHECK(t.order == 3);
    CHECK(t.labels == std::vector<std::string>{"e", "g", "h"});
    CHECK(t.product[1][1] == 2);
    CHECK(t.product[1][2] == 0);

    CHECK_THROWS_AS(cayley_from_text("0\n"), Error);
    CHECK_THROWS_AS(cayley_from_text("2\ne g\n"), Error);           // truncated
    CHECK_THROWS_AS(cayley_from_text("2\ne e\ne e\n"), Error);      // duplicate labels
    CHECK_THROWS_AS(cayley_from_text("2\ne g\ng g\n"), Error);      // g has no inverse
    // non-associative Latin square (order 5 loop)
    std::string loop =
        "5\n"
        "e a b c d\n"
        "a e c d b\n"
        "b d e a c\n"
        "c b d e a\n"
        "d c a b e\n";
    CHECK_THROWS_AS(cayley_from_text(loop), Error);
}

TEST_CASE("matrix algebra support helper") {
    auto m2 = matrix_algebra(FieldSpec::prime(2), 2);
    CHECK(m2->dim() == 4);
    CHECK(check_algebra(*m2).ok());
    CHECK(!m2->is_commutative());
    size_t e11 = label_index(*m2, "E11"), e12 = label_index(*m2, "E12");
    size_t e21 = label_index(*m2, "E21");
    CHECK(m2->multiply(m2->basis_vector(e11), m2->basis_vector(e12)) == m2->basis_vector(e12));
    CHECK(vec_is_zero(m2->multiply(m2->basis_vector(e12), m2->basis_vector(e11))));
    CHECK(m2->multiply(m2->basis_vector(e12), m2->basis_vector(e21)) == m2->basis_vector(e11));
}

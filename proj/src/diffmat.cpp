#include "cering/diffmat.hpp"

namespace cering {

DiffMat DiffMat::operator*(const DiffMat& o) const {
    return {f * o.f, f * o.g + g * o.f + f.derivative('x') * o.f.derivative('y')};
}

bool DiffMat::is_central() const {
    return f.derivative('x').is_zero() && f.derivative('y').is_zero();
}

/* Random sampling
 * ============================================================
 * splitmix64 steps keep the generator self-contained and the draws
 * reproducible across platforms.
 */

namespace {

uint64_t next_u64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int64_t next_range(uint64_t& state, int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next_u64(state) % static_cast<uint64_t>(hi - lo + 1));
}

BivarPoly random_poly(uint64_t& state) {
    BivarPoly p;
    int terms = static_cast<int>(next_range(state, 1, 3));
    for (int t = 0; t < terms; t++) {
        Monomial2 m{static_cast<int32_t>(next_range(state, 0, 2)),
                    static_cast<int32_t>(next_range(state, 0, 2))};
        BigRational c(next_range(state, -4, 4), next_range(state, 1, 3));
        if (c != 0) p = p + BivarPoly(c) * BivarPoly::variable('x', m.x) * BivarPoly::variable('y', m.y);
    }
    return p;
}

}  // namespace

RatFun random_ratfun(uint64_t& state, bool allow_denominator) {
    BivarPoly num = random_poly(state);
    if (!allow_denominator || next_range(state, 0, 1) == 0) return RatFun(num, BivarPoly(BigRational(1)));
    BivarPoly den = random_poly(state);
    while (den.is_zero()) den = random_poly(state);
    return RatFun(num, den);
}

DiffmatReport diffmat_checks(uint64_t seed, size_t samples) {
    DiffmatReport rep;
    rep.seed = seed;
    rep.samples = samples;
    uint64_t state = seed;

    auto push = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };

    auto rand_elem = [&state]() { return DiffMat{random_ratfun(state), random_ratfun(state)}; };

    {
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples && ok; i++) {
            DiffMat a = rand_elem(), b = rand_elem(), c = rand_elem();
            if (!((a * b) * c == a * (b * c))) {
                ok = false;
                detail = "failed at sample " + std::to_string(i);
            }
            if (!(a * (b + c) == a * b + a * c) || !((a + b) * c == a * c + b * c)) {
                ok = false;
                detail = "distributivity failed at sample " + std::to_string(i);
            }
        }
        push("associativity+distributivity", ok, detail);
    }

    {
        // constant diagonal commutes with everything (on samples)
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples && ok; i++) {
            DiffMat central{RatFun(BigRational(next_range(state, -5, 5))), random_ratfun(state)};
            DiffMat other = rand_elem();
            if (!central.commutator(other).is_zero()) {
                ok = false;
                detail = "commutator non-zero at sample " + std::to_string(i);
            }
        }
        push("constant-diagonal-is-central", ok, detail);
    }

    {
        // T(f, g) * T(0, 1) = T(0, f): a non-zero central multiple landing
        // in the least ideal whenever f != 0
        DiffMat probe{RatFun(), RatFun(BigRational(1))};
        bool ok = probe.is_central();
        std::string detail = ok ? "" : "T(0,1) not central";
        for (size_t i = 0; i < samples && ok; i++) {
            DiffMat a = rand_elem();
            DiffMat w = a * probe;
            if (!(w == DiffMat{RatFun(), a.f})) {
                ok = false;
                detail = "product mismatch at sample " + std::to_string(i);
            }
            if (!a.f.is_zero() && w.is_zero()) {
                ok = false;
                detail = "witness vanished at sample " + std::to_string(i);
            }
            if (a.f.is_zero() && !a.is_central()) {
                ok = false;
                detail = "zero-diagonal element not central at sample " + std::to_string(i);
            }
        }
        push("central-multiple-witness", ok, detail);
    }

    {
        // H = {T(0, g)} is an ideal and H * H = 0
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < samples && ok; i++) {
            DiffMat h{RatFun(), random_ratfun(state)};
            DiffMat h2{RatFun(), random_ratfun(state)};
            DiffMat r = rand_elem();
            if (!(r * h).f.is_zero() || !(h * r).f.is_zero()) {
                ok = false;
                detail = "H not an ideal at sample " + std::to_string(i);
            }
            if (!(h * h2).is_zero()) {
                ok = false;
                detail = "H*H non-zero at sample " + std::to_string(i);
            }
        }
        push("least-ideal-squares-to-zero", ok, detail);
    }

    {
        // [T(x,0), T(y,0)] = T(0, 1), so the ring is not commutative
        DiffMat tx{RatFun::variable('x'), RatFun()};
        DiffMat ty{RatFun::variable('y'), RatFun()};
        DiffMat expect{RatFun(), RatFun(BigRational(1))};
        bool ok = tx.commutator(ty) == expect;
        push("non-commutativity-witness", ok, ok ? "" : "commutator mismatch");
    }

    {
        // the diagonal embedding is NOT multiplicative: T(x,0) T(y,0)
        // picks up a corner term
        DiffMat tx{RatFun::variable('x'), RatFun()};
        DiffMat ty{RatFun::variable('y'), RatFun()};
        DiffMat prod = tx * ty;
        bool ok = !prod.g.is_zero() && prod.g == RatFun(BigRational(1));
        push("diagonal-embedding-not-multiplicative", ok, ok ? "" : "corner term missing");
    }

    return rep;
}

}  // namespace cering

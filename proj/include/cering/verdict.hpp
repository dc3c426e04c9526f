#ifndef CERING_VERDICT_HPP
#define CERING_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cering/algebra.hpp"

namespace cering {

enum class Truth { True, False, Inconclusive };

inline const char* truth_name(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Three-valued decision with a machine-checkable payload. True/False
/// verdicts carry either a witness or a completed-enumeration marker;
/// Inconclusive always carries a reason (plus seed/sample count when
/// sampling was involved).
struct Verdict {
    Truth value = Truth::Inconclusive;
    std::string reason;

    // witnesses, populated per predicate
    std::optional<Vec> witness_element;       // e.g. the element with no central multiple
    std::optional<std::pair<Vec, Vec>> witness_pair;  // e.g. central (x, y) with a x = y
    std::optional<Subspace> witness_space;    // e.g. a core subspace
    std::optional<std::pair<Subspace, Subspace>> witness_spaces;  // e.g. ideals meeting in 0

    bool enumeration_complete = false;
    uint64_t points_checked = 0;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> samples;

    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }

    static Verdict yes(std::string why = "") {
        Verdict v;
        v.value = Truth::True;
        v.reason = std::move(why);
        return v;
    }
    static Verdict no(std::string why = "") {
        Verdict v;
        v.value = Truth::False;
        v.reason = std::move(why);
        return v;
    }
    static Verdict unknown(std::string why) {
        Verdict v;
        v.value = Truth::Inconclusive;
        v.reason = std::move(why);
        return v;
    }
};

}  // namespace cering

#endif

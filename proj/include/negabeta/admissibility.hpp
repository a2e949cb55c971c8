#pragma once

// Alternate order on digit strings and the admissibility criterion: a string
// is admissible iff every shifted tail t satisfies d(l) <=_alt t <_alt d*(l+1).
// Eventually periodic strings have finitely many distinct tails, so the
// decision is exact.

#include <numeric>
#include <optional>

#include "negabeta/expansion.hpp"

namespace negabeta {

enum class AltOrdering { Less, Equal, Greater };

// Comparison horizon for two eventually periodic strings: aligned preperiods
// plus one lcm of the periods; beyond that they agree everywhere.
inline std::size_t alt_horizon(const EventuallyPeriodicString& u,
                               const EventuallyPeriodicString& v) {
    std::size_t pre = std::max(u.preperiod.size(), v.preperiod.size());
    return pre + std::lcm(u.period.size(), v.period.size());
}

// u <_alt v iff at the first differing position m (1-based) u_m(-1)^m < v_m(-1)^m.
inline AltOrdering alt_compare(const EventuallyPeriodicString& u,
                               const EventuallyPeriodicString& v) {
    std::size_t horizon = alt_horizon(u, v);
    for (std::size_t i = 0; i < horizon; ++i) {
        int a = u.letter(i), b = v.letter(i);
        if (a == b) continue;
        // position m = i+1, so the comparison flips at even i
        bool flip = (i % 2 == 0);
        int fa = flip ? -a : a, fb = flip ? -b : b;
        return fa < fb ? AltOrdering::Less : AltOrdering::Greater;
    }
    return AltOrdering::Equal;
}

inline bool alt_less(const EventuallyPeriodicString& u, const EventuallyPeriodicString& v) {
    return alt_compare(u, v) == AltOrdering::Less;
}
inline bool alt_leq(const EventuallyPeriodicString& u, const EventuallyPeriodicString& v) {
    return alt_compare(u, v) != AltOrdering::Greater;
}

// The pair d(l), d*(l+1); both exact (periodicity detected).
struct ReferenceStrings {
    EventuallyPeriodicString lower;  // d(l)
    EventuallyPeriodicString upper;  // d*(l+1)
};

inline ReferenceStrings reference_strings(const Base& b, int max_iter) {
    ExpansionOutcome dl = ref_string_l(b, max_iter);
    ExpansionOutcome dr = ref_string_r(b, max_iter);
    if (!dl.periodic())
        throw RefsNotPeriodicError("d(l) not eventually periodic within " +
                                   std::to_string(max_iter) + " iterations");
    if (!dr.periodic())
        throw RefsNotPeriodicError("d*(l+1) not eventually periodic within " +
                                   std::to_string(max_iter) + " iterations");
    return {dl.string, dr.string};
}

struct AdmissibilityViolation {
    std::size_t shift;  // 1-based index i of the offending tail s_i s_{i+1} ...
    bool below_lower;   // true: tail <_alt d(l); false: tail >=_alt d*(l+1)
};

// Exact decision over the finite set of distinct tails.
inline std::optional<AdmissibilityViolation> admissibility_violation(
    const EventuallyPeriodicString& s, const ReferenceStrings& refs) {
    std::size_t tails = s.preperiod.size() + s.period.size();
    for (std::size_t i = 0; i < tails; ++i) {
        EventuallyPeriodicString t = s.shifted(i);
        if (alt_compare(t, refs.lower) == AltOrdering::Less)
            return AdmissibilityViolation{i + 1, true};
        if (!alt_less(t, refs.upper)) return AdmissibilityViolation{i + 1, false};
    }
    return std::nullopt;
}

inline bool is_admissible(const EventuallyPeriodicString& s, const ReferenceStrings& refs) {
    return !admissibility_violation(s, refs).has_value();
}

// s is strongly admissible iff 0s is admissible.
inline bool is_strongly_admissible(const EventuallyPeriodicString& s,
                                   const ReferenceStrings& refs) {
    return is_admissible(s.prepended(0), refs);
}

// Bounded-horizon fallback when the reference strings were not detected
// periodic: "no violation visible within the first `horizon` letters of the
// reference prefixes". Never upgrades to an exact yes.
inline bool admissible_up_to_horizon(const EventuallyPeriodicString& s,
                                     const DigitString& lower_prefix,
                                     const DigitString& upper_prefix, std::size_t horizon) {
    std::size_t tails = s.preperiod.size() + s.period.size();
    auto decided_less = [&](const EventuallyPeriodicString& t, const DigitString& ref,
                            std::size_t n) {
        // returns -1/0/+1 for t <_alt ref / undecided-equal / t >_alt ref on n letters
        for (std::size_t i = 0; i < n; ++i) {
            int a = t.letter(i), b = ref[i];
            if (a == b) continue;
            bool flip = (i % 2 == 0);
            return ((flip ? -a : a) < (flip ? -b : b)) ? -1 : +1;
        }
        return 0;
    };
    std::size_t n = std::min({horizon, lower_prefix.size(), upper_prefix.size()});
    for (std::size_t i = 0; i < tails; ++i) {
        EventuallyPeriodicString t = s.shifted(i);
        if (decided_less(t, lower_prefix, n) < 0) return false;
        if (decided_less(t, upper_prefix, n) > 0) return false;
    }
    return true;
}

}  // namespace negabeta

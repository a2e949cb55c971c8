#pragma once

// The generalised (-beta)-transformation T(x) = -beta x - floor(-beta x - l)
// on [l, l+1), digit extraction, full expansions with exact eventual-period
// detection, the left-limit expansion of l+1, and the alphabet / endpoint
// window predicates.

#include <algorithm>
#include <string>
#include <vector>

#include "negabeta/algebraic.hpp"

namespace negabeta {

struct DigitString {
    std::vector<int> digits;  // most significant (paper position 1) first

    bool empty() const { return digits.empty(); }
    std::size_t size() const { return digits.size(); }
    int operator[](std::size_t i) const { return digits[i]; }
    friend bool operator==(const DigitString&, const DigitString&) = default;
};

inline DigitString negate_digits(DigitString s) {
    for (auto& d : s.digits) d = -d;
    return s;
}

// Infinite string preperiod . period^omega in canonical form: the period is
// primitive and the preperiod is shortest possible. A string ending in zeros
// has period {0}.
struct EventuallyPeriodicString {
    DigitString preperiod;
    DigitString period;

    static EventuallyPeriodicString make(std::vector<int> pre, std::vector<int> per) {
        if (per.empty()) throw std::invalid_argument("period must be nonempty");
        // primitive period: shortest block whose repetition gives the period
        for (std::size_t q = 1; q <= per.size(); ++q) {
            if (per.size() % q != 0) continue;
            bool ok = true;
            for (std::size_t i = q; i < per.size() && ok; ++i) ok = per[i] == per[i - q];
            if (ok) {
                per.resize(q);
                break;
            }
        }
        // minimal preperiod: absorb matching trailing digits into the period
        while (!pre.empty() && pre.back() == per.back()) {
            per.insert(per.begin(), per.back());
            per.pop_back();
            pre.pop_back();
        }
        return EventuallyPeriodicString{DigitString{std::move(pre)}, DigitString{std::move(per)}};
    }

    // 0-based access; index i is paper position i+1
    int letter(std::size_t i) const {
        if (i < preperiod.size()) return preperiod[i];
        return period[(i - preperiod.size()) % period.size()];
    }

    bool purely_periodic() const { return preperiod.empty(); }
    bool is_zero() const { return preperiod.empty() && period.digits == std::vector<int>{0}; }

    // drop the first `count` letters
    EventuallyPeriodicString shifted(std::size_t count) const {
        std::vector<int> pre;
        for (std::size_t i = count; i < preperiod.size(); ++i) pre.push_back(preperiod[i]);
        std::vector<int> per = period.digits;
        if (count > preperiod.size()) {
            std::size_t rot = (count - preperiod.size()) % per.size();
            std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(rot), per.end());
        }
        return make(std::move(pre), std::move(per));
    }

    EventuallyPeriodicString prepended(int digit) const {
        std::vector<int> pre = {digit};
        pre.insert(pre.end(), preperiod.digits.begin(), preperiod.digits.end());
        return make(std::move(pre), period.digits);
    }

    friend bool operator==(const EventuallyPeriodicString&, const EventuallyPeriodicString&) =
        default;
};

inline EventuallyPeriodicString with_zero_tail(const DigitString& w) {
    return EventuallyPeriodicString::make(w.digits, {0});
}

struct ExpansionOutcome {
    enum class Kind { Periodic, PrefixOnly };
    Kind kind;
    EventuallyPeriodicString string;  // set when Periodic
    DigitString prefix;               // set when PrefixOnly
    int iterations_used = 0;

    bool periodic() const { return kind == Kind::Periodic; }
};

namespace detail {

inline int fe_digit_to_int(const Int& d) {
    if (!d.fits_sint_p()) throw std::logic_error("digit out of int range");
    return static_cast<int>(d.get_si());
}

}  // namespace detail

// One application of T; requires l <= x < l+1 (checked exactly).
inline std::pair<int, FieldElement> transform_step(const Base& b, const FieldElement& x) {
    if ((x - b.l).sign() < 0 || (x - b.l_plus_1()).sign() >= 0)
        throw OutOfDomainError("point outside [l, l+1)");
    FieldElement arg = -(b.beta() * x) - b.l;
    int digit = detail::fe_digit_to_int(arg.floor());
    FieldElement next = -(b.beta() * x) - b.rational(Rat(digit));
    return {digit, next};
}

// Iterate T from x, recording digits; detects an exact recurrence of the
// orbit (the orbit of a point of Q(beta) stays in Q(beta)) and returns the
// canonical eventually periodic string, or the digit prefix on budget
// exhaustion.
inline ExpansionOutcome expand(const Base& b, const FieldElement& x, int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if ((x - b.l).sign() < 0 || (x - b.l_plus_1()).sign() >= 0)
        throw OutOfDomainError("point outside [l, l+1)");
    std::vector<FieldElement> orbit = {x};
    std::vector<int> digits;
    FieldElement cur = x;
    for (int i = 1; i <= max_iter; ++i) {
        FieldElement arg = -(b.beta() * cur) - b.l;
        int digit = detail::fe_digit_to_int(arg.floor());
        FieldElement next = -(b.beta() * cur) - b.rational(Rat(digit));
        digits.push_back(digit);
        for (std::size_t m = 0; m < orbit.size(); ++m) {
            if (orbit[m] == next) {
                std::vector<int> pre(digits.begin(), digits.begin() + static_cast<long>(m));
                std::vector<int> per(digits.begin() + static_cast<long>(m), digits.end());
                return {ExpansionOutcome::Kind::Periodic,
                        EventuallyPeriodicString::make(std::move(pre), std::move(per)),
                        {},
                        i};
            }
        }
        orbit.push_back(next);
        cur = next;
    }
    return {ExpansionOutcome::Kind::PrefixOnly, {}, DigitString{std::move(digits)}, max_iter};
}

// d(l): the lower reference string of the admissibility condition.
inline ExpansionOutcome ref_string_l(const Base& b, int max_iter) {
    return expand(b, b.l, max_iter);
}

// d*(l+1) = lim_{eps->0+} d(l+1-eps), realized exactly by iterating on the
// pair (orbit point, approach side). Multiplying by -beta flips the side, so
// the digit alternates between the right limit of the floor (side above:
// floor itself) and the left limit (side below: ceil - 1). The two limits
// differ exactly when the orbit hits a discontinuity.
inline ExpansionOutcome ref_string_r(const Base& b, int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    FieldElement t = b.l_plus_1();
    bool from_below = true;
    std::vector<std::pair<FieldElement, bool>> orbit = {{t, from_below}};
    std::vector<int> digits;
    for (int i = 1; i <= max_iter; ++i) {
        FieldElement arg = -(b.beta() * t) - b.l;
        bool arg_from_above = from_below;
        Int d = arg_from_above ? arg.floor() : arg.ceil() - 1;
        int digit = detail::fe_digit_to_int(d);
        t = -(b.beta() * t) - b.rational(Rat(digit));
        from_below = !from_below;
        digits.push_back(digit);
        bool found = false;
        std::size_t m = 0;
        for (; m < orbit.size(); ++m) {
            if (orbit[m].second == from_below && orbit[m].first == t) {
                found = true;
                break;
            }
        }
        if (found) {
            std::vector<int> pre(digits.begin(), digits.begin() + static_cast<long>(m));
            std::vector<int> per(digits.begin() + static_cast<long>(m), digits.end());
            return {ExpansionOutcome::Kind::Periodic,
                    EventuallyPeriodicString::make(std::move(pre), std::move(per)),
                    {},
                    i};
        }
        orbit.emplace_back(t, from_below);
    }
    return {ExpansionOutcome::Kind::PrefixOnly, {}, DigitString{std::move(digits)}, max_iter};
}

// Alphabet of Eq.-style digit bounds: {floor(-l(beta+1)-beta), ..., floor(-l(beta+1))}.
struct Alphabet {
    int lo, hi;
    bool contains(int d) const { return lo <= d && d <= hi; }
    int size() const { return hi - lo + 1; }
};

inline Alphabet alphabet(const Base& b) {
    FieldElement t = -(b.l * (b.beta() + b.one()));
    int hi = detail::fe_digit_to_int(t.floor());
    int lo = detail::fe_digit_to_int((t - b.beta()).floor());
    return {lo, hi};
}

struct EndpointWindow {
    bool zero_digit;
    bool renyi_alphabet;
    bool unique_expansions;
};

// The three endpoint-choice predicates, decided exactly.
inline EndpointWindow endpoint_window(const Base& b) {
    FieldElement beta = b.beta();
    FieldElement bp1 = beta + b.one();
    bool zero_digit = b.l.sign() <= 0 && b.l_plus_1().sign() > 0;
    Int fb = beta.floor();
    FieldElement renyi_lo = -(b.rational(Rat(fb + 1)) / bp1);
    FieldElement renyi_hi = -(beta / bp1);
    bool renyi = (b.l - renyi_lo).sign() > 0 && (b.l - renyi_hi).sign() <= 0;
    FieldElement uniq_hi = -(b.one() / bp1);
    bool uniq = (b.l - renyi_hi).sign() > 0 && (b.l - uniq_hi).sign() <= 0;
    return {zero_digit, renyi, uniq};
}

// Exact value sum_{i>=1} s_i (-beta)^{-i} of an eventually periodic string
// (geometric series on the period).
inline FieldElement eps_value(const Base& b, const EventuallyPeriodicString& s) {
    FieldElement nb = -b.beta();
    FieldElement inb = b.one() / nb;
    FieldElement acc = b.zero();
    FieldElement pw = inb;
    for (std::size_t i = 0; i < s.preperiod.size(); ++i) {
        acc = acc + b.rational(Rat(s.preperiod[i])) * pw;
        pw = pw * inb;
    }
    // pw is now (-beta)^-(P+1); period value V = sum per_j (-beta)^-(j), scaled
    FieldElement v = b.zero();
    FieldElement pj = inb;
    for (std::size_t j = 0; j < s.period.size(); ++j) {
        v = v + b.rational(Rat(s.period[j])) * pj;
        pj = pj * inb;
    }
    // tail = (-beta)^-P * V / (1 - (-beta)^-Q)
    FieldElement scaleP = b.one();
    for (std::size_t i = 0; i < s.preperiod.size(); ++i) scaleP = scaleP * inb;
    FieldElement qpow = b.one();
    for (std::size_t j = 0; j < s.period.size(); ++j) qpow = qpow * inb;
    FieldElement tail = scaleP * v / (b.one() - qpow);
    return acc + tail;
}

// ---- text format: "2,0|1" for 20 1^omega, "2,0" for a finite word ---------

inline std::string to_text(const DigitString& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

inline std::string to_text(const EventuallyPeriodicString& s) {
    return to_text(s.preperiod) + "|" + to_text(s.period);
}

inline DigitString digits_from_text(const std::string& s) {
    DigitString w;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string tok = s.substr(i, j - i);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            w.digits.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad digit: '" + tok + "'");
        }
        i = j + 1;
    }
    return w;
}

// "pre|per"; a string without '|' is read as a finite word with 0^omega tail.
inline EventuallyPeriodicString eps_from_text(const std::string& s) {
    std::size_t bar = s.find('|');
    if (bar == std::string::npos) return with_zero_tail(digits_from_text(s));
    DigitString pre = digits_from_text(s.substr(0, bar));
    DigitString per = digits_from_text(s.substr(bar + 1));
    if (per.empty()) throw ParseError("empty period");
    return EventuallyPeriodicString::make(pre.digits, per.digits);
}

}  // namespace negabeta

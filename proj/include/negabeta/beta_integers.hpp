#pragma once

// The set Z_{-beta}: gamma evaluation, the finite sets S(k) with their
// alternate-order extremes min(k)/max(k), the gap lengths Delta_k, certified
// enumeration of all (-beta)-integers in a rational window, the triviality
// test, and enumeration of the (possibly several) integer representations of
// a point.

#include <vector>

#include "negabeta/admissibility.hpp"

namespace negabeta {

// gamma(a_{k-1} ... a_0) = sum a_i (-beta)^i; digits most significant first.
inline FieldElement gamma(const Base& b, const DigitString& w) {
    FieldElement acc = b.zero();
    FieldElement nb = -b.beta();
    for (int d : w.digits) acc = acc * nb + b.rational(Rat(d));
    return acc;
}

namespace detail {

// Letterwise status of the tail s[from..] (completed by unknown digits)
// against an eventually periodic reference: -1 decided below, +1 decided
// above, 0 undecided on the available letters.
inline int tail_status(const std::vector<int>& s, std::size_t from,
                       const EventuallyPeriodicString& ref) {
    for (std::size_t i = from; i < s.size(); ++i) {
        int a = s[i], r = ref.letter(i - from);
        if (a == r) continue;
        bool flip = ((i - from) % 2 == 0);
        return ((flip ? -a : a) < (flip ? -r : r)) ? -1 : +1;
    }
    return 0;
}

// A prefix is viable iff no tail is already decided below d(l) or above
// d*(l+1). Exactness is restored by the full admissibility check at leaves.
inline bool prefix_viable(const std::vector<int>& s, const ReferenceStrings& refs) {
    for (std::size_t from = 0; from < s.size(); ++from) {
        if (tail_status(s, from, refs.lower) < 0) return false;
        if (tail_status(s, from, refs.upper) > 0) return false;
    }
    return true;
}

inline bool leaf_admissible(const std::vector<int>& s, const ReferenceStrings& refs) {
    return is_admissible(EventuallyPeriodicString::make(s, {0}), refs);
}

// Depth-first: does some completion of s to `total` digits give an
// admissible string (with the already-present digits fixed)?
inline bool completable(std::vector<int>& s, std::size_t total, const Alphabet& a,
                        const ReferenceStrings& refs) {
    if (s.size() == total) return leaf_admissible(s, refs);
    for (int d = a.lo; d <= a.hi; ++d) {
        s.push_back(d);
        bool ok = prefix_viable(s, refs) && completable(s, total, a, refs);
        s.pop_back();
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

// All length-k digit strings w (leading zeros allowed) with w 0^omega
// admissible, by pruned depth-first search; S(0) = {empty}.
inline std::vector<DigitString> enumerate_S(const Base& b, int k, const ReferenceStrings& refs) {
    if (k < 0) throw std::invalid_argument("enumerate_S: k must be >= 0");
    std::vector<DigitString> out;
    if (k == 0) {
        out.push_back(DigitString{});
        return out;
    }
    Alphabet a = alphabet(b);
    std::vector<int> s;
    auto rec = [&](auto&& self) -> void {
        if (s.size() == static_cast<std::size_t>(k)) {
            if (detail::leaf_admissible(s, refs)) out.push_back(DigitString{s});
            return;
        }
        for (int d = a.lo; d <= a.hi; ++d) {
            s.push_back(d);
            if (detail::prefix_viable(s, refs)) self(self);
            s.pop_back();
        }
    };
    rec(rec);
    return out;
}

struct ExtremalStrings {
    int k;
    DigitString min_k, max_k;
};

// Greedy digit-by-digit extremal choice: at paper position j the alternate
// order ranks digits descending for odd j and ascending for even j; each
// choice is validated by an exact completability search.
inline ExtremalStrings minmax(const Base& b, int k, const ReferenceStrings& refs) {
    if (k < 0) throw std::invalid_argument("minmax: k must be >= 0");
    Alphabet a = alphabet(b);
    auto build = [&](bool want_min) {
        std::vector<int> s;
        for (int j = 1; j <= k; ++j) {
            bool descending = want_min ? (j % 2 == 1) : (j % 2 == 0);
            bool placed = false;
            for (int t = 0; t < a.size() && !placed; ++t) {
                int d = descending ? a.hi - t : a.lo + t;
                s.push_back(d);
                if (detail::prefix_viable(s, refs) &&
                    detail::completable(s, static_cast<std::size_t>(k), a, refs)) {
                    placed = true;
                } else {
                    s.pop_back();
                }
            }
            if (!placed) throw std::logic_error("minmax: no feasible digit (S(k) empty?)");
        }
        return DigitString{s};
    };
    return {k, build(true), build(false)};
}

// Delta_k = |(-beta)^k + gamma(min(k)) - gamma(max(k))|, exactly.
inline FieldElement delta(const Base& b, int k, const ReferenceStrings& refs) {
    ExtremalStrings mm = minmax(b, k, refs);
    FieldElement nbk = b.one();
    FieldElement nb = -b.beta();
    for (int i = 0; i < k; ++i) nbk = nbk * nb;
    FieldElement e = nbk + gamma(b, mm.min_k) - gamma(b, mm.max_k);
    return e.sign() < 0 ? -e : e;
}

// Both numbers 1/beta and -1/beta outside [l, l+1)  <=>  Z_{-beta} = {0}.
inline bool is_trivial(const Base& b) {
    FieldElement invb = b.one() / b.beta();
    auto inside = [&](const FieldElement& x) {
        return (x - b.l).sign() >= 0 && (x - b.l_plus_1()).sign() < 0;
    };
    return !inside(invb) && !inside(-invb);
}

struct ZbetaPoint {
    FieldElement value;
    DigitString word;  // strongly admissible, no leading zero (empty for the point 0)
};

struct ZbetaWindow {
    std::vector<ZbetaPoint> points;  // strictly increasing
    FieldElement lo, hi;             // certified complete within [lo, hi]
};

namespace detail {

inline void require_section_endpoint(const Base& b) {
    FieldElement bp1 = b.beta() + b.one();
    FieldElement lo = -(b.beta() / bp1), hi = -(b.one() / bp1);
    if ((b.l - lo).sign() < 0 || (b.l - hi).sign() > 0)
        throw EndpointOutsideRestrictionError("requires l in [-beta/(beta+1), -1/(beta+1)]");
}

}  // namespace detail

// Smallest k such that no string of length >= k with nonzero leading digit
// can have |gamma| <= bound; word lengths below it cover the whole window.
inline int window_length_budget(const Base& b, const FieldElement& bound) {
    FieldElement margin_l = -b.l, margin_r = b.l_plus_1();
    FieldElement margin = (margin_l - margin_r).sign() < 0 ? margin_l : margin_r;
    FieldElement growth = b.one();
    int k = 1;
    while (!((growth * margin - bound).sign() > 0)) {
        growth = growth * b.beta();
        if (++k > 64) throw std::invalid_argument("window bound too large");
    }
    return k;
}

// All (-beta)-integers in [lo, hi], each with its canonical digit string.
// Completeness certificate: an admissible w 0^omega with |w| = k and nonzero
// leading digit has value gamma(w) = (-beta)^k x for some x in [l, l+1) whose
// first digit is nonzero, so |gamma(w)| >= beta^(k-1) min(-l, 1+l); lengths
// beyond the first k exceeding the window bound cannot contribute.
inline std::vector<ZbetaPoint> zbeta_range(const Base& b, const FieldElement& lo,
                                           const FieldElement& hi,
                                           const ReferenceStrings& refs) {
    detail::require_section_endpoint(b);
    if ((lo - hi).sign() > 0) throw std::invalid_argument("zbeta_range: lo > hi");
    Alphabet a = alphabet(b);
    FieldElement nb = -b.beta();
    FieldElement bnd = (-lo - hi).sign() > 0 ? -lo : hi;  // max(|lo|, |hi|)
    int cutoff = bnd.sign() < 0 ? 1 : window_length_budget(b, bnd);

    std::vector<ZbetaPoint> out;
    if (lo.sign() <= 0 && hi.sign() >= 0) out.push_back({b.zero(), DigitString{}});

    // powers of -beta for the remaining-suffix value bound
    std::vector<FieldElement> nbpow = {b.one()};

    for (int k = 1; k < cutoff; ++k) {
        while (static_cast<int>(nbpow.size()) <= k) nbpow.push_back(nbpow.back() * nb);

        std::vector<int> s = {0};  // leading zero: strong admissibility context
        FieldElement g = b.zero();
        auto rec = [&](auto&& self, const FieldElement& gcur) -> void {
            std::size_t placed = s.size() - 1;
            if (placed == static_cast<std::size_t>(k)) {
                if ((gcur - lo).sign() >= 0 && (gcur - hi).sign() <= 0 &&
                    detail::leaf_admissible(s, refs)) {
                    out.push_back({gcur, DigitString{std::vector<int>(s.begin() + 1, s.end())}});
                }
                return;
            }
            int rem = k - static_cast<int>(placed);
            for (int d = a.lo; d <= a.hi; ++d) {
                if (placed == 0 && d == 0) continue;  // nonzero leading digit
                s.push_back(d);
                if (detail::prefix_viable(s, refs)) {
                    FieldElement gnext = gcur * nb + b.rational(Rat(d));
                    // completed value lies in (-beta)^(rem-1) * (gnext + [l, l+1])
                    const FieldElement& f = nbpow[static_cast<std::size_t>(rem - 1)];
                    FieldElement e1 = f * (gnext + b.l);
                    FieldElement e2 = f * (gnext + b.l_plus_1());
                    if ((e1 - e2).sign() > 0) std::swap(e1, e2);
                    if (!((e2 - lo).sign() < 0 || (e1 - hi).sign() > 0)) self(self, gnext);
                }
                s.pop_back();
            }
        };
        rec(rec, g);
    }

    std::sort(out.begin(), out.end(),
              [](const ZbetaPoint& x, const ZbetaPoint& y) { return (x.value - y.value).sign() < 0; });
    // exact deduplication (ambiguous representations are real duplicates)
    std::vector<ZbetaPoint> uniq;
    for (auto& p : out) {
        if (!uniq.empty() && uniq.back().value == p.value) continue;
        uniq.push_back(std::move(p));
    }
    return uniq;
}

inline ZbetaWindow zbeta_window(const Base& b, const FieldElement& bound,
                                const ReferenceStrings& refs) {
    if (bound.sign() <= 0) throw std::invalid_argument("zbeta_window: bound must be positive");
    return {zbeta_range(b, -bound, bound, refs), -bound, bound};
}

struct RepresentationReport {
    std::vector<int> valid_k;    // exponents with x / (-beta)^k in [l, l+1)
    std::vector<int> invalid_k;  // the others, up to max_k
    std::vector<DigitString> strings;  // deduplicated, leading zeros stripped
};

// All integer-part representations of x reachable by scaling with (-beta)^k,
// k <= max_k: expand x/(-beta)^k and keep the strings whose tail past k is
// 0^omega.
inline RepresentationReport representations_of(const Base& b, const FieldElement& x, int max_k,
                                               int max_iter = 400) {
    RepresentationReport rep;
    FieldElement inb = b.one() / (-b.beta());
    FieldElement y = x;
    for (int k = 0; k <= max_k; ++k) {
        bool inside = (y - b.l).sign() >= 0 && (y - b.l_plus_1()).sign() < 0;
        if (!inside) {
            rep.invalid_k.push_back(k);
        } else {
            rep.valid_k.push_back(k);
            ExpansionOutcome out = expand(b, y, max_iter);
            if (out.periodic() && out.string.period.digits == std::vector<int>{0} &&
                out.string.preperiod.size() <= static_cast<std::size_t>(k)) {
                std::vector<int> w;
                for (int i = 0; i < k; ++i) w.push_back(out.string.letter(static_cast<std::size_t>(i)));
                while (!w.empty() && w.front() == 0) w.erase(w.begin());
                DigitString ds{std::move(w)};
                bool seen = false;
                for (const auto& s : rep.strings) seen = seen || s == ds;
                if (!seen) rep.strings.push_back(std::move(ds));
            }
        }
        y = y * inb;
    }
    if (rep.valid_k.empty())
        throw NoRepresentationFoundError("x/(-beta)^k never lands in [l, l+1) for k <= " +
                                         std::to_string(max_k));
    return rep;
}

}  // namespace negabeta

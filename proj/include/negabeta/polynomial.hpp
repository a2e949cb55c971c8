#pragma once

// Univariate polynomial helpers over Z and Q, coefficient vectors stored
// constant term first. Provides evaluation, Sturm-chain root counting on a
// rational interval, extended gcd in Q[x], and irreducibility testing over Q
// (rational-root test, mod-p degree certificate, Kronecker fallback).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "negabeta/rational.hpp"

namespace negabeta {

using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

template <typename Poly>
inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

template <typename Poly>
inline int poly_degree(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;  // -1 for the zero polynomial
}

inline Rat poly_eval(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
    return acc;
}

inline Rat poly_eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline RatPoly poly_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    poly_trim(d);
    return d;
}

inline RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    poly_trim(r);
    return r;
}

// Quotient/remainder in Q[x]; divisor must be nonzero.
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly num, const RatPoly& den) {
    int dd = poly_degree(den);
    if (dd < 0) throw std::invalid_argument("poly_divmod: zero divisor");
    poly_trim(num);
    RatPoly quot;
    if (poly_degree(num) >= dd) quot.resize(static_cast<std::size_t>(poly_degree(num) - dd) + 1, Rat(0));
    while (poly_degree(num) >= dd) {
        int dn = poly_degree(num);
        Rat c = num[static_cast<std::size_t>(dn)] / den[static_cast<std::size_t>(dd)];
        std::size_t shift = static_cast<std::size_t>(dn - dd);
        quot[shift] = c;
        for (int i = 0; i <= dd; ++i)
            num[shift + static_cast<std::size_t>(i)] -= c * den[static_cast<std::size_t>(i)];
        num[static_cast<std::size_t>(dn)] = 0;  // cancel exactly
        poly_trim(num);
    }
    poly_trim(quot);
    return {quot, num};
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (poly_degree(a) < 0 || poly_degree(b) < 0) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// u with u*a == 1 (mod m); m irreducible, a nonzero mod m.
inline RatPoly poly_inverse_mod(const RatPoly& a, const RatPoly& m) {
    RatPoly r0 = a, r1 = m;
    poly_trim(r0);
    RatPoly s0 = {Rat(1)}, s1 = {};
    while (poly_degree(r1) >= 0) {
        auto [q, rem] = poly_divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_degree(r0) != 0)
        throw std::logic_error("poly_inverse_mod: gcd not constant (modulus reducible?)");
    Rat g = r0[0];
    for (auto& c : s0) c /= g;
    poly_trim(s0);
    return s0;
}

// ---- Sturm chain ------------------------------------------------------------

inline std::vector<RatPoly> sturm_chain(const IntPoly& f) {
    std::vector<RatPoly> chain;
    RatPoly p0 = to_rat_poly(f);
    chain.push_back(p0);
    RatPoly p1 = poly_derivative(p0);
    while (poly_degree(p1) >= 0) {
        chain.push_back(p1);
        RatPoly rem = poly_divmod(p0, p1).second;
        for (auto& c : rem) c = -c;
        p0 = std::move(p1);
        p1 = std::move(rem);
    }
    return chain;
}

inline int sturm_variations(const std::vector<RatPoly>& chain, const Rat& t) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(poly_eval(p, t));
        if (s != 0) {
            if (prev != 0 && s != prev) ++vars;
            prev = s;
        }
    }
    return vars;
}

// Number of distinct real roots in (lo, hi); endpoints must not be roots.
inline int count_roots_in(const IntPoly& f, const Rat& lo, const Rat& hi) {
    auto chain = sturm_chain(f);
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

// ---- Integer polynomial normalization ----------------------------------------

inline Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        Int a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

// Divide out the content and make the leading coefficient positive.
inline IntPoly poly_primitive(IntPoly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Int g = poly_content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// ---- Irreducibility over Q ----------------------------------------------------

namespace detail {

// Positive divisors; the value must factor by trial division up to 10^6 with
// at most one (probable-)prime cofactor.
inline std::vector<Int> divisors_of(Int n) {
    n = abs(n);
    if (n == 0) throw std::invalid_argument("divisors_of(0)");
    std::vector<std::pair<Int, unsigned>> fac;
    auto add = [&](const Int& p) {
        if (!fac.empty() && fac.back().first == p)
            ++fac.back().second;
        else
            fac.emplace_back(p, 1u);
    };
    for (Int d = 2; d <= 1000000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            add(d);
            n /= d;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::runtime_error("coefficient too hard to factor for irreducibility test");
        add(n);
    }
    std::vector<Int> divs = {Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 100000) throw std::runtime_error("too many divisors");
    }
    return divs;
}

inline bool has_rational_root(const IntPoly& f) {
    // candidates +-p/q with p | f[0], q | lead; f primitive with f[0] != 0
    auto ps = divisors_of(f[0]);
    auto qs = divisors_of(f.back());
    for (const auto& p : ps)
        for (const auto& q : qs) {
            Rat r(p, q);
            r.canonicalize();
            if (poly_eval(f, r) == 0 || poly_eval(f, Rat(-r)) == 0) return true;
        }
    return false;
}

// Dense polynomials over F_p, p a small odd prime.
struct Fp {
    unsigned long p;
    unsigned long add(unsigned long a, unsigned long b) const { return (a + b) % p; }
    unsigned long sub(unsigned long a, unsigned long b) const { return (a + p - b % p) % p; }
    unsigned long mul(unsigned long a, unsigned long b) const { return (a * b) % p; }
    unsigned long inv(unsigned long a) const {
        unsigned long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

using FpPoly = std::vector<unsigned long>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int fp_degree(const FpPoly& a) {
    return static_cast<int>(a.size()) - 1;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, const Fp& F) {
    fp_trim(a);
    while (a.size() >= m.size()) {
        unsigned long c = F.mul(a.back(), F.inv(m.back()));
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(c, m[i]));
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_divexact(FpPoly num, const FpPoly& den, const Fp& F) {
    fp_trim(num);
    FpPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size()) {
        unsigned long c = F.mul(num.back(), F.inv(den.back()));
        std::size_t off = num.size() - den.size();
        quot[off] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[off + i] = F.sub(num[off + i], F.mul(c, den[i]));
        fp_trim(num);
    }
    return quot;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const Fp& F) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return fp_mod(std::move(r), m, F);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, const Fp& F) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(std::move(a), b, F);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        unsigned long c = F.inv(a.back());
        for (auto& x : a) x = F.mul(x, c);
    }
    return a;
}

// Multiset of irreducible-factor degrees of f mod p (distinct-degree
// factorization); empty when f mod p degenerates or is not squarefree.
inline std::vector<int> fp_factor_degrees(const IntPoly& f, unsigned long p) {
    Fp F{p};
    FpPoly a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int c = f[i] % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        a[i] = c.get_ui();
    }
    if (a.back() == 0) return {};  // leading coefficient vanished
    unsigned long lead = F.inv(a.back());
    for (auto& x : a) x = F.mul(x, lead);

    FpPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % p));
    fp_trim(d);
    if (d.empty() || fp_gcd(a, d, F).size() != 1) return {};  // not squarefree mod p

    std::vector<int> degrees;
    FpPoly rem = a;
    FpPoly h = fp_mod({0, 1}, rem, F);  // x mod rem
    int stage = 0;
    while (fp_degree(rem) > 0) {
        ++stage;
        if (2 * stage > fp_degree(rem)) {
            degrees.push_back(fp_degree(rem));
            break;
        }
        // h <- h^p mod rem, so h == x^(p^stage) mod rem
        FpPoly hp = {1};
        FpPoly base = h;
        unsigned long e = p;
        while (e) {
            if (e & 1) hp = fp_mulmod(hp, base, rem, F);
            base = fp_mulmod(base, base, rem, F);
            e >>= 1;
        }
        h = std::move(hp);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fp_trim(hx);
        FpPoly g = hx.empty() ? rem : fp_gcd(rem, hx, F);
        if (fp_degree(g) > 0) {
            for (int i = 0; i < fp_degree(g) / stage; ++i) degrees.push_back(stage);
            rem = fp_divexact(std::move(rem), g, F);
            h = fp_mod(std::move(h), rem, F);
        }
    }
    return degrees;
}

// Degrees (as a bitmask) of factors achievable from a mod-p degree multiset.
inline std::uint64_t subset_sum_mask(const std::vector<int>& degrees) {
    std::uint64_t mask = 1;  // sum 0
    for (int d : degrees) mask |= mask << d;
    return mask;
}

// Kronecker search for an integer factor of degree k in [2, deg/2].
inline bool kronecker_has_factor(const IntPoly& f) {
    int n = poly_degree(f);
    RatPoly fr = to_rat_poly(f);
    for (int k = 2; 2 * k <= n; ++k) {
        // sample points 0, 1, -1, 2, -2, ...
        std::vector<long> pts;
        for (long m = 0; static_cast<int>(pts.size()) < k + 1; m = (m > 0 ? -m : -m + 1)) {
            if (poly_eval(f, Rat(m)) != 0) pts.push_back(m);
        }
        std::vector<std::vector<Int>> table;  // candidate values at each point
        double combos = 1;
        for (int i = 0; i <= k; ++i) {
            Int v = poly_eval(f, Rat(pts[static_cast<std::size_t>(i)])).get_num();
            auto divs = divisors_of(v);
            std::vector<Int> vals;
            for (const auto& d : divs) {
                vals.push_back(d);
                if (i > 0) vals.push_back(-d);  // sign of g normalized via point 0
            }
            combos *= static_cast<double>(vals.size());
            table.push_back(std::move(vals));
        }
        if (combos > 2e7) throw std::runtime_error("irreducibility test too expensive");

        // Lagrange basis polynomials for the chosen points
        std::vector<RatPoly> basis;
        for (int i = 0; i <= k; ++i) {
            RatPoly b = {Rat(1)};
            for (int j = 0; j <= k; ++j) {
                if (j == i) continue;
                Rat denom(pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]);
                b = poly_mul(b, {Rat(-pts[static_cast<std::size_t>(j)]) / denom, Rat(1) / denom});
            }
            basis.push_back(std::move(b));
        }

        std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1, 0);
        while (true) {
            RatPoly g;
            for (int i = 0; i <= k; ++i) {
                RatPoly term = basis[static_cast<std::size_t>(i)];
                Rat v(table[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
                for (auto& c : term) c *= v;
                g = poly_sub(std::move(g), term);
            }
            for (auto& c : g) c = -c;  // g = sum v_i * L_i
            if (poly_degree(g) == k) {
                bool integral = true;
                for (const auto& c : g)
                    if (c.get_den() != 1) {
                        integral = false;
                        break;
                    }
                if (integral && poly_degree(poly_divmod(fr, g).second) < 0) return true;
            }
            // odometer
            std::size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < table[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return false;
}

}  // namespace detail

// f must be primitive with positive leading coefficient and degree >= 1.
inline bool poly_irreducible_over_Q(const IntPoly& f) {
    int n = poly_degree(f);
    if (n < 1) throw std::invalid_argument("irreducibility: degree must be >= 1");
    if (n == 1) return true;
    if (f[0] == 0) return false;  // x divides f
    if (detail::has_rational_root(f)) return false;
    if (n <= 3) return true;  // no linear factor over Q

    // mod-p certificate: intersect achievable factor degrees over several primes
    std::uint64_t proper = ((std::uint64_t{1} << n) - 2);  // degrees 1..n-1
    std::uint64_t achievable = ~std::uint64_t{0};
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
        auto degs = detail::fp_factor_degrees(f, p);
        if (degs.empty()) continue;
        achievable &= detail::subset_sum_mask(degs);
        if ((achievable & proper) == 0) return true;
    }
    return !detail::kronecker_has_factor(f);
}

}  // namespace negabeta

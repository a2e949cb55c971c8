#pragma once

// Exact arithmetic in Q(beta) for a real algebraic beta given by an integer
// minimal polynomial and an isolating rational interval. Elements are
// rational coefficient vectors reduced mod the minimal polynomial; sign,
// floor and decimal approximation are decided by certified interval
// refinement (bisection with exact rational endpoints), never by floating
// point.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "negabeta/errors.hpp"
#include "negabeta/polynomial.hpp"
#include "negabeta/rational.hpp"

namespace negabeta {

struct Interval {
    Rat lo, hi;
};

inline Interval iv_mul(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}

// Enclosure of sum c_i * x^i over x in X (interval Horner).
inline Interval iv_eval(const RatPoly& c, const Interval& X) {
    Interval acc{Rat(0), Rat(0)};
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = iv_mul(acc, X);
        acc.lo += c[i];
        acc.hi += c[i];
    }
    return acc;
}

class FieldElement;

class AlgebraicReal : public std::enable_shared_from_this<AlgebraicReal> {
public:
    // Validates the data and pre-refines the root enclosure. Throws
    // NotIrreducibleError / NoRootIsolatedError.
    static std::shared_ptr<const AlgebraicReal> isolate(IntPoly coeffs, const Rat& iso_lo,
                                                        const Rat& iso_hi) {
        auto K = std::shared_ptr<AlgebraicReal>(new AlgebraicReal());
        coeffs = poly_primitive(std::move(coeffs));
        int deg = poly_degree(coeffs);
        if (deg < 1) throw NoRootIsolatedError("polynomial is constant");
        if (!(iso_lo < iso_hi)) throw NoRootIsolatedError("empty isolating interval");
        if (!poly_irreducible_over_Q(coeffs))
            throw NotIrreducibleError("minimal polynomial has a factor over Q");
        K->minpoly_ = std::move(coeffs);
        K->degree_ = deg;
        K->iso_ = {iso_lo, iso_hi};
        if (deg == 1) {
            Rat root(-K->minpoly_[0], K->minpoly_[1]);
            root.canonicalize();
            if (!(iso_lo < root && root < iso_hi))
                throw NoRootIsolatedError("no root inside the interval");
            K->enclosure_ = {root, root};
            K->sign_lo_ = 0;
            return K;
        }
        // irreducible of degree >= 2 has no rational root, so endpoints are safe
        if (count_roots_in(K->minpoly_, iso_lo, iso_hi) != 1)
            throw NoRootIsolatedError("interval does not isolate exactly one real root");
        Interval box{iso_lo, iso_hi};
        int slo = sgn(poly_eval(K->minpoly_, iso_lo));
        // pre-refine so that most later sign queries finish without bisection
        Rat target(Int(1), int_pow(Int(2), 128));
        while (box.hi - box.lo > target) bisect_step(K->minpoly_, box, slo);
        K->enclosure_ = box;
        K->sign_lo_ = slo;
        return K;
    }

    const IntPoly& minpoly() const { return minpoly_; }
    int degree() const { return degree_; }
    std::pair<Rat, Rat> iso_interval() const { return {iso_.lo, iso_.hi}; }
    Interval enclosure() const { return enclosure_; }

    bool root_is_rational() const { return degree_ == 1; }
    Rat rational_root() const { return enclosure_.lo; }

    // Narrow a working copy of the enclosure; the stored one never changes.
    void bisect(Interval& box, int steps) const {
        int slo = sign_lo_;
        if (degree_ == 1) return;
        for (int i = 0; i < steps; ++i) bisect_step(minpoly_, box, slo);
    }

    FieldElement element(RatPoly coeffs) const;
    FieldElement rational(const Rat& q) const;
    FieldElement beta() const;

private:
    AlgebraicReal() = default;

    static void bisect_step(const IntPoly& f, Interval& box, int& sign_lo) {
        Rat mid = (box.lo + box.hi) / 2;
        int sm = sgn(poly_eval(f, mid));
        // sm == 0 would mean a rational root of an irreducible poly of degree >= 2
        if (sm == sign_lo) {
            box.lo = mid;
        } else {
            box.hi = mid;
        }
    }

    IntPoly minpoly_;
    int degree_ = 0;
    Interval iso_{Rat(0), Rat(0)};
    Interval enclosure_{Rat(0), Rat(0)};
    int sign_lo_ = 0;

    friend class FieldElement;
};

using FieldPtr = std::shared_ptr<const AlgebraicReal>;

class FieldElement {
public:
    FieldElement() = default;

    FieldElement(FieldPtr K, RatPoly coeffs) : K_(std::move(K)), c_(std::move(coeffs)) {
        for (auto& c : c_) c.canonicalize();  // mpq arithmetic requires canonical inputs
        if (static_cast<int>(c_.size()) > K_->degree()) reduce();
        c_.resize(static_cast<std::size_t>(K_->degree()), Rat(0));
    }

    const FieldPtr& field() const { return K_; }
    const RatPoly& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    // In Q(beta) an element is rational iff all non-constant coefficients
    // vanish (the minimal polynomial is irreducible).
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat as_rational() const {
        if (!is_rational()) throw std::logic_error("FieldElement is irrational");
        return c_.empty() ? Rat(0) : c_[0];
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        RatPoly r = a.c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
        return FieldElement(a.K_, std::move(r));
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        RatPoly r = a.c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
        return FieldElement(a.K_, std::move(r));
    }

    FieldElement operator-() const {
        RatPoly r = c_;
        for (auto& c : r) c = -c;
        return FieldElement(K_, std::move(r));
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        std::size_t d = a.c_.size();
        RatPoly r(2 * d - 1, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return FieldElement(a.K_, std::move(r));
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        if (b.is_zero()) throw DivisionByZeroError("division by the zero element");
        if (b.is_rational()) {
            RatPoly r = a.c_;
            for (auto& c : r) c /= b.c_[0];
            return FieldElement(a.K_, std::move(r));
        }
        RatPoly inv = poly_inverse_mod(b.c_, to_rat_poly(a.K_->minpoly()));
        return a * FieldElement(a.K_, std::move(inv));
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // -1, 0, +1; exact. Zero iff all coefficients are zero.
    int sign() const {
        if (is_zero()) return 0;
        if (is_rational()) return sgn(c_[0]);
        Interval X = K_->enclosure();
        for (int rounds = 0; rounds < 2048; ++rounds) {
            Interval e = iv_eval(c_, X);
            if (e.lo > 0) return 1;
            if (e.hi < 0) return -1;
            K_->bisect(X, 64);
        }
        throw std::logic_error("sign determination did not converge");
    }

    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const FieldElement& a, const FieldElement& b) {
        return (a - b).sign() <= 0;
    }
    friend bool operator>(const FieldElement& a, const FieldElement& b) {
        return (a - b).sign() > 0;
    }
    friend bool operator>=(const FieldElement& a, const FieldElement& b) {
        return (a - b).sign() >= 0;
    }

    // Unique n with n <= value < n+1. Exact at integer boundaries: a rational
    // value takes the exact branch, an irrational one can never equal an
    // integer, so refinement separates it from every integer.
    Int floor() const {
        if (is_rational()) return rat_floor(as_rational());
        Interval X = K_->enclosure();
        for (int rounds = 0; rounds < 2048; ++rounds) {
            Interval e = iv_eval(c_, X);
            Int flo = rat_floor(e.lo), fhi = rat_floor(e.hi);
            if (flo == fhi) return flo;
            K_->bisect(X, 64);
        }
        throw std::logic_error("floor determination did not converge");
    }

    Int ceil() const { return -((-*this).floor()); }

    // Decimal string with `digits` fractional digits, correctly rounded
    // (ties toward +inf).
    std::string approx(int digits) const {
        if (digits < 1) throw std::invalid_argument("approx: digits must be >= 1");
        Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
        Int n;
        if (is_rational()) {
            n = rat_round_half_up(as_rational() * Rat(scale));
        } else {
            Interval X = K_->enclosure();
            bool done = false;
            for (int rounds = 0; rounds < 2048 && !done; ++rounds) {
                Interval e = iv_eval(c_, X);
                Int nlo = rat_round_half_up(e.lo * Rat(scale));
                Int nhi = rat_round_half_up(e.hi * Rat(scale));
                if (nlo == nhi) {
                    n = nlo;
                    done = true;
                } else {
                    K_->bisect(X, 64);
                }
            }
            if (!done) throw std::logic_error("approx did not converge");
        }
        bool neg = n < 0;
        Int a = abs(n);
        Int ip = a / scale, fp = a % scale;
        std::string frac = fp.get_str();
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        return (neg ? "-" : "") + ip.get_str() + "." + frac;
    }

private:
    void check_same(const FieldElement& o) const {
        if (K_.get() != o.K_.get()) throw std::logic_error("elements of different fields");
    }

    void reduce() {
        const IntPoly& m = K_->minpoly_;
        std::size_t d = static_cast<std::size_t>(K_->degree());
        Rat lead(m[d]);
        for (std::size_t i = c_.size(); i-- > d;) {
            Rat c = c_[i];
            if (c == 0) continue;
            c_[i] = 0;
            for (std::size_t j = 0; j < d; ++j) c_[i - d + j] -= c * Rat(m[j]) / lead;
        }
        c_.resize(d);
    }

    FieldPtr K_;
    RatPoly c_;
};

inline FieldElement AlgebraicReal::element(RatPoly coeffs) const {
    return FieldElement(shared_from_this(), std::move(coeffs));
}

inline FieldElement AlgebraicReal::rational(const Rat& q) const {
    return FieldElement(shared_from_this(), RatPoly{q});
}

inline FieldElement AlgebraicReal::beta() const {
    if (degree_ == 1) return rational(rational_root());
    RatPoly c(2, Rat(0));
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

// The pair (-beta, l): beta > 1 and l in (-1, 0].
struct Base {
    FieldPtr field;
    FieldElement l;

    FieldElement beta() const { return field->beta(); }
    FieldElement rational(const Rat& q) const { return field->rational(q); }
    FieldElement zero() const { return field->rational(Rat(0)); }
    FieldElement one() const { return field->rational(Rat(1)); }
    FieldElement l_plus_1() const { return l + one(); }
};

inline Base make_base(const IntPoly& minpoly, const Rat& iso_lo, const Rat& iso_hi,
                      RatPoly l_coeffs) {
    auto K = AlgebraicReal::isolate(minpoly, iso_lo, iso_hi);
    FieldElement one = K->rational(Rat(1));
    if ((K->beta() - one).sign() <= 0) throw BetaNotGreaterThanOneError("base requires beta > 1");
    if (static_cast<int>(l_coeffs.size()) > K->degree())
        throw ParseError("l has more coefficients than the field degree");
    FieldElement l = K->element(std::move(l_coeffs));
    if (!(l.sign() <= 0 && (l + one).sign() > 0))
        throw EndpointOutOfRangeError("l must lie in (-1, 0]");
    return Base{K, l};
}

}  // namespace negabeta

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <utility>

#include "negabeta/errors.hpp"

namespace negabeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// n with n <= q < n+1.
inline Int rat_floor(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// Nearest integer, ties toward +inf.
inline Int rat_round_half_up(const Rat& q) {
    return rat_floor(q + Rat(1, 2));
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_abs(const Rat& q) {
    return q < 0 ? Rat(-q) : q;
}

// Accepts "p" or "p/q" with optional leading minus on p.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    std::size_t i = 0;
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t j = from; j < to; ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
        return true;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(i, s.size())) throw ParseError("bad rational: " + s);
    } else {
        if (!digits_ok(i, slash) || !digits_ok(slash + 1, s.size()))
            throw ParseError("bad rational: " + s);
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// Canonical "p/q" form, denominator always explicit.
inline std::string format_rat(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// "-12.034" -> -12034/1000; plain integers allowed.
inline Rat parse_rat_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty decimal");
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s, 10), 1);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Int den = int_pow(Int(10), static_cast<unsigned long>(s.size() - dot - 1));
    Rat q(Int(digits, 10), den);
    q.canonicalize();
    return q;
}

}  // namespace negabeta

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negabeta/polynomial.hpp"

using namespace negabeta;

static IntPoly ip(std::initializer_list<long> cs) {
    IntPoly p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

TEST_CASE("evaluation and degree") {
    IntPoly f = ip({-1, 0, 1});  // x^2 - 1
    CHECK(poly_degree(f) == 2);
    CHECK(poly_eval(f, Rat(3)) == Rat(8));
    CHECK(poly_eval(f, Rat(1, 2)) == Rat(-3, 4));
}

TEST_CASE("divmod is exact") {
    RatPoly num = to_rat_poly(ip({-1, 0, 1}));  // x^2 - 1
    RatPoly den = to_rat_poly(ip({-1, 1}));     // x - 1
    auto [q, r] = poly_divmod(num, den);
    CHECK(q == to_rat_poly(ip({1, 1})));
    CHECK(poly_degree(r) < 0);

    auto [q2, r2] = poly_divmod(to_rat_poly(ip({1, 0, 0, 1})), to_rat_poly(ip({1, 1})));
    CHECK(poly_degree(r2) < 0);  // x^3+1 = (x+1)(x^2-x+1)
    CHECK(q2 == to_rat_poly(ip({1, -1, 1})));
}

TEST_CASE("sturm root counting") {
    IntPoly f = ip({-2, 0, 1});  // x^2 - 2
    CHECK(count_roots_in(f, Rat(1), Rat(2)) == 1);
    CHECK(count_roots_in(f, Rat(-2), Rat(2)) == 2);
    CHECK(count_roots_in(f, Rat(5), Rat(6)) == 0);

    IntPoly g = ip({-2, -4, -3, 1});  // x^3 - 3x^2 - 4x - 2, one real root near 4.1
    CHECK(count_roots_in(g, Rat(4), Rat(5)) == 1);
    CHECK(count_roots_in(g, Rat(-10), Rat(10)) == 1);
}

TEST_CASE("primitive part and sign normalization") {
    CHECK(poly_primitive(ip({-4, 2})) == ip({-2, 1}));
    CHECK(poly_primitive(ip({4, -2})) == ip({-2, 1}));
    CHECK(poly_primitive(ip({0, 0, -6, -3})) == ip({0, 0, 2, 1}));
}

TEST_CASE("inverse mod minimal polynomial") {
    // 1/x mod x^2-2 is x/2
    RatPoly inv = poly_inverse_mod(to_rat_poly(ip({0, 1})), to_rat_poly(ip({-2, 0, 1})));
    CHECK(inv == RatPoly{Rat(0), Rat(1, 2)});
}

TEST_CASE("divisors") {
    auto d = detail::divisors_of(Int(12));
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<Int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("irreducibility over Q") {
    CHECK(poly_irreducible_over_Q(ip({-2, 1})));          // x - 2
    CHECK(poly_irreducible_over_Q(ip({-1, -2, 1})));      // x^2 - 2x - 1
    CHECK(poly_irreducible_over_Q(ip({-2, -4, -3, 1})));  // x^3 - 3x^2 - 4x - 2
    CHECK(poly_irreducible_over_Q(ip({1, 0, -4, 1})));    // x^3 - 4x^2 + 1
    CHECK(poly_irreducible_over_Q(ip({-1, -1, 1})));      // x^2 - x - 1
    CHECK(poly_irreducible_over_Q(ip({1, 0, 0, 0, 1})));  // x^4 + 1 (reducible mod every p)
    CHECK(poly_irreducible_over_Q(ip({1, 1, 1, 1, 1})));  // 5th cyclotomic

    CHECK_FALSE(poly_irreducible_over_Q(ip({-1, 0, 1})));         // (x-1)(x+1)
    CHECK_FALSE(poly_irreducible_over_Q(ip({-4, 0, 1})));         // (x-2)(x+2)
    CHECK_FALSE(poly_irreducible_over_Q(ip({-4, 0, 0, 0, 1})));   // (x^2-2)(x^2+2)
    CHECK_FALSE(poly_irreducible_over_Q(ip({0, -1, 0, 1})));      // x(x^2-1)
    CHECK_FALSE(poly_irreducible_over_Q(ip({1, 2, 3, 2, 1})));    // (x^2+x+1)^2
    CHECK_FALSE(poly_irreducible_over_Q(ip({6, -5, 1})));         // (x-2)(x-3)
}

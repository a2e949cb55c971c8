#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negabeta/word_coding.hpp"

// Invariant sweep over a catalog of bases: every base either yields exact
// reference strings (and then the whole pipeline must hold together) or is
// refused honestly.

using namespace negabeta;

static IntPoly ip(std::initializer_list<long> cs) {
    IntPoly p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

namespace {

struct Entry {
    IntPoly poly;
    Rat lo, hi;
    RatPoly l;
};

std::vector<Entry> catalog() {
    std::vector<Entry> out;
    // quadratic and cubic Pisot bases with assorted endpoints
    out.push_back({ip({-1, -2, 1}), Rat(2), Rat(3), {Rat(-1, 2)}});
    out.push_back({ip({-1, -2, 1}), Rat(2), Rat(3), {Rat(0)}});
    out.push_back({ip({-1, -2, 1}), Rat(2), Rat(3), {Rat(1, 2), Rat(-1, 2)}});   // -beta/(beta+1)
    out.push_back({ip({-1, -2, 1}), Rat(2), Rat(3), {Rat(-3, 2), Rat(1, 2)}});   // -1/(beta+1)
    out.push_back({ip({-1, -2, 1}), Rat(2), Rat(3), {Rat(-2, 3)}});
    out.push_back({ip({-1, -1, 1}), Rat(1), Rat(2), {Rat(1), Rat(-1)}});
    out.push_back({ip({-1, -1, 1}), Rat(1), Rat(2), {Rat(-1, 2)}});              // trivial
    out.push_back({ip({-1, -3, 1}), Rat(3), Rat(4), {Rat(-1, 2)}});              // x^2-3x-1
    out.push_back({ip({1, -3, 1}), Rat(2), Rat(3), {Rat(-1, 5), Rat(-1, 5)}});   // x^2-3x+1 IS
    out.push_back({ip({-2, -4, -3, 1}), Rat(4), Rat(5), {Rat(-1, 2)}});
    out.push_back({ip({-2, -4, -3, 1}), Rat(4), Rat(5), {Rat(-1, 4)}});
    out.push_back({ip({-2, -4, -3, 1}), Rat(4), Rat(5), {Rat(-3, 4)}});
    out.push_back({ip({1, 0, -4, 1}), Rat(3), Rat(4), {Rat(-1, 2)}});
    out.push_back({ip({-1, -1, -1, 1}), Rat(1), Rat(2), {Rat(-9, 20)}});         // tribonacci
    out.push_back({ip({-1, -1, -1, -1, 1}), Rat(1), Rat(2), {Rat(1), Rat(-1), Rat(2), Rat(-1)}});
    // integer bases
    out.push_back({ip({-2, 1}), Rat(1), Rat(3), {Rat(-1, 2)}});
    out.push_back({ip({-3, 1}), Rat(2), Rat(4), {Rat(-3, 4)}});
    out.push_back({ip({-4, 1}), Rat(3), Rat(5), {Rat(-2, 5)}});
    // rational and non-Pisot bases: aperiodic references expected
    out.push_back({ip({-5, 2}), Rat(2), Rat(3), {Rat(-1, 2)}});
    out.push_back({ip({-2, 0, 1}), Rat(1), Rat(2), {Rat(-1, 2)}});               // sqrt(2)
    out.push_back({ip({-3, 0, 1}), Rat(1), Rat(2), {Rat(-1, 2)}});               // sqrt(3)
    return out;
}

}  // namespace

TEST_CASE("catalog sweep: exact results or honest refusal") {
    for (const auto& e : catalog()) {
        CAPTURE(to_text(DigitString{{static_cast<int>(e.poly.size())}}));
        Base b = make_base(e.poly, e.lo, e.hi, e.l);
        auto w = endpoint_window(b);
        CHECK(w.zero_digit);  // guaranteed by the Base invariant
        Alphabet a = alphabet(b);
        CHECK(a.lo <= 0);
        CHECK(0 <= a.hi);

        auto dl = ref_string_l(b, 400);
        auto dr = ref_string_r(b, 400);
        if (!dl.periodic() || !dr.periodic()) {
            // refusal path: decisions that need exact references throw
            CHECK_THROWS_AS(reference_strings(b, 400), RefsNotPeriodicError);
            continue;
        }
        ReferenceStrings refs{dl.string, dr.string};

        // d(l) is the alternate-order least admissible string
        CHECK(is_admissible(refs.lower, refs));
        CHECK_FALSE(is_admissible(refs.upper, refs));

        // S(k) nests as sets of infinite strings: sizes never decrease
        std::size_t prev = 1;
        for (int k = 1; k <= 4; ++k) {
            auto sk = enumerate_S(b, k, refs);
            CHECK(sk.size() >= prev);
            prev = sk.size();
            auto mm = minmax(b, k, refs);
            // extremes belong to S(k)
            bool has_min = false, has_max = false;
            for (const auto& s : sk) {
                has_min = has_min || s == mm.min_k;
                has_max = has_max || s == mm.max_k;
            }
            CHECK(has_min);
            CHECK(has_max);
            CHECK(delta(b, k, refs).sign() > 0);
        }

        // window pipeline under the section restriction on l
        FieldElement bp1 = b.beta() + b.one();
        bool restricted = ((b.l + b.beta() / bp1).sign() >= 0) &&
                          ((b.l + b.one() / bp1).sign() <= 0);
        if (!restricted) {
            CHECK_THROWS_AS(zbeta_window(b, b.rational(Rat(4)), refs),
                            EndpointOutsideRestrictionError);
            continue;
        }
        auto win = zbeta_window(b, b.rational(Rat(5)), refs);
        CHECK(is_trivial(b) == (win.points.size() == 1));
        auto word = code_word(win, b, refs, window_length_budget(b, b.rational(Rat(5))) + 1);
        CHECK(word.gaps.size() + 1 == win.points.size());
        if (win.points.size() > 1) {
            auto table = extract_antimorphism(b, refs, 2);
            for (const auto& [k, img] : table.images) {
                CHECK(!img.empty());
                CHECK(std::count(img.begin(), img.end(), k + 1) == 1);
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negabeta/word_coding.hpp"

using namespace negabeta;

static IntPoly ip(std::initializer_list<long> cs) {
    IntPoly p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

static Base cubic_half() {
    return make_base(ip({-2, -4, -3, 1}), Rat(4), Rat(5), {Rat(-1, 2)});
}
static Base two_half() {
    return make_base(ip({-2, 1}), Rat(1), Rat(3), {Rat(-1, 2)});
}

static std::vector<int> iv(std::initializer_list<int> v) {
    return std::vector<int>(v);
}

TEST_CASE("code_word labels every gap and anchors the origin") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto win = zbeta_window(b, b.rational(Rat(10)), refs);
    auto word = code_word(win, b, refs, 8);
    REQUIRE(word.gaps.size() == win.points.size() - 1);
    CHECK(word.letter_at(0) == 0);  // the gap (0, 1) has factorization w=0, d=1, k=0

    // gap-length fidelity: the letter's Delta reproduces the exact gap
    std::vector<FieldElement> deltas;
    for (int k = 0; k <= 10; ++k) deltas.push_back(delta(b, k, refs));
    for (std::size_t i = 0; i + 1 < win.points.size(); ++i) {
        FieldElement gap = win.points[i + 1].value - win.points[i].value;
        int letter = word.gaps[i].letter;
        REQUIRE(letter <= 10);
        CHECK(deltas[static_cast<std::size_t>(letter)] == gap);
        // and the recorded delta matches contain the letter
        bool dm = false;
        for (int c : word.gaps[i].delta_matches) dm = dm || c == letter;
        CHECK(dm);
    }
}

TEST_CASE("code_word on a trivial window is empty") {
    Base g = make_base(ip({-1, -1, 1}), Rat(1), Rat(2), {Rat(-1, 2)});
    auto refs = reference_strings(g, 100);
    auto win = zbeta_window(g, g.rational(Rat(3)), refs);
    auto word = code_word(win, g, refs, 4);
    CHECK(word.empty());
}

TEST_CASE("gap with no structural factorization is reported") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    ZbetaWindow fake;
    fake.points.push_back({b.zero(), DigitString{}});
    fake.points.push_back({b.one(), DigitString{{-1}}});  // inconsistent word
    fake.lo = b.zero();
    fake.hi = b.one();
    CHECK_THROWS_AS(code_word(fake, b, refs, 6), UnlabeledGapError);
}

TEST_CASE("antimorphism of the closing example") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 9);
    CHECK(table.is_antimorphism);
    CHECK(table.images.at(0) == iv({0, 0, 1, 0, 0}));
    CHECK(table.images.at(1) == iv({2}));
    CHECK(table.images.at(2) == iv({3}));
    for (int k = 1; 2 * k + 1 <= 9; ++k)
        CHECK(table.images.at(2 * k + 1) == iv({0, 0, 1, 0, 2 * k + 2, 0, 1, 0, 0}));
    for (int k = 1; 2 * k + 2 <= 9; ++k) CHECK(table.images.at(2 * k + 2) == iv({2 * k + 3}));

    // R/S side words: Phi(0) = S_0 (1) reverse(R_0) with S_0 = R_0 = 00
    CHECK(table.rs_words.at(0).first == iv({0, 0}));
    CHECK(table.rs_words.at(0).second == iv({0, 0}));
    CHECK(table.rs_words.at(1).first.empty());
    CHECK(table.rs_words.at(1).second.empty());

    // images are nonempty and contain the successor letter exactly once
    for (const auto& [k, img] : table.images) {
        CHECK(!img.empty());
        CHECK(std::count(img.begin(), img.end(), k + 1) == 1);
    }

    // the recorded side words recompose the image:
    // even k: S (k+1) reverse(R); odd k: R (k+1) reverse(S)
    for (const auto& [k, rs] : table.rs_words) {
        const auto& [R, S] = rs;
        std::vector<int> probe = (k % 2 == 0) ? S : R;
        probe.push_back(k + 1);
        std::vector<int> tailsrc = (k % 2 == 0) ? R : S;
        probe.insert(probe.end(), tailsrc.rbegin(), tailsrc.rend());
        CHECK(probe == table.images.at(k));
    }
}

TEST_CASE("fixed point verification on the closing example") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 6);
    auto win = zbeta_window(b, b.rational(Rat(120)), refs);
    auto word = code_word(win, b, refs, 8);
    CHECK(verify_fixed_point(word, table, 50));

    // a corrupted image letter breaks the fixed point
    auto bad = table;
    bad.images.at(0)[2] = 0;  // 00100 -> 00000
    CHECK_FALSE(verify_fixed_point(word, bad, 50));

    // horizon beyond the covered window is refused
    auto small = zbeta_window(b, b.rational(Rat(3)), refs);
    auto short_word = code_word(small, b, refs, 8);
    CHECK_THROWS_AS(verify_fixed_point(short_word, table, 200), HorizonTooShortError);
}

TEST_CASE("one application of Phi maps the right ray onto the left ray") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 6);
    auto win = zbeta_window(b, b.rational(Rat(60)), refs);
    auto word = code_word(win, b, refs, 8);
    for (int m = 1; m <= 5; ++m) {
        std::vector<int> factor;
        for (int i = 0; i < m; ++i) factor.push_back(word.letter_at(i));
        auto img = apply_antimorphism(table, factor);
        REQUIRE(static_cast<std::ptrdiff_t>(img.size()) <= -word.min_index());
        for (std::size_t i = 0; i < img.size(); ++i) {
            std::ptrdiff_t pos = -static_cast<std::ptrdiff_t>(img.size()) +
                                 static_cast<std::ptrdiff_t>(i);
            CHECK(img[i] == word.letter_at(pos));
        }
    }
    // antimorphism law on factors
    std::vector<int> u = {word.letter_at(0), word.letter_at(1)};
    std::vector<int> v = {word.letter_at(2)};
    std::vector<int> uv = u;
    uv.push_back(v[0]);
    auto lhs = apply_antimorphism(table, uv);
    auto rhs = apply_antimorphism(table, v);
    auto ru = apply_antimorphism(table, u);
    rhs.insert(rhs.end(), ru.begin(), ru.end());
    CHECK(lhs == rhs);
}

TEST_CASE("Psi is non-erasing and non-identical") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 5);
    bool nontrivial = false;
    for (const auto& [k, img] : table.images) {
        CHECK(!img.empty());  // Phi non-erasing, hence so is Psi
        bool closed = true;
        for (int c : img) closed = closed && table.images.count(c);
        if (!closed) continue;
        auto sq = apply_square(table, {k});
        CHECK(!sq.empty());
        if (sq != std::vector<int>{k}) nontrivial = true;
    }
    CHECK(nontrivial);
}

TEST_CASE("projection of the closing example onto {0,1,2,3}") {
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 9);
    auto win = zbeta_window(b, b.rational(Rat(30)), refs);
    auto word = code_word(win, b, refs, 11);
    auto proj = project_finite(b, refs, table, word);
    REQUIRE(proj.has_value());
    CHECK(proj->target_alphabet == iv({0, 1, 2, 3}));
    CHECK(proj->phi.images.at(0) == iv({0, 0, 1, 0, 0}));
    CHECK(proj->phi.images.at(1) == iv({2}));
    CHECK(proj->phi.images.at(2) == iv({3}));
    CHECK(proj->phi.images.at(3) == iv({0, 0, 1, 0, 2, 0, 1, 0, 0}));
    // every even letter >= 2 collapses to 2, odd >= 3 to 3
    CHECK(proj->map.at(4) == 2);
    CHECK(proj->map.at(6) == 2);
    CHECK(proj->map.at(5) == 3);
    CHECK(proj->map.at(9) == 3);

    // soundness: projection commutes with the table and the projected square
    // fixes the projected word
    for (const auto& [k, img] : table.images) {
        std::vector<int> a;
        for (int c : img) a.push_back(proj->map.at(c));
        CHECK(a == proj->phi.images.at(proj->map.at(k)));
    }
    GapWord pw = word;
    for (auto& g : pw.gaps) g.letter = proj->map.at(g.letter);
    CHECK(verify_fixed_point(pw, proj->phi, 30));
}

TEST_CASE("integer base: images exist and the projected word is constant") {
    Base b = two_half();
    auto refs = reference_strings(b, 50);
    auto table = extract_antimorphism(b, refs, 3);
    for (const auto& [k, img] : table.images) {
        CHECK(!img.empty());
        CHECK(std::count(img.begin(), img.end(), k + 1) == 1);
    }
    auto win = zbeta_window(b, b.rational(Rat(12)), refs);
    auto word = code_word(win, b, refs, 8);
    // all Delta_k = 1, so the Delta classes collapse to a single letter
    auto proj = project_finite(b, refs, table, word);
    REQUIRE(proj.has_value());
    CHECK(proj->target_alphabet == iv({0}));
    for (const auto& g : word.gaps) CHECK(proj->map.at(g.letter) == 0);
    GapWord pw = word;
    for (auto& g : pw.gaps) g.letter = 0;
    CHECK(verify_fixed_point(pw, proj->phi, 8));
}

TEST_CASE("golden-ratio Ito-Sadahiro base projects onto two letters") {
    // letters beyond the extraction budget occur in the window word; they sit
    // in Delta classes that already contain imaged letters, so the projection
    // must still be found
    Base g = make_base(ip({-1, -1, 1}), Rat(1), Rat(2), {Rat(1), Rat(-1)});
    auto refs = reference_strings(g, 100);
    auto table = extract_antimorphism(g, refs, 5);
    CHECK(table.images.at(0) == iv({0, 1}));
    CHECK(table.images.at(1) == iv({2}));
    auto win = zbeta_window(g, g.rational(Rat(30)), refs);
    auto word = code_word(win, g, refs, window_length_budget(g, g.rational(Rat(30))) + 1);
    auto proj = project_finite(g, refs, table, word);
    REQUIRE(proj.has_value());
    CHECK(proj->target_alphabet == iv({0, 1}));
    CHECK(proj->phi.images.at(0) == iv({0, 1}));
    CHECK(proj->phi.images.at(1) == iv({0}));
    CHECK(verify_fixed_point(word, table, 8));

    // a tiny letter budget must not break the internal validation window,
    // whose own gap letters exceed it
    auto small = extract_antimorphism(g, refs, 1);
    CHECK(small.images.at(0) == iv({0, 1}));
    CHECK(small.images.at(1) == iv({2}));
}

TEST_CASE("letters never realized are reported") {
    // trivial base: the window is {0}, no gap ever occurs
    Base g = make_base(ip({-1, -1, 1}), Rat(1), Rat(2), {Rat(-1, 2)});
    auto refs = reference_strings(g, 100);
    CHECK_THROWS_AS(extract_antimorphism(g, refs, 0), GapNotRealizedError);
}

TEST_CASE("degree-4 Pisot base runs the whole pipeline") {
    // beta ~ 1.9276, root of x^4 - x^3 - x^2 - x - 1, l = -beta/(beta+1)
    Base b = make_base(ip({-1, -1, -1, -1, 1}), Rat(1), Rat(2),
                       {Rat(1), Rat(-1), Rat(2), Rat(-1)});
    auto w = endpoint_window(b);
    CHECK(w.renyi_alphabet);
    auto refs = reference_strings(b, 100);
    CHECK(to_text(refs.lower) == "1,0,1|0");
    CHECK(to_text(refs.upper) == "0,1,0,1|0");  // r = 0 d(l)
    auto table = extract_antimorphism(b, refs, 8);
    CHECK(table.images.at(0) == iv({0, 1}));
    CHECK(table.images.at(3) == iv({4}));
    auto win = zbeta_window(b, b.rational(Rat(25)), refs);
    auto word = code_word(win, b, refs, window_length_budget(b, b.rational(Rat(25))) + 1);
    CHECK(verify_fixed_point(word, table, 12));
    auto proj = project_finite(b, refs, table, word);
    REQUIRE(proj.has_value());
    CHECK(proj->target_alphabet == iv({0, 1, 2, 3}));
    CHECK(proj->phi.images.at(3) == iv({0}));
}

TEST_CASE("projection is refused when the table cannot close") {
    // with images only up to letter 2, letter 3 of the cubic base has a gap
    // length shared by no imaged letter, so no finite projection exists
    Base b = cubic_half();
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 2);
    auto win = zbeta_window(b, b.rational(Rat(8)), refs);
    auto word = code_word(win, b, refs, 6);
    CHECK_FALSE(project_finite(b, refs, table, word).has_value());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negabeta/serialize.hpp"

using namespace negabeta;

static IntPoly ip(std::initializer_list<long> cs) {
    IntPoly p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

TEST_CASE("rational text formats") {
    CHECK(format_rat(parse_rat("3")) == "3/1");
    CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/2/3"), ParseError);
    CHECK(parse_rat_decimal("-12.034") == parse_rat("-6017/500"));
    CHECK(parse_rat_decimal("4.1") == parse_rat("41/10"));
}

TEST_CASE("base record round-trips through JSON") {
    Base b = make_base(ip({-2, -4, -3, 1}), Rat(4), Rat(5), {Rat(-1, 2)});
    Json j = base_to_json(b);
    CHECK(j.at("l").at(0).get<std::string>() == "-1/2");
    Base c = base_from_json(j);
    CHECK(c.field->minpoly() == b.field->minpoly());
    CHECK(c.l.coeffs() == b.l.coeffs());
    CHECK(c.field->iso_interval() == b.field->iso_interval());
}

TEST_CASE("digit string text round-trips") {
    for (const char* s : {"2,0|1", "|0", "-2,0|-1", "1,2,0|0", "|0,1"}) {
        auto e = eps_from_text(s);
        CHECK(eps_from_text(to_text(e)) == e);
    }
    // canonical form is produced even from redundant input
    CHECK(to_text(eps_from_text("2,0,1|1,1")) == "2,0|1");
    CHECK(to_text(digits_from_text("1,-2,0")) == "1,-2,0");
    CHECK_THROWS_AS(digits_from_text("1,x"), ParseError);
    CHECK_THROWS_AS(eps_from_text("1|"), ParseError);
}

TEST_CASE("overline rendering") {
    auto e = eps_from_text("-2,0|-1");
    CHECK(to_text(e, true) == "~2,0|~1");
    CHECK(to_text(e, false) == "-2,0|-1");
}

TEST_CASE("morphism and window records") {
    Base b = make_base(ip({-2, -4, -3, 1}), Rat(4), Rat(5), {Rat(-1, 2)});
    auto refs = reference_strings(b, 100);
    auto table = extract_antimorphism(b, refs, 3);
    Json j = morphism_to_json(table);
    CHECK(j.at("antimorphism").get<bool>());
    CHECK(j.at("images").at("1") == Json::array({2}));
    CHECK(j.at("rs_words").at("0").at("S") == Json::array({0, 0}));

    auto win = zbeta_window(b, b.rational(Rat(4)), refs);
    auto word = code_word(win, b, refs, 6);
    Json rec = window_point_to_json(win, word, 0);
    CHECK(rec.contains("value_exact"));
    CHECK(rec.contains("gap_to_next_exact"));
    CHECK(rec.contains("gap_label_k"));
    // the exact gap re-parses to the difference of adjacent points
    RatPoly coeffs;
    for (const auto& c : rec.at("gap_to_next_exact")) coeffs.push_back(parse_rat(c.get<std::string>()));
    FieldElement gap = b.field->element(coeffs);
    CHECK(gap == win.points[1].value - win.points[0].value);
}

#pragma once

// JSON and text serialization shared by the CLI and tests. Rationals are
// written as "p/q" strings; digit strings use the "pre|period" text format;
// negative digits are plain negative integers (--overline rendering is
// display-only).

#include <json.hpp>

#include "negabeta/word_coding.hpp"

namespace negabeta {

using Json = nlohmann::ordered_json;

inline Json rat_to_json(const Rat& q) {
    return format_rat(q);
}

inline Json coeffs_to_json(const RatPoly& c) {
    Json a = Json::array();
    for (const auto& q : c) a.push_back(format_rat(q));
    return a;
}

inline Json base_to_json(const Base& b) {
    Json j;
    Json mp = Json::array();
    for (const auto& c : b.field->minpoly()) {
        if (c.fits_slong_p())
            mp.push_back(c.get_si());
        else
            mp.push_back(c.get_str());
    }
    j["minpoly"] = mp;
    auto iso = b.field->iso_interval();
    j["iso"] = Json::array({format_rat(iso.first), format_rat(iso.second)});
    j["l"] = coeffs_to_json(b.l.coeffs());
    return j;
}

inline Base base_from_json(const Json& j) {
    IntPoly mp;
    for (const auto& c : j.at("minpoly")) {
        if (c.is_number_integer())
            mp.emplace_back(static_cast<long>(c.get<long long>()));
        else
            mp.emplace_back(c.get<std::string>(), 10);
    }
    RatPoly l;
    for (const auto& c : j.at("l")) l.push_back(parse_rat(c.get<std::string>()));
    return make_base(mp, parse_rat(j.at("iso").at(0).get<std::string>()),
                     parse_rat(j.at("iso").at(1).get<std::string>()), std::move(l));
}

// "~a" rendering of negative digits when overline display is requested
inline std::string digit_text(int d, bool overline) {
    if (overline && d < 0) return "~" + std::to_string(-d);
    return std::to_string(d);
}

inline std::string to_text(const DigitString& w, bool overline) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += digit_text(w[i], overline);
    }
    return out;
}

inline std::string to_text(const EventuallyPeriodicString& s, bool overline) {
    return to_text(s.preperiod, overline) + "|" + to_text(s.period, overline);
}

inline Json digits_to_json(const DigitString& w) {
    Json a = Json::array();
    for (int d : w.digits) a.push_back(d);
    return a;
}

inline Json expansion_to_json(const ExpansionOutcome& out) {
    Json j;
    if (out.periodic()) {
        j["kind"] = "periodic";
        j["preperiod"] = digits_to_json(out.string.preperiod);
        j["period"] = digits_to_json(out.string.period);
        j["string"] = to_text(out.string);
    } else {
        j["kind"] = "prefix_only";
        j["digits"] = digits_to_json(out.prefix);
        j["string"] = to_text(out.prefix);
    }
    j["iterations_used"] = out.iterations_used;
    return j;
}

// one record per point, suitable for JSON-lines export
inline Json window_point_to_json(const ZbetaWindow& win, const GapWord& word, std::size_t i,
                                 int approx_digits = 8) {
    const ZbetaPoint& p = win.points[i];
    Json j;
    j["value_exact"] = coeffs_to_json(p.value.coeffs());
    j["value_approx"] = p.value.approx(approx_digits);
    j["word"] = to_text(p.word);
    if (i + 1 < win.points.size()) {
        FieldElement gap = win.points[i + 1].value - p.value;
        j["gap_to_next_exact"] = coeffs_to_json(gap.coeffs());
        j["gap_label_k"] = word.gaps[i].letter;
        Json cand = Json::array();
        for (int c : word.gaps[i].delta_matches) cand.push_back(c);
        j["gap_label_candidates"] = cand;
    }
    return j;
}

inline Json morphism_to_json(const MorphismTable& t) {
    Json j;
    j["antimorphism"] = t.is_antimorphism;
    Json imgs = Json::object();
    for (const auto& [k, img] : t.images) {
        Json a = Json::array();
        for (int c : img) a.push_back(c);
        imgs[std::to_string(k)] = a;
    }
    j["images"] = imgs;
    Json rs = Json::object();
    for (const auto& [k, pair] : t.rs_words) {
        Json r = Json::array(), s = Json::array();
        for (int c : pair.first) r.push_back(c);
        for (int c : pair.second) s.push_back(c);
        rs[std::to_string(k)] = Json::object({{"R", r}, {"S", s}});
    }
    j["rs_words"] = rs;
    return j;
}

inline Json projection_to_json(const Projection& p) {
    Json j;
    Json alpha = Json::array();
    for (int a : p.target_alphabet) alpha.push_back(a);
    j["target_alphabet"] = alpha;
    Json m = Json::object();
    for (const auto& [k, r] : p.map) m[std::to_string(k)] = r;
    j["map"] = m;
    j["phi"] = morphism_to_json(p.phi);
    return j;
}

}  // namespace negabeta

// negabeta: exact (-beta)-numeration toolkit.
//
// A base is the pair (-beta, l): beta > 1 is a real algebraic number given by
// an integer minimal polynomial (--minpoly, constant term first) and an
// isolating rational interval (--iso), and l in (-1, 0] is an element of
// Q(beta) given by rational coefficients (--l). All computation is exact.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "negabeta/negabeta.hpp"

namespace nb = negabeta;

namespace {

struct Options {
    std::string minpoly, iso, l, base_file;
    std::string format = "text";
    int max_iter = 200;
    std::string bound = "8";
    int letter_budget = 6;
    int horizon = 20;
    bool overline = false;
};

nb::IntPoly parse_int_list(const std::string& s) {
    nb::IntPoly out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw nb::ParseError("empty integer in list: " + s);
        try {
            out.emplace_back(tok, 10);
        } catch (const std::exception&) {
            throw nb::ParseError("bad integer: '" + tok + "'");
        }
    }
    if (out.empty()) throw nb::ParseError("empty integer list");
    return out;
}

nb::RatPoly parse_rat_list(const std::string& s) {
    nb::RatPoly out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(nb::parse_rat(tok));
    if (out.empty()) throw nb::ParseError("empty rational list");
    return out;
}

std::pair<int, int> parse_k_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(s);
            return {k, k};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw nb::ParseError("bad k range: '" + s + "' (use K or A..B)");
    }
}

nb::Base build_base(const Options& o) {
    if (!o.base_file.empty()) {
        std::ifstream in(o.base_file);
        if (!in) throw nb::ParseError("cannot open base file: " + o.base_file);
        nb::Json j = nb::Json::parse(in, nullptr, true);
        return nb::base_from_json(j);
    }
    if (o.minpoly.empty() || o.iso.empty() || o.l.empty())
        throw nb::ParseError("base requires --minpoly, --iso and --l (or --base FILE)");
    nb::RatPoly iso = parse_rat_list(o.iso);
    if (iso.size() != 2) throw nb::ParseError("--iso needs exactly two rationals lo,hi");
    return nb::make_base(parse_int_list(o.minpoly), iso[0], iso[1], parse_rat_list(o.l));
}

bool json_mode(const Options& o) {
    if (o.format == "json") return true;
    if (o.format == "text") return false;
    throw nb::ParseError("--format must be text or json");
}

void emit(const Options& o, const nb::Json& j, const std::string& text) {
    if (json_mode(o))
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string expansion_text(const nb::ExpansionOutcome& out, bool overline) {
    if (out.periodic())
        return nb::to_text(out.string, overline) + "  (periodic, " +
               std::to_string(out.iterations_used) + " iterations)";
    return nb::to_text(out.prefix, overline) + "  (prefix only, " +
           std::to_string(out.iterations_used) + " iterations; no exact repeat found)";
}

// ---- subcommand bodies -------------------------------------------------------

int cmd_expand(const Options& o, const std::string& xs) {
    nb::Base b = build_base(o);
    nb::FieldElement x = b.field->element(parse_rat_list(xs));
    auto out = nb::expand(b, x, o.max_iter);
    nb::Json j;
    j["expansion"] = nb::expansion_to_json(out);
    emit(o, j, "d(x) = " + expansion_text(out, o.overline) + "\n");
    return 0;
}

int cmd_refstrings(const Options& o) {
    nb::Base b = build_base(o);
    auto dl = nb::ref_string_l(b, o.max_iter);
    auto dr = nb::ref_string_r(b, o.max_iter);
    nb::Json j;
    j["d_l"] = nb::expansion_to_json(dl);
    j["d_star_l_plus_1"] = nb::expansion_to_json(dr);
    emit(o, j,
         "d(l)      = " + expansion_text(dl, o.overline) + "\n" +
             "d*(l+1)   = " + expansion_text(dr, o.overline) + "\n");
    return 0;
}

int cmd_alphabet(const Options& o) {
    nb::Base b = build_base(o);
    auto a = nb::alphabet(b);
    nb::Json j;
    j["lo"] = a.lo;
    j["hi"] = a.hi;
    emit(o, j, "alphabet = {" + std::to_string(a.lo) + ", ..., " + std::to_string(a.hi) + "}\n");
    return 0;
}

int cmd_window_check(const Options& o) {
    nb::Base b = build_base(o);
    auto w = nb::endpoint_window(b);
    nb::Json j;
    j["zero_digit"] = w.zero_digit;
    j["renyi_alphabet"] = w.renyi_alphabet;
    j["unique_expansions"] = w.unique_expansions;
    std::ostringstream t;
    t << "zero_digit        = " << (w.zero_digit ? "true" : "false") << "\n"
      << "renyi_alphabet    = " << (w.renyi_alphabet ? "true" : "false") << "\n"
      << "unique_expansions = " << (w.unique_expansions ? "true" : "false") << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_admissible(const Options& o, const std::string& str, bool strong) {
    nb::Base b = build_base(o);
    auto refs = nb::reference_strings(b, o.max_iter);
    auto s = nb::eps_from_text(str);
    auto checked = strong ? s.prepended(0) : s;
    auto viol = nb::admissibility_violation(checked, refs);
    nb::Json j;
    j["string"] = nb::to_text(s);
    j["strong"] = strong;
    j["admissible"] = !viol.has_value();
    std::ostringstream t;
    t << (strong ? "strongly admissible: " : "admissible: ") << (viol ? "false" : "true") << "\n";
    if (viol) {
        j["violation"]["shift"] = viol->shift;
        j["violation"]["bound"] = viol->below_lower ? "d(l)" : "d*(l+1)";
        t << "violation at shift " << viol->shift << ": tail "
          << (viol->below_lower ? "<_alt d(l)" : ">=_alt d*(l+1)") << "\n";
    }
    emit(o, j, t.str());
    return viol ? 1 : 0;
}

int cmd_representations(const Options& o, const std::string& xs, int max_k) {
    nb::Base b = build_base(o);
    nb::FieldElement x = b.field->element(parse_rat_list(xs));
    auto rep = nb::representations_of(b, x, max_k, o.max_iter);
    nb::Json j;
    j["valid_k"] = rep.valid_k;
    j["invalid_k"] = rep.invalid_k;
    nb::Json strs = nb::Json::array();
    std::ostringstream t;
    t << "x/(-beta)^k in [l, l+1) for k in {";
    for (std::size_t i = 0; i < rep.valid_k.size(); ++i)
        t << (i ? "," : "") << rep.valid_k[static_cast<std::size_t>(i)];
    t << "}, not for k in {";
    for (std::size_t i = 0; i < rep.invalid_k.size(); ++i)
        t << (i ? "," : "") << rep.invalid_k[static_cast<std::size_t>(i)];
    t << "}\n";
    for (const auto& w : rep.strings) {
        std::string txt = w.empty() ? "0" : nb::to_text(w, o.overline);
        strs.push_back(txt);
        t << txt << " . 0^w\n";
    }
    j["strings"] = strs;
    emit(o, j, t.str());
    return 0;
}

int cmd_zbeta(const Options& o) {
    nb::Base b = build_base(o);
    auto refs = nb::reference_strings(b, o.max_iter);
    nb::FieldElement bound = b.rational(nb::parse_rat(o.bound));
    auto win = nb::zbeta_window(b, bound, refs);
    auto word = nb::code_word(win, b, refs, nb::window_length_budget(b, bound) + 1);
    if (json_mode(o)) {
        // JSON lines: one record per point
        for (std::size_t i = 0; i < win.points.size(); ++i)
            std::cout << nb::window_point_to_json(win, word, i).dump() << "\n";
    } else {
        std::ostringstream t;
        for (std::size_t i = 0; i < win.points.size(); ++i) {
            const auto& p = win.points[i];
            t << p.value.approx(8) << "  = gamma(" << (p.word.empty() ? "0" : nb::to_text(p.word, o.overline))
              << ")";
            if (i + 1 < win.points.size()) t << "   gap k=" << word.gaps[i].letter;
            t << "\n";
        }
        std::cout << t.str();
    }
    return 0;
}

int cmd_distances(const Options& o, const std::string& krange) {
    nb::Base b = build_base(o);
    auto refs = nb::reference_strings(b, o.max_iter);
    auto [klo, khi] = parse_k_range(krange);
    if (klo < 0 || khi < klo) throw nb::ParseError("bad k range");
    nb::Json arr = nb::Json::array();
    std::ostringstream t;
    for (int k = klo; k <= khi; ++k) {
        nb::FieldElement d = nb::delta(b, k, refs);
        nb::Json j;
        j["k"] = k;
        j["exact_coeffs"] = nb::coeffs_to_json(d.coeffs());
        j["approx"] = d.approx(8);
        arr.push_back(j);
        t << "Delta_" << k << " = " << d.approx(8) << "   coeffs [";
        for (std::size_t i = 0; i < d.coeffs().size(); ++i)
            t << (i ? ", " : "") << nb::format_rat(d.coeffs()[i]);
        t << "]\n";
    }
    emit(o, arr, t.str());
    return 0;
}

int cmd_minmax(const Options& o, const std::string& krange) {
    nb::Base b = build_base(o);
    auto refs = nb::reference_strings(b, o.max_iter);
    auto [klo, khi] = parse_k_range(krange);
    if (klo < 0 || khi < klo) throw nb::ParseError("bad k range");
    nb::Json arr = nb::Json::array();
    std::ostringstream t;
    for (int k = klo; k <= khi; ++k) {
        auto mm = nb::minmax(b, k, refs);
        nb::Json j;
        j["k"] = k;
        j["min"] = nb::to_text(mm.min_k);
        j["max"] = nb::to_text(mm.max_k);
        arr.push_back(j);
        t << "min(" << k << ") = \"" << nb::to_text(mm.min_k, o.overline) << "\"   max(" << k
          << ") = \"" << nb::to_text(mm.max_k, o.overline) << "\"\n";
    }
    emit(o, arr, t.str());
    return 0;
}

int cmd_morphism(const Options& o) {
    nb::Base b = build_base(o);
    auto refs = nb::reference_strings(b, o.max_iter);
    auto table = nb::extract_antimorphism(b, refs, o.letter_budget);
    nb::FieldElement bound = b.rational(nb::parse_rat(o.bound));
    auto win = nb::zbeta_window(b, bound, refs);
    int label_budget = std::max(nb::window_length_budget(b, bound) + 1, o.letter_budget + 2);
    auto word = nb::code_word(win, b, refs, label_budget);
    auto proj = nb::project_finite(b, refs, table, word);
    bool fixed = false;
    std::string fixed_note;
    try {
        fixed = nb::verify_fixed_point(word, table, o.horizon);
        fixed_note = fixed ? "verified" : "FAILED";
    } catch (const nb::HorizonTooShortError& e) {
        fixed_note = std::string("not verified: ") + e.what();
    }
    nb::Json j;
    j["phi"] = nb::morphism_to_json(table);
    j["fixed_point_horizon"] = o.horizon;
    j["fixed_point"] = fixed;
    if (proj)
        j["projection"] = nb::projection_to_json(*proj);
    else
        j["projection"] = nullptr;
    std::ostringstream t;
    for (const auto& [k, img] : table.images) {
        t << "Phi(" << k << ") = ";
        for (std::size_t i = 0; i < img.size(); ++i) t << (i ? " " : "") << img[i];
        t << "\n";
    }
    t << "Psi = Phi^2 fixes the word (horizon " << o.horizon << "): " << fixed_note << "\n";
    if (proj) {
        t << "projection onto {";
        for (std::size_t i = 0; i < proj->target_alphabet.size(); ++i)
            t << (i ? "," : "") << proj->target_alphabet[i];
        t << "}:\n";
        for (const auto& [k, img] : proj->phi.images) {
            t << "  phi(" << k << ") = ";
            for (std::size_t i = 0; i < img.size(); ++i) t << (i ? " " : "") << img[i];
            t << "\n";
        }
    } else {
        t << "no finite projection found within the letter budget " << o.letter_budget << "\n";
    }
    emit(o, j, t.str());
    return 0;
}

int cmd_word(const Options& o, bool plot_data) {
    nb::Base b = build_base(o);
    auto refs = nb::reference_strings(b, o.max_iter);
    nb::FieldElement bound = b.rational(nb::parse_rat(o.bound));
    auto win = nb::zbeta_window(b, bound, refs);
    auto word = nb::code_word(win, b, refs, nb::window_length_budget(b, bound) + 1);
    if (plot_data) {
        // (position, gap length) pairs
        for (std::ptrdiff_t n = word.min_index(); n < word.max_index(); ++n) {
            nb::FieldElement gap = win.points[static_cast<std::size_t>(n + word.origin) + 1].value -
                                   win.points[static_cast<std::size_t>(n + word.origin)].value;
            std::cout << n << " " << gap.approx(8) << "\n";
        }
        return 0;
    }
    if (json_mode(o)) {
        nb::Json j;
        j["origin_index"] = word.origin;
        nb::Json letters = nb::Json::array();
        for (const auto& g : word.gaps) letters.push_back(g.letter);
        j["letters"] = letters;
        j["min_index"] = word.min_index();
        j["max_index"] = word.max_index();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ostringstream t;
    t << "v[" << word.min_index() << ".." << word.max_index() - 1 << "] =";
    for (std::ptrdiff_t n = word.min_index(); n < word.max_index(); ++n)
        t << " " << word.letter_at(n);
    t << "\n(origin: letter v[0] codes the gap starting at z_0 = 0)\n";
    std::cout << t.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "negabeta: exact arithmetic for (-beta)-numeration.\n"
        "Expansions, admissibility, (-beta)-integers, gap words and morphisms\n"
        "are computed exactly over Q(beta); no floating point is consulted.\n"};
    app.footer(
        "Exit codes:\n"
        "  0 success; 1 negative decision (admissible: string rejected)\n"
        "  2 NotIrreducible        3 NoRootIsolated      4 BetaNotGreaterThanOne\n"
        "  5 EndpointOutOfRange    6 DivisionByZero      7 OutOfDomain\n"
        "  8 RefsNotPeriodic       9 EndpointOutsideRestriction\n"
        " 10 NoRepresentationFound 11 UnlabeledGap      12 GapNotRealized\n"
        " 13 HorizonTooShort      64 usage/parse error  70 internal error\n");
    app.require_subcommand(1);

    Options o;
    app.add_option("--minpoly", o.minpoly,
                   "integer minimal polynomial of beta, constant term first (e.g. -1,-2,1)");
    app.add_option("--iso", o.iso, "isolating rational interval lo,hi (e.g. 2,3)");
    app.add_option("--l", o.l, "coefficients of l in Q(beta), rationals (e.g. -1/2)");
    app.add_option("--base", o.base_file, "read the base from a JSON file instead");
    app.add_option("--format", o.format, "output format: text (default) or json");
    app.add_option("--max-iter", o.max_iter, "orbit iteration budget (default 200)");
    app.add_option("--bound", o.bound, "window bound as a rational (default 8)");
    app.add_option("--letter-budget", o.letter_budget, "letters to extract (default 6)");
    app.add_option("--horizon", o.horizon, "fixed-point verification horizon (default 20)");
    app.add_flag("--overline", o.overline, "render negative digits as ~a");

    std::string xs, adm_string, krange = "0..5";
    int max_k = 9;
    bool strong = false, plot_data = false;

    auto* c_expand = app.add_subcommand("expand", "(-beta)-expansion of x in [l, l+1)");
    c_expand->add_option("--x", xs, "x as rational coefficients in Q(beta)")->required();

    app.add_subcommand("refstrings", "reference strings d(l) and d*(l+1)");
    app.add_subcommand("alphabet", "digit alphabet of the base");
    app.add_subcommand("window-check", "endpoint window predicates for l");

    auto* c_adm = app.add_subcommand("admissible", "decide (-beta)-admissibility");
    c_adm->add_option("--string", adm_string, "digit string, e.g. 2,0|1 (no bar: 0^w tail)")
        ->required();
    c_adm->add_flag("--strong", strong, "decide strong admissibility (prepend 0)");

    auto* c_rep = app.add_subcommand("representations", "integer-part representations of x");
    c_rep->add_option("--x", xs, "x as rational coefficients in Q(beta)")->required();
    c_rep->add_option("--max-k", max_k, "largest scaling exponent to try (default 9)");

    app.add_subcommand("zbeta", "all (-beta)-integers in [-bound, bound]");

    auto* c_dist = app.add_subcommand("distances", "gap lengths Delta_k");
    c_dist->add_option("--k", krange, "k or range A..B (default 0..5)");

    auto* c_mm = app.add_subcommand("minmax", "extremal strings min(k), max(k)");
    c_mm->add_option("--k", krange, "k or range A..B (default 0..5)");

    app.add_subcommand("morphism", "antimorphism Phi, projection, fixed-point check");

    auto* c_word = app.add_subcommand("word", "the gap word v_{-beta} on a window");
    c_word->add_flag("--plot-data", plot_data, "emit (position, gap) pairs for plotting");

    // global options may be given after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (c_expand->parsed()) return cmd_expand(o, xs);
        if (app.get_subcommand("refstrings")->parsed()) return cmd_refstrings(o);
        if (app.get_subcommand("alphabet")->parsed()) return cmd_alphabet(o);
        if (app.get_subcommand("window-check")->parsed()) return cmd_window_check(o);
        if (c_adm->parsed()) return cmd_admissible(o, adm_string, strong);
        if (c_rep->parsed()) return cmd_representations(o, xs, max_k);
        if (app.get_subcommand("zbeta")->parsed()) return cmd_zbeta(o);
        if (c_dist->parsed()) return cmd_distances(o, krange);
        if (c_mm->parsed()) return cmd_minmax(o, krange);
        if (app.get_subcommand("morphism")->parsed()) return cmd_morphism(o);
        if (c_word->parsed()) return cmd_word(o, plot_data);
        std::cerr << "no subcommand\n";
        return 64;
    } catch (const nb::Error& e) {
        nb::Json err;
        err["error"] = e.what();
        err["code"] = e.exit_code();
        std::cerr << err.dump() << "\n";
        return e.exit_code();
    } catch (const std::invalid_argument& e) {
        nb::Json err;
        err["error"] = e.what();
        err["code"] = 64;
        std::cerr << err.dump() << "\n";
        return 64;
    } catch (const std::exception& e) {
        nb::Json err;
        err["error"] = e.what();
        err["code"] = 70;
        std::cerr << err.dump() << "\n";
        return 70;
    }
}

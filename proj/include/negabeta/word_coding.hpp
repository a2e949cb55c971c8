#pragma once

// The bidirectional word v_{-beta} coding gaps of Z_{-beta}, extraction of
// the antimorphism Phi (whose square is a non-erasing morphism fixing the
// word), and the letter-to-letter projection to a finite alphabet when one
// exists.
//
// Gap letters: consecutive points x < y factor as
//   x = gamma(w(d-1)max(k)), y = gamma(wd min(k))   (k even)
//   x = gamma(wd min(k)),    y = gamma(w(d-1)max(k)) (k odd)
// after left-padding both canonical words with zeros; k is recovered from
// that factorization (exact-distance matches against Delta_k are recorded
// separately, since distinct k can share a Delta value).

#include <map>
#include <optional>
#include <set>

#include "negabeta/beta_integers.hpp"

namespace negabeta {

struct GapLabel {
    int letter;                      // structural label k
    std::vector<int> delta_matches;  // every k' <= budget with Delta_{k'} equal to the gap
};

// Window of v_{-beta}: gaps[origin + n] is the letter v_n (gap between z_n
// and z_{n+1}).
struct GapWord {
    std::vector<GapLabel> gaps;
    std::ptrdiff_t origin = 0;

    std::ptrdiff_t min_index() const { return -origin; }
    std::ptrdiff_t max_index() const {  // exclusive
        return static_cast<std::ptrdiff_t>(gaps.size()) - origin;
    }
    const GapLabel& at(std::ptrdiff_t n) const {
        return gaps.at(static_cast<std::size_t>(n + origin));
    }
    int letter_at(std::ptrdiff_t n) const { return at(n).letter; }
    bool empty() const { return gaps.empty(); }
};

struct MorphismTable {
    std::map<int, std::vector<int>> images;
    bool is_antimorphism = true;
    // for letter j, the pair (R_j, S_j) of side words around the central j+1
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> rs_words;
};

struct Projection {
    std::vector<int> target_alphabet;  // class representatives (smallest members)
    std::map<int, int> map;            // letter -> representative
    MorphismTable phi;                 // projected antimorphism over the target alphabet
};

namespace detail {

struct LabelContext {
    std::vector<ExtremalStrings> mm;  // minmax table, index k
    std::vector<FieldElement> deltas;

    static LabelContext build(const Base& b, const ReferenceStrings& refs, int budget) {
        LabelContext ctx;
        for (int k = 0; k <= budget; ++k) {
            ctx.mm.push_back(minmax(b, k, refs));
            ctx.deltas.push_back(delta(b, k, refs));
        }
        return ctx;
    }
    int budget() const { return static_cast<int>(mm.size()) - 1; }
};

inline std::vector<int> pad_to(const DigitString& w, std::size_t len) {
    std::vector<int> out(len - w.size(), 0);
    out.insert(out.end(), w.digits.begin(), w.digits.end());
    return out;
}

// Structural labels of the gap between adjacent points (sx,x) < (sy,y).
inline std::vector<int> structural_matches(const LabelContext& ctx, const DigitString& sx,
                                           const DigitString& sy) {
    std::size_t L = std::max(sx.size(), sy.size()) + 1;
    std::vector<int> px = pad_to(sx, L), py = pad_to(sy, L);
    std::vector<int> found;
    for (int k = 0; k <= ctx.budget() && static_cast<std::size_t>(k) + 1 <= L; ++k) {
        std::size_t cut = L - static_cast<std::size_t>(k) - 1;  // break digit index
        bool same_prefix = std::equal(px.begin(), px.begin() + static_cast<std::ptrdiff_t>(cut),
                                      py.begin());
        if (!same_prefix) continue;
        const auto& mm = ctx.mm[static_cast<std::size_t>(k)];
        auto suffix_is = [&](const std::vector<int>& s, const DigitString& t) {
            return std::equal(s.begin() + static_cast<std::ptrdiff_t>(cut + 1), s.end(),
                              t.digits.begin(), t.digits.end());
        };
        bool even = (k % 2 == 0);
        if (even) {
            if (py[cut] == px[cut] + 1 && suffix_is(px, mm.max_k) && suffix_is(py, mm.min_k))
                found.push_back(k);
        } else {
            if (py[cut] == px[cut] - 1 && suffix_is(px, mm.min_k) && suffix_is(py, mm.max_k))
                found.push_back(k);
        }
    }
    return found;
}

inline GapLabel label_gap(const LabelContext& ctx, const ZbetaPoint& a, const ZbetaPoint& c) {
    auto matches = structural_matches(ctx, a.word, c.word);
    if (matches.size() != 1)
        throw UnlabeledGapError("gap admits " + std::to_string(matches.size()) +
                                " structural factorizations (words " + to_text(a.word) + " and " +
                                to_text(c.word) + ")");
    GapLabel lab;
    lab.letter = matches.front();
    FieldElement gap = c.value - a.value;
    for (int k = 0; k <= ctx.budget(); ++k)
        if (ctx.deltas[static_cast<std::size_t>(k)] == gap) lab.delta_matches.push_back(k);
    return lab;
}

}  // namespace detail

// Label every adjacent gap of the window. The window must contain 0.
inline GapWord code_word(const ZbetaWindow& window, const Base& b, const ReferenceStrings& refs,
                         int label_budget) {
    if (window.points.empty()) throw std::invalid_argument("code_word: empty window");
    GapWord word;
    std::ptrdiff_t zero_at = -1;
    for (std::size_t i = 0; i < window.points.size(); ++i)
        if (window.points[i].value.is_zero()) zero_at = static_cast<std::ptrdiff_t>(i);
    if (zero_at < 0) throw std::invalid_argument("code_word: window does not contain 0");
    auto ctx = detail::LabelContext::build(b, refs, label_budget);
    for (std::size_t i = 0; i + 1 < window.points.size(); ++i)
        word.gaps.push_back(detail::label_gap(ctx, window.points[i], window.points[i + 1]));
    word.origin = zero_at;
    return word;
}

namespace detail {

struct WitnessPair {
    ZbetaPoint x, y;  // adjacent, gap Delta_k, x < y
};

// Occurrence of gap k built from the factorization: choose a digit d and a
// short prefix w, check both strings are strongly admissible and the two
// values really are adjacent (no third point between them).
inline std::optional<WitnessPair> find_witness(const Base& b, const ReferenceStrings& refs,
                                               const LabelContext& ctx, int k) {
    Alphabet a = alphabet(b);
    const auto& mm = ctx.mm[static_cast<std::size_t>(k)];
    std::vector<std::vector<int>> prefixes = {{}};
    for (int c = a.lo; c <= a.hi; ++c) prefixes.push_back({c});
    for (int c = a.lo; c <= a.hi; ++c)
        for (int c2 = a.lo; c2 <= a.hi; ++c2) prefixes.push_back({c, c2});
    for (const auto& w : prefixes) {
        for (int d = a.lo + 1; d <= a.hi; ++d) {
            auto make_word = [&](int breakdig, const DigitString& suffix) {
                std::vector<int> v = w;
                v.push_back(breakdig);
                v.insert(v.end(), suffix.digits.begin(), suffix.digits.end());
                while (!v.empty() && v.front() == 0) v.erase(v.begin());
                return DigitString{std::move(v)};
            };
            bool even = (k % 2 == 0);
            DigitString wx = even ? make_word(d - 1, mm.max_k) : make_word(d, mm.min_k);
            DigitString wy = even ? make_word(d, mm.min_k) : make_word(d - 1, mm.max_k);
            if (!is_strongly_admissible(with_zero_tail(wx), refs)) continue;
            if (!is_strongly_admissible(with_zero_tail(wy), refs)) continue;
            FieldElement gx = gamma(b, wx), gy = gamma(b, wy);
            if ((gy - gx).sign() <= 0) continue;  // orientation must be x < y
            auto between = zbeta_range(b, gx, gy, refs);
            if (between.size() != 2) continue;  // not adjacent: a point sits inside
            return WitnessPair{{gx, wx}, {gy, wy}};
        }
    }
    return std::nullopt;
}

// The image word Phi(k) read from one realized occurrence: multiply the pair
// by -beta and code the gaps between the images.
inline std::vector<int> image_of_occurrence(const Base& b, const ReferenceStrings& refs,
                                            const LabelContext& ctx, const WitnessPair& pair) {
    FieldElement nb = -b.beta();
    FieldElement lo = nb * pair.y.value, hi = nb * pair.x.value;  // order flips
    auto pts = zbeta_range(b, lo, hi, refs);
    if (pts.size() < 2 || !(pts.front().value == lo) || !(pts.back().value == hi))
        throw std::logic_error("image interval endpoints are not (-beta)-integers");
    std::vector<int> word;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        word.push_back(label_gap(ctx, pts[i], pts[i + 1]).letter);
    return word;
}

}  // namespace detail

// Extract Phi(k) for every k <= letter_budget. Each image is read off one
// realized occurrence of the gap and cross-validated against further
// occurrences; the guaranteed middle letter k+1 splits the image into the
// side words (R_k, S_k).
inline MorphismTable extract_antimorphism(const Base& b, const ReferenceStrings& refs,
                                          int letter_budget) {
    if (letter_budget < 0) throw std::invalid_argument("letter budget must be >= 0");
    auto ctx = detail::LabelContext::build(b, refs, letter_budget + 2);
    MorphismTable table;

    // shared validation window around the origin; its gap letters are bounded
    // by the window's own length budget, not by letter_budget
    ZbetaWindow win;
    GapWord word;
    if (!is_trivial(b)) {
        FieldElement wb = b.rational(Rat(8));
        win = zbeta_window(b, wb, refs);
        word = code_word(win, b, refs,
                         std::max(letter_budget + 2, window_length_budget(b, wb) + 1));
    }
    auto window_occurrences = [&](int k, int cap) {
        std::vector<detail::WitnessPair> occ;
        for (std::size_t i = 0; i + 1 < win.points.size(); ++i) {
            if (word.gaps[i].letter != k) continue;
            occ.push_back({win.points[i], win.points[i + 1]});
            if (static_cast<int>(occ.size()) >= cap) break;
        }
        return occ;
    };

    for (int k = 0; k <= letter_budget; ++k) {
        std::vector<detail::WitnessPair> occ;
        if (auto w = detail::find_witness(b, refs, ctx, k)) occ.push_back(*w);
        for (auto& p : window_occurrences(k, 3)) occ.push_back(p);
        if (occ.empty())
            throw GapNotRealizedError("no realized occurrence of gap letter " +
                                      std::to_string(k));
        std::vector<int> image = detail::image_of_occurrence(b, refs, ctx, occ.front());

        // the image must agree across every inspected occurrence
        for (std::size_t i = 1; i < occ.size(); ++i) {
            if (detail::image_of_occurrence(b, refs, ctx, occ[i]) != image)
                throw std::logic_error("occurrences of gap " + std::to_string(k) +
                                       " disagree on the image word");
        }

        // split around the guaranteed k+1 letter
        auto mid = std::find(image.begin(), image.end(), k + 1);
        if (mid == image.end())
            throw std::logic_error("image of letter " + std::to_string(k) +
                                   " lacks the middle letter " + std::to_string(k + 1));
        std::vector<int> before(image.begin(), mid), after(mid + 1, image.end());
        std::vector<int> rev_after(after.rbegin(), after.rend());
        if (k % 2 == 0) {
            // Phi(even) = S (k+1) reverse(R)
            table.rs_words[k] = {rev_after, before};
        } else {
            // Phi(odd) = R (k+1) reverse(S)
            table.rs_words[k] = {before, rev_after};
        }
        table.images[k] = std::move(image);
    }
    return table;
}

// Antimorphism application: Phi(uv) = Phi(v) Phi(u).
inline std::vector<int> apply_antimorphism(const MorphismTable& t, const std::vector<int>& w) {
    std::vector<int> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto img = t.images.find(*it);
        if (img == t.images.end())
            throw HorizonTooShortError("no image for letter " + std::to_string(*it) +
                                       " in the table");
        out.insert(out.end(), img->second.begin(), img->second.end());
    }
    return out;
}

inline std::vector<int> apply_square(const MorphismTable& t, const std::vector<int>& w) {
    return apply_antimorphism(t, apply_antimorphism(t, w));
}

// Check that Psi = Phi^2 fixes the word: the image of the ray starting at
// the origin reproduces the ray, and symmetrically on the left. `horizon`
// letters are compared on each side.
inline bool verify_fixed_point(const GapWord& word, const MorphismTable& table, int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (word.empty()) {
        // single-point window: the empty word is trivially fixed
        return true;
    }
    // right side
    std::vector<int> img;
    std::ptrdiff_t j = 0;
    while (static_cast<int>(img.size()) < horizon) {
        if (j >= word.max_index()) throw HorizonTooShortError("window too short on the right");
        auto part = apply_square(table, {word.letter_at(j)});
        img.insert(img.end(), part.begin(), part.end());
        ++j;
    }
    if (word.max_index() < horizon) throw HorizonTooShortError("window too short on the right");
    for (int i = 0; i < horizon; ++i)
        if (img[static_cast<std::size_t>(i)] != word.letter_at(i)) return false;
    // left side: Psi(v_{-1} v_{-2} ... ) ends at the origin
    std::vector<int> left;
    j = -1;
    while (static_cast<int>(left.size()) < horizon) {
        if (j < word.min_index()) throw HorizonTooShortError("window too short on the left");
        auto part = apply_square(table, {word.letter_at(j)});
        left.insert(left.begin(), part.begin(), part.end());
        --j;
    }
    if (-word.min_index() < horizon) throw HorizonTooShortError("window too short on the left");
    for (int i = 1; i <= horizon; ++i)
        if (left[left.size() - static_cast<std::size_t>(i)] != word.letter_at(-i)) return false;
    return true;
}

// Coarsest letter identification with exactly equal gap lengths and
// projection-stable images; std::nullopt when the table cannot be closed
// over a finite alphabet within its letter budget.
inline std::optional<Projection> project_finite(const Base& b, const ReferenceStrings& refs,
                                                const MorphismTable& table, const GapWord& word) {
    std::set<int> letters;
    for (const auto& [k, img] : table.images) {
        letters.insert(k);
        for (int c : img) letters.insert(c);
    }
    for (const auto& g : word.gaps) letters.insert(g.letter);
    if (letters.empty()) return std::nullopt;
    int maxl = *letters.rbegin();

    std::vector<FieldElement> deltas;
    {
        for (int k = 0; k <= maxl; ++k) deltas.push_back(delta(b, k, refs));
    }
    // initial partition: exact Delta equality, class id = smallest member
    std::map<int, int> cls;
    for (int k : letters) {
        int rep = k;
        for (int j : letters) {
            if (j >= k) break;
            if (deltas[static_cast<std::size_t>(j)] == deltas[static_cast<std::size_t>(k)]) {
                rep = cls[j];
                break;
            }
        }
        cls[k] = rep;
    }
    // refine until image signatures agree within every class
    for (bool changed = true; changed;) {
        changed = false;
        std::map<int, std::vector<int>> members;
        for (int k : letters) members[cls[k]].push_back(k);
        for (auto& [rep, mem] : members) {
            std::map<std::vector<int>, std::vector<int>> by_sig;
            std::vector<int> wild;
            for (int k : mem) {
                auto it = table.images.find(k);
                if (it == table.images.end()) {
                    wild.push_back(k);
                    continue;
                }
                std::vector<int> sig;
                for (int c : it->second) sig.push_back(cls[c]);
                by_sig[sig].push_back(k);
            }
            if (by_sig.size() <= 1) continue;
            changed = true;
            bool first = true;
            for (auto& [sig, ks] : by_sig) {
                if (first) {  // first group keeps the old rep together with wildcards
                    first = false;
                    continue;
                }
                int nrep = *std::min_element(ks.begin(), ks.end());
                for (int k : ks) cls[k] = nrep;
            }
            (void)wild;  // letters without images stay in the first group
        }
    }
    // letters without an image must share a class with an imaged letter
    for (int k : letters) {
        if (table.images.count(k)) continue;
        bool ok = false;
        for (int j : letters)
            if (j != k && cls[j] == cls[k] && table.images.count(j)) ok = true;
        if (!ok) return std::nullopt;
    }
    // assemble and verify the projected table
    Projection proj;
    std::set<int> reps;
    for (int k : letters) reps.insert(cls[k]);
    proj.target_alphabet.assign(reps.begin(), reps.end());
    for (int k : letters) proj.map[k] = cls[k];
    proj.phi.is_antimorphism = true;
    for (int r : proj.target_alphabet) {
        int donor = -1;
        for (int k : letters)
            if (cls[k] == r && table.images.count(k)) {
                donor = k;
                break;
            }
        std::vector<int> img;
        for (int c : table.images.at(donor)) img.push_back(cls[c]);
        proj.phi.images[r] = std::move(img);
    }
    // soundness: projected images must agree for every imaged letter
    for (const auto& [k, img] : table.images) {
        std::vector<int> p;
        for (int c : img) p.push_back(cls.count(c) ? cls[c] : -1);
        if (p != proj.phi.images.at(cls[k])) return std::nullopt;
    }
    return proj;
}

}  // namespace negabeta

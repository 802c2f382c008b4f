// Acceptance run: one PASS/FAIL line per criterion, exact checks throughout.
// Criterion 10 is a report; a counterexample there is flagged, not failed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmlabel/cmcheck.hpp"
#include "cmlabel/constructions.hpp"
#include "cmlabel/errors.hpp"
#include "cmlabel/search.hpp"

using namespace cmlabel;

namespace {

/// Tallies of the cross-validation properties over every instance touched.
struct Cross {
    std::size_t strand = 0, strand_bad = 0;
    std::size_t fields = 0, fields_bad = 0;
    std::size_t squares = 0, squares_bad = 0;
    std::size_t verdicts = 0, verdicts_bad = 0;
    std::size_t covering = 0, covering_bad = 0;
    std::size_t surrogate = 0, surrogate_bad = 0;
    std::vector<std::string> notes;

    void note(const std::string& s) {
        if (notes.size() < 10) notes.push_back(s);
    }

    void labelling(const CellComplex& x0, const MonomialLabelling& l, const std::string& where) {
        CellComplex x = x0.has_signs() ? x0 : assign_signs(x0);
        ++squares;
        std::optional<CellularFreeComplex> fc;
        try {
            fc = build_free_complex(x, l);
            if (!fc->squares_to_zero()) throw VerificationFailure("d o d != 0");
        } catch (const VerificationFailure&) {
            ++squares_bad;
            note(where + ": free complex does not square to zero");
            return;
        }
        for (const Monomial& b : lcm_lattice(l)) {
            for (const Field& f : {Field::gf2(), Field::rational()}) {
                ++strand;
                if (!strand_oracle(*fc, x, l, b, f)) {
                    ++strand_bad;
                    note(where + ": strand disagrees at " + b.to_string());
                }
            }
            CellComplex below = restrict_to(x, l.below(b));
            ++fields;
            if (reduced_homology(below, Field::gf2()).acyclic != reduced_homology(below, Field::rational()).acyclic) {
                ++fields_bad;
                note(where + ": gf2 and rational differ at " + b.to_string());
            }
        }
    }

    void family(const CellComplex& x, const VertexFamily& f, const std::string& where) {
        bool fam_ok = check_family_criteria(x, f).all();
        bool lab_ok = false;
        MonomialLabelling l;
        bool labelled = true;
        try {
            l = labelling_of(f);
            lab_ok = check_cm_labelling(x, l).is_cm;
        } catch (const InvalidInput&) {
            labelled = false;
        }
        ++verdicts;
        if (fam_ok != lab_ok) {
            ++verdicts_bad;
            note(where + ": family criteria and labelling verdict differ");
        }
        if (labelled) labelling(x, l, where);
    }

    void maximal(const CellComplex& x, const VertexFamily& f, const std::string& where) {
        ++covering;
        if (!covering_property_check(x, f).holds) {
            ++covering_bad;
            note(where + ": covering property fails");
        }
    }

    /// Operational maximality against refinement-order maximality among all
    /// valid families of the candidate space.
    void surrogate_check(const CellComplex& x, const std::vector<VertexFamily>& valid, const std::string& where) {
        for (const auto& f : valid) {
            if (!is_reduced(f)) continue;
            ++surrogate;
            if (is_maximal(x, f).maximal != refinement_maximal_among(f, valid)) {
                ++surrogate_bad;
                note(where + ": surrogate and refinement order disagree on " + to_string(f));
            }
        }
    }

    bool ok() const {
        return strand_bad == 0 && fields_bad == 0 && squares_bad == 0 && verdicts_bad == 0 && covering_bad == 0 &&
               surrogate_bad == 0;
    }
};

Cross cross;
bool any_failure = false;

/// Runs one criterion; body returns pass/fail and fills the detail stream.
void criterion(int id, const std::string& title, const std::function<bool(std::ostream&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
        pass = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!pass) any_failure = true;
    std::printf("criterion %2d: %s  %s [%.1fs]%s\n", id, pass ? "PASS" : "FAIL", title.c_str(), secs,
                detail.str().c_str());
    std::fflush(stdout);
}

bool contains_family(const std::vector<VertexFamily>& list, const VertexFamily& f) {
    return std::any_of(list.begin(), list.end(), [&](const VertexFamily& g) { return same_sets(f, g); });
}

std::set<std::vector<std::pair<int, int>>> edge_sets(const std::vector<OrientedTree>& ts) {
    std::set<std::vector<std::pair<int, int>>> out;
    for (const auto& t : ts) out.insert(normalized(t).edges);
    return out;
}

/// Trees passing check_cm_labelling equal the trees from the spanning-forest
/// construction.
bool tree_sets_agree(const MonomialLabelling& l, std::size_t& passing) {
    const int n = l.n_vertices();
    std::vector<OrientedTree> ok;
    for (const auto& t : all_labelled_trees(n)) {
        CellComplex x = tree_complex(t);
        if (check_cm_labelling(x, l).is_cm) {
            ok.push_back(t);
            cross.labelling(x, l, "tree");
        }
    }
    passing = ok.size();
    return edge_sets(ok) == edge_sets(tree_resolution_trees(l));
}

MonomialLabelling labelling(int r, std::vector<std::vector<int>> labels) {
    MonomialLabelling l{r, {}};
    for (auto& e : labels) l.labels.emplace_back(e);
    return l;
}

VertexFamily fixture_family(const std::string& id) { return family_of(figure_fixture(id).labelling).family; }

}  // namespace

int main() {
    SearchOptions opts;

    criterion(1, "tree uniqueness on all 48 trees with 1..8 vertices", [&](std::ostream& d) {
        std::size_t trees = 0, good = 0;
        for (int n = 1; n <= 8; ++n)
            for (const auto& t : nonisomorphic_trees(n)) {
                ++trees;
                CellComplex x = tree_complex(t);
                auto m = enumerate_maximal_families(x, opts);
                auto want = family_of(tree_maximal_labelling(t)).family;
                if (m.size() == 1 && same_sets(m[0], want)) ++good;
                for (const auto& f : m) {
                    cross.family(x, f, "tree n=" + std::to_string(n));
                    cross.maximal(x, f, "tree n=" + std::to_string(n));
                }
            }
        d << " trees=" << trees << " unique_and_equal=" << good;
        return trees == 48 && good == 48;
    });

    criterion(2, "tree construction completeness", [&](std::ostream& d) {
        bool all = true;
        std::size_t cases = 0;
        // (x^n, x^{n-1} y, ..., y^n): only the path
        for (int n = 1; n <= 5; ++n) {
            MonomialLabelling l{2, {}};
            for (int i = 0; i <= n; ++i) l.labels.emplace_back(std::vector<int>{n - i, i});
            std::size_t passing = 0;
            bool agree = tree_sets_agree(l, passing);
            all = all && agree && passing == 1;
            ++cases;
        }
        // m_i = product of the other variables: every tree
        for (int n = 2; n <= 5; ++n) {
            MonomialLabelling l{n, {}};
            for (int i = 0; i < n; ++i) {
                std::vector<int> e(static_cast<std::size_t>(n), 1);
                e[static_cast<std::size_t>(i)] = 0;
                l.labels.emplace_back(e);
            }
            std::size_t passing = 0, expected = 1;
            for (int k = 0; k < n - 2; ++k) expected *= static_cast<std::size_t>(n);
            bool agree = tree_sets_agree(l, passing);
            all = all && agree && passing == expected;
            ++cases;
        }
        std::mt19937 rng(20240229);
        int random_cases = 0, attempts = 0;
        while (random_cases < 20) {
            ++attempts;
            int n = 3 + static_cast<int>(rng() % 3);
            MonomialLabelling l{3, {}};
            for (int i = 0; i < n; ++i) {
                std::vector<int> e(3);
                for (auto& x : e) x = static_cast<int>(rng() % 4);
                l.labels.emplace_back(e);
            }
            try {
                validate_labelling(l);
            } catch (const InvalidInput&) {
                continue;
            }
            if (codimension(l) != 2) continue;
            std::size_t passing = 0;
            bool agree = tree_sets_agree(l, passing);
            if (passing == 0) continue;  // not CM: no tree resolves it
            all = all && agree;
            ++random_cases;
            ++cases;
        }
        d << " ideals=" << cases << " (random " << random_cases << " of " << attempts << " draws)";
        return all;
    });

    criterion(3, "odd polygons have one family, even polygons none", [&](std::ostream& d) {
        bool ok = true;
        for (int n : {5, 7}) {
            CellComplex x = polygon_complex(n);
            auto valid = enumerate_valid_families(x, opts);
            auto maximal = enumerate_maximal_families(x, opts);
            bool good = maximal.size() == 1 && same_sets(maximal[0], polygon_family(n)) && valid.size() == 1;
            d << " n=" << n << ":valid=" << valid.size() << ",maximal=" << maximal.size();
            ok = ok && good;
            for (const auto& f : valid) cross.family(x, f, "polygon " + std::to_string(n));
            for (const auto& f : maximal) cross.maximal(x, f, "polygon " + std::to_string(n));
            cross.surrogate_check(x, valid, "polygon " + std::to_string(n));
        }
        for (int n : {4, 6}) {
            auto valid = enumerate_valid_families(polygon_complex(n), opts);
            d << " n=" << n << ":valid=" << valid.size();
            ok = ok && valid.empty();
        }
        return ok;
    });

    criterion(4, "chord complexes have exactly the two families", [&](std::ostream& d) {
        bool ok = true;
        for (auto [n, a] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}) {
            CellComplex x = chord_complex(n, a);
            auto [f1, f2] = chord_families(n, a);
            auto maximal = enumerate_maximal_families(x, opts);
            bool good = maximal.size() == 2 && contains_family(maximal, f1) && contains_family(maximal, f2) &&
                        f1.size() == static_cast<std::size_t>(n + 1) && f2.size() == static_cast<std::size_t>(n + 1);
            d << " (" << n << "," << a << "):" << (good ? "ok" : "MISMATCH");
            ok = ok && good;
            std::string where = "chord(" + std::to_string(n) + "," + std::to_string(a) + ")";
            for (const auto& f : maximal) {
                cross.family(x, f, where);
                cross.maximal(x, f, where);
            }
            if (n <= 6) cross.surrogate_check(x, enumerate_valid_families(x, opts), where);
        }
        return ok;
    });

    criterion(5, "two-chord hexagon chain of figures", [&](std::ostream& d) {
        bool ok = true;
        for (const auto& id : {"3.1", "3.2", "3.3", "3.4"}) {
            auto fx = figure_fixture(id);
            bool cm = check_cm_labelling(fx.complex, fx.labelling).is_cm;
            cross.labelling(fx.complex, fx.labelling, std::string("fixture ") + id);
            if (!cm) d << " " << id << ":not-CM";
            ok = ok && cm;
        }
        CellComplex x = figure_fixture("3.4").complex;
        auto f32 = fixture_family("3.2"), f33 = fixture_family("3.3"), f34 = fixture_family("3.4");
        for (const auto& [name, f] : std::vector<std::pair<std::string, VertexFamily>>{{"3.2", f32}, {"3.3", f33}, {"3.4", f34}})
            cross.family(x, f, "fixture " + name);
        auto m32 = is_maximal(x, f32);
        d << " 3.2-maximal=" << (m32.maximal ? "yes" : "no");
        ok = ok && !m32.maximal;
        d << " 3.4-size=" << f34.size();
        ok = ok && f34.size() == 8;
        auto m34 = is_maximal(x, f34);
        d << " 3.4-maximal=" << (m34.maximal ? "yes" : "no");
        if (!m34.maximal && m34.addable) {
            VertexFamily bigger = f34;
            bigger.sets.push_back(*m34.addable);
            bool bigger_cm = check_cm_labelling(x, labelling_of(bigger), Field::rational()).is_cm;
            d << " (adding " << m34.addable->to_string() << " keeps CM: " << (bigger_cm ? "yes" : "no")
              << "; the figure's family is refined strictly, see README)";
        }
        ok = ok && m34.maximal;
        bool to32 = morphism_exists(f34, f32), to33 = morphism_exists(f34, f33);
        d << " morphisms 3.4->3.2=" << to32 << " 3.4->3.3=" << to33;
        ok = ok && to32 && to33;
        // 3.2 is the polarization of 3.1; compose 3.4 -> 3.2 -> 3.1
        auto l31 = figure_fixture("3.1").labelling;
        auto pol = polarize(l31);
        bool pol_ok = pol.labelling == figure_fixture("3.2").labelling;
        auto through = Substitution::compose(morphism_substitution(f34, f32), pol.depolarization(l31.n_variables));
        bool reaches = through.apply(labelling_of(f34)) == l31;
        d << " polarize(3.1)=3.2:" << pol_ok << " composition-reaches-3.1:" << reaches;
        return ok && pol_ok && reaches;
    });

    criterion(6, "pyramids keep validity and maximality both ways", [&](std::ostream& d) {
        struct Case {
            std::string name;
            CellComplex x;
            VertexFamily f;
        };
        auto [c1, c2] = chord_families(5, 2);
        std::vector<Case> cases{{"pentagon", polygon_complex(5), polygon_family(5)},
                                {"chord(5,2) F1", chord_complex(5, 2), c1},
                                {"chord(5,2) F2", chord_complex(5, 2), c2},
                                {"hexagon 3.2 (not maximal)", figure_fixture("3.2").complex, fixture_family("3.2")},
                                {"hexagon 3.4 (not maximal)", figure_fixture("3.4").complex, fixture_family("3.4")}};
        bool ok = true;
        std::size_t non_maximal = 0;
        for (const auto& c : cases) {
            CellComplex px = pyramid(c.x);
            VertexFamily pf = pyramid_family(c.f);
            bool valid = check_family_criteria(px, pf).all();
            bool below = is_maximal(c.x, c.f).maximal;
            bool above = valid && is_maximal(px, pf).maximal;
            non_maximal += !below;
            cross.family(px, pf, "pyramid " + c.name);
            if (above) cross.maximal(px, pf, "pyramid " + c.name);
            bool good = valid && below == above;
            d << " " << c.name << ":" << (good ? "ok" : "MISMATCH");
            ok = ok && good;
        }
        return ok && non_maximal >= 1;
    });

    criterion(7, "elongated pyramids", [&](std::ostream& d) {
        CellComplex ep5 = elongated_pyramid(polygon_complex(5));
        VertexFamily f5 = ep_family(polygon_family(5));
        bool v5 = check_family_criteria(ep5, f5).all();
        bool m5 = v5 && is_maximal(ep5, f5).maximal;
        cross.family(ep5, f5, "EP(pentagon)");
        if (m5) cross.maximal(ep5, f5, "EP(pentagon)");

        CellComplex ep3 = elongated_pyramid(polygon_complex(3));
        VertexFamily tri{3, {VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)}};
        VertexFamily f3 = ep_family(tri);
        bool v3 = check_family_criteria(ep3, f3).all();
        bool m3 = v3 && is_maximal(ep3, f3).maximal;
        bool fv = ep3.f_vector() == std::vector<int>{7, 12, 7, 1};
        cross.family(ep3, f3, "EP(triangle)");
        if (m3) cross.maximal(ep3, f3, "EP(triangle)");
        d << " EP(pentagon): valid=" << v5 << " maximal=" << m5 << "; EP(triangle): valid=" << v3
          << " maximal=" << m3 << " f=(7,12,7,1):" << fv;
        return v5 && m5 && v3 && m3 && fv;
    });

    criterion(8, "wheel polytope and the bipyramid figures", [&](std::ostream& d) {
        CellComplex w = wheel_polytope(4);
        VertexFamily f = prop48_family();
        bool valid = check_family_criteria(w, f).all();
        bool maximal = valid && is_maximal(w, f).maximal;
        bool fv = w.f_vector() == std::vector<int>{9, 16, 9, 1} && f_symmetry(w);
        cross.family(w, f, "wheel(4)");
        if (maximal) cross.maximal(w, f, "wheel(4)");
        bool ok = valid && maximal && fv;
        d << " prop-family valid=" << valid << " maximal=" << maximal << " f-vector=" << fv;
        for (const auto& id : {"4.4", "4.6", "4.7", "4.8"}) {
            auto fx = figure_fixture(id);
            auto v = check_cm_labelling(fx.complex, fx.labelling);
            auto ranks = build_free_complex(fx.complex, fx.labelling).ranks();
            bool good = v.is_cm && v.codimension == 4 && ranks == std::vector<std::size_t>{1, 9, 16, 9, 1};
            cross.labelling(fx.complex, fx.labelling, std::string("fixture ") + id);
            d << " " << id << ":" << (good ? "ok" : "MISMATCH");
            ok = ok && good;
        }
        return ok;
    });

    criterion(9, "cross-validation over every instance above", [&](std::ostream& d) {
        d << " strand=" << cross.strand - cross.strand_bad << "/" << cross.strand
          << " fields=" << cross.fields - cross.fields_bad << "/" << cross.fields
          << " dd=" << cross.squares - cross.squares_bad << "/" << cross.squares
          << " verdicts=" << cross.verdicts - cross.verdicts_bad << "/" << cross.verdicts
          << " covering=" << cross.covering - cross.covering_bad << "/" << cross.covering
          << " surrogate=" << cross.surrogate - cross.surrogate_bad << "/" << cross.surrogate;
        for (const auto& n : cross.notes) d << "\n    " << n;
        return cross.ok();
    });

    // Report only: never sets the exit status.
    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> configs;
    for (int k = 1; k <= 2; ++k)
        for (int n = 4; n <= 7; ++n)
            for (auto& c : chord_configurations(n, k)) configs.push_back({n, c});
    for (auto& c : default_chord_configurations())
        if (std::find(configs.begin(), configs.end(), c) == configs.end()) configs.push_back(c);
    auto rows = conjecture_chords(configs, opts);
    std::size_t flagged = 0, skipped = 0;
    std::ostringstream table;
    for (const auto& r : rows) {
        table << "    n=" << r.n << " k=" << r.chords.size() << " chords=";
        for (auto [a, b] : r.chords) table << "{" << a << "," << b << "}";
        table << " maximal=" << r.maximal_families << " sizes=";
        for (auto s : r.family_sizes) table << s << " ";
        table << "expected=" << r.n + static_cast<int>(r.chords.size());
        if (!r.note.empty()) table << "  " << r.note;
        table << "\n";
        if (!r.consistent) {
            ++flagged;
            for (const auto& f : r.families)
                if (f.size() != static_cast<std::size_t>(r.n) + r.chords.size()) table << "      " << to_string(f) << "\n";
        }
        if (r.note.rfind("skipped", 0) == 0) ++skipped;
    }
    auto prows = conjecture_polytopes(opts);
    std::size_t pflagged = 0;
    std::ostringstream ptable;
    for (const auto& r : prows) {
        ptable << "    " << r.name << " f=(";
        for (std::size_t i = 0; i < r.f_vector.size(); ++i) ptable << (i ? "," : "") << r.f_vector[i];
        ptable << ") symmetric=" << r.symmetric << " valid_family=" << r.valid_family_source
               << (r.counterexample ? "  COUNTEREXAMPLE" : "") << "\n";
        pflagged += r.counterexample;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion 10: REPORT  conjecture evidence [%.1fs] n+k rule: %zu configurations, %zu skipped, %s; "
                "f-vector symmetry: %zu polytopes, %s\n",
                secs, rows.size(), skipped,
                flagged ? (std::to_string(flagged) + " COUNTEREXAMPLE(S) FOUND (finding, not a failure)").c_str()
                        : "no counterexample",
                prows.size(),
                pflagged ? (std::to_string(pflagged) + " COUNTEREXAMPLE(S) FOUND (finding, not a failure)").c_str()
                         : "no counterexample");
    std::cout << table.str() << ptable.str();
    std::cout << (any_failure ? "acceptance: FAIL\n" : "acceptance: PASS\n");
    return any_failure ? 1 : 0;
}

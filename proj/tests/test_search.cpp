#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cmlabel/cmcheck.hpp"
#include "cmlabel/constructions.hpp"
#include "cmlabel/errors.hpp"
#include "cmlabel/search.hpp"
#include "oracle.hpp"

using namespace cmlabel;

namespace {

VertexFamily fam(int n, std::vector<std::vector<int>> sets) {
    VertexFamily f{n, {}};
    for (auto& s : sets) f.sets.push_back(VertexSet::of(s));
    return f;
}

bool contains_family(const std::vector<VertexFamily>& list, const VertexFamily& f) {
    return std::any_of(list.begin(), list.end(), [&](const VertexFamily& g) { return same_sets(f, g); });
}

CellComplex two_chord_hexagon() { return figure_fixture("3.4").complex; }

VertexFamily fixture_family(const std::string& id) { return family_of(figure_fixture(id).labelling).family; }

/// Properties every list of maximal families must have.
void check_maximal_list(const CellComplex& x, const std::vector<VertexFamily>& list) {
    for (const auto& f : list) {
        CHECK(check_family_criteria(x, f).all());
        CHECK(is_maximal(x, f).maximal);
        CHECK(covering_property_check(x, f).holds);
        for (VertexSet s : f.sets) CHECK(connected_subset(x, s));
        CHECK(refinement_maximal_among(f, list));
    }
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list.size(); ++j)
            if (i != j) CHECK_FALSE(morphism_exists(list[i], list[j]));
}

}  // namespace

TEST_CASE("is_maximal examples") {
    CHECK(is_maximal(polygon_complex(5), polygon_family(5)).maximal);
    auto v32 = is_maximal(two_chord_hexagon(), fixture_family("3.2"));
    CHECK_FALSE(v32.maximal);
    CHECK(v32.addable.has_value());
    CHECK(is_maximal(wheel_polytope(4), prop48_family()).maximal);
    CHECK(is_maximal(elongated_pyramid(polygon_complex(5)), ep_family(polygon_family(5))).maximal);
}

TEST_CASE("is_maximal reports decomposable members and rejects invalid families") {
    // the path 0-1-2 family plus {0, 2} = {0} + {2} stays valid but is not reduced
    auto path = OrientedTree{3, {{0, 1}, {1, 2}}};
    auto x = tree_complex(path);
    VertexFamily g = family_of(tree_maximal_labelling(path)).family;
    g.sets.push_back(VertexSet::of({0, 2}));
    REQUIRE(check_family_criteria(x, g).all());
    auto v = is_maximal(x, g);
    CHECK_FALSE(v.maximal);
    REQUIRE(v.decomposable_member.has_value());
    CHECK(*v.decomposable_member == VertexSet::of({0, 2}));
    CHECK_THROWS_AS(is_maximal(polygon_complex(5), fam(5, {{0, 1}, {1, 2}})), InvalidInput);
}

TEST_CASE("odd and even polygons") {
    SearchOptions o;
    auto v5 = enumerate_valid_families(polygon_complex(5), o);
    REQUIRE(v5.size() == 1);
    CHECK(same_sets(v5[0], polygon_family(5)));
    auto m7 = enumerate_maximal_families(polygon_complex(7), o);
    REQUIRE(m7.size() == 1);
    CHECK(same_sets(m7[0], polygon_family(7)));
    CHECK(enumerate_valid_families(polygon_complex(4), o).empty());
    CHECK(enumerate_valid_families(polygon_complex(6), o).empty());
}

TEST_CASE("single-member validity on a polygon forces strings") {
    for (int n = 4; n <= 8; ++n) {
        SearchOptions o;
        o.connected_only = false;
        o.max_candidates = 1000;
        auto space = make_search_space(polygon_complex(n), o);
        CHECK(space.candidates.size() == static_cast<std::size_t>(n * (n - 1)));
        for (VertexSet s : space.candidates) CHECK(is_string(s, n));
    }
}

TEST_CASE("chord complexes: the two families") {
    SearchOptions o;
    auto x = chord_complex(5, 2);
    auto [f1, f2] = chord_families(5, 2);
    auto valid = enumerate_valid_families(x, o);
    CHECK(contains_family(valid, f1));
    CHECK(contains_family(valid, f2));
    auto maximal = enumerate_maximal_families(x, o);
    REQUIRE(maximal.size() == 2);
    CHECK(contains_family(maximal, f1));
    CHECK(contains_family(maximal, f2));
    check_maximal_list(x, maximal);

    auto y = chord_complex(6, 2);
    auto [g1, g2] = chord_families(6, 2);
    auto my = enumerate_maximal_families(y, o);
    REQUIRE(my.size() == 2);
    CHECK(contains_family(my, g1));
    CHECK(contains_family(my, g2));
    check_maximal_list(y, my);
}

TEST_CASE("trees: one maximal family each") {
    SearchOptions o;
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : nonisomorphic_trees(n)) {
            auto x = tree_complex(t);
            auto m = enumerate_maximal_families(x, o);
            REQUIRE(m.size() == 1);
            CHECK(same_sets(m[0], family_of(tree_maximal_labelling(t)).family));
            check_maximal_list(x, m);
        }
}

TEST_CASE("enumeration does not depend on pruning, jobs or symmetry") {
    std::vector<CellComplex> xs{polygon_complex(5), chord_complex(5, 2), tree_complex(OrientedTree{4, {{0, 1}, {1, 2}, {1, 3}}})};
    for (const auto& x : xs) {
        SearchOptions base;
        auto ref = enumerate_valid_families(x, base);
        SearchOptions unpruned = base;
        unpruned.pruning = false;
        CHECK(enumerate_valid_families(x, unpruned) == ref);
        SearchOptions threaded = base;
        threaded.jobs = 3;
        CHECK(enumerate_valid_families(x, threaded) == ref);
        SearchOptions wide = base;
        wide.connected_only = false;
        wide.max_candidates = 1000;
        auto all = enumerate_valid_families(x, wide);
        for (const auto& f : ref) CHECK(contains_family(all, f));
        // families with a disconnected member never appear among the maximal ones
        auto maximal_wide = enumerate_maximal_families(x, wide);
        CHECK(maximal_wide == enumerate_maximal_families(x, base));
    }
    auto x = polygon_complex(5);
    SearchOptions sym;
    sym.symmetry = dihedral_symmetries(x, 5);
    CHECK(sym.symmetry.size() == 10);
    CHECK(enumerate_valid_families(x, sym).size() == 1);
}

TEST_CASE("valid families agree with the brute-force reference on small complexes") {
    // every family of connected proper subsets, tested directly
    for (const auto& x : {polygon_complex(4), polygon_complex(3), tree_complex(OrientedTree{4, {{0, 1}, {1, 2}, {2, 3}}})}) {
        const int n = x.n_vertices();
        std::vector<VertexSet> pool;
        for (std::uint64_t w = 1; w + 1 < (std::uint64_t{1} << n); ++w)
            if (connected_subset(x, VertexSet(w))) pool.push_back(VertexSet(w));
        std::sort(pool.begin(), pool.end(), canonical_less);
        REQUIRE(pool.size() <= 16);
        std::vector<VertexFamily> expected;
        for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
            VertexFamily f{n, {}};
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) f.sets.push_back(pool[i]);
            if (oracle::family_valid(x, f)) expected.push_back(canonical(f));
        }
        auto got = enumerate_valid_families(x, SearchOptions{});
        CHECK(got.size() == expected.size());
        for (const auto& f : expected) CHECK(contains_family(got, f));
    }
}

TEST_CASE("guard refuses large candidate spaces") {
    SearchOptions o;
    o.max_candidates = 10;
    CHECK_THROWS_AS(enumerate_valid_families(polygon_complex(5), o), GuardExceeded);
    o.max_candidates = 20;
    CHECK_NOTHROW(enumerate_valid_families(polygon_complex(5), o));
}

TEST_CASE("automorphisms") {
    CHECK(dihedral_symmetries(polygon_complex(6), 6).size() == 12);
    auto c = dihedral_symmetries(chord_complex(6, 3), 6);
    CHECK(c.size() == 4);
    for (const auto& p : c) CHECK(is_automorphism(chord_complex(6, 3), p));
    CHECK_FALSE(is_automorphism(chord_complex(6, 3), {1, 2, 3, 4, 5, 0}));
}

TEST_CASE("covering property") {
    CHECK(covering_property_check(polygon_complex(5), polygon_family(5)).holds);
    CHECK(covering_property_check(wheel_polytope(4), prop48_family()).holds);
    auto [f1, f2] = chord_families(6, 3);
    CHECK(covering_property_check(chord_complex(6, 3), f1).holds);
    CHECK(covering_property_check(chord_complex(6, 3), f2).holds);
}

TEST_CASE("two-chord hexagon: the eight-variable family is not maximal") {
    auto x = two_chord_hexagon();
    auto f34 = fixture_family("3.4");
    CHECK(f34.size() == 8);
    CHECK(check_family_criteria(x, f34).all());
    auto v = is_maximal(x, f34);
    CHECK_FALSE(v.maximal);
    REQUIRE(v.addable.has_value());
    // the added set is {xy, x^2} or {z^2, yz}
    CHECK((*v.addable == VertexSet::of({1, 2}) || *v.addable == VertexSet::of({4, 5})));

    VertexFamily bigger = f34;
    bigger.sets.push_back(*v.addable);
    CHECK(refinement_compare(bigger, f34) == Refinement::first_finer);
    CHECK(morphism_exists(bigger, f34));
    for (const auto& field : {Field::gf2(), Field::rational(), Field::gfp(3)}) {
        auto verdict = check_cm_labelling(x, labelling_of(bigger), field);
        CHECK(verdict.is_cm);
        CHECK(verdict.codimension == 3);
    }
    CHECK(oracle::family_valid(x, bigger));
    CHECK(is_maximal(x, bigger).maximal);

    auto maximal = enumerate_maximal_families(x, SearchOptions{});
    std::vector<std::size_t> sizes;
    for (const auto& f : maximal) sizes.push_back(f.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{8, 8, 8, 8, 9, 9});
    CHECK(contains_family(maximal, bigger));
    CHECK_FALSE(contains_family(maximal, f34));
    check_maximal_list(x, maximal);
}

TEST_CASE("conjecture harness rows") {
    SearchOptions o;
    auto rows = conjecture_chords({{5, {{0, 2}}}}, o);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].maximal_families == 2);
    CHECK(rows[0].family_sizes == std::vector<std::size_t>{6, 6});
    CHECK(rows[0].consistent);

    auto two = conjecture_chords({{6, {{1, 3}, {3, 5}}}}, o);
    REQUIRE(two.size() == 1);
    CHECK_FALSE(two[0].consistent);
    CHECK(two[0].note.find("counterexample") != std::string::npos);

    auto configs = chord_configurations(6, 2);
    CHECK_FALSE(configs.empty());
    for (const auto& c : configs) CHECK(validate_complex(subdivided_polygon_complex(6, c)).empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmlabel/complex.hpp"
#include "cmlabel/constructions.hpp"
#include "cmlabel/errors.hpp"
#include "cmlabel/linalg.hpp"
#include "oracle.hpp"

using namespace cmlabel;

namespace {

bool has_kind(const std::vector<Diagnostic>& ds, const std::string& kind) {
    for (const auto& d : ds)
        if (d.kind == kind) return true;
    return false;
}

CellComplex cycle(int n) {
    ComplexBuilder b(n);
    for (int v = 0; v < n; ++v) b.edge(v, (v + 1) % n);
    return std::move(b).build();
}

/// The pentagon disk rebuilt with one incidence of the 2-cell replaced.
CellComplex with_cell_boundary(const CellComplex& x, int cell, std::vector<Incidence> boundary) {
    std::vector<Cell> cells = x.cells();
    cells[static_cast<std::size_t>(cell)].boundary = std::move(boundary);
    return CellComplex(x.n_vertices(), cells);
}

std::vector<CellComplex> corpus() {
    return {polygon_complex(5),
            chord_complex(6, 3),
            subdivided_polygon_complex(6, {{1, 3}, {3, 5}}),
            pyramid(polygon_complex(5)),
            elongated_pyramid(polygon_complex(3)),
            wheel_polytope(4),
            bipyramid_complex(4),
            cycle(5)};
}

}  // namespace

TEST_CASE("vertex sets: canonical order is by size then lexicographic") {
    CHECK(canonical_less(VertexSet::of({3}), VertexSet::of({0, 1})));
    CHECK(canonical_less(VertexSet::of({0, 2}), VertexSet::of({1, 2})));
    CHECK(canonical_less(VertexSet::of({0, 1, 4}), VertexSet::of({0, 2, 3})));
    CHECK_FALSE(canonical_less(VertexSet::of({1}), VertexSet::of({1})));
    CHECK(VertexSet::of({0, 1}).complement(4) == VertexSet::of({2, 3}));
    CHECK(permute(VertexSet::of({0, 1}), {1, 2, 0}) == VertexSet::of({1, 2}));
}

TEST_CASE("fields parse and name themselves") {
    CHECK(Field::parse("gf2") == Field::gf2());
    CHECK(Field::parse("rational") == Field::rational());
    CHECK(Field::parse("gf3").characteristic == 3);
    CHECK(Field::parse("gf7").name() == "gf7");
    CHECK_THROWS_AS(Field::parse("gf4"), InvalidInput);
    CHECK_THROWS_AS(Field::parse("reals"), InvalidInput);
}

TEST_CASE("rank routines agree with the reference elimination") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        IntMatrix m(rows, cols);
        oracle::Matrix ref(rows, std::vector<long long>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                int v = entry(rng) * (rng() % 3 == 0 ? 0 : 1);
                m(r, c) = v;
                ref[r][c] = v;
            }
        CHECK(rank(m, Field::gf2()) == oracle::rank_mod(ref, 2));
        CHECK(rank(m, Field::gfp(3)) == oracle::rank_mod(ref, 3));
        // a large prime stands in for the rationals at these sizes
        CHECK(rank(m, Field::rational()) == oracle::rank_mod(ref, 1000003));
    }
}

TEST_CASE("validate_complex accepts every constructed complex") {
    for (const auto& x : corpus()) CHECK(validate_complex(x).empty());
    for (const auto& id : fixture_ids()) CHECK(validate_complex(figure_fixture(id).complex).empty());
}

TEST_CASE("validate_complex: flipped sign in the pentagon 2-cell breaks the boundary square") {
    CellComplex x = polygon_complex(5);
    int face = x.cells_of_dim(2).front();
    auto boundary = x.cell(face).boundary;
    boundary[0].sign = -boundary[0].sign;
    auto ds = validate_complex(with_cell_boundary(x, face, boundary));
    CHECK(has_kind(ds, "boundary-squared"));
}

TEST_CASE("validate_complex: a square 2-cell listing two of its edges") {
    ComplexBuilder b(4);
    int e01 = b.edge(0, 1), e12 = b.edge(1, 2);
    b.edge(2, 3);
    b.edge(0, 3);
    CellComplex ok = std::move(b).build();
    std::vector<Cell> cells = ok.cells();
    Cell sq;
    sq.id = static_cast<int>(cells.size());
    sq.dim = 2;
    sq.vertices = {0, 1, 2, 3};
    sq.boundary = {{e01, 1}, {e12, 1}};
    cells.push_back(sq);
    auto ds = validate_complex(CellComplex(4, cells));
    REQUIRE_FALSE(ds.empty());
    CHECK((has_kind(ds, "vertices") || has_kind(ds, "closure") || has_kind(ds, "diamond")));
}

TEST_CASE("restrict_to on the pentagon disk") {
    CellComplex x = polygon_complex(5);
    CHECK(restrict_to(x, VertexSet::full(5)) == x);
    CellComplex path = restrict_to(x, VertexSet::of({0, 1, 2}));
    CHECK(path.f_vector() == std::vector<int>{3, 2});
    CHECK(path.n_vertices() == 5);
    CHECK(path.vertex_support() == VertexSet::of({0, 1, 2}));
    CellComplex two = restrict_to(x, VertexSet::of({0, 2}));
    CHECK(two.f_vector() == std::vector<int>{2});
    CHECK(restrict_to(x, VertexSet{}).is_void());
}

TEST_CASE("reduced homology examples") {
    auto circle = reduced_homology(cycle(5));
    CHECK_FALSE(circle.acyclic);
    CHECK(circle.reduced_betti == std::map<int, std::size_t>{{1, 1}});
    auto disk = reduced_homology(polygon_complex(5), Field::rational());
    CHECK(disk.acyclic);
    CHECK(disk.reduced_betti.empty());
    auto two = reduced_homology(restrict_to(polygon_complex(5), VertexSet::of({0, 2})));
    CHECK(two.reduced_betti == std::map<int, std::size_t>{{0, 1}});
    auto empty = reduced_homology(CellComplex());
    CHECK(empty.acyclic);
    CHECK(empty.reduced_betti.empty());
    // a complex with vertex ids but no cells is void as well
    CHECK(reduced_homology(restrict_to(polygon_complex(5), VertexSet{})).acyclic);
}

TEST_CASE("reduced homology needs signs outside characteristic 2") {
    CellComplex x = polygon_complex(5);
    std::vector<Cell> cells = x.cells();
    for (auto& c : cells)
        for (auto& inc : c.boundary) inc.sign = 0;
    CellComplex unsigned_x(5, cells);
    CHECK(reduced_homology(unsigned_x, Field::gf2()).acyclic);
    CHECK_THROWS_AS(reduced_homology(unsigned_x, Field::rational()), InvalidInput);
}

TEST_CASE("reduced homology matches the reference on every restriction of the corpus") {
    for (const auto& x : corpus()) {
        const int n = x.n_vertices();
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            VertexSet s(w);
            CellComplex r = restrict_to(x, s);
            auto h2 = reduced_homology(r, Field::gf2());
            auto hq = reduced_homology(r, Field::rational());
            CHECK(h2.acyclic == oracle::acyclic(x, s, 2));
            CHECK(hq.acyclic == oracle::acyclic(x, s, 1000003));
            // GF(2) acyclic implies rationally acyclic
            if (h2.acyclic) CHECK(hq.acyclic);
            auto ref = oracle::reduced_betti(x, s, 2);
            for (std::size_t k = 0; k < ref.size(); ++k) {
                int deg = static_cast<int>(k) - 1;
                std::size_t got = h2.reduced_betti.count(deg) ? h2.reduced_betti.at(deg) : 0;
                CHECK(got == ref[k]);
            }
        }
    }
}

TEST_CASE("acyclicity oracle agrees with direct homology, with and without the table") {
    for (const auto& x : corpus()) {
        AcyclicityOracle lazy(x);
        AcyclicityOracle table(x, Field::rational());
        table.precompute();
        CHECK(table.precomputed());
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << x.n_vertices()); ++w) {
            VertexSet s(w);
            bool direct = reduced_homology(restrict_to(x, s)).acyclic;
            CHECK(lazy.acyclic(s) == direct);
            CHECK(table.acyclic(s) == direct);
        }
    }
}

TEST_CASE("assign_signs on a graph orients every edge towards its larger vertex") {
    OrientedTree t{4, {{2, 0}, {0, 1}, {3, 1}}};
    CellComplex x = tree_complex(t);
    std::vector<Cell> cells = x.cells();
    for (auto& c : cells)
        for (auto& inc : c.boundary) inc.sign = 0;
    CellComplex s = assign_signs(CellComplex(4, cells));
    for (int e : s.cells_of_dim(1)) {
        const auto& c = s.cell(e);
        REQUIRE(c.boundary.size() == 2);
        for (const auto& inc : c.boundary) {
            int v = s.cell(inc.cell).vertices[0];
            CHECK(inc.sign == (v == c.vertices[1] ? 1 : -1));
        }
    }
}

TEST_CASE("assign_signs on an unsigned square and on every corpus complex") {
    ComplexBuilder b(4);
    int e01 = b.edge(0, 1), e12 = b.edge(1, 2), e23 = b.edge(2, 3), e03 = b.edge(0, 3);
    b.add_cell({{e01, 0}, {e12, 0}, {e23, 0}, {e03, 0}});
    CellComplex square = assign_signs(std::move(b).build());
    CHECK(square.has_signs());
    CHECK(validate_complex(square).empty());
    CHECK(reduced_homology(square, Field::rational()).acyclic);

    for (const auto& x : corpus()) {
        std::vector<Cell> cells = x.cells();
        for (auto& c : cells)
            for (auto& inc : c.boundary) inc.sign = 0;
        CellComplex s = assign_signs(CellComplex(x.n_vertices(), cells));
        CHECK(s.has_signs());
        CHECK(validate_complex(s).empty());
        CHECK(reduced_homology(s, Field::rational()).reduced_betti == reduced_homology(x, Field::gf2()).reduced_betti);
    }
}

TEST_CASE("assign_signs on the elongated pyramid over a triangle squares to zero") {
    CellComplex x = assign_signs(elongated_pyramid(polygon_complex(3)));
    CHECK(x.f_vector() == std::vector<int>{7, 12, 7, 1});
    for (int d = 1; d <= x.dim(); ++d) {
        IntMatrix a = boundary_matrix(x, d - 1), b = boundary_matrix(x, d);
        CHECK((a * b).is_zero());
    }
}

TEST_CASE("euler characteristic of contractible complexes is one") {
    for (const auto& x : corpus()) {
        if (!reduced_homology(x).acyclic) continue;
        CHECK(euler_characteristic(x) == 1);
    }
    CHECK(euler_characteristic(cycle(5)) == 0);
}

TEST_CASE("cell complex constructor rejects out-of-range data") {
    std::vector<Cell> cells{{0, 0, {0}, {}}, {1, 0, {7}, {}}};
    CHECK_THROWS_AS(CellComplex(2, cells), InvalidInput);
    std::vector<Cell> bad_id{{1, 0, {0}, {}}};
    CHECK_THROWS_AS(CellComplex(1, bad_id), InvalidInput);
}

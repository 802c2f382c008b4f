#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmlabel/complex.hpp"
#include "cmlabel/monomial.hpp"

namespace cmlabel {

// ---------------------------------------------------------------------------
// Trees

/// Tree on [0, n) with every edge oriented (source, target).
struct OrientedTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const OrientedTree&, const OrientedTree&) = default;
};

/// Throws InvalidInput unless the edges form a spanning tree of [0, n).
void validate_tree(const OrientedTree& t);
/// The tree as a 1-dimensional cell complex; edge k is cell n + k.
CellComplex tree_complex(const OrientedTree& t);
/// Edges sorted, each oriented from the smaller to the larger vertex.
OrientedTree normalized(OrientedTree t);

/// All n^(n-2) labelled trees on [0, n), edges oriented small to large.
std::vector<OrientedTree> all_labelled_trees(int n);
/// One representative per isomorphism class.
std::vector<OrientedTree> nonisomorphic_trees(int n);

/// Every tree T on the labelled vertices such that, for each total-degree
/// threshold i, the edges of T whose lcm has degree <= i span the same
/// components as all pairs whose lcm has degree <= i. Normalized, sorted.
std::vector<OrientedTree> tree_resolution_trees(const MonomialLabelling& l);
/// Kruskal choice ordered by (lcm degree, edge).
OrientedTree canonical_resolution_tree(const MonomialLabelling& l);

/// Variables x_e, y_e per edge, in edge order (x_{e1}, y_{e1}, x_{e2}, ...).
/// x_e goes to every vertex on the source side of e, y_e to the target side.
MonomialLabelling tree_maximal_labelling(const OrientedTree& t);

/// The substitution from tree_maximal_labelling(t) to l: for an edge s -> t,
/// y_e goes to the part of l_t not in l_s and x_e to the part of l_s not in
/// l_t. Throws VerificationFailure if it does not carry the maximal labels to l.
Substitution tree_unique_morphism(const OrientedTree& t, const MonomialLabelling& l);

// ---------------------------------------------------------------------------
// Polygons

/// Cyclic run [start, start + length - 1] mod n.
struct StringSubset {
    int start = 0;
    int end = 0;
    int n = 0;

    int length() const { return (end - start + n) % n + 1; }
    VertexSet vertices() const;
};
VertexSet string_set(int start, int length, int n);
/// Is s a nonempty cyclic run of [0, n)?
bool is_string(VertexSet s, int n);

/// Disk bounded by the n-gon 0, 1, ..., n-1.
CellComplex polygon_complex(int n);
/// The n-gon cut by the chord {0, a}.
CellComplex chord_complex(int n, int a);
/// The n-gon cut by non-crossing chords, applied in the given order.
CellComplex subdivided_polygon_complex(int n, const std::vector<std::pair<int, int>>& chords);

/// All strings of length r for n = 2r + 1; throws for even n.
VertexFamily polygon_family(int n);
/// The two maximal families of the chord complex, each with n + 1 members.
std::pair<VertexFamily, VertexFamily> chord_families(int n, int a);

// ---------------------------------------------------------------------------
// Pyramids and polytopes

/// Cone over x with apex n_vertices(x).
CellComplex pyramid(const CellComplex& x);
VertexFamily pyramid_family(const VertexFamily& f);

/// Prism over x with a cone on the top copy; x must have a single top cell.
/// Vertex v at height 0 keeps id v, at height 1 becomes n + v; the apex is 2n.
CellComplex elongated_pyramid(const CellComplex& x);
VertexFamily ep_family(const VertexFamily& f);

/// Rim 0..2n-1, centre 2n, spokes to odd rim vertices, outer edges between
/// consecutive even rim vertices.
CellComplex wheel_polytope(int n);
/// The ten-member family on wheel_polytope(4).
VertexFamily prop48_family();

/// Bipyramid over an n-gon: base 0..n-1, apexes n and n+1.
CellComplex bipyramid_complex(int n);

// ---------------------------------------------------------------------------
// Figure catalogue

struct Fixture {
    std::string id;
    std::string description;
    CellComplex complex;
    MonomialLabelling labelling;
    /// Display names of the variables.
    std::vector<std::string> variables;
};

std::vector<std::string> fixture_ids();
/// Throws InvalidInput for an unknown id.
Fixture figure_fixture(const std::string& id);

}  // namespace cmlabel

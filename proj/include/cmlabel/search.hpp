#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmlabel/complex.hpp"
#include "cmlabel/monomial.hpp"

namespace cmlabel {

/// Default refusal threshold on the number of candidate members.
inline constexpr std::size_t kDefaultMaxCandidates = 60;

struct SearchOptions {
    Field field = Field::gf2();
    /// Only members whose restriction is connected.
    bool connected_only = true;
    /// Prune branches once the first two criteria fail. Off means every
    /// subfamily is generated and tested in full.
    bool pruning = true;
    std::size_t max_candidates = kDefaultMaxCandidates;
    /// Vertex permutations; results are reduced to one per orbit. Must be
    /// automorphisms of the complex.
    std::vector<std::vector<int>> symmetry;
    int jobs = 1;
};

/// Candidate members in canonical order, after dropping every set that is not
/// a valid one-member family on its own (the first two criteria are closed
/// under taking subfamilies). Throws GuardExceeded above max_candidates.
struct SearchSpace {
    std::vector<VertexSet> candidates;
    std::vector<std::vector<int>> symmetry;
};
SearchSpace make_search_space(const CellComplex& x, const SearchOptions& options);

/// Is the induced 1-skeleton on s connected?
bool connected_subset(const CellComplex& x, VertexSet s);

/// Permutations of [0, n) mapping the set of cell vertex sets onto itself.
bool is_automorphism(const CellComplex& x, const std::vector<int>& perm);
/// Rotations and reflections of the cycle 0..m-1 (m = cycle_length, other
/// vertices fixed) that are automorphisms of x.
std::vector<std::vector<int>> dihedral_symmetries(const CellComplex& x, int cycle_length);

/// Every family of candidates satisfying all three criteria, canonical and
/// sorted; one per symmetry orbit when a group is given.
std::vector<VertexFamily> enumerate_valid_families(const CellComplex& x, const SearchOptions& options);
std::vector<VertexFamily> enumerate_maximal_families(const CellComplex& x, const SearchOptions& options);
/// First valid family found, if any.
std::optional<VertexFamily> find_valid_family(const CellComplex& x, const SearchOptions& options);

struct MaximalityVerdict {
    bool maximal = false;
    /// A member that is a disjoint union of others.
    std::optional<VertexSet> decomposable_member;
    /// A set whose addition keeps all three criteria.
    std::optional<VertexSet> addable;
};

/// Reduced, and no set T outside the family (and not a disjoint union of
/// members) can be added without breaking a criterion. Every T subset of [n]
/// is tried. Throws InvalidInput if f fails the criteria.
MaximalityVerdict is_maximal(const CellComplex& x, const VertexFamily& f, const Field& field = Field::gf2(),
                             const AcyclicityOracle* oracle = nullptr);

/// Maximal for the refinement order among the given valid families: no
/// reduced family in the list strictly refines f.
bool refinement_maximal_among(const VertexFamily& f, const std::vector<VertexFamily>& valid);

struct CoveringCheck {
    bool holds = true;
    std::string witness;
};
/// For every t in T in F, at most dim X members avoiding t cover [n] together
/// with T. When X has a single top cell, additionally every disjoint pair of
/// members is completed to a cover by at most dim X - 1 members.
CoveringCheck covering_property_check(const CellComplex& x, const VertexFamily& f);

// ---------------------------------------------------------------------------
// Conjecture harnesses. Reports are evidence only.

struct ChordConjectureRow {
    int n = 0;
    std::vector<std::pair<int, int>> chords;
    std::size_t maximal_families = 0;
    std::vector<std::size_t> family_sizes;
    std::vector<VertexFamily> families;
    /// Every maximal family has n + k members.
    bool consistent = true;
    std::string note;
};

struct PolytopeConjectureRow {
    std::string name;
    std::vector<int> f_vector;
    bool symmetric = false;
    /// "known family", "search", "none found" or "undetermined".
    std::string valid_family_source;
    bool admits_valid_family = false;
    /// A polytope admitting a valid family with an asymmetric f-vector.
    bool counterexample = false;
};

/// Maximal families on subdivided polygons. With no configuration given,
/// runs the default one- and two-chord fixtures.
std::vector<ChordConjectureRow> conjecture_chords(const std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& configs,
                                                  const SearchOptions& options);
std::vector<std::pair<int, std::vector<std::pair<int, int>>>> default_chord_configurations();
/// Every non-crossing set of k chords on the n-gon, one per dihedral orbit.
std::vector<std::vector<std::pair<int, int>>> chord_configurations(int n, int k);

std::vector<PolytopeConjectureRow> conjecture_polytopes(const SearchOptions& options);

}  // namespace cmlabel

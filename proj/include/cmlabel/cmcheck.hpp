#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmlabel/complex.hpp"
#include "cmlabel/monomial.hpp"

namespace cmlabel {

/// Verdicts on the three family criteria for a complex of dimension d.
struct FamilyCriteriaReport {
    int dim = 0;
    /// No d members cover [n].
    bool cond1 = true;
    /// The complement of every union of members is acyclic.
    bool cond2 = true;
    /// Every covering face pair F' < G' is separated by a member meeting G' but not F'.
    bool cond3 = true;
    /// The members cover [n]; implied by cond3 via the pairs (empty face, vertex).
    bool covers = true;

    /// Member indices of a cover by at most d members.
    std::vector<std::size_t> cond1_witness;
    /// A union whose complement restricts to a non-acyclic complex.
    std::optional<VertexSet> cond2_witness;
    /// Cell ids (F', G'); F' = -1 stands for the empty face.
    std::optional<std::pair<int, int>> cond3_witness;

    bool all() const { return cond1 && cond2 && cond3 && covers; }
};

/// Distinct unions of all subfamilies, the empty union included.
std::vector<VertexSet> subfamily_unions(const std::vector<VertexSet>& members);

/// Covering pairs of the face poset as (lower, upper) cell ids, lower = -1 for
/// the empty face below each vertex.
std::vector<std::pair<int, int>> covering_pairs(const CellComplex& x);

/// oracle, when given, must be built on x; it is used for every cond2 query.
FamilyCriteriaReport check_family_criteria(const CellComplex& x, const VertexFamily& f, const Field& field = Field::gf2(),
                                           const AcyclicityOracle* oracle = nullptr);

struct ResolutionCheck {
    bool holds = true;
    /// First lattice point b (in sorted order) whose subcomplex X_{<=b} is not acyclic.
    std::optional<Monomial> witness;
    std::optional<HomologyReport> witness_homology;
    std::size_t lattice_points = 0;
};
ResolutionCheck check_cellular_resolution(const CellComplex& x, const MonomialLabelling& l,
                                          const Field& field = Field::gf2());

struct MinimalityCheck {
    bool holds = true;
    /// (lower, upper) cell ids with equal multidegree; lower = -1 for a unit vertex label.
    std::optional<std::pair<int, int>> witness;
};
MinimalityCheck check_minimal(const CellComplex& x, const MonomialLabelling& l);

/// Fewest variables meeting every label.
int codimension(const MonomialLabelling& l);
/// Fewest members covering [n].
int codimension_family(const VertexFamily& f);

struct CmVerdict {
    Field field;
    bool is_cellular_resolution = false;
    bool is_minimal = false;
    int codimension = 0;
    /// dim X + 1 when the resolution check passes, otherwise -1.
    int projective_dimension = -1;
    bool is_cm = false;

    std::optional<Monomial> failing_multidegree;
    std::optional<std::pair<int, int>> failing_pair;
    /// Variables realizing the codimension.
    std::vector<int> codimension_cover;
};
CmVerdict check_cm_labelling(const CellComplex& x, const MonomialLabelling& l, const Field& field = Field::gf2());

/// Nonzero entry of a differential: sign times the monomial quotient.
struct MonomialEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    int sign = 0;
    Monomial quotient;
};

struct Differential {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<MonomialEntry> entries;
};

/// Free complex of a labelled complex. Degree i has one generator per
/// (i-1)-cell; degree 0 is the ring, generated by the empty cell (id -1).
struct CellularFreeComplex {
    int n_variables = 0;
    std::vector<std::vector<int>> generators;
    std::vector<std::vector<Monomial>> multidegrees;
    /// differentials[i] maps degree i to degree i-1; differentials[0] is empty.
    std::vector<Differential> differentials;

    std::vector<std::size_t> ranks() const;
    /// Consecutive differentials compose to zero as polynomial matrices.
    bool squares_to_zero() const;
};

CellularFreeComplex build_free_complex(const CellComplex& x, const MonomialLabelling& l);

/// Does the degree-b strand of the free complex have the reduced homology of
/// X_{<=b}? Fails as well when the strand itself does not square to zero.
bool strand_oracle(const CellularFreeComplex& fc, const CellComplex& x, const MonomialLabelling& l, const Monomial& b,
                   const Field& field = Field::gf2());
bool strand_oracle(const CellComplex& x, const MonomialLabelling& l, const Monomial& b,
                   const Field& field = Field::gf2());

std::vector<int> f_vector(const CellComplex& x);
/// f_i = f_{dim-1-i} for i < dim, and a single top cell.
bool f_symmetry(const CellComplex& x);

}  // namespace cmlabel

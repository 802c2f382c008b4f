#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmlabel/vertex_set.hpp"

namespace cmlabel {

/// Exponent vector over a fixed number of variables.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial one(int n_variables) { return Monomial(std::vector<int>(static_cast<std::size_t>(n_variables), 0)); }

    int n_variables() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    bool square_free() const;
    bool divides(const Monomial& other) const;
    /// Variables with positive exponent.
    std::vector<int> support() const;
    /// "x0^2*x3", or "1".
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Componentwise maximum (least common multiple).
Monomial join(const Monomial& a, const Monomial& b);
/// Componentwise max(a - b, 0): the part of a not accounted for by b.
Monomial quotient_part(const Monomial& a, const Monomial& b);

/// One monomial per vertex, all over n_variables variables.
struct MonomialLabelling {
    int n_variables = 0;
    std::vector<Monomial> labels;

    int n_vertices() const { return static_cast<int>(labels.size()); }
    bool square_free() const;
    /// Join of the labels of the given vertices; 1 for the empty set.
    Monomial join_of(VertexSet vertices) const;
    /// Vertices whose label divides b.
    VertexSet below(const Monomial& b) const;

    friend bool operator==(const MonomialLabelling&, const MonomialLabelling&) = default;
};

/// Throws InvalidInput unless every label has length n_variables, no label
/// divides another and every variable occurs in some label.
void validate_labelling(const MonomialLabelling& l);

/// Distinct nonempty subsets of [0, n).
struct VertexFamily {
    int n = 0;
    std::vector<VertexSet> sets;

    std::size_t size() const { return sets.size(); }
    VertexSet union_of_all() const;
    bool covers() const { return union_of_all() == VertexSet::full(n); }
    bool contains(VertexSet s) const;

    /// Same n and exact list equality (order matters).
    friend bool operator==(const VertexFamily&, const VertexFamily&) = default;
};

/// Throws InvalidInput on empty, out-of-range or repeated members.
void validate_family(const VertexFamily& f);
/// Members sorted by canonical_less.
VertexFamily canonical(VertexFamily f);
/// Equal as sets of members.
bool same_sets(const VertexFamily& a, const VertexFamily& b);
std::string to_string(const VertexFamily& f);

/// Output of family_of. Variables giving the same vertex set are merged into
/// one member; each merge is recorded as (kept variable, dropped variable).
struct FamilyReadout {
    VertexFamily family;
    /// member_variable[k] is the first variable whose set is family.sets[k].
    std::vector<int> member_variable;
    std::vector<std::pair<int, int>> duplicate_variables;

    /// True when the labelling lies in the distinct-sets subcategory.
    bool distinct() const { return duplicate_variables.empty(); }
};

/// V_p = {i : x_p divides label i}, in variable order, empty sets dropped.
FamilyReadout family_of(const MonomialLabelling& l);

/// One variable per member in list order; vertex i gets the product of the
/// variables whose member contains it.
MonomialLabelling labelling_of(const VertexFamily& f);

/// Substitution of variables: images[p] is the monomial (over the target
/// variables) that source variable p is sent to.
struct Substitution {
    int n_target_variables = 0;
    std::vector<Monomial> images;

    Monomial apply(const Monomial& m) const;
    MonomialLabelling apply(const MonomialLabelling& l) const;
    /// (second ∘ first): apply first, then second.
    static Substitution compose(const Substitution& first, const Substitution& second);

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct Polarization {
    MonomialLabelling labelling;
    /// origin[k] = (p, j): new variable k is the j-th copy (from 1) of x_p.
    std::vector<std::pair<int, int>> origin;

    /// x_{p,j} -> x_p, carrying the polarized labels back to the original ones.
    Substitution depolarization(int n_original_variables) const;
};

/// Replace x_p^k by x_{p,1}...x_{p,k}; new variables are ordered p-major.
Polarization polarize(const MonomialLabelling& l);

/// Can target be written as a disjoint union of members? Returns the indices
/// of one such partition, searched exhaustively with larger members first.
/// Members equal to target are allowed only when allow_self is set.
std::optional<std::vector<std::size_t>> disjoint_decomposition(VertexSet target, const std::vector<VertexSet>& members,
                                                               bool allow_self = true);

/// Members that are not a disjoint union of at least two other members.
VertexFamily reduce_family(const VertexFamily& f);
bool is_reduced(const VertexFamily& f);

enum class Refinement {
    equal,         // same members
    first_finer,   // F strictly refines G
    second_finer,  // G strictly refines F
    equivalent,    // each refines the other yet the member sets differ (only for non-reduced input)
    incomparable,
};
std::string to_string(Refinement r);

/// Does every member of coarse split into members of fine?
bool refines(const VertexFamily& fine, const VertexFamily& coarse);
Refinement refinement_compare(const VertexFamily& f, const VertexFamily& g);

/// Morphism criterion from the labelling of f to the labelling of g.
bool morphism_exists(const VertexFamily& f, const VertexFamily& g);
/// The variable substitution labelling_of(f) -> labelling_of(g) realizing a
/// morphism: member p of f goes to the product of the members of g whose
/// chosen decomposition uses p. Throws InvalidInput if none exists.
Substitution morphism_substitution(const VertexFamily& f, const VertexFamily& g);

/// Join closure of the labels, sorted.
std::vector<Monomial> lcm_lattice(const MonomialLabelling& l);

/// Smallest number of members covering universe, with one optimal cover
/// (indices). nullopt if the members do not cover it.
std::optional<std::vector<std::size_t>> minimum_cover(VertexSet universe, const std::vector<VertexSet>& members);

}  // namespace cmlabel

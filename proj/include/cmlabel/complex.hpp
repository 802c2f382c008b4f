#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmlabel/field.hpp"
#include "cmlabel/linalg.hpp"
#include "cmlabel/vertex_set.hpp"

namespace cmlabel {

/// One entry of a cell boundary. sign is +1 or -1, or 0 when the orientation
/// has not been chosen yet (GF(2) work and assign_signs only).
struct Incidence {
    int cell = 0;
    int sign = 0;
    friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Cell {
    int id = 0;
    int dim = 0;
    std::vector<int> vertices;  // sorted
    std::vector<Incidence> boundary;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// A regular cell complex given by its face list and signed boundary incidences.
///
/// Vertex ids live in [0, n_vertices). Restricting a complex keeps the ambient
/// vertex numbering, so a vertex id may have no 0-cell; it never has two.
class CellComplex {
public:
    CellComplex() = default;
    /// Checks only what later code relies on for memory safety: dense ids,
    /// vertex ids in range, boundary ids in range. Everything else is
    /// reported by validate_complex.
    CellComplex(int n_vertices, std::vector<Cell> cells);

    int n_vertices() const { return n_vertices_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int id) const { return cells_[static_cast<std::size_t>(id)]; }
    VertexSet cell_vertices(int id) const { return masks_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return cells_.size(); }

    /// -1 for the void complex.
    int dim() const { return dim_; }
    bool is_void() const { return cells_.empty(); }
    /// True iff every incidence carries a nonzero sign.
    bool has_signs() const;
    /// Vertices that own a 0-cell.
    VertexSet vertex_support() const;
    /// Number of cells per dimension, f[0..dim].
    std::vector<int> f_vector() const;
    std::vector<int> cells_of_dim(int d) const;
    /// The 0-cell of vertex v, or -1.
    int vertex_cell(int v) const;

    friend bool operator==(const CellComplex& a, const CellComplex& b) {
        return a.n_vertices_ == b.n_vertices_ && a.cells_ == b.cells_;
    }

private:
    int n_vertices_ = 0;
    int dim_ = -1;
    std::vector<Cell> cells_;
    std::vector<VertexSet> masks_;
    std::vector<int> vertex_cell_;
};

/// Appends cells in creation order; vertices become cells 0..n-1.
class ComplexBuilder {
public:
    explicit ComplexBuilder(int n_vertices);

    /// Edge between two vertices, oriented +1 on the larger id. Returns the
    /// existing edge if already present.
    int edge(int u, int v);
    /// A cell of dimension 1 + dim(boundary cells) whose vertex set is the
    /// union of the boundary's vertex sets.
    int add_cell(std::vector<Incidence> boundary);
    int find_cell(VertexSet vertices, int dim) const;

    CellComplex build() &&;

private:
    int n_vertices_;
    std::vector<Cell> cells_;
    std::vector<VertexSet> masks_;
};

struct Diagnostic {
    std::string kind;
    std::vector<int> cells;
    std::string message;
};

/// Empty iff every regular-cell-complex invariant holds.
std::vector<Diagnostic> validate_complex(const CellComplex& x);

/// Cells whose vertex set lies inside w, re-indexed densely in their original
/// order; incidences are inherited. The empty set yields the void complex.
CellComplex restrict_to(const CellComplex& x, VertexSet w);

struct HomologyReport {
    Field field;
    /// Nonzero reduced Betti numbers only; key -1 is the augmentation degree.
    std::map<int, std::size_t> reduced_betti;
    bool acyclic = true;
};

/// Reduced homology of the augmented cellular chain complex. The void complex
/// is acyclic by convention.
HomologyReport reduced_homology(const CellComplex& x, const Field& field = Field::gf2());

/// Boundary matrix in degree d >= 0: rows are (d-1)-cells (a single
/// augmentation row for d = 0), columns are d-cells, both in cell-id order.
IntMatrix boundary_matrix(const CellComplex& x, int d, const Field& field = Field::rational());

/// Orient every cell so that the boundary squares to zero. Edges get +1 on the
/// larger vertex id; higher cells are solved facet by facet by propagating the
/// diamond constraints along a spanning tree.
CellComplex assign_signs(const CellComplex& x);

/// Alternating count sum_d (-1)^d f_d.
long euler_characteristic(const CellComplex& x);

/// Repeated acyclicity queries on vertex-induced subcomplexes of one complex.
/// After precompute() the object is immutable and safe to share across threads.
class AcyclicityOracle {
public:
    AcyclicityOracle(const CellComplex& x, Field field = Field::gf2());

    /// Is the restriction of the complex to w acyclic?
    bool acyclic(VertexSet w) const;
    /// Tabulate all 2^n answers; requires n <= 24.
    void precompute();
    bool precomputed() const { return !table_.empty(); }

    const CellComplex& complex() const { return complex_; }
    const Field& field() const { return field_; }

private:
    bool compute(VertexSet w) const;

    CellComplex complex_;
    Field field_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<std::uint8_t> table_;
};

}  // namespace cmlabel

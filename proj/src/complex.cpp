#include "cmlabel/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "cmlabel/errors.hpp"

namespace cmlabel {

namespace {

std::string cell_name(const CellComplex& x, int id) {
    return "cell " + std::to_string(id) + " " + x.cell_vertices(id).to_string();
}

}  // namespace

// ---------------------------------------------------------------------------
// CellComplex

CellComplex::CellComplex(int n_vertices, std::vector<Cell> cells)
    : n_vertices_(n_vertices), cells_(std::move(cells)) {
    if (n_vertices < 0 || n_vertices > kMaxVertices)
        throw InvalidInput("n_vertices must lie in [0, " + std::to_string(kMaxVertices) + "]");
    vertex_cell_.assign(static_cast<std::size_t>(n_vertices), -1);
    masks_.reserve(cells_.size());
    const int count = static_cast<int>(cells_.size());
    for (int i = 0; i < count; ++i) {
        const Cell& c = cells_[static_cast<std::size_t>(i)];
        if (c.id != i) throw InvalidInput("cell ids must be dense and in order; found id " + std::to_string(c.id) +
                                          " at position " + std::to_string(i));
        VertexSet mask;
        for (int v : c.vertices) {
            if (v < 0 || v >= n_vertices) throw InvalidInput("cell " + std::to_string(i) + ": vertex id out of range");
            mask.insert(v);
        }
        for (const Incidence& inc : c.boundary)
            if (inc.cell < 0 || inc.cell >= count)
                throw InvalidInput("cell " + std::to_string(i) + ": boundary references unknown cell");
        masks_.push_back(mask);
        dim_ = std::max(dim_, c.dim);
        if (c.dim == 0 && c.vertices.size() == 1 && vertex_cell_[static_cast<std::size_t>(c.vertices[0])] < 0)
            vertex_cell_[static_cast<std::size_t>(c.vertices[0])] = i;
    }
}

bool CellComplex::has_signs() const {
    for (const Cell& c : cells_)
        for (const Incidence& inc : c.boundary)
            if (inc.sign == 0) return false;
    return true;
}

VertexSet CellComplex::vertex_support() const {
    VertexSet s;
    for (int v = 0; v < n_vertices_; ++v)
        if (vertex_cell_[static_cast<std::size_t>(v)] >= 0) s.insert(v);
    return s;
}

std::vector<int> CellComplex::f_vector() const {
    std::vector<int> f(static_cast<std::size_t>(dim_ + 1), 0);
    for (const Cell& c : cells_)
        if (c.dim >= 0) ++f[static_cast<std::size_t>(c.dim)];
    return f;
}

std::vector<int> CellComplex::cells_of_dim(int d) const {
    std::vector<int> out;
    for (const Cell& c : cells_)
        if (c.dim == d) out.push_back(c.id);
    return out;
}

int CellComplex::vertex_cell(int v) const {
    if (v < 0 || v >= n_vertices_) return -1;
    return vertex_cell_[static_cast<std::size_t>(v)];
}

// ---------------------------------------------------------------------------
// ComplexBuilder

ComplexBuilder::ComplexBuilder(int n_vertices) : n_vertices_(n_vertices) {
    if (n_vertices < 0 || n_vertices > kMaxVertices) throw InvalidInput("vertex count out of range");
    for (int v = 0; v < n_vertices; ++v) {
        cells_.push_back(Cell{v, 0, {v}, {}});
        masks_.push_back(VertexSet::single(v));
    }
}

int ComplexBuilder::find_cell(VertexSet vertices, int dim) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].dim == dim && masks_[i] == vertices) return static_cast<int>(i);
    return -1;
}

int ComplexBuilder::edge(int u, int v) {
    if (u == v) throw InvalidInput("edge needs two distinct vertices");
    const VertexSet ends = VertexSet::single(u) | VertexSet::single(v);
    if (int existing = find_cell(ends, 1); existing >= 0) return existing;
    return add_cell({{std::min(u, v), -1}, {std::max(u, v), +1}});
}

int ComplexBuilder::add_cell(std::vector<Incidence> boundary) {
    if (boundary.empty()) throw InvalidInput("a positive-dimensional cell needs a boundary");
    const int dim = cells_[static_cast<std::size_t>(boundary.front().cell)].dim + 1;
    VertexSet mask;
    for (const Incidence& inc : boundary) {
        if (cells_[static_cast<std::size_t>(inc.cell)].dim != dim - 1)
            throw InvalidInput("boundary cells must share one dimension");
        mask |= masks_[static_cast<std::size_t>(inc.cell)];
    }
    const int id = static_cast<int>(cells_.size());
    cells_.push_back(Cell{id, dim, mask.to_vector(), std::move(boundary)});
    masks_.push_back(mask);
    return id;
}

CellComplex ComplexBuilder::build() && { return CellComplex(n_vertices_, std::move(cells_)); }

// ---------------------------------------------------------------------------
// Validation

std::vector<Diagnostic> validate_complex(const CellComplex& x) {
    std::vector<Diagnostic> out;
    auto report = [&](std::string kind, std::vector<int> cells, std::string message) {
        out.push_back(Diagnostic{std::move(kind), std::move(cells), std::move(message)});
    };

    std::vector<int> zero_cells_of_vertex(static_cast<std::size_t>(x.n_vertices()), 0);
    VertexSet referenced;
    for (const Cell& c : x.cells()) {
        referenced |= x.cell_vertices(c.id);
        if (c.dim < 0) report("dimension", {c.id}, cell_name(x, c.id) + " has negative dimension");
        if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
            std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
            report("vertices", {c.id}, cell_name(x, c.id) + " vertex list is not sorted and duplicate-free");
        if (c.dim == 0) {
            if (c.vertices.size() != 1 || !c.boundary.empty())
                report("vertex-cell", {c.id}, cell_name(x, c.id) + " must have one vertex and empty boundary");
            for (int v : c.vertices) ++zero_cells_of_vertex[static_cast<std::size_t>(v)];
            continue;
        }
        if (c.boundary.empty()) {
            report("closure", {c.id}, cell_name(x, c.id) + " has empty boundary");
            continue;
        }
        std::set<int> seen;
        VertexSet boundary_union;
        for (const Incidence& inc : c.boundary) {
            const Cell& f = x.cell(inc.cell);
            if (f.dim != c.dim - 1)
                report("boundary-dimension", {c.id, f.id},
                       cell_name(x, c.id) + " lists " + cell_name(x, f.id) + " of the wrong dimension");
            if (!seen.insert(inc.cell).second)
                report("boundary-duplicate", {c.id, f.id}, cell_name(x, c.id) + " lists a boundary cell twice");
            if (inc.sign < -1 || inc.sign > 1)
                report("sign", {c.id, f.id}, cell_name(x, c.id) + " has an incidence outside {-1, 0, +1}");
            boundary_union |= x.cell_vertices(inc.cell);
        }
        if (boundary_union != x.cell_vertices(c.id))
            report("closure", {c.id},
                   cell_name(x, c.id) + " vertex set differs from the union of its boundary " + boundary_union.to_string());
    }
    for (int v = 0; v < x.n_vertices(); ++v) {
        const int k = zero_cells_of_vertex[static_cast<std::size_t>(v)];
        if (k > 1) report("duplicate-vertex", {}, "vertex " + std::to_string(v) + " has several 0-cells");
        if (k == 0 && referenced.contains(v))
            report("missing-vertex", {}, "vertex " + std::to_string(v) + " is used by a cell but has no 0-cell");
    }
    if (!out.empty()) return out;  // the checks below assume well-formed boundaries

    for (const Cell& c : x.cells()) {
        if (c.dim == 1) {
            if (c.boundary.size() != 2) {
                report("diamond", {c.id}, cell_name(x, c.id) + " must have exactly two endpoints");
                continue;
            }
            const int s0 = c.boundary[0].sign, s1 = c.boundary[1].sign;
            if (s0 != 0 && s1 != 0 && s0 + s1 != 0)
                report("boundary-squared", {c.id}, cell_name(x, c.id) + " endpoints have equal signs");
            continue;
        }
        if (c.dim < 2) continue;
        // (d-2)-cell -> (number of facets containing it, signed sum of paths).
        std::map<int, std::pair<int, long>> below;
        bool signed_cell = true;
        for (const Incidence& inc : c.boundary) {
            if (inc.sign == 0) signed_cell = false;
            for (const Incidence& sub : x.cell(inc.cell).boundary) {
                auto& entry = below[sub.cell];
                ++entry.first;
                entry.second += static_cast<long>(inc.sign) * sub.sign;
                if (sub.sign == 0) signed_cell = false;
            }
        }
        for (const auto& [g, entry] : below) {
            if (entry.first != 2)
                report("diamond", {c.id, g},
                       cell_name(x, c.id) + ": " + cell_name(x, g) + " lies in " + std::to_string(entry.first) +
                           " boundary cells instead of 2");
            else if (signed_cell && entry.second != 0)
                report("boundary-squared", {c.id, g},
                       cell_name(x, c.id) + ": boundary of boundary is nonzero at " + cell_name(x, g));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Restriction and homology

CellComplex restrict_to(const CellComplex& x, VertexSet w) {
    w.for_each([&](int v) {
        if (v >= x.n_vertices()) throw InvalidInput("restrict: vertex id " + std::to_string(v) + " out of range");
    });
    std::vector<int> new_id(x.size(), -1);
    std::vector<Cell> kept;
    for (const Cell& c : x.cells()) {
        if (!x.cell_vertices(c.id).subset_of(w)) continue;
        new_id[static_cast<std::size_t>(c.id)] = static_cast<int>(kept.size());
        Cell copy = c;
        copy.id = static_cast<int>(kept.size());
        for (Incidence& inc : copy.boundary) inc.cell = new_id[static_cast<std::size_t>(inc.cell)];
        kept.push_back(std::move(copy));
    }
    return CellComplex(x.n_vertices(), std::move(kept));
}

namespace {

int entry_sign(int sign, const Field& field) {
    if (sign == 0) {
        if (field.needs_signs())
            throw InvalidInput("complex lacks incidence signs; only GF(2) computations are available");
        return 1;
    }
    return sign;
}

/// Cells of x inside w, grouped by dimension.
std::vector<std::vector<int>> cells_inside(const CellComplex& x, VertexSet w) {
    std::vector<std::vector<int>> by_dim(static_cast<std::size_t>(std::max(x.dim(), -1) + 1));
    for (const Cell& c : x.cells())
        if (x.cell_vertices(c.id).subset_of(w)) by_dim[static_cast<std::size_t>(c.dim)].push_back(c.id);
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    return by_dim;
}

/// Rank of the boundary map from dimension d to d-1 on the given cell lists.
std::size_t boundary_rank(const CellComplex& x, const std::vector<std::vector<int>>& by_dim, int d,
                          const Field& field, std::vector<int>& local) {
    if (d == 0) return by_dim.empty() || by_dim[0].empty() ? 0 : 1;
    if (d >= static_cast<int>(by_dim.size())) return 0;
    const auto& rows = by_dim[static_cast<std::size_t>(d - 1)];
    const auto& cols = by_dim[static_cast<std::size_t>(d)];
    if (rows.empty() || cols.empty()) return 0;
    for (std::size_t i = 0; i < rows.size(); ++i) local[static_cast<std::size_t>(rows[i])] = static_cast<int>(i);

    if (field.kind == Field::Kind::gf2) {
        const std::size_t words = (rows.size() + 63) / 64;
        std::vector<Gf2Row> packed(cols.size(), Gf2Row(words, 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const Incidence& inc : x.cell(cols[j]).boundary) {
                const int r = local[static_cast<std::size_t>(inc.cell)];
                packed[j][static_cast<std::size_t>(r) / 64] ^= std::uint64_t{1} << (r % 64);
            }
        return rank_gf2_rows(packed);
    }
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const Incidence& inc : x.cell(cols[j]).boundary)
            m(static_cast<std::size_t>(local[static_cast<std::size_t>(inc.cell)]), j) = entry_sign(inc.sign, field);
    return rank(m, field);
}

std::map<int, std::size_t> reduced_betti_inside(const CellComplex& x, VertexSet w, const Field& field) {
    std::map<int, std::size_t> betti;
    const auto by_dim = cells_inside(x, w);
    if (by_dim.empty()) return betti;  // void complex
    std::vector<int> local(x.size(), -1);
    const int top = static_cast<int>(by_dim.size()) - 1;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[d] = rank of d -> d-1
    for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = boundary_rank(x, by_dim, d, field, local);
    const std::size_t aug = 1 - ranks[0];
    if (aug != 0) betti[-1] = aug;
    for (int d = 0; d <= top; ++d) {
        const std::size_t f = by_dim[static_cast<std::size_t>(d)].size();
        const std::size_t b = f - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)];
        if (b != 0) betti[d] = b;
    }
    return betti;
}

}  // namespace

IntMatrix boundary_matrix(const CellComplex& x, int d, const Field& field) {
    const auto cols = x.cells_of_dim(d);
    if (d == 0) {
        IntMatrix m(1, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m(0, j) = 1;
        return m;
    }
    const auto rows = x.cells_of_dim(d - 1);
    std::vector<int> local(x.size(), -1);
    for (std::size_t i = 0; i < rows.size(); ++i) local[static_cast<std::size_t>(rows[i])] = static_cast<int>(i);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const Incidence& inc : x.cell(cols[j]).boundary)
            m(static_cast<std::size_t>(local[static_cast<std::size_t>(inc.cell)]), j) = entry_sign(inc.sign, field);
    return m;
}

HomologyReport reduced_homology(const CellComplex& x, const Field& field) {
    if (field.needs_signs() && !x.has_signs())
        throw InvalidInput("homology over " + field.name() + " needs a signed complex; run assign_signs first");
    HomologyReport report;
    report.field = field;
    report.reduced_betti = reduced_betti_inside(x, VertexSet::full(x.n_vertices()), field);
    report.acyclic = report.reduced_betti.empty();
    return report;
}

long euler_characteristic(const CellComplex& x) {
    long chi = 0;
    for (const Cell& c : x.cells()) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

// ---------------------------------------------------------------------------
// Orientation

CellComplex assign_signs(const CellComplex& x) {
    std::vector<Cell> cells = x.cells();
    auto sign_of = [&](int cell, int sub) {
        for (const Incidence& inc : cells[static_cast<std::size_t>(cell)].boundary)
            if (inc.cell == sub) return inc.sign;
        return 0;
    };

    std::vector<int> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cells[static_cast<std::size_t>(a)].dim < cells[static_cast<std::size_t>(b)].dim; });

    for (int id : order) {
        Cell& c = cells[static_cast<std::size_t>(id)];
        if (c.dim == 0) continue;
        if (c.dim == 1) {
            if (c.boundary.size() != 2) throw InvalidInput("assign_signs: edge " + std::to_string(id) + " needs two endpoints");
            const int v0 = cells[static_cast<std::size_t>(c.boundary[0].cell)].vertices.at(0);
            const int v1 = cells[static_cast<std::size_t>(c.boundary[1].cell)].vertices.at(0);
            c.boundary[0].sign = v0 > v1 ? +1 : -1;
            c.boundary[1].sign = -c.boundary[0].sign;
            continue;
        }
        // Diamond graph on the facets of c: facets a, b sharing a (d-2)-cell g
        // must satisfy s(c,a) s(c,b) = -s(a,g) s(b,g).
        const std::size_t k = c.boundary.size();
        std::map<int, std::vector<std::size_t>> facets_through;
        for (std::size_t i = 0; i < k; ++i)
            for (const Incidence& sub : cells[static_cast<std::size_t>(c.boundary[i].cell)].boundary)
                facets_through[sub.cell].push_back(i);
        struct Link {
            std::size_t other;
            int product;
            int ridge;
        };
        std::vector<std::vector<Link>> links(k);
        for (const auto& [g, through] : facets_through) {
            if (through.size() != 2) {
                std::ostringstream msg;
                msg << "assign_signs: cell " << id << " violates the diamond property at cell " << g << " (in "
                    << through.size() << " facets)";
                throw InvalidInput(msg.str());
            }
            const std::size_t a = through[0], b = through[1];
            const int product = -sign_of(c.boundary[a].cell, g) * sign_of(c.boundary[b].cell, g);
            links[a].push_back({b, product, g});
            links[b].push_back({a, product, g});
        }
        std::vector<int> sign(k, 0);
        std::vector<std::size_t> parent(k, k);
        for (std::size_t root = 0; root < k; ++root) {
            if (sign[root] != 0) continue;
            sign[root] = +1;
            std::queue<std::size_t> queue;
            queue.push(root);
            while (!queue.empty()) {
                const std::size_t a = queue.front();
                queue.pop();
                for (const Link& l : links[a]) {
                    const int wanted = sign[a] * l.product;
                    if (sign[l.other] == 0) {
                        sign[l.other] = wanted;
                        parent[l.other] = a;
                        queue.push(l.other);
                    } else if (sign[l.other] != wanted) {
                        std::ostringstream msg;
                        msg << "assign_signs: inconsistent orientation constraints on cell " << id
                            << "; diamond cycle closes through ridge " << l.ridge << " between facets "
                            << c.boundary[a].cell << " and " << c.boundary[l.other].cell;
                        throw InvalidInput(msg.str());
                    }
                }
            }
        }
        for (std::size_t i = 0; i < k; ++i) c.boundary[i].sign = sign[i];
    }
    return CellComplex(x.n_vertices(), std::move(cells));
}

// ---------------------------------------------------------------------------
// AcyclicityOracle

AcyclicityOracle::AcyclicityOracle(const CellComplex& x, Field field) : complex_(x), field_(field) {
    if (field.needs_signs() && !x.has_signs())
        throw InvalidInput("acyclicity over " + field.name() + " needs a signed complex");
    by_dim_.resize(static_cast<std::size_t>(std::max(x.dim(), -1) + 1));
    for (const Cell& c : x.cells()) by_dim_[static_cast<std::size_t>(c.dim)].push_back(c.id);
}

bool AcyclicityOracle::compute(VertexSet w) const {
    std::vector<std::vector<int>> inside(by_dim_.size());
    long chi = -1;  // reduced Euler characteristic
    bool any = false;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        for (int id : by_dim_[d])
            if (complex_.cell_vertices(id).subset_of(w)) {
                inside[d].push_back(id);
                chi += (d % 2 == 0) ? 1 : -1;
                any = true;
            }
    if (!any) return true;
    if (chi != 0) return false;
    while (!inside.empty() && inside.back().empty()) inside.pop_back();
    std::vector<int> local(complex_.size(), -1);
    const int top = static_cast<int>(inside.size()) - 1;
    std::size_t next_rank = 0;  // rank of (d+1) -> d, computed top-down
    for (int d = top; d >= 0; --d) {
        const std::size_t r = boundary_rank(complex_, inside, d, field_, local);
        if (inside[static_cast<std::size_t>(d)].size() != r + next_rank) return false;
        next_rank = r;
    }
    return next_rank == 1;
}

bool AcyclicityOracle::acyclic(VertexSet w) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(w.bits())] != 0;
    return compute(w);
}

void AcyclicityOracle::precompute() {
    const int n = complex_.n_vertices();
    if (n > 24) throw InvalidInput("acyclicity table limited to 24 vertices");
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::uint64_t w = 0; w < table.size(); ++w) table[w] = compute(VertexSet(w)) ? 1 : 0;
    table_ = std::move(table);
}

}  // namespace cmlabel

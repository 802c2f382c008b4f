#include "cmlabel/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "cmlabel/errors.hpp"

namespace cmlabel {

namespace {

/// Union-find over [0, n).
struct Components {
    std::vector<int> parent;
    explicit Components(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
    /// Component labels normalized to the smallest member.
    std::vector<int> labels() {
        std::vector<int> out(parent.size());
        for (std::size_t v = 0; v < parent.size(); ++v) out[v] = find(static_cast<int>(v));
        return out;
    }
};

/// A 2-cell on a vertex cycle; an edge traversed from its smaller to its
/// larger endpoint gets +1.
int add_polygon(ComplexBuilder& b, const std::vector<int>& cycle) {
    std::vector<Incidence> boundary;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        boundary.push_back({b.edge(u, v), u < v ? +1 : -1});
    }
    return b.add_cell(std::move(boundary));
}

/// Vertices on each side of edge k: side[k] = vertices reachable from the
/// source of edge k without crossing it.
std::vector<VertexSet> source_sides(const OrientedTree& t) {
    std::vector<VertexSet> sides;
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        Components comp(t.n);
        for (std::size_t j = 0; j < t.edges.size(); ++j)
            if (j != k) comp.unite(t.edges[j].first, t.edges[j].second);
        VertexSet side;
        const int root = comp.find(t.edges[k].first);
        for (int v = 0; v < t.n; ++v)
            if (comp.find(v) == root) side.insert(v);
        sides.push_back(side);
    }
    return sides;
}

std::string tree_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> children;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) children.push_back(tree_code(adj, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

/// Isomorphism invariant: the smallest rooted code over the tree's centres.
std::string canonical_code(const OrientedTree& t) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.n));
    for (auto [u, v] : t.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> degree(static_cast<std::size_t>(t.n));
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        std::string code = tree_code(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Trees

void validate_tree(const OrientedTree& t) {
    if (t.n < 1 || t.n > kMaxVertices) throw InvalidInput("tree vertex count out of range");
    if (static_cast<int>(t.edges.size()) != t.n - 1) throw InvalidInput("a tree on n vertices has n - 1 edges");
    Components comp(t.n);
    for (auto [u, v] : t.edges) {
        if (u < 0 || v < 0 || u >= t.n || v >= t.n) throw InvalidInput("tree edge endpoint out of range");
        if (!comp.unite(u, v)) throw InvalidInput("tree edges contain a cycle");
    }
}

CellComplex tree_complex(const OrientedTree& t) {
    validate_tree(t);
    ComplexBuilder b(t.n);
    for (auto [u, v] : t.edges) b.edge(u, v);
    return std::move(b).build();
}

OrientedTree normalized(OrientedTree t) {
    for (auto& [u, v] : t.edges)
        if (u > v) std::swap(u, v);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

std::vector<OrientedTree> all_labelled_trees(int n) {
    if (n < 1 || n > 10) throw InvalidInput("labelled tree enumeration supports 1 <= n <= 10");
    std::vector<OrientedTree> out;
    if (n == 1) return {OrientedTree{1, {}}};
    if (n == 2) return {OrientedTree{2, {{0, 1}}}};
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        // Decode the Pruefer sequence.
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int s : seq) ++degree[static_cast<std::size_t>(s)];
        OrientedTree t{n, {}};
        for (int s : seq) {
            int leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            t.edges.emplace_back(leaf, s);
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(s)];
        }
        int u = -1, v = -1;
        for (int w = 0; w < n; ++w)
            if (degree[static_cast<std::size_t>(w)] == 1) (u < 0 ? u : v) = w;
        t.edges.emplace_back(u, v);
        out.push_back(normalized(std::move(t)));

        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

std::vector<OrientedTree> nonisomorphic_trees(int n) {
    std::vector<OrientedTree> out;
    std::set<std::string> seen;
    for (auto& t : all_labelled_trees(n))
        if (seen.insert(canonical_code(t)).second) out.push_back(std::move(t));
    return out;
}

namespace {

struct PairDegree {
    int degree;
    int u, v;
    bool operator<(const PairDegree& o) const { return std::tie(degree, u, v) < std::tie(o.degree, o.u, o.v); }
};

std::vector<PairDegree> pair_degrees(const MonomialLabelling& l) {
    std::vector<PairDegree> pairs;
    for (int u = 0; u < l.n_vertices(); ++u)
        for (int v = u + 1; v < l.n_vertices(); ++v)
            pairs.push_back({join(l.labels[static_cast<std::size_t>(u)], l.labels[static_cast<std::size_t>(v)]).degree(), u, v});
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

void require_codim_two(const MonomialLabelling& l) {
    validate_labelling(l);
    if (l.n_vertices() < 1) throw InvalidInput("no labels");
    std::vector<VertexSet> supports(static_cast<std::size_t>(l.n_variables));
    for (int i = 0; i < l.n_vertices(); ++i)
        for (int p : l.labels[static_cast<std::size_t>(i)].support()) supports[static_cast<std::size_t>(p)].insert(i);
    const auto cover = minimum_cover(VertexSet::full(l.n_vertices()), supports);
    if (!cover || (cover->size() != 2 && l.n_vertices() > 1))
        throw InvalidInput("tree resolutions need an ideal of codimension 2");
}

}  // namespace

std::vector<OrientedTree> tree_resolution_trees(const MonomialLabelling& l) {
    require_codim_two(l);
    const int n = l.n_vertices();
    const auto pairs = pair_degrees(l);
    std::map<std::pair<int, int>, int> degree_of;
    for (const auto& p : pairs) degree_of[{p.u, p.v}] = p.degree;
    std::vector<int> thresholds;
    for (const auto& p : pairs)
        if (thresholds.empty() || thresholds.back() != p.degree) thresholds.push_back(p.degree);

    std::vector<std::vector<int>> k_components;
    for (int i : thresholds) {
        Components comp(n);
        for (const auto& p : pairs)
            if (p.degree <= i) comp.unite(p.u, p.v);
        k_components.push_back(comp.labels());
    }
    std::vector<OrientedTree> out;
    for (auto& t : all_labelled_trees(n)) {
        bool ok = true;
        for (std::size_t k = 0; k < thresholds.size() && ok; ++k) {
            Components comp(n);
            for (auto [u, v] : t.edges)
                if (degree_of[{u, v}] <= thresholds[k]) comp.unite(u, v);
            ok = comp.labels() == k_components[k];
        }
        if (ok) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const OrientedTree& a, const OrientedTree& b) { return a.edges < b.edges; });
    return out;
}

OrientedTree canonical_resolution_tree(const MonomialLabelling& l) {
    require_codim_two(l);
    OrientedTree t{l.n_vertices(), {}};
    Components comp(t.n);
    for (const auto& p : pair_degrees(l))
        if (comp.unite(p.u, p.v)) t.edges.emplace_back(p.u, p.v);
    return normalized(std::move(t));
}

MonomialLabelling tree_maximal_labelling(const OrientedTree& t) {
    validate_tree(t);
    MonomialLabelling l;
    if (t.n == 1) {
        // No edges: the lone vertex gets a single variable.
        l.n_variables = 1;
        l.labels.push_back(Monomial({1}));
        return l;
    }
    l.n_variables = 2 * static_cast<int>(t.edges.size());
    l.labels.assign(static_cast<std::size_t>(t.n), Monomial::one(l.n_variables));
    const auto sides = source_sides(t);
    for (std::size_t k = 0; k < t.edges.size(); ++k)
        for (int v = 0; v < t.n; ++v)
            l.labels[static_cast<std::size_t>(v)].exponents[2 * k + (sides[k].contains(v) ? 0 : 1)] = 1;
    return l;
}

Substitution tree_unique_morphism(const OrientedTree& t, const MonomialLabelling& l) {
    validate_tree(t);
    if (l.n_vertices() != t.n) throw InvalidInput("labelling and tree have different vertex counts");
    const MonomialLabelling maximal = tree_maximal_labelling(t);
    Substitution s;
    s.n_target_variables = l.n_variables;
    if (t.n == 1) {
        s.images.push_back(l.labels[0]);
    } else {
        for (auto [src, dst] : t.edges) {
            const Monomial& ms = l.labels[static_cast<std::size_t>(src)];
            const Monomial& mt = l.labels[static_cast<std::size_t>(dst)];
            s.images.push_back(quotient_part(ms, mt));  // x_e
            s.images.push_back(quotient_part(mt, ms));  // y_e
        }
    }
    if (s.apply(maximal) != l)
        throw VerificationFailure("the substitution read off the edges does not carry the maximal labels to the given labels");
    return s;
}

// ---------------------------------------------------------------------------
// Polygons

VertexSet StringSubset::vertices() const { return string_set(start, length(), n); }

VertexSet string_set(int start, int length, int n) {
    if (n < 1 || length < 1 || length > n) throw InvalidInput("string length out of range");
    VertexSet s;
    for (int k = 0; k < length; ++k) s.insert(((start + k) % n + n) % n);
    return s;
}

bool is_string(VertexSet s, int n) {
    if (s.empty()) return false;
    for (int start = 0; start < n; ++start)
        if (string_set(start, s.size(), n) == s) return true;
    return false;
}

CellComplex subdivided_polygon_complex(int n, const std::vector<std::pair<int, int>>& chords) {
    if (n < 3 || n > kMaxVertices) throw InvalidInput("a polygon needs at least 3 vertices");
    std::vector<std::vector<int>> regions(1);
    for (int v = 0; v < n; ++v) regions[0].push_back(v);
    for (auto [u, v] : chords) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InvalidInput("chord endpoint out of range");
        const int gap = std::abs(u - v);
        if (gap == 1 || gap == n - 1) throw InvalidInput("a chord may not join adjacent vertices");
        bool split = false;
        for (std::size_t r = 0; r < regions.size() && !split; ++r) {
            auto& cyc = regions[r];
            auto iu = std::find(cyc.begin(), cyc.end(), u), iv = std::find(cyc.begin(), cyc.end(), v);
            if (iu == cyc.end() || iv == cyc.end()) continue;
            const std::size_t a = static_cast<std::size_t>(iu - cyc.begin()), b = static_cast<std::size_t>(iv - cyc.begin());
            const std::size_t m = cyc.size();
            const std::size_t ab = (b + m - a) % m;
            if (ab == 1 || ab == m - 1) throw InvalidInput("chord repeats an existing edge");
            std::vector<int> first, second;
            for (std::size_t k = a;; k = (k + 1) % m) {
                first.push_back(cyc[k]);
                if (k == b) break;
            }
            for (std::size_t k = b;; k = (k + 1) % m) {
                second.push_back(cyc[k]);
                if (k == a) break;
            }
            // Keep each region starting at its smallest vertex, preserving direction.
            for (auto* c : {&first, &second}) std::rotate(c->begin(), std::min_element(c->begin(), c->end()), c->end());
            cyc = std::move(first);
            regions.insert(regions.begin() + static_cast<long>(r) + 1, std::move(second));
            split = true;
        }
        if (!split) throw InvalidInput("chord crosses another chord");
    }
    ComplexBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.edge(v, v + 1);
    b.edge(0, n - 1);
    for (auto [u, v] : chords) b.edge(u, v);
    for (const auto& cyc : regions) add_polygon(b, cyc);
    return std::move(b).build();
}

CellComplex polygon_complex(int n) { return subdivided_polygon_complex(n, {}); }

CellComplex chord_complex(int n, int a) {
    if (a < 2 || 2 * a > n) throw InvalidInput("a chord {0, a} needs 2 <= a and 2a <= n");
    return subdivided_polygon_complex(n, {{0, a}});
}

VertexFamily polygon_family(int n) {
    if (n < 3) throw InvalidInput("a polygon needs at least 3 vertices");
    if (n % 2 == 0) throw InvalidInput("CM(X) is empty for an even polygon; there is no family");
    const int r = (n - 1) / 2;
    VertexFamily f{n, {}};
    for (int i = 0; i < n; ++i) f.sets.push_back(string_set(i, r, n));
    return canonical(std::move(f));
}

std::pair<VertexFamily, VertexFamily> chord_families(int n, int a) {
    if (a < 2 || 2 * a > n) throw InvalidInput("a chord {0, a} needs 2 <= a and 2a <= n");
    const VertexSet inner = string_set(1, a - 1, n);  // [1, a-1]
    const VertexSet chord_span = string_set(0, a + 1, n);  // [0, a]
    auto strings = [n](int length) {
        std::vector<VertexSet> out;
        if (length < 1) return out;
        for (int i = 0; i < n; ++i) out.push_back(string_set(i, length, n));
        return out;
    };
    VertexFamily f1{n, {}}, f2{n, {}};
    if (n % 2 == 1) {
        const int r = (n - 1) / 2;
        f1.sets = strings(r);
        f1.sets.push_back(inner);
        for (VertexSet s : strings(r + 1))
            if (chord_span.subset_of(s)) f2.sets.push_back(s);
        for (VertexSet s : strings(r))
            if ((s.contains(0) && !s.contains(a - 1)) || (s.contains(a) && !s.contains(1))) f2.sets.push_back(s);
        for (VertexSet s : strings(r - 1))
            if (!s.intersects(chord_span)) f2.sets.push_back(s);
        f2.sets.push_back(inner);
    } else {
        const int r = n / 2;
        for (VertexSet s : strings(r))
            if (s.contains(0)) f1.sets.push_back(s);
        for (VertexSet s : strings(r - 1))
            if (!s.contains(0) && !s.contains(1)) f1.sets.push_back(s);
        f1.sets.push_back(inner);
        std::vector<int> mirror(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) mirror[static_cast<std::size_t>(i)] = ((a - i) % n + n) % n;
        for (VertexSet s : f1.sets) f2.sets.push_back(permute(s, mirror));
    }
    f1 = canonical(std::move(f1));
    f2 = canonical(std::move(f2));
    validate_family(f1);
    validate_family(f2);
    if (static_cast<int>(f1.size()) != n + 1 || static_cast<int>(f2.size()) != n + 1)
        throw VerificationFailure("chord family does not have n + 1 members");
    return {f1, f2};
}

// ---------------------------------------------------------------------------
// Pyramids

CellComplex pyramid(const CellComplex& x) {
    const int n = x.n_vertices();
    if (n + 1 > kMaxVertices) throw InvalidInput("pyramid would exceed the vertex limit");
    const int m = static_cast<int>(x.size());
    const int apex = m;
    auto cone = [&](int id) { return m + 1 + id; };
    std::vector<Cell> cells = x.cells();
    cells.push_back(Cell{apex, 0, {n}, {}});
    for (const Cell& c : x.cells()) {
        Cell k{cone(c.id), c.dim + 1, c.vertices, {}};
        k.vertices.push_back(n);
        if (c.dim == 0) {
            k.boundary = {{c.id, +1}, {apex, -1}};
        } else {
            k.boundary.push_back({c.id, +1});
            for (const Incidence& inc : c.boundary) k.boundary.push_back({cone(inc.cell), -inc.sign});
        }
        cells.push_back(std::move(k));
    }
    return CellComplex(n + 1, std::move(cells));
}

VertexFamily pyramid_family(const VertexFamily& f) {
    VertexFamily out{f.n + 1, f.sets};
    out.sets.push_back(VertexSet::single(f.n));
    return out;
}

CellComplex elongated_pyramid(const CellComplex& x) {
    const int n = x.n_vertices();
    const int d = x.dim();
    if (d < 1) throw InvalidInput("elongated pyramid needs a complex of dimension at least 1");
    if (x.cells_of_dim(d).size() != 1) throw InvalidInput("elongated pyramid needs a single top cell");
    if (2 * n + 1 > kMaxVertices) throw InvalidInput("elongated pyramid would exceed the vertex limit");
    const int apex_vertex = 2 * n;

    std::vector<Cell> cells;
    auto shift = [n](std::vector<int> vs) {
        for (int& v : vs) v += n;
        return vs;
    };
    auto add = [&](int dim, std::vector<int> vertices, std::vector<Incidence> boundary) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        const int id = static_cast<int>(cells.size());
        cells.push_back(Cell{id, dim, std::move(vertices), std::move(boundary)});
        return id;
    };
    const std::size_t m = x.size();
    std::vector<int> bottom(m, -1), top(m, -1), prism(m, -1), cone(m, -1);
    std::vector<Cell> by_dim = x.cells();
    std::stable_sort(by_dim.begin(), by_dim.end(), [](const Cell& a, const Cell& b) { return a.dim < b.dim; });
    for (const Cell& c : by_dim) {
        std::vector<Incidence> b;
        for (const Incidence& inc : c.boundary) b.push_back({bottom[static_cast<std::size_t>(inc.cell)], 0});
        bottom[static_cast<std::size_t>(c.id)] = add(c.dim, c.vertices, std::move(b));
    }
    for (const Cell& c : by_dim) {
        if (c.dim == d) continue;
        std::vector<Incidence> b;
        for (const Incidence& inc : c.boundary) b.push_back({top[static_cast<std::size_t>(inc.cell)], 0});
        top[static_cast<std::size_t>(c.id)] = add(c.dim, shift(c.vertices), std::move(b));
    }
    const int apex = add(0, {apex_vertex}, {});
    for (const Cell& c : by_dim) {
        if (c.dim == d) continue;
        std::vector<int> vs = c.vertices;
        for (int v : shift(c.vertices)) vs.push_back(v);
        std::vector<Incidence> b{{bottom[static_cast<std::size_t>(c.id)], 0}, {top[static_cast<std::size_t>(c.id)], 0}};
        for (const Incidence& inc : c.boundary) b.push_back({prism[static_cast<std::size_t>(inc.cell)], 0});
        prism[static_cast<std::size_t>(c.id)] = add(c.dim + 1, std::move(vs), std::move(b));
    }
    for (const Cell& c : by_dim) {
        if (c.dim == d) continue;
        std::vector<int> vs = shift(c.vertices);
        vs.push_back(apex_vertex);
        std::vector<Incidence> b{{top[static_cast<std::size_t>(c.id)], 0}};
        if (c.dim == 0) b.push_back({apex, 0});
        for (const Incidence& inc : c.boundary) b.push_back({cone[static_cast<std::size_t>(inc.cell)], 0});
        cone[static_cast<std::size_t>(c.id)] = add(c.dim + 1, std::move(vs), std::move(b));
    }
    std::vector<Incidence> outer{{bottom[static_cast<std::size_t>(x.cells_of_dim(d).front())], 0}};
    for (int f : x.cells_of_dim(d - 1)) {
        outer.push_back({prism[static_cast<std::size_t>(f)], 0});
        outer.push_back({cone[static_cast<std::size_t>(f)], 0});
    }
    std::vector<int> all(static_cast<std::size_t>(2 * n + 1));
    std::iota(all.begin(), all.end(), 0);
    add(d + 1, all, std::move(outer));
    return assign_signs(CellComplex(2 * n + 1, std::move(cells)));
}

VertexFamily ep_family(const VertexFamily& f) {
    const int n = f.n;
    const int apex = 2 * n;
    VertexFamily out{2 * n + 1, {}};
    auto lift = [n](VertexSet s) {
        VertexSet up;
        s.for_each([&](int v) { up.insert(v + n); });
        return up;
    };
    for (VertexSet s : f.sets) out.sets.push_back(lift(s) | VertexSet::single(apex));
    for (VertexSet s : f.sets) out.sets.push_back(s | lift(s));
    out.sets.push_back(VertexSet::full(n));
    return out;
}

CellComplex wheel_polytope(int n) {
    if (n < 3) throw InvalidInput("wheel polytope needs n >= 3");
    const int rim = 2 * n, c = 2 * n;
    ComplexBuilder b(2 * n + 1);
    for (int i = 0; i < rim; ++i) b.edge(i, (i + 1) % rim);
    for (int i = 0; i < n; ++i) b.edge(c, 2 * i + 1);
    for (int i = 0; i < n; ++i) b.edge(2 * i, (2 * i + 2) % rim);
    std::vector<int> faces;
    for (int i = 0; i < n; ++i) faces.push_back(add_polygon(b, {c, 2 * i + 1, (2 * i + 2) % rim, (2 * i + 3) % rim}));
    for (int i = 0; i < n; ++i) faces.push_back(add_polygon(b, {2 * i, 2 * i + 1, (2 * i + 2) % rim}));
    std::vector<int> outer;
    for (int i = 0; i < n; ++i) outer.push_back(2 * i);
    faces.push_back(add_polygon(b, outer));
    std::vector<Incidence> solid;
    for (int f : faces) solid.push_back({f, 0});
    b.add_cell(std::move(solid));
    return assign_signs(std::move(b).build());
}

VertexFamily prop48_family() {
    const int c = 8;
    VertexFamily f{9, {}};
    for (auto s : std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}, {c, 1, 3}, {c, 3, 5},
                                                {c, 5, 7}, {c, 7, 1}, {1, 2, 3}, {3, 4, 5}})
        f.sets.push_back(VertexSet::of(s));
    return f;
}

CellComplex bipyramid_complex(int n) {
    if (n < 3) throw InvalidInput("bipyramid needs n >= 3");
    ComplexBuilder b(n + 2);
    std::vector<Incidence> solid;
    for (int apex : {n, n + 1})
        for (int i = 0; i < n; ++i) solid.push_back({add_polygon(b, {i, (i + 1) % n, apex}), 0});
    b.add_cell(std::move(solid));
    return assign_signs(std::move(b).build());
}

// ---------------------------------------------------------------------------
// Figures

namespace {

/// Labels as lists of 1-based variable indices with repetition, e.g. {1,1} = x1^2.
MonomialLabelling labels_from(int n_variables, const std::vector<std::vector<int>>& factors) {
    MonomialLabelling l;
    l.n_variables = n_variables;
    for (const auto& fs : factors) {
        Monomial m = Monomial::one(n_variables);
        for (int v : fs) ++m.exponents[static_cast<std::size_t>(v - 1)];
        l.labels.push_back(std::move(m));
    }
    return l;
}

/// Labels written as digit strings, "25" = x2*x5.
MonomialLabelling labels_from_digits(const std::vector<std::string>& words, std::vector<std::string>& names) {
    std::vector<std::vector<int>> factors;
    int max_var = 0;
    for (const auto& w : words) {
        std::vector<int> fs;
        for (char ch : w) {
            fs.push_back(ch - '0');
            max_var = std::max(max_var, ch - '0');
        }
        factors.push_back(std::move(fs));
    }
    names.clear();
    for (int i = 1; i <= max_var; ++i) names.push_back("x" + std::to_string(i));
    return labels_from(max_var, factors);
}

CellComplex figure_hexagon() { return subdivided_polygon_complex(6, {{1, 3}, {3, 5}}); }

}  // namespace

std::vector<std::string> fixture_ids() { return {"3.1", "3.2", "3.3", "3.4", "4.1", "4.2", "4.4", "4.6", "4.7", "4.8"}; }

Fixture figure_fixture(const std::string& id) {
    Fixture fx;
    fx.id = id;
    // Hexagon vertices in cyclic order: y^2, xy, x^2, xz, z^2, yz.
    if (id == "3.1") {
        fx.description = "hexagon with chords xy-xz and xz-yz, labels y^2 xy x^2 xz z^2 yz";
        fx.complex = figure_hexagon();
        fx.variables = {"x", "y", "z"};
        fx.labelling = labels_from(3, {{2, 2}, {1, 2}, {1, 1}, {1, 3}, {3, 3}, {2, 3}});
    } else if (id == "3.2") {
        fx.description = "polarization of 3.1";
        fx.complex = figure_hexagon();
        fx.variables = {"x1", "x2", "y1", "y2", "z1", "z2"};
        fx.labelling = labels_from(6, {{3, 4}, {1, 3}, {1, 2}, {1, 5}, {5, 6}, {3, 5}});
    } else if (id == "3.3") {
        fx.description = "the other polarization-like labelling of 3.1";
        fx.complex = figure_hexagon();
        fx.variables = {"x1", "x2", "y1'", "y2'", "z1", "z2"};
        fx.labelling = labels_from(6, {{3, 4}, {1, 4}, {1, 2}, {1, 6}, {5, 6}, {3, 6}});
    } else if (id == "3.4") {
        fx.description = "eight-variable labelling of the two-chord hexagon";
        fx.complex = figure_hexagon();
        fx.variables = {"x1", "x2", "y1", "y2", "y1'", "y2'", "z", "z'"};
        fx.labelling = labels_from(8, {{3, 4, 5, 6}, {1, 3, 6}, {1, 2}, {1, 7}, {7, 8}, {3, 5, 7}});
    } else if (id == "4.1") {
        fx.description = "pyramid over the pentagon, base labels x_i x_{i+1}, apex x5 x6";
        fx.complex = pyramid(polygon_complex(5));
        fx.variables = {"x0", "x1", "x2", "x3", "x4", "x5", "x6"};
        fx.labelling = labels_from(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 7}});
    } else if (id == "4.2") {
        fx.description = "elongated pyramid over the triangle";
        fx.complex = elongated_pyramid(polygon_complex(3));
        fx.labelling = labels_from_digits({"47", "57", "67", "14", "25", "36", "123"}, fx.variables);
    } else if (id == "4.4") {
        fx.description = "wheel polytope n = 4 resolving the hexagon";
        fx.complex = wheel_polytope(4);
        fx.labelling = labels_from_digits({"25", "35", "15", "13", "14", "46", "24", "26", "36"}, fx.variables);
    } else if (id == "4.6") {
        fx.description = "wheel polytope n = 4, bipyramid with faces 124 and 235 subdivided";
        fx.complex = wheel_polytope(4);
        fx.labelling = labels_from_digits({"45", "124", "47", "17", "67", "36", "56", "235", "123"}, fx.variables);
    } else if (id == "4.7") {
        fx.description = "wheel polytope n = 4, bipyramid with faces 124 and 234 subdivided";
        fx.complex = wheel_polytope(4);
        fx.labelling = labels_from_digits({"45", "234", "124", "123", "17", "67", "57", "56", "36"}, fx.variables);
    } else if (id == "4.8") {
        fx.description = "wheel polytope n = 4, bipyramid with faces 124 and 125 subdivided";
        fx.complex = wheel_polytope(4);
        fx.labelling = labels_from_digits({"47", "124", "45", "125", "56", "36", "67", "37", "123"}, fx.variables);
    } else {
        throw InvalidInput("unknown fixture '" + id + "'");
    }
    return fx;
}

}  // namespace cmlabel

#include "cmlabel/cmcheck.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_set>

#include "cmlabel/errors.hpp"

namespace cmlabel {

namespace {

void require_same_size(const CellComplex& x, int n, const char* what) {
    if (x.n_vertices() != n)
        throw InvalidInput(std::string(what) + " has " + std::to_string(n) + " vertices but the complex has " +
                           std::to_string(x.n_vertices()));
}

std::vector<VertexSet> variable_supports(const MonomialLabelling& l) {
    std::vector<VertexSet> supports(static_cast<std::size_t>(l.n_variables));
    for (int i = 0; i < l.n_vertices(); ++i)
        for (int p = 0; p < l.n_variables; ++p)
            if (l.labels[static_cast<std::size_t>(i)].exponents[static_cast<std::size_t>(p)] > 0)
                supports[static_cast<std::size_t>(p)].insert(i);
    return supports;
}

}  // namespace

std::vector<VertexSet> subfamily_unions(const std::vector<VertexSet>& members) {
    std::unordered_set<VertexSet> seen{VertexSet()};
    std::vector<VertexSet> unions{VertexSet()};
    for (VertexSet s : members) {
        const std::size_t count = unions.size();
        for (std::size_t i = 0; i < count; ++i) {
            const VertexSet u = unions[i] | s;
            if (seen.insert(u).second) unions.push_back(u);
        }
    }
    return unions;
}

std::vector<std::pair<int, int>> covering_pairs(const CellComplex& x) {
    std::vector<std::pair<int, int>> pairs;
    for (const Cell& c : x.cells()) {
        if (c.dim == 0) pairs.emplace_back(-1, c.id);
        for (const Incidence& inc : c.boundary) pairs.emplace_back(inc.cell, c.id);
    }
    return pairs;
}

FamilyCriteriaReport check_family_criteria(const CellComplex& x, const VertexFamily& f, const Field& field,
                                           const AcyclicityOracle* oracle) {
    require_same_size(x, f.n, "family");
    validate_family(f);
    FamilyCriteriaReport r;
    r.dim = x.dim();
    const VertexSet all = VertexSet::full(f.n);

    r.covers = f.covers();
    if (auto cover = minimum_cover(all, f.sets); cover && static_cast<int>(cover->size()) <= r.dim) {
        r.cond1 = false;
        r.cond1_witness = *cover;
    }

    std::unique_ptr<AcyclicityOracle> own;
    if (oracle == nullptr) {
        own = std::make_unique<AcyclicityOracle>(x, field);
        oracle = own.get();
    }
    auto unions = subfamily_unions(f.sets);
    std::sort(unions.begin(), unions.end(), canonical_less);
    for (VertexSet w : unions)
        if (!oracle->acyclic(w.complement(f.n))) {
            r.cond2 = false;
            r.cond2_witness = w;
            break;
        }

    for (const auto& [lo, hi] : covering_pairs(x)) {
        const VertexSet lower = lo < 0 ? VertexSet() : x.cell_vertices(lo);
        const VertexSet upper = x.cell_vertices(hi);
        const bool separated = std::any_of(f.sets.begin(), f.sets.end(),
                                           [&](VertexSet s) { return !s.intersects(lower) && s.intersects(upper); });
        if (!separated) {
            r.cond3 = false;
            r.cond3_witness = std::make_pair(lo, hi);
            break;
        }
    }
    return r;
}

ResolutionCheck check_cellular_resolution(const CellComplex& x, const MonomialLabelling& l, const Field& field) {
    require_same_size(x, l.n_vertices(), "labelling");
    validate_labelling(l);
    ResolutionCheck r;
    const auto lattice = lcm_lattice(l);
    r.lattice_points = lattice.size();
    AcyclicityOracle oracle(x, field);
    std::unordered_set<VertexSet> checked;
    for (const Monomial& b : lattice) {
        const VertexSet w = l.below(b);
        if (!checked.insert(w).second) continue;
        if (!oracle.acyclic(w)) {
            r.holds = false;
            r.witness = b;
            r.witness_homology = reduced_homology(restrict_to(x, w), field);
            break;
        }
    }
    return r;
}

MinimalityCheck check_minimal(const CellComplex& x, const MonomialLabelling& l) {
    require_same_size(x, l.n_vertices(), "labelling");
    validate_labelling(l);
    MinimalityCheck r;
    std::vector<Monomial> mdeg;
    mdeg.reserve(x.size());
    for (const Cell& c : x.cells()) mdeg.push_back(l.join_of(x.cell_vertices(c.id)));
    const Monomial unit = Monomial::one(l.n_variables);
    for (const auto& [lo, hi] : covering_pairs(x)) {
        const Monomial& below = lo < 0 ? unit : mdeg[static_cast<std::size_t>(lo)];
        if (below == mdeg[static_cast<std::size_t>(hi)]) {
            r.holds = false;
            r.witness = std::make_pair(lo, hi);
            break;
        }
    }
    return r;
}

int codimension(const MonomialLabelling& l) {
    auto cover = minimum_cover(VertexSet::full(l.n_vertices()), variable_supports(l));
    if (!cover) throw InvalidInput("some label is 1, so no set of variables meets every label");
    return static_cast<int>(cover->size());
}

int codimension_family(const VertexFamily& f) {
    auto cover = minimum_cover(VertexSet::full(f.n), f.sets);
    if (!cover) throw InvalidInput("the family does not cover [n]");
    return static_cast<int>(cover->size());
}

CmVerdict check_cm_labelling(const CellComplex& x, const MonomialLabelling& l, const Field& field) {
    CmVerdict v;
    v.field = field;
    const auto res = check_cellular_resolution(x, l, field);
    v.is_cellular_resolution = res.holds;
    v.failing_multidegree = res.witness;
    const auto min = check_minimal(x, l);
    v.is_minimal = min.holds;
    v.failing_pair = min.witness;
    auto cover = minimum_cover(VertexSet::full(l.n_vertices()), variable_supports(l));
    if (!cover) throw InvalidInput("some label is 1, so no set of variables meets every label");
    v.codimension = static_cast<int>(cover->size());
    for (std::size_t p : *cover) v.codimension_cover.push_back(static_cast<int>(p));
    std::sort(v.codimension_cover.begin(), v.codimension_cover.end());
    v.projective_dimension = v.is_cellular_resolution ? x.dim() + 1 : -1;
    v.is_cm = v.is_cellular_resolution && v.is_minimal && v.codimension == x.dim() + 1;
    return v;
}

// ---------------------------------------------------------------------------
// Free complex

std::vector<std::size_t> CellularFreeComplex::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& g : generators) out.push_back(g.size());
    return out;
}

bool CellularFreeComplex::squares_to_zero() const {
    for (std::size_t i = 2; i < differentials.size(); ++i) {
        const Differential& upper = differentials[i];     // degree i -> i-1
        const Differential& lower = differentials[i - 1]; // degree i-1 -> i-2
        std::map<std::size_t, std::vector<const MonomialEntry*>> lower_by_col;
        for (const MonomialEntry& e : lower.entries) lower_by_col[e.col].push_back(&e);
        // (row, col, monomial) -> integer coefficient
        std::map<std::tuple<std::size_t, std::size_t, Monomial>, long> sum;
        for (const MonomialEntry& e : upper.entries) {
            auto it = lower_by_col.find(e.row);
            if (it == lower_by_col.end()) continue;
            for (const MonomialEntry* d : it->second) {
                Monomial m = e.quotient;
                for (std::size_t p = 0; p < m.exponents.size(); ++p) m.exponents[p] += d->quotient.exponents[p];
                sum[{d->row, e.col, m}] += static_cast<long>(e.sign) * d->sign;
            }
        }
        for (const auto& [key, coeff] : sum)
            if (coeff != 0) return false;
    }
    return true;
}

CellularFreeComplex build_free_complex(const CellComplex& x, const MonomialLabelling& l) {
    require_same_size(x, l.n_vertices(), "labelling");
    if (!x.has_signs()) throw InvalidInput("the free complex needs a signed complex; run assign_signs first");
    CellularFreeComplex fc;
    fc.n_variables = l.n_variables;
    const int top = x.dim();
    fc.generators.assign(static_cast<std::size_t>(top + 2), {});
    fc.multidegrees.assign(static_cast<std::size_t>(top + 2), {});
    fc.generators[0].push_back(-1);
    fc.multidegrees[0].push_back(Monomial::one(l.n_variables));

    std::vector<std::size_t> position(x.size(), 0);
    for (const Cell& c : x.cells()) {
        auto& gens = fc.generators[static_cast<std::size_t>(c.dim + 1)];
        position[static_cast<std::size_t>(c.id)] = gens.size();
        gens.push_back(c.id);
        fc.multidegrees[static_cast<std::size_t>(c.dim + 1)].push_back(l.join_of(x.cell_vertices(c.id)));
    }

    fc.differentials.assign(static_cast<std::size_t>(top + 2), {});
    for (std::size_t i = 1; i < fc.generators.size(); ++i) {
        Differential& d = fc.differentials[i];
        d.rows = fc.generators[i - 1].size();
        d.cols = fc.generators[i].size();
        for (std::size_t col = 0; col < d.cols; ++col) {
            const Cell& c = x.cell(fc.generators[i][col]);
            const Monomial& m = fc.multidegrees[i][col];
            if (c.dim == 0) {
                d.entries.push_back({0, col, 1, m});
                continue;
            }
            for (const Incidence& inc : c.boundary) {
                const std::size_t row = position[static_cast<std::size_t>(inc.cell)];
                d.entries.push_back({row, col, inc.sign, quotient_part(m, fc.multidegrees[i - 1][row])});
            }
        }
    }
    if (!fc.squares_to_zero()) throw VerificationFailure("free complex differential does not square to zero");
    return fc;
}

bool strand_oracle(const CellularFreeComplex& fc, const CellComplex& x, const MonomialLabelling& l, const Monomial& b,
                   const Field& field) {
    const VertexSet w = l.below(b);
    if (w.empty()) throw InvalidInput("strand degree " + b.to_string() + " lies below every label");

    // Generators of the strand in each degree, as local indices.
    const std::size_t degrees = fc.generators.size();
    std::vector<std::vector<std::size_t>> in_strand(degrees);
    std::vector<std::vector<long>> local(degrees);
    for (std::size_t i = 0; i < degrees; ++i) {
        local[i].assign(fc.generators[i].size(), -1);
        for (std::size_t k = 0; k < fc.generators[i].size(); ++k)
            if (fc.multidegrees[i][k].divides(b)) {
                local[i][k] = static_cast<long>(in_strand[i].size());
                in_strand[i].push_back(k);
            }
    }
    std::vector<IntMatrix> maps(degrees);
    for (std::size_t i = 1; i < degrees; ++i) {
        maps[i] = IntMatrix(in_strand[i - 1].size(), in_strand[i].size());
        for (const MonomialEntry& e : fc.differentials[i].entries) {
            const long r = local[i - 1][e.row], c = local[i][e.col];
            if (r >= 0 && c >= 0) maps[i](static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e.sign;
        }
    }
    for (std::size_t i = 2; i < degrees; ++i) {
        if (maps[i].rows() == 0 || maps[i].cols() == 0 || maps[i - 1].rows() == 0) continue;
        const IntMatrix prod = maps[i - 1] * maps[i];
        IntMatrix reduced(prod.rows(), prod.cols());
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                reduced(r, c) = field.kind == Field::Kind::rational ? prod(r, c)
                                                                    : prod(r, c) % static_cast<long>(field.characteristic);
        if (!reduced.is_zero()) return false;
    }
    std::vector<std::size_t> ranks(degrees + 1, 0);
    for (std::size_t i = 1; i < degrees; ++i) ranks[i] = rank(maps[i], field);

    const auto expected = reduced_homology(restrict_to(x, w), field).reduced_betti;
    for (std::size_t i = 0; i < degrees; ++i) {
        const std::size_t h = in_strand[i].size() - ranks[i] - ranks[i + 1];
        const auto it = expected.find(static_cast<int>(i) - 1);
        const std::size_t want = it == expected.end() ? 0 : it->second;
        if (h != want) return false;
    }
    return true;
}

bool strand_oracle(const CellComplex& x, const MonomialLabelling& l, const Monomial& b, const Field& field) {
    return strand_oracle(build_free_complex(x, l), x, l, b, field);
}

std::vector<int> f_vector(const CellComplex& x) { return x.f_vector(); }

bool f_symmetry(const CellComplex& x) {
    const auto f = x.f_vector();
    const int d = x.dim();
    if (d < 0 || f[static_cast<std::size_t>(d)] != 1) return false;
    for (int i = 0; i < d; ++i)
        if (f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(d - 1 - i)]) return false;
    return true;
}

}  // namespace cmlabel

#include "cmlabel/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cmlabel/errors.hpp"

namespace cmlabel {

// ---------------------------------------------------------------------------
// Monomial

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool Monomial::square_free() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (other.exponents.size() != exponents.size()) throw InvalidInput("monomials over different variable counts");
    for (std::size_t p = 0; p < exponents.size(); ++p)
        if (exponents[p] > other.exponents[p]) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> out;
    for (std::size_t p = 0; p < exponents.size(); ++p)
        if (exponents[p] > 0) out.push_back(static_cast<int>(p));
    return out;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t p = 0; p < exponents.size(); ++p) {
        if (exponents[p] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(p);
        if (exponents[p] > 1) out += "^" + std::to_string(exponents[p]);
    }
    return out.empty() ? "1" : out;
}

Monomial join(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size()) throw InvalidInput("monomials over different variable counts");
    Monomial out = a;
    for (std::size_t p = 0; p < out.exponents.size(); ++p) out.exponents[p] = std::max(out.exponents[p], b.exponents[p]);
    return out;
}

Monomial quotient_part(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size()) throw InvalidInput("monomials over different variable counts");
    Monomial out = a;
    for (std::size_t p = 0; p < out.exponents.size(); ++p) out.exponents[p] = std::max(a.exponents[p] - b.exponents[p], 0);
    return out;
}

// ---------------------------------------------------------------------------
// MonomialLabelling

bool MonomialLabelling::square_free() const {
    return std::all_of(labels.begin(), labels.end(), [](const Monomial& m) { return m.square_free(); });
}

Monomial MonomialLabelling::join_of(VertexSet vertices) const {
    Monomial out = Monomial::one(n_variables);
    vertices.for_each([&](int v) { out = join(out, labels[static_cast<std::size_t>(v)]); });
    return out;
}

VertexSet MonomialLabelling::below(const Monomial& b) const {
    VertexSet out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].divides(b)) out.insert(static_cast<int>(i));
    return out;
}

void validate_labelling(const MonomialLabelling& l) {
    if (l.n_variables < 0) throw InvalidInput("negative variable count");
    if (l.labels.size() > static_cast<std::size_t>(kMaxVertices)) throw InvalidInput("too many labels");
    std::vector<bool> used(static_cast<std::size_t>(l.n_variables), false);
    for (std::size_t i = 0; i < l.labels.size(); ++i) {
        const Monomial& m = l.labels[i];
        if (m.n_variables() != l.n_variables)
            throw InvalidInput("label " + std::to_string(i) + " has " + std::to_string(m.n_variables()) +
                               " exponents, expected " + std::to_string(l.n_variables));
        for (int p = 0; p < l.n_variables; ++p) {
            if (m.exponents[static_cast<std::size_t>(p)] < 0)
                throw InvalidInput("label " + std::to_string(i) + " has a negative exponent");
            if (m.exponents[static_cast<std::size_t>(p)] > 0) used[static_cast<std::size_t>(p)] = true;
        }
    }
    for (std::size_t i = 0; i < l.labels.size(); ++i)
        for (std::size_t j = 0; j < l.labels.size(); ++j)
            if (i != j && l.labels[i].divides(l.labels[j]))
                throw InvalidInput("divisibility among labels: label " + std::to_string(i) + " (" +
                                   l.labels[i].to_string() + ") divides label " + std::to_string(j) + " (" +
                                   l.labels[j].to_string() + ")");
    for (int p = 0; p < l.n_variables; ++p)
        if (!used[static_cast<std::size_t>(p)])
            throw InvalidInput("variable x" + std::to_string(p) + " occurs in no label");
}

// ---------------------------------------------------------------------------
// VertexFamily

VertexSet VertexFamily::union_of_all() const {
    VertexSet u;
    for (VertexSet s : sets) u |= s;
    return u;
}

bool VertexFamily::contains(VertexSet s) const { return std::find(sets.begin(), sets.end(), s) != sets.end(); }

void validate_family(const VertexFamily& f) {
    if (f.n < 0 || f.n > kMaxVertices) throw InvalidInput("family vertex count out of range");
    std::set<std::uint64_t> seen;
    for (VertexSet s : f.sets) {
        if (s.empty()) throw InvalidInput("family member is empty");
        if (!s.subset_of(VertexSet::full(f.n))) throw InvalidInput("family member " + s.to_string() + " leaves [0, n)");
        if (!seen.insert(s.bits()).second) throw InvalidInput("family member " + s.to_string() + " is repeated");
    }
}

VertexFamily canonical(VertexFamily f) {
    std::sort(f.sets.begin(), f.sets.end(), canonical_less);
    return f;
}

bool same_sets(const VertexFamily& a, const VertexFamily& b) { return a.n == b.n && canonical(a).sets == canonical(b).sets; }

std::string to_string(const VertexFamily& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.sets.size(); ++i) out += (i ? "," : "") + f.sets[i].to_string();
    return out + "]";
}

FamilyReadout family_of(const MonomialLabelling& l) {
    if (!l.square_free()) throw InvalidInput("family_of needs a square-free labelling");
    validate_labelling(l);
    FamilyReadout out;
    out.family.n = l.n_vertices();
    for (int p = 0; p < l.n_variables; ++p) {
        VertexSet vp;
        for (int i = 0; i < l.n_vertices(); ++i)
            if (l.labels[static_cast<std::size_t>(i)].exponents[static_cast<std::size_t>(p)] > 0) vp.insert(i);
        if (vp.empty()) continue;
        auto it = std::find(out.family.sets.begin(), out.family.sets.end(), vp);
        if (it != out.family.sets.end()) {
            out.duplicate_variables.emplace_back(
                out.member_variable[static_cast<std::size_t>(it - out.family.sets.begin())], p);
            continue;
        }
        out.family.sets.push_back(vp);
        out.member_variable.push_back(p);
    }
    return out;
}

MonomialLabelling labelling_of(const VertexFamily& f) {
    validate_family(f);
    if (!f.covers()) {
        const VertexSet missing = f.union_of_all().complement(f.n);
        throw InvalidInput("vertex " + std::to_string(missing.first()) + " lies in no member; its label would be 1");
    }
    MonomialLabelling l;
    l.n_variables = static_cast<int>(f.sets.size());
    l.labels.assign(static_cast<std::size_t>(f.n), Monomial::one(l.n_variables));
    for (std::size_t p = 0; p < f.sets.size(); ++p)
        f.sets[p].for_each([&](int i) { l.labels[static_cast<std::size_t>(i)].exponents[p] = 1; });
    return l;
}

// ---------------------------------------------------------------------------
// Substitutions and polarization

Monomial Substitution::apply(const Monomial& m) const {
    if (m.exponents.size() != images.size()) throw InvalidInput("substitution applied to a monomial of the wrong length");
    Monomial out = Monomial::one(n_target_variables);
    for (std::size_t p = 0; p < images.size(); ++p)
        for (int q = 0; q < n_target_variables; ++q)
            out.exponents[static_cast<std::size_t>(q)] += m.exponents[p] * images[p].exponents[static_cast<std::size_t>(q)];
    return out;
}

MonomialLabelling Substitution::apply(const MonomialLabelling& l) const {
    MonomialLabelling out;
    out.n_variables = n_target_variables;
    for (const Monomial& m : l.labels) out.labels.push_back(apply(m));
    return out;
}

Substitution Substitution::compose(const Substitution& first, const Substitution& second) {
    if (static_cast<int>(second.images.size()) != first.n_target_variables)
        throw InvalidInput("substitutions do not compose");
    Substitution out;
    out.n_target_variables = second.n_target_variables;
    for (const Monomial& m : first.images) out.images.push_back(second.apply(m));
    return out;
}

Substitution Polarization::depolarization(int n_original_variables) const {
    Substitution s;
    s.n_target_variables = n_original_variables;
    for (const auto& [p, j] : origin) {
        Monomial m = Monomial::one(n_original_variables);
        m.exponents[static_cast<std::size_t>(p)] = 1;
        s.images.push_back(m);
    }
    return s;
}

Polarization polarize(const MonomialLabelling& l) {
    std::vector<int> max_exp(static_cast<std::size_t>(l.n_variables), 0);
    for (const Monomial& m : l.labels) {
        if (m.n_variables() != l.n_variables) throw InvalidInput("label length differs from the variable count");
        for (int p = 0; p < l.n_variables; ++p)
            max_exp[static_cast<std::size_t>(p)] = std::max(max_exp[static_cast<std::size_t>(p)], m.exponents[static_cast<std::size_t>(p)]);
    }
    Polarization out;
    std::vector<int> first_copy(static_cast<std::size_t>(l.n_variables), 0);
    for (int p = 0; p < l.n_variables; ++p) {
        first_copy[static_cast<std::size_t>(p)] = static_cast<int>(out.origin.size());
        for (int j = 1; j <= max_exp[static_cast<std::size_t>(p)]; ++j) out.origin.emplace_back(p, j);
    }
    out.labelling.n_variables = static_cast<int>(out.origin.size());
    for (const Monomial& m : l.labels) {
        Monomial pm = Monomial::one(out.labelling.n_variables);
        for (int p = 0; p < l.n_variables; ++p)
            for (int j = 0; j < m.exponents[static_cast<std::size_t>(p)]; ++j)
                pm.exponents[static_cast<std::size_t>(first_copy[static_cast<std::size_t>(p)] + j)] = 1;
        out.labelling.labels.push_back(std::move(pm));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition, reduction, refinement

std::optional<std::vector<std::size_t>> disjoint_decomposition(VertexSet target, const std::vector<VertexSet>& members,
                                                               bool allow_self) {
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (!members[i].empty() && members[i].subset_of(target) && (allow_self || members[i] != target))
            usable.push_back(i);
    std::stable_sort(usable.begin(), usable.end(),
                     [&](std::size_t a, std::size_t b) { return members[a].size() > members[b].size(); });

    std::vector<std::size_t> chosen;
    std::function<bool(VertexSet)> solve = [&](VertexSet rest) {
        if (rest.empty()) return true;
        const int v = rest.first();
        for (std::size_t i : usable) {
            const VertexSet m = members[i];
            if (!m.contains(v) || !m.subset_of(rest)) continue;
            chosen.push_back(i);
            if (solve(rest - m)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (target.empty() || !solve(target)) return std::nullopt;
    return chosen;
}

VertexFamily reduce_family(const VertexFamily& f) {
    VertexFamily out;
    out.n = f.n;
    for (VertexSet s : f.sets)
        if (!disjoint_decomposition(s, f.sets, false)) out.sets.push_back(s);
    return out;
}

bool is_reduced(const VertexFamily& f) { return reduce_family(f).sets.size() == f.sets.size(); }

std::string to_string(Refinement r) {
    switch (r) {
        case Refinement::equal: return "equal";
        case Refinement::first_finer: return "first_finer";
        case Refinement::second_finer: return "second_finer";
        case Refinement::equivalent: return "equivalent";
        case Refinement::incomparable: return "incomparable";
    }
    return "?";
}

bool refines(const VertexFamily& fine, const VertexFamily& coarse) {
    if (fine.n != coarse.n) throw InvalidInput("families over different vertex counts");
    return std::all_of(coarse.sets.begin(), coarse.sets.end(),
                       [&](VertexSet s) { return disjoint_decomposition(s, fine.sets).has_value(); });
}

Refinement refinement_compare(const VertexFamily& f, const VertexFamily& g) {
    const bool fg = refines(f, g), gf = refines(g, f);
    if (same_sets(f, g)) return Refinement::equal;
    if (fg && gf) return Refinement::equivalent;
    if (fg) return Refinement::first_finer;
    if (gf) return Refinement::second_finer;
    return Refinement::incomparable;
}

bool morphism_exists(const VertexFamily& f, const VertexFamily& g) { return refines(f, g); }

Substitution morphism_substitution(const VertexFamily& f, const VertexFamily& g) {
    if (f.n != g.n) throw InvalidInput("families over different vertex counts");
    Substitution s;
    s.n_target_variables = static_cast<int>(g.sets.size());
    s.images.assign(f.sets.size(), Monomial::one(s.n_target_variables));
    for (std::size_t q = 0; q < g.sets.size(); ++q) {
        auto parts = disjoint_decomposition(g.sets[q], f.sets);
        if (!parts) throw InvalidInput("no morphism: member " + g.sets[q].to_string() + " does not split");
        for (std::size_t p : *parts) s.images[p].exponents[q] = 1;
    }
    return s;
}

// ---------------------------------------------------------------------------
// LCM lattice and covers

std::vector<Monomial> lcm_lattice(const MonomialLabelling& l) {
    std::set<Monomial> points(l.labels.begin(), l.labels.end());
    std::vector<Monomial> frontier(points.begin(), points.end());
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& a : frontier)
            for (const Monomial& g : l.labels) {
                Monomial j = join(a, g);
                if (points.insert(j).second) next.push_back(std::move(j));
            }
        frontier = std::move(next);
    }
    return {points.begin(), points.end()};
}

std::optional<std::vector<std::size_t>> minimum_cover(VertexSet universe, const std::vector<VertexSet>& members) {
    VertexSet all;
    for (VertexSet m : members) all |= m & universe;
    if (!universe.subset_of(all)) return std::nullopt;
    if (universe.empty()) return std::vector<std::size_t>{};

    // Greedy cover for the initial bound.
    std::vector<std::size_t> best;
    for (VertexSet rest = universe; !rest.empty();) {
        std::size_t pick = 0;
        int gain = -1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int g = (members[i] & rest).size();
            if (g > gain) gain = g, pick = i;
        }
        best.push_back(pick);
        rest = rest - members[pick];
    }
    int max_size = 0;
    for (VertexSet m : members) max_size = std::max(max_size, (m & universe).size());

    std::vector<std::size_t> chosen;
    std::function<void(VertexSet)> search = [&](VertexSet rest) {
        if (rest.empty()) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        // Lower bound: every further member covers at most max_size vertices.
        const std::size_t needed = static_cast<std::size_t>((rest.size() + max_size - 1) / max_size);
        if (chosen.size() + needed >= best.size()) return;
        const int v = rest.first();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!members[i].contains(v)) continue;
            chosen.push_back(i);
            search(rest - members[i]);
            chosen.pop_back();
        }
    };
    search(universe);
    return best;
}

}  // namespace cmlabel

#include "cmlabel/search.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "cmlabel/cmcheck.hpp"
#include "cmlabel/constructions.hpp"
#include "cmlabel/errors.hpp"

namespace cmlabel {

namespace {

constexpr int kMaxSearchVertices = 24;
constexpr std::uint8_t kUnreached = 0xff;

bool family_less(const VertexFamily& a, const VertexFamily& b) {
    if (a.sets.size() != b.sets.size()) return a.sets.size() < b.sets.size();
    return std::lexicographical_compare(a.sets.begin(), a.sets.end(), b.sets.begin(), b.sets.end(), canonical_less);
}

/// Smallest image of f under the group, in canonical form.
VertexFamily orbit_representative(const VertexFamily& f, const std::vector<std::vector<int>>& group) {
    VertexFamily best = canonical(f);
    for (const auto& perm : group) {
        VertexFamily image{f.n, {}};
        for (VertexSet s : f.sets) image.sets.push_back(permute(s, perm));
        image = canonical(std::move(image));
        if (std::lexicographical_compare(image.sets.begin(), image.sets.end(), best.sets.begin(), best.sets.end(),
                                         canonical_less))
            best = std::move(image);
    }
    return best;
}

std::vector<VertexFamily> finish(std::vector<VertexFamily> found, const std::vector<std::vector<int>>& group) {
    for (auto& f : found) f = group.empty() ? canonical(std::move(f)) : orbit_representative(f, group);
    std::sort(found.begin(), found.end(), family_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

/// Acyclicity lookups with a per-thread memo.
class MemoOracle {
public:
    explicit MemoOracle(const AcyclicityOracle& oracle) : oracle_(oracle) {}
    bool acyclic(VertexSet w) {
        if (oracle_.precomputed()) return oracle_.acyclic(w);
        auto [it, inserted] = memo_.try_emplace(w.bits(), false);
        if (inserted) it->second = oracle_.acyclic(w);
        return it->second;
    }

private:
    const AcyclicityOracle& oracle_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

/// The pair masks for the third criterion: bit k of masks[i] says candidate i
/// separates covering pair k.
std::vector<boost::dynamic_bitset<>> separation_masks(const CellComplex& x, const std::vector<VertexSet>& candidates) {
    const auto pairs = covering_pairs(x);
    std::vector<boost::dynamic_bitset<>> masks(candidates.size(), boost::dynamic_bitset<>(pairs.size()));
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const VertexSet lower = pairs[k].first < 0 ? VertexSet() : x.cell_vertices(pairs[k].first);
            const VertexSet upper = x.cell_vertices(pairs[k].second);
            if (!candidates[i].intersects(lower) && candidates[i].intersects(upper)) masks[i].set(k);
        }
    return masks;
}

/// Depth-first search over subfamilies of the candidates in increasing index
/// order. The table cnt[U] holds the fewest chosen members whose union is U.
class Explorer {
public:
    Explorer(const CellComplex& x, const std::vector<VertexSet>& candidates,
             const std::vector<boost::dynamic_bitset<>>& masks, const AcyclicityOracle& oracle)
        : x_(x), candidates_(candidates), masks_(masks), oracle_(oracle), n_(x.n_vertices()), d_(x.dim()),
          full_(VertexSet::full(x.n_vertices())), cnt_(std::size_t{1} << x.n_vertices(), kUnreached) {
        cnt_[0] = 0;
        reach_.push_back(VertexSet());
        const std::size_t pairs = masks.empty() ? covering_pairs(x).size() : masks.front().size();
        acc_.push_back(boost::dynamic_bitset<>(pairs));
    }

    /// Explore families whose first member index satisfies first % stride == offset.
    void run(std::size_t offset, std::size_t stride, bool stop_at_first) {
        stop_at_first_ = stop_at_first;
        if (!oracle_.acyclic(full_)) return;  // the empty union already fails
        if (offset == 0 && acc_.back().all()) record();
        for (std::size_t i = offset; i < candidates_.size() && !done(); i += stride) {
            const std::size_t mark = log_.size(), reach = reach_.size();
            if (try_add(i)) descend(i);
            undo(mark, reach);
        }
    }

    std::vector<VertexFamily> found;

private:
    bool done() const { return stop_at_first_ && !found.empty(); }

    void descend(std::size_t i) {
        chosen_.push_back(i);
        acc_.push_back(acc_.back() | masks_[i]);
        if (acc_.back().all()) record();
        for (std::size_t j = i + 1; j < candidates_.size() && !done(); ++j) {
            const std::size_t mark = log_.size(), reach = reach_.size();
            if (try_add(j)) descend(j);
            undo(mark, reach);
        }
        acc_.pop_back();
        chosen_.pop_back();
    }

    bool try_add(std::size_t i) {
        const VertexSet s = candidates_[i];
        const std::size_t count = reach_.size();
        for (std::size_t k = 0; k < count; ++k) {
            const VertexSet u = reach_[k];
            const VertexSet v = u | s;
            const std::uint8_t c = static_cast<std::uint8_t>(cnt_[u.bits()] + 1);
            std::uint8_t& slot = cnt_[v.bits()];
            if (slot == kUnreached) {
                if (!oracle_.acyclic(v.complement(n_))) return false;
                log_.emplace_back(v.bits(), slot);
                slot = c;
                reach_.push_back(v);
            } else if (c < slot) {
                log_.emplace_back(v.bits(), slot);
                slot = c;
            }
        }
        return cnt_[full_.bits()] == kUnreached || cnt_[full_.bits()] > d_;
    }

    void undo(std::size_t mark, std::size_t reach) {
        while (log_.size() > mark) {
            cnt_[log_.back().first] = log_.back().second;
            log_.pop_back();
        }
        reach_.resize(reach);
    }

    void record() {
        VertexFamily f{n_, {}};
        for (std::size_t i : chosen_) f.sets.push_back(candidates_[i]);
        found.push_back(std::move(f));
    }

    const CellComplex& x_;
    const std::vector<VertexSet>& candidates_;
    const std::vector<boost::dynamic_bitset<>>& masks_;
    MemoOracle oracle_;
    int n_;
    int d_;
    VertexSet full_;
    std::vector<std::uint8_t> cnt_;
    std::vector<VertexSet> reach_;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> log_;
    std::vector<std::size_t> chosen_;
    std::vector<boost::dynamic_bitset<>> acc_;
    bool stop_at_first_ = false;
};

/// All three criteria from scratch, for the unpruned mode.
bool valid_direct(const CellComplex& x, const std::vector<VertexSet>& members, MemoOracle& oracle) {
    const int n = x.n_vertices();
    if (auto cover = minimum_cover(VertexSet::full(n), members); cover && static_cast<int>(cover->size()) <= x.dim())
        return false;
    for (VertexSet w : subfamily_unions(members))
        if (!oracle.acyclic(w.complement(n))) return false;
    for (const auto& [lo, hi] : covering_pairs(x)) {
        const VertexSet lower = lo < 0 ? VertexSet() : x.cell_vertices(lo);
        const VertexSet upper = x.cell_vertices(hi);
        if (std::none_of(members.begin(), members.end(),
                         [&](VertexSet s) { return !s.intersects(lower) && s.intersects(upper); }))
            return false;
    }
    return true;
}

void check_search_size(const CellComplex& x) {
    if (x.n_vertices() > kMaxSearchVertices)
        throw GuardExceeded("search limited to " + std::to_string(kMaxSearchVertices) + " vertices");
}

std::vector<VertexFamily> explore(const CellComplex& x, const SearchOptions& options, bool stop_at_first) {
    check_search_size(x);
    const SearchSpace space = make_search_space(x, options);
    const AcyclicityOracle oracle(x, options.field);
    const auto masks = separation_masks(x, space.candidates);

    if (!options.pruning) {
        if (space.candidates.size() > 24) throw GuardExceeded("unpruned search limited to 24 candidates");
        MemoOracle memo(oracle);
        std::vector<VertexFamily> found;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << space.candidates.size()); ++pick) {
            std::vector<VertexSet> members;
            for (std::size_t i = 0; i < space.candidates.size(); ++i)
                if ((pick >> i) & 1) members.push_back(space.candidates[i]);
            if (valid_direct(x, members, memo)) {
                found.push_back(VertexFamily{x.n_vertices(), members});
                if (stop_at_first) break;
            }
        }
        return finish(std::move(found), space.symmetry);
    }

    const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    std::vector<std::vector<VertexFamily>> per_worker(jobs);
    if (jobs == 1) {
        Explorer e(x, space.candidates, masks, oracle);
        e.run(0, 1, stop_at_first);
        per_worker[0] = std::move(e.found);
    } else {
        std::vector<std::thread> workers;
        std::mutex error_lock;
        std::exception_ptr error;
        for (std::size_t w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                try {
                    Explorer e(x, space.candidates, masks, oracle);
                    e.run(w, jobs, stop_at_first);
                    per_worker[w] = std::move(e.found);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(error_lock);
                    if (!error) error = std::current_exception();
                }
            });
        for (auto& t : workers) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<VertexFamily> found;
    for (auto& part : per_worker)
        for (auto& f : part) found.push_back(std::move(f));
    if (stop_at_first && found.size() > 1) found.resize(1);
    return finish(std::move(found), space.symmetry);
}

}  // namespace

bool connected_subset(const CellComplex& x, VertexSet s) {
    if (s.empty()) return false;
    VertexSet reached = VertexSet::single(s.first());
    for (bool grew = true; grew;) {
        grew = false;
        for (int e : x.cells_of_dim(1)) {
            const VertexSet ends = x.cell_vertices(e);
            if (ends.subset_of(s) && ends.intersects(reached) && !ends.subset_of(reached)) {
                reached |= ends;
                grew = true;
            }
        }
    }
    return reached == s;
}

bool is_automorphism(const CellComplex& x, const std::vector<int>& perm) {
    const int n = x.n_vertices();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    std::multiset<std::pair<int, std::uint64_t>> cells, images;
    for (const Cell& c : x.cells()) {
        cells.emplace(c.dim, x.cell_vertices(c.id).bits());
        images.emplace(c.dim, permute(x.cell_vertices(c.id), perm).bits());
    }
    return cells == images;
}

std::vector<std::vector<int>> dihedral_symmetries(const CellComplex& x, int m) {
    const int n = x.n_vertices();
    if (m < 3 || m > n) throw InvalidInput("dihedral symmetry needs a cycle of length between 3 and n");
    std::vector<std::vector<int>> out;
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int shift = 0; shift < m; ++shift) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                perm[static_cast<std::size_t>(v)] = v >= m ? v : (((reflect ? -v : v) + shift) % m + m) % m;
            if (is_automorphism(x, perm)) out.push_back(std::move(perm));
        }
    return out;
}

SearchSpace make_search_space(const CellComplex& x, const SearchOptions& options) {
    check_search_size(x);
    for (const auto& perm : options.symmetry)
        if (!is_automorphism(x, perm)) throw InvalidInput("symmetry permutation is not an automorphism of the complex");
    const int n = x.n_vertices();
    const VertexSet full = VertexSet::full(n);
    const AcyclicityOracle oracle(x, options.field);
    SearchSpace space;
    space.symmetry = options.symmetry;
    for (std::uint64_t bits = 1; bits <= full.bits(); ++bits) {
        const VertexSet s(bits);
        if (options.connected_only && !connected_subset(x, s)) continue;
        // Alone, s must neither cover [n] with at most d members nor leave a
        // non-acyclic complement.
        if (s == full && x.dim() >= 1) continue;
        if (!oracle.acyclic(s.complement(n))) continue;
        space.candidates.push_back(s);
    }
    std::sort(space.candidates.begin(), space.candidates.end(), canonical_less);
    if (space.candidates.size() > options.max_candidates)
        throw GuardExceeded(std::to_string(space.candidates.size()) + " candidate members exceed the limit of " +
                            std::to_string(options.max_candidates));
    return space;
}

std::vector<VertexFamily> enumerate_valid_families(const CellComplex& x, const SearchOptions& options) {
    return explore(x, options, false);
}

std::optional<VertexFamily> find_valid_family(const CellComplex& x, const SearchOptions& options) {
    SearchOptions o = options;
    o.symmetry.clear();
    auto found = explore(x, o, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<VertexFamily> enumerate_maximal_families(const CellComplex& x, const SearchOptions& options) {
    SearchOptions o = options;
    o.symmetry.clear();
    const auto valid = explore(x, o, false);
    AcyclicityOracle oracle(x, options.field);
    if (x.n_vertices() <= 20) oracle.precompute();
    std::vector<VertexFamily> maximal;
    for (const auto& f : valid) {
        if (!is_reduced(f)) continue;
        if (is_maximal(x, f, options.field, &oracle).maximal) maximal.push_back(f);
    }
    return finish(std::move(maximal), options.symmetry);
}

MaximalityVerdict is_maximal(const CellComplex& x, const VertexFamily& f, const Field& field,
                             const AcyclicityOracle* oracle) {
    check_search_size(x);
    std::unique_ptr<AcyclicityOracle> own;
    if (oracle == nullptr) {
        own = std::make_unique<AcyclicityOracle>(x, field);
        if (x.n_vertices() <= 20) own->precompute();
        oracle = own.get();
    }
    if (!check_family_criteria(x, f, field, oracle).all())
        throw InvalidInput("is_maximal needs a family satisfying all three criteria");
    MaximalityVerdict verdict;
    for (VertexSet s : canonical(f).sets)
        if (disjoint_decomposition(s, f.sets, false)) {
            verdict.decomposable_member = s;
            return verdict;
        }

    const int n = x.n_vertices();
    const int d = x.dim();
    const VertexSet full = VertexSet::full(n);
    // Distinct unions of subfamilies with the fewest members producing each.
    std::unordered_map<std::uint64_t, int> fewest{{0, 0}};
    std::vector<VertexSet> unions{VertexSet()};
    for (VertexSet s : f.sets) {
        const std::size_t count = unions.size();
        for (std::size_t k = 0; k < count; ++k) {
            const VertexSet v = unions[k] | s;
            const int c = fewest[unions[k].bits()] + 1;
            auto [it, inserted] = fewest.try_emplace(v.bits(), c);
            if (inserted) unions.push_back(v);
            else it->second = std::min(it->second, c);
        }
    }

    std::vector<VertexSet> order;
    for (std::uint64_t bits = 1; bits <= full.bits(); ++bits) order.push_back(VertexSet(bits));
    std::sort(order.begin(), order.end(), canonical_less);
    for (VertexSet t : order) {
        if (f.contains(t) || disjoint_decomposition(t, f.sets)) continue;
        bool breaks = false;
        for (VertexSet u : unions) {
            const VertexSet v = u | t;
            if ((v == full && fewest[u.bits()] + 1 <= d) || !oracle->acyclic(v.complement(n))) {
                breaks = true;
                break;
            }
        }
        if (!breaks) {
            verdict.addable = t;
            return verdict;
        }
    }
    verdict.maximal = true;
    return verdict;
}

bool refinement_maximal_among(const VertexFamily& f, const std::vector<VertexFamily>& valid) {
    for (const auto& g : valid)
        if (is_reduced(g) && !same_sets(f, g) && refines(g, f)) return false;
    return true;
}

CoveringCheck covering_property_check(const CellComplex& x, const VertexFamily& f) {
    const int n = x.n_vertices();
    const int d = x.dim();
    const VertexSet full = VertexSet::full(n);
    CoveringCheck out;
    for (VertexSet t : f.sets) {
        bool failed = false;
        t.for_each([&](int v) {
            if (failed) return;
            std::vector<VertexSet> avoiding;
            for (VertexSet s : f.sets)
                if (!s.contains(v)) avoiding.push_back(s);
            auto cover = minimum_cover(full - t, avoiding);
            if (!cover || static_cast<int>(cover->size()) > d) {
                failed = true;
                out.holds = false;
                out.witness = "member " + t.to_string() + " with vertex " + std::to_string(v) +
                              ": no " + std::to_string(d) + " members avoiding it complete a cover";
            }
        });
        if (failed) return out;
    }
    if (d >= 1 && x.cells_of_dim(d).size() == 1) {
        for (std::size_t i = 0; i < f.sets.size(); ++i)
            for (std::size_t j = i + 1; j < f.sets.size(); ++j) {
                if (f.sets[i].intersects(f.sets[j])) continue;
                auto cover = minimum_cover(full - (f.sets[i] | f.sets[j]), f.sets);
                if (!cover || static_cast<int>(cover->size()) > d - 1) {
                    out.holds = false;
                    out.witness = "disjoint members " + f.sets[i].to_string() + " and " + f.sets[j].to_string() +
                                  ": no " + std::to_string(d - 1) + " members complete a cover";
                    return out;
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture harnesses

std::vector<std::vector<std::pair<int, int>>> chord_configurations(int n, int k) {
    if (n < 4 || k < 0) throw InvalidInput("chord configurations need n >= 4 and k >= 0");
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 2; v < n; ++v)
            if (!(u == 0 && v == n - 1)) all.emplace_back(u, v);
    auto crosses = [](std::pair<int, int> a, std::pair<int, int> b) {
        auto inside = [&](int w) { return a.first < w && w < a.second; };
        const bool shared = a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
        return !shared && inside(b.first) != inside(b.second);
    };
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> pick;
    auto canonical_config = [n](std::vector<std::pair<int, int>> cs) {
        std::vector<std::pair<int, int>> best;
        for (int reflect = 0; reflect < 2; ++reflect)
            for (int shift = 0; shift < n; ++shift) {
                std::vector<std::pair<int, int>> img;
                for (auto [u, v] : cs) {
                    auto m = [&](int w) { return (((reflect ? -w : w) + shift) % n + n) % n; };
                    img.emplace_back(std::min(m(u), m(v)), std::max(m(u), m(v)));
                }
                std::sort(img.begin(), img.end());
                if (best.empty() || img < best) best = img;
            }
        return best;
    };
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == k) {
            auto c = canonical_config(pick);
            if (seen.insert(c).second) out.push_back(c);
            return;
        }
        for (std::size_t i = start; i < all.size(); ++i) {
            if (std::any_of(pick.begin(), pick.end(), [&](auto p) { return crosses(p, all[i]); })) continue;
            pick.push_back(all[i]);
            go(i + 1);
            pick.pop_back();
        }
    };
    go(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, std::vector<std::pair<int, int>>>> default_chord_configurations() {
    return {{5, {{0, 2}}}, {6, {{0, 2}}}, {6, {{0, 3}}}, {7, {{0, 2}}}, {7, {{0, 3}}}, {6, {{1, 3}, {3, 5}}}};
}

std::vector<ChordConjectureRow> conjecture_chords(
    const std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& configs, const SearchOptions& options) {
    std::vector<ChordConjectureRow> rows;
    for (const auto& [n, chords] : configs) {
        ChordConjectureRow row;
        row.n = n;
        row.chords = chords;
        const CellComplex x = subdivided_polygon_complex(n, chords);
        try {
            const auto maximal = enumerate_maximal_families(x, options);
            row.maximal_families = maximal.size();
            row.families = maximal;
            for (const auto& f : maximal) {
                row.family_sizes.push_back(f.size());
                if (f.size() != static_cast<std::size_t>(n) + chords.size()) row.consistent = false;
            }
            if (!row.consistent) row.note = "counterexample: a maximal family without n + k members";
        } catch (const GuardExceeded& e) {
            row.note = std::string("skipped: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PolytopeConjectureRow> conjecture_polytopes(const SearchOptions& options) {
    struct Entry {
        std::string name;
        CellComplex complex;
        std::optional<VertexFamily> known;
    };
    std::vector<Entry> entries;
    for (int n = 3; n <= 7; ++n)
        entries.push_back({"polygon(" + std::to_string(n) + ")", polygon_complex(n),
                           n % 2 ? std::optional<VertexFamily>(polygon_family(n)) : std::nullopt});
    for (int n = 3; n <= 5; ++n)
        entries.push_back({"wheel(" + std::to_string(n) + ")", wheel_polytope(n),
                           n == 4 ? std::optional<VertexFamily>(prop48_family()) : std::nullopt});
    for (int n = 4; n <= 5; ++n)
        entries.push_back({"pyramid(polygon(" + std::to_string(n) + "))", pyramid(polygon_complex(n)),
                           n % 2 ? std::optional<VertexFamily>(pyramid_family(polygon_family(n))) : std::nullopt});
    entries.push_back({"elongated_pyramid(polygon(3))", elongated_pyramid(polygon_complex(3)),
                       ep_family(VertexFamily{3, {VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)}})});
    entries.push_back({"elongated_pyramid(polygon(5))", elongated_pyramid(polygon_complex(5)), ep_family(polygon_family(5))});
    for (int n = 3; n <= 4; ++n)
        entries.push_back({"bipyramid(" + std::to_string(n) + ")", bipyramid_complex(n), std::nullopt});

    std::vector<PolytopeConjectureRow> rows;
    for (auto& e : entries) {
        PolytopeConjectureRow row;
        row.name = e.name;
        row.f_vector = e.complex.f_vector();
        row.symmetric = f_symmetry(e.complex);
        if (e.known && check_family_criteria(e.complex, *e.known, options.field).all()) {
            row.admits_valid_family = true;
            row.valid_family_source = "known family";
        } else {
            try {
                row.admits_valid_family = find_valid_family(e.complex, options).has_value();
                row.valid_family_source = row.admits_valid_family ? "search" : "none found";
            } catch (const GuardExceeded&) {
                row.valid_family_source = "undetermined";
            }
        }
        row.counterexample = row.admits_valid_family && !row.symmetric;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cmlabel

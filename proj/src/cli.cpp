#include "cmlabel/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "cmlabel/cmcheck.hpp"
#include "cmlabel/constructions.hpp"
#include "cmlabel/errors.hpp"
#include "cmlabel/json_io.hpp"
#include "cmlabel/search.hpp"

namespace cmlabel {

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

namespace {

/// Shared state of one invocation.
struct Run {
    std::string field_name = "gf2";
    int jobs = 1;
    bool timing = false;
    Json report = Json::object();

    Field field() const { return Field::parse(field_name); }

    Json load(const std::string& role, const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InvalidInput("cannot read " + path);
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        report["inputs"][role] = {{"path", path}, {"sha256", sha256_hex(bytes)}};
        try {
            return Json::parse(bytes);
        } catch (const Json::parse_error& e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }

    /// Reads a complex, rejects structural errors and orients it when the
    /// field needs signs.
    CellComplex complex(const std::string& path) {
        CellComplex x = complex_from_json(load("complex", path));
        auto diagnostics = validate_complex(x);
        bool only_signs = std::all_of(diagnostics.begin(), diagnostics.end(),
                                      [](const Diagnostic& d) { return d.kind == "sign"; });
        if (!diagnostics.empty() && !(only_signs && !x.has_signs()))
            throw InvalidInput("complex: " + diagnostics.front().kind + ": " + diagnostics.front().message);
        if (field().needs_signs() && !x.has_signs()) {
            x = assign_signs(x);
            report["signs_assigned"] = true;
        }
        return x;
    }
};

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos) throw InvalidInput("expected pairs like 1-3,3-5, got " + text);
        try {
            out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw InvalidInput("expected pairs like 1-3,3-5, got " + text);
        }
    }
    return out;
}

VertexSet parse_subset(const std::string& text) {
    VertexSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            int v = std::stoi(item);
            if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex out of range: " + item);
            s.insert(v);
        } catch (const std::invalid_argument&) {
            throw InvalidInput("expected a vertex list like 0,2,3, got " + text);
        }
    }
    return s;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInput(message);
}

void check_sizes(const CellComplex& x, int n, const char* what) {
    if (n != x.n_vertices())
        throw InvalidInput(std::string(what) + " has " + std::to_string(n) + " vertices, complex has " +
                           std::to_string(x.n_vertices()));
}

/// Either a family or a labelling file; the labelling is what gets checked.
struct LabelInput {
    std::optional<VertexFamily> family;
    MonomialLabelling labelling;
};

LabelInput load_labels(Run& run, const CellComplex& x, const std::string& family_path,
                       const std::string& labelling_path) {
    require(family_path.empty() != labelling_path.empty(), "give exactly one of --family and --labelling");
    LabelInput in;
    if (!family_path.empty()) {
        in.family = family_from_json(run.load("family", family_path));
        check_sizes(x, in.family->n, "family");
        in.labelling = labelling_of(*in.family);
    } else {
        in.labelling = labelling_from_json(run.load("labelling", labelling_path));
        check_sizes(x, in.labelling.n_vertices(), "labelling");
    }
    return in;
}

// ---------------------------------------------------------------------------
// construct

Json construct_list() {
    Json kinds = Json::array({
        "polygon --n", "chord --n --a", "subdivided --n --chords", "polygon-family --n",
        "chord-families --n --a", "wheel --n", "prop48-family", "bipyramid --n", "pyramid --complex",
        "pyramid-family --family", "elongated-pyramid --complex", "ep-family --family", "tree --n --edges",
        "tree-labelling --n --edges", "fixture --id",
    });
    Json fixtures = Json::array();
    for (const auto& id : fixture_ids()) {
        Fixture fx = figure_fixture(id);
        fixtures.push_back({{"id", fx.id},
                            {"description", fx.description},
                            {"n_vertices", fx.complex.n_vertices()},
                            {"n_variables", fx.labelling.n_variables}});
    }
    return {{"kinds", kinds}, {"fixtures", fixtures}};
}

struct ConstructArgs {
    std::string kind;
    bool list = false;
    bool raw = false;
    int n = -1;
    int a = -1;
    std::string chords;
    std::string edges;
    std::string id;
    std::string complex_path;
    std::string family_path;
};

Json construct(Run& run, const ConstructArgs& c) {
    if (c.list) return construct_list();
    const std::string& k = c.kind;
    require(!k.empty(), "construct needs a kind or --list");
    auto need_n = [&] { require(c.n >= 0, k + " needs --n"); return c.n; };
    auto tree = [&] {
        OrientedTree t{need_n(), parse_pairs(c.edges)};
        validate_tree(t);
        return t;
    };
    if (k == "polygon") return complex_to_json(polygon_complex(need_n()));
    if (k == "chord") {
        require(c.a >= 0, "chord needs --a");
        return complex_to_json(chord_complex(need_n(), c.a));
    }
    if (k == "subdivided") return complex_to_json(subdivided_polygon_complex(need_n(), parse_pairs(c.chords)));
    if (k == "polygon-family") return family_to_json(polygon_family(need_n()));
    if (k == "chord-families") {
        require(c.a >= 0, "chord-families needs --a");
        auto [f1, f2] = chord_families(need_n(), c.a);
        return {{"families", Json::array({family_to_json(f1), family_to_json(f2)})}};
    }
    if (k == "wheel") return complex_to_json(wheel_polytope(need_n()));
    if (k == "prop48-family") return family_to_json(prop48_family());
    if (k == "bipyramid") return complex_to_json(bipyramid_complex(need_n()));
    if (k == "pyramid") return complex_to_json(pyramid(run.complex(c.complex_path)));
    if (k == "elongated-pyramid") return complex_to_json(elongated_pyramid(run.complex(c.complex_path)));
    if (k == "pyramid-family") return family_to_json(pyramid_family(family_from_json(run.load("family", c.family_path))));
    if (k == "ep-family") return family_to_json(ep_family(family_from_json(run.load("family", c.family_path))));
    if (k == "tree") return complex_to_json(tree_complex(tree()));
    if (k == "tree-labelling") return labelling_to_json(tree_maximal_labelling(tree()));
    if (k == "fixture") {
        Fixture fx = figure_fixture(c.id);
        return {{"id", fx.id},
                {"description", fx.description},
                {"complex", complex_to_json(fx.complex)},
                {"labelling", labelling_to_json(fx.labelling)},
                {"variables", fx.variables}};
    }
    throw InvalidInput("unknown construct kind: " + k);
}

// ---------------------------------------------------------------------------
// verification commands

int verify(Run& run, const std::string& complex_path, const std::string& family_path,
           const std::string& labelling_path) {
    CellComplex x = run.complex(complex_path);
    LabelInput in = load_labels(run, x, family_path, labelling_path);
    CmVerdict v = check_cm_labelling(x, in.labelling, run.field());
    run.report["verdicts"]["cm"] = verdict_to_json(v);
    run.report["verdicts"]["is_cm"] = v.is_cm;
    if (in.family) {
        FamilyCriteriaReport r = check_family_criteria(x, *in.family, run.field());
        run.report["verdicts"]["family_criteria"] = r.all();
        run.report["witnesses"]["family_criteria"] = criteria_to_json(r);
    }
    Json w = Json::object();
    if (v.failing_multidegree) w["failing_multidegree"] = monomial_to_json(*v.failing_multidegree);
    if (v.failing_pair) w["failing_pair"] = {v.failing_pair->first, v.failing_pair->second};
    if (!w.empty()) run.report["witnesses"]["cm"] = w;
    return v.is_cm ? kExitOk : kExitNegative;
}

int homology(Run& run, const std::string& complex_path, const std::string& subset) {
    CellComplex x = run.complex(complex_path);
    if (!subset.empty()) {
        VertexSet w = parse_subset(subset);
        require(w.subset_of(VertexSet::full(x.n_vertices())), "subset vertex out of range");
        x = restrict_to(x, w);
        run.report["subset"] = vertex_set_to_json(w);
    }
    HomologyReport h = reduced_homology(x, run.field());
    run.report["result"] = homology_to_json(h);
    run.report["verdicts"]["acyclic"] = h.acyclic;
    return kExitOk;
}

int betti(Run& run, const std::string& complex_path, const std::string& family_path, const std::string& labelling_path) {
    CellComplex x = run.complex(complex_path);
    if (!x.has_signs()) x = assign_signs(x);
    LabelInput in = load_labels(run, x, family_path, labelling_path);
    CellularFreeComplex fc = build_free_complex(x, in.labelling);
    ResolutionCheck res = check_cellular_resolution(x, in.labelling, run.field());
    MinimalityCheck min = check_minimal(x, in.labelling);
    Json multidegrees = Json::array();
    for (const auto& degree : fc.multidegrees) {
        Json row = Json::array();
        for (const Monomial& m : degree) row.push_back(monomial_to_json(m));
        multidegrees.push_back(row);
    }
    run.report["result"] = {{"ranks", fc.ranks()}, {"multidegrees", multidegrees}, {"lattice_points", res.lattice_points}};
    run.report["verdicts"]["is_cellular_resolution"] = res.holds;
    run.report["verdicts"]["is_minimal"] = min.holds;
    if (res.witness) run.report["witnesses"]["failing_multidegree"] = monomial_to_json(*res.witness);
    if (min.witness) run.report["witnesses"]["failing_pair"] = {min.witness->first, min.witness->second};
    return res.holds && min.holds ? kExitOk : kExitNegative;
}

VertexFamily family_or_labelling(Run& run, const std::string& role, const std::string& path) {
    Json j = run.load(role, path);
    if (j.is_object() && j.contains("sets")) return family_from_json(j);
    FamilyReadout r = family_of(labelling_from_json(j));
    require(r.distinct(), role + ": two variables have the same vertex set");
    return r.family;
}

int morphism(Run& run, const std::string& from, const std::string& to) {
    VertexFamily f = family_or_labelling(run, "from", from);
    VertexFamily g = family_or_labelling(run, "to", to);
    require(f.n == g.n, "families live on different vertex counts");
    bool exists = morphism_exists(f, g);
    run.report["verdicts"]["morphism_exists"] = exists;
    run.report["result"] = {{"refinement", to_string(refinement_compare(f, g))}};
    if (exists) run.report["result"]["substitution"] = substitution_to_json(morphism_substitution(f, g));
    return exists ? kExitOk : kExitNegative;
}

int polarize_cmd(Run& run, const std::string& labelling_path) {
    MonomialLabelling l = labelling_from_json(run.load("labelling", labelling_path));
    Polarization p = polarize(l);
    Json origin = Json::array();
    for (auto [v, j] : p.origin) origin.push_back({v, j});
    run.report["result"] = {{"labelling", labelling_to_json(p.labelling)},
                            {"origin", origin},
                            {"depolarization", substitution_to_json(p.depolarization(l.n_variables))}};
    return kExitOk;
}

// ---------------------------------------------------------------------------
// search commands

struct SearchArgs {
    std::string complex_path;
    std::string family_path;
    bool maximal = false;
    std::string symmetry = "none";
    int cycle_length = 0;
    std::size_t max_candidates = kDefaultMaxCandidates;
    bool no_pruning = false;
    bool all_members = false;
};

SearchOptions options_of(const Run& run, const SearchArgs& s) {
    SearchOptions o;
    o.field = run.field();
    o.connected_only = !s.all_members;
    o.pruning = !s.no_pruning;
    o.max_candidates = s.max_candidates;
    o.jobs = run.jobs;
    return o;
}

int enumerate(Run& run, const SearchArgs& s) {
    CellComplex x = run.complex(s.complex_path);
    SearchOptions o = options_of(run, s);
    if (s.symmetry == "dihedral")
        o.symmetry = dihedral_symmetries(x, s.cycle_length > 0 ? s.cycle_length : x.n_vertices());
    else
        require(s.symmetry == "none", "unknown symmetry: " + s.symmetry);
    std::size_t candidates = make_search_space(x, o).candidates.size();
    auto families = s.maximal ? enumerate_maximal_families(x, o) : enumerate_valid_families(x, o);
    Json list = Json::array();
    Json sizes = Json::array();
    for (const auto& f : families) {
        list.push_back(family_to_json(f));
        sizes.push_back(f.size());
    }
    run.report["result"] = {{"kind", s.maximal ? "maximal" : "valid"},
                            {"candidates", candidates},
                            {"count", families.size()},
                            {"sizes", sizes},
                            {"families", list},
                            {"symmetry", s.symmetry}};
    return kExitOk;
}

int maximal_check(Run& run, const SearchArgs& s) {
    CellComplex x = run.complex(s.complex_path);
    VertexFamily f = family_from_json(run.load("family", s.family_path));
    check_sizes(x, f.n, "family");
    FamilyCriteriaReport r = check_family_criteria(x, f, run.field());
    run.report["verdicts"]["family_criteria"] = r.all();
    if (!r.all()) {
        run.report["verdicts"]["maximal"] = false;
        run.report["witnesses"]["family_criteria"] = criteria_to_json(r);
        return kExitNegative;
    }
    MaximalityVerdict v = is_maximal(x, f, run.field());
    run.report["verdicts"]["maximal"] = v.maximal;
    run.report["witnesses"]["maximality"] = maximality_to_json(v);
    CoveringCheck cov = covering_property_check(x, f);
    run.report["verdicts"]["covering_property"] = cov.holds;
    if (!cov.holds) run.report["witnesses"]["covering_property"] = cov.witness;
    return v.maximal ? kExitOk : kExitNegative;
}

struct ConjectureArgs {
    std::string which;
    int n = -1;
    std::string chords;
    int k = -1;
    int max_n = 7;
};

int conjecture(Run& run, const ConjectureArgs& c, const SearchArgs& s) {
    SearchOptions o = options_of(run, s);
    run.report["conjecture"] = c.which;
    if (c.which == "3.10") {
        std::vector<std::pair<int, std::vector<std::pair<int, int>>>> configs;
        if (c.n >= 0) {
            configs.push_back({c.n, parse_pairs(c.chords)});
        } else if (c.k >= 0) {
            for (int n = 4; n <= c.max_n; ++n)
                for (auto& chords : chord_configurations(n, c.k)) configs.push_back({n, chords});
        } else {
            configs = default_chord_configurations();
        }
        Json rows = Json::array();
        Json flagged = Json::array();
        for (const auto& row : conjecture_chords(configs, o)) {
            rows.push_back(chord_row_to_json(row));
            if (!row.consistent) flagged.push_back(rows.back());
        }
        run.report["result"] = {{"rows", rows}, {"counterexamples", flagged}};
        run.report["verdicts"]["consistent"] = flagged.empty();
        run.report["verdicts"]["counterexample_found"] = !flagged.empty();
        return kExitOk;
    }
    if (c.which == "4.2") {
        Json rows = Json::array();
        Json flagged = Json::array();
        for (const auto& row : conjecture_polytopes(o)) {
            rows.push_back(polytope_row_to_json(row));
            if (row.counterexample) flagged.push_back(rows.back());
        }
        run.report["result"] = {{"rows", rows}, {"counterexamples", flagged}};
        run.report["verdicts"]["consistent"] = flagged.empty();
        run.report["verdicts"]["counterexample_found"] = !flagged.empty();
        return kExitOk;
    }
    throw InvalidInput("unknown conjecture: " + c.which + " (expected 3.10 or 4.2)");
}

int default_jobs() {
    if (const char* env = std::getenv("CMLABEL_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << Json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohen-Macaulay monomial labellings of regular cell complexes", "cmlabel"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Run run;
    run.jobs = default_jobs();
    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", run.field_name, "Coefficient field: gf2, gfp such as gf3, or rational");
        sub->add_option("--jobs", run.jobs, "Worker threads (default from CMLABEL_JOBS, else 1)")->check(CLI::PositiveNumber);
        sub->add_flag("--timing", run.timing, "Record wall time in the report");
    };

    ConstructArgs ca;
    auto* c_construct = app.add_subcommand("construct", "Emit a complex, family, labelling or fixture");
    c_construct->add_option("kind", ca.kind, "What to construct (see --list)");
    c_construct->add_flag("--list", ca.list, "Catalogue of kinds and fixtures");
    c_construct->add_flag("--raw", ca.raw, "Print only the constructed object");
    c_construct->add_option("--n", ca.n, "Size parameter");
    c_construct->add_option("--a", ca.a, "Chord endpoint");
    c_construct->add_option("--chords", ca.chords, "Chords as 1-3,3-5");
    c_construct->add_option("--edges", ca.edges, "Tree edges as 0-1,1-2");
    c_construct->add_option("--id", ca.id, "Fixture id");
    c_construct->add_option("--complex", ca.complex_path, "Complex JSON");
    c_construct->add_option("--family", ca.family_path, "Family JSON");
    common(c_construct);

    std::string complex_path, family_path, labelling_path, subset, from, to;
    auto* c_verify = app.add_subcommand("verify", "Decide whether a labelling is Cohen-Macaulay");
    c_verify->add_option("--complex", complex_path, "Complex JSON")->required();
    c_verify->add_option("--family", family_path, "Family JSON");
    c_verify->add_option("--labelling", labelling_path, "Labelling JSON");
    common(c_verify);

    auto* c_homology = app.add_subcommand("homology", "Reduced homology of a complex or a restriction");
    c_homology->add_option("--complex", complex_path, "Complex JSON")->required();
    c_homology->add_option("--subset", subset, "Restrict to these vertices, as 0,2,3");
    common(c_homology);

    auto* c_betti = app.add_subcommand("betti", "Ranks of the cellular free complex");
    c_betti->add_option("--complex", complex_path, "Complex JSON")->required();
    c_betti->add_option("--family", family_path, "Family JSON");
    c_betti->add_option("--labelling", labelling_path, "Labelling JSON");
    common(c_betti);

    auto* c_morphism = app.add_subcommand("morphism", "Morphism between two families or labellings");
    c_morphism->add_option("--from", from, "Source family or labelling JSON")->required();
    c_morphism->add_option("--to", to, "Target family or labelling JSON")->required();
    common(c_morphism);

    auto* c_polarize = app.add_subcommand("polarize", "Polarize a labelling");
    c_polarize->add_option("--labelling", labelling_path, "Labelling JSON")->required();
    common(c_polarize);

    SearchArgs sa;
    auto search_flags = [&](CLI::App* sub) {
        sub->add_option("--max-candidates", sa.max_candidates, "Refuse searches with more candidate members");
        sub->add_flag("--no-pruning", sa.no_pruning, "Generate and test every subfamily");
        sub->add_flag("--all-members", sa.all_members, "Allow disconnected members");
    };
    auto* c_enumerate = app.add_subcommand("enumerate", "All valid or maximal families on a complex");
    c_enumerate->add_option("--complex", sa.complex_path, "Complex JSON")->required();
    c_enumerate->add_flag("--maximal", sa.maximal, "Only maximal families");
    c_enumerate->add_option("--symmetry", sa.symmetry, "none or dihedral");
    c_enumerate->add_option("--cycle-length", sa.cycle_length, "Length of the boundary cycle 0..m-1 for dihedral");
    search_flags(c_enumerate);
    common(c_enumerate);

    auto* c_maximal = app.add_subcommand("maximal-check", "Is a valid family maximal?");
    c_maximal->add_option("--complex", sa.complex_path, "Complex JSON")->required();
    c_maximal->add_option("--family", sa.family_path, "Family JSON")->required();
    common(c_maximal);

    ConjectureArgs cj;
    auto* c_conjecture = app.add_subcommand("conjecture", "Evidence tables for the open conjectures");
    c_conjecture->add_option("which", cj.which, "3.10 or 4.2")->required();
    c_conjecture->add_option("--n", cj.n, "Polygon size for a single configuration");
    c_conjecture->add_option("--chords", cj.chords, "Chords as 1-3,3-5");
    c_conjecture->add_option("--k", cj.k, "All configurations with k chords");
    c_conjecture->add_option("--max-n", cj.max_n, "Largest polygon with --k");
    search_flags(c_conjecture);
    common(c_conjecture);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what(), kExitInput);
        return kExitInput;
    }

    auto* sub = app.get_subcommands().front();
    run.report["command"] = sub->get_name();
    run.report["version"] = kVersion;
    run.report["inputs"] = Json::object();
    run.report["verdicts"] = Json::object();
    run.report["witnesses"] = Json::object();
    auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        run.report["field"] = run.field().name();
        const std::string name = sub->get_name();
        if (name == "construct") {
            Json result = construct(run, ca);
            if (ca.raw) {
                out << dump(result);
                return kExitOk;
            }
            run.report["result"] = result;
        } else if (name == "verify") {
            code = verify(run, complex_path, family_path, labelling_path);
        } else if (name == "homology") {
            code = homology(run, complex_path, subset);
        } else if (name == "betti") {
            code = betti(run, complex_path, family_path, labelling_path);
        } else if (name == "morphism") {
            code = morphism(run, from, to);
        } else if (name == "polarize") {
            code = polarize_cmd(run, labelling_path);
        } else if (name == "enumerate") {
            code = enumerate(run, sa);
        } else if (name == "maximal-check") {
            code = maximal_check(run, sa);
        } else if (name == "conjecture") {
            code = conjecture(run, cj, sa);
        }
    } catch (const GuardExceeded& e) {
        emit_error(err, "guard_exceeded", e.what(), kExitGuard);
        return kExitGuard;
    } catch (const InvalidInput& e) {
        emit_error(err, "invalid_input", e.what(), kExitInput);
        return kExitInput;
    } catch (const VerificationFailure& e) {
        emit_error(err, "verification_failure", e.what(), kExitNegative);
        return kExitNegative;
    } catch (const Json::exception& e) {
        emit_error(err, "invalid_input", e.what(), kExitInput);
        return kExitInput;
    }
    if (run.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        run.report["wall_time_ms"] = ms;
    }
    run.report["exit_code"] = code;
    out << dump(run.report);
    return code;
}

}  // namespace cmlabel

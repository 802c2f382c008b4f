#include "cmlabel/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cmlabel/errors.hpp"

namespace cmlabel {

namespace {

const Json& field_of(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string(what) + ": missing key \"" + key + "\"");
    return j.at(key);
}

int int_of(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::vector<int> ints_of(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(int_of(e, what));
    return out;
}

}  // namespace

Json complex_to_json(const CellComplex& x) {
    Json cells = Json::array();
    for (const Cell& c : x.cells()) {
        Json boundary = Json::array();
        for (const Incidence& inc : c.boundary) boundary.push_back({inc.cell, inc.sign});
        cells.push_back({{"id", c.id}, {"dim", c.dim}, {"vertices", c.vertices}, {"boundary", boundary}});
    }
    return {{"n_vertices", x.n_vertices()}, {"cells", cells}};
}

CellComplex complex_from_json(const Json& j) {
    int n = int_of(field_of(j, "n_vertices", "complex"), "complex.n_vertices");
    if (n < 0 || n > kMaxVertices) throw InvalidInput("complex: n_vertices out of range");
    const Json& jc = field_of(j, "cells", "complex");
    if (!jc.is_array()) throw InvalidInput("complex.cells: expected an array");
    std::vector<Cell> cells;
    cells.reserve(jc.size());
    for (const auto& e : jc) {
        Cell c;
        c.id = int_of(field_of(e, "id", "cell"), "cell.id");
        c.dim = int_of(field_of(e, "dim", "cell"), "cell.dim");
        c.vertices = ints_of(field_of(e, "vertices", "cell"), "cell.vertices");
        std::sort(c.vertices.begin(), c.vertices.end());
        const Json& jb = field_of(e, "boundary", "cell");
        if (!jb.is_array()) throw InvalidInput("cell.boundary: expected an array");
        for (const auto& b : jb) {
            if (!b.is_array() || b.size() != 2) throw InvalidInput("cell.boundary: expected [cell, sign] pairs");
            Incidence inc{int_of(b[0], "boundary cell"), int_of(b[1], "boundary sign")};
            if (inc.sign < -1 || inc.sign > 1) throw InvalidInput("cell.boundary: sign must be -1, 0 or 1");
            c.boundary.push_back(inc);
        }
        cells.push_back(std::move(c));
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
    return CellComplex(n, std::move(cells));
}

Json vertex_set_to_json(VertexSet s) { return s.to_vector(); }

Json family_to_json(const VertexFamily& f) {
    Json sets = Json::array();
    for (VertexSet s : f.sets) sets.push_back(vertex_set_to_json(s));
    return {{"n", f.n}, {"sets", sets}};
}

VertexFamily family_from_json(const Json& j) {
    VertexFamily f;
    f.n = int_of(field_of(j, "n", "family"), "family.n");
    if (f.n < 0 || f.n > kMaxVertices) throw InvalidInput("family: n out of range");
    const Json& js = field_of(j, "sets", "family");
    if (!js.is_array()) throw InvalidInput("family.sets: expected an array");
    for (const auto& e : js) {
        VertexSet s;
        for (int v : ints_of(e, "family set")) {
            if (v < 0 || v >= f.n) throw InvalidInput("family: vertex out of range");
            s.insert(v);
        }
        f.sets.push_back(s);
    }
    validate_family(f);
    return f;
}

Json monomial_to_json(const Monomial& m) { return m.exponents; }

Json labelling_to_json(const MonomialLabelling& l) {
    Json labels = Json::array();
    for (const Monomial& m : l.labels) labels.push_back(monomial_to_json(m));
    return {{"n_variables", l.n_variables}, {"labels", labels}};
}

MonomialLabelling labelling_from_json(const Json& j) {
    MonomialLabelling l;
    l.n_variables = int_of(field_of(j, "n_variables", "labelling"), "labelling.n_variables");
    if (l.n_variables < 0) throw InvalidInput("labelling: negative n_variables");
    const Json& jl = field_of(j, "labels", "labelling");
    if (!jl.is_array()) throw InvalidInput("labelling.labels: expected an array");
    for (const auto& e : jl) l.labels.emplace_back(ints_of(e, "label"));
    validate_labelling(l);
    return l;
}

Json substitution_to_json(const Substitution& s) {
    Json images = Json::array();
    for (const Monomial& m : s.images) images.push_back(monomial_to_json(m));
    return {{"n_target_variables", s.n_target_variables}, {"images", images}};
}

Json tree_to_json(const OrientedTree& t) {
    Json edges = Json::array();
    for (auto [a, b] : t.edges) edges.push_back({a, b});
    return {{"n", t.n}, {"edges", edges}};
}

Json homology_to_json(const HomologyReport& h) {
    Json betti = Json::object();
    for (auto [d, r] : h.reduced_betti) betti[std::to_string(d)] = r;
    return {{"field", h.field.name()}, {"reduced_betti", betti}, {"acyclic", h.acyclic}};
}

Json criteria_to_json(const FamilyCriteriaReport& r) {
    Json j = {{"dim", r.dim},   {"cond1", r.cond1},   {"cond2", r.cond2},
              {"cond3", r.cond3}, {"covers", r.covers}, {"valid", r.all()}};
    j["cond1_witness"] = r.cond1_witness;
    j["cond2_witness"] = r.cond2_witness ? vertex_set_to_json(*r.cond2_witness) : Json(nullptr);
    j["cond3_witness"] = r.cond3_witness ? Json{r.cond3_witness->first, r.cond3_witness->second} : Json(nullptr);
    return j;
}

Json verdict_to_json(const CmVerdict& v) {
    Json j = {{"field", v.field.name()},
              {"is_cellular_resolution", v.is_cellular_resolution},
              {"is_minimal", v.is_minimal},
              {"codimension", v.codimension},
              {"projective_dimension", v.projective_dimension},
              {"is_cm", v.is_cm},
              {"codimension_cover", v.codimension_cover}};
    j["failing_multidegree"] = v.failing_multidegree ? monomial_to_json(*v.failing_multidegree) : Json(nullptr);
    j["failing_pair"] = v.failing_pair ? Json{v.failing_pair->first, v.failing_pair->second} : Json(nullptr);
    return j;
}

Json maximality_to_json(const MaximalityVerdict& v) {
    Json j = {{"maximal", v.maximal}};
    j["decomposable_member"] = v.decomposable_member ? vertex_set_to_json(*v.decomposable_member) : Json(nullptr);
    j["addable"] = v.addable ? vertex_set_to_json(*v.addable) : Json(nullptr);
    return j;
}

Json chord_row_to_json(const ChordConjectureRow& r) {
    Json chords = Json::array();
    for (auto [a, b] : r.chords) chords.push_back({a, b});
    Json families = Json::array();
    for (const VertexFamily& f : r.families) families.push_back(family_to_json(f));
    return {{"families", families},
            {"n", r.n},
            {"chords", chords},
            {"k", r.chords.size()},
            {"expected_size", r.n + static_cast<int>(r.chords.size())},
            {"maximal_families", r.maximal_families},
            {"family_sizes", r.family_sizes},
            {"consistent", r.consistent},
            {"note", r.note}};
}

Json polytope_row_to_json(const PolytopeConjectureRow& r) {
    return {{"name", r.name},
            {"f_vector", r.f_vector},
            {"symmetric", r.symmetric},
            {"valid_family_source", r.valid_family_source},
            {"admits_valid_family", r.admits_valid_family},
            {"counterexample", r.counterexample}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cmlabel

#pragma once

#include <string>

#include <json.hpp>

#include "cmlabel/cmcheck.hpp"
#include "cmlabel/complex.hpp"
#include "cmlabel/constructions.hpp"
#include "cmlabel/monomial.hpp"
#include "cmlabel/search.hpp"

namespace cmlabel {

using Json = nlohmann::json;

// Readers throw InvalidInput on malformed documents.

/// {"n_vertices": n, "cells": [{"id", "dim", "vertices", "boundary": [[cell, sign]]}]}
Json complex_to_json(const CellComplex& x);
CellComplex complex_from_json(const Json& j);

/// {"n": n, "sets": [[v, ...], ...]}
Json family_to_json(const VertexFamily& f);
VertexFamily family_from_json(const Json& j);

/// {"n_variables": r, "labels": [[exponent, ...], ...]}
Json labelling_to_json(const MonomialLabelling& l);
MonomialLabelling labelling_from_json(const Json& j);

Json monomial_to_json(const Monomial& m);
Json vertex_set_to_json(VertexSet s);
Json substitution_to_json(const Substitution& s);
Json tree_to_json(const OrientedTree& t);

Json homology_to_json(const HomologyReport& h);
Json criteria_to_json(const FamilyCriteriaReport& r);
Json verdict_to_json(const CmVerdict& v);
Json maximality_to_json(const MaximalityVerdict& v);
Json chord_row_to_json(const ChordConjectureRow& r);
Json polytope_row_to_json(const PolytopeConjectureRow& r);

/// Parse a file; throws InvalidInput when it cannot be read or parsed.
Json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace cmlabel

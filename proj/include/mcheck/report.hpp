#pragma once

#include <string>

#include <json.hpp>

#include "mcheck/cube.hpp"
#include "mcheck/lex.hpp"
#include "mcheck/triviality.hpp"

namespace mcheck {

// Witness JSON builders. All indices are 1-based on the wire; output key
// order is fixed so reports are byte-deterministic.
using Json = nlohmann::ordered_json;

Json triviality_json(const TrivialityResult& r);
Json lex_json(const LexResult& r);
Json algebra_json(const TwoElementAlgebra& a);
Json cube_simple_json(const ExtendedMatrix& m, int n_prime, const CubeSimpleResult& r);
Json cube_general_json(const CubeGeneralResult& r);

const char* lex_case_name(LexCase c);

}  // namespace mcheck

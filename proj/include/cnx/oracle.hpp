#pragma once

// Loader for the frozen reference data in tests/oracle_data.json.
//
// The JSON file is generated offline by tools/make_oracle.py through
// independent computational routes (exact symbolic expansion plus 50-digit
// numerics) and committed; the library only ever reads it. Floating-point
// values are stored as shortest-round-trip decimal strings so that parsing
// reproduces bit-identical doubles.

#include "cnx/multipoly.hpp"
#include "cnx/rational.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace cnx {

using Json = nlohmann::json;

// Absolute path of the data file; honours the CNX_DATA_DIR environment
// variable, else falls back to the compiled-in source location.
std::string oracle_path();

// Parsed file, loaded once (throws std::runtime_error when missing).
const Json& oracle_data();

// Doubles serialized as strings (or plain numbers) -> double.
double json_double(const Json& v);

// Term lists of shape [[[e0,...,ek], c], ...] -> exponent map.
std::map<ExpVec, Rational> json_poly_terms(const Json& terms);

std::vector<double> json_double_vector(const Json& v);

}  // namespace cnx

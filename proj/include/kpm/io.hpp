#pragma once

#include <string>

#include <json.hpp>

#include "kpm/adhm.hpp"
#include "kpm/lattice.hpp"

namespace kpm {

using Json = nlohmann::json;

// ADHM data file: UTF-8 JSON with fields d, alpha, beta, a, b; matrices as
// row-major nested arrays; entries "p/q" strings in lowest terms (bare
// integers also accepted).
ADHMData adhm_from_json(const Json& j);
Json adhm_to_json(const ADHMData& x);
ADHMData load_adhm(const std::string& path);
void save_adhm(const ADHMData& x, const std::string& path);

// Loop matrix file: {"matrix": 2x2 array of {exponent: "p/q"} maps}.
LoopMatrix loop_from_json(const Json& j);
Json loop_to_json(const LoopMatrix& g);
LoopMatrix load_loop(const std::string& path);
void save_loop(const LoopMatrix& g, const std::string& path);

// Square rational matrix file: {"g": nested arrays}.
ScalarMatrix matrix_from_json(const Json& j, const std::string& key);
Json matrix_to_json(const ScalarMatrix& m);
ScalarMatrix load_matrix(const std::string& path, const std::string& key);

// Comma-separated exact rationals, e.g. "1,0,-2/3".
std::array<Rat, 2> parse_pair(const std::string& s);
std::array<Rat, 3> parse_triple(const std::string& s);

// Primitive-integer normalization of a projective tuple for printing.
std::string proj_str(const std::vector<Rat>& coords);

Json load_json(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace kpm

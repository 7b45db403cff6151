#pragma once

#include <string>

#include "json.hpp"

#include "pcoact/universal.hpp"

namespace pcoact {

using Json = nlohmann::ordered_json;

// Algebra files: {"dim": n, "basis": [names], "unit": name,
//   "mul": [[i, j, k, "p/q"], ...], "bracket": [[i, j, k, "p/q"], ...]}.
// Indices are 0-based; rationals are strings. If the named unit is not the
// first basis element, the loader permutes it to index 0.
PoissonAlgebraData algebra_from_json(const Json& j);
Json algebra_to_json(const PoissonAlgebraData& a);
PoissonAlgebraData load_algebra(const std::string& path);

// Linear map files: {"source_dim": n, "target_dim": m,
//   "columns": [[m rationals] per source basis vector]}.
LinearMap linear_map_from_json(const Json& j);
Json linear_map_to_json(const LinearMap& f);
LinearMap load_linear_map(const std::string& path);

// Coaction matrix files: {"qdim": q, "columns": [[dim(U)*q rationals] per
// basis vector x_j of P]}, entry (s, t) of column j at index s*q + t giving
// the coefficient vector d_{s,j} over Q's basis.
CoactionMatrix coaction_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json coaction_to_json(const CoactionMatrix& d, std::size_t rows, std::size_t cols);

// Free Poisson elements as canonical term lists: each term is
// [coefficient, [[letters of a Lyndon word], ...]], terms in ascending
// monomial order.
Json fp_to_json(const FpElem& x);
FpElem fp_from_json(const Json& j);

std::string generator_name(const Presentation& pres, Letter g);

/// The full presentation document: generators, relations, quotient data, psi,
/// the coalgebra section when P = U, build metadata, the two input algebras
/// and a normal-form probe set for round-trip verification.
Json presentation_to_json(const Presentation& pres);

/// Rebuilds the presentation from the stored algebras and metadata, then
/// checks quotient_dims and the probe normal forms against the document.
/// Throws ParseError on any mismatch.
Presentation presentation_from_json(const Json& j, const SaturateOptions& opts = {});
Presentation load_presentation(const std::string& path, const SaturateOptions& opts = {});

Json report_to_json(const Report& rep, std::size_t D, std::size_t m);
Json validation_to_json(const ValidationReport& rep);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace pcoact

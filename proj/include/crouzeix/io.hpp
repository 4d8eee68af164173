// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crouzeix/cyclic.hpp"
#include "crouzeix/linalg.hpp"
#include "crouzeix/matrix.hpp"
#include "crouzeix/modelspace.hpp"
#include "crouzeix/ratio.hpp"

namespace crouzeix {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError.
Json load_json_file(const std::filesystem::path& path);

/// Inline JSON text when `arg` starts with '{' or '[', otherwise a file path.
Json json_argument(const std::string& arg);

// Matrix: {"n": int, "re": [[...]], "im": [[...]]}, row-major. "im" may be
// omitted for a real matrix; an optional "id" string is carried through.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& a);

/// Complex scalars are numbers or [re, im] pairs.
Complex complex_from_json(const Json& j);
Json complex_to_json(Complex z);
std::vector<Complex> complex_list_from_json(const Json& j);
Json complex_list_to_json(const std::vector<Complex>& v);
Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);

/// Coefficient list c_0..c_N.
Polynomial polynomial_from_json(const Json& j);

/// {"kind": "monomial", "n": int} or {"kind": "blaschke", "zeros": [[re, im], ...]}.
InnerFunctionSpec inner_spec_from_json(const Json& j);
/// {"kmin": int, "coeffs": [[re, im], ...]}.
TrigSymbol symbol_from_json(const Json& j);

/// {matrix_id, coeffs, norm_fA, sup_f, ratio, passes, resolution,
///  degenerate_range[, error]}.
Json report_to_json(const RatioReport& r, const std::string& matrix_id);

/// {matrix_id, f, extremal_vector, krylov_dim, norms_equal, certifies}.
Json certificate_to_json(const CyclicCertificate& c, const Polynomial& f,
                         const std::string& matrix_id);

Json similarity_to_json(const SimilarityReport& s);

}  // namespace crouzeix

// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/io.hpp"

#include <cmath>
#include <fstream>

namespace crouzeix {
namespace {

// JSON has no infinity; non-finite values are written as null.
Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::vector<std::vector<double>> read_rows(const Json& j, const char* key, int n) {
  if (!j.contains(key)) throw ParseError(std::string("matrix JSON lacks \"") + key + "\"");
  const Json& rows = j.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError(std::string("\"") + key + "\" must have n rows");
  std::vector<std::vector<double>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string("ragged or mis-sized row in \"") + key + "\"");
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) throw ParseError("matrix entries must be numbers");
      r.push_back(x.get<double>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return Json::parse(arg);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid inline JSON: ") + e.what());
    }
  }
  return load_json_file(arg);
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw ParseError("matrix JSON needs an integer \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw ParseError("matrix dimension must be at least 1");
  const auto re = read_rows(j, "re", n);
  const auto im = j.contains("im") ? read_rows(j, "im", n)
                                   : std::vector<std::vector<double>>(n, std::vector<double>(n));
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = {re[r][c], im[r][c]};
  try {
    return ComplexMatrix(std::move(m));
  } catch (const InvalidMatrix& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& a) {
  Json re = Json::array(), im = Json::array();
  for (int r = 0; r < a.n(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (int c = 0; c < a.n(); ++c) {
      rr.push_back(a(r, c).real());
      ri.push_back(a(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"n", a.n()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex value must be a number or [re, im]");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::vector<Complex> complex_list_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of complex values");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

Json complex_list_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

Vector vector_from_json(const Json& j) {
  const auto c = complex_list_from_json(j);
  if (c.empty()) throw ParseError("vector must be nonempty");
  Vector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  return v;
}

Json vector_to_json(const Vector& v) {
  return complex_list_to_json(std::vector<Complex>(v.data(), v.data() + v.size()));
}

Polynomial polynomial_from_json(const Json& j) {
  auto c = complex_list_from_json(j);
  if (c.empty()) throw ParseError("polynomial needs at least one coefficient");
  return Polynomial(std::move(c));
}

InnerFunctionSpec inner_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("inner function spec needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  try {
    if (kind == "monomial") {
      if (!j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("monomial spec needs an integer \"n\"");
      return InnerFunctionSpec::monomial(j.at("n").get<int>());
    }
    if (kind == "blaschke") {
      if (!j.contains("zeros")) throw ParseError("Blaschke spec needs \"zeros\"");
      return InnerFunctionSpec::blaschke(complex_list_from_json(j.at("zeros")));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown inner function kind \"" + kind + "\"");
}

TrigSymbol symbol_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kmin") || !j.at("kmin").is_number_integer() ||
      !j.contains("coeffs"))
    throw ParseError("symbol JSON needs \"kmin\" and \"coeffs\"");
  auto c = complex_list_from_json(j.at("coeffs"));
  if (c.empty()) throw ParseError("symbol needs at least one coefficient");
  return TrigSymbol(j.at("kmin").get<int>(), std::move(c));
}

Json report_to_json(const RatioReport& r, const std::string& matrix_id) {
  Json out{{"matrix_id", matrix_id},
           {"coeffs", complex_list_to_json(r.coeffs)},
           {"norm_fA", finite_or_null(r.norm_fA)},
           {"sup_f", finite_or_null(r.sup_f)},
           {"ratio", finite_or_null(r.ratio)},
           {"passes", r.passes},
           {"resolution", r.boundary_resolution},
           {"degenerate_range", r.degenerate_range}};
  if (r.error) out["error"] = *r.error;
  return out;
}

Json certificate_to_json(const CyclicCertificate& c, const Polynomial& f,
                         const std::string& matrix_id) {
  return Json{{"matrix_id", matrix_id},
              {"f", complex_list_to_json(f.coeffs())},
              {"extremal_vector", vector_to_json(c.extremal_vector)},
              {"krylov_dim", c.krylov_dim},
              {"norms_equal", c.norms_equal},
              {"certifies", c.certifies}};
}

Json similarity_to_json(const SimilarityReport& s) {
  return Json{{"diagonalizable", s.diagonalizable},
              {"kappa", finite_or_null(s.kappa)},
              {"certifies", s.certifies}};
}

}  // namespace crouzeix

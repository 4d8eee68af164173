// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include <gtest/gtest.h>

#include "crouzeix/crouzeix.hpp"
#include "crouzeix/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace crouzeix;
using fixtures::kI;
using fixtures::mat;

TEST(MatrixJson, RoundTrip) {
  oracle::Rng rng(41);
  for (int n : {1, 2, 5}) {
    const auto a = oracle::random_matrix(n, rng);
    const auto j = matrix_to_json(a);
    EXPECT_EQ(j.at("n").get<int>(), n);
    // Through text and back, bit-exact.
    EXPECT_EQ(matrix_from_json(Json::parse(j.dump())).mat(), a.mat());
  }
}

TEST(MatrixJson, LayoutIsRowMajor) {
  const auto a = matrix_from_json(Json::parse(R"({"n": 2, "re": [[1, 2], [3, 4]], "im": [[0, -1], [0, 0]]})"));
  EXPECT_EQ(a.mat(), mat({{1.0, 2.0 - kI}, {3.0, 4.0}}));
}

TEST(MatrixJson, ImaginaryPartOptional) {
  const auto a = matrix_from_json(Json::parse(R"({"n": 2, "re": [[0, 1], [0, 0]], "id": "j2"})"));
  EXPECT_EQ(a.mat(), mat({{0, 1}, {0, 0}}));
}

TEST(MatrixJson, Rejections) {
  for (const char* text : {
           R"({"re": [[1]]})",
           R"({"n": 0, "re": []})",
           R"({"n": 1.5, "re": [[1]]})",
           R"({"n": 2, "re": [[1, 2], [3]]})",
           R"({"n": 2, "re": [[1, 2]]})",
           R"({"n": 2, "re": [[1, 2], [3, 4]], "im": [[0, 0, 0], [0, 0]]})",
           R"({"n": 1, "re": [["x"]]})",
           R"([1, 2])",
       })
    EXPECT_THROW(matrix_from_json(Json::parse(text)), ParseError) << text;
}

TEST(JsonArgument, InlineAndFile) {
  EXPECT_EQ(json_argument(R"({"a": 1})").at("a").get<int>(), 1);
  EXPECT_TRUE(json_argument("[1, 2]").is_array());
  EXPECT_THROW(json_argument("{not json"), ParseError);
  EXPECT_THROW(json_argument("/nonexistent/path/matrix.json"), ParseError);

  const auto path = std::filesystem::temp_directory_path() / "crouzeix_io_test.json";
  {
    std::ofstream f(path);
    f << R"({"n": 1, "re": [[7]]})";
  }
  EXPECT_EQ(matrix_from_json(json_argument(path.string()))(0, 0), Complex(7.0));
  {
    std::ofstream f(path);
    f << "{\"n\": 1,";
  }
  EXPECT_THROW(load_json_file(path), ParseError);
  std::filesystem::remove(path);
}

TEST(ComplexJson, Forms) {
  EXPECT_EQ(complex_from_json(Json(2.5)), Complex(2.5));
  EXPECT_EQ(complex_from_json(Json::parse("[1, -2]")), Complex(1.0, -2.0));
  EXPECT_THROW(complex_from_json(Json::parse("[1, 2, 3]")), ParseError);
  EXPECT_THROW(complex_from_json(Json("a")), ParseError);
  const std::vector<Complex> v{1.0, kI, Complex(-3.0, 0.5)};
  EXPECT_EQ(complex_list_from_json(complex_list_to_json(v)), v);
  EXPECT_THROW(complex_list_from_json(Json(1)), ParseError);
  EXPECT_THROW(vector_from_json(Json::array()), ParseError);
}

TEST(PolynomialJson, Forms) {
  const auto p = polynomial_from_json(Json::parse("[0, [0, 1], 2]"));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeffs()[1], kI);
  EXPECT_THROW(polynomial_from_json(Json::array()), ParseError);
}

TEST(InnerSpecJson, Forms) {
  EXPECT_EQ(inner_spec_from_json(Json::parse(R"({"kind": "monomial", "n": 3})")).dim(), 3);
  const auto b = inner_spec_from_json(Json::parse(R"({"kind": "blaschke", "zeros": [[0.1, 0], [0, 0.2]]})"));
  EXPECT_EQ(b.kind(), InnerFunctionSpec::Kind::Blaschke);
  EXPECT_EQ(b.zeros()[1], Complex(0.0, 0.2));
  for (const char* text : {R"({"n": 3})", R"({"kind": "monomial"})", R"({"kind": "monomial", "n": 0})",
                           R"({"kind": "blaschke"})", R"({"kind": "blaschke", "zeros": [[2, 0]]})",
                           R"({"kind": "outer", "n": 2})"})
    EXPECT_THROW(inner_spec_from_json(Json::parse(text)), ParseError) << text;
}

TEST(SymbolJson, Forms) {
  const auto g = symbol_from_json(Json::parse(R"({"kmin": -1, "coeffs": [1, 0, [0, 1]]})"));
  EXPECT_EQ(g.kmin(), -1);
  EXPECT_EQ(g.coefficient(1), kI);
  EXPECT_THROW(symbol_from_json(Json::parse(R"({"coeffs": [1]})")), ParseError);
  EXPECT_THROW(symbol_from_json(Json::parse(R"({"kmin": 0, "coeffs": []})")), ParseError);
}

TEST(ReportJson, Fields) {
  RatioReport r;
  r.coeffs = {0.0, 1.0};
  r.norm_fA = 1.0;
  r.sup_f = 0.5;
  r.ratio = 2.0;
  r.passes = true;
  r.boundary_resolution = 512;
  const auto j = report_to_json(r, "j2");
  EXPECT_EQ(j.at("matrix_id"), "j2");
  EXPECT_EQ(j.at("ratio").get<double>(), 2.0);
  EXPECT_EQ(j.at("resolution").get<int>(), 512);
  EXPECT_FALSE(j.contains("error"));

  r.ratio = std::numeric_limits<double>::infinity();
  r.error = "degenerate";
  const auto e = report_to_json(r, "x");
  EXPECT_TRUE(e.at("ratio").is_null());
  EXPECT_EQ(e.at("error"), "degenerate");
  // Non-finite values never leak into the text.
  EXPECT_EQ(e.dump().find("inf"), std::string::npos);
}

TEST(CertificateJson, Fields) {
  const auto cert = maincor_certificate(jordan_nilpotent(3), Polynomial::monomial(2));
  const auto j = certificate_to_json(cert, Polynomial::monomial(2), "j3");
  EXPECT_EQ(j.at("krylov_dim").get<int>(), 3);
  EXPECT_FALSE(j.at("certifies").get<bool>());
  EXPECT_EQ(j.at("extremal_vector").size(), 3u);
  EXPECT_EQ(j.at("f").size(), 3u);
}

// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "crouzeix/classes.hpp"
#include "crouzeix/crouzeix.hpp"
#include "crouzeix/io.hpp"

namespace crouzeix::cli {
namespace {

constexpr int kDefaultBudget = 200;
constexpr int kModelSamples = 4;

struct MatrixSource {
  Json value;
  std::string id_hint;
};

struct NamedMatrix {
  std::string id;
  ComplexMatrix a;
};

struct RunConfig {
  std::vector<MatrixSource> matrices;
  std::optional<Json> suite;  // "random:k:deg:seed", a path, or a coefficient-list array
  int resolution = kDefaultResolution;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
  int degree = 0;  // 0: max(1, n - 1)
  int budget = kDefaultBudget;
  std::optional<Json> extremal;
};

MatrixSource source_from_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  const bool inline_json = first != std::string::npos && (text[first] == '{' || text[first] == '[');
  return {json_argument(text),
          inline_json ? std::string("inline") : std::filesystem::path(text).stem().string()};
}

MatrixSource source_from_json(const Json& j) {
  if (j.is_string()) return source_from_text(j.get<std::string>());
  return {j, "config"};
}

std::vector<NamedMatrix> load_matrices(const std::vector<MatrixSource>& sources) {
  if (sources.empty()) throw ParseError("no input matrix given (use --matrix)");
  std::vector<NamedMatrix> out;
  auto add = [&out](const Json& j, std::string fallback) {
    std::string id = std::move(fallback);
    if (j.is_object() && j.contains("id") && j.at("id").is_string()) id = j.at("id").get<std::string>();
    out.push_back({std::move(id), matrix_from_json(j)});
  };
  for (const auto& s : sources) {
    if (s.value.is_array()) {
      if (s.value.empty()) throw ParseError("empty matrix list in " + s.id_hint);
      for (std::size_t k = 0; k < s.value.size(); ++k)
        add(s.value[k], s.id_hint + "#" + std::to_string(k));
    } else {
      add(s.value, s.id_hint);
    }
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(std::string("invalid ") + what + " \"" + std::string(s) + "\"");
  return v;
}

std::vector<Polynomial> random_suite(int count, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = {normal(rng), normal(rng)};
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<Polynomial> suite_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("suite must be a nonempty list of coefficient lists");
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p));
  return out;
}

// "random:k:deg:seed", inline JSON, or a path to a JSON list.
std::vector<Polynomial> load_suite(const std::optional<Json>& spec, std::uint64_t seed) {
  if (!spec) {
    std::vector<Polynomial> out{Polynomial::monomial(1), Polynomial::monomial(2),
                                Polynomial::monomial(3)};
    for (auto& p : random_suite(8, 3, seed)) out.push_back(std::move(p));
    return out;
  }
  if (!spec->is_string()) return suite_from_json(*spec);
  const auto text = spec->get<std::string>();
  if (text.rfind("random:", 0) != 0) return suite_from_json(json_argument(text));

  std::vector<std::string_view> parts;
  std::string_view rest(text);
  rest.remove_prefix(7);
  for (std::size_t pos; (pos = rest.find(':')) != std::string_view::npos;) {
    parts.push_back(rest.substr(0, pos));
    rest.remove_prefix(pos + 1);
  }
  parts.push_back(rest);
  if (parts.size() != 3) throw ParseError("random suite must be random:k:deg:seed");
  const auto k = parse_u64(parts[0], "suite size");
  const auto deg = parse_u64(parts[1], "suite degree");
  if (k < 1 || k > 100000) throw ParseError("random suite size must be in [1, 100000]");
  if (deg > 64) throw ParseError("random suite degree must be at most 64");
  return random_suite(static_cast<int>(k), static_cast<int>(deg), parse_u64(parts[2], "suite seed"));
}

Complex complex_argument(const std::string& text) {
  try {
    return complex_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ParseError("invalid complex value \"" + text + "\"");
  }
}

void apply_config(RunConfig& cfg, const std::string& path) {
  const Json j = load_json_file(path);
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  auto get_int = [&j](const char* key, int lo) {
    if (!j.at(key).is_number_integer() || j.at(key).get<long long>() < lo)
      throw ParseError(std::string("config \"") + key + "\" must be an integer >= " + std::to_string(lo));
    return j.at(key).get<int>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "matrix") {
      cfg.matrices.clear();
      if (value.is_array() && !value.empty() && value[0].is_string()) {
        for (const auto& s : value) cfg.matrices.push_back(source_from_json(s));
      } else {
        cfg.matrices.push_back(source_from_json(value));
      }
    } else if (key == "suite") {
      cfg.suite = value;
    } else if (key == "resolution") {
      cfg.resolution = get_int("resolution", kMinResolution);
    } else if (key == "out") {
      if (!value.is_string()) throw ParseError("config \"out\" must be a string");
      cfg.out = value.get<std::string>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ParseError("config \"seed\" must be a nonnegative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "degree") {
      cfg.degree = get_int("degree", 1);
    } else if (key == "budget") {
      cfg.budget = get_int("budget", 1);
    } else if (key == "extremal") {
      cfg.extremal = value.is_string() ? json_argument(value.get<std::string>()) : value;
    } else {
      throw ParseError("unknown config key \"" + key + "\"");
    }
  }
}

// Runs fn on every item on a small thread pool; results keep input order and
// the first failure (in input order) is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(items.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::vector<R> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

enum class Outcome { Pass, Fail, Error };

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::Fail || b == Outcome::Fail) return Outcome::Fail;
  if (a == Outcome::Error || b == Outcome::Error) return Outcome::Error;
  return Outcome::Pass;
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Pass: return kExitPass;
    case Outcome::Fail: return kExitFail;
    case Outcome::Error: return kExitError;
  }
  return kExitError;
}

// A failing report is re-evaluated at 2m and 4m before it counts.
SuiteReport checked_suite(const ComplexMatrix& a, const std::vector<Polynomial>& suite, int m) {
  auto rep = conjecture_check(a, suite, m);
  rep.all_pass = true;
  for (std::size_t i = 0; i < rep.reports.size(); ++i) {
    auto& r = rep.reports[i];
    if (!r.passes && !r.error) r = crouzeix_ratio_confirmed(a, suite[i], m);
    rep.all_pass = rep.all_pass && r.passes;
  }
  return rep;
}

Outcome suite_outcome(const SuiteReport& s) {
  Outcome o = Outcome::Pass;
  for (const auto& r : s.reports) {
    if (r.error) o = combine(o, Outcome::Error);
    else if (!r.passes) o = combine(o, Outcome::Fail);
  }
  return o;
}

Json suite_json(const SuiteReport& s, const std::string& id) {
  Json arr = Json::array();
  for (const auto& r : s.reports) arr.push_back(report_to_json(r, id));
  return arr;
}

int search_degree(const RunConfig& cfg, const ComplexMatrix& a) {
  return cfg.degree > 0 ? cfg.degree : std::max(1, a.n() - 1);
}

struct CheckResult {
  Json json;
  Outcome outcome;
};

CheckResult check_one(const NamedMatrix& m, const std::vector<Polynomial>& suite, int res) {
  const auto rep = checked_suite(m.a, suite, res);
  return {suite_json(rep, m.id), suite_outcome(rep)};
}

CheckResult search_one(const NamedMatrix& m, const RunConfig& cfg) {
  const int degree = search_degree(cfg, m.a);
  auto found = ratio_maximize(m.a, degree, cfg.budget, cfg.seed, cfg.resolution);
  if (!found.report.passes) found.report = crouzeix_ratio_confirmed(m.a, found.best, cfg.resolution);
  Json j{{"matrix_id", m.id},
         {"degree", degree},
         {"budget", cfg.budget},
         {"seed", cfg.seed},
         {"polynomial", complex_list_to_json(found.best.coeffs())},
         {"report", report_to_json(found.report, m.id)}};
  return {std::move(j), found.report.passes ? Outcome::Pass : Outcome::Fail};
}

// Candidate extremal functions: the given one, or the monomials z..z^d and the
// search result, keeping those within 1e-6 (relative) of the best ratio.
std::vector<std::pair<Polynomial, double>> extremal_candidates(const NamedMatrix& m,
                                                               const NumericalRangeBoundary& b,
                                                               const RunConfig& cfg) {
  auto ratio_or_skip = [&b](const Polynomial& p) -> std::optional<double> {
    try {
      return crouzeix_ratio(b, p).ratio;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  std::vector<std::pair<Polynomial, double>> all;
  if (cfg.extremal) {
    const auto p = polynomial_from_json(*cfg.extremal);
    return {{p, crouzeix_ratio(b, p).ratio}};
  }
  const int degree = search_degree(cfg, m.a);
  for (int k = 1; k <= degree; ++k) {
    const auto p = Polynomial::monomial(k);
    if (auto r = ratio_or_skip(p); r && *r > 0.0) all.emplace_back(p, *r);
  }
  auto found = ratio_maximize(m.a, degree, cfg.budget, cfg.seed, cfg.resolution);
  all.emplace_back(found.best, found.report.ratio);

  double best = 0.0;
  for (const auto& c : all) best = std::max(best, c.second);
  std::vector<std::pair<Polynomial, double>> out;
  for (auto& c : all)
    if (c.second >= best - 1e-6 * std::max(1.0, best)) out.push_back(std::move(c));
  return out;
}

Json model_json(const ComplexMatrix& a, const Polynomial& f, std::uint64_t seed) {
  Vector v;
  try {
    v = find_cyclic_vector(a.adjoint(), seed);
  } catch (const NotCyclic&) {
    return nullptr;
  }
  try {
    const auto r = model_norm_check(a, v, f, kModelSamples, seed);
    return Json{{"max_discrepancy", r.max_discrepancy},
                {"model_operator_norm", r.model_operator_norm},
                {"matrix_operator_norm", r.matrix_operator_norm},
                {"gram_rank", r.gram_rank},
                {"gram_condition", r.gram_condition}};
  } catch (const Error& e) {
    return Json{{"error", e.what()}};
  }
}

CheckResult certify_one(const NamedMatrix& m, const std::vector<Polynomial>& suite,
                        const RunConfig& cfg) {
  const auto b = boundary(m.a, cfg.resolution);
  Json j{{"matrix_id", m.id}};

  const auto sim = eigen_similarity_check(m.a);
  j["similarity"] = similarity_to_json(sim);

  const auto candidates = extremal_candidates(m, b, cfg);
  std::optional<CyclicCertificate> cert;
  const Polynomial* f = &candidates.front().first;
  double f_ratio = candidates.front().second;
  std::string cyclic_error;
  for (const auto& [p, r] : candidates) {
    try {
      auto c = maincor_certificate(m.a, p, cfg.resolution);
      if (!cert || (c.certifies && !cert->certifies)) {
        cert = std::move(c);
        f = &p;
        f_ratio = r;
      }
      if (cert->certifies) break;
    } catch (const std::exception& e) {
      cyclic_error = e.what();
    }
  }
  j["extremal"] = Json{{"f", complex_list_to_json(f->coeffs())}, {"ratio", f_ratio}};
  j["cyclic"] = cert ? certificate_to_json(*cert, *f, m.id) : Json{{"error", cyclic_error}};
  j["model"] = model_json(m.a, *f, cfg.seed);

  Outcome outcome = Outcome::Pass;
  if (sim.certifies) {
    j["certified_by"] = "similarity";
  } else if (cert && cert->certifies) {
    j["certified_by"] = "cyclic";
  } else {
    const auto rep = checked_suite(m.a, suite, cfg.resolution);
    outcome = suite_outcome(rep);
    j["fallback"] = suite_json(rep, m.id);
    j["certified_by"] = outcome == Outcome::Pass ? Json("ratio-suite") : Json(nullptr);
  }
  j["passes"] = outcome == Outcome::Pass;
  return {std::move(j), outcome};
}

Outcome collect(const std::vector<CheckResult>& results, Json& out, bool flatten) {
  Outcome o = Outcome::Pass;
  out = Json::array();
  for (const auto& r : results) {
    o = combine(o, r.outcome);
    if (flatten) {
      for (const auto& x : r.json) out.push_back(x);
    } else {
      out.push_back(r.json);
    }
  }
  return o;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + *cfg.out);
  f << text;
  if (!f) throw ParseError("write failed for " + *cfg.out);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

struct GenerateArgs {
  int n = 0, i = 0, j = 0;
  double t = 0.0;
  std::string u, v, space, symbol, mu = "1", lambda = "0", d = "0";
  std::vector<std::string> normal;
};

Json generated(const std::string& id, const ComplexMatrix& a) {
  Json j = matrix_to_json(a);
  j["id"] = id;
  return j;
}

ComplexMatrix single_matrix(const RunConfig& cfg) {
  auto ms = load_matrices(cfg.matrices);
  if (ms.size() != 1) throw ParseError("this command takes exactly one matrix");
  return std::move(ms.front().a);
}

TrigSymbol symbol_argument(const std::string& text) {
  const Json j = json_argument(text);
  if (j.is_array()) return TrigSymbol(0, complex_list_from_json(j));
  return symbol_from_json(j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of the bound |f(A)| <= 2 sup_{W(A)} |f|", "crouzeix"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> matrix_args;
  std::string suite_arg, config_path, extremal_arg, out_arg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--matrix", matrix_args, "Matrix JSON file or inline JSON (repeatable)");
    sub->add_option("--resolution", cfg.resolution, "Boundary resolution m")
        ->check(CLI::Range(kMinResolution, 1 << 22));
    sub->add_option("--out", out_arg, "Output file (default: stdout)");
    sub->add_option("--config", config_path, "JSON config; its keys override flags");
  };

  auto* check = app.add_subcommand("check", "Crouzeix ratios over a polynomial suite");
  common(check);
  check->add_option("--suite", suite_arg, "Suite file, inline JSON, or random:k:deg:seed");
  check->add_option("--seed", cfg.seed, "Seed for the default random suite");

  auto* bnd = app.add_subcommand("boundary", "CSV samples of the numerical range boundary");
  common(bnd);

  auto* certify = app.add_subcommand("certify", "Structural certificates with a ratio-suite fallback");
  common(certify);
  certify->add_option("--suite", suite_arg, "Fallback suite");
  certify->add_option("--seed", cfg.seed, "Seed for search and random choices");
  certify->add_option("--degree", cfg.degree, "Search degree (default n - 1)")->check(CLI::PositiveNumber);
  certify->add_option("--budget", cfg.budget, "Evaluations per search start")->check(CLI::PositiveNumber);
  certify->add_option("--extremal", extremal_arg, "Extremal polynomial coefficients (JSON)");

  auto* search = app.add_subcommand("search", "Multi-start search for the largest ratio");
  common(search);
  search->add_option("--seed", cfg.seed, "Search seed");
  search->add_option("--degree", cfg.degree, "Polynomial degree (default n - 1)")->check(CLI::PositiveNumber);
  search->add_option("--budget", cfg.budget, "Evaluations per start")->check(CLI::PositiveNumber);

  GenerateArgs g;
  auto* gen = app.add_subcommand("generate", "Emit a constructed matrix as JSON");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("--out", out_arg, "Output file (default: stdout)");
  auto* g_jordan = gen->add_subcommand("jordan", "Nilpotent Jordan block J_n");
  g_jordan->add_option("n", g.n)->required()->check(CLI::Range(1, 4096));
  auto* g_example = gen->add_subcommand("paper-example", "3x3 nilpotent with superdiagonal (1, 1 - t)");
  g_example->add_option("t", g.t)->required();
  auto* g_sum = gen->add_subcommand("direct-sum", "Block-diagonal sum of the --matrix inputs");
  g_sum->add_option("--matrix", matrix_args)->required();
  auto* g_kron = gen->add_subcommand("kron-normal", "N (x) A for a normal N");
  g_kron->add_option("--normal", g.normal)->required();
  g_kron->add_option("--matrix", matrix_args)->required();
  auto* g_rank = gen->add_subcommand("rank-one", "u v*");
  g_rank->add_option("--u", g.u)->required();
  g_rank->add_option("--v", g.v)->required();
  auto* g_tto = gen->add_subcommand("tto", "Truncated Toeplitz operator on a model space");
  g_tto->add_option("--space", g.space)->required();
  g_tto->add_option("--symbol", g.symbol)->required();
  auto* g_shift = gen->add_subcommand("shift", "Compressed shift on a model space");
  g_shift->add_option("--space", g.space)->required();
  auto* g_basis = gen->add_subcommand("basis", "Matrix unit e_ij (1-based)");
  g_basis->add_option("i", g.i)->required();
  g_basis->add_option("j", g.j)->required();
  g_basis->add_option("n", g.n)->required()->check(CLI::Range(1, 4096));
  auto* g_affine = gen->add_subcommand("affine", "mu A + lambda I");
  g_affine->add_option("--matrix", matrix_args)->required();
  g_affine->add_option("--mu", g.mu);
  g_affine->add_option("--lambda", g.lambda);
  auto* g_border = gen->add_subcommand("border", "A (+) [d]");
  g_border->add_option("--matrix", matrix_args)->required();
  g_border->add_option("--d", g.d)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    for (const auto& m : matrix_args) cfg.matrices.push_back(source_from_text(m));
    if (!suite_arg.empty()) cfg.suite = Json(suite_arg);
    if (!extremal_arg.empty()) cfg.extremal = json_argument(extremal_arg);
    if (!out_arg.empty()) cfg.out = out_arg;
    if (!config_path.empty()) apply_config(cfg, config_path);
    if (cfg.resolution < kMinResolution) throw ParseError("resolution must be at least 16");

    if (check->parsed()) {
      const auto matrices = load_matrices(cfg.matrices);
      const auto suite = load_suite(cfg.suite, cfg.seed);
      const auto results = parallel_map(
          matrices, [&](const NamedMatrix& m) { return check_one(m, suite, cfg.resolution); });
      Json j;
      const auto o = collect(results, j, true);
      emit(cfg, out, json_text(j));
      return exit_code(o);
    }
    if (bnd->parsed()) {
      const auto b = boundary(single_matrix(cfg), cfg.resolution);
      std::ostringstream csv;
      write_boundary_csv(csv, b);
      emit(cfg, out, csv.str());
      return kExitPass;
    }
    if (certify->parsed()) {
      const auto matrices = load_matrices(cfg.matrices);
      const auto suite = load_suite(cfg.suite, cfg.seed);
      const auto results = parallel_map(
          matrices, [&](const NamedMatrix& m) { return certify_one(m, suite, cfg); });
      Json j;
      const auto o = collect(results, j, false);
      emit(cfg, out, json_text(j));
      return exit_code(o);
    }
    if (search->parsed()) {
      const auto matrices = load_matrices(cfg.matrices);
      const auto results =
          parallel_map(matrices, [&](const NamedMatrix& m) { return search_one(m, cfg); });
      Json j;
      const auto o = collect(results, j, false);
      emit(cfg, out, json_text(j));
      return exit_code(o);
    }

    Json j;
    if (g_jordan->parsed()) {
      j = generated("jordan-" + std::to_string(g.n), jordan_nilpotent(g.n));
    } else if (g_example->parsed()) {
      if (!paper_example_in_window(g.t))
        err << "warning: t is outside [1 - 1/sqrt(3), sqrt(3) - 1]\n";
      j = generated("paper-example", paper_example(g.t));
    } else if (g_sum->parsed()) {
      std::vector<ComplexMatrix> blocks;
      for (auto& m : load_matrices(cfg.matrices)) blocks.push_back(std::move(m.a));
      j = generated("direct-sum", direct_sum(blocks));
    } else if (g_kron->parsed()) {
      std::vector<MatrixSource> ns;
      for (const auto& s : g.normal) ns.push_back(source_from_text(s));
      auto nm = load_matrices(ns);
      if (nm.size() != 1) throw ParseError("kron-normal takes exactly one --normal matrix");
      if (!is_normal(nm.front().a)) throw NotNormal("--normal matrix is not normal");
      j = generated("kron-normal", kronecker(nm.front().a, single_matrix(cfg)));
    } else if (g_rank->parsed()) {
      const RankOneSpec spec{vector_from_json(json_argument(g.u)), vector_from_json(json_argument(g.v))};
      if (spec.u.size() != spec.v.size()) throw ParseError("u and v must have the same length");
      j = generated("rank-one", ComplexMatrix(spec.matrix()));
    } else if (g_tto->parsed()) {
      const ModelSpaceBasis basis(inner_spec_from_json(json_argument(g.space)));
      j = generated("tto", tto_trig(symbol_argument(g.symbol), basis));
    } else if (g_shift->parsed()) {
      const ModelSpaceBasis basis(inner_spec_from_json(json_argument(g.space)));
      j = generated("shift", compressed_shift(basis));
    } else if (g_basis->parsed()) {
      j = generated("basis", basis_matrix(g.i, g.j, g.n));
    } else if (g_affine->parsed()) {
      j = generated("affine", affine_transform(single_matrix(cfg), complex_argument(g.mu),
                                               complex_argument(g.lambda)));
    } else if (g_border->parsed()) {
      const auto aug = border_augment(single_matrix(cfg), complex_argument(g.d));
      j = generated("border", aug.matrix);
      j["d_in_range"] = aug.d_in_range;
    }
    emit(cfg, out, json_text(j));
    return kExitPass;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace crouzeix::cli

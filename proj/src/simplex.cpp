// SPDX-License-Identifier: Apache-2.0
#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

namespace crouzeix::detail {
namespace {

constexpr double kHuge = 1e300;

struct Context {
  const Objective* f;
  int evaluations = 0;
  std::vector<double> best_x{};
  double best_value = std::numeric_limits<double>::infinity();
};

double trampoline(const gsl_vector* v, void* params) {
  auto* ctx = static_cast<Context*>(params);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  double value = (*ctx->f)(x);
  ++ctx->evaluations;
  if (!std::isfinite(value)) value = kHuge;
  if (value < ctx->best_value) {
    ctx->best_value = value;
    ctx->best_x = std::move(x);
  }
  return value;
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* s) const { gsl_multimin_fminimizer_free(s); }
};

using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;
using MinimizerPtr = std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter>;

VectorPtr make_vector(std::span<const double> values) {
  VectorPtr v(gsl_vector_alloc(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) gsl_vector_set(v.get(), i, values[i]);
  return v;
}

}  // namespace

SimplexResult minimize_simplex(const Objective& f, std::vector<double> x0,
                               std::vector<double> steps, int max_evals, double size_tol) {
  static std::once_flag handler_once;
  std::call_once(handler_once, [] { gsl_set_error_handler_off(); });

  Context ctx{.f = &f};
  if (x0.empty()) {
    ctx.best_value = f(x0);
    return {x0, ctx.best_value, 1};
  }

  const std::size_t dim = x0.size();
  gsl_multimin_function fn{&trampoline, dim, &ctx};
  MinimizerPtr s(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));

  std::vector<double> start = std::move(x0);
  double previous_best = std::numeric_limits<double>::infinity();
  while (ctx.evaluations < max_evals) {
    auto x = make_vector(start);
    auto ss = make_vector(steps);
    if (gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), ss.get()) != GSL_SUCCESS) break;
    while (ctx.evaluations < max_evals) {
      if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
      if (gsl_multimin_fminimizer_size(s.get()) < size_tol) break;
    }
    // Restart only while it keeps paying off.
    if (!(ctx.best_value < previous_best - 1e-15 * std::abs(previous_best))) break;
    previous_best = ctx.best_value;
    start = ctx.best_x;
    for (auto& st : steps) st = std::max(st * 0.5, 100 * size_tol);
  }
  return {ctx.best_x, ctx.best_value, ctx.evaluations};
}

}  // namespace crouzeix::detail

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>

#include "crouzeix/matrix.hpp"

namespace fixtures {

using crouzeix::Complex;
using crouzeix::ComplexMatrix;
using crouzeix::Matrix;
using crouzeix::Vector;

inline const Complex kI(0.0, 1.0);

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline ComplexMatrix diag(std::initializer_list<Complex> d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  int i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return ComplexMatrix(m);
}

inline Vector vec(std::initializer_list<Complex> v) {
  Vector out(v.size());
  int i = 0;
  for (const auto& x : v) out(i++) = x;
  return out;
}

inline Vector unit(int n, int k) { return Vector::Unit(n, k); }

}  // namespace fixtures

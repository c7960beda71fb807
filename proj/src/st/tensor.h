// Copyright 2026 The selftrain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef ST_TENSOR_H_
#define ST_TENSOR_H_

#include <cmath>
#include <cstddef>
#include <vector>

#include "st/error.h"

namespace st {

// Dense row-major matrix. The model code is hand-rolled scalar loops; this
// is only storage plus the few helpers those loops share.
template <typename T>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(int r, int c, T fill = T(0))
      : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

  T* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const T* row(int r) const {
    return data.data() + static_cast<size_t>(r) * cols;
  }
  T& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  T at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  bool empty() const { return rows == 0 || cols == 0; }
};

using Mat = Matrix<double>;
using FloatMat = Matrix<float>;

using Vec = std::vector<double>;

inline double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

inline void axpy(double alpha, const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

inline bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// In-place log-softmax with max subtraction.
inline void log_softmax(double* x, int n) {
  double mx = x[0];
  for (int i = 1; i < n; ++i) mx = std::max(mx, x[i]);
  double z = 0.0;
  for (int i = 0; i < n; ++i) z += std::exp(x[i] - mx);
  const double logz = mx + std::log(z);
  for (int i = 0; i < n; ++i) x[i] -= logz;
}

inline int argmax(const double* x, int n) {
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (x[i] > x[best]) best = i;
  }
  return best;
}

}  // namespace st

#endif  // ST_TENSOR_H_

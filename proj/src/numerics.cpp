// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The lfbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lfbf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lfbf {

double CVector::squared_norm() const {
  double acc = 0.0;
  for (const auto& z : entries_) acc += std::norm(z);
  return acc;
}

double CVector::norm() const { return std::sqrt(squared_norm()); }

CVector CVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ZeroChannel("cannot normalize a zero vector");
  CVector out = *this;
  out *= Complex(1.0 / n);
  return out;
}

CVector& CVector::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

CVector& CVector::operator+=(const CVector& other) {
  if (other.dim() != dim()) throw ShapeMismatch("vector add: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  if (other.dim() != dim()) throw ShapeMismatch("vector subtract: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

CVector operator*(Complex s, CVector v) { return v *= s; }
CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }

Complex inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("inner product: dimension mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::outer(const CVector& u, const CVector& v) {
  CMatrix m(u.dim(), v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

CMatrix CMatrix::from_conjugate_rows(std::span<const CVector> rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().dim();
  CMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw ShapeMismatch("stacked rows differ in dimension");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::conj(rows[r][c]);
  }
  return m;
}

CVector CMatrix::column(std::size_t c) const {
  CVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

CVector CMatrix::row(std::size_t r) const {
  CVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

double CMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& z : entries_) acc += std::norm(z);
  return std::sqrt(acc);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw ShapeMismatch("matrix add: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw ShapeMismatch("matrix subtract: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product: inner dimensions differ");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += aik * b(k, c);
    }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& x) {
  if (a.cols() != x.dim()) throw ShapeMismatch("matrix-vector product: dimension mismatch");
  CVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix hermitian(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

CMatrix gram(const CMatrix& a) {
  const std::size_t n = a.cols();
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex acc{};
      for (std::size_t r = 0; r < a.rows(); ++r) acc += std::conj(a(r, i)) * a(r, j);
      g(i, j) = acc;
      g(j, i) = std::conj(acc);
    }
  for (std::size_t i = 0; i < n; ++i) g(i, i) = g(i, i).real();
  return g;
}

namespace {

double norm_1(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) col += std::abs(a(r, c));
    best = std::max(best, col);
  }
  return best;
}

CMatrix gauss_jordan(const CMatrix& a, double min_pivot) {
  if (!a.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    const double magnitude = std::abs(work(pivot, col));
    if (!(magnitude >= min_pivot))
      throw SingularMatrix("pivot magnitude " + std::to_string(magnitude) + " in column " +
                           std::to_string(col));
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const Complex scale = 1.0 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace

CMatrix mat_inverse(const CMatrix& a, const InverseOptions& options) {
  CMatrix inv = gauss_jordan(a, options.min_pivot);
  const double cond = norm_1(a) * norm_1(inv);
  if (!(cond <= options.max_condition))
    throw SingularMatrix("condition estimate " + std::to_string(cond) + " exceeds limit");
  return inv;
}

double condition_1(const CMatrix& a) {
  return norm_1(a) * norm_1(gauss_jordan(a, 0.0));
}

void fix_phase(CVector& v, double threshold) {
  const double threshold2 = threshold * threshold;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag2 = std::norm(v[i]);
    if (mag2 > threshold2) {
      const double mag = std::sqrt(mag2);
      v *= std::conj(v[i]) / mag;
      v[i] = mag;
      return;
    }
  }
}

namespace {

EigenPair finish(const CMatrix& a, CVector v) {
  fix_phase(v);
  const double value = (a * v).squared_norm();
  return {std::move(v), value};
}

CVector start_vector(std::size_t n, std::size_t hot, double eps) {
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (i == hot) ? 1.0 : eps;
  return v.normalized();
}

}  // namespace

EigenPair dominant_right_eigvec(const CMatrix& a, const PowerIterationOptions& options) {
  const std::size_t n = a.cols();
  if (n == 0) throw ShapeMismatch("dominant eigenvector of an empty matrix");
  const CMatrix g = gram(a);
  const auto entries = g.entries();
  if (std::all_of(entries.begin(), entries.end(), [](Complex z) { return z == Complex{}; }))
    return finish(a, start_vector(n, 0, options.start_perturbation));

  // A start inside null(A^H A) is only possible for structured inputs; rotate
  // the hot coordinate until the first product is nonzero.
  CVector v;
  CVector next;
  for (std::size_t hot = 0; hot < n; ++hot) {
    v = start_vector(n, hot, options.start_perturbation);
    next = g * v;
    if (next.squared_norm() > 0.0) break;
  }
  fix_phase(v);

  for (int it = 0; it < options.max_iterations; ++it) {
    const double len = next.norm();
    if (len == 0.0) return finish(a, std::move(v));
    next *= Complex(1.0 / len);
    fix_phase(next);
    double change2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) change2 += std::norm(next[i] - v[i]);
    v = next;
    if (change2 < options.tolerance * options.tolerance) return finish(a, std::move(v));
    next = g * v;
  }
  throw NoConvergence("power iteration exceeded " + std::to_string(options.max_iterations) +
                          " iterations",
                      finish(a, std::move(v)));
}

EigenPair hermitian_eig2_max(const CMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw ShapeMismatch("closed-form eigensolve needs 2x2");
  const double a = g(0, 0).real();
  const double d = g(1, 1).real();
  const Complex b = g(0, 1);
  const double half_gap = 0.5 * (a - d);
  const double lambda = 0.5 * (a + d) + std::hypot(half_gap, std::abs(b));
  CVector v(2);
  if (std::abs(b) == 0.0) {
    v = a >= d ? CVector{1.0, 0.0} : CVector{0.0, 1.0};
  } else {
    const CVector first{b, lambda - a};
    const CVector second{lambda - d, std::conj(b)};
    v = first.squared_norm() >= second.squared_norm() ? first : second;
    v = v.normalized();
  }
  fix_phase(v);
  return {std::move(v), lambda};
}

EigenPair dominant_right_eigvec_or_fallback(const CMatrix& a,
                                            const PowerIterationOptions& options) {
  try {
    return dominant_right_eigvec(a, options);
  } catch (const NoConvergence& e) {
    if (a.cols() == 2) {
      EigenPair closed = hermitian_eig2_max(gram(a));
      return finish(a, std::move(closed.vector));
    }
    return e.last_iterate();
  }
}

}  // namespace lfbf

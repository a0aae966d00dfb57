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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lfbf/errors.hpp"

namespace lfbf {

using Complex = std::complex<double>;

/// Antenna dimensions are small; keep entries inline up to 4 (vectors) and
/// 16 (matrices) so per-subcarrier math does not touch the heap.
using VectorStorage = boost::container::small_vector<Complex, 4>;
using MatrixStorage = boost::container::small_vector<Complex, 16>;

/// Dense complex column vector.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : entries_(dim) {}
  CVector(std::initializer_list<Complex> values) : entries_(values) {}
  explicit CVector(std::span<const Complex> values) : entries_(values.begin(), values.end()) {}

  std::size_t dim() const { return entries_.size(); }

  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<Complex> entries() { return {entries_.data(), entries_.size()}; }
  std::span<const Complex> entries() const { return {entries_.data(), entries_.size()}; }

  double squared_norm() const;
  double norm() const;

  /// Returns v / ||v||. Throws ZeroChannel for the zero vector.
  CVector normalized() const;

  CVector& operator*=(Complex s);
  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);

  bool operator==(const CVector& other) const { return entries_ == other.entries_; }

 private:
  VectorStorage entries_;
};

CVector operator*(Complex s, CVector v);
CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);

/// a^H b
Complex inner(const CVector& a, const CVector& b);

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> values);
  /// u v^H
  static CMatrix outer(const CVector& u, const CVector& v);
  /// Matrix whose row i is rows[i]^H.
  static CMatrix from_conjugate_rows(std::span<const CVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Complex> entries() { return {entries_.data(), entries_.size()}; }
  std::span<const Complex> entries() const { return {entries_.data(), entries_.size()}; }

  CVector column(std::size_t c) const;
  CVector row(std::size_t r) const;

  double frobenius_norm() const;
  double max_abs() const;

  CMatrix& operator*=(Complex s);
  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);

  bool operator==(const CMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  MatrixStorage entries_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& x);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);

/// Conjugate transpose.
CMatrix hermitian(const CMatrix& a);

/// A^H A
CMatrix gram(const CMatrix& a);

struct InverseOptions {
  double min_pivot = 1e-14;
  double max_condition = 1e12;
};

/// Gauss-Jordan inverse with partial pivoting.
///
/// Throws SingularMatrix when a pivot magnitude drops below
/// `options.min_pivot` or the 1-norm condition estimate
/// ||A||_1 ||A^-1||_1 exceeds `options.max_condition`.
CMatrix mat_inverse(const CMatrix& a, const InverseOptions& options = {});

/// 1-norm condition number ||A||_1 ||A^-1||_1.
double condition_1(const CMatrix& a);

struct EigenPair {
  CVector vector;
  double value = 0.0;
};

/// Power iteration failed to settle; carries the last iterate.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, EigenPair last)
      : Error(what), last_(std::move(last)) {}
  const EigenPair& last_iterate() const { return last_; }

 private:
  EigenPair last_;
};

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 10'000;
  double start_perturbation = 1e-3;
};

/// Rotates v so that its first entry with magnitude above `threshold` is
/// real and nonnegative.
void fix_phase(CVector& v, double threshold = 1e-300);

/// Dominant right singular vector of A via power iteration on A^H A.
///
/// Returns unit-norm v with the first nonzero entry real and nonnegative and
/// value = ||A v||^2. Iteration starts at (1, eps, ..., eps) and stops once
/// successive phase-fixed iterates differ by less than `tolerance`.
/// Throws NoConvergence after `max_iterations`.
EigenPair dominant_right_eigvec(const CMatrix& a, const PowerIterationOptions& options = {});

/// As dominant_right_eigvec, but resolves NoConvergence: for two columns the
/// closed-form 2x2 Hermitian eigensolution is used, otherwise the last iterate
/// (any vector in a near-degenerate top eigenspace is near-optimal).
EigenPair dominant_right_eigvec_or_fallback(const CMatrix& a,
                                            const PowerIterationOptions& options = {});

/// Largest eigenpair of a 2x2 Hermitian matrix in closed form.
EigenPair hermitian_eig2_max(const CMatrix& g);

}  // namespace lfbf

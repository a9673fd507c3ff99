// Copyright 2026 The absep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for the small matrices (dimension <= 64) that
// describe 2 x d bipartite states. Basis ordering is |a> (x) |b>  ->  a * d + b.

#ifndef ABSEP_LINALG_HPP
#define ABSEP_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace absep {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kReconstruction = 1e-10;
/// Eigenvalues at or below this are zero for rank purposes.
inline constexpr double kRank = 1e-10;
inline constexpr double kSpectrumSum = 1e-10;
inline constexpr std::size_t kMaxDimension = 64;
}  // namespace tol

class ComplexMatrix {
 public:
  /// Zero matrix. Throws DomainError if either extent is zero.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major construction from nested lists.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v| (no normalisation is applied).
  static ComplexMatrix projector(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  ComplexVector column(std::size_t c) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_ij |m_ij - conj(m_ji)|.
double hermiticity_error(const ComplexMatrix& m);
/// max_ij |(U^dagger U - I)_ij|.
double unitarity_error(const ComplexMatrix& u);
/// U m U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

enum class Subsystem { A, B };

struct Dims {
  std::size_t a;
  std::size_t b;
};

/// Hermitian, unit-trace, positive semidefinite state on C^2 (x) C^d, d >= 2.
class DensityMatrix {
 public:
  /// Validates every invariant and throws DomainError naming the violated bound.
  DensityMatrix(ComplexMatrix m, std::size_t dim_b);

  std::size_t dim_a() const { return 2; }
  std::size_t dim_b() const { return dim_b_; }
  Dims dims() const { return {2, dim_b_}; }
  std::size_t size() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
  std::size_t dim_b_;
};

/// Eigenvalues of a density matrix in decreasing order.
class Spectrum {
 public:
  /// Sorts descending; requires sum 1 and no entry below -1e-10.
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  std::size_t rank(double cutoff = tol::kRank) const;
  /// Sum of squared eigenvalues.
  double purity() const;

 private:
  std::vector<double> values_;
};

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi. Throws DomainError for non-square, oversized or
/// non-Hermitian input and NumericalError if the sweep cap is reached.
HermitianEigen eig_hermitian(const ComplexMatrix& m);
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

/// Eigenvalues of a unit-trace PSD matrix. Values within the eigensolver's
/// absolute accuracy of zero (16 n eps ||m||_F) are set to exactly zero:
/// the criterion takes square roots of the smallest eigenvalues, which would
/// otherwise turn 1e-17 of rounding noise into a 1e-8 shift.
Spectrum spectrum(const ComplexMatrix& m);
Spectrum spectrum(const DensityMatrix& rho);

/// Kronecker product; a is the slow index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem which);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which);

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem over);
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem over);

/// Tr(rho^2) from the matrix entries.
double purity(const DensityMatrix& rho);

/// -sum p log2 p with 0 log 0 = 0.
double von_neumann_entropy(std::span<const double> probabilities);
double binary_entropy(double p);

}  // namespace absep

#endif  // ABSEP_LINALG_HPP

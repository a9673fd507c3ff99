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

#include "absep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/core.h>

#include "absep/errors.hpp"

namespace absep {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DomainError(fmt::format("matrix extents must be positive, got {}x{}", rows, cols));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix initializer");
    std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    ++r;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(fmt::format("shape mismatch: {}x{} vs {}x{}", a.rows(), a.cols(), b.rows(),
                                  b.cols()));
  }
}

}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError(fmt::format("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(),
                                  b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw DomainError(fmt::format("cannot apply {}x{} matrix to vector of length {}", a.rows(),
                                  a.cols(), v.size()));
  }
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double hermiticity_error(const ComplexMatrix& m) {
  if (!m.is_square()) throw DomainError("hermiticity is only defined for square matrices");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double unitarity_error(const ComplexMatrix& u) {
  if (!u.is_square()) throw DomainError("unitarity is only defined for square matrices");
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::size_t dim_b)
    : matrix_(std::move(m)), dim_b_(dim_b) {
  if (dim_b_ < 2) throw DomainError(fmt::format("dim_b must be >= 2, got {}", dim_b_));
  if (!matrix_.is_square() || matrix_.rows() != 2 * dim_b_) {
    throw DomainError(fmt::format("density matrix for 2x{} must be {}x{}, got {}x{}", dim_b_,
                                  2 * dim_b_, 2 * dim_b_, matrix_.rows(), matrix_.cols()));
  }
  if (matrix_.rows() > tol::kMaxDimension) {
    throw DomainError(fmt::format("dimension {} exceeds the supported maximum {}",
                                  matrix_.rows(), tol::kMaxDimension));
  }
  const double herm = hermiticity_error(matrix_);
  if (herm > tol::kHermitian) {
    throw DomainError(fmt::format("state is not Hermitian: max |M - M^dagger| = {:.3e} > {:.0e}",
                                  herm, tol::kHermitian));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw DomainError(fmt::format("state trace {:.17g} differs from 1 by more than {:.0e}",
                                  tr.real(), tol::kTrace));
  }
  const auto values = eigenvalues_hermitian(matrix_);
  if (values.back() < -tol::kPsd) {
    throw DomainError(fmt::format("state is not positive semidefinite: min eigenvalue {:.3e} < "
                                  "-{:.0e}",
                                  values.back(), tol::kPsd));
  }
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("spectrum must be non-empty");
  std::sort(values_.begin(), values_.end(), std::greater<>());
  if (values_.back() < -tol::kPsd) {
    throw DomainError(fmt::format("spectrum has negative value {:.3e} below -{:.0e}",
                                  values_.back(), tol::kPsd));
  }
  const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(sum - 1.0) > tol::kSpectrumSum) {
    throw DomainError(fmt::format("spectrum sums to {:.17g}, not 1 within {:.0e}", sum,
                                  tol::kSpectrumSum));
  }
}

std::size_t Spectrum::rank(double cutoff) const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [cutoff](double v) { return v > cutoff; }));
}

double Spectrum::purity() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s;
}

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw DomainError(fmt::format("eigensolver needs a square matrix, got {}x{}", m.rows(),
                                  m.cols()));
  }
  const std::size_t n = m.rows();
  if (n > tol::kMaxDimension) {
    throw DomainError(fmt::format("dimension {} exceeds the supported maximum {}", n,
                                  tol::kMaxDimension));
  }
  const double herm = hermiticity_error(m);
  if (herm > tol::kHermitian) {
    throw DomainError(fmt::format("matrix is not Hermitian: max |M - M^dagger| = {:.3e} > {:.0e}",
                                  herm, tol::kHermitian));
  }

  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob2 = 0.0;
  for (const auto& e : a.entries()) frob2 += std::norm(e);
  // Entries at or below this are treated as already annihilated.
  const double negligible = 1e-18 * std::sqrt(frob2);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0;; ++sweep) {
    if (sweep == kMaxSweeps) {
      double off = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
      throw NumericalError(fmt::format(
          "Jacobi eigensolver did not converge in {} sweeps (off-diagonal norm {:.3e})",
          kMaxSweeps, std::sqrt(off)));
    }
    std::size_t rotations = 0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= negligible) continue;
        ++rotations;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase rotation makes the (p,q) entry real, then a real Jacobi rotation
        // annihilates it. Combined: J = diag-phase * R.
        const Complex phase = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    if (rotations == 0) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  return eig_hermitian(m).values;
}

Spectrum spectrum(const ComplexMatrix& m) {
  auto values = eigenvalues_hermitian(m);
  double frob2 = 0.0;
  for (const auto& e : m.entries()) frob2 += std::norm(e);
  const double floor = 16.0 * static_cast<double>(m.rows()) *
                       std::numeric_limits<double>::epsilon() * std::sqrt(frob2);
  for (auto& v : values) {
    if (v <= floor) v = 0.0;
  }
  return Spectrum(std::move(values));
}

Spectrum spectrum(const DensityMatrix& rho) { return spectrum(rho.matrix()); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

namespace {

void require_bipartite(const ComplexMatrix& m, Dims dims) {
  if (!m.is_square() || m.rows() != dims.a * dims.b) {
    throw DomainError(fmt::format("{}x{} matrix does not act on a {}x{} space", m.rows(),
                                  m.cols(), dims.a, dims.b));
  }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem which) {
  require_bipartite(m, dims);
  if (which != Subsystem::A && which != Subsystem::B) throw DomainError("invalid subsystem tag");
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t b2 = 0; b2 < db; ++b2) {
          const Complex value = m(a * db + b, a2 * db + b2);
          if (which == Subsystem::B) {
            out(a * db + b2, a2 * db + b) = value;
          } else {
            out(a2 * db + b, a * db + b2) = value;
          }
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
  return partial_transpose(rho.matrix(), rho.dims(), which);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem over) {
  require_bipartite(m, dims);
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  switch (over) {
    case Subsystem::B: {
      ComplexMatrix out(da, da);
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t a2 = 0; a2 < da; ++a2)
          for (std::size_t b = 0; b < db; ++b) out(a, a2) += m(a * db + b, a2 * db + b);
      return out;
    }
    case Subsystem::A: {
      ComplexMatrix out(db, db);
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t b2 = 0; b2 < db; ++b2)
          for (std::size_t a = 0; a < da; ++a) out(b, b2) += m(a * db + b, a * db + b2);
      return out;
    }
  }
  throw DomainError("invalid subsystem tag");
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem over) {
  return partial_trace(rho.matrix(), rho.dims(), over);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& e : rho.matrix().entries()) s += std::norm(e);
  return s;
}

double von_neumann_entropy(std::span<const double> probabilities) {
  double sum = 0.0;
  for (double p : probabilities) {
    if (p < -tol::kPsd) {
      throw DomainError(fmt::format("negative probability {:.3e} below -{:.0e}", p, tol::kPsd));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kSpectrumSum) {
    throw DomainError(fmt::format("probabilities sum to {:.17g}, not 1", sum));
  }
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double binary_entropy(double p) {
  const double probs[2] = {p, 1.0 - p};
  return von_neumann_entropy(probs);
}

}  // namespace absep

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

#include "absep/channels.hpp"

#include <cmath>

#include <fmt/core.h>

#include "absep/criteria.hpp"
#include "absep/errors.hpp"
#include "absep/random.hpp"

namespace absep {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::DPC:
      return "DPC";
    case ChannelKind::ADC:
      return "ADC";
    case ChannelKind::PDC:
      return "PDC";
    case ChannelKind::FromUnitary:
      return "FROM_UNITARY";
    case ChannelKind::Custom:
      return "CUSTOM";
  }
  return "UNKNOWN";
}

namespace {

ComplexMatrix completeness_sum(const std::vector<ComplexMatrix>& ops) {
  ComplexMatrix sum(ops.front().cols(), ops.front().cols());
  for (const auto& k : ops) sum += k.adjoint() * k;
  return sum;
}

void require_probability(double p, std::string_view channel) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(fmt::format("{} parameter p = {} outside [0, 1]", channel, p));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> operators, double p, ChannelKind kind,
                   double completeness_tolerance)
    : operators_(std::move(operators)), p_(p), kind_(kind) {
  if (operators_.empty()) throw DomainError("a Kraus set needs at least one operator");
  const auto& first = operators_.front();
  if (!first.is_square()) throw DomainError("Kraus operators must be square");
  for (const auto& k : operators_) {
    if (k.rows() != first.rows() || k.cols() != first.cols()) {
      throw DomainError("Kraus operators must all have the same shape");
    }
  }
  const double err = completeness_error();
  if (err > completeness_tolerance) {
    throw DomainError(fmt::format("Kraus set is not complete: max |sum K^dagger K - I| = {:.3e} "
                                  "> {:.0e}",
                                  err, completeness_tolerance));
  }
}

double KrausSet::completeness_error() const {
  return max_abs_diff(completeness_sum(operators_), ComplexMatrix::identity(dim()));
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

KrausSet dpc_kraus(double p) {
  require_probability(p, "DPC");
  const double w = std::sqrt((1.0 - p) / 3.0);
  return KrausSet({std::sqrt(p) * ComplexMatrix::identity(2), w * pauli_x(), w * pauli_y(),
                   w * pauli_z()},
                  p, ChannelKind::DPC);
}

KrausSet adc_kraus(double p) {
  require_probability(p, "ADC");
  ComplexMatrix k1{{1.0, 0.0}, {0.0, std::sqrt(p)}};
  ComplexMatrix k2{{0.0, std::sqrt(1.0 - p)}, {0.0, 0.0}};
  return KrausSet({std::move(k1), std::move(k2)}, p, ChannelKind::ADC);
}

KrausSet pdc_kraus(double p) {
  require_probability(p, "PDC");
  ComplexMatrix k2{{std::sqrt(p), 0.0}, {0.0, 0.0}};
  ComplexMatrix k3{{0.0, 0.0}, {0.0, std::sqrt(p)}};
  return KrausSet({std::sqrt(1.0 - p) * ComplexMatrix::identity(2), std::move(k2), std::move(k3)},
                  p, ChannelKind::PDC);
}

ComplexMatrix apply_channel(const KrausSet& channel, const ComplexMatrix& rho) {
  if (rho.rows() != channel.dim() || rho.cols() != channel.dim()) {
    throw DomainError(fmt::format("{}-dimensional channel applied to a {}x{} matrix",
                                  channel.dim(), rho.rows(), rho.cols()));
  }
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& k : channel.operators()) out += conjugate(k, rho);
  return out;
}

DensityMatrix apply_local_product(const DensityMatrix& rho, const KrausSet& on_a,
                                  const KrausSet& on_b) {
  if (on_a.dim() != rho.dim_a() || on_b.dim() != rho.dim_b()) {
    throw DomainError(fmt::format("channels of dimension {} and {} cannot act on a 2x{} state",
                                  on_a.dim(), on_b.dim(), rho.dim_b()));
  }
  ComplexMatrix out(rho.size(), rho.size());
  for (const auto& ka : on_a.operators()) {
    for (const auto& kb : on_b.operators()) out += conjugate(tensor(ka, kb), rho.matrix());
  }
  return DensityMatrix(hermitian_part(out), rho.dim_b());
}

KrausSet channel_from_unitary(const ComplexMatrix& u, std::size_t ancilla_dim) {
  if (ancilla_dim == 0 || !u.is_square() || u.rows() % ancilla_dim != 0) {
    throw DomainError(fmt::format("{}x{} matrix cannot act on system (x) {}-level ancilla",
                                  u.rows(), u.cols(), ancilla_dim));
  }
  const double err = unitarity_error(u);
  if (err > kUnitaryTolerance) {
    throw DomainError(fmt::format("matrix is not unitary: max |U^dagger U - I| = {:.3e} > {:.0e}",
                                  err, kUnitaryTolerance));
  }
  const std::size_t n = u.rows() / ancilla_dim;
  std::vector<ComplexMatrix> ops;
  ops.reserve(ancilla_dim);
  for (std::size_t mu = 0; mu < ancilla_dim; ++mu) {
    ComplexMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) k(i, j) = u(i * ancilla_dim + mu, j * ancilla_dim);
    ops.push_back(std::move(k));
  }
  return KrausSet(std::move(ops), 0.0, ChannelKind::FromUnitary, kUnitaryTolerance);
}

ComplexMatrix dilated_channel_output(const ComplexMatrix& u, const ComplexMatrix& rho,
                                     std::size_t ancilla_dim) {
  if (ancilla_dim == 0 || !rho.is_square() || u.rows() != rho.rows() * ancilla_dim) {
    throw DomainError("unitary, state and ancilla dimensions do not match");
  }
  ComplexMatrix ground(ancilla_dim, ancilla_dim);
  ground(0, 0) = 1.0;
  const ComplexMatrix joint = conjugate(u, tensor(rho, ground));
  return partial_trace(joint, Dims{rho.rows(), ancilla_dim}, Subsystem::B);
}

DensityMatrix extend_with_ancilla(const DensityMatrix& rho, const ComplexMatrix& ancilla) {
  if (ancilla.rows() != 2 || ancilla.cols() != 2) {
    throw DomainError(fmt::format("ancilla must be a qubit state, got {}x{}", ancilla.rows(),
                                  ancilla.cols()));
  }
  if (hermiticity_error(ancilla) > tol::kHermitian ||
      std::abs(ancilla.trace() - 1.0) > tol::kTrace ||
      eigenvalues_hermitian(ancilla).back() < -tol::kPsd) {
    throw DomainError("ancilla is not a valid qubit density matrix");
  }
  return DensityMatrix(tensor(rho.matrix(), ancilla), 2 * rho.dim_b());
}

UnitarySearchResult search_entangling_unitary(const DensityMatrix& rho, std::size_t max_samples,
                                              std::uint64_t seed) {
  Rng rng(seed);
  UnitarySearchResult result;
  result.most_negative_pt_eig = entanglement_status(rho).pt_min_eig;
  for (std::size_t k = 0; k < max_samples; ++k) {
    ComplexMatrix u = haar_unitary(rho.size(), rng);
    const DensityMatrix rotated(hermitian_part(conjugate(u, rho.matrix())), rho.dim_b());
    const double pt_min = entanglement_status(rotated).pt_min_eig;
    result.samples_tried = k + 1;
    result.most_negative_pt_eig = std::min(result.most_negative_pt_eig, pt_min);
    if (pt_min < -kNptTolerance) {
      result.entangling_unitary = std::move(u);
      break;
    }
  }
  return result;
}

}  // namespace absep

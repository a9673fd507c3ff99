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

// Kraus representations of the depolarizing, amplitude-damping and
// phase-damping qubit channels, local product channels on 2 x d states, and
// channels induced by a global unitary acting with an ancilla in |0>.
//
// The parameter p is always the channel's own p: the depolarizing noise
// strength is 1 - p, amplitude damping decays |1> -> |0> with probability
// 1 - p, and phase damping has dephasing strength p.

#ifndef ABSEP_CHANNELS_HPP
#define ABSEP_CHANNELS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "absep/linalg.hpp"

namespace absep {

inline constexpr double kCompletenessTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

enum class ChannelKind { DPC, ADC, PDC, FromUnitary, Custom };

std::string_view to_string(ChannelKind kind);

class KrausSet {
 public:
  /// Throws DomainError if the operators differ in shape or
  /// max |sum K^dagger K - I| exceeds `completeness_tolerance`.
  KrausSet(std::vector<ComplexMatrix> operators, double p, ChannelKind kind,
           double completeness_tolerance = kCompletenessTolerance);

  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  double param_p() const { return p_; }
  ChannelKind kind() const { return kind_; }
  std::size_t dim() const { return operators_.front().rows(); }

  double completeness_error() const;

 private:
  std::vector<ComplexMatrix> operators_;
  double p_;
  ChannelKind kind_;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();  // [[0, -i], [i, 0]]
ComplexMatrix pauli_z();

/// {sqrt(p) I, sqrt((1-p)/3) sigma_x, sqrt((1-p)/3) sigma_y, sqrt((1-p)/3) sigma_z}.
KrausSet dpc_kraus(double p);
/// {[[1, 0], [0, sqrt(p)]], [[0, sqrt(1-p)], [0, 0]]}.
KrausSet adc_kraus(double p);
/// {sqrt(1-p) I, sqrt(p) |0><0|, sqrt(p) |1><1|}.
KrausSet pdc_kraus(double p);

/// sum_k K rho K^dagger.
ComplexMatrix apply_channel(const KrausSet& channel, const ComplexMatrix& rho);

/// (Lambda_A (x) Lambda_B)(rho).
DensityMatrix apply_local_product(const DensityMatrix& rho, const KrausSet& on_a,
                                  const KrausSet& on_b);

/// K_mu = <mu|U|0> for U on system (x) ancilla (ancilla is the fast index).
KrausSet channel_from_unitary(const ComplexMatrix& u, std::size_t ancilla_dim);

/// Tr_ancilla[U (rho (x) |0><0|) U^dagger], computed directly.
ComplexMatrix dilated_channel_output(const ComplexMatrix& u, const ComplexMatrix& rho,
                                     std::size_t ancilla_dim);

/// rho (x) ancilla as a 2 x 2d state; the ancilla joins subsystem B.
DensityMatrix extend_with_ancilla(const DensityMatrix& rho, const ComplexMatrix& ancilla);

struct UnitarySearchResult {
  std::size_t samples_tried = 0;
  double most_negative_pt_eig = 0.0;
  std::optional<ComplexMatrix> entangling_unitary;
};

/// Samples seeded Haar unitaries U until U rho U^dagger has a negative partial
/// transpose or `max_samples` is exhausted.
UnitarySearchResult search_entangling_unitary(const DensityMatrix& rho, std::size_t max_samples,
                                              std::uint64_t seed);

}  // namespace absep

#endif  // ABSEP_CHANNELS_HPP

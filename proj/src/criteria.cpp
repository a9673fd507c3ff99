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

#include "absep/criteria.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "absep/errors.hpp"

namespace absep {

std::string_view to_string(EntanglementStatus status) {
  switch (status) {
    case EntanglementStatus::NptEntangled:
      return "NPT_ENTANGLED";
    case EntanglementStatus::PptSeparableExact:
      return "PPT_SEPARABLE_EXACT";
    case EntanglementStatus::PptUndecided:
      return "PPT_UNDECIDED";
  }
  return "UNKNOWN";
}

std::string_view to_string(AbsSepClass cls) {
  switch (cls) {
    case AbsSepClass::NotAbsSep:
      return "NOT_ABS_SEP";
    case AbsSepClass::AbsBoundary:
      return "ABS_BOUNDARY";
    case AbsSepClass::AbsInterior:
      return "ABS_INTERIOR";
  }
  return "UNKNOWN";
}

namespace {

void require_length(const Spectrum& s, std::size_t d) {
  if (d < 2) throw DomainError(fmt::format("d must be >= 2, got {}", d));
  if (s.size() != 2 * d) {
    throw DomainError(
        fmt::format("spectrum has {} values but a 2x{} state needs {}", s.size(), d, 2 * d));
  }
}

}  // namespace

double eq1_lhs(const Spectrum& s, std::size_t d) {
  require_length(s, d);
  const std::size_t n = 2 * d;
  const double l1 = s[0];
  const double l_2d_minus_1 = s[n - 2];
  const double l_2d_minus_2 = std::max(s[n - 3], 0.0);
  const double l_2d = std::max(s[n - 1], 0.0);
  return l1 - l_2d_minus_1 - 2.0 * std::sqrt(l_2d_minus_2 * l_2d);
}

bool is_absolutely_separable(const Spectrum& s, std::size_t d, double band) {
  return eq1_lhs(s, d) <= band;
}

double maximal_ball_purity(std::size_t d) { return 1.0 / static_cast<double>(2 * d - 1); }

bool in_maximal_ball(const DensityMatrix& rho) {
  return purity(rho) <= maximal_ball_purity(rho.dim_b()) + kBallSlack;
}

PptResult entanglement_status(const DensityMatrix& rho) {
  const auto pt = partial_transpose(rho, Subsystem::B);
  const double min_eig = eigenvalues_hermitian(pt).back();
  if (min_eig < -kNptTolerance) return {min_eig, EntanglementStatus::NptEntangled};
  if (rho.dim_b() <= 3) return {min_eig, EntanglementStatus::PptSeparableExact};
  return {min_eig, EntanglementStatus::PptUndecided};
}

bool is_certified_extreme(const Spectrum& s, std::size_t d) {
  require_length(s, d);
  const std::size_t target_rank = 2 * d - 1;
  if (s.rank() != target_rank) return false;
  const double level = 1.0 / static_cast<double>(target_rank);
  for (std::size_t i = 0; i < target_rank; ++i) {
    if (std::abs(s[i] - level) > kExtremeTolerance) return false;
  }
  return true;
}

AbsSepClass absep_class(double lhs, double band) {
  if (lhs > band) return AbsSepClass::NotAbsSep;
  if (lhs >= -band) return AbsSepClass::AbsBoundary;
  return AbsSepClass::AbsInterior;
}

ClassificationReport classify(const DensityMatrix& rho, double band) {
  const std::size_t d = rho.dim_b();
  const Spectrum s = spectrum(rho);
  const PptResult ppt = entanglement_status(rho);

  ClassificationReport report;
  report.dim_a = rho.dim_a();
  report.dim_b = d;
  report.rank = s.rank();
  report.eq1_lhs = eq1_lhs(s, d);
  report.purity = purity(rho);
  report.in_maximal_ball = report.purity <= maximal_ball_purity(d) + kBallSlack;
  report.pt_min_eig = ppt.pt_min_eig;
  report.entanglement_status = ppt.status;
  report.absep_class = absep_class(report.eq1_lhs, band);
  // A negative partial transpose is a certificate of entanglement and
  // overrides a marginal spectral verdict inside the band.
  if (ppt.status == EntanglementStatus::NptEntangled) {
    report.absep_class = AbsSepClass::NotAbsSep;
  }
  report.is_extreme_certified =
      report.absep_class != AbsSepClass::NotAbsSep && is_certified_extreme(s, d);
  report.spectrum.assign(s.values().begin(), s.values().end());
  return report;
}

InteriorDecomposition interior_decompose(const Spectrum& s, std::size_t d) {
  const double lhs = eq1_lhs(s, d);
  if (lhs >= -kBoundaryBand) {
    throw DomainError(fmt::format(
        "spectrum is not strictly interior: eq1_lhs = {:.3e} >= -{:.0e}", lhs, kBoundaryBand));
  }
  const std::size_t n = 2 * d;
  if (s[0] - s[n - 1] <= 1e-12) {
    throw DomainError("maximally mixed spectrum has no unique interior decomposition");
  }
  const double a = s[n - 3];
  const double b = s[n - 1];
  const double c = 0.5 * (s[0] - s[n - 2]);
  // Roots of eps^2 - (a + b) eps + ab - c^2. The smaller one is formed as
  // (product of roots) / (larger root) to avoid cancellation.
  const double disc = std::sqrt((a - b) * (a - b) + 4.0 * c * c);
  const double larger = 0.5 * ((a + b) + disc);
  double eps = (a * b - c * c) / larger;
  eps = std::clamp(eps, 0.0, b);
  if (!(eps > 0.0)) {
    throw NumericalError(fmt::format("interior decomposition produced eps = {:.3e}", eps));
  }

  const double scale = 1.0 - static_cast<double>(n) * eps;
  std::vector<double> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = (s[i] - eps) / scale;
  sigma[n - 1] = std::max(sigma[n - 1], 0.0);
  return {eps, Spectrum(std::move(sigma)), static_cast<double>(n) * eps};
}

}  // namespace absep

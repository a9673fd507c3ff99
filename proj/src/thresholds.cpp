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

#include "absep/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "absep/constructors.hpp"
#include "absep/errors.hpp"

namespace absep {

namespace {

void require_unit(double v, std::string_view name) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(fmt::format("{} = {} outside [0, 1]", name, v));
}

void require_angle(double x) {
  if (!(x >= 0.0 && x <= std::numbers::pi)) {
    throw DomainError(fmt::format("x = {} outside [0, pi]", x));
  }
}

}  // namespace

KrausSet channel_kraus(ChannelKind kind, double p) {
  switch (kind) {
    case ChannelKind::DPC:
      return dpc_kraus(p);
    case ChannelKind::ADC:
      return adc_kraus(p);
    case ChannelKind::PDC:
      return pdc_kraus(p);
    default:
      break;
  }
  throw DomainError(fmt::format("{} is not a named qubit channel", to_string(kind)));
}

DensityMatrix noisy_output(double x, double p, ChannelKind kind, double phi) {
  const auto channel = channel_kraus(kind, p);
  return apply_local_product(pure_state({x, phi}), channel, channel);
}

double input_entanglement(double x) {
  require_angle(x);
  const double c = std::cos(x / 2.0);
  return binary_entropy(c * c);
}

double entropy_to_x(double entropy_bits) {
  if (!(entropy_bits >= 0.0 && entropy_bits <= 1.0)) {
    throw DomainError(fmt::format("entropy {} outside [0, 1] bits", entropy_bits));
  }
  if (entropy_bits == 0.0) return 0.0;
  if (entropy_bits == 1.0) return std::numbers::pi / 2.0;
  double lo = 0.0;
  double hi = std::numbers::pi / 2.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (input_entanglement(mid) < entropy_bits) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SeparabilityThreshold p_sep_threshold(double x, ChannelKind kind) {
  require_angle(x);
  channel_kraus(kind, 0.5);  // rejects non-named channels up front
  const Predicate ppt = [x, kind](double p) {
    return entanglement_status(noisy_output(x, p, kind)).pt_min_eig >= -kNptTolerance;
  };
  SeparabilityThreshold out;
  out.separable = find_windows(ppt, 0.0, 1.0, kThresholdTolerance);
  if (!out.separable.empty()) out.p_sep = out.separable.back().hi;
  return out;
}

AbsSepThreshold p_abs_threshold(double x, ChannelKind kind) {
  require_angle(x);
  channel_kraus(kind, 0.5);
  const Predicate absep = [x, kind](double p) {
    return eq1_lhs(spectrum(noisy_output(x, p, kind)), 2) <= 0.0;
  };
  AbsSepThreshold out;
  out.windows = find_windows(absep, 0.0, 1.0, kThresholdTolerance);
  if (!out.windows.empty()) out.p_abs = out.windows.back().hi;
  return out;
}

ThresholdResult threshold_report(double x, ChannelKind kind) {
  const auto sep = p_sep_threshold(x, kind);
  const auto abs = p_abs_threshold(x, kind);
  ThresholdResult r{input_entanglement(x), x, kind, std::nullopt, std::nullopt, std::nullopt};
  if (sep.p_sep) r.one_minus_p_sep = 1.0 - *sep.p_sep;
  if (abs.p_abs) r.one_minus_p_abs = 1.0 - *abs.p_abs;
  if (r.one_minus_p_sep && r.one_minus_p_abs) r.gap = *r.one_minus_p_abs - *r.one_minus_p_sep;
  return r;
}

std::vector<ThresholdResult> table1(const std::vector<double>& entanglements) {
  std::vector<ThresholdResult> rows;
  rows.reserve(entanglements.size());
  for (double e : entanglements) {
    auto row = threshold_report(entropy_to_x(e), ChannelKind::DPC);
    row.input_entanglement = e;
    rows.push_back(row);
  }
  return rows;
}

bool dpc_entanglement_curve(double x, double p) {
  require_angle(x);
  require_unit(p, "p");
  const double denom = (4.0 * p - 1.0) * (4.0 * p - 1.0);
  if (denom == 0.0) return false;
  return std::sin(x) > 4.0 * (1.0 + 2.0 * p) * (1.0 - p) / denom;
}

bool adc_separability_condition(double x, double p) {
  require_angle(x);
  require_unit(p, "p");
  if (x == 0.0 || x == std::numbers::pi) return true;
  if (p == 1.0) return false;
  if (p == 0.0) return true;
  return std::tan(x / 2.0) >= 1.0 / (1.0 - p);
}

WernerPdcThresholds werner_pdc_thresholds(double p) {
  require_unit(p, "p");
  const auto channel = pdc_kraus(p);
  auto output = [&channel](double q) { return apply_local_product(werner(q), channel, channel); };
  const Predicate ppt = [&output](double q) {
    return entanglement_status(output(q)).pt_min_eig >= -kNptTolerance;
  };
  const Predicate absep = [&output](double q) {
    return eq1_lhs(spectrum(output(q)), 2) <= 0.0;
  };
  WernerPdcThresholds out;
  const auto sep = find_windows(ppt, 0.0, 1.0, kThresholdTolerance);
  const auto abs = find_windows(absep, 0.0, 1.0, kThresholdTolerance);
  if (!sep.empty()) out.q_sep = sep.back().hi;
  if (!abs.empty()) out.q_abs = abs.back().hi;
  return out;
}

Rank3PdcReport pdc_rank3_check(double x, double phi, double p) {
  const DensityMatrix input = rank3_psi_state({x, phi});
  const auto channel = pdc_kraus(p);
  const DensityMatrix output = apply_local_product(input, channel, channel);
  const Spectrum s = spectrum(output);
  Rank3PdcReport r;
  r.rank = s.rank();
  r.eq1_lhs = eq1_lhs(s, 2);
  r.max_change = max_abs_diff(output.matrix(), input.matrix());
  r.strictly_absep = r.eq1_lhs < -kBoundaryBand;
  r.unchanged = r.max_change <= 1e-12;
  return r;
}

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::DPC:
      return "dpc";
    case SweepMode::ADC:
      return "adc";
    case SweepMode::WernerPDC:
      return "werner-pdc";
  }
  return "unknown";
}

std::string_view csv_label(RegionClass cls) {
  switch (cls) {
    case RegionClass::Entangled:
      return "ENT";
    case RegionClass::SepOnly:
      return "SEP";
    case RegionClass::AbsSep:
      return "ABS";
    case RegionClass::Undecided:
      return "UND";
  }
  return "UND";
}

double Axis::value(std::size_t i) const {
  if (count <= 1) return lo;
  if (i + 1 == count) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::pair<Axis, Axis> default_axes(SweepMode mode, std::size_t resolution) {
  switch (mode) {
    case SweepMode::DPC:
    case SweepMode::ADC:
      return {Axis{"x", 0.0, std::numbers::pi, resolution}, Axis{"p", 0.0, 1.0, resolution}};
    case SweepMode::WernerPDC:
      return {Axis{"p", 0.0, 1.0, resolution}, Axis{"q", 0.0, 1.0, resolution}};
  }
  throw DomainError("unknown sweep mode");
}

RegionClass classify_cell(SweepMode mode, double v1, double v2, double band) {
  const DensityMatrix state = [&] {
    switch (mode) {
      case SweepMode::DPC:
        return noisy_output(v1, v2, ChannelKind::DPC);
      case SweepMode::ADC:
        return noisy_output(v1, v2, ChannelKind::ADC);
      case SweepMode::WernerPDC: {
        const auto channel = pdc_kraus(v1);
        return apply_local_product(werner(v2), channel, channel);
      }
    }
    throw DomainError("unknown sweep mode");
  }();
  const PptResult ppt = entanglement_status(state);
  if (ppt.status == EntanglementStatus::NptEntangled) return RegionClass::Entangled;
  if (eq1_lhs(spectrum(state), state.dim_b()) <= band) return RegionClass::AbsSep;
  if (ppt.status == EntanglementStatus::PptSeparableExact) return RegionClass::SepOnly;
  return RegionClass::Undecided;
}

}  // namespace absep

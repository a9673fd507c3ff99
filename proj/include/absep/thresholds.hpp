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

// Noise thresholds for cos(x/2)|00> + sin(x/2)|11> sent through two identical
// local channels, Table-style threshold reports, the analytic separability
// curves, and (x, p) / (p, q) region maps.

#ifndef ABSEP_THRESHOLDS_HPP
#define ABSEP_THRESHOLDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absep/channels.hpp"
#include "absep/criteria.hpp"
#include "absep/roots.hpp"

namespace absep {

inline constexpr double kThresholdTolerance = 1e-10;
inline constexpr std::size_t kMaxSweepResolution = 2000;

/// Kraus set of the named qubit channel (DPC, ADC or PDC).
KrausSet channel_kraus(ChannelKind kind, double p);

/// (Lambda(p) (x) Lambda(p)) applied to |psi(x, phi)>.
DensityMatrix noisy_output(double x, double p, ChannelKind kind, double phi = 0.0);

/// Entanglement entropy (bits) of |psi(x, phi)>: H2(cos^2(x/2)).
double input_entanglement(double x);

/// Inverse of input_entanglement on [0, pi/2], by bisection to 1e-10.
double entropy_to_x(double entropy_bits);

struct SeparabilityThreshold {
  /// Sup of the p for which the output is PPT; absent if it never is.
  std::optional<double> p_sep;
  std::vector<Interval> separable;
};

struct AbsSepThreshold {
  /// Sup of the p for which the output is absolutely separable.
  std::optional<double> p_abs;
  std::vector<Interval> windows;
};

SeparabilityThreshold p_sep_threshold(double x, ChannelKind kind);
AbsSepThreshold p_abs_threshold(double x, ChannelKind kind);

struct ThresholdResult {
  double input_entanglement;
  double x;
  ChannelKind channel;
  std::optional<double> one_minus_p_sep;
  std::optional<double> one_minus_p_abs;
  /// one_minus_p_abs - one_minus_p_sep, when both exist.
  std::optional<double> gap;
};

ThresholdResult threshold_report(double x, ChannelKind kind);

/// DPC thresholds for each input entanglement entropy.
std::vector<ThresholdResult> table1(const std::vector<double>& entanglements);

/// sin x > 4(1 + 2p)(1 - p) / (4p - 1)^2. False at the pole p = 1/4.
bool dpc_entanglement_curve(double x, double p);

/// tan(x/2) >= 1 / (1 - p), completed on the degenerate edges: x = 0 (product
/// input) and p = 0 (full damping) are separable, and p = 1 (no noise) is
/// separable only for x in {0, pi}.
bool adc_separability_condition(double x, double p);

struct WernerPdcThresholds {
  std::optional<double> q_sep;
  std::optional<double> q_abs;
};

/// Largest Werner mixing q that stays separable / absolutely separable after
/// PDC(p) (x) PDC(p).
WernerPdcThresholds werner_pdc_thresholds(double p);

struct Rank3PdcReport {
  std::size_t rank;
  double eq1_lhs;
  double max_change;  // max |output - input| entry
  bool strictly_absep;
  bool unchanged;
};

Rank3PdcReport pdc_rank3_check(double x, double phi, double p);

// ---- region maps ----

enum class SweepMode { DPC, ADC, WernerPDC };
enum class RegionClass { Entangled, SepOnly, AbsSep, Undecided };

std::string_view to_string(SweepMode mode);
/// Short CSV labels: ENT, SEP, ABS, UND.
std::string_view csv_label(RegionClass cls);

struct Axis {
  std::string name;
  double lo;
  double hi;
  std::size_t count;

  double value(std::size_t i) const;
};

struct RegionGrid {
  Axis axis1;
  Axis axis2;
  std::vector<RegionClass> cells;  // axis1-major

  RegionClass at(std::size_t i, std::size_t j) const { return cells[i * axis2.count + j]; }
};

/// Default axes: (x in [0, pi], p in [0, 1]) for DPC / ADC and
/// (p in [0, 1], q in [0, 1]) for the Werner state under PDC.
std::pair<Axis, Axis> default_axes(SweepMode mode, std::size_t resolution);

RegionClass classify_cell(SweepMode mode, double v1, double v2, double band = kBoundaryBand);

/// OpenMP-parallel over cells; identical output to sweep_region_serial.
RegionGrid sweep_region(SweepMode mode, const Axis& axis1, const Axis& axis2,
                        double band = kBoundaryBand);
RegionGrid sweep_region_serial(SweepMode mode, const Axis& axis1, const Axis& axis2,
                               double band = kBoundaryBand);

}  // namespace absep

#endif  // ABSEP_THRESHOLDS_HPP

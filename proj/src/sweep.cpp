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

// Region-map kernels. Cells are independent, so the parallel version writes
// each cell into its own slot and matches the serial reference exactly.

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "absep/errors.hpp"
#include "absep/thresholds.hpp"

namespace absep {

namespace {

void require_axis(const Axis& axis, double lo_limit, double hi_limit) {
  if (axis.count == 0 || axis.count > kMaxSweepResolution) {
    throw DomainError(fmt::format("axis '{}' resolution {} outside [1, {}]", axis.name,
                                  axis.count, kMaxSweepResolution));
  }
  if (!(axis.lo >= lo_limit && axis.hi <= hi_limit && axis.lo <= axis.hi)) {
    throw DomainError(fmt::format("axis '{}' range [{}, {}] outside [{}, {}]", axis.name, axis.lo,
                                  axis.hi, lo_limit, hi_limit));
  }
}

void require_axes(SweepMode mode, const Axis& axis1, const Axis& axis2) {
  switch (mode) {
    case SweepMode::DPC:
    case SweepMode::ADC:
      require_axis(axis1, 0.0, std::numbers::pi);
      require_axis(axis2, 0.0, 1.0);
      return;
    case SweepMode::WernerPDC:
      require_axis(axis1, 0.0, 1.0);
      require_axis(axis2, 0.0, 1.0);
      return;
  }
  throw DomainError("unknown sweep mode");
}

}  // namespace

RegionGrid sweep_region_serial(SweepMode mode, const Axis& axis1, const Axis& axis2,
                               double band) {
  require_axes(mode, axis1, axis2);
  RegionGrid grid{axis1, axis2, std::vector<RegionClass>(axis1.count * axis2.count)};
  for (std::size_t i = 0; i < axis1.count; ++i)
    for (std::size_t j = 0; j < axis2.count; ++j)
      grid.cells[i * axis2.count + j] = classify_cell(mode, axis1.value(i), axis2.value(j), band);
  return grid;
}

RegionGrid sweep_region(SweepMode mode, const Axis& axis1, const Axis& axis2, double band) {
  require_axes(mode, axis1, axis2);
  RegionGrid grid{axis1, axis2, std::vector<RegionClass>(axis1.count * axis2.count)};
  const auto total = static_cast<std::ptrdiff_t>(grid.cells.size());
  const std::size_t n2 = axis2.count;

  // Exceptions must not escape an OpenMP region; capture the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      grid.cells[idx] = classify_cell(mode, axis1.value(idx / n2), axis2.value(idx % n2), band);
    } catch (...) {
#pragma omp critical(absep_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace absep

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

// Grid-then-bisect location of the points where a boolean criterion changes
// value along a one-parameter family. No single-root assumption is made: every
// change between neighbouring grid nodes is refined separately.

#ifndef ABSEP_ROOTS_HPP
#define ABSEP_ROOTS_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace absep {

struct Interval {
  double lo;
  double hi;

  double length() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }
};

using Predicate = std::function<bool(double)>;

inline constexpr std::size_t kDefaultGridIntervals = 1000;

/// Refines a bracket [a, b] with pred(a) != pred(b) until it is at most `tol`
/// wide and returns its midpoint.
double bisect_transition(const Predicate& pred, double a, double b, double tol);

/// Parameter values in [lo, hi] where `pred` changes value, ascending.
std::vector<double> find_transitions(const Predicate& pred, double lo, double hi, double tol,
                                     std::size_t grid_intervals = kDefaultGridIntervals);

/// Maximal sub-intervals of [lo, hi] on which `pred` holds, with refined ends.
std::vector<Interval> find_windows(const Predicate& pred, double lo, double hi, double tol,
                                   std::size_t grid_intervals = kDefaultGridIntervals);

}  // namespace absep

#endif  // ABSEP_ROOTS_HPP

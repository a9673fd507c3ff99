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

#include "absep/roots.hpp"

#include <cmath>

#include <fmt/core.h>

#include "absep/errors.hpp"

namespace absep {

namespace {

struct Transition {
  double at;
  bool becomes;  // value of the predicate just after the transition
};

std::vector<Transition> scan(const Predicate& pred, double lo, double hi, double tol,
                             std::size_t grid_intervals, bool& initial) {
  if (!(lo < hi)) throw DomainError(fmt::format("empty scan range [{}, {}]", lo, hi));
  if (grid_intervals == 0) throw DomainError("grid needs at least one interval");
  const double step = (hi - lo) / static_cast<double>(grid_intervals);
  std::vector<Transition> out;
  double prev_t = lo;
  bool prev = pred(lo);
  initial = prev;
  for (std::size_t i = 1; i <= grid_intervals; ++i) {
    const double t = (i == grid_intervals) ? hi : lo + step * static_cast<double>(i);
    const bool cur = pred(t);
    if (cur != prev) out.push_back({bisect_transition(pred, prev_t, t, tol), cur});
    prev_t = t;
    prev = cur;
  }
  return out;
}

}  // namespace

double bisect_transition(const Predicate& pred, double a, double b, double tol) {
  bool at_a = pred(a);
  if (at_a == pred(b)) {
    throw NumericalError(fmt::format("[{}, {}] does not bracket a transition", a, b));
  }
  while (std::abs(b - a) > tol) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    if (pred(mid) == at_a) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> find_transitions(const Predicate& pred, double lo, double hi, double tol,
                                     std::size_t grid_intervals) {
  bool initial = false;
  std::vector<double> roots;
  for (const auto& tr : scan(pred, lo, hi, tol, grid_intervals, initial)) roots.push_back(tr.at);
  return roots;
}

std::vector<Interval> find_windows(const Predicate& pred, double lo, double hi, double tol,
                                   std::size_t grid_intervals) {
  bool initial = false;
  const auto transitions = scan(pred, lo, hi, tol, grid_intervals, initial);
  std::vector<Interval> windows;
  bool open = initial;
  double start = lo;
  for (const auto& tr : transitions) {
    if (tr.becomes) {
      start = tr.at;
      open = true;
    } else if (open) {
      windows.push_back({start, tr.at});
      open = false;
    }
  }
  if (open) windows.push_back({start, hi});
  return windows;
}

}  // namespace absep

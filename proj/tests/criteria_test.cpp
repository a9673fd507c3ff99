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
#include <numbers>

#include "gtest/gtest.h"

#include "absep/constructors.hpp"
#include "absep/errors.hpp"
#include "absep/random.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace absep;

namespace {

DensityMatrix diag_state(std::vector<double> w) {
  const std::size_t d = w.size() / 2;
  return DensityMatrix(ComplexMatrix::diagonal(w), d);
}

const std::vector<double> kSixteenSeventeenths = {8.0 / 17, 4.0 / 17, 4.0 / 17, 1.0 / 17};

}  // namespace

TEST(criteria, eq1_lhs_examples) {
  EXPECT_NEAR(eq1_lhs(Spectrum({0.25, 0.25, 0.25, 0.25}), 2), -0.5, 1e-15);
  EXPECT_NEAR(eq1_lhs(Spectrum(kSixteenSeventeenths), 2), 0.0, 1e-15);
  EXPECT_NEAR(eq1_lhs(Spectrum({0.5, 0.25, 0.25, 0.0}), 2), 0.25, 1e-15);
}

TEST(criteria, eq1_lhs_rejects_length_mismatch) {
  EXPECT_THROW(eq1_lhs(Spectrum({0.25, 0.25, 0.25, 0.25}), 3), DomainError);
  EXPECT_THROW(eq1_lhs(Spectrum({0.5, 0.5}), 1), DomainError);
}

TEST(criteria, is_absolutely_separable_examples) {
  EXPECT_TRUE(is_absolutely_separable(Spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0}), 2));
  EXPECT_FALSE(is_absolutely_separable(Spectrum({1.0, 0.0, 0.0, 0.0}), 2));
  // 0.45 - 0.225 - 2 sqrt(0.225 * 0.1) = 0.225 - 0.3 < 0.
  const Spectrum q09({0.45, 0.225, 0.225, 0.1});
  EXPECT_NEAR(eq1_lhs(q09, 2), 0.225 - 0.3, 1e-15);
  EXPECT_TRUE(is_absolutely_separable(q09, 2));
}

TEST(criteria, maximal_ball_examples) {
  EXPECT_TRUE(in_maximal_ball(diag_state({0.25, 0.25, 0.25, 0.25})));
  EXPECT_FALSE(in_maximal_ball(diag_state(kSixteenSeventeenths)));
  const std::vector<double> w = {0.2, 0.2, 0.2, 0.2, 0.2, 0.0};
  EXPECT_NEAR(purity(diag_state(w)), 0.2, 1e-15);
  EXPECT_TRUE(in_maximal_ball(diag_state(w)));
  EXPECT_DOUBLE_EQ(maximal_ball_purity(2), 1.0 / 3);
  EXPECT_DOUBLE_EQ(maximal_ball_purity(3), 0.2);
}

TEST(criteria, entanglement_status_examples) {
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexVector bell{h, 0.0, 0.0, h};
  const auto bell_result = entanglement_status(DensityMatrix(ComplexMatrix::projector(bell), 2));
  EXPECT_NEAR(bell_result.pt_min_eig, -0.5, 1e-14);
  EXPECT_EQ(bell_result.status, EntanglementStatus::NptEntangled);

  EXPECT_EQ(entanglement_status(werner(0.5)).status, EntanglementStatus::NptEntangled);

  const ComplexMatrix a{{0.6, Complex(0.2, 0.1)}, {Complex(0.2, -0.1), 0.4}};
  const ComplexMatrix b{{0.9, 0.1}, {0.1, 0.1}};
  const auto product = entanglement_status(DensityMatrix(tensor(a, b), 2));
  EXPECT_EQ(product.status, EntanglementStatus::PptSeparableExact);
  EXPECT_GE(product.pt_min_eig, 0.0);

  const std::vector<double> eight(8, 0.125);
  EXPECT_EQ(entanglement_status(diag_state(eight)).status, EntanglementStatus::PptUndecided);
  const std::vector<double> six(6, 1.0 / 6);
  EXPECT_EQ(entanglement_status(diag_state(six)).status, EntanglementStatus::PptSeparableExact);
}

TEST(criteria, werner_one_third_is_ppt_boundary) {
  const auto r = entanglement_status(werner(1.0 / 3));
  EXPECT_NEAR(r.pt_min_eig, 0.0, 1e-15);
  EXPECT_NE(r.status, EntanglementStatus::NptEntangled);
}

TEST(criteria, classify_rank3_extreme_point) {
  const auto r = classify(diag_state({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0}));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_NEAR(r.eq1_lhs, 0.0, 1e-15);
  EXPECT_EQ(r.absep_class, AbsSepClass::AbsBoundary);
  EXPECT_TRUE(r.is_extreme_certified);
  EXPECT_TRUE(r.in_maximal_ball);
}

TEST(criteria, classify_maximally_mixed) {
  const auto r = classify(diag_state({0.25, 0.25, 0.25, 0.25}));
  EXPECT_EQ(r.absep_class, AbsSepClass::AbsInterior);
  EXPECT_TRUE(r.in_maximal_ball);
  EXPECT_FALSE(r.is_extreme_certified);
  EXPECT_EQ(r.entanglement_status, EntanglementStatus::PptSeparableExact);
}

TEST(criteria, classify_sixteen_seventeenths_example) {
  const auto r = classify(diag_state(kSixteenSeventeenths));
  EXPECT_EQ(r.absep_class, AbsSepClass::AbsBoundary);
  EXPECT_FALSE(r.in_maximal_ball);
  EXPECT_NEAR(r.purity, 97.0 / 289, 1e-15);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_FALSE(r.is_extreme_certified);
}

TEST(criteria, classify_band_is_configurable) {
  const auto tight = classify(diag_state({0.26, 0.25, 0.25, 0.24}), 1e-9);
  EXPECT_EQ(tight.absep_class, AbsSepClass::AbsInterior);
  const auto wide = classify(diag_state({0.26, 0.25, 0.25, 0.24}), 1.0);
  EXPECT_EQ(wide.absep_class, AbsSepClass::AbsBoundary);
}

TEST(criteria, report_invariants_on_random_states) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const double concentration = (trial % 4 == 0) ? 0.0 : 3.0;
    const auto eigs = gen::probability_vector(rng, 2 * d, concentration);
    const auto rho = random_state_with_spectrum(eigs, d, rng);
    const auto r = classify(rho);
    if (r.absep_class != AbsSepClass::NotAbsSep) EXPECT_LE(r.eq1_lhs, 1e-9);
    if (r.absep_class == AbsSepClass::AbsInterior) EXPECT_LT(r.eq1_lhs, -1e-9);
    if (r.absep_class == AbsSepClass::AbsBoundary) EXPECT_LE(std::abs(r.eq1_lhs), 1e-9);
    if (r.is_extreme_certified) {
      EXPECT_EQ(r.rank, 2 * d - 1);
      EXPECT_NE(r.absep_class, AbsSepClass::NotAbsSep);
    }
    if (r.entanglement_status == EntanglementStatus::NptEntangled) {
      EXPECT_EQ(r.absep_class, AbsSepClass::NotAbsSep);
    }
    EXPECT_NEAR(r.eq1_lhs, oracle::criterion_lhs(eigs), 1e-10);
  }
}

TEST(criteria, criterion_is_permutation_invariant) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = gen::probability_vector(rng, 6);
    const double sorted_lhs = eq1_lhs(Spectrum(v), 3);
    std::shuffle(v.begin(), v.end(), rng.engine());
    EXPECT_EQ(eq1_lhs(Spectrum(v), 3), sorted_lhs);
    EXPECT_NEAR(sorted_lhs, oracle::criterion_lhs(v), 1e-15);
  }
}

TEST(criteria, rank_deficient_spectra_are_never_absolutely_separable) {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 4);
    const std::size_t rank = 1 + static_cast<std::size_t>(rng.uniform(0.0, 1.0) * (2 * d - 2));
    auto v = gen::probability_vector(rng, std::min(rank, 2 * d - 2));
    v.resize(2 * d, 0.0);
    const Spectrum s(v);
    EXPECT_NEAR(eq1_lhs(s, d), s[0], 1e-15);
    EXPECT_FALSE(is_absolutely_separable(s, d));
  }
}

TEST(criteria, rank_2d_minus_1_characterisation) {
  Rng rng(31);
  for (std::size_t d : {2u, 3u, 4u, 5u}) {
    const std::size_t n = 2 * d;
    std::vector<double> equal(n, 1.0 / static_cast<double>(n - 1));
    equal.back() = 0.0;
    EXPECT_TRUE(is_absolutely_separable(Spectrum(equal), d));
    EXPECT_TRUE(is_certified_extreme(Spectrum(equal), d));
    for (int trial = 0; trial < 50; ++trial) {
      auto v = gen::probability_vector(rng, n - 1, 1.0);
      v.push_back(0.0);
      const bool all_equal = v.front() - v[n - 2] <= 1e-12;
      ASSERT_FALSE(all_equal);
      EXPECT_FALSE(is_absolutely_separable(Spectrum(v), d));
      EXPECT_FALSE(is_certified_extreme(Spectrum(v), d));
    }
  }
}

TEST(criteria, convex_mixtures_stay_absolutely_separable) {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_state_with_spectrum(gen::absep_spectrum(rng, 4), 2, rng);
    const auto b = random_state_with_spectrum(gen::absep_spectrum(rng, 4), 2, rng);
    const double w = rng.uniform();
    const DensityMatrix mix(w * a.matrix() + (1.0 - w) * b.matrix(), 2);
    EXPECT_TRUE(is_absolutely_separable(spectrum(mix), 2)) << "trial " << trial;
  }
}

TEST(criteria, npt_states_are_not_absolutely_separable) {
  Rng rng(41);
  int npt_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto eigs = gen::probability_vector(rng, 4);
    // Cubing concentrates the weight, which makes entangled samples common.
    double total = 0.0;
    for (auto& x : eigs) total += (x = x * x * x);
    for (auto& x : eigs) x /= total;
    const auto rho = random_state_with_spectrum(eigs, 2, rng);
    const auto ppt = entanglement_status(rho);
    if (ppt.status == EntanglementStatus::NptEntangled) {
      ++npt_seen;
      EXPECT_FALSE(is_absolutely_separable(spectrum(rho), 2));
    }
  }
  EXPECT_GT(npt_seen, 50);
}

TEST(criteria, interior_decompose_matches_quadratic_oracle) {
  const Spectrum s({0.3, 0.27, 0.23, 0.2});
  EXPECT_NEAR(eq1_lhs(s, 2), 0.3 - 0.23 - 2.0 * std::sqrt(0.054), 1e-15);
  // eps^2 - (l2 + l4) eps + l2 l4 - ((l1 - l3) / 2)^2 = 0
  const auto roots = oracle::quadratic_roots(1.0, -(0.27 + 0.2), 0.27 * 0.2 - 0.035 * 0.035);
  const auto dec = interior_decompose(s, 2);
  EXPECT_NEAR(dec.epsilon, roots.first, 1e-14);
  EXPECT_NEAR(dec.epsilon, 0.18550, 1e-5);
  EXPECT_GT(dec.epsilon, 0.0);
  EXPECT_LE(dec.epsilon, 0.2);
  EXPECT_NEAR(dec.mixing_weight, 4.0 * dec.epsilon, 1e-15);
  std::vector<double> sigma(dec.boundary_spectrum.values().begin(),
                            dec.boundary_spectrum.values().end());
  EXPECT_LE(std::abs(oracle::criterion_lhs(sigma)), 1e-9);
}

TEST(criteria, interior_decompose_near_maximally_mixed) {
  const Spectrum s({0.26, 0.25, 0.25, 0.24});
  const auto dec = interior_decompose(s, 2);
  const auto roots = oracle::quadratic_roots(1.0, -(0.25 + 0.24), 0.25 * 0.24 - 0.005 * 0.005);
  EXPECT_NEAR(dec.epsilon, roots.first, 1e-13);
  EXPECT_GT(dec.epsilon, 0.0);
  EXPECT_LE(dec.epsilon, 0.24);
  EXPECT_LE(std::abs(eq1_lhs(dec.boundary_spectrum, 2)), 1e-9);
}

TEST(criteria, interior_decompose_rejects_boundary_exterior_and_mixed) {
  EXPECT_THROW(interior_decompose(Spectrum(kSixteenSeventeenths), 2), DomainError);
  EXPECT_THROW(interior_decompose(Spectrum({0.5, 0.25, 0.25, 0.0}), 2), DomainError);
  EXPECT_THROW(interior_decompose(Spectrum({0.25, 0.25, 0.25, 0.25}), 2), DomainError);
}

TEST(criteria, interior_decompose_round_trip_property) {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const std::size_t n = 2 * d;
    const auto v = gen::absep_spectrum(rng, n, -1e-6);
    const Spectrum s(v);
    const auto dec = interior_decompose(s, d);
    ASSERT_GT(dec.epsilon, 0.0);
    ASSERT_LE(dec.epsilon, s[n - 1]);
    const double scale = 1.0 - static_cast<double>(n) * dec.epsilon;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(scale * dec.boundary_spectrum[i] + dec.epsilon, s[i], 1e-10);
    }
    const auto r = classify(DensityMatrix(ComplexMatrix::diagonal(dec.boundary_spectrum.values()), d));
    EXPECT_EQ(r.absep_class, AbsSepClass::AbsBoundary);
  }
}

TEST(criteria, rotated_extreme_points_sit_exactly_on_boundary) {
  // The kernel eigenvalue comes back as rounding noise; without snapping it to
  // zero, 2 sqrt(lambda2 lambda4) alone would move eq1_lhs by ~1e-8.
  Rng rng(47);
  const std::vector<double> w = {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0};
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = random_state_with_spectrum(w, 2, rng);
    EXPECT_LE(std::abs(eq1_lhs(spectrum(rho), 2)), 1e-14) << "trial " << trial;
    EXPECT_EQ(classify(rho).absep_class, AbsSepClass::AbsBoundary);
  }
}

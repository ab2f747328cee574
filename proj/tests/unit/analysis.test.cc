// Copyright 2026 The hexmon Authors
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

#include "hexmon/analysis.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "hexmon/special_functions.h"

using namespace hexmon;

namespace {

EntropyCurve synthetic_page_curve(std::size_t L, const std::array<double, 5>& coef, double noise,
                                  std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  EntropyCurve curve{L, {}};
  for (std::size_t l = 0; l <= L; ++l) {
    double s = 0;
    if (l > 0 && l < L) {
      const double chord = log_chord(l, L) / 3.0;
      s = coef[0] * vol_term(l, L) + coef[1] * static_cast<double>(L) * chord + coef[2] * chord +
          coef[3] * static_cast<double>(L) - coef[4];
    }
    curve.points.push_back({static_cast<double>(l), s + noise * normal(gen), noise});
  }
  return curve;
}

}  // namespace

TEST(analysis, vol_term_values) {
  // L = 2, N = 8: l = 1 gives 4 - 2^(8-8-1)/ln 2.
  EXPECT_NEAR(vol_term(1, 2), 4.0 - 0.5 / std::numbers::ln2, 1e-15);
  // L = 4, N = 32: l = 1 gives 8 - 2^(16-33)/ln 2; l = 2 gives 16 - 2^-1/ln 2.
  EXPECT_NEAR(vol_term(1, 4), 8.0 - std::ldexp(1.0, -17) / std::numbers::ln2, 1e-15);
  EXPECT_NEAR(vol_term(2, 4), 16.0 - 0.5 / std::numbers::ln2, 1e-14);
  EXPECT_EQ(vol_term(3, 4), vol_term(1, 4));
  EXPECT_EQ(vol_term(0, 4), 0.0 - std::ldexp(1.0, -33) / std::numbers::ln2);
  // Deep underflow is exactly the bare volume term.
  EXPECT_EQ(vol_term(3, 36), 216.0);
  EXPECT_THROW(vol_term(5, 4), std::out_of_range);
}

TEST(analysis, log_chord_values) {
  EXPECT_NEAR(log_chord(6, 12), std::log(12.0 / std::numbers::pi), 1e-15);
  EXPECT_NEAR(log_chord(2, 12), std::log(12.0 / std::numbers::pi * 0.5), 1e-15);
  EXPECT_THROW(log_chord(0, 12), std::domain_error);
  EXPECT_THROW(log_chord(12, 12), std::domain_error);
}

TEST(analysis, fit_window) {
  const FitWindow w;
  EXPECT_FALSE(w.contains(1, 12));
  EXPECT_TRUE(w.contains(2, 12));
  EXPECT_TRUE(w.contains(10, 12));
  EXPECT_FALSE(w.contains(11, 12));
}

TEST(analysis, page_ansatz_recovers_exact_coefficients) {
  std::mt19937_64 gen(1);
  const std::array<double, 5> truth = {0.01, 0.83, -0.4, 0.27, 1.5};
  std::vector<EntropyCurve> curves;
  for (const std::size_t L : {18, 24, 30, 36}) {
    curves.push_back(synthetic_page_curve(L, truth, 0.0, gen));
  }
  const PageAnsatzFit fit = fit_page_ansatz(curves);
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(fit.coefficients[k], truth[k], 1e-8 * std::max(1.0, std::abs(truth[k]))) << k;
  }
  EXPECT_LT(fit.residual_norm, 1e-8);
  EXPECT_EQ(fit.num_points, 15u + 21u + 27u + 33u);
  EXPECT_NEAR(fit.evaluate(7, 24), curves[1].points[7].mean, 1e-8);
}

TEST(analysis, page_ansatz_errors_cover_truth_under_noise) {
  const std::array<double, 5> truth = {0.002, 0.83, 0.5, 0.1, 1.0};
  int covered = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 gen(100 + trial);
    std::vector<EntropyCurve> curves;
    for (const std::size_t L : {18, 24, 30, 36}) {
      curves.push_back(synthetic_page_curve(L, truth, 0.05, gen));
    }
    const PageAnsatzFit fit = fit_page_ansatz(curves);
    covered += std::abs(fit.c() - truth[1]) < fit.stderrs[1];
    EXPECT_NEAR(fit.reduced_chi2, 1.0, 0.5);
  }
  // One-sigma coverage of 68% with binomial spread.
  EXPECT_NEAR(covered / static_cast<double>(trials), 0.683, 0.1);
}

TEST(analysis, page_ansatz_names_confounded_parameters) {
  std::mt19937_64 gen(2);
  const std::vector<EntropyCurve> one = {synthetic_page_curve(24, {0, 0.8, 0, 0.1, 1}, 0.0, gen)};
  try {
    fit_page_ansatz(one);
    FAIL() << "expected DegeneracyError";
  } catch (const DegeneracyError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("(c, c_prime)"), std::string::npos) << what;
    EXPECT_NE(what.find("(a, gamma)"), std::string::npos) << what;
    EXPECT_EQ(e.pairs().size(), 2u);
  }
}

TEST(analysis, page_ansatz_weights) {
  // A single wildly wrong point with a huge error bar barely moves the fit.
  std::mt19937_64 gen(3);
  const std::array<double, 5> truth = {0.0, 0.8, 0.2, 0.1, 1.0};
  std::vector<EntropyCurve> curves;
  for (const std::size_t L : {16, 20, 24}) {
    curves.push_back(synthetic_page_curve(L, truth, 0.0, gen));
    for (auto& pt : curves.back().points) {
      pt.stderr = 0.01;
    }
  }
  curves[1].points[5].mean += 100.0;
  curves[1].points[5].stderr = 1e6;
  const PageAnsatzFit fit = fit_page_ansatz(curves);
  EXPECT_NEAR(fit.c(), 0.8, 1e-6);
}

TEST(analysis, cft_collapse_recovers_c) {
  std::mt19937_64 gen(4);
  std::vector<EntropyCurve> curves;
  for (const std::size_t L : {16, 24}) {
    curves.push_back(synthetic_page_curve(L, {0.0, 0.827, 0.0, 0.3, 2.0}, 0.0, gen));
  }
  const CftFit fit = fit_cft_collapse(curves);
  EXPECT_NEAR(fit.c, 0.827, 1e-10);
  EXPECT_LT(fit.residual_norm, 1e-10);
  EXPECT_EQ(fit.num_points, 12u + 20u);
  std::vector<EntropyCurve> odd = {synthetic_page_curve(15, {0.0, 0.8, 0.0, 0.3, 2.0}, 0.0, gen)};
  EXPECT_THROW(fit_cft_collapse(odd), std::invalid_argument);
}

TEST(analysis, ln_sine_fit) {
  EntropyCurve curve{24, {}};
  for (std::size_t l = 0; l <= 24; ++l) {
    const double s = l == 0 || l == 24 ? 0.0 : 5.0 + 2.0 * std::log(std::sin(std::numbers::pi * l / 24.0)) / 3.0;
    curve.points.push_back({static_cast<double>(l), s, 0.0});
  }
  const LnSineFit fit = fit_ln_sine(curve);
  EXPECT_NEAR(fit.constant, 5.0, 1e-10);
  EXPECT_NEAR(fit.k, 2.0, 1e-10);
  EXPECT_LT(fit.residual_norm, 1e-10);
}

namespace {

EntropyCurve lifshitz_curve(std::size_t L, double a, double beta, double lambda, double noise, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  EntropyCurve curve{L, {}};
  for (std::size_t l = 0; l <= L; ++l) {
    const double x = static_cast<double>(l) / static_cast<double>(L);
    const double s = l == 0 || l == L ? 0.0 : a * static_cast<double>(L) + beta * lifshitz_J(x, lambda);
    curve.points.push_back({static_cast<double>(l), s + noise * normal(gen), noise});
  }
  return curve;
}

}  // namespace

TEST(analysis, lifshitz_recovers_parameters) {
  std::mt19937_64 gen(5);
  for (const double lambda : {1.0, 2.63, 3.8, 8.0}) {
    const EntropyCurve curve = lifshitz_curve(24, 0.4, 1.3, lambda, 0.0, gen);
    const LifshitzFit fit = fit_lifshitz(curve);
    EXPECT_NEAR(fit.lambda, lambda, 0.02 * lambda);
    EXPECT_NEAR(fit.beta, 1.3, 0.02 * 1.3);
    EXPECT_NEAR(fit.a, 0.4, 1e-3);
    EXPECT_EQ(fit.profile.size(), 241u);
  }
  const EntropyCurve noisy = lifshitz_curve(24, 0.4, 1.3, 3.8, 1e-3, gen);
  const LifshitzFit fit = fit_lifshitz(noisy);
  EXPECT_NEAR(fit.lambda, 3.8, 0.02 * 3.8);
  EXPECT_NEAR(fit.beta, 1.3, 0.02 * 1.3);
}

TEST(analysis, lifshitz_beats_ln_sine_on_lifshitz_data) {
  std::mt19937_64 gen(6);
  const EntropyCurve curve = lifshitz_curve(24, 0.4, 1.0, 3.8, 1e-3, gen);
  EXPECT_LT(fit_lifshitz(curve).residual_norm, fit_ln_sine(curve).residual_norm);
}

TEST(analysis, lifshitz_flat_data) {
  // Constant data: zero residual everywhere, beta = 0.
  EntropyCurve flat{24, {}};
  for (std::size_t l = 0; l <= 24; ++l) {
    flat.points.push_back({static_cast<double>(l), 3.0, 0.0});
  }
  const LifshitzFit fit = fit_lifshitz(flat);
  EXPECT_NEAR(fit.beta, 0.0, 1e-10);
  EXPECT_NEAR(fit.a * 24, 3.0, 1e-10);
  // Pure alternating noise is orthogonal to every J; the residual profile is flat and nonzero.
  EntropyCurve zigzag{24, {}};
  for (std::size_t l = 0; l <= 24; ++l) {
    zigzag.points.push_back({static_cast<double>(l), 3.0, 0.0});
  }
  // A J-independent residual needs a vector orthogonal to 1 and to every J(x; lambda);
  // antisymmetric about x = 1/2 works since J is symmetric.
  for (std::size_t l = 2; l <= 22; ++l) {
    zigzag.points[l].mean += static_cast<double>(l) - 12.0;
  }
  EXPECT_THROW(fit_lifshitz(zigzag), FitConvergenceError);
}

TEST(analysis, tmi_crossing_recovers_synthetic_scaling) {
  std::vector<TmiPoint> data;
  const double pc = 0.683;
  const double nu_inv = 1.0;
  for (const std::size_t L : {12, 16, 20}) {
    for (int k = 0; k <= 50; ++k) {
      const double p = 0.5 + 0.01 * k;
      const double x = (p - pc) * std::pow(static_cast<double>(L), nu_inv);
      data.push_back({L, p, -1.0 + 2.0 * std::tanh(x), 0.01});
    }
  }
  const CrossingResult r = tmi_crossing(data);
  EXPECT_EQ(r.crossings.size(), 3u);
  // Linear interpolation of tanh near the zero of I_L1 - I_L2 is accurate to O(dp^2).
  EXPECT_NEAR(r.p_c, pc, 1e-3);
  EXPECT_NEAR(r.nu_inverse, nu_inv, 0.02);
  EXPECT_GT(r.p_c_stderr, 0.0);
  EXPECT_LT(collapse_cost(data, pc, 1.0), collapse_cost(data, pc, 0.5));
}

TEST(analysis, tmi_crossing_without_crossing_throws) {
  std::vector<TmiPoint> data;
  for (const std::size_t L : {12, 16}) {
    for (int k = 0; k <= 10; ++k) {
      data.push_back({L, 0.1 * k, static_cast<double>(L), 0.1});
    }
  }
  EXPECT_THROW(tmi_crossing(data), NoCrossingError);
  const std::vector<TmiPoint> one_size = {{12, 0.1, 0, 0}, {12, 0.2, 1, 0}};
  EXPECT_THROW(tmi_crossing(one_size), std::invalid_argument);
}

TEST(analysis, page_ansatz_on_pure_volume_data) {
  std::mt19937_64 gen(7);
  std::vector<EntropyCurve> curves;
  for (const std::size_t L : {18, 24, 30}) {
    curves.push_back(synthetic_page_curve(L, {0.3, 0, 0, 0, 0}, 1e-4, gen));
  }
  const PageAnsatzFit fit = fit_page_ansatz(curves);
  EXPECT_NEAR(fit.v(), 0.3, 5 * fit.stderrs[0]);
  EXPECT_NEAR(fit.c(), 0.0, 5 * fit.stderrs[1]);
  EXPECT_NEAR(fit.c_prime(), 0.0, 5 * fit.stderrs[2]);
}

TEST(analysis, page_ansatz_residual_matches_evaluate) {
  std::mt19937_64 gen(8);
  std::vector<EntropyCurve> curves;
  for (const std::size_t L : {16, 20, 24}) {
    curves.push_back(synthetic_page_curve(L, {0.01, 0.8, 0.3, 0.2, 1.0}, 0.02, gen));
  }
  const PageAnsatzFit fit = fit_page_ansatz(curves);
  double chi2 = 0;
  for (const auto& curve : curves) {
    for (const auto& pt : curve.points) {
      const auto l = static_cast<std::size_t>(pt.x);
      if (fit.window.contains(l, curve.L)) {
        const double r = (pt.mean - fit.evaluate(l, curve.L)) / pt.stderr;
        chi2 += r * r;
      }
    }
  }
  EXPECT_NEAR(std::sqrt(chi2), fit.residual_norm, 1e-9 * fit.residual_norm);
}

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

#ifndef HEXMON_ANALYSIS_H
#define HEXMON_ANALYSIS_H

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hexmon/observables.h"

namespace hexmon {

/// Design matrix of a linear fit is rank deficient; what() names the confounded parameters.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, std::vector<std::pair<std::string, std::string>> pairs)
      : std::runtime_error(what), pairs_(std::move(pairs)) {}
  const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

/// Objective is flat over the whole scan; what() carries the scan profile.
class FitConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No pair of sizes crosses inside the scanned window.
class NoCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cut positions used by the arc fits: l_min <= l <= L - l_min.
struct FitWindow {
  std::size_t l_min = 2;
  bool contains(std::size_t l, std::size_t L) const { return l >= l_min && l + l_min <= L; }
};

/// Page-corrected volume term in bits: 2Ll - 2^(4Ll-N-1)/ln 2 with N = 2L^2,
/// using L - l for l > L/2.
double vol_term(std::size_t l, std::size_t L);

/// ln[(L/pi) sin(pi l / L)].
double log_chord(std::size_t l, std::size_t L);

inline constexpr std::array<const char*, 5> kPageParameterNames = {"v", "c", "c_prime", "a", "gamma"};

/// S(l, L) = v vol(l, L) + c L log_chord/3 + c' log_chord/3 + a L - gamma, in bits.
struct PageAnsatzFit {
  std::array<double, 5> coefficients{};  // v, c, c_prime, a, gamma
  std::array<double, 5> stderrs{};
  std::array<std::array<double, 5>, 5> covariance{};
  double residual_norm = 0;  // sqrt of the weighted sum of squared residuals
  double reduced_chi2 = 0;
  std::size_t num_points = 0;
  FitWindow window;

  double v() const { return coefficients[0]; }
  double c() const { return coefficients[1]; }
  double c_prime() const { return coefficients[2]; }
  double a() const { return coefficients[3]; }
  double gamma() const { return coefficients[4]; }
  double evaluate(std::size_t l, std::size_t L) const;
};

/// Joint weighted linear least squares over all curves (weights 1/stderr^2;
/// unit weights when every stderr is zero).
PageAnsatzFit fit_page_ansatz(std::span<const EntropyCurve> curves, FitWindow window = {});

struct CftFit {
  double c = 0;
  double c_stderr = 0;
  double residual_norm = 0;
  std::size_t num_points = 0;
};

/// One-parameter fit of (S(l) - S(L/2))/L = c ln sin(pi l/L)/3 over all curves.
CftFit fit_cft_collapse(std::span<const EntropyCurve> curves, FitWindow window = {});

/// S(l) = s0 + (k/3) ln sin(pi l / L): the best ln-sine description of one arc.
struct LnSineFit {
  double constant = 0;
  double k = 0;
  double residual_norm = 0;
};
LnSineFit fit_ln_sine(const EntropyCurve& curve, FitWindow window = {});

struct LifshitzOptions {
  double lambda_min = 0.05;
  double lambda_max = 50.0;
  std::size_t grid_points = 241;
  double tolerance = 1e-10;  // relative, on lambda
};

/// S(l) = a L + beta J(l/L; lambda).
struct LifshitzFit {
  double beta = 0;
  double lambda = 0;
  double a = 0;
  double residual_norm = 0;
  std::vector<std::pair<double, double>> profile;  // (lambda, residual_norm) on the scan grid
};
LifshitzFit fit_lifshitz(const EntropyCurve& curve, FitWindow window = {}, const LifshitzOptions& options = {});

struct TmiPoint {
  std::size_t L = 0;
  double p = 0;
  double mean = 0;
  double stderr = 0;
};

struct PairCrossing {
  std::size_t L1 = 0;
  std::size_t L2 = 0;
  double p = 0;
  double stderr = 0;
};

struct CrossingResult {
  double p_c = 0;
  double p_c_stderr = 0;
  double nu_inverse = 0;
  double collapse_cost = 0;
  std::vector<PairCrossing> crossings;
};

struct CrossingOptions {
  double nu_inverse_min = 0.2;
  double nu_inverse_max = 3.0;
  std::size_t grid_points = 281;
};

/// Pairwise linear-interpolation crossings of I(p) between sizes, their weighted
/// mean p_c, and 1/nu minimizing the collapse cost of I against (p - p_c) L^(1/nu).
CrossingResult tmi_crossing(std::span<const TmiPoint> data, const CrossingOptions& options = {});

/// Mean squared normalized deviation between each curve and the piecewise-linear
/// interpolation of every other curve at equal scaled abscissa.
double collapse_cost(std::span<const TmiPoint> data, double p_c, double nu_inverse);

}  // namespace hexmon

#endif  // HEXMON_ANALYSIS_H

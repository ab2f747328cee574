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

#include "hexmon/special_functions.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexmon {

namespace {

void require_positive(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error(std::string(what) + ": argument must be positive and finite, got " + std::to_string(t));
  }
}

}  // namespace

double theta3(double t) {
  require_positive(t, "theta3");
  double sum = 0.0;
  for (long n = 1;; ++n) {
    const double term = std::exp(-std::numbers::pi * t * static_cast<double>(n * n));
    sum += term;
    if (term < kSeriesCutoff) {
      break;
    }
  }
  return 1.0 + 2.0 * sum;
}

double log_theta3(double t) { return std::log(theta3(t)); }

double log_dedekind_eta(double t) {
  require_positive(t, "dedekind_eta");
  double acc = -std::numbers::pi * t / 12.0;
  const double q = std::exp(-2.0 * std::numbers::pi * t);
  double qn = q;
  while (qn >= kSeriesCutoff) {
    acc += std::log1p(-qn);
    qn *= q;
  }
  return acc;
}

double dedekind_eta(double t) { return std::exp(log_dedekind_eta(t)); }

double lifshitz_J(double x, double lambda) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("lifshitz_J: x must lie in (0, 1), got " + std::to_string(x));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("lifshitz_J: lambda must be positive, got " + std::to_string(lambda));
  }
  const double y = 1.0 - x;
  return -(log_theta3(lambda * x) + log_theta3(lambda * y)) + log_dedekind_eta(2.0 * x) +
         log_dedekind_eta(2.0 * y);
}

}  // namespace hexmon

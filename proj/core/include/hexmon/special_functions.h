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

#ifndef HEXMON_SPECIAL_FUNCTIONS_H
#define HEXMON_SPECIAL_FUNCTIONS_H

namespace hexmon {

/// Jacobi theta_3 on the imaginary axis: theta3(i t) = sum_n exp(-pi t n^2), t > 0.
double theta3(double t);
double log_theta3(double t);

/// Dedekind eta on the imaginary axis: eta(i t) = exp(-pi t / 12) prod_{n>=1} (1 - exp(-2 pi n t)), t > 0.
double dedekind_eta(double t);
double log_dedekind_eta(double t);

/// Quantum Lifshitz scaling function
///   J(x) = -ln[theta3(i lambda x) theta3(i lambda (1-x)) / (eta(2 i x) eta(2 i (1-x)))]
/// for 0 < x < 1 and lambda > 0.
double lifshitz_J(double x, double lambda);

/// Series terms below this are dropped.
inline constexpr double kSeriesCutoff = 1e-15;

}  // namespace hexmon

#endif  // HEXMON_SPECIAL_FUNCTIONS_H

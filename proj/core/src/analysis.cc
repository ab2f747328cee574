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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

#include "hexmon/special_functions.h"

namespace hexmon {

namespace {

struct LinearSolution {
  Eigen::VectorXd coef;
  Eigen::MatrixXd covariance;
  double residual_norm = 0;
  double chi2 = 0;
};

// Weighted linear least squares. Columns are normalized before the SVD so the
// degeneracy threshold is scale free.
LinearSolution weighted_linear_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& w,
                                   std::span<const char* const> names) {
  const Eigen::VectorXd sw = w.array().sqrt();
  Eigen::MatrixXd xw = sw.asDiagonal() * x;
  const Eigen::VectorXd yw = sw.cwiseProduct(y);
  Eigen::VectorXd scale(x.cols());
  for (Eigen::Index k = 0; k < x.cols(); ++k) {
    scale(k) = xw.col(k).norm();
    if (scale(k) == 0.0) {
      throw DegeneracyError(std::string("degenerate design: parameter '") + names[k] + "' has an all-zero basis function",
                            {{names[k], names[k]}});
    }
    xw.col(k) /= scale(k);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(xw, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (xw.rows() < xw.cols() || sv(sv.size() - 1) < 1e-9 * sv(0)) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (Eigen::Index i = 0; i < xw.cols(); ++i) {
      for (Eigen::Index j = i + 1; j < xw.cols(); ++j) {
        if (std::abs(xw.col(i).dot(xw.col(j))) > 1.0 - 1e-10) {
          pairs.emplace_back(names[i], names[j]);
        }
      }
    }
    std::ostringstream msg;
    msg << "degenerate design:";
    if (pairs.empty()) {
      // No single pair is collinear; report the parameters in the null direction.
      const Eigen::VectorXd null = svd.matrixV().col(xw.cols() - 1);
      msg << " combination of";
      for (Eigen::Index k = 0; k < null.size(); ++k) {
        if (std::abs(null(k)) > 0.1) {
          msg << ' ' << names[k];
        }
      }
      msg << " is unconstrained";
    } else {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        msg << (k ? " and" : "") << " (" << pairs[k].first << ", " << pairs[k].second << ")";
      }
      msg << (pairs.size() > 1 ? " are" : " is") << " confounded";
    }
    throw DegeneracyError(msg.str(), pairs);
  }
  LinearSolution out;
  const Eigen::VectorXd scaled = svd.solve(yw);
  out.coef = scaled.cwiseQuotient(scale);
  const Eigen::MatrixXd v = svd.matrixV();
  const Eigen::VectorXd inv_s2 = sv.array().square().inverse();
  Eigen::MatrixXd cov_scaled = v * inv_s2.asDiagonal() * v.transpose();
  out.covariance = scale.asDiagonal().inverse() * cov_scaled * scale.asDiagonal().inverse();
  const Eigen::VectorXd r = yw - xw * scaled;
  out.chi2 = r.squaredNorm();
  out.residual_norm = std::sqrt(out.chi2);
  return out;
}

// Weights 1/stderr^2. All-zero stderrs give unit weights; isolated zeros take the
// smallest positive stderr so deterministic points do not dominate.
Eigen::VectorXd weights_from(const std::vector<double>& stderrs) {
  double floor = std::numeric_limits<double>::infinity();
  for (const double s : stderrs) {
    if (s > 0) {
      floor = std::min(floor, s);
    }
  }
  Eigen::VectorXd w(static_cast<Eigen::Index>(stderrs.size()));
  for (std::size_t k = 0; k < stderrs.size(); ++k) {
    if (!std::isfinite(floor)) {
      w(k) = 1.0;
    } else {
      const double s = stderrs[k] > 0 ? stderrs[k] : floor;
      w(k) = 1.0 / (s * s);
    }
  }
  return w;
}

const CurvePoint& point_at(const EntropyCurve& curve, std::size_t l) {
  for (const auto& pt : curve.points) {
    if (static_cast<std::size_t>(std::llround(pt.x)) == l) {
      return pt;
    }
  }
  throw std::invalid_argument("entropy curve for L=" + std::to_string(curve.L) + " has no point at l=" +
                              std::to_string(l));
}

void require_curve(const EntropyCurve& curve, const char* what) {
  if (curve.L < 2) {
    throw std::invalid_argument(std::string(what) + ": curve has L < 2");
  }
}

}  // namespace

double vol_term(std::size_t l, std::size_t L) {
  if (l > L) {
    throw std::out_of_range("vol_term: l exceeds L");
  }
  const std::size_t lr = 2 * l > L ? L - l : l;
  const long long exponent = 4LL * static_cast<long long>(L * lr) - 2LL * static_cast<long long>(L * L) - 1;
  const double correction = exponent < -1100 ? 0.0 : std::ldexp(1.0, static_cast<int>(exponent)) / std::numbers::ln2;
  return 2.0 * static_cast<double>(L * lr) - correction;
}

double log_chord(std::size_t l, std::size_t L) {
  if (l == 0 || l >= L) {
    throw std::domain_error("log_chord: l must lie strictly between 0 and L");
  }
  const double Ld = static_cast<double>(L);
  return std::log(Ld / std::numbers::pi * std::sin(std::numbers::pi * static_cast<double>(l) / Ld));
}

double PageAnsatzFit::evaluate(std::size_t l, std::size_t L) const {
  const double chord = log_chord(l, L) / 3.0;
  return coefficients[0] * vol_term(l, L) + coefficients[1] * static_cast<double>(L) * chord +
         coefficients[2] * chord + coefficients[3] * static_cast<double>(L) - coefficients[4];
}

PageAnsatzFit fit_page_ansatz(std::span<const EntropyCurve> curves, FitWindow window) {
  if (curves.empty()) {
    throw std::invalid_argument("fit_page_ansatz: no curves");
  }
  std::vector<std::array<double, 5>> rows;
  std::vector<double> ys;
  std::vector<double> errs;
  for (const auto& curve : curves) {
    require_curve(curve, "fit_page_ansatz");
    for (const auto& pt : curve.points) {
      const auto l = static_cast<std::size_t>(std::llround(pt.x));
      if (!window.contains(l, curve.L)) {
        continue;
      }
      const double chord = log_chord(l, curve.L) / 3.0;
      const double Ld = static_cast<double>(curve.L);
      rows.push_back({vol_term(l, curve.L), Ld * chord, chord, Ld, -1.0});
      ys.push_back(pt.mean);
      errs.push_back(pt.stderr);
    }
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd x(n, 5);
  Eigen::VectorXd y(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (int k = 0; k < 5; ++k) {
      x(r, k) = rows[r][k];
    }
    y(r) = ys[r];
  }
  const LinearSolution sol = weighted_linear_fit(x, y, weights_from(errs), kPageParameterNames);
  PageAnsatzFit fit;
  for (int k = 0; k < 5; ++k) {
    fit.coefficients[k] = sol.coef(k);
    fit.stderrs[k] = std::sqrt(sol.covariance(k, k));
    for (int m = 0; m < 5; ++m) {
      fit.covariance[k][m] = sol.covariance(k, m);
    }
  }
  fit.residual_norm = sol.residual_norm;
  fit.num_points = rows.size();
  fit.reduced_chi2 = rows.size() > 5 ? sol.chi2 / static_cast<double>(rows.size() - 5) : 0.0;
  fit.window = window;
  return fit;
}

CftFit fit_cft_collapse(std::span<const EntropyCurve> curves, FitWindow window) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> errs;
  for (const auto& curve : curves) {
    require_curve(curve, "fit_cft_collapse");
    if (curve.L % 2) {
      throw std::invalid_argument("fit_cft_collapse: L must be even, got " + std::to_string(curve.L));
    }
    const CurvePoint& mid = point_at(curve, curve.L / 2);
    const double Ld = static_cast<double>(curve.L);
    for (const auto& pt : curve.points) {
      const auto l = static_cast<std::size_t>(std::llround(pt.x));
      if (!window.contains(l, curve.L) || l == curve.L / 2) {
        continue;
      }
      xs.push_back(std::log(std::sin(std::numbers::pi * static_cast<double>(l) / Ld)) / 3.0);
      ys.push_back((pt.mean - mid.mean) / Ld);
      errs.push_back(std::hypot(pt.stderr, mid.stderr) / Ld);
    }
  }
  if (xs.empty()) {
    throw std::invalid_argument("fit_cft_collapse: no points inside the fit window");
  }
  const Eigen::VectorXd w = weights_from(errs);
  double sxx = 0;
  double sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += w(k) * xs[k] * xs[k];
    sxy += w(k) * xs[k] * ys[k];
  }
  CftFit fit;
  fit.c = sxy / sxx;
  double chi2 = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    chi2 += w(k) * (ys[k] - fit.c * xs[k]) * (ys[k] - fit.c * xs[k]);
  }
  fit.c_stderr = std::sqrt(1.0 / sxx);
  fit.residual_norm = std::sqrt(chi2);
  fit.num_points = xs.size();
  return fit;
}

namespace {

struct ArcData {
  std::vector<double> x;  // l / L
  Eigen::VectorXd y;
  Eigen::VectorXd w;
};

ArcData arc_data(const EntropyCurve& curve, FitWindow window, const char* what) {
  require_curve(curve, what);
  ArcData out;
  std::vector<double> ys;
  std::vector<double> errs;
  for (const auto& pt : curve.points) {
    const auto l = static_cast<std::size_t>(std::llround(pt.x));
    if (window.contains(l, curve.L)) {
      out.x.push_back(static_cast<double>(l) / static_cast<double>(curve.L));
      ys.push_back(pt.mean);
      errs.push_back(pt.stderr);
    }
  }
  if (out.x.size() < 3) {
    throw std::invalid_argument(std::string(what) + ": fewer than 3 points inside the fit window");
  }
  out.y = Eigen::Map<const Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
  out.w = weights_from(errs);
  return out;
}

constexpr std::array<const char*, 2> kTwoNames = {"constant", "slope"};

LinearSolution two_parameter_fit(const ArcData& data, const std::vector<double>& basis) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(basis.size()), 2);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    x(k, 0) = 1.0;
    x(k, 1) = basis[k];
  }
  return weighted_linear_fit(x, data.y, data.w, kTwoNames);
}

}  // namespace

LnSineFit fit_ln_sine(const EntropyCurve& curve, FitWindow window) {
  const ArcData data = arc_data(curve, window, "fit_ln_sine");
  std::vector<double> basis;
  for (const double x : data.x) {
    basis.push_back(std::log(std::sin(std::numbers::pi * x)) / 3.0);
  }
  const LinearSolution sol = two_parameter_fit(data, basis);
  return {sol.coef(0), sol.coef(1), sol.residual_norm};
}

LifshitzFit fit_lifshitz(const EntropyCurve& curve, FitWindow window, const LifshitzOptions& options) {
  if (curve.L % 2) {
    throw std::invalid_argument("fit_lifshitz: L must be even, got " + std::to_string(curve.L));
  }
  if (!(options.lambda_min > 0 && options.lambda_max > options.lambda_min) || options.grid_points < 3) {
    throw std::invalid_argument("fit_lifshitz: bad lambda scan options");
  }
  const ArcData data = arc_data(curve, window, "fit_lifshitz");
  // J(x; lambda) is symmetric about x = 1/2 and the constant absorbs a L.
  auto solve_at = [&](double lambda) {
    std::vector<double> basis;
    for (const double x : data.x) {
      basis.push_back(lifshitz_J(x, lambda));
    }
    return two_parameter_fit(data, basis);
  };
  LifshitzFit fit;
  const double log_lo = std::log(options.lambda_min);
  const double log_hi = std::log(options.lambda_max);
  const std::size_t n = options.grid_points;
  std::size_t best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(k) / static_cast<double>(n - 1));
    const double r = solve_at(lambda).residual_norm;
    fit.profile.emplace_back(lambda, r);
    if (r < fit.profile[best].second) {
      best = k;
    }
  }
  double worst = 0;
  for (const auto& [lambda, r] : fit.profile) {
    worst = std::max(worst, r);
  }
  const double best_r = fit.profile[best].second;
  const double scale = std::max(1.0, data.y.cwiseAbs().maxCoeff());
  const bool exact = best_r <= 1e-12 * scale * std::sqrt(data.w.maxCoeff());
  if (!exact && worst - best_r <= 1e-12 * worst) {
    std::ostringstream msg;
    msg << "fit_lifshitz: residual is flat in lambda; profile:";
    for (std::size_t k = 0; k < fit.profile.size(); k += std::max<std::size_t>(1, n / 12)) {
      msg << " (" << fit.profile[k].first << ", " << fit.profile[k].second << ")";
    }
    throw FitConvergenceError(msg.str());
  }
  double lambda = fit.profile[best].first;
  if (!exact) {
    // Golden-section search in log lambda over the bracketing grid cells.
    double a = std::log(fit.profile[best == 0 ? 0 : best - 1].first);
    double b = std::log(fit.profile[best + 1 == n ? n - 1 : best + 1].first);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = solve_at(std::exp(c)).residual_norm;
    double fd = solve_at(std::exp(d)).residual_norm;
    while (b - a > options.tolerance) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = solve_at(std::exp(c)).residual_norm;
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = solve_at(std::exp(d)).residual_norm;
      }
    }
    lambda = std::exp(0.5 * (a + b));
    if (solve_at(lambda).residual_norm > best_r) {
      lambda = fit.profile[best].first;
    }
  }
  const LinearSolution sol = solve_at(lambda);
  fit.lambda = lambda;
  fit.beta = sol.coef(1);
  fit.a = sol.coef(0) / static_cast<double>(curve.L);
  fit.residual_norm = sol.residual_norm;
  return fit;
}

namespace {

using SizeCurves = std::map<std::size_t, std::vector<TmiPoint>>;

SizeCurves group_by_size(std::span<const TmiPoint> data) {
  SizeCurves out;
  for (const auto& pt : data) {
    out[pt.L].push_back(pt);
  }
  for (auto& [L, pts] : out) {
    std::sort(pts.begin(), pts.end(), [](const TmiPoint& a, const TmiPoint& b) { return a.p < b.p; });
  }
  return out;
}

}  // namespace

double collapse_cost(std::span<const TmiPoint> data, double p_c, double nu_inverse) {
  const SizeCurves curves = group_by_size(data);
  double total = 0;
  std::size_t count = 0;
  for (const auto& [L, pts] : curves) {
    const double s = std::pow(static_cast<double>(L), nu_inverse);
    for (const auto& [L2, other] : curves) {
      if (L2 == L || other.size() < 2) {
        continue;
      }
      const double s2 = std::pow(static_cast<double>(L2), nu_inverse);
      for (const auto& pt : pts) {
        const double x = (pt.p - p_c) * s;
        for (std::size_t k = 0; k + 1 < other.size(); ++k) {
          const double x0 = (other[k].p - p_c) * s2;
          const double x1 = (other[k + 1].p - p_c) * s2;
          if (x < x0 || x > x1) {
            continue;
          }
          const double t = x1 > x0 ? (x - x0) / (x1 - x0) : 0.0;
          const double y = other[k].mean + t * (other[k + 1].mean - other[k].mean);
          const double sy = (1 - t) * other[k].stderr + t * other[k + 1].stderr;
          const double var = pt.stderr * pt.stderr + sy * sy;
          const double d = pt.mean - y;
          total += var > 0 ? d * d / var : d * d;
          ++count;
          break;
        }
      }
    }
  }
  if (count == 0) {
    return std::numeric_limits<double>::infinity();
  }
  return total / static_cast<double>(count);
}

CrossingResult tmi_crossing(std::span<const TmiPoint> data, const CrossingOptions& options) {
  const SizeCurves curves = group_by_size(data);
  if (curves.size() < 2) {
    throw std::invalid_argument("tmi_crossing: need at least two system sizes");
  }
  CrossingResult result;
  for (auto it = curves.begin(); it != curves.end(); ++it) {
    for (auto jt = std::next(it); jt != curves.end(); ++jt) {
      const auto& a = it->second;
      const auto& b = jt->second;
      // Differences on the common p grid.
      std::vector<std::pair<const TmiPoint*, const TmiPoint*>> common;
      for (const auto& pa : a) {
        for (const auto& pb : b) {
          if (std::abs(pa.p - pb.p) < 1e-9) {
            common.emplace_back(&pa, &pb);
          }
        }
      }
      std::optional<PairCrossing> chosen;
      double chosen_slope = 0;
      for (std::size_t k = 0; k + 1 < common.size(); ++k) {
        const double d0 = common[k].first->mean - common[k].second->mean;
        const double d1 = common[k + 1].first->mean - common[k + 1].second->mean;
        if (d0 == 0.0 && d1 == 0.0) {
          continue;
        }
        if ((d0 <= 0 && d1 > 0) || (d0 >= 0 && d1 < 0) || (d0 > 0 && d1 <= 0) || (d0 < 0 && d1 >= 0)) {
          if (d1 == 0.0 && k + 2 < common.size()) {
            continue;  // the crossing sits on the next grid point; take it from the next interval
          }
          const double p0 = common[k].first->p;
          const double p1 = common[k + 1].first->p;
          const double slope = (d1 - d0) / (p1 - p0);
          const double p = p0 - d0 / slope;
          const double s0 = std::hypot(common[k].first->stderr, common[k].second->stderr);
          const double s1 = std::hypot(common[k + 1].first->stderr, common[k + 1].second->stderr);
          const double t = (p - p0) / (p1 - p0);
          const double sd = std::hypot((1 - t) * s0, t * s1);
          if (!chosen || std::abs(slope) > std::abs(chosen_slope)) {
            chosen = PairCrossing{it->first, jt->first, p, sd / std::abs(slope)};
            chosen_slope = slope;
          }
        }
      }
      if (chosen) {
        result.crossings.push_back(*chosen);
      }
    }
  }
  if (result.crossings.empty()) {
    throw NoCrossingError("tmi_crossing: no pair of sizes crosses inside the scanned window");
  }
  double wsum = 0;
  double psum = 0;
  const bool weighted = std::all_of(result.crossings.begin(), result.crossings.end(),
                                    [](const PairCrossing& c) { return c.stderr > 0; });
  for (const auto& c : result.crossings) {
    const double w = weighted ? 1.0 / (c.stderr * c.stderr) : 1.0;
    wsum += w;
    psum += w * c.p;
  }
  result.p_c = psum / wsum;
  result.p_c_stderr = weighted ? std::sqrt(1.0 / wsum) : 0.0;

  const std::size_t n = options.grid_points;
  double best_x = options.nu_inverse_min;
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = options.nu_inverse_min +
                     (options.nu_inverse_max - options.nu_inverse_min) * static_cast<double>(k) / static_cast<double>(n - 1);
    const double cost = collapse_cost(data, result.p_c, x);
    if (cost < best_cost) {
      best_cost = cost;
      best_x = x;
      best_k = k;
    }
  }
  const double step = (options.nu_inverse_max - options.nu_inverse_min) / static_cast<double>(n - 1);
  double a = best_k == 0 ? best_x : best_x - step;
  double b = best_k + 1 == n ? best_x : best_x + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  while (b - a > 1e-8) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (collapse_cost(data, result.p_c, c) < collapse_cost(data, result.p_c, d)) {
      b = d;
    } else {
      a = c;
    }
  }
  const double refined = 0.5 * (a + b);
  const double refined_cost = collapse_cost(data, result.p_c, refined);
  if (refined_cost <= best_cost) {
    best_x = refined;
    best_cost = refined_cost;
  }
  result.nu_inverse = best_x;
  result.collapse_cost = best_cost;
  return result;
}

}  // namespace hexmon

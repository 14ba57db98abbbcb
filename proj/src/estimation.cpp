#include "telhaz/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace telhaz {
namespace {

constexpr double kSqrt5 = 2.2360679774997896964;
constexpr double kEpanechnikovPeak = 3.0 / (4.0 * kSqrt5);
constexpr double kDegenerate = 1e-12;

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::domain_error(what);
}

void check_bandwidth(double h)
{
  require(std::isfinite(h) && h > 0.0, "bandwidth h must be finite and > 0");
}

// Acklam's rational approximation to the lower-tail normal quantile.
double lower_quantile_guess(double p)
{
  static constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                           -2.759285104469687e+02, 1.383577518672690e+02,
                                           -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                           -1.556989798598866e+02, 6.680131188771972e+01,
                                           -1.328068155288572e+01};
  static constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                           -2.400758277161838e+00, -2.549732539343734e+00,
                                           4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                           2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values))
{
  require(values_.size() >= 3, "sample needs at least 3 observations, got " + std::to_string(values_.size()));
  for (double v : values_)
    require(std::isfinite(v) && v > 0.0, "sample values must be finite and > 0");
  std::sort(values_.begin(), values_.end());
}

double Sample::order_statistic(std::size_t j) const
{
  require(j >= 1 && j <= values_.size(), "order statistic index out of range");
  return values_[j - 1];
}

KernelSpec KernelSpec::epanechnikov()
{
  return {KernelKind::epanechnikov, 3.0 * kSqrt5 / 25.0, kSqrt5};
}

double kernel_value(const KernelSpec& kernel, double u)
{
  switch (kernel.kind) {
  case KernelKind::epanechnikov:
    if (std::abs(u) > kSqrt5)
      return 0.0;
    return std::max(0.0, kEpanechnikovPeak * (1.0 - u * u / 5.0));
  }
  return 0.0;
}

double kernel_integral(const KernelSpec& kernel, double u)
{
  switch (kernel.kind) {
  case KernelKind::epanechnikov:
    if (u <= -kSqrt5)
      return 0.0;
    if (u >= kSqrt5)
      return 1.0;
    return 0.5 + kEpanechnikovPeak * (u - u * u * u / 15.0);
  }
  return 0.0;
}

double kernel_l2_constant(const KernelSpec& kernel)
{
  switch (kernel.kind) {
  case KernelKind::epanechnikov:
    return 3.0 * kSqrt5 / 25.0;
  }
  return kernel.l2_constant;
}

double kde_density(const Sample& sample, const KernelSpec& kernel, double h, double t)
{
  check_bandwidth(h);
  const auto& v = sample.values();
  const double reach = kernel.support_radius * h;
  auto first = std::lower_bound(v.begin(), v.end(), t - reach);
  auto last = std::upper_bound(first, v.end(), t + reach);
  double sum = 0.0;
  for (auto it = first; it != last; ++it)
    sum += kernel_value(kernel, (t - *it) / h);
  return sum / (static_cast<double>(v.size()) * h);
}

double kde_cdf(const Sample& sample, const KernelSpec& kernel, double h, double t)
{
  check_bandwidth(h);
  double sum = 0.0;
  for (double ti : sample.values())
    sum += kernel_integral(kernel, (t - ti) / h);
  return sum / static_cast<double>(sample.size());
}

double hazard_estimate(const Sample& sample, const KernelSpec& kernel, double h, double t)
{
  const double tail = 1.0 - kde_cdf(sample, kernel, h, t);
  if (!(tail > kDegenerate))
    throw UpperTailError("hazard_estimate: upper tail unstable at t = " + std::to_string(t) +
                         " (1 - F_hat = " + std::to_string(tail) + ")");
  return kde_density(sample, kernel, h, t) / tail;
}

double normal_quantile(double alpha)
{
  require(alpha > 0.0 && alpha <= 0.5, "normal_quantile: alpha must be in (0, 0.5]");
  if (alpha == 0.5)
    return 0.0;
  double x = lower_quantile_guess(alpha);
  // Newton steps on Phi(x) - alpha, Phi(x) = erfc(-x / sqrt 2) / 2.
  for (int i = 0; i < 2; ++i) {
    const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - alpha;
    x -= err * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  }
  return -x;
}

BandConfig make_band_config(const Sample& sample, double h, double alpha, std::size_t points)
{
  check_bandwidth(h);
  require(alpha > 0.0 && alpha < 0.5, "alpha must be in (0, 0.5)");
  require(points >= 1, "band grid needs at least one point");
  const double lo = sample.order_statistic(1);
  const double hi = sample.order_statistic(sample.size() - 1);
  require(hi > lo, "band grid: t(1:n) and t(n-1:n) coincide");
  const double step = (hi - lo) / static_cast<double>(points + 1);
  BandConfig config{h, alpha, {}};
  config.grid.reserve(points);
  for (std::size_t i = 1; i <= points; ++i)
    config.grid.push_back(lo + step * static_cast<double>(i));
  return config;
}

ConfidenceBand confidence_band(const Sample& sample, const KernelSpec& kernel, const BandConfig& config)
{
  check_bandwidth(config.h);
  require(config.alpha > 0.0 && config.alpha < 0.5, "alpha must be in (0, 0.5)");
  require(!config.grid.empty(), "confidence_band: empty grid");
  const double lo = sample.order_statistic(1);
  const double hi = sample.order_statistic(sample.size() - 1);
  for (double t : config.grid)
    require(t > lo && t < hi, "confidence_band: grid must lie strictly inside (t(1:n), t(n-1:n))");

  const double z = normal_quantile(config.alpha);
  const double scale = kernel_l2_constant(kernel) / (static_cast<double>(sample.size()) * config.h);
  ConfidenceBand out;
  out.points.reserve(config.grid.size());
  for (double t : config.grid) {
    const double f = kde_density(sample, kernel, config.h, t);
    const double F = kde_cdf(sample, kernel, config.h, t);
    if (f < kDegenerate || 1.0 - F <= kDegenerate) {
      out.excluded.push_back(t);
      continue;
    }
    const double r = f / (1.0 - F);
    const double half = std::sqrt(scale / f) * r * z;
    out.points.push_back({t, f, F, r, half, r - half, r + half});
  }
  return out;
}

DefensibilityReport defensibility_test(const Sample& sample, const KernelSpec& kernel,
                                       const BandConfig& config, const HazardSpec& baseline, double c)
{
  require(std::isfinite(c) && c > 0.0, "defensibility_test: c must be finite and > 0");
  const auto dominance = validate_dominance(baseline, c, config.grid);
  if (!dominance.holds)
    throw std::domain_error("defensibility_test: baseline hazard does not exceed c = " + std::to_string(c) +
                            " at t = " + std::to_string(*dominance.first_violation));

  const auto cb = confidence_band(sample, kernel, config);
  require(!cb.points.empty(), "defensibility_test: no usable grid points");
  DefensibilityReport report{true, c, std::numeric_limits<double>::infinity(), std::nullopt, {}, cb.excluded};
  report.margins.reserve(cb.points.size());
  for (const auto& p : cb.points) {
    const double r = hazard_at(baseline, p.t);
    const double slack = p.half_width - std::abs(r - p.r_hat);
    const double margin = slack - c;
    report.max_admissible_c = std::min(report.max_admissible_c, slack);
    if (margin < 0.0 && !report.violating_t)
      report.violating_t = p.t;
    report.margins.push_back({p.t, p.r_hat, p.lower, p.upper, r, margin});
  }
  report.max_admissible_c = std::max(0.0, report.max_admissible_c);
  report.holds = !report.violating_t.has_value();
  return report;
}

}  // namespace telhaz

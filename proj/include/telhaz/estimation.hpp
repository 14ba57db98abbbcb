#pragma once

#include "telhaz/hazard.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace telhaz {

// Observed lifetimes: at least 3 finite positive values, kept sorted.
class Sample {
public:
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  // j-th smallest value, 1-based.
  double order_statistic(std::size_t j) const;

private:
  std::vector<double> values_;
};

enum class KernelKind { epanechnikov };

struct KernelSpec {
  KernelKind kind;
  double l2_constant;     // int k^2
  double support_radius;  // k vanishes outside [-radius, radius]

  // k(u) = 3/(4 sqrt 5) (1 - u^2/5) on [-sqrt 5, sqrt 5].
  static KernelSpec epanechnikov();
};

double kernel_value(const KernelSpec& kernel, double u);
// K(u) = int_{-inf}^u k.
double kernel_integral(const KernelSpec& kernel, double u);
double kernel_l2_constant(const KernelSpec& kernel);

// Thrown when 1 - Fhat(t) is too small for the hazard ratio to be trusted.
class UpperTailError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

double kde_density(const Sample& sample, const KernelSpec& kernel, double h, double t);
double kde_cdf(const Sample& sample, const KernelSpec& kernel, double h, double t);
double hazard_estimate(const Sample& sample, const KernelSpec& kernel, double h, double t);

// Upper-alpha point z with P{Z > z} = alpha, alpha in (0, 0.5].
double normal_quantile(double alpha);

struct BandConfig {
  double h;
  double alpha;
  std::vector<double> grid;
};

// `points` uniform times strictly inside (t(1:n), t(n-1:n)), one grid step
// trimmed off each end.
BandConfig make_band_config(const Sample& sample, double h, double alpha, std::size_t points = 512);

struct BandPoint {
  double t;
  double f_hat;
  double F_hat;
  double r_hat;
  double half_width;  // [K / (n h f_hat)]^{1/2} r_hat z_alpha
  double lower;
  double upper;
};

struct ConfidenceBand {
  std::vector<BandPoint> points;
  std::vector<double> excluded;  // grid times where f_hat or 1 - F_hat degenerate
};

ConfidenceBand confidence_band(const Sample& sample, const KernelSpec& kernel, const BandConfig& config);

struct MarginPoint {
  double t;
  double r_hat;
  double lower;
  double upper;
  double baseline;
  double margin;  // half_width - c - |baseline - r_hat|
};

struct DefensibilityReport {
  bool holds;
  double c;
  double max_admissible_c;
  std::optional<double> violating_t;
  std::vector<MarginPoint> margins;
  std::vector<double> excluded;
};

// Checks that the strip baseline +- c lies inside the confidence band at
// every usable grid point. Throws std::domain_error when the baseline does
// not exceed c on the grid.
DefensibilityReport defensibility_test(const Sample& sample, const KernelSpec& kernel,
                                       const BandConfig& config, const HazardSpec& baseline, double c);

}  // namespace telhaz

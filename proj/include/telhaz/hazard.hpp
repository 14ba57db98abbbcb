#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace telhaz {

struct ConstantHazard {
  double rate;
};

// r(t) = alpha t (t - 1)^2 + c_ref + beta; minimum c_ref + beta at t in {0, 1}.
struct PolynomialHazard {
  double alpha;
  double beta;
  double c_ref;
};

// r(t) = slope * t + intercept on (t_start, next t_start]; the first segment
// also covers t = 0.
struct LinearSegment {
  double t_start;
  double slope;
  double intercept;
};

struct PiecewiseLinearHazard {
  std::vector<LinearSegment> segments;
};

// Caller-supplied hazard with its exact cumulative hazard.
struct CustomHazard {
  std::string name;
  std::function<double(double)> rate;
  std::function<double(double)> cumulative;
  std::vector<double> critical_points;
};

using HazardKind = std::variant<ConstantHazard, PolynomialHazard, PiecewiseLinearHazard, CustomHazard>;

// Baseline hazard rate r(t) on the support [0, support_end).
class HazardSpec {
public:
  explicit HazardSpec(HazardKind kind,
                      double support_end = std::numeric_limits<double>::infinity());

  const HazardKind& kind() const noexcept { return kind_; }
  double support_end() const noexcept { return support_end_; }
  std::string describe() const;

private:
  HazardKind kind_;
  double support_end_;
};

HazardSpec constant_hazard(double rate);
HazardSpec polynomial_hazard(double alpha, double beta, double c_ref);
HazardSpec piecewise_linear_hazard(std::vector<LinearSegment> segments);

// r(t) = 1 + e^t.
HazardSpec one_plus_exp_hazard();
// r(t) = 1 + 3 (1 - e^{-t}) / (e^t + e^{-t}); excess over 1 is integrable.
HazardSpec bounded_excess_hazard();
// Three-piece linear baseline of the component service-time study.
HazardSpec service_life_hazard();

double hazard_at(const HazardSpec& spec, double t);
double cumulative_hazard(const HazardSpec& spec, double t);

// Survival e^{-R(t)}, clamped to 0 once it drops below 1e-300.
double survival(const HazardSpec& spec, double t);
double cdf(const HazardSpec& spec, double t);

// Points where r may attain a local minimum: stationary points,
// breakpoints and the origin. Restricted to [0, horizon].
std::vector<double> critical_points(const HazardSpec& spec, double horizon);

// 2048 uniform points on [0, horizon] merged with critical_points.
std::vector<double> dominance_grid(const HazardSpec& spec, double horizon);

struct DominanceCheck {
  bool holds;
  std::optional<double> first_violation;
};

// r(t) > c at every grid point.
DominanceCheck validate_dominance(const HazardSpec& spec, double c, std::span<const double> grid);

}  // namespace telhaz

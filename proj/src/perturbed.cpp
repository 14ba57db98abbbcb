#include "telhaz/perturbed.hpp"

#include "telhaz/quadrature.hpp"
#include "telhaz/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace telhaz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// e^{-700} is below the smallest normal double's useful range for bands.
constexpr double kDivergentExcess = 700.0;

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::domain_error(what);
}

void check_support(const PerturbedModel& model, double t, const char* fn)
{
  if (!(t >= 0.0 && t < model.hazard().support_end()))
    throw std::domain_error(std::string(fn) + ": t = " + std::to_string(t) + " outside the support");
}

}  // namespace

double excess_hazard_integral(const HazardSpec& hazard, double c)
{
  if (std::isfinite(hazard.support_end()))
    return kInf;
  auto excess = [&](double s) { return hazard_at(hazard, s) - c; };
  double total = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  int quiet_windows = 0;
  while (hi < 1e12) {
    const double piece = integrate(excess, lo, hi, 1e-13, 10);
    if (!std::isfinite(piece))
      return kInf;
    total += piece;
    if (total > kDivergentExcess)
      return kInf;
    quiet_windows = std::abs(piece) < 1e-15 * std::max(1.0, std::abs(total)) ? quiet_windows + 1 : 0;
    if (quiet_windows >= 2)
      return total;
    lo = hi;
    hi *= 2.0;
  }
  return total;
}

PerturbedModel::PerturbedModel(HazardSpec hazard, TelegraphParams noise, double dominance_horizon)
    : hazard_(std::move(hazard)), noise_(noise), nu_(0.0)
{
  require(dominance_horizon > 0.0, "PerturbedModel: dominance horizon must be > 0");
  std::vector<double> grid = dominance_grid(hazard_, dominance_horizon);
  // r(0) = c is tolerated: a single instant carries no mass.
  std::erase_if(grid, [](double t) { return t <= 0.0; });
  const auto check = validate_dominance(hazard_, noise_.c(), grid);
  if (!check.holds)
    throw std::domain_error("PerturbedModel: hazard " + hazard_.describe() + " does not exceed c = " +
                            std::to_string(noise_.c()) + " at t = " +
                            std::to_string(*check.first_violation));
  nu_ = excess_hazard_integral(hazard_, noise_.c());
}

SupportBand band(const PerturbedModel& model, double t)
{
  check_support(model, t, "band");
  const double ct = model.noise().c() * t;
  const double cum = cumulative_hazard(model.hazard(), t);
  // 1 - a = Fbar e^{ct}, 1 - b = Fbar e^{-ct}
  const double a = 0.0 - std::expm1(ct - cum);
  const double b = 0.0 - std::expm1(-ct - cum);
  const double width = std::exp(ct - cum) * -std::expm1(-2.0 * ct);
  return {t, a, b, width, model.nu()};
}

bool band_monotonicity_condition(const PerturbedModel& model, double t)
{
  require(t > 0.0, "band_monotonicity_condition: t must be > 0");
  check_support(model, t, "band_monotonicity_condition");
  const double c = model.noise().c();
  return hazard_at(model.hazard(), t) <= c / std::tanh(c * t);
}

double x_atom_prob(const PerturbedModel& model, double t)
{
  check_support(model, t, "x_atom_prob");
  return w_atom_prob(model.noise(), t);
}

namespace {

// Distances ct + y and ct - y for y = ln(Fbar / (1 - x)).
struct EdgeGaps {
  double below;
  double above;
};

EdgeGaps edge_gaps(const PerturbedModel& model, double x, double t)
{
  const double ct = model.noise().c() * t;
  const double cum = cumulative_hazard(model.hazard(), t);
  const double log_one_minus_x = std::log1p(-x);
  return {ct - cum - log_one_minus_x, ct + cum + log_one_minus_x};
}

}  // namespace

double band_argument(const PerturbedModel& model, double x, double t)
{
  check_support(model, t, "band_argument");
  require(x < 1.0, "band_argument: x must be < 1");
  const auto g = edge_gaps(model, x, t);
  return g.below * g.above;
}

double x_density(const PerturbedModel& model, double x, double t)
{
  check_support(model, t, "x_density");
  require(t > 0.0, "x_density: t must be > 0");
  const auto bnd = band(model, t);
  if (!(x > bnd.a && x < bnd.b))
    throw std::domain_error("x_density: x outside the open band (a(t), b(t))");
  // Rounding can push a gap to <= 0 right at an edge; the density is
  // continuous there, so evaluate the edge limit.
  const auto g = edge_gaps(model, x, t);
  const double tiny = std::numeric_limits<double>::min();
  return w_density_from_edges(model.noise(), t, std::max(g.below, tiny), std::max(g.above, tiny)) /
         (1.0 - x);
}

double x_cdf(const PerturbedModel& model, double x, double t)
{
  check_support(model, t, "x_cdf");
  const auto bnd = band(model, t);
  if (x < bnd.a)
    return 0.0;
  if (x >= bnd.b)
    return 1.0;
  const double atom = w_atom_prob(model.noise(), t);
  if (x == bnd.a)
    return atom;
  const double ct = model.noise().c() * t;
  const auto g = edge_gaps(model, x, t);
  const double y = std::clamp(g.below - ct, -ct, ct);
  if (y <= -ct)
    return atom;
  return std::max(atom, w_cdf(model.noise(), t, y));
}

XMoments x_moments(const PerturbedModel& model, double t)
{
  check_support(model, t, "x_moments");
  const double cum = cumulative_hazard(model.hazard(), t);
  // Fbar M(-1, t) and Fbar^2 M(-2, t) with Fbar = e^{-R}.
  const double first = scaled_mgf(model.noise(), -1.0, t, -cum);
  const double second = scaled_mgf(model.noise(), -2.0, t, -2.0 * cum);
  return {1.0 - first, std::max(0.0, second - first * first)};
}

double x_mean(const PerturbedModel& model, double t) { return x_moments(model, t).mean; }

double x_variance(const PerturbedModel& model, double t) { return x_moments(model, t).variance; }

std::vector<XPoint> x_path(const PerturbedModel& model, const TelegraphPath& path,
                           std::span<const double> times)
{
  std::vector<XPoint> out;
  out.reserve(times.size());
  for (double t : times) {
    check_support(model, t, "x_path");
    const double w = integrate_path(path, model.noise(), t);
    out.push_back({t, -std::expm1(-(cumulative_hazard(model.hazard(), t) + w))});
  }
  return out;
}

std::vector<XPoint> sample_x_path(const PerturbedModel& model, double horizon,
                                  std::span<const double> times, std::uint64_t seed)
{
  for (double t : times)
    require(t >= 0.0 && t <= horizon, "sample_x_path: grid point outside [0, horizon]");
  return x_path(model, sample_path(model.noise(), horizon, seed), times);
}

std::vector<double> sample_x_values(const PerturbedModel& model, double t, std::size_t n,
                                    std::uint64_t seed)
{
  check_support(model, t, "sample_x_values");
  const double cum = cumulative_hazard(model.hazard(), t);
  const auto w = sample_w_values(model.noise(), t, n, seed);
  std::vector<double> out(n);
  std::transform(w.begin(), w.end(), out.begin(), [cum](double wi) { return -std::expm1(-(cum + wi)); });
  return out;
}

}  // namespace telhaz

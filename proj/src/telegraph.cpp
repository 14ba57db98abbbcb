#include "telhaz/telegraph.hpp"

#include "telhaz/bessel.hpp"
#include "telhaz/quadrature.hpp"
#include "telhaz/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace telhaz {
namespace {

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::domain_error(what);
}

}  // namespace

TelegraphParams::TelegraphParams(double c, double lambda) : c_(c), lambda_(lambda)
{
  require(std::isfinite(c) && c > 0.0, "telegraph amplitude c must be finite and > 0");
  require(std::isfinite(lambda) && lambda > 0.0, "telegraph rate lambda must be finite and > 0");
}

TelegraphPath::TelegraphPath(int initial_sign, std::vector<double> event_times, double horizon)
    : initial_sign_(initial_sign), event_times_(std::move(event_times)), horizon_(horizon)
{
  require(initial_sign == 1 || initial_sign == -1, "initial sign must be +1 or -1");
  require(std::isfinite(horizon) && horizon > 0.0, "path horizon must be finite and > 0");
  double prev = 0.0;
  for (double e : event_times_) {
    require(e > prev && e <= horizon, "event times must be strictly increasing in (0, horizon]");
    prev = e;
  }
}

std::size_t TelegraphPath::events_until(double t) const
{
  return static_cast<std::size_t>(
      std::upper_bound(event_times_.begin(), event_times_.end(), t) - event_times_.begin());
}

int TelegraphPath::sign_at(double t) const
{
  return (events_until(t) % 2 == 0) ? initial_sign_ : -initial_sign_;
}

TelegraphPath sample_path(const TelegraphParams& params, double horizon, std::uint64_t seed)
{
  require(std::isfinite(horizon) && horizon > 0.0, "sample_path: horizon must be > 0");
  Rng rng(seed);
  const int sign = rng.coin() ? 1 : -1;
  std::vector<double> events;
  double t = 0.0;
  for (;;) {
    t += rng.exponential(params.lambda());
    if (t > horizon)
      break;
    events.push_back(t);
  }
  return TelegraphPath(sign, std::move(events), horizon);
}

double integrate_path(const TelegraphPath& path, const TelegraphParams& params, double t)
{
  require(t >= 0.0 && t <= path.horizon(), "integrate_path: t outside [0, horizon]");
  double sum = 0.0;
  double start = 0.0;
  int sign = path.initial_sign();
  for (double e : path.event_times()) {
    if (e >= t)
      break;
    sum += sign * (e - start);
    start = e;
    sign = -sign;
  }
  sum += sign * (t - start);
  return params.c() * sum;
}

std::vector<WPoint> integrate_path(const TelegraphPath& path, const TelegraphParams& params,
                                   std::span<const double> times)
{
  std::vector<WPoint> out;
  out.reserve(times.size());
  for (double t : times)
    out.push_back({t, integrate_path(path, params, t)});
  return out;
}

double w_atom_prob(const TelegraphParams& params, double t)
{
  require(t >= 0.0, "w_atom_prob: t must be >= 0");
  return 0.5 * std::exp(-params.lambda() * t);
}

double w_density_from_edges(const TelegraphParams& params, double t, double below, double above)
{
  require(t > 0.0, "w_density: t must be > 0");
  require(below > 0.0 && above > 0.0, "w_density: x must lie strictly inside (-ct, ct)");
  const double lambda = params.lambda();
  const double c = params.c();
  // z = (lambda / c) sqrt(c^2 t^2 - x^2); d/dt I0(z) = lambda^2 t I1(z) / z.
  const double z = lambda / c * std::sqrt(below * above);
  const double damp = std::exp(z - lambda * t);
  return lambda / (2.0 * c) * damp *
         (bessel_i0_scaled(z) + lambda * t * bessel_i1_over_x_scaled(z));
}

double w_density(const TelegraphParams& params, double t, double x)
{
  const double ct = params.c() * t;
  return w_density_from_edges(params, t, ct + x, ct - x);
}

double w_cdf(const TelegraphParams& params, double t, double x)
{
  require(t >= 0.0, "w_cdf: t must be >= 0");
  const double ct = params.c() * t;
  if (x < -ct)
    return 0.0;
  if (x >= ct)
    return 1.0;
  const double atom = w_atom_prob(params, t);
  if (x == -ct)
    return atom;
  // Integrate in the distance d from the nearer edge so that d itself is
  // the small factor handed to the density.
  if (x <= 0.0) {
    auto from_lower = [&](double d) { return w_density_from_edges(params, t, d, 2.0 * ct - d); };
    return atom + integrate(from_lower, 0.0, ct + x);
  }
  auto from_upper = [&](double d) { return w_density_from_edges(params, t, 2.0 * ct - d, d); };
  return 1.0 - atom - integrate(from_upper, 0.0, ct - x);
}

double scaled_mgf(const TelegraphParams& params, double s, double t, double log_scale)
{
  require(t >= 0.0, "mgf: t must be >= 0");
  require(std::isfinite(s), "mgf: s must be finite");
  const double lambda = params.lambda();
  const double omega = std::hypot(lambda, s * params.c());
  const double ratio = lambda / omega;
  // cosh + ratio * sinh, split into its growing and decaying exponentials.
  return 0.5 * (1.0 + ratio) * std::exp(log_scale + (omega - lambda) * t) +
         0.5 * (1.0 - ratio) * std::exp(log_scale - (omega + lambda) * t);
}

double mgf(const TelegraphParams& params, double s, double t)
{
  return scaled_mgf(params, s, t, 0.0);
}

WMoments w_mean_var(const TelegraphParams& params, double t)
{
  require(t >= 0.0, "w_mean_var: t must be >= 0");
  const double lambda = params.lambda();
  const double c2 = params.c() * params.c();
  const double u = lambda * t;
  double variance;
  if (u < 1e-4) {
    variance = c2 * t * t * (1.0 - 2.0 / 3.0 * u + u * u / 3.0 - 2.0 / 15.0 * u * u * u);
  } else {
    variance = c2 / lambda * (t + std::expm1(-2.0 * u) / (2.0 * lambda));
  }
  return {0.0, variance};
}

std::vector<double> sample_w_values(const TelegraphParams& params, double t, std::size_t n,
                                    std::uint64_t seed)
{
  require(t > 0.0, "sample_w_values: t must be > 0");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = integrate_path(sample_path(params, t, derive_seed(seed, i)), params, t);
  return out;
}

}  // namespace telhaz

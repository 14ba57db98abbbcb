#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace telhaz {

// Amplitude c and switching intensity lambda of the symmetric telegraph
// process V(t) = V(0) (-1)^{N(t)}, V(0) = +-c with probability 1/2 each.
class TelegraphParams {
public:
  TelegraphParams(double c, double lambda);

  double c() const noexcept { return c_; }
  double lambda() const noexcept { return lambda_; }

private:
  double c_;
  double lambda_;
};

// One realization of V on [0, horizon]: the sign of V(0) and the jump epochs
// of N, strictly increasing in (0, horizon].
class TelegraphPath {
public:
  TelegraphPath(int initial_sign, std::vector<double> event_times, double horizon);

  int initial_sign() const noexcept { return initial_sign_; }
  const std::vector<double>& event_times() const noexcept { return event_times_; }
  double horizon() const noexcept { return horizon_; }

  // Number of jumps in (0, t].
  std::size_t events_until(double t) const;

  // V(t) / c.
  int sign_at(double t) const;

private:
  int initial_sign_;
  std::vector<double> event_times_;
  double horizon_;
};

struct WPoint {
  double t;
  double value;
};

struct WMoments {
  double mean;
  double variance;
};

// Event-driven exact simulation: fair coin for V(0), exponential
// inter-arrival times with rate lambda until the horizon is passed.
TelegraphPath sample_path(const TelegraphParams& params, double horizon, std::uint64_t seed);

// W(t) = int_0^t V(s) ds, exact for the piecewise-constant integrand.
double integrate_path(const TelegraphPath& path, const TelegraphParams& params, double t);

// W evaluated on a grid of times (each within [0, horizon]).
std::vector<WPoint> integrate_path(const TelegraphPath& path, const TelegraphParams& params,
                                   std::span<const double> times);

// P{W(t) = ct} = P{W(t) = -ct}.
double w_atom_prob(const TelegraphParams& params, double t);

// Density of the absolutely continuous part of W(t) on (-ct, ct).
double w_density(const TelegraphParams& params, double t, double x);

// Same density parameterized by the distances to the two edges,
// below = ct + x and above = ct - x (both > 0). Avoids the cancellation in
// c^2 t^2 - x^2 when x is close to an edge.
double w_density_from_edges(const TelegraphParams& params, double t, double below, double above);

// P{W(t) <= x}; 0 below -ct, 1 at and above ct.
double w_cdf(const TelegraphParams& params, double t, double x);

// M(s, t) = E[exp(s W(t))].
double mgf(const TelegraphParams& params, double s, double t);

// exp(log_scale) * M(s, t), computed without forming M when it would
// overflow. Used by callers that multiply M by a tiny survival probability.
double scaled_mgf(const TelegraphParams& params, double s, double t, double log_scale);

WMoments w_mean_var(const TelegraphParams& params, double t);

// n independent draws of W(t); path i is seeded with derive_seed(seed, i).
std::vector<double> sample_w_values(const TelegraphParams& params, double t, std::size_t n,
                                    std::uint64_t seed);

}  // namespace telhaz

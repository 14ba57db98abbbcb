#pragma once

#include "telhaz/hazard.hpp"
#include "telhaz/telegraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace telhaz {

// Random distribution function X(t) = 1 - Fbar(t) exp(-W(t)): the lifetime
// law obtained when the hazard r(t) is perturbed by the telegraph noise V(t).
//
// Construction checks r(t) > c on a dense grid of (0, dominance_horizon]
// (intersected with the support) and precomputes
// nu = int_0^l [r(s) - c] ds, which fixes the terminal band width e^{-nu}.
class PerturbedModel {
public:
  PerturbedModel(HazardSpec hazard, TelegraphParams noise, double dominance_horizon = 10.0);

  const HazardSpec& hazard() const noexcept { return hazard_; }
  const TelegraphParams& noise() const noexcept { return noise_; }

  // +infinity when the excess hazard is not integrable.
  double nu() const noexcept { return nu_; }

private:
  HazardSpec hazard_;
  TelegraphParams noise_;
  double nu_;
};

// Almost-sure envelope [a(t), b(t)] of X(t); a and b are the distribution
// functions with hazards r - c and r + c.
struct SupportBand {
  double t;
  double a;
  double b;
  double width;
  double nu;
};

struct XPoint {
  double t;
  double value;
};

struct XMoments {
  double mean;
  double variance;
};

// int_0^l [r(s) - c] ds by adaptive quadrature over doubling windows;
// returns +infinity once the partial integral exceeds 700 or when l < inf.
double excess_hazard_integral(const HazardSpec& hazard, double c);

SupportBand band(const PerturbedModel& model, double t);

// True when r(t) <= c coth(ct), i.e. the band width is locally
// non-decreasing. Requires t > 0.
bool band_monotonicity_condition(const PerturbedModel& model, double t);

// P{X(t) = a(t)} = P{X(t) = b(t)}.
double x_atom_prob(const PerturbedModel& model, double t);

// Density of the continuous part of X(t) on the open band (a(t), b(t)).
double x_density(const PerturbedModel& model, double x, double t);

// u(x, t) = c^2 t^2 - ln^2(Fbar(t) / (1 - x)), evaluated in the factored form
// ln((1 - a)/(1 - x)) * ln((1 - x)/(1 - b)). Zero at both band edges.
double band_argument(const PerturbedModel& model, double x, double t);

// P{X(t) <= x}. Returns 0 below a(t) and 1 at or above b(t).
double x_cdf(const PerturbedModel& model, double x, double t);

XMoments x_moments(const PerturbedModel& model, double t);
double x_mean(const PerturbedModel& model, double t);
double x_variance(const PerturbedModel& model, double t);

// X evaluated along a given noise realization.
std::vector<XPoint> x_path(const PerturbedModel& model, const TelegraphPath& path,
                           std::span<const double> times);

// Draws one telegraph path on [0, horizon] and evaluates X on the grid.
std::vector<XPoint> sample_x_path(const PerturbedModel& model, double horizon,
                                  std::span<const double> times, std::uint64_t seed);

// n independent draws of X(t), path i seeded with derive_seed(seed, i).
std::vector<double> sample_x_values(const PerturbedModel& model, double t, std::size_t n,
                                    std::uint64_t seed);

}  // namespace telhaz

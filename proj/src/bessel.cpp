#include "telhaz/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace telhaz {
namespace {

constexpr double kSeriesLimit = 30.0;
constexpr double kSeriesEps = 1e-16;

void check_argument(double x, const char* fn)
{
  if (!(x >= 0.0))
    throw std::domain_error(std::string(fn) + ": argument must be >= 0, got " + std::to_string(x));
}

// sum_k (x/2)^{2k} / (k! (k+order)!) for order in {0, 1}.
double power_series(double x, int order)
{
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (term < kSeriesEps * sum)
      break;
  }
  return sum;
}

// e^{-x} I_order(x) from the Hankel expansion, x > kSeriesLimit.
double asymptotic_scaled(double x, int order)
{
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  double prev_abs = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (static_cast<double>(k) * 8.0 * x);
    const double a = std::abs(term);
    if (a > prev_abs)  // series has started to diverge
      break;
    sum += term;
    prev_abs = a;
    if (a < kSeriesEps * std::abs(sum))
      break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_i0(double x)
{
  check_argument(x, "bessel_i0");
  if (x <= kSeriesLimit)
    return power_series(x, 0);
  return std::exp(x) * asymptotic_scaled(x, 0);
}

double bessel_i1(double x)
{
  check_argument(x, "bessel_i1");
  if (x <= kSeriesLimit)
    return 0.5 * x * power_series(x, 1);
  return std::exp(x) * asymptotic_scaled(x, 1);
}

double bessel_i0_scaled(double x)
{
  check_argument(x, "bessel_i0_scaled");
  if (x <= kSeriesLimit)
    return std::exp(-x) * power_series(x, 0);
  return asymptotic_scaled(x, 0);
}

double bessel_i1_scaled(double x)
{
  check_argument(x, "bessel_i1_scaled");
  if (x <= kSeriesLimit)
    return std::exp(-x) * 0.5 * x * power_series(x, 1);
  return asymptotic_scaled(x, 1);
}

double bessel_i1_over_x_scaled(double x)
{
  check_argument(x, "bessel_i1_over_x_scaled");
  if (x <= kSeriesLimit)
    return std::exp(-x) * 0.5 * power_series(x, 1);
  return asymptotic_scaled(x, 1) / x;
}

}  // namespace telhaz

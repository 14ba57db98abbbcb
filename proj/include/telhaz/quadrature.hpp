#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace telhaz {

// Adaptive 31-point Gauss-Kronrod on a finite interval. Thin adapter so
// callers do not depend on the backend directly.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12, unsigned max_depth = 20)
{
  if (a == b)
    return 0.0;
  // Rescaled onto [0, 1].
  const double width = b - a;
  auto unit = [&](double u) { return width * f(a + width * u); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      unit, 0.0, 1.0, max_depth, tol, &error);
}

}  // namespace telhaz

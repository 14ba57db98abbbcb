#include "telhaz/hazard.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace telhaz {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::domain_error(what);
}

void check_time(const HazardSpec& spec, double t, const char* fn)
{
  if (!(t >= 0.0 && t < spec.support_end()))
    throw std::domain_error(std::string(fn) + ": t = " + std::to_string(t) +
                            " outside the support [0, " + std::to_string(spec.support_end()) + ")");
}

double segment_end(const std::vector<LinearSegment>& segs, std::size_t i)
{
  return i + 1 < segs.size() ? segs[i + 1].t_start : std::numeric_limits<double>::infinity();
}

void validate_piecewise(const PiecewiseLinearHazard& p, double support_end)
{
  const auto& segs = p.segments;
  require(!segs.empty(), "piecewise hazard needs at least one segment");
  require(segs.front().t_start == 0.0, "piecewise hazard must start at t = 0");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    require(std::isfinite(s.t_start) && std::isfinite(s.slope) && std::isfinite(s.intercept),
            "piecewise hazard segment has non-finite coefficients");
    if (i > 0)
      require(s.t_start > segs[i - 1].t_start, "piecewise segments must have increasing starts");
    const double end = std::min(segment_end(segs, i), support_end);
    require(s.slope * s.t_start + s.intercept >= 0.0, "piecewise hazard is negative at a breakpoint");
    if (std::isfinite(end))
      require(s.slope * end + s.intercept >= 0.0, "piecewise hazard is negative at a breakpoint");
    else
      require(s.slope >= 0.0, "unbounded last segment must have nonnegative slope");
  }
}

}  // namespace

HazardSpec::HazardSpec(HazardKind kind, double support_end)
    : kind_(std::move(kind)), support_end_(support_end)
{
  require(support_end > 0.0, "support end must be > 0");
  std::visit(Overloaded{
                 [](const ConstantHazard& h) {
                   require(std::isfinite(h.rate) && h.rate > 0.0, "constant hazard must be > 0");
                 },
                 [](const PolynomialHazard& h) {
                   require(h.alpha > 0.0 && h.beta > 0.0, "polynomial hazard needs alpha, beta > 0");
                   require(std::isfinite(h.alpha) && std::isfinite(h.beta) && std::isfinite(h.c_ref) &&
                               h.c_ref >= 0.0,
                           "polynomial hazard needs finite c_ref >= 0");
                 },
                 [this](const PiecewiseLinearHazard& h) { validate_piecewise(h, support_end_); },
                 [](const CustomHazard& h) {
                   require(static_cast<bool>(h.rate) && static_cast<bool>(h.cumulative),
                           "custom hazard needs both r(t) and R(t)");
                 },
             },
             kind_);
}

std::string HazardSpec::describe() const
{
  std::ostringstream os;
  os.precision(12);
  std::visit(Overloaded{
                 [&](const ConstantHazard& h) { os << "constant(r0=" << h.rate << ")"; },
                 [&](const PolynomialHazard& h) {
                   os << "polynomial(alpha=" << h.alpha << ", beta=" << h.beta << ", c_ref=" << h.c_ref
                      << ")";
                 },
                 [&](const PiecewiseLinearHazard& h) {
                   os << "piecewise(";
                   for (std::size_t i = 0; i < h.segments.size(); ++i) {
                     const auto& s = h.segments[i];
                     os << (i ? "; " : "") << s.t_start << ":" << s.slope << ":" << s.intercept;
                   }
                   os << ")";
                 },
                 [&](const CustomHazard& h) { os << "custom(" << h.name << ")"; },
             },
             kind_);
  return os.str();
}

HazardSpec constant_hazard(double rate) { return HazardSpec(ConstantHazard{rate}); }

HazardSpec polynomial_hazard(double alpha, double beta, double c_ref)
{
  return HazardSpec(PolynomialHazard{alpha, beta, c_ref});
}

HazardSpec piecewise_linear_hazard(std::vector<LinearSegment> segments)
{
  return HazardSpec(PiecewiseLinearHazard{std::move(segments)});
}

HazardSpec one_plus_exp_hazard()
{
  return HazardSpec(CustomHazard{
      "1+exp(t)",
      [](double t) { return 1.0 + std::exp(t); },
      [](double t) { return t + std::expm1(t); },
      {0.0},
  });
}

HazardSpec bounded_excess_hazard()
{
  // int_0^t (1 - e^{-s}) / (e^s + e^{-s}) ds
  //   = atan(e^t) - pi/4 + (log(1 + e^{-2t}) - log 2) / 2
  return HazardSpec(CustomHazard{
      "1+3(1-exp(-t))/(exp(t)+exp(-t))",
      [](double t) { return 1.0 + 3.0 * (-std::expm1(-t)) / (std::exp(t) + std::exp(-t)); },
      [](double t) {
        const double excess = std::atan(std::exp(t)) - std::numbers::pi / 4.0 +
                              0.5 * (std::log1p(std::exp(-2.0 * t)) - std::numbers::ln2);
        return t + 3.0 * excess;
      },
      {0.0},
  });
}

HazardSpec service_life_hazard()
{
  return piecewise_linear_hazard({
      {0.0, 3.5e-6, 0.0},
      {650.0, -4.07143e-6, 0.00492143},
      {1000.0, 8e-6, -0.00715},
  });
}

double hazard_at(const HazardSpec& spec, double t)
{
  check_time(spec, t, "hazard_at");
  return std::visit(Overloaded{
                        [](const ConstantHazard& h) { return h.rate; },
                        [t](const PolynomialHazard& h) {
                          return h.alpha * t * (t - 1.0) * (t - 1.0) + h.c_ref + h.beta;
                        },
                        [t](const PiecewiseLinearHazard& h) {
                          const auto& segs = h.segments;
                          std::size_t i = 0;
                          while (i + 1 < segs.size() && t > segs[i + 1].t_start)
                            ++i;
                          return segs[i].slope * t + segs[i].intercept;
                        },
                        [t](const CustomHazard& h) { return h.rate(t); },
                    },
                    spec.kind());
}

double cumulative_hazard(const HazardSpec& spec, double t)
{
  check_time(spec, t, "cumulative_hazard");
  return std::visit(Overloaded{
                        [t](const ConstantHazard& h) { return h.rate * t; },
                        [t](const PolynomialHazard& h) {
                          const double a = h.alpha;
                          return t * (t * (t * (a / 4.0 * t - 2.0 * a / 3.0) + a / 2.0) + h.c_ref + h.beta);
                        },
                        [t](const PiecewiseLinearHazard& h) {
                          const auto& segs = h.segments;
                          double sum = 0.0;
                          for (std::size_t i = 0; i < segs.size() && segs[i].t_start < t; ++i) {
                            const double lo = segs[i].t_start;
                            const double hi = std::min(t, segment_end(segs, i));
                            sum += 0.5 * segs[i].slope * (hi * hi - lo * lo) + segs[i].intercept * (hi - lo);
                          }
                          return sum;
                        },
                        [t](const CustomHazard& h) { return h.cumulative(t); },
                    },
                    spec.kind());
}

double survival(const HazardSpec& spec, double t)
{
  const double s = std::exp(-cumulative_hazard(spec, t));
  return s < 1e-300 ? 0.0 : s;
}

double cdf(const HazardSpec& spec, double t)
{
  const double r = cumulative_hazard(spec, t);
  return std::exp(-r) < 1e-300 ? 1.0 : -std::expm1(-r);
}

std::vector<double> critical_points(const HazardSpec& spec, double horizon)
{
  std::vector<double> pts = std::visit(
      Overloaded{
          [](const ConstantHazard&) { return std::vector<double>{0.0}; },
          [](const PolynomialHazard&) { return std::vector<double>{0.0, 1.0 / 3.0, 1.0}; },
          [](const PiecewiseLinearHazard& h) {
            std::vector<double> v;
            for (const auto& s : h.segments) {
              v.push_back(s.t_start);
              if (s.t_start > 0.0)
                v.push_back(std::nextafter(s.t_start, std::numeric_limits<double>::infinity()));
            }
            return v;
          },
          [](const CustomHazard& h) { return h.critical_points; },
      },
      spec.kind());
  const double end = std::min(horizon, spec.support_end());
  std::erase_if(pts, [&](double p) { return p < 0.0 || p > horizon || p >= end; });
  return pts;
}

std::vector<double> dominance_grid(const HazardSpec& spec, double horizon)
{
  require(horizon > 0.0, "dominance_grid: horizon must be > 0");
  constexpr int kPoints = 2048;
  // Keep the grid inside the open support.
  double end = horizon;
  if (end >= spec.support_end())
    end = std::nextafter(spec.support_end(), 0.0);
  std::vector<double> grid;
  grid.reserve(kPoints + 8);
  for (int i = 0; i < kPoints; ++i)
    grid.push_back(end * i / (kPoints - 1));
  for (double p : critical_points(spec, end))
    grid.push_back(p);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

DominanceCheck validate_dominance(const HazardSpec& spec, double c, std::span<const double> grid)
{
  require(!grid.empty(), "validate_dominance: empty grid");
  for (double t : grid) {
    if (!(hazard_at(spec, t) > c))
      return {false, t};
  }
  return {true, std::nullopt};
}

}  // namespace telhaz

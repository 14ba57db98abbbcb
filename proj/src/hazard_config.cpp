#include "telhaz/hazard_config.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace telhaz {
namespace {

double parse_number(std::string_view key, std::string_view text)
{
  if (text == "inf" || text == "infinity" || text == "+inf")
    return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument("hazard config: '" + std::string(key) + "' has non-numeric value '" +
                                std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, std::string_view seps)
{
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(seps, pos);
    if (start == std::string_view::npos)
      break;
    auto stop = text.find_first_of(seps, start);
    if (stop == std::string_view::npos)
      stop = text.size();
    out.push_back(text.substr(start, stop - start));
    pos = stop;
  }
  return out;
}

std::vector<LinearSegment> parse_segments(std::string_view text)
{
  std::vector<LinearSegment> segs;
  for (auto item : split(text, "|;")) {
    const auto parts = split(item, ":");
    if (parts.size() != 3)
      throw std::invalid_argument("hazard config: segment '" + std::string(item) +
                                  "' must be t_start:slope:intercept");
    segs.push_back({parse_number("segments", parts[0]), parse_number("segments", parts[1]),
                    parse_number("segments", parts[2])});
  }
  return segs;
}

}  // namespace

HazardSpec parse_hazard_config(std::string_view text)
{
  std::map<std::string, std::string, std::less<>> kv;
  for (auto line : split(text, "\n")) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    for (auto token : split(line, " \t\r,")) {
      const auto eq = token.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw std::invalid_argument("hazard config: expected key=value, got '" + std::string(token) + "'");
      kv[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
    }
  }

  auto take = [&](std::string_view key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("hazard config: missing key '" + std::string(key) + "'");
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto take_number = [&](std::string_view key) { return parse_number(key, take(key)); };

  const std::string kind = take("kind");
  double support_end = std::numeric_limits<double>::infinity();
  if (kv.contains("support_end"))
    support_end = take_number("support_end");

  std::optional<HazardSpec> spec;
  try {
    if (kind == "constant") {
      spec.emplace(ConstantHazard{take_number("r0")}, support_end);
    } else if (kind == "polynomial") {
      const double alpha = take_number("alpha");
      const double beta = take_number("beta");
      spec.emplace(PolynomialHazard{alpha, beta, take_number("c_ref")}, support_end);
    } else if (kind == "piecewise") {
      spec.emplace(PiecewiseLinearHazard{parse_segments(take("segments"))}, support_end);
    } else if (kind == "preset") {
      const std::string name = take("name");
      if (name == "one_plus_exp")
        spec = one_plus_exp_hazard();
      else if (name == "bounded_excess")
        spec = bounded_excess_hazard();
      else if (name == "service_life")
        spec = service_life_hazard();
      else
        throw std::invalid_argument("hazard config: unknown preset '" + name + "'");
      if (std::isfinite(support_end))
        spec.emplace(spec->kind(), support_end);
    } else {
      throw std::invalid_argument("hazard config: unknown kind '" + kind + "'");
    }
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("hazard config: ") + e.what());
  }

  if (!kv.empty())
    throw std::invalid_argument("hazard config: unexpected key '" + kv.begin()->first + "'");
  return *spec;
}

}  // namespace telhaz

#include "commands.hpp"

#include "csv.hpp"

#include "telhaz/datasets.hpp"
#include "telhaz/estimation.hpp"
#include "telhaz/hazard.hpp"
#include "telhaz/hazard_config.hpp"
#include "telhaz/perturbed.hpp"
#include "telhaz/random.hpp"
#include "telhaz/telegraph.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace telhaz::cli {
namespace {

namespace fs = std::filesystem;

// Raised for bad user input that CLI11 cannot catch itself.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_list(const std::string& text, const char* what)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": cannot parse '" + item + "' as a number");
    }
  }
  if (out.empty())
    throw UsageError(std::string(what) + ": empty list");
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points)
{
  if (points < 2)
    throw UsageError("--points must be at least 2");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  g.back() = hi;
  return g;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- shared option groups -------------------------------------------------

struct NoiseOptions {
  double c = 1.0;
  double lambda = 15.0;

  void add(CLI::App* app, double default_c, double default_lambda)
  {
    c = default_c;
    lambda = default_lambda;
    app->add_option("--c", c, "telegraph amplitude c")->capture_default_str();
    app->add_option("--lambda", lambda, "switching rate lambda")->capture_default_str();
  }
  TelegraphParams params() const { return TelegraphParams(c, lambda); }
};

struct HazardOptions {
  std::string text;
  std::string file;

  void add(CLI::App* app, const char* fallback)
  {
    app->add_option("--hazard", text,
                    std::string("baseline hazard as key=value pairs (default: ") + fallback + ")");
    app->add_option("--hazard-file", file, "file with the baseline hazard key=value pairs");
  }

  // Default is the quartic example hazard with c_ref tied to the noise c.
  HazardSpec spec(double c) const
  {
    if (!text.empty() && !file.empty())
      throw UsageError("give either --hazard or --hazard-file, not both");
    if (!file.empty())
      return parse_hazard_config(read_file(file));
    if (!text.empty())
      return parse_hazard_config(text);
    return polynomial_hazard(15.0, 0.001, c);
  }
};

struct DataOptions {
  std::string dataset;
  std::string file;

  void add(CLI::App* app)
  {
    app->add_option("--dataset", dataset, "builtin dataset (melanoma_46 | service_86)");
    app->add_option("--data-file", file, "text or single-column CSV file of lifetimes");
  }

  NamedDataset load_data() const
  {
    if (dataset.empty() == file.empty())
      throw UsageError("give exactly one of --dataset or --data-file");
    if (!file.empty())
      return load(file);
    try {
      return builtin(dataset);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
};

// --- table writers ----------------------------------------------------------

void write_w_paths(std::ostream& os, const TelegraphParams& params, double horizon, std::size_t n_paths,
                   std::size_t points, std::uint64_t seed)
{
  const auto grid = uniform_grid(0.0, horizon, points);
  CsvWriter csv(os, {"path_id", "t", "W"});
  for (std::size_t p = 0; p < n_paths; ++p) {
    const auto path = sample_path(params, horizon, derive_seed(seed, p));
    for (const auto& w : integrate_path(path, params, grid))
      csv.row({static_cast<long long>(p), w.t, w.value});
  }
}

void write_x_paths(std::ostream& os, const PerturbedModel& model, double horizon, std::size_t n_paths,
                   std::size_t points, std::uint64_t seed)
{
  const auto grid = uniform_grid(0.0, horizon, points);
  CsvWriter csv(os, {"path_id", "t", "W", "X", "F"});
  for (std::size_t p = 0; p < n_paths; ++p) {
    const auto path = sample_path(model.noise(), horizon, derive_seed(seed, p));
    const auto x = x_path(model, path, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      csv.row({static_cast<long long>(p), grid[i], integrate_path(path, model.noise(), grid[i]), x[i].value,
               cdf(model.hazard(), grid[i])});
  }
}

void write_w_density(std::ostream& os, const TelegraphParams& params, const std::vector<double>& times,
                     std::size_t points)
{
  CsvWriter csv(os, {"t", "kind", "x", "value"});
  for (double t : times) {
    if (!(t > 0.0))
      throw UsageError("density times must be > 0");
    const double ct = params.c() * t;
    const double atom = w_atom_prob(params, t);
    csv.row({t, std::string("atom"), -ct, atom});
    for (std::size_t i = 1; i <= points; ++i) {
      const double x = -ct + 2.0 * ct * static_cast<double>(i) / static_cast<double>(points + 1);
      csv.row({t, std::string("density"), x, w_density(params, t, x)});
    }
    csv.row({t, std::string("atom"), ct, atom});
  }
}

void write_x_density(std::ostream& os, const PerturbedModel& model, const std::vector<double>& times,
                     std::size_t points)
{
  CsvWriter csv(os, {"t", "kind", "x", "value"});
  for (double t : times) {
    if (!(t > 0.0))
      throw UsageError("density times must be > 0");
    const auto bnd = band(model, t);
    const double atom = x_atom_prob(model, t);
    csv.row({t, std::string("atom"), bnd.a, atom});
    for (std::size_t i = 1; i <= points; ++i) {
      const double x = bnd.a + bnd.width * static_cast<double>(i) / static_cast<double>(points + 1);
      if (x > bnd.a && x < bnd.b)
        csv.row({t, std::string("density"), x, x_density(model, x, t)});
    }
    csv.row({t, std::string("atom"), bnd.b, atom});
  }
}

void write_moments(std::ostream& os, const PerturbedModel& model, double t_max, std::size_t points)
{
  CsvWriter csv(os, {"t", "mean", "variance", "F"});
  for (double t : uniform_grid(0.0, t_max, points)) {
    const auto m = x_moments(model, t);
    csv.row({t, m.mean, m.variance, cdf(model.hazard(), t)});
  }
}

void write_band(std::ostream& os, const PerturbedModel& model, double t_max, std::size_t points,
                std::optional<std::string> label = std::nullopt)
{
  CsvWriter csv = label ? CsvWriter(os, {"case", "t", "a", "b", "D", "F", "nondecreasing", "nu"})
                        : CsvWriter(os, {"t", "a", "b", "D", "F", "nondecreasing", "nu"});
  for (double t : uniform_grid(0.0, t_max, points)) {
    const auto s = band(model, t);
    // The width is nondecreasing near 0 (coth blows up).
    const long long cond = t > 0.0 ? band_monotonicity_condition(model, t) : 1;
    if (label)
      csv.row({*label, t, s.a, s.b, s.width, cdf(model.hazard(), t), cond, s.nu});
    else
      csv.row({t, s.a, s.b, s.width, cdf(model.hazard(), t), cond, s.nu});
  }
}

void write_kde(std::ostream& os, const Sample& sample, const KernelSpec& kernel, double h, std::size_t points)
{
  const double reach = kernel.support_radius * h;
  const double lo = std::max(0.0, sample.values().front() - reach);
  const double hi = sample.values().back() + reach;
  CsvWriter csv(os, {"t", "f_hat", "F_hat", "r_hat"});
  for (double t : uniform_grid(lo, hi, points)) {
    const double f = kde_density(sample, kernel, h, t);
    const double F = kde_cdf(sample, kernel, h, t);
    Cell r = std::string();
    try {
      r = hazard_estimate(sample, kernel, h, t);
    } catch (const UpperTailError&) {
    }
    csv.row({t, f, F, r});
  }
}

void write_confidence_band(std::ostream& os, const ConfidenceBand& cb)
{
  CsvWriter csv(os, {"t", "f_hat", "F_hat", "r_hat", "lower", "upper"});
  for (const auto& p : cb.points)
    csv.row({p.t, p.f_hat, p.F_hat, p.r_hat, p.lower, p.upper});
}

void write_margins(std::ostream& os, const DefensibilityReport& report)
{
  CsvWriter csv(os, {"t", "r_hat", "lower", "upper", "baseline", "margin"});
  for (const auto& m : report.margins)
    csv.row({m.t, m.r_hat, m.lower, m.upper, m.baseline, m.margin});
}

void write_report(std::ostream& os, const NamedDataset& data, const BandConfig& config,
                  const HazardSpec& baseline, const DefensibilityReport& report)
{
  os << "dataset: " << data.name << '\n'
     << "n: " << data.values.size() << '\n'
     << "kernel: epanechnikov\n"
     << "h: " << format_number(config.h) << '\n'
     << "alpha: " << format_number(config.alpha) << '\n'
     << "z_alpha: " << format_number(normal_quantile(config.alpha)) << '\n'
     << "baseline: " << baseline.describe() << '\n'
     << "c: " << format_number(report.c) << '\n'
     << "grid_points: " << config.grid.size() << '\n'
     << "usable_points: " << report.margins.size() << '\n'
     << "max_admissible_c: " << format_number(report.max_admissible_c) << '\n'
     << "violating_t: " << (report.violating_t ? format_number(*report.violating_t) : "none") << '\n'
     << "holds: " << (report.holds ? "true" : "false") << '\n';
}

// Opens --output when given, else forwards to the default stream.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback)
  {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw UsageError("cannot write '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

// --- presets -------------------------------------------------------------------

struct ApplicationPreset {
  const char* dataset;
  double h;
  double alpha;
  double c;
  std::function<HazardSpec()> baseline;
};

ApplicationPreset application(const std::string& id)
{
  if (id == "app1")
    return {"melanoma_46", 6.0, 0.025, 0.0004, [] { return constant_hazard(0.0125); }};
  return {"service_86", 75.0, 0.025, 0.00025, [] { return service_life_hazard(); }};
}

int reproduce(const std::string& id, const fs::path& outdir, std::uint64_t seed, std::ostream& out)
{
  fs::create_directories(outdir);
  auto open = [&](const std::string& name) {
    const auto path = outdir / name;
    std::ofstream f(path);
    if (!f)
      throw UsageError("cannot write '" + path.string() + "'");
    out << "wrote " << path.string() << '\n';
    return f;
  };

  if (id == "fig1") {
    const TelegraphParams noise(2.0, 15.0);
    const PerturbedModel model(polynomial_hazard(15.0, 0.001, 2.0), noise, 1.0);
    auto w = open("fig1_w_paths.csv");
    write_w_paths(w, noise, 1.0, 2, 501, seed);
    auto x = open("fig1_x_paths.csv");
    write_x_paths(x, model, 1.0, 2, 501, seed);
    return kOk;
  }
  if (id == "fig2") {
    const TelegraphParams noise(1.0, 1.0);
    const PerturbedModel case_a(polynomial_hazard(15.0, 0.001, 1.0), TelegraphParams(1.0, 15.0), 3.0);
    const PerturbedModel case_b(one_plus_exp_hazard(), noise, 5.0);
    const PerturbedModel case_c(bounded_excess_hazard(), noise, 10.0);
    auto f = open("fig2_band.csv");
    write_band(f, case_a, 3.0, 601, "a");
    std::ostringstream rest;
    write_band(rest, case_b, 5.0, 601, "b");
    write_band(rest, case_c, 10.0, 601, "c");
    // Drop the repeated headers so the file is one table.
    std::string line;
    std::istringstream in(rest.str());
    while (std::getline(in, line))
      if (line.rfind("case,", 0) != 0)
        f << line << '\n';
    auto lim = open("fig2_limits.csv");
    CsvWriter csv(lim, {"case", "nu", "limit_D"});
    for (const auto& [label, m] : {std::pair{"a", &case_a}, {"b", &case_b}, {"c", &case_c}})
      csv.row({std::string(label), m->nu(), std::exp(-m->nu())});
    return kOk;
  }
  if (id == "fig3" || id == "fig4") {
    const PerturbedModel model(polynomial_hazard(15.0, 0.001, 1.0), TelegraphParams(1.0, 15.0), 2.0);
    if (id == "fig3") {
      auto f = open("fig3_density.csv");
      write_x_density(f, model, {0.25, 0.5, 1.0}, 400);
    } else {
      auto f = open("fig4_moments.csv");
      write_moments(f, model, 2.0, 401);
    }
    return kOk;
  }
  if (id == "app1" || id == "app2") {
    const auto preset = application(id);
    const auto data = builtin(preset.dataset);
    const auto kernel = KernelSpec::epanechnikov();
    const auto config = make_band_config(data.values, preset.h, preset.alpha);
    const auto baseline = preset.baseline();
    const auto report = defensibility_test(data.values, kernel, config, baseline, preset.c);
    auto kde = open(id + "_kde.csv");
    write_kde(kde, data.values, kernel, preset.h, 801);
    auto margins = open(id + "_band.csv");
    write_margins(margins, report);
    auto rep = open(id + "_report.txt");
    write_report(rep, data, config, baseline, report);
    write_report(out, data, config, baseline, report);
    return report.holds ? kOk : kNotDefensible;
  }
  throw UsageError("unknown reproduce target '" + id + "'");
}

// Splices key=value lines from --config files in as --key=value right after
// the subcommand name; flags given explicitly come later and win.
std::vector<std::string> expand_config(std::vector<std::string> args)
{
  std::vector<std::string> injected;
  for (std::size_t i = 0; i < args.size();) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
    } else {
      ++i;
      continue;
    }
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos)
        continue;
      const auto e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      const auto eq = line.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("config: expected key=value, got '" + line + "'");
      auto key = line.substr(0, eq);
      key.erase(key.find_last_not_of(" \t") + 1);
      auto value = line.substr(eq + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      injected.push_back("--" + key + "=" + value);
    }
  }
  if (!injected.empty() && !args.empty())
    args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Telegraph-perturbed hazard rates: simulation, distributions and model checking", "telhaz"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--config", "plain key=value file supplying any subcommand flag");

  std::string output;
  std::uint64_t seed = 1;
  // One grid-size slot per subcommand so each keeps its own default.
  std::map<const CLI::App*, std::size_t> points_by_command;
  auto add_common = [&](CLI::App* sub, std::size_t default_points) {
    sub->add_option("-o,--output", output, "write the table to this file instead of stdout");
    auto& slot = points_by_command[sub];
    slot = default_points;
    sub->add_option("--points", slot, "number of grid points")->capture_default_str();
  };

  // simulate-w
  auto* sim_w = app.add_subcommand("simulate-w", "sample paths of the integrated telegraph process W(t)");
  NoiseOptions sim_w_noise;
  sim_w_noise.add(sim_w, 2.0, 15.0);
  double horizon = 1.0;
  std::size_t n_paths = 2;
  sim_w->add_option("--horizon", horizon, "time horizon")->capture_default_str();
  sim_w->add_option("--paths", n_paths, "number of paths")->capture_default_str();
  sim_w->add_option("--seed", seed, "random seed")->capture_default_str();
  add_common(sim_w, 201);

  // simulate-x
  auto* sim_x = app.add_subcommand("simulate-x", "sample paths of the perturbed distribution function X(t)");
  NoiseOptions sim_x_noise;
  sim_x_noise.add(sim_x, 2.0, 15.0);
  HazardOptions sim_x_hazard;
  sim_x_hazard.add(sim_x, "kind=polynomial alpha=15 beta=0.001 c_ref=<c>");
  sim_x->add_option("--horizon", horizon, "time horizon")->capture_default_str();
  sim_x->add_option("--paths", n_paths, "number of paths")->capture_default_str();
  sim_x->add_option("--seed", seed, "random seed")->capture_default_str();
  add_common(sim_x, 201);

  // density
  auto* dens = app.add_subcommand("density", "atoms and density of W(t) or X(t)");
  NoiseOptions dens_noise;
  dens_noise.add(dens, 1.0, 15.0);
  HazardOptions dens_hazard;
  dens_hazard.add(dens, "kind=polynomial alpha=15 beta=0.001 c_ref=<c>");
  std::string process = "x";
  std::string times_text = "0.25,0.5,1";
  dens->add_option("--process", process, "w or x")->check(CLI::IsMember({"w", "x"}))->capture_default_str();
  dens->add_option("--times", times_text, "comma-separated times")->capture_default_str();
  add_common(dens, 201);

  // moments
  auto* mom = app.add_subcommand("moments", "mean and variance of X(t)");
  NoiseOptions mom_noise;
  mom_noise.add(mom, 1.0, 15.0);
  HazardOptions mom_hazard;
  mom_hazard.add(mom, "kind=polynomial alpha=15 beta=0.001 c_ref=<c>");
  double t_max = 2.0;
  mom->add_option("--t-max", t_max, "last time of the grid")->capture_default_str();
  add_common(mom, 201);

  // band
  auto* bnd = app.add_subcommand("band", "support band [a(t), b(t)] of X(t) and its width D(t)");
  NoiseOptions bnd_noise;
  bnd_noise.add(bnd, 1.0, 15.0);
  HazardOptions bnd_hazard;
  bnd_hazard.add(bnd, "kind=polynomial alpha=15 beta=0.001 c_ref=<c>");
  bnd->add_option("--t-max", t_max, "last time of the grid")->capture_default_str();
  add_common(bnd, 201);

  // estimate
  auto* est = app.add_subcommand("estimate", "kernel estimates of f, F, r and the hazard confidence band");
  DataOptions est_data;
  est_data.add(est);
  double h = 0.0;
  double alpha = 0.025;
  std::string table = "kde";
  est->add_option("--bandwidth", h, "kernel bandwidth h")->required();
  est->add_option("--alpha", alpha, "tail level; band coverage is 1 - 2 alpha")->capture_default_str();
  est->add_option("--table", table, "kde (f, F, r over the data range) or band")
      ->check(CLI::IsMember({"kde", "band"}))
      ->capture_default_str();
  add_common(est, 512);

  // defensibility
  auto* def = app.add_subcommand("defensibility", "test whether the strip r(t) +- c fits in the band");
  DataOptions def_data;
  def_data.add(def);
  HazardOptions def_hazard;
  std::string format = "report";
  double c = 0.0;
  def_hazard.add(def, "required");
  def->add_option("--bandwidth", h, "kernel bandwidth h")->required();
  def->add_option("--alpha", alpha, "tail level")->capture_default_str();
  def->add_option("--c", c, "noise amplitude to test")->required();
  def->add_option("--format", format, "report or csv")
      ->check(CLI::IsMember({"report", "csv"}))
      ->capture_default_str();
  add_common(def, 512);

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "write every table for one figure or application preset");
  std::string target;
  std::string outdir = "telhaz_out";
  rep->add_option("target", target, "fig1 | fig2 | fig3 | fig4 | app1 | app2")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "app1", "app2"}));
  rep->add_option("--outdir", outdir, "output directory")->capture_default_str();
  rep->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    args = expand_config(std::move(args));
    std::vector<const char*> argv{"telhaz"};
    for (const auto& a : args)
      argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidationError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    if (*rep)
      return reproduce(target, outdir, seed, out);

    std::size_t points = 0;
    for (const auto& [sub, n] : points_by_command)
      if (sub->parsed())
        points = n;

    Sink sink(output, out);
    std::ostream& os = sink.stream();
    if (*sim_w) {
      if (!(horizon > 0.0))
        throw UsageError("--horizon must be > 0");
      write_w_paths(os, sim_w_noise.params(), horizon, n_paths, points, seed);
    } else if (*sim_x) {
      if (!(horizon > 0.0))
        throw UsageError("--horizon must be > 0");
      const PerturbedModel model(sim_x_hazard.spec(sim_x_noise.c), sim_x_noise.params(), horizon);
      write_x_paths(os, model, horizon, n_paths, points, seed);
    } else if (*dens) {
      const auto times = parse_list(times_text, "--times");
      if (process == "w") {
        write_w_density(os, dens_noise.params(), times, points);
      } else {
        const double last = *std::max_element(times.begin(), times.end());
        const PerturbedModel model(dens_hazard.spec(dens_noise.c), dens_noise.params(), std::max(last, 1e-9));
        write_x_density(os, model, times, points);
      }
    } else if (*mom) {
      if (!(t_max > 0.0))
        throw UsageError("--t-max must be > 0");
      const PerturbedModel model(mom_hazard.spec(mom_noise.c), mom_noise.params(), t_max);
      write_moments(os, model, t_max, points);
    } else if (*bnd) {
      if (!(t_max > 0.0))
        throw UsageError("--t-max must be > 0");
      const PerturbedModel model(bnd_hazard.spec(bnd_noise.c), bnd_noise.params(), t_max);
      write_band(os, model, t_max, points);
    } else if (*est) {
      const auto data = est_data.load_data();
      const auto kernel = KernelSpec::epanechnikov();
      if (table == "kde") {
        write_kde(os, data.values, kernel, h, points);
      } else {
        const auto config = make_band_config(data.values, h, alpha, points);
        write_confidence_band(os, confidence_band(data.values, kernel, config));
      }
    } else if (*def) {
      if (def_hazard.text.empty() && def_hazard.file.empty())
        throw UsageError("defensibility needs --hazard or --hazard-file");
      const auto data = def_data.load_data();
      const auto baseline = def_hazard.spec(c);
      const auto kernel = KernelSpec::epanechnikov();
      const auto config = make_band_config(data.values, h, alpha, points);
      const auto report = defensibility_test(data.values, kernel, config, baseline, c);
      if (format == "csv")
        write_margins(os, report);
      else
        write_report(os, data, config, baseline, report);
      return report.holds ? kOk : kNotDefensible;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const DatasetError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace telhaz::cli

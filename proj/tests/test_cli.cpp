#include "commands.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using telhaz::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args)
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    v.push_back(line);
  return v;
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path tmp_dir(const std::string& leaf)
{
  const fs::path dir = fs::path(TELHAZ_TEST_TMP) / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string report_value(const std::string& report, const std::string& key)
{
  for (const auto& line : lines(report))
    if (line.rfind(key + ": ", 0) == 0)
      return line.substr(key.size() + 2);
  return "";
}

}  // namespace

TEST_CASE("simulate-w: header, determinism, empty run")
{
  const auto a = call({"simulate-w", "--paths", "3", "--seed", "11"});
  const auto b = call({"simulate-w", "--paths", "3", "--seed", "11"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = lines(a.out);
  REQUIRE(!rows.empty());
  CHECK(rows.front() == "path_id,t,W");
  CHECK(rows.size() == 1 + 3 * 201);
  CHECK(call({"simulate-w", "--paths", "3", "--seed", "12"}).out != a.out);

  const auto empty = call({"simulate-w", "--paths", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "path_id,t,W\n");
}

TEST_CASE("simulate-x: columns and origin row")
{
  const auto r = call({"simulate-x", "--paths", "2", "--points", "11"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 2 * 11);
  CHECK(rows.front() == "path_id,t,W,X,F");
  CHECK(rows[1].rfind("0,0,0,0,", 0) == 0);
}

TEST_CASE("validation errors exit with 2 and explain")
{
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"simulate-w", "--c", "-1"},
           {"simulate-w", "--lambda", "0"},
           {"simulate-w", "--horizon", "0"},
           {"simulate-w", "--c", "abc"},
           {"simulate-x", "--c", "3", "--hazard", "kind=constant r0=1"},
           {"density", "--process", "y"},
           {"density", "--times", "0.5,zz"},
           {"estimate", "--dataset", "melanoma_46"},
           {"estimate", "--dataset", "nope", "--bandwidth", "6"},
           {"estimate", "--dataset", "melanoma_46", "--bandwidth", "-6"},
           {"defensibility", "--dataset", "melanoma_46", "--bandwidth", "6", "--c", "0.02", "--hazard",
            "kind=constant r0=0.0125"},
           {"defensibility", "--dataset", "melanoma_46", "--bandwidth", "6", "--c", "0.0004", "--hazard",
            "kind=bogus"},
           {"reproduce", "fig9"},
           {"no-such-command"},
       }) {
    CAPTURE(args.front());
    const auto r = call(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
  CHECK(call({}).code == 2);
}

TEST_CASE("defensibility: exit 0 when it holds, 3 when it does not")
{
  const std::vector<std::string> base{"defensibility", "--dataset", "melanoma_46", "--bandwidth", "6",
                                      "--hazard", "kind=constant r0=0.0125"};
  auto ok_args = base;
  ok_args.insert(ok_args.end(), {"--c", "0.0004"});
  const auto ok = call(ok_args);
  CHECK(ok.code == 0);
  CHECK(report_value(ok.out, "holds") == "true");
  const double cmax = std::stod(report_value(ok.out, "max_admissible_c"));
  CHECK(cmax >= 0.0004);

  auto bad_args = base;
  bad_args.insert(bad_args.end(), {"--c", std::to_string(cmax * 1.01)});
  const auto bad = call(bad_args);
  CHECK(bad.code == 3);
  CHECK(report_value(bad.out, "holds") == "false");
  CHECK(report_value(bad.out, "violating_t") != "none");

  auto csv_args = ok_args;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const auto csv = call(csv_args);
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  CHECK(rows.front() == "t,r_hat,lower,upper,baseline,margin");
  CHECK(rows.size() == 513);
}

TEST_CASE("estimate tables")
{
  const auto kde = call({"estimate", "--dataset", "melanoma_46", "--bandwidth", "6", "--points", "50"});
  CHECK(kde.code == 0);
  CHECK(lines(kde.out).front() == "t,f_hat,F_hat,r_hat");
  const auto band = call({"estimate", "--dataset", "service_86", "--bandwidth", "75", "--table", "band"});
  CHECK(band.code == 0);
  CHECK(lines(band.out).front() == "t,f_hat,F_hat,r_hat,lower,upper");
  CHECK(lines(band.out).size() == 513);
}

TEST_CASE("data and hazard files, config file, output file")
{
  const auto dir = tmp_dir("files");
  std::ofstream(dir / "data.txt") << "lifetime\n";
  {
    std::ofstream data(dir / "data.txt", std::ios::app);
    for (int i = 1; i <= 40; ++i)
      data << 10 + 3 * i + (i % 7) << "\n";
  }
  std::ofstream(dir / "hazard.cfg") << "kind=constant\nr0=0.02\n";
  std::ofstream(dir / "run.cfg") << "# defaults\nbandwidth=8\nc=0.0001\nformat=csv\n";

  const auto r = call({"defensibility", "--config", (dir / "run.cfg").string(), "--data-file",
                       (dir / "data.txt").string(), "--hazard-file", (dir / "hazard.cfg").string(), "-o",
                       (dir / "out.csv").string()});
  CHECK(r.code != 1);
  CHECK(r.code != 2);
  CHECK(r.out.empty());
  CHECK(lines(slurp(dir / "out.csv")).front() == "t,r_hat,lower,upper,baseline,margin");

  // Explicit flags override the config file.
  const auto report = call({"defensibility", "--config", (dir / "run.cfg").string(), "--format", "report",
                            "--data-file", (dir / "data.txt").string(), "--hazard-file",
                            (dir / "hazard.cfg").string()});
  CHECK(report_value(report.out, "h") == "8");
  CHECK(report_value(report.out, "c") == "1e-04");

  std::ofstream(dir / "broken.txt") << "1\n2\nthree\n";
  const auto broken = call({"estimate", "--data-file", (dir / "broken.txt").string(), "--bandwidth", "1"});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("three") != std::string::npos);

  CHECK(call({"simulate-w", "--config", (dir / "missing.cfg").string()}).code == 2);
}

TEST_CASE("reproduce: application presets")
{
  const auto dir = tmp_dir("app");
  const auto app1 = call({"reproduce", "app1", "--outdir", dir.string()});
  CHECK(app1.code == 0);
  CHECK(report_value(app1.out, "holds") == "true");
  CHECK(report_value(app1.out, "c") == "4e-04");
  CHECK(fs::exists(dir / "app1_kde.csv"));
  CHECK(fs::exists(dir / "app1_band.csv"));
  CHECK(report_value(slurp(dir / "app1_report.txt"), "holds") == "true");

  const auto app2 = call({"reproduce", "app2", "--outdir", dir.string()});
  CHECK(app2.code == 0);
  CHECK(report_value(app2.out, "holds") == "true");
}

TEST_CASE("reproduce: figure presets")
{
  const auto dir = tmp_dir("fig");
  for (const char* fig : {"fig1", "fig2", "fig3", "fig4"})
    CHECK(call({"reproduce", fig, "--outdir", dir.string()}).code == 0);
  for (const char* f : {"fig1_w_paths.csv", "fig1_x_paths.csv", "fig2_band.csv", "fig2_limits.csv", "fig3_density.csv",
                        "fig4_moments.csv"})
    CHECK(fs::exists(dir / f));

  std::set<std::string> times;
  const auto rows = lines(slurp(dir / "fig3_density.csv"));
  REQUIRE(rows.size() > 1);
  CHECK(rows.front() == "t,kind,x,value");
  for (std::size_t i = 1; i < rows.size(); ++i)
    times.insert(rows[i].substr(0, rows[i].find(',')));
  CHECK(times == std::set<std::string>{"0.25", "0.5", "1"});

  const auto again = tmp_dir("fig_again");
  CHECK(call({"reproduce", "fig1", "--outdir", again.string()}).code == 0);
  CHECK(slurp(dir / "fig1_x_paths.csv") == slurp(again / "fig1_x_paths.csv"));
}

TEST_CASE("moments and band tables")
{
  const auto m = call({"moments", "--points", "5"});
  CHECK(m.code == 0);
  CHECK(lines(m.out).front() == "t,mean,variance,F");
  CHECK(lines(m.out).size() == 6);
  const auto b = call({"band", "--points", "5"});
  CHECK(b.code == 0);
  CHECK(lines(b.out).front() == "t,a,b,D,F,nondecreasing,nu");
}

#include "telhaz/datasets.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace telhaz {
namespace {

constexpr double kMelanoma[] = {
    13, 14, 19, 19, 20, 21, 23, 23, 25, 26, 26, 27, 27, 31, 32, 34, 34,
    37, 38, 38, 46, 46, 50, 53, 54, 57, 58, 59, 60, 65, 65, 66, 70, 85,
    90, 98, 102, 103, 110, 118, 124, 130, 136, 138, 141, 234,
};

constexpr double kService[] = {
    220,  233,  234,  240,  265,  270,  273,  279,  285,  287,  294,  295,  300,  325,  328,
    333,  365,  368,  369,  381,  417,  418,  429,  460,  470,  474,  475,  476,  508,  522,  523,
    535,  542,  570,  580,  604,  612,  613,  614,  615,  634,  636,  637,  638,  651,  657,  660,
    666,  668,  680,  681,  684,  691,  693,  705,  717,  834,  837,  841,  843,  845,  875,  972,
    1037, 1084, 1091, 1109, 1117, 1197, 1258, 1269, 1297, 1309, 1322, 1346, 1349,
    1359, 1363, 1448, 1476, 1481, 1557, 1606, 1610, 1642, 1659,
};

template <std::size_t N>
std::vector<double> to_vector(const double (&a)[N])
{
  return {a, a + N};
}

std::vector<std::string_view> split_tokens(std::string_view line)
{
  constexpr std::string_view seps = " \t\r,;";
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const auto start = line.find_first_not_of(seps, i);
    if (start == std::string_view::npos)
      break;
    auto stop = line.find_first_of(seps, start);
    if (stop == std::string_view::npos)
      stop = line.size();
    out.push_back(line.substr(start, stop - start));
    i = stop;
  }
  return out;
}

std::optional<double> parse_value(std::string_view token)
{
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+')
    ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    return std::nullopt;
  return v;
}

}  // namespace

NamedDataset builtin(std::string_view name)
{
  if (name == "melanoma_46")
    return {"melanoma_46", Sample(to_vector(kMelanoma)),
            "Survival times of melanoma patients, Central Oncology Group study "
            "(Susarla and Van Ryzin 1986; as listed by Ahmad 1999)"};
  if (name == "service_86")
    return {"service_86", Sample(to_vector(kService)),
            "Service times of a single component in a reliability study "
            "(Langseth and Lindqvist 2005, Table 1)"};
  throw std::out_of_range("unknown builtin dataset '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"melanoma_46", "service_86"}; }

NamedDataset parse_dataset(std::string_view text, std::string name)
{
  struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
  };
  std::vector<Line> lines;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (!tokens.empty())
      lines.push_back({line_no, std::move(tokens)});
  }

  // A single-column CSV may open with a column name.
  std::size_t first = 0;
  if (lines.size() > 1 && lines[0].tokens.size() == 1 && !parse_value(lines[0].tokens[0]))
    first = 1;

  std::vector<double> values;
  for (std::size_t li = first; li < lines.size(); ++li) {
    for (auto token : lines[li].tokens) {
      const auto v = parse_value(token);
      const std::string where = name + ":" + std::to_string(lines[li].number) + ": ";
      if (!v)
        throw DatasetError(where + "non-numeric token '" + std::string(token) + "'");
      if (!std::isfinite(*v) || *v <= 0.0)
        throw DatasetError(where + "value '" + std::string(token) + "' must be finite and > 0");
      values.push_back(*v);
    }
  }
  if (values.size() < 3)
    throw DatasetError(name + ": need at least 3 observations, got " + std::to_string(values.size()));
  return {std::move(name), Sample(std::move(values)), "inline"};
}

NamedDataset load(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw DatasetError("cannot open dataset file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto ds = parse_dataset(buf.str(), path.filename().string());
  ds.source = path.string();
  return ds;
}

void write_dataset(std::ostream& os, const Sample& sample)
{
  char buf[64];
  for (double v : sample.values()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, ptr - buf);
    os << '\n';
  }
}

}  // namespace telhaz

#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace telhaz::cli {

std::string format_number(double v)
{
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::ostream& os, std::initializer_list<std::string_view> header)
    : os_(os), columns_(header.size())
{
  bool first = true;
  for (auto h : header) {
    os_ << (first ? "" : ",") << h;
    first = false;
  }
  os_ << '\n';
}

void CsvWriter::row(std::initializer_list<Cell> cells)
{
  if (cells.size() != columns_)
    throw std::logic_error("csv row width does not match header");
  bool first = true;
  for (const auto& cell : cells) {
    if (!first)
      os_ << ',';
    first = false;
    if (const auto* d = std::get_if<double>(&cell))
      os_ << format_number(*d);
    else if (const auto* i = std::get_if<long long>(&cell))
      os_ << *i;
    else
      os_ << std::get<std::string>(cell);
  }
  os_ << '\n';
}

}  // namespace telhaz::cli

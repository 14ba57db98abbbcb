#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace telhaz::cli {

// Shortest representation that round-trips, so output is byte-stable.
std::string format_number(double v);

using Cell = std::variant<double, long long, std::string>;

class CsvWriter {
public:
  CsvWriter(std::ostream& os, std::initializer_list<std::string_view> header);

  void row(std::initializer_list<Cell> cells);

private:
  std::ostream& os_;
  std::size_t columns_;
};

}  // namespace telhaz::cli

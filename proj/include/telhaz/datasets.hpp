#pragma once

#include "telhaz/estimation.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace telhaz {

struct NamedDataset {
  std::string name;
  Sample values;
  std::string source;
};

// Thrown by load() and parse_dataset(); the message names the offending
// line and token.
class DatasetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// "melanoma_46": survival times (n = 46) of melanoma patients.
// "service_86": service times (n = 86) of a single repairable component.
// Throws std::out_of_range for unknown names.
NamedDataset builtin(std::string_view name);
std::vector<std::string> builtin_names();

// Whitespace/newline separated numbers, or a single-column CSV (an optional
// non-numeric header on the first line is skipped; '#' starts a comment).
NamedDataset parse_dataset(std::string_view text, std::string name = "inline");
NamedDataset load(const std::filesystem::path& path);

// One value per line, shortest round-trip representation.
void write_dataset(std::ostream& os, const Sample& sample);

}  // namespace telhaz

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace mpt::cli {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Column-oriented result of one command. `notes` become '#' lines ahead of the CSV
/// header and meta.notes in JSON.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
  nlohmann::ordered_json well = nlohmann::ordered_json::object();
  nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();

  void add_row(std::vector<Cell> row);
};

/// 17 significant digits, '.' separator, LF line endings.
std::string format_double(double v);

void write_csv(const Table& t, std::ostream& out);
nlohmann::ordered_json to_json(const Table& t);
void write_json(const Table& t, std::ostream& out);

}  // namespace mpt::cli

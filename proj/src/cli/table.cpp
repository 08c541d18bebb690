#include "mpt/cli/table.hpp"

#include <Eigen/Core>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mpt::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table row width " + std::to_string(row.size()) + " != " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& note : t.notes) out << "# " << note << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  j["well"] = t.well;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  nlohmann::ordered_json meta;
  meta["tolerances"] = t.tolerances;
  meta["versions"] = {{"mpt", "1.0.0"},
                      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                    std::to_string(EIGEN_MINOR_VERSION)},
                      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
  if (!t.notes.empty()) meta["notes"] = t.notes;
  if (!t.summary.empty()) meta["summary"] = t.summary;
  j["meta"] = std::move(meta);
  return j;
}

void write_json(const Table& t, std::ostream& out) { out << to_json(t).dump(2) << '\n'; }

}  // namespace mpt::cli

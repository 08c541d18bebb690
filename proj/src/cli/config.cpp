#include "mpt/cli/config.hpp"

#include <fstream>

#include "json.hpp"

namespace mpt::cli {

namespace {

using nlohmann::json;

template <typename T>
void read_key(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

template <typename T>
void read_key(const json& j, const char* key, std::optional<T>& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

}  // namespace

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    read_key(j, "q", cfg.well.q);
    read_key(j, "D", cfg.well.depth);
    read_key(j, "alpha", cfg.well.alpha);
    read_key(j, "mu", cfg.well.mu);
    read_key(j, "hbar", cfg.well.hbar);
    read_key(j, "nu", cfg.nu);
    read_key(j, "lambda", cfg.lambda);
    read_key(j, "op", cfg.op);
    read_key(j, "method", cfg.method);
    read_key(j, "order", cfg.order);
    read_key(j, "model", cfg.model);
    read_key(j, "suite", cfg.suite);
    read_key(j, "p-signs", cfg.p_signs);
    read_key(j, "omega-e", cfg.omega_e);
    read_key(j, "xe-omega-e", cfg.xe_omega_e);
    read_key(j, "format", cfg.format);
    read_key(j, "out", cfg.out);
    read_key(j, "oracle-order", cfg.oracle.rule_order);
    read_key(j, "oracle-panels", cfg.oracle.panels);
  } catch (const json::exception& e) {
    throw UsageError("bad config file " + path + ": " + e.what());
  }
}

bool has_well(const RunConfig& cfg) { return cfg.well.q.has_value() || cfg.well.depth.has_value(); }

PotentialSpec resolve_well(const RunConfig& cfg) {
  const auto& w = cfg.well;
  if (w.q && w.depth) throw UsageError("give either --q or --D, not both");
  if (!w.q && !w.depth) throw UsageError("a well is required: --q or --D");
  try {
    if (w.q) return PotentialSpec::for_integer_q(*w.q, w.alpha, w.mu, w.hbar);
    return PotentialSpec(*w.depth, w.alpha, w.mu, w.hbar);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

int resolve_nu(const RunConfig& cfg) {
  if (cfg.nu) return *cfg.nu;
  if (!has_well(cfg)) throw UsageError("give --nu or a well");
  const auto spec = resolve_well(cfg);
  const auto wn = well_numbers(spec);
  if (!wn.integer_q) throw UsageError("this command needs an integer-q well or --nu");
  return 2 * *wn.integer_q + 1;
}

}  // namespace mpt::cli

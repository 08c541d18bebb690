#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mpt/oracle.hpp"
#include "mpt/states.hpp"

namespace mpt::cli {

/// Bad flags, bad config files and precondition failures; exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct WellInput {
  std::optional<int> q;
  std::optional<double> depth;
  double alpha = 1.0;
  double mu = 1.0;
  double hbar = 1.0;
};

struct RunConfig {
  WellInput well;
  std::optional<int> nu;
  double lambda = 0.0;
  std::string op;
  std::string method = "closed";
  int order = 1;
  std::string model = "compare";
  std::string suite = "all";
  std::string p_signs = "sech";
  std::optional<double> omega_e;
  std::optional<double> xe_omega_e;
  std::string format = "csv";
  std::string out;
  oracle::OracleConfig oracle;
};

/// Merge a JSON config file into `cfg`. Keys mirror the long flag names
/// ("q", "D", "alpha", "oracle-order", ...).
void apply_config_file(const std::string& path, RunConfig& cfg);

bool has_well(const RunConfig& cfg);

/// The potential described by the config; UsageError when both or neither forms are set.
PotentialSpec resolve_well(const RunConfig& cfg);

/// ν from --nu, else 2q+1 from the well (which must then have integer q).
int resolve_nu(const RunConfig& cfg);

}  // namespace mpt::cli

#include "mpt/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "mpt/expansion.hpp"
#include "mpt/jacobi.hpp"
#include "mpt/oracle.hpp"
#include "mpt/su2_ladder.hpp"
#include "mpt/vibron.hpp"

namespace mpt::cli {

namespace {

using nlohmann::ordered_json;

std::int64_t i64(int v) { return static_cast<std::int64_t>(v); }

int require_q_at_least(const PotentialSpec& spec, int minimum, const std::string& what) {
  const int q = require_integer_q(spec);
  if (q < minimum) {
    throw UsageError(what + " needs an integer q >= " + std::to_string(minimum) + " (q = " + std::to_string(q) + ")");
  }
  return q;
}

expansion::MomentumSigns parse_signs(const std::string& s) {
  if (s == "sech") return expansion::MomentumSigns::kSechConsistent;
  if (s == "printed") return expansion::MomentumSigns::kAsPrinted;
  if (s == "alternating") return expansion::MomentumSigns::kPrintedAlternating;
  throw UsageError("unknown --p-signs value " + s);
}

void dump_matrix(Table& t, const Matrix& m) {
  t.columns = {"row", "col", "value"};
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) t.add_row({i64(r), i64(c), m(r, c)});
  }
}

// Expansions are compared against the oracle of the configured well, or of q = (nu-1)/2.
PotentialSpec well_for_nu(const RunConfig& cfg, int nu) {
  if (!has_well(cfg)) {
    return PotentialSpec::for_integer_q((nu - 1) / 2, cfg.well.alpha, cfg.well.mu, cfg.well.hbar);
  }
  const auto spec = resolve_well(cfg);
  if (2 * require_integer_q(spec) + 1 != nu) throw UsageError("--nu does not match the well");
  return spec;
}

ordered_json oracle_tolerances(const RunConfig& cfg) {
  return {{"oracle_rule_order", cfg.oracle.rule_order},
          {"oracle_panels", cfg.oracle.panels},
          {"oracle_tail_tolerance", cfg.oracle.tail_tolerance}};
}

}  // namespace

ordered_json describe_well(const PotentialSpec& spec) {
  const auto wn = well_numbers(spec);
  ordered_json w = {{"D", spec.depth()}, {"alpha", spec.alpha()}, {"mu", spec.mu()}, {"hbar", spec.hbar()},
                    {"k", wn.k},         {"q", wn.q},              {"nu", wn.nu}};
  w["n_max"] = wn.n_max ? ordered_json(*wn.n_max) : ordered_json(nullptr);
  return w;
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
  const auto spec = resolve_well(cfg);
  const auto wn = well_numbers(spec);
  if (!wn.n_max) throw UsageError("the well has no bound states (q = " + format_double(wn.q) + ")");
  CommandResult res;
  auto& t = res.table;
  t.command = "spectrum";
  t.well = describe_well(spec);
  t.columns = {"n", "epsilon", "m", "energy"};
  for (int n = 0; n <= *wn.n_max; ++n) {
    const auto label = state_label(spec, n);
    t.add_row({i64(n), label.epsilon, label.m, energy(spec, n)});
  }
  return res;
}

CommandResult cmd_matelem(const RunConfig& cfg) {
  const std::string& op = cfg.op;
  const std::string& method = cfg.method;
  if (op != "sinh" && op != "coshd" && op != "x" && op != "p") throw UsageError("--op must be sinh, coshd, x or p");
  if (method == "closed" && op != "sinh" && op != "coshd") throw UsageError("closed forms exist only for sinh and coshd");
  if (method == "expansion" && op != "x" && op != "p") throw UsageError("expansions exist only for x and p");
  if (method != "closed" && method != "oracle" && method != "expansion") {
    throw UsageError("--method must be closed, oracle or expansion");
  }

  CommandResult res;
  auto& t = res.table;
  t.command = "matelem";
  if (op == "p") t.notes.push_back("p = -i hbar R; value holds the real matrix R = <row| d/dx |col>");

  if (method == "closed") {
    const int nu = resolve_nu(cfg);
    if (has_well(cfg)) t.well = describe_well(resolve_well(cfg));
    t.well["nu"] = nu;
    dump_matrix(t, op == "sinh" ? su2::sinh_matrix(nu).values : su2::cosh_ddx_matrix(nu).values);
    return res;
  }

  if (method == "oracle") {
    const auto spec = resolve_well(cfg);
    require_integer_q(spec);
    t.well = describe_well(spec);
    t.tolerances = oracle_tolerances(cfg);
    Matrix m;
    if (op == "sinh") m = oracle::observable_matrix(spec, oracle::Observable::sinh_alpha_x(), cfg.oracle).values;
    if (op == "coshd") m = oracle::observable_matrix(spec, oracle::Observable::cosh_ddx_over_alpha(), cfg.oracle).values;
    if (op == "x") m = oracle::observable_matrix(spec, oracle::Observable::position_x(), cfg.oracle).values;
    if (op == "p") m = oracle::derivative_matrix(spec, cfg.oracle).values;
    dump_matrix(t, m);
    return res;
  }

  const int nu = resolve_nu(cfg);
  const auto spec = well_for_nu(cfg, nu);
  t.well = describe_well(spec);
  t.tolerances = oracle_tolerances(cfg);
  Matrix approx, reference;
  if (op == "x") {
    approx = expansion::x_matrix_expansion(nu, spec.alpha(), cfg.order).values;
    reference = oracle::observable_matrix(spec, oracle::Observable::position_x(), cfg.oracle).values;
    if (cfg.order == 5) t.notes.push_back("order 5 extends the series beyond its displayed terms");
  } else {
    approx = expansion::p_matrix_expansion(nu, spec.alpha(), cfg.order, parse_signs(cfg.p_signs)).values;
    reference = oracle::derivative_matrix(spec, cfg.oracle).values;
    t.notes.push_back("cubic momentum signs: " + cfg.p_signs);
  }
  t.columns = {"row", "col", "value", "oracle", "deviation"};
  double worst = 0.0;
  for (int r = 0; r < approx.rows(); ++r) {
    for (int c = 0; c < approx.cols(); ++c) {
      const double dev = approx(r, c) - reference(r, c);
      worst = std::max(worst, std::fabs(dev));
      t.add_row({i64(r), i64(c), approx(r, c), reference(r, c), dev});
    }
  }
  t.summary["order"] = cfg.order;
  t.summary["max_abs_deviation"] = worst;
  return res;
}

CommandResult cmd_vibron(const RunConfig& cfg) {
  const auto spec = resolve_well(cfg);
  const std::string& model = cfg.model;
  CommandResult res;
  auto& t = res.table;
  t.command = "vibron";
  t.well = describe_well(spec);
  t.tolerances = oracle_tolerances(cfg);
  t.summary["model"] = model;
  t.summary["lambda"] = cfg.lambda;

  if (model == "compare") {
    require_q_at_least(spec, 3, "vibron --model compare");
    const auto report = vibron::compare_models(spec, cfg.lambda, cfg.oracle);
    t.columns = {"index", "n1", "n2", "polyad", "su2", "exact", "crude", "zA-zB", "dev_su2", "dev_crude", "dev_zA-zB"};
    for (const auto& r : report.rows) {
      t.add_row({i64(r.index), i64(r.n1), i64(r.n2), i64(r.polyad), r.su2, r.exact, r.crude, r.zeta,
                 r.su2 - r.exact, r.crude - r.exact, r.zeta - r.exact});
    }
    t.summary["low_polyad_max"] = vibron::kLowPolyad;
    t.summary["low_polyad_dev_su2"] = report.low_polyad_dev_su2;
    t.summary["low_polyad_dev_crude"] = report.low_polyad_dev_crude;
    t.summary["low_polyad_dev_zA-zB"] = report.low_polyad_dev_zeta;
    t.summary["max_dev_su2"] = report.max_dev_su2;
    t.summary["max_dev_crude"] = report.max_dev_crude;
    t.summary["max_dev_zA-zB"] = report.max_dev_zeta;
    t.notes.push_back("low-polyad max |model - exact|: su2 " + format_double(report.low_polyad_dev_su2) + ", crude " +
                      format_double(report.low_polyad_dev_crude) + ", zA-zB " +
                      format_double(report.low_polyad_dev_zeta));
    return res;
  }

  vibron::TwoOscMatrix h;
  if (model == "su2") {
    const auto vp = vibron::vibron_params_from_spectro(vibron::spectro_from_potential(spec), cfg.lambda);
    h = vibron::h_su2_matrix(vp, vibron::make_basis(vp.N / 2), vibron::EnergyOrigin::kDissociation);
    t.notes.push_back("energies measured from dissociation");
  } else if (model == "exact" || model == "crude" || model == "zA-zB") {
    const int q = require_q_at_least(spec, 3, "vibron --model " + model);
    const auto basis = vibron::make_basis(q);
    h = vibron::mpt_diagonal(spec, basis);
    if (model == "exact") {
      h.values += vibron::h_mpt_exact_interaction(spec, basis, cfg.lambda, cfg.oracle).values;
    } else {
      const auto level = model == "crude" ? vibron::ApproxLevel::kCrude : vibron::ApproxLevel::kZetaCorrected;
      h.values += vibron::h_mpt_approx_interaction(2 * q + 1, cfg.lambda, expansion::omega_tilde(spec), spec.hbar(),
                                                   level)
                      .values;
    }
  } else {
    throw UsageError("--model must be su2, exact, crude, zA-zB or compare");
  }

  const auto es = jacobi_eigensystem(h.values);
  t.columns = {"index", "energy", "n1", "n2", "polyad"};
  for (int k = 0; k < static_cast<int>(es.values.size()); ++k) {
    const auto [n1, n2] = h.basis.pairs[es.dominant[k]];
    t.add_row({i64(k), es.values[k], i64(n1), i64(n2), i64(n1 + n2)});
  }
  return res;
}

CommandResult cmd_params(const RunConfig& cfg) {
  const bool spectro = cfg.omega_e.has_value() || cfg.xe_omega_e.has_value();
  if (spectro && has_well(cfg)) throw UsageError("give either a well or --omega-e/--xe-omega-e, not both");
  CommandResult res;
  auto& t = res.table;
  t.command = "params";
  t.columns = {"quantity", "value"};

  vibron::SpectroParams sp;
  PotentialSpec spec = PotentialSpec(1.0, 1.0, 1.0, 1.0);
  if (spectro) {
    if (!cfg.omega_e || !cfg.xe_omega_e) throw UsageError("--omega-e and --xe-omega-e go together");
    sp = {*cfg.omega_e, *cfg.xe_omega_e};
    const auto vp = vibron::vibron_params_from_spectro(sp, cfg.lambda);
    // x_e w_e = alpha^2 hbar^2 / 2 mu fixes alpha; w_e = 2 x_e w_e k fixes the depth.
    const double mu = cfg.well.mu, hbar = cfg.well.hbar;
    const double alpha = std::sqrt(2.0 * mu * sp.xe_omega_e) / hbar;
    const double k = sp.omega_e / (2.0 * sp.xe_omega_e);
    spec = PotentialSpec((k * k - 0.25) * sp.xe_omega_e, alpha, mu, hbar);
    t.add_row({std::string("omega_e"), sp.omega_e});
    t.add_row({std::string("xe_omega_e"), sp.xe_omega_e});
    t.add_row({std::string("N"), static_cast<double>(vp.N)});
    t.add_row({std::string("hbar_omega0"), vp.hbar_omega0});
  } else {
    spec = resolve_well(cfg);
    sp = vibron::spectro_from_potential(spec);
    const auto vp = vibron::vibron_params_from_spectro(sp, cfg.lambda);
    t.add_row({std::string("D"), spec.depth()});
    t.add_row({std::string("alpha"), spec.alpha()});
    t.add_row({std::string("mu"), spec.mu()});
    t.add_row({std::string("hbar"), spec.hbar()});
    t.add_row({std::string("omega_e"), sp.omega_e});
    t.add_row({std::string("xe_omega_e"), sp.xe_omega_e});
    t.add_row({std::string("N"), static_cast<double>(vp.N)});
    t.add_row({std::string("hbar_omega0"), vp.hbar_omega0});
  }
  const auto wn = well_numbers(spec);
  t.well = describe_well(spec);
  if (spectro) {
    t.add_row({std::string("D"), spec.depth()});
    t.add_row({std::string("alpha"), spec.alpha()});
    t.add_row({std::string("mu"), spec.mu()});
    t.add_row({std::string("hbar"), spec.hbar()});
  }
  t.add_row({std::string("k"), wn.k});
  t.add_row({std::string("q"), wn.integer_q ? static_cast<double>(*wn.integer_q) : wn.q});
  t.add_row({std::string("nu"), wn.integer_q ? static_cast<double>(2 * *wn.integer_q + 1) : wn.nu});
  return res;
}

namespace {

struct Bound {
  CLI::Option* option;
  std::function<void(RunConfig&)> apply;
};

template <typename T, typename Setter>
void bind_option(CLI::App* app, std::vector<Bound>& binds, const std::string& name, const std::string& help,
          std::shared_ptr<T> slot, Setter setter) {
  CLI::Option* opt = app->add_option(name, *slot, help);
  binds.push_back({opt, [slot, setter](RunConfig& cfg) { setter(cfg, *slot); }});
}

void add_common(CLI::App* app, std::vector<Bound>& binds, std::shared_ptr<std::string> config_path) {
  bind_option(app, binds, "--q", "integer q of the well", std::make_shared<int>(0),
       [](RunConfig& c, int v) { c.well.q = v; });
  bind_option(app, binds, "--D", "well depth", std::make_shared<double>(0.0),
       [](RunConfig& c, double v) { c.well.depth = v; });
  bind_option(app, binds, "--alpha", "inverse range", std::make_shared<double>(1.0),
       [](RunConfig& c, double v) { c.well.alpha = v; });
  bind_option(app, binds, "--mu", "mass", std::make_shared<double>(1.0), [](RunConfig& c, double v) { c.well.mu = v; });
  bind_option(app, binds, "--hbar", "reduced Planck constant", std::make_shared<double>(1.0),
       [](RunConfig& c, double v) { c.well.hbar = v; });
  bind_option(app, binds, "--nu", "odd representation size", std::make_shared<int>(0), [](RunConfig& c, int v) { c.nu = v; });
  bind_option(app, binds, "--oracle-order", "Gauss-Legendre points per panel", std::make_shared<int>(24),
       [](RunConfig& c, int v) { c.oracle.rule_order = v; });
  bind_option(app, binds, "--oracle-panels", "quadrature panels", std::make_shared<int>(32),
       [](RunConfig& c, int v) { c.oracle.panels = v; });
  auto fmt = std::make_shared<std::string>("csv");
  CLI::Option* fopt = app->add_option("--format", *fmt, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  binds.push_back({fopt, [fmt](RunConfig& c) { c.format = *fmt; }});
  bind_option(app, binds, "--out", "output path (default stdout)", std::make_shared<std::string>(),
       [](RunConfig& c, const std::string& v) { c.out = v; });
  app->add_option("--config", *config_path, "JSON config file; flags override it");
}

void emit(const RunConfig& cfg, const Table& table, std::ostream& out) {
  std::ostringstream text;
  if (cfg.format == "json") {
    write_json(table, text);
  } else {
    write_csv(table, text);
  }
  if (cfg.out.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified Poschl-Teller well: spectra, su(2) matrix elements and vibron models", "mpt"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* app;
    std::function<CommandResult(const RunConfig&)> handler;
    std::vector<Bound> binds;
    std::shared_ptr<std::string> config_path = std::make_shared<std::string>();
  };
  std::vector<Sub> subs;
  subs.reserve(5);
  const auto add_sub = [&](const char* name, const char* help, std::function<CommandResult(const RunConfig&)> handler) {
    subs.push_back({app.add_subcommand(name, help), std::move(handler), {}});
    add_common(subs.back().app, subs.back().binds, subs.back().config_path);
    return &subs.back();
  };

  add_sub("spectrum", "bound-state energies", cmd_spectrum);
  Sub* matelem = add_sub("matelem", "operator matrix elements", cmd_matelem);
  bind_option(matelem->app, matelem->binds, "--op", "sinh, coshd, x or p", std::make_shared<std::string>(),
       [](RunConfig& c, const std::string& v) { c.op = v; });
  bind_option(matelem->app, matelem->binds, "--method", "closed, oracle or expansion", std::make_shared<std::string>("closed"),
       [](RunConfig& c, const std::string& v) { c.method = v; });
  bind_option(matelem->app, matelem->binds, "--order", "expansion order", std::make_shared<int>(1),
       [](RunConfig& c, int v) { c.order = v; });
  bind_option(matelem->app, matelem->binds, "--p-signs", "cubic momentum signs: sech, printed or alternating",
       std::make_shared<std::string>("sech"), [](RunConfig& c, const std::string& v) { c.p_signs = v; });
  Sub* verify = add_sub("verify", "invariant checks", cmd_verify);
  bind_option(verify->app, verify->binds, "--suite", "algebra, states, matelem, expansion, vibron or all",
       std::make_shared<std::string>("all"), [](RunConfig& c, const std::string& v) { c.suite = v; });
  bind_option(verify->app, verify->binds, "--lambda", "coupling for the vibron suite", std::make_shared<double>(0.0),
       [](RunConfig& c, double v) { c.lambda = v; });
  Sub* vib = add_sub("vibron", "two coupled oscillators", cmd_vibron);
  bind_option(vib->app, vib->binds, "--lambda", "coupling", std::make_shared<double>(0.0),
       [](RunConfig& c, double v) { c.lambda = v; });
  bind_option(vib->app, vib->binds, "--model", "su2, exact, crude, zA-zB or compare", std::make_shared<std::string>("compare"),
       [](RunConfig& c, const std::string& v) { c.model = v; });
  Sub* params = add_sub("params", "parameter conversions", cmd_params);
  bind_option(params->app, params->binds, "--omega-e", "harmonic constant", std::make_shared<double>(0.0),
       [](RunConfig& c, double v) { c.omega_e = v; });
  bind_option(params->app, params->binds, "--xe-omega-e", "anharmonicity constant", std::make_shared<double>(0.0),
       [](RunConfig& c, double v) { c.xe_omega_e = v; });
  bind_option(params->app, params->binds, "--lambda", "coupling", std::make_shared<double>(0.0),
       [](RunConfig& c, double v) { c.lambda = v; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    try {
      RunConfig cfg;
      if (!sub.config_path->empty()) apply_config_file(*sub.config_path, cfg);
      for (const auto& b : sub.binds) {
        if (b.option->count() > 0) b.apply(cfg);
      }
      const CommandResult res = sub.handler(cfg);
      emit(cfg, res.table, out);
      if (res.exit_code == kExitVerifyFailed) err << "verification failed\n";
      return res.exit_code;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "numerical failure: " << e.what() << '\n';
      return kExitNumerical;
    }
  }
  return kExitUsage;
}

}  // namespace mpt::cli

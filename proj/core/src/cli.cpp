#include "thermal_jcm/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "thermal_jcm/experiments.hpp"
#include "thermal_jcm/io.hpp"
#include "thermal_jcm/model.hpp"
#include "thermal_jcm/oracle.hpp"
#include "thermal_jcm/tfd_expansion.hpp"
#include "thermal_jcm/version.hpp"
#include "thermal_jcm/zero_temp.hpp"

namespace tjcm::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

struct CommonOptions {
  ModelParams params;
  std::optional<double> beta;
  std::optional<double> theta;
  TimeGrid grid{0.0, 20.0 * M_PI, 10001};
  int truncation = kDefaultTruncation;
  OracleConfig oracle;
  std::string output;
  std::string svg;
};

void add_model_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--omega0", opt.params.omega0, "atom transition frequency")
      ->capture_default_str();
  cmd->add_option("--omega", opt.params.omega, "cavity mode frequency")->capture_default_str();
  cmd->add_option("--kappa", opt.params.kappa, "coupling constant")->capture_default_str();
  cmd->add_option("--alpha", opt.params.alpha, "coherent-state amplitude")
      ->capture_default_str();
}

void add_thermal_flags(CLI::App* cmd, CommonOptions& opt) {
  auto* beta = cmd->add_option("--beta", opt.beta, "inverse temperature (k_B = 1)");
  auto* theta = cmd->add_option("--theta", opt.theta,
                                "boson mixing angle theta; the fermion angle follows from the "
                                "omega pair");
  beta->excludes(theta);
  theta->excludes(beta);
}

void add_grid_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--t0", opt.grid.t0, "grid start time")->capture_default_str();
  cmd->add_option("--t1", opt.grid.t1, "grid end time")->capture_default_str();
  cmd->add_option("--steps", opt.grid.samples, "number of samples, endpoints inclusive")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonOptions& opt, bool required = true) {
  auto* o = cmd->add_option("--output,-o", opt.output, "CSV output path");
  if (required) o->required();
  cmd->add_option("--svg", opt.svg, "optional SVG plot path");
}

ThermalPoint resolve_thermal(const CommonOptions& opt) {
  if (opt.beta) return thermal_point(*opt.beta, opt.params);
  if (opt.theta) return thermal_point_from_theta(*opt.theta, opt.params);
  return ThermalPoint{};  // zero temperature
}

void warn_if_outside_validated_range(const ThermalPoint& thermal) {
  if (thermal.boson_theta > M_PI / 32.0) {
    std::cerr << "warning: theta = " << thermal.boson_theta
              << " exceeds the validated perturbative range (theta <= pi/32); the "
                 "third-order series may be unreliable\n";
  }
}

std::map<std::string, std::string> echo_common(const std::string& subcommand,
                                               const CommonOptions& opt,
                                               const ThermalPoint& thermal) {
  std::map<std::string, std::string> m;
  m["subcommand"] = subcommand;
  m["omega0"] = fmt(opt.params.omega0);
  m["omega"] = fmt(opt.params.omega);
  m["kappa"] = fmt(opt.params.kappa);
  m["alpha"] = fmt(opt.params.alpha);
  m["beta"] = fmt(thermal.beta);
  m["theta"] = fmt(thermal.boson_theta);
  m["Theta"] = fmt(thermal.fermion_theta);
  m["truncation"] = std::to_string(opt.truncation);
  m["threads_env"] = "THERMAL_JCM_THREADS";
  return m;
}

int run_inversion(const CommonOptions& opt) {
  const DerivedParams derived = derive(opt.params);
  const ThermalPoint thermal = resolve_thermal(opt);
  warn_if_outside_validated_range(thermal);
  const InversionTrace trace = inversion_trace(opt.params, derived, thermal, opt.grid,
                                               opt.truncation);

  std::vector<CsvRow> rows(trace.t.size());
  for (std::size_t i = 0; i < trace.t.size(); ++i) {
    const auto& b = trace.breakdown[i];
    rows[i].values = {trace.t[i],        trace.sigma_z[i],  b.weighted[0][0],
                      b.weighted[1][0],  b.weighted[2][0],  b.weighted[3][0],
                      b.weighted[0][1],  b.weighted[1][1],  b.weighted[2][1],
                      b.weighted[3][1]};
  }
  write_csv(opt.output,
            {"t", "sigma_z", "w0_1", "w1_1", "w2_1", "w3_1", "w0_2", "w1_2", "w2_2", "w3_2"},
            rows);
  auto echo = echo_common("inversion", opt, thermal);
  echo["t0"] = fmt(opt.grid.t0);
  echo["t1"] = fmt(opt.grid.t1);
  echo["steps"] = std::to_string(opt.grid.samples);
  write_json_sidecar(sidecar_path(opt.output), echo);
  if (!opt.svg.empty()) {
    write_svg_polyline(opt.svg, trace.t, trace.sigma_z, "t", "sigma_z");
  }
  std::cout << "wrote " << opt.output << " (" << rows.size() << " rows)\n";
  return 0;
}

struct SweepOptions {
  CommonOptions common;
  SweepConfig sweep;
};

int run_sweep(const SweepOptions& opt) {
  const auto [estimates, fit] = sweep_and_fit(opt.common.params, opt.sweep);
  std::vector<CsvRow> rows(estimates.size());
  std::vector<double> xs(estimates.size());
  std::vector<double> ys(estimates.size());
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    rows[i].values = {e.theta, e.t_max, e.t_min, e.period, std::log(e.period)};
    xs[i] = e.theta;
    ys[i] = std::log(e.period);
  }
  write_csv(opt.common.output, {"theta", "t_max", "t_min", "T", "ln_T"}, rows);

  auto echo = echo_common("sweep-theta", opt.common, ThermalPoint{});
  echo.erase("beta");
  echo.erase("theta");
  echo.erase("Theta");
  echo["theta_lo"] = fmt(opt.sweep.theta_lo);
  echo["theta_hi"] = fmt(opt.sweep.theta_hi);
  echo["points"] = std::to_string(opt.sweep.points);
  echo["window_lo"] = fmt(opt.sweep.window_lo);
  echo["window_hi"] = fmt(opt.sweep.window_hi);
  echo["dt"] = fmt(opt.sweep.dt);
  echo["fit_intercept"] = fmt(fit.intercept);
  echo["fit_slope"] = fmt(fit.slope);
  echo["fit_rms_residual"] = fmt(fit.rms_residual);
  write_json_sidecar(sidecar_path(opt.common.output), echo);
  if (!opt.common.svg.empty()) {
    write_svg_polyline(opt.common.svg, xs, ys, "theta", "ln T");
  }
  std::cout << "ln T(theta) = " << fit.intercept << " + (" << fit.slope << ") theta, rms "
            << fit.rms_residual << "\n";
  std::cout << "wrote " << opt.common.output << " (" << rows.size() << " rows)\n";
  return 0;
}

struct PeriodOptions {
  CommonOptions common;
  double window_lo = 15.0 * M_PI / 2.0;
  double window_hi = 10.0 * M_PI;
  double dt = 5.0 * M_PI * 1e-4;
};

int run_period(const PeriodOptions& opt) {
  const DerivedParams derived = derive(opt.common.params);
  const ThermalPoint thermal = resolve_thermal(opt.common);
  warn_if_outside_validated_range(thermal);
  const PeriodEstimate e = estimate_period(opt.common.params, derived, thermal, opt.window_lo,
                                           opt.window_hi, opt.dt, opt.common.truncation);
  write_csv(opt.common.output, {"theta", "t_max", "t_min", "T", "ln_T"},
            {{"", {e.theta, e.t_max, e.t_min, e.period, std::log(e.period)}}});
  auto echo = echo_common("period", opt.common, thermal);
  echo["window_lo"] = fmt(opt.window_lo);
  echo["window_hi"] = fmt(opt.window_hi);
  echo["dt"] = fmt(opt.dt);
  write_json_sidecar(sidecar_path(opt.common.output), echo);
  std::cout << "t_max " << e.t_max << " sigma " << e.sigma_at_max << "; t_min " << e.t_min
            << " sigma " << e.sigma_at_min << "; T " << e.period << "\n";
  return 0;
}

struct SpectrumOptions {
  CommonOptions common;
  double kappa_lo = 0.0;
  double kappa_hi = 10.0;
  int points = 2001;
  int n_max = 200;
  bool refine_dips = false;
};

int run_spectrum(const SpectrumOptions& opt) {
  const auto rows = spectral_scan(opt.common.params, opt.kappa_lo, opt.kappa_hi, opt.points,
                                  opt.n_max);
  std::vector<CsvRow> csv(rows.size());
  std::vector<double> xs(rows.size());
  std::vector<double> ys(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    csv[i].values = {rows[i].kappa, static_cast<double>(rows[i].n_ground), rows[i].gap};
    xs[i] = rows[i].kappa;
    ys[i] = rows[i].gap;
  }
  write_csv(opt.common.output, {"kappa", "n_ground", "gap"}, csv);

  auto echo = echo_common("spectrum", opt.common, ThermalPoint{});
  echo["kappa_lo"] = fmt(opt.kappa_lo);
  echo["kappa_hi"] = fmt(opt.kappa_hi);
  echo["points"] = std::to_string(opt.points);
  echo["n_max"] = std::to_string(opt.n_max);
  if (opt.refine_dips) {
    const auto dips = refine_gap_dips(opt.common.params, rows, opt.n_max);
    std::ostringstream os;
    for (const auto& d : dips) os << fmt(d.kappa) << ":" << fmt(d.gap) << ";";
    echo["refined_dips"] = os.str();
    std::cout << "refined " << dips.size() << " gap dips\n";
  }
  write_json_sidecar(sidecar_path(opt.common.output), echo);
  if (!opt.common.svg.empty()) write_svg_polyline(opt.common.svg, xs, ys, "kappa", "gap");
  std::cout << "wrote " << opt.common.output << " (" << csv.size() << " rows)\n";
  return 0;
}

struct GapOptions {
  CommonOptions common;
  double kappa = 0.0;
  int n_max = 200;
};

int run_gap(const GapOptions& opt) {
  const GroundState gs = ground_state_index(opt.common.params, opt.kappa, opt.n_max);
  const double gap = excitation_gap(opt.common.params, opt.kappa, opt.n_max);
  if (!opt.common.output.empty()) {
    write_csv(opt.common.output, {"kappa", "n_ground", "gap"},
              {{"", {opt.kappa, static_cast<double>(gs.n), gap}}});
    auto echo = echo_common("gap", opt.common, ThermalPoint{});
    echo["kappa"] = fmt(opt.kappa);
    echo["n_max"] = std::to_string(opt.n_max);
    write_json_sidecar(sidecar_path(opt.common.output), echo);
  }
  std::cout << "kappa " << opt.kappa << ": ground "
            << (gs.bare() ? std::string("bare |0,0>") : "E_{" + std::to_string(gs.n) + ",2}")
            << " energy " << gs.energy << ", gap " << gap << "\n";
  return 0;
}

struct ShortTimeOptions {
  CommonOptions common;
  double nbar = 0.0;
  double phi = 0.0;
};

int run_short_time(const ShortTimeOptions& opt) {
  const ThermalPoint thermal = resolve_thermal(opt.common);
  std::vector<CsvRow> rows(opt.common.grid.samples);
  std::vector<double> xs(opt.common.grid.samples);
  std::vector<double> ys(opt.common.grid.samples);
  for (int i = 0; i < opt.common.grid.samples; ++i) {
    const double t = opt.common.grid.at(i);
    const double sz = short_time_inversion(opt.nbar, opt.phi, opt.common.params.kappa, t,
                                           thermal.boson_theta);
    rows[i].values = {t, sz};
    xs[i] = t;
    ys[i] = sz;
  }
  write_csv(opt.common.output, {"t", "sigma_z"}, rows);
  auto echo = echo_common("short-time", opt.common, thermal);
  echo["nbar"] = fmt(opt.nbar);
  echo["phi"] = fmt(opt.phi);
  write_json_sidecar(sidecar_path(opt.common.output), echo);
  if (!opt.common.svg.empty()) write_svg_polyline(opt.common.svg, xs, ys, "t", "sigma_z");
  std::cout << "wrote " << opt.common.output << " (" << rows.size() << " rows)\n";
  return 0;
}

struct VerifyOptions {
  CommonOptions common;
  std::string id = "";
  int power = 1;
  int max_power = 6;
  double tol = 1e-9;
  double reduction_tol = 1e-10;
};

int run_verify(const VerifyOptions& opt) {
  OracleConfig config = opt.common.oracle;
  bool all_ok = true;
  std::vector<CsvRow> rows;

  if (!opt.id.empty()) {
    const double dev = verify_identity(opt.id, opt.power, config);
    const bool ok = dev < opt.tol;
    all_ok = ok;
    std::cout << (ok ? "ok   " : "FAIL ") << opt.id << " n=" << opt.power << " dev=" << dev
              << "\n";
    rows.push_back({opt.id, {static_cast<double>(opt.power), dev}});
  } else {
    const CatalogResult result = verify_all_identities(config, opt.max_power);
    for (const auto& [key, dev] : result.entries) {
      const bool ok = dev < opt.tol;
      all_ok = all_ok && ok;
      std::cout << (ok ? "ok   " : "FAIL ") << key << " dev=" << dev << "\n";
      rows.push_back({key, {dev}});
    }
    // thermal-state reductions ride along with --all
    const double boson_dev =
        reduced_thermal_density_check(ThermalRegister::boson, 0.3, config);
    const double fermion_dev =
        reduced_thermal_density_check(ThermalRegister::fermion, 0.4, config);
    const bool b_ok = boson_dev < opt.reduction_tol;
    const bool f_ok = fermion_dev < opt.reduction_tol;
    all_ok = all_ok && b_ok && f_ok;
    std::cout << (b_ok ? "ok   " : "FAIL ") << "reduction_boson[theta=0.3] dev=" << boson_dev
              << "\n";
    std::cout << (f_ok ? "ok   " : "FAIL ") << "reduction_fermion[Theta=0.4] dev="
              << fermion_dev << "\n";
    rows.push_back({"reduction_boson", {boson_dev}});
    rows.push_back({"reduction_fermion", {fermion_dev}});
  }

  if (!opt.common.output.empty()) {
    write_csv(opt.common.output, {"check", "deviation"}, rows);
    auto echo = echo_common("verify", opt.common, ThermalPoint{});
    echo["dim"] = std::to_string(config.dim);
    echo["safe_buffer"] = std::to_string(config.safe_buffer);
    echo["tol"] = fmt(opt.tol);
    write_json_sidecar(sidecar_path(opt.common.output), echo);
  }
  if (!all_ok) {
    std::cerr << "verification failed\n";
    return 2;
  }
  std::cout << "all checks passed\n";
  return 0;
}

struct OracleCompareOptions {
  CommonOptions common;
  std::vector<double> times{3.0, 5.0, 8.0};
};

int run_oracle_compare(const OracleCompareOptions& opt) {
  const DerivedParams derived = derive(opt.common.params);
  const ThermalPoint thermal = resolve_thermal(opt.common);
  const ThermalSeries series(opt.common.params, derived, opt.common.truncation);

  std::vector<CsvRow> rows;
  for (double t : opt.times) {
    const double sz_series = series.sigma_z(thermal, t);
    const double sz_exact =
        1.0 - 2.0 * exact_pg(opt.common.params, derived, thermal, t, opt.common.oracle);
    rows.push_back({"", {t, sz_series, sz_exact, std::abs(sz_series - sz_exact)}});
    std::cout << "t=" << t << " series=" << sz_series << " exact=" << sz_exact
              << " |diff|=" << std::abs(sz_series - sz_exact) << "\n";
  }
  if (!opt.common.output.empty()) {
    write_csv(opt.common.output, {"t", "sigma_series", "sigma_exact", "abs_err"}, rows);
    auto echo = echo_common("oracle-compare", opt.common, thermal);
    echo["dim"] = std::to_string(opt.common.oracle.dim);
    write_json_sidecar(sidecar_path(opt.common.output), echo);
  }
  return 0;
}

struct ReproduceOptions {
  CommonOptions common;
  int figure = 0;
  int table = 0;
};

int run_reproduce(const ReproduceOptions& opt) {
  if ((opt.figure == 0) == (opt.table == 0)) {
    throw DomainError("reproduce: give exactly one of --figure or --table");
  }

  if (opt.table != 0) {
    const auto rows = reproduce_table(opt.table, kDefaultTruncation);
    std::vector<CsvRow> csv;
    for (const auto& r : rows) csv.push_back({r.label, {r.min, r.max}});
    write_csv(opt.common.output, {"label", "min", "max"}, csv);
    CommonOptions used = opt.common;
    used.params = ModelParams{2.0, 4.0, 1.0, opt.table == 1 ? 4.0 : 8.0};
    used.theta = opt.table == 1 ? M_PI / 32.0 : M_PI / 60.0;
    auto echo = echo_common("reproduce", used, thermal_point_from_theta(*used.theta, used.params));
    echo["table"] = std::to_string(opt.table);
    echo["grid"] = opt.table == 1 ? "0..20pi, 10001 samples" : "0..40pi, 10001 samples";
    write_json_sidecar(sidecar_path(opt.common.output), echo);
    std::cout << "wrote " << opt.common.output << " (table " << opt.table << ")\n";
    return 0;
  }

  CommonOptions c = opt.common;
  c.params.omega0 = 2.0;
  c.params.omega = 4.0;
  c.params.kappa = 1.0;
  switch (opt.figure) {
    case 1:
    case 2:
      c.params.alpha = 4.0;
      c.grid = TimeGrid{0.0, 20.0 * M_PI, 10001};
      c.theta = (opt.figure == 2) ? std::optional<double>(M_PI / 32.0) : std::nullopt;
      return run_inversion(c);
    case 3:
    case 4:
      c.params.alpha = 8.0;
      c.grid = TimeGrid{0.0, 40.0 * M_PI, 10001};
      c.theta = (opt.figure == 4) ? std::optional<double>(M_PI / 60.0) : std::nullopt;
      return run_inversion(c);
    case 5: {
      SweepOptions s;
      c.params.alpha = 4.0;
      s.common = c;
      s.sweep = SweepConfig{0.0, M_PI / 32.0, 33, 15.0 * M_PI / 2.0, 10.0 * M_PI,
                            5.0 * M_PI * 1e-4, c.truncation};
      return run_sweep(s);
    }
    case 6: {
      SweepOptions s;
      c.params.alpha = 8.0;
      s.common = c;
      s.sweep = SweepConfig{0.0, M_PI / 60.0, 33, 15.0 * M_PI, 20.0 * M_PI,
                            10.0 * M_PI * 1e-4, c.truncation};
      return run_sweep(s);
    }
    case 7:
    case 8:
    case 9: {
      SpectrumOptions s;
      s.common = opt.common;
      s.common.params = ModelParams{1.0, 1.0, 1.0, 0.0};
      s.refine_dips = (opt.figure != 7);
      return run_spectrum(s);
    }
    default:
      throw DomainError("reproduce: --figure must be 1..9");
  }
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{
      "thermal_jcm: Jaynes-Cummings population inversion at zero and finite low "
      "temperature.\nTimes and frequencies are in natural units (hbar = k_B = 1); with "
      "kappa = 1 the time axis is in units of 1/kappa."};
  app.set_config("--config")->description("plain-text key=value config file; flags override");
  app.require_subcommand(1);

  CommonOptions inv_opt;
  auto* inv = app.add_subcommand("inversion", "time trace of the population inversion");
  add_model_flags(inv, inv_opt);
  add_thermal_flags(inv, inv_opt);
  add_grid_flags(inv, inv_opt);
  add_output_flags(inv, inv_opt);
  inv->add_option("--trunc", inv_opt.truncation, "Poisson-sum truncation N")
      ->capture_default_str();

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep-theta",
                                   "revival-period sweep over theta with ln T fit");
  add_model_flags(sweep, sweep_opt.common);
  add_output_flags(sweep, sweep_opt.common);
  sweep->add_option("--theta-lo", sweep_opt.sweep.theta_lo, "sweep start")
      ->capture_default_str();
  sweep->add_option("--theta-hi", sweep_opt.sweep.theta_hi, "sweep end")->required();
  sweep->add_option("--points", sweep_opt.sweep.points, "evenly spaced points incl. endpoints")
      ->capture_default_str();
  sweep->add_option("--window-lo", sweep_opt.sweep.window_lo, "search window start")
      ->required();
  sweep->add_option("--window-hi", sweep_opt.sweep.window_hi, "search window end")->required();
  sweep->add_option("--dt", sweep_opt.sweep.dt, "window sampling step")->required();
  sweep->add_option("--trunc", sweep_opt.sweep.truncation, "Poisson-sum truncation N")
      ->capture_default_str();

  PeriodOptions period_opt;
  auto* period = app.add_subcommand("period", "revival-period estimate at one temperature");
  add_model_flags(period, period_opt.common);
  add_thermal_flags(period, period_opt.common);
  add_output_flags(period, period_opt.common);
  period->add_option("--window-lo", period_opt.window_lo, "search window start")
      ->capture_default_str();
  period->add_option("--window-hi", period_opt.window_hi, "search window end")
      ->capture_default_str();
  period->add_option("--dt", period_opt.dt, "window sampling step")->capture_default_str();
  period->add_option("--trunc", period_opt.common.truncation, "Poisson-sum truncation N")
      ->capture_default_str();

  SpectrumOptions spec_opt;
  auto* spec = app.add_subcommand("spectrum", "ground-state index and gap over a kappa grid");
  add_model_flags(spec, spec_opt.common);
  add_output_flags(spec, spec_opt.common);
  spec->add_option("--kappa-lo", spec_opt.kappa_lo, "scan start")->capture_default_str();
  spec->add_option("--kappa-hi", spec_opt.kappa_hi, "scan end")->capture_default_str();
  spec->add_option("--points", spec_opt.points, "scan points")->capture_default_str();
  spec->add_option("--n-max", spec_opt.n_max, "Fock search bound")->capture_default_str();
  spec->add_flag("--refine-dips", spec_opt.refine_dips,
                 "ternary-search each local gap minimum; results land in the sidecar");

  GapOptions gap_opt;
  auto* gap = app.add_subcommand("gap", "ground state and excitation gap at one kappa");
  add_model_flags(gap, gap_opt.common);
  add_output_flags(gap, gap_opt.common, /*required=*/false);
  gap->add_option("--kappa-value", gap_opt.kappa, "coupling to probe")->required();
  gap->add_option("--n-max", gap_opt.n_max, "Fock search bound")->capture_default_str();

  ShortTimeOptions st_opt;
  auto* st = app.add_subcommand("short-time",
                                "quadratic short-time inversion law (counter-rotating terms)");
  add_model_flags(st, st_opt.common);
  add_thermal_flags(st, st_opt.common);
  st_opt.common.grid = TimeGrid{0.0, 0.5, 501};
  add_grid_flags(st, st_opt.common);
  add_output_flags(st, st_opt.common);
  st->add_option("--nbar", st_opt.nbar, "mean photon number")->capture_default_str();
  st->add_option("--phi", st_opt.phi, "coherent phase")->capture_default_str();

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run the operator-identity catalog");
  add_output_flags(verify, verify_opt.common, /*required=*/false);
  verify->add_flag("--all", "run the whole catalog (default)");
  verify->add_option("--id", verify_opt.id, "single identity id to check");
  verify->add_option("--n", verify_opt.power, "power for parameterised identities")
      ->capture_default_str();
  verify->add_option("--max-power", verify_opt.max_power, "largest power for --all")
      ->capture_default_str();
  verify->add_option("--tol", verify_opt.tol, "identity pass threshold")
      ->capture_default_str();
  verify_opt.common.oracle.dim = 24;
  verify->add_option("--dim", verify_opt.common.oracle.dim, "per-register truncation")
      ->capture_default_str();
  verify->add_option("--buffer", verify_opt.common.oracle.safe_buffer,
                     "excitation headroom excluded from comparisons")
      ->capture_default_str();

  OracleCompareOptions oc_opt;
  auto* oc = app.add_subcommand("oracle-compare",
                                "third-order series vs brute-force thermal probability");
  add_model_flags(oc, oc_opt.common);
  add_thermal_flags(oc, oc_opt.common);
  add_output_flags(oc, oc_opt.common, /*required=*/false);
  oc->add_option("--t", oc_opt.times, "sample times")->capture_default_str();
  oc->add_option("--trunc", oc_opt.common.truncation, "Poisson-sum truncation N")
      ->capture_default_str();
  oc->add_option("--dim", oc_opt.common.oracle.dim, "oracle per-mode truncation")
      ->capture_default_str();

  ReproduceOptions rep_opt;
  auto* rep = app.add_subcommand("reproduce", "regenerate a published figure or table dataset");
  add_output_flags(rep, rep_opt.common);
  auto* fig = rep->add_option("--figure", rep_opt.figure, "figure number 1..9");
  auto* tab = rep->add_option("--table", rep_opt.table, "table number 1..2");
  fig->excludes(tab);
  tab->excludes(fig);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (inv->parsed()) return run_inversion(inv_opt);
    if (sweep->parsed()) return run_sweep(sweep_opt);
    if (period->parsed()) return run_period(period_opt);
    if (spec->parsed()) return run_spectrum(spec_opt);
    if (gap->parsed()) return run_gap(gap_opt);
    if (st->parsed()) return run_short_time(st_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (oc->parsed()) return run_oracle_compare(oc_opt);
    if (rep->parsed()) return run_reproduce(rep_opt);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace tjcm::cli

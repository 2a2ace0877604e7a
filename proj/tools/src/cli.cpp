#include "rydcav_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rydcav/continuum.hpp"
#include "rydcav/errors.hpp"
#include "rydcav/montecarlo.hpp"
#include "rydcav/pairham.hpp"
#include "rydcav/potential.hpp"
#include "rydcav/ramsey.hpp"
#include "rydcav/specfun.hpp"
#include "rydcav/units.hpp"

#ifndef RYDCAV_VERSION
#define RYDCAV_VERSION "unknown"
#endif

namespace rydcav::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;
using complex = std::complex<double>;

double mhz(double w) { return units::mhz_from_angular(w); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << content;
  if (!f) throw IoError("write failed for " + path.string());
}

void emit(const std::string& content, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-")
    out << content;
  else
    write_file(output, content);
}

// ---------- task implementations (return file content) ----------

json coefficients_json(const PotentialCoefficients& c) {
  json j;
  j["C0"] = c.C0;
  j["C3"] = c.C3;
  j["C6"] = c.C6;
  j["C0_MHz"] = mhz(c.C0);
  j["C3_MHz_um3"] = mhz(c.C3);
  j["C6_MHz_um6"] = mhz(c.C6);
  j["eta"] = c.eta;
  j["R"] = c.R;
  j["r0"] = c.r0;
  j["r1"] = c.r1;
  j["r2"] = c.r2;
  j["r2_numeric"] = c.r2_numeric;
  return j;
}

json gate_json(const PerturbativeReport& r) {
  json j;
  const char* names[] = {"delta_over_g", "Delta_over_g", "delta_over_U", "Delta_over_U", "delta_over_J"};
  for (std::size_t i = 0; i < r.ratios.size(); ++i)
    j[names[i]] = std::isinf(r.ratios[i]) ? json(nullptr) : json(r.ratios[i]);
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  return j;
}

std::string task_coeffs(const config::Scenario& s, std::optional<double> gate_r) {
  json j;
  j["units"] = {{"frequency", "rad/us"}, {"length", "um"}, {"C3", "rad/us*um^3"}, {"C6", "rad/us*um^6"}};
  const auto c = config::resolve_coefficients(s);
  j["coefficients"] = coefficients_json(c);
  if (s.physical) {
    const auto& p = *s.physical;
    const double ga = cavity_coupling(p, Transition::a), gb = cavity_coupling(p, Transition::b);
    j["delta"] = p.cavity_detuning();
    j["Delta"] = p.forster_detuning();
    j["g_a"] = ga;
    j["g_b"] = gb;
    j["g_a_MHz"] = mhz(ga);
    j["g_b_MHz"] = mhz(gb);
    j["mode_volume_um3"] = p.mode_volume;
    const auto radii = crossover_radii(c);
    j["crossover"] = {{"r0", radii.r0},
                      {"r1", radii.r1},
                      {"r2", radii.r2_closed},
                      {"r2_printed_form", radii.r2_printed},
                      {"r2_numeric", radii.r2_numeric}};
    double U = 0.0, J = 0.0;
    if (gate_r) {
      const auto pc = couplings_at(p, *gate_r, 0.5 * units::pi);
      U = pc.U;
      J = pc.J;
      j["gate_r_um"] = *gate_r;
    }
    j["perturbative_gate"] = gate_json(validate_perturbative(p, U, J, s.perturbative_threshold));
  }
  return j.dump(2) + "\n";
}

std::string task_potential(const config::Scenario& s) {
  const auto c = config::resolve_coefficients(s);
  if (s.r_grid.empty()) throw ConfigError("r_grid", "potential needs an r grid");
  std::vector<double> thetas = s.theta_grid;
  if (thetas.empty()) thetas.push_back(0.5 * units::pi);
  std::ostringstream out;
  out << "r[um],theta[rad],U[rad/us],regime\n";
  for (double th : thetas)
    for (double r : s.r_grid)
      out << fmt(r) << ',' << fmt(th) << ',' << fmt(u_tilde(r, th, c, AngularMode::angular)) << ','
          << to_string(classify_regime(c, r)) << '\n';
  return out.str();
}

std::string task_ham_spectrum(const config::Scenario& s, double r, double theta) {
  if (!s.physical) throw ConfigError("physical", "ham-spectrum needs physical parameters");
  const auto& p = *s.physical;
  const auto pc = couplings_at(p, r, theta);
  auto levels = PairLevels::from(p);
  levels.omega_d = 0.0;  // energies relative to 2 omega_d
  const auto h = build_full(levels, pc);
  const auto eig = eigen_symmetric(h.matrix);
  const auto generic = rs_perturbation_order4(h);
  const auto closed = perturbation_closed_form(levels, pc);
  const auto dressed = dressed_dd0_shift(h);
  json j;
  j["r_um"] = r;
  j["theta_rad"] = theta;
  j["energy_origin"] = "2 omega_d";
  j["basis"] = h.basis_labels;
  j["couplings"] = {{"U", pc.U}, {"J", pc.J}, {"g1a", pc.g1a}, {"g1b", pc.g1b}, {"g2a", pc.g2a}, {"g2b", pc.g2b}};
  j["eigenvalues"] = eig.values;
  auto pt = [](const PerturbationResult& x) {
    return json{{"dE1", x.dE1}, {"dE2", x.dE2}, {"dE3", x.dE3}, {"dE4", x.dE4}, {"dE_total", x.dE_total}};
  };
  j["perturbation_generic"] = pt(generic);
  j["perturbation_closed_form"] = pt(closed);
  j["perturbation_closed_form"]["pair_interaction"] = closed.pair_interaction;
  j["perturbation_closed_form"]["stark_shift_1"] = closed.stark_shift_1;
  j["perturbation_closed_form"]["stark_shift_2"] = closed.stark_shift_2;
  j["exact_dd0_shift"] = dressed.exact_shift;
  j["dd0_overlap"] = dressed.overlap;
  j["residual"] = dressed.exact_shift - generic.dE_total;
  j["perturbative_gate"] = gate_json(validate_perturbative(p, pc.U, pc.J, s.perturbative_threshold));
  return j.dump(2) + "\n";
}

const ramsey::RamseyConfig& need_ramsey(const config::Scenario& s) {
  if (!s.ramsey) throw ConfigError("ramsey", "missing section");
  return *s.ramsey;
}

struct AnalyticRow {
  complex G;
  double phase_wrapped;
  bool phase_converged;
  double asymptotic;
  double free_space;
  double all_to_all;
  bool revival;
};

std::vector<AnalyticRow> analytic_rows(const PotentialCoefficients& c, const ramsey::RamseyConfig& cfg) {
  if (!(c.C3 > 0.0)) throw DomainError("ramsey: analytic contrast needs C3 > 0");
  const double kap = ramsey::kappa(cfg.density, c.C3);
  const double eta = c.C6 / (c.C3 * c.C3);
  std::vector<AnalyticRow> rows;
  for (double tau : cfg.tau_grid) {
    AnalyticRow r{};
    const auto g = ramsey::gamma_large_n(tau, kap, eta, cfg.N, c.C0);
    r.G = std::exp(static_cast<double>(cfg.N - 1) * std::log(cfg.p_g + cfg.p_d * g.value));
    r.phase_wrapped = std::arg(r.G);
    r.phase_converged = g.phase_converged;
    r.asymptotic = ramsey::contrast_asymptotic(tau, kap, eta, cfg.p_d);
    r.free_space = ramsey::free_space_contrast(tau, kap, eta, cfg.p_d);
    r.all_to_all = ramsey::contrast_all_to_all(cfg.N, cfg.p_g, cfg.p_d, c.C0, tau).contrast;
    r.revival = ramsey::is_revival_time(tau, c.C0, 1e-9);
    rows.push_back(r);
  }
  return rows;
}

std::string task_ramsey_analytic(const config::Scenario& s) {
  const auto& cfg = need_ramsey(s);
  const auto c = config::resolve_coefficients(s);
  const auto rows = analytic_rows(c, cfg);
  std::vector<double> wrapped;
  for (const auto& r : rows) wrapped.push_back(r.phase_wrapped);
  const auto phase = ramsey::unwrap_phase(wrapped);
  std::ostringstream out;
  out << "tau[us],contrast,contrast_stderr,phase[rad],re_G,im_G,contrast_asymptotic,"
         "contrast_free_space,contrast_all_to_all,phase_converged,revival\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << fmt(cfg.tau_grid[i]) << ',' << fmt(std::abs(r.G)) << ',' << fmt(0.0) << ',' << fmt(phase[i])
        << ',' << fmt(r.G.real()) << ',' << fmt(r.G.imag()) << ',' << fmt(r.asymptotic) << ','
        << fmt(r.free_space) << ',' << fmt(r.all_to_all) << ',' << (r.phase_converged ? 1 : 0) << ','
        << (r.revival ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string task_ramsey_mc(const config::Scenario& s) {
  const auto& cfg = need_ramsey(s);
  auto series = ramsey::monte_carlo_contrast(cfg, config::resolve_coefficients(s));
  series.config_hash = s.hash;
  std::ostringstream out;
  ramsey::write_series_csv(out, series);
  return out.str();
}

std::string task_ramsey_compare(const config::Scenario& s) {
  const auto& cfg = need_ramsey(s);
  const auto c = config::resolve_coefficients(s);
  const auto series = ramsey::monte_carlo_contrast(cfg, c);
  const auto rows = analytic_rows(c, cfg);
  std::ostringstream out;
  out << "tau[us],contrast,contrast_stderr,phase[rad],re_G,im_G,mean_contrast,mean_contrast_stderr,"
         "contrast_asymptotic,contrast_free_space,contrast_all_to_all,revival\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << fmt(series.tau[i]) << ',' << fmt(series.contrast[i]) << ',' << fmt(series.contrast_stderr[i])
        << ',' << fmt(series.phase[i]) << ',' << fmt(series.G[i].real()) << ',' << fmt(series.G[i].imag())
        << ',' << fmt(series.mean_contrast[i]) << ',' << fmt(series.mean_contrast_stderr[i]) << ','
        << fmt(rows[i].asymptotic) << ',' << fmt(rows[i].free_space) << ',' << fmt(rows[i].all_to_all)
        << ',' << (rows[i].revival ? 1 : 0) << '\n';
  }
  return out.str();
}

std::vector<ramsey::Position> read_positions(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::vector<ramsey::Position> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    ramsey::Position p{};
    if (!(ls >> p[0] >> p[1] >> p[2])) {
      if (pts.empty()) continue;  // header
      throw ConfigError("positions", "malformed line '" + line + "'");
    }
    pts.push_back(p);
  }
  return pts;
}

std::string task_ramsey_exact(const config::Scenario& s, const std::string& positions_file,
                              std::uint64_t stream) {
  const auto& cfg = need_ramsey(s);
  const auto c = config::resolve_coefficients(s);
  const auto pts = positions_file.empty() ? ramsey::sample_ensemble(cfg, stream).positions
                                          : read_positions(positions_file);
  const auto G = ramsey::g_exact_series(pts, c, cfg.p_g, cfg.p_d, cfg.tau_grid, cfg.mode, cfg.geometry);
  const auto series = ramsey::aggregate(cfg.tau_grid, {G});
  std::ostringstream out;
  ramsey::write_series_csv(out, series);
  return out.str();
}

std::string task_table1(const config::Scenario& s) {
  if (s.table1.empty()) throw ConfigError("table1", "no rows given");
  const auto entries = table1_crosscheck(s.table1);
  json rows = json::array();
  bool all = true;
  for (const auto& e : entries) {
    auto vals = [](const Table1Values& v) {
      return json{{"g_MHz", v.g}, {"C0_MHz", v.C0}, {"C3_MHz_um3", v.C3}, {"C6_MHz_um6", v.C6}};
    };
    json r;
    r["name"] = e.name;
    r["computed"] = vals(e.computed);
    r["reference"] = vals(e.reference);
    r["ratio"] = e.ratio ? json{{"g", e.ratio->g}, {"C0", e.ratio->C0}, {"C3", e.ratio->C3}, {"C6", e.ratio->C6}}
                         : json("NA");
    r["delta_over_g"] = e.detuning_to_coupling;
    r["pass"] = e.pass ? json(*e.pass) : json("NA");
    if (e.pass && !*e.pass) all = false;
    rows.push_back(r);
  }
  json j;
  j["tolerance"] = "computed/reference within [0.1, 10]";
  j["rows"] = rows;
  j["all_pass"] = all;
  return j.dump(2) + "\n";
}

std::string dispatch(const config::Scenario& s, const std::string& task) {
  if (task == "coeffs") return task_coeffs(s, std::nullopt);
  if (task == "potential") return task_potential(s);
  if (task == "ramsey-mc") return task_ramsey_mc(s);
  if (task == "ramsey-analytic") return task_ramsey_analytic(s);
  if (task == "ramsey-compare") return task_ramsey_compare(s);
  if (task == "ramsey-exact") return task_ramsey_exact(s, "", 0);
  if (task == "table1-check") return task_table1(s);
  if (task == "ham-spectrum") {
    if (s.r_grid.empty()) throw ConfigError("r_grid", "ham-spectrum needs r_grid (first entry is used)");
    return task_ham_spectrum(s, s.r_grid.front(), s.theta_grid.empty() ? 0.5 * units::pi : s.theta_grid.front());
  }
  throw ConfigError("task", "unknown task '" + task + "'");
}

bool is_json_task(const std::string& task) {
  return task == "coeffs" || task == "ham-spectrum" || task == "table1-check";
}

// Maps exceptions to exit codes with a one-line message.
int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return ok;
  } catch (const ConfigError& e) {
    err << "config error [" << e.field() << "]: " << e.what() << '\n';
    return config_error;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return io_error;
  } catch (const DegeneracyError& e) {
    err << "numerical error (perturbation, states " << e.target() << "/" << e.intermediate() << "): " << e.what()
        << '\n';
    return numerical_error;
  } catch (const DomainError& e) {
    err << "numerical error: " << e.what() << '\n';
    return numerical_error;
  } catch (const ContractError& e) {
    err << "numerical error: " << e.what() << '\n';
    return numerical_error;
  }
}

}  // namespace

std::vector<Table1Entry> table1_crosscheck(const std::vector<config::Table1Row>& rows) {
  std::vector<Table1Entry> out;
  for (const auto& row : rows) {
    Table1Entry e;
    e.name = row.name;
    const auto& p = row.params;
    const double ga = cavity_coupling(p, Transition::a), gb = cavity_coupling(p, Transition::b);
    const auto c = coefficients(p);
    e.computed = {mhz(ga), mhz(c.C0), mhz(c.C3), mhz(c.C6)};
    e.reference = {mhz(row.reference.g), mhz(row.reference.C0), mhz(row.reference.C3), mhz(row.reference.C6)};
    const double gmax = std::max(ga, gb);
    e.detuning_to_coupling = gmax > 0.0 ? std::abs(p.cavity_detuning()) / gmax : INFINITY;
    if (gmax > 0.0) {
      Table1Values r{e.computed.g / e.reference.g, e.computed.C0 / e.reference.C0,
                     e.computed.C3 / e.reference.C3, e.computed.C6 / e.reference.C6};
      e.ratio = r;
      bool pass = true;
      for (double x : {r.g, r.C0, r.C3, r.C6}) pass = pass && x >= 0.1 && x <= 10.0;
      e.pass = pass;
    }
    out.push_back(e);
  }
  return out;
}

int run_scenario(const fs::path& path, const fs::path& out_dir, std::ostream& log) {
  return guarded(log, [&] {
    const auto s = config::load_scenario(path);
    if (s.task.empty()) throw ConfigError("task", "scenario needs a task");
    fs::path dir = out_dir;
    if (dir.empty() && !s.output_dir.empty()) dir = s.output_dir;
    if (dir.empty()) {
      const char* env = std::getenv(out_dir_env);
      dir = env && *env ? fs::path(env) : fs::current_path();
    }
    const std::string content = dispatch(s, s.task);
    const std::string ext = is_json_task(s.task) ? ".json" : ".csv";
    const fs::path data = dir / (s.output_stem + ext);
    write_file(data, content);

    json m;
    m["name"] = s.name;
    m["task"] = s.task;
    m["config_hash"] = s.hash;
    m["version"] = RYDCAV_VERSION;
    m["outputs"] = json::array({data.filename().string()});
    if (s.ramsey) {
      m["seed"] = s.ramsey->seed;
      m["realizations"] = s.ramsey->realizations;
      m["mode"] = ramsey::to_string(s.ramsey->mode);
      m["geometry"] = ramsey::to_string(s.ramsey->geometry);
    }
    if (s.task == "ramsey-analytic" || s.task == "ramsey-compare")
      m["notes"] = json::array({"phase from the large-N continuum is unreliable where phase_converged = 0",
                                "contrast_asymptotic is validated at revival times only"});
    const fs::path manifest = dir / (s.output_stem + ".manifest.json");
    write_file(manifest, m.dump(2) + "\n");
    log << "wrote " << data.string() << " and " << manifest.string() << '\n';
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"rydcav: cavity-modified Rydberg pair interactions and Ramsey contrast"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RYDCAV_VERSION);

  std::string config_path, output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config_path, "JSON config with unit-tagged fields")->required();
    sub->add_option("-o,--output", output, "Output file (default: stdout)");
  };
  auto load = [&] { return config::load_scenario(config_path); };

  auto* coeffs = app.add_subcommand("coeffs", "Cavity couplings, potential coefficients and crossover radii (JSON)");
  add_common(coeffs);
  double gate_r = 0.0;
  coeffs->add_option("--gate-r", gate_r, "Also check the perturbative gate with U, J at this separation (um)");

  auto* potential = app.add_subcommand("potential", "U(r, theta) and regime on the config's r_grid/theta_grid (CSV)");
  add_common(potential);

  auto* ham = app.add_subcommand("ham-spectrum", "Two-atom Hamiltonian spectrum vs 4th-order perturbation (JSON)");
  add_common(ham);
  double ham_r = 1.0, ham_theta_deg = 90.0;
  ham->add_option("--r", ham_r, "Separation in um")->required();
  ham->add_option("--theta", ham_theta_deg, "Dipole angle in degrees")->capture_default_str();

  std::optional<std::uint64_t> seed;
  std::optional<int> realizations, threads;
  std::string mode, geometry;
  auto add_ramsey_overrides = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Override ramsey.seed");
    sub->add_option("--realizations", realizations, "Override ramsey.realizations");
    sub->add_option("--mode", mode, "full | dipole_plus_constant | all_to_all | free_space");
    sub->add_option("--geometry", geometry, "ensemble | central_probe");
    sub->add_option("--threads", threads, "Worker threads (0: all cores)");
  };
  auto* mc = app.add_subcommand("ramsey-mc", "Monte-Carlo Ramsey contrast over random ensembles (CSV)");
  add_common(mc);
  add_ramsey_overrides(mc);
  auto* analytic = app.add_subcommand("ramsey-analytic", "Large-N continuum and asymptotic contrast (CSV)");
  add_common(analytic);
  auto* exact = app.add_subcommand("ramsey-exact", "G(tau) for one fixed set of positions (CSV)");
  add_common(exact);
  add_ramsey_overrides(exact);
  std::string positions_file;
  std::uint64_t stream = 0;
  exact->add_option("--positions", positions_file, "CSV of x,y,z in um (default: sample one realization)");
  exact->add_option("--stream", stream, "Realization index used when sampling")->capture_default_str();

  auto* table1 = app.add_subcommand("table1-check", "Compare computed g, C0, C3, C6 with reference rows (JSON)");
  add_common(table1);

  auto* runsub = app.add_subcommand("run", "Run a scenario file; writes outputs and a manifest");
  std::string scenario_path, out_dir;
  runsub->add_option("scenario", scenario_path, "Scenario JSON")->required();
  runsub->add_option("--out-dir", out_dir,
                     std::string("Output directory (default: scenario output.dir, then $") + out_dir_env + ")");

  auto* sf = app.add_subcommand("specfun-eval", "Evaluate a special function");
  sf->group("");  // hidden
  std::string fn;
  double x = 0.0, beta = 0.0;
  sf->add_option("--fn", fn, "S | C | Si | Ci | SiM | CiM | F")->required();
  sf->add_option("--x", x, "Argument (tau for F)")->required();
  sf->add_option("--beta", beta, "beta for SiM/CiM, eta for F");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return config_error;
  }

  auto apply_overrides = [&](config::Scenario& s) {
    if (!s.ramsey) return;
    if (seed) s.ramsey->seed = *seed;
    if (realizations) s.ramsey->realizations = *realizations;
    if (threads) s.ramsey->threads = *threads;
    if (!mode.empty()) s.ramsey->mode = ramsey::interaction_mode_from_string(mode);
    if (!geometry.empty()) s.ramsey->geometry = ramsey::geometry_from_string(geometry);
    s.ramsey->validate();
  };

  if (runsub->parsed()) return run_scenario(scenario_path, out_dir, err);

  return guarded(err, [&] {
    if (sf->parsed()) {
      double v = 0.0;
      if (fn == "S") v = specfun::fresnel_s(x);
      else if (fn == "C") v = specfun::fresnel_c(x);
      else if (fn == "Si") v = specfun::sin_integral(x);
      else if (fn == "Ci") v = specfun::cos_integral(x);
      else if (fn == "SiM") v = specfun::sin_integral_mod(beta, x);
      else if (fn == "CiM") v = specfun::cos_integral_mod(beta, x);
      else if (fn == "F") v = specfun::f_tau(beta, x);
      else throw ConfigError("fn", "unknown function '" + fn + "'");
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g\n", v);
      out << buf;
      return;
    }
    auto s = load();
    std::string content;
    if (coeffs->parsed()) content = task_coeffs(s, coeffs->count("--gate-r") ? std::optional<double>(gate_r) : std::nullopt);
    else if (potential->parsed()) content = task_potential(s);
    else if (ham->parsed()) content = task_ham_spectrum(s, ham_r, ham_theta_deg * units::pi / 180.0);
    else if (mc->parsed()) {
      apply_overrides(s);
      content = task_ramsey_mc(s);
    } else if (analytic->parsed()) content = task_ramsey_analytic(s);
    else if (exact->parsed()) {
      apply_overrides(s);
      content = task_ramsey_exact(s, positions_file, stream);
    } else if (table1->parsed()) content = task_table1(s);
    emit(content, output, out);
  });
}

}  // namespace rydcav::cli

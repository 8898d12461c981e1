#include "runner.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "infotherm/bounds.hpp"
#include "infotherm/feedback.hpp"
#include "infotherm/gambling.hpp"
#include "infotherm/landauer.hpp"
#include "infotherm/random_states.hpp"
#include "infotherm/serialize.hpp"
#include "infotherm/stochastic.hpp"
#include "infotherm/szilard.hpp"

namespace infotherm::cli {

namespace {

double num(const nlohmann::json& p, const char* key) { return p.at(key).get<double>(); }
double num_or(const nlohmann::json& p, const char* key, double fallback) {
  return p.contains(key) ? p.at(key).get<double>() : fallback;
}
long integer(const nlohmann::json& p, const char* key) { return p.at(key).get<long>(); }
long integer_or(const nlohmann::json& p, const char* key, long fallback) {
  return p.contains(key) ? p.at(key).get<long>() : fallback;
}

Statistics statistics_from(const std::string& s) {
  if (s == "boltzmann") return Statistics::boltzmann;
  if (s == "boson") return Statistics::boson;
  if (s == "fermion") return Statistics::fermion;
  throw std::invalid_argument("statistics must be boltzmann, boson or fermion; got '" + s + "'");
}

// one grid point -> one row; each experiment defines its row columns and a
// JSON equivalent so csv/json stay in lockstep
struct Row {
  std::vector<std::string> cells;
  nlohmann::json object;
};

struct ExperimentTable {
  std::vector<std::string> columns;
  std::vector<Row> rows;
  nlohmann::json summary;
};

void run_szilard_point(const nlohmann::json& p, std::uint64_t, unsigned, ExperimentTable& table) {
  const BoxSpec box(1.0, 0.5, static_cast<int>(integer(p, "n_particles")),
                    statistics_from(p.at("statistics").get<std::string>()),
                    static_cast<int>(integer_or(p, "n_max", 200)));
  const double frac = num(p, "wall_fraction");
  const Beta beta(num(p, "beta_eps1") / box.eps1());
  const SzilardReport rep = run_cycle(box, WallConfig(frac * box.length, box), beta);
  // work columns in units of 1/beta
  const double b = beta.value;
  Row row;
  row.cells = {std::to_string(box.n_particles),
               p.at("statistics").get<std::string>(),
               csv_double(frac),
               csv_double(num(p, "beta_eps1")),
               csv_double(rep.w_ins * b),
               csv_double(rep.w_exp * b),
               csv_double(rep.w_rem * b),
               csv_double(rep.w_tot * b)};
  row.object = {{"n_particles", box.n_particles},
                {"statistics", p.at("statistics").get<std::string>()},
                {"wall_fraction", frac},
                {"beta_eps1", num(p, "beta_eps1")},
                {"w_ins", rep.w_ins * b},
                {"w_exp", rep.w_exp * b},
                {"w_rem", rep.w_rem * b},
                {"w_tot", rep.w_tot * b}};
  table.rows.push_back(std::move(row));
  table.summary["w_tot_last"] = rep.w_tot * b;
}

void run_reeb_wolf_point(const nlohmann::json& p, std::uint64_t seed, unsigned,
                         ExperimentTable& table) {
  const long trials = integer(p, "trials");
  const std::string bath_name = p.at("bath").get<std::string>();
  SpectrumModel bath = SpectrumModel::qubit(1.0);
  if (bath_name == "qutrit")
    bath = SpectrumModel({0.0, 1.0, 1.7}, {1, 1, 1});
  else if (bath_name != "qubit")
    throw std::invalid_argument("reeb_wolf: bath must be 'qubit' or 'qutrit'");
  const double beta_min = num_or(p, "beta_min", 0.1);
  const double beta_max = num_or(p, "beta_max", 10.0);
  if (!(beta_min > 0.0) || beta_max < beta_min)
    throw std::invalid_argument("reeb_wolf: need 0 < beta_min <= beta_max");

  Rng rng(seed);
  const int dim = 2 * static_cast<int>(bath.total_states());
  double max_residual = 0.0, min_sigma = 1e300;
  for (long t = 0; t < trials; ++t) {
    const double beta = beta_min + (beta_max - beta_min) * rng.uniform();
    const ErasureSetup setup(random_density(2, rng), bath, Beta(beta), haar_unitary(dim, rng));
    const Ledger led = run_erasure(setup);
    max_residual = std::max(max_residual, std::abs(led.equality_residual(beta)));
    min_sigma = std::min(min_sigma, led.entropy_production);
    Row row;
    row.cells = {csv_double(beta), ledger_csv_row(led, beta)};
    row.object = to_json(led, beta);
    row.object["beta"] = beta;
    table.rows.push_back(std::move(row));
  }
  table.summary = {{"trials", trials},
                   {"bath", bath_name},
                   {"max_equality_residual", max_residual},
                   {"min_entropy_production", min_sigma}};
}

void run_erasure_point(const nlohmann::json& p, std::uint64_t seed, unsigned threads,
                       ExperimentTable& table) {
  LangevinParams lp;
  lp.seed = seed;
  lp.dt = num_or(p, "dt", 2e-4);
  const ErasureOutcome out =
      erasure_experiment(num(p, "tau"), num(p, "f_max"), lp, integer(p, "n_traj"), threads);
  Row row;
  row.cells = {csv_double(out.tau),       csv_double(out.f_max),  csv_double(out.success_rate),
               csv_double(out.mean_heat), csv_double(out.heat_se), csv_double(out.q_bound),
               "nan",                     "nan"};
  row.object = {{"tau", out.tau},
                {"f_max", out.f_max},
                {"success_rate", out.success_rate},
                {"success_se", out.success_se},
                {"mean_heat", out.mean_heat},
                {"heat_se", out.heat_se},
                {"q_bound", out.q_bound},
                {"bound_ok", out.bound_ok},
                {"tilt_ineffective", out.tilt_ineffective}};
  if (out.tilt_ineffective)
    std::cerr << "warning: erasure tilt statistically ineffective (r ~ 1/2)\n";
  if (p.contains("trajectory_dump")) {
    // one representative full path (trajectory stream 0) as a raw binary dump
    LangevinParams single = lp;
    single.n_steps = static_cast<long>(std::ceil(erasure_cycle_duration(out.tau) / lp.dt));
    single.seed = derive_stream_seed(seed, 0);
    const PotentialSpec pot = erasure_protocol(out.tau, out.f_max, lp.kT);
    Rng rng(single.seed);
    single.seed = rng.next_u64();
    const Trajectory traj = simulate(pot, single, sample_equilibrium_x0(pot, lp.kT, rng));
    write_trajectory_binary(p.at("trajectory_dump").get<std::string>(), traj, lp.dt);
  }
  table.rows.push_back(std::move(row));
  table.summary["last_success_rate"] = out.success_rate;
  table.summary["last_mean_heat"] = out.mean_heat;
}

void run_jarzynski_point(const nlohmann::json& p, std::uint64_t seed, unsigned threads,
                         ExperimentTable& table) {
  const double tau = num(p, "tau");
  LangevinParams lp;
  lp.seed = seed;
  lp.dt = num_or(p, "dt", 1e-3);
  lp.n_steps = static_cast<long>(std::lround(tau / lp.dt));
  const HarmonicSpec pot{Schedule({0.0, tau}, {num(p, "k_start"), num(p, "k_end")})};
  const JarzynskiReport rep = jarzynski_check(pot, lp, integer(p, "n_traj"), threads);
  Row row;
  row.cells = {csv_double(tau), "nan", "nan", "nan", "nan", "nan",
               csv_double(rep.exp_avg), csv_double(rep.rhs)};
  row.object = {{"tau", tau},
                {"exp_avg", rep.exp_avg},
                {"exp_avg_se", rep.exp_avg_se},
                {"rhs", rep.rhs},
                {"rel_deviation", rep.rel_deviation},
                {"mean_work", rep.work.mean},
                {"work_se", rep.work.se},
                {"delta_f", rep.delta_f},
                {"jensen_ok", rep.jensen_ok}};
  table.rows.push_back(std::move(row));
  table.summary["last_rel_deviation"] = rep.rel_deviation;
}

void run_bounds_point(const nlohmann::json& p, std::uint64_t, unsigned, ExperimentTable& table) {
  const std::string calc = p.at("calculator").get<std::string>();
  Row row;
  nlohmann::json& o = row.object;
  o["calculator"] = calc;
  double value = 0.0;
  if (calc == "phonon_zero_t") {
    const HeatCapacityModel cap(num(p, "a"), num_or(p, "exponent", 3.0),
                                num_or(p, "reference_temperature", 0.0));
    value = zero_temperature_bound(cap, num(p, "delta_s"));
    o["closed_form"] = phonon_zero_t_closed_form(num(p, "a"), num(p, "delta_s"));
  } else if (calc == "finite_time") {
    const bool planck = integer_or(p, "planckian", 0) != 0;
    const FiniteTimeAlpha alpha = planck ? FiniteTimeAlpha::planckian()
                                         : FiniteTimeAlpha::explicit_value(num(p, "alpha"));
    value = finite_time_bound(num(p, "tau"), Beta(num(p, "beta")), alpha);
  } else if (calc == "finite_size") {
    const FiniteSizeBounds b = finite_size_bounds(num(p, "delta_s"),
                                                  static_cast<int>(integer(p, "d")),
                                                  integer(p, "n"));
    value = b.noninteracting;
    o["universal"] = b.universal;
    o["interacting_reference"] = b.interacting_reference;
    if (b.qubit_discrepancy) {
      o["qubit_quoted_one_third_n"] = b.qubit_quoted;
      o["qubit_quoted_discrepancy"] = true;
    }
  } else if (calc == "single_shot") {
    std::vector<double> eigs = p.at("eigenvalues").get<std::vector<double>>();
    value = single_shot_battery_bound_bits(DensityMatrix::diagonal(ProbDist(std::move(eigs))));
  } else if (calc == "distillation") {
    value = distillation_erasure_cost(integer(p, "n_copies"), num(p, "epsilon"),
                                      Beta(num(p, "beta")));
  } else {
    throw std::invalid_argument("bounds: unknown calculator '" + calc + "'");
  }
  o["value"] = value;
  row.cells = {calc, csv_double(value)};
  table.rows.push_back(std::move(row));
  table.summary["last_value"] = value;
}

void run_feedback_point(const nlohmann::json& p, std::uint64_t, unsigned,
                        ExperimentTable& table) {
  const double kT = num(p, "temperature");
  const double dfy = num(p, "delta_f_y");
  for (const double eps : p.at("error_rates").get<std::vector<double>>()) {
    const MeasurementModel meas = MeasurementModel::binary_symmetric(eps);
    const FeedbackLedger led = szilard_cycle_ledger(meas, dfy, kT);
    Row row;
    row.cells = {csv_double(eps),        csv_double(led.i_xm),   csv_double(led.w_meas),
                 csv_double(led.w_fb),   csv_double(led.w_reset), csv_double(led.w_tot)};
    row.object = {{"error", eps},       {"i_xm", led.i_xm},       {"w_meas", led.w_meas},
                  {"w_fb", led.w_fb},   {"w_reset", led.w_reset}, {"w_tot", led.w_tot},
                  {"delta_f_y", led.delta_f_y}};
    table.rows.push_back(std::move(row));
  }
  table.summary["ledgers"] = table.rows.size();
}

void run_gamble_point(const nlohmann::json& p, std::uint64_t seed, unsigned threads,
                      ExperimentTable& table) {
  const double tau = num(p, "tau");
  const TwoStateProcess proc(Schedule({0.0, tau}, {num(p, "e_start"), num(p, "e_end")}),
                             num(p, "attempt_rate"), Beta(num(p, "beta")), tau);
  const std::string rule_name = p.at("rule").get<std::string>();
  StoppingRule rule = StoppingRule::deadline();
  if (rule_name == "work_threshold") {
    if (!p.contains("threshold"))
      throw std::invalid_argument("gamble: rule 'work_threshold' needs key 'threshold'");
    rule = StoppingRule::work_threshold(num(p, "threshold"));
  } else if (rule_name != "deadline") {
    throw std::invalid_argument("gamble: rule must be 'deadline' or 'work_threshold'");
  }
  const GamblingReport rep = gambling_demon(proc, rule, integer(p, "n_traj"), seed, threads);
  Row row;
  row.object = {{"rule", rule_name},
                {"mean_work", rep.work.mean},
                {"work_se", rep.work.se},
                {"mean_delta_f", rep.delta_f.mean},
                {"delta_f_se", rep.delta_f.se},
                {"mean_delta", rep.delta.mean},
                {"delta_se", rep.delta.se},
                {"margin", rep.margin.mean},
                {"margin_se", rep.margin.se},
                {"ft_estimator", rep.ft_estimator},
                {"ft_se", rep.ft_se},
                {"mean_stop_time", rep.mean_stop_time},
                {"n_traj", rep.n_traj},
                {"n_excluded", rep.n_excluded},
                // conventions are recorded because the source equation leaves
                // the stopped dF (and the delta reference) implicit
                {"delta_f_convention", "F_eq(lambda(T)) - F_eq(lambda(0))"},
                {"delta_convention", "ln[pi_eq(x,T)/reverse_density(x,tau-T)]"}};
  row.cells = {rule_name,
               csv_double(rep.work.mean),
               csv_double(rep.delta_f.mean),
               csv_double(rep.delta.mean),
               csv_double(rep.ft_estimator),
               csv_double(rep.ft_se),
               csv_double(static_cast<double>(rep.n_excluded))};
  table.rows.push_back(std::move(row));
  table.summary["ft_estimator"] = rep.ft_estimator;
}

const std::vector<std::string>& columns_for(Experiment e) {
  static const std::map<Experiment, std::vector<std::string>> cols = {
      {Experiment::szilard,
       {"n_particles", "statistics", "l_over_L", "beta_eps1", "w_ins", "w_exp", "w_rem", "w_tot"}},
      {Experiment::reeb_wolf,
       {"beta", "delta_s_system", "heat_to_bath", "mutual_info", "rel_entropy_bath",
        "entropy_production", "residual"}},
      {Experiment::erasure,
       {"tau", "f_max", "r", "mean_heat", "se", "q_r", "jarzynski_lhs", "jarzynski_rhs"}},
      {Experiment::jarzynski,
       {"tau", "f_max", "r", "mean_heat", "se", "q_r", "jarzynski_lhs", "jarzynski_rhs"}},
      {Experiment::bounds, {"calculator", "value"}},
      {Experiment::feedback, {"error", "i_xm", "w_meas", "w_fb", "w_reset", "w_tot"}},
      {Experiment::gamble,
       {"rule", "mean_work", "mean_delta_f", "mean_delta", "ft_estimator", "ft_se",
        "n_excluded"}},
  };
  return cols.at(e);
}

void run_point(const ExperimentConfig& cfg, const nlohmann::json& params, ExperimentTable& table) {
  switch (cfg.experiment) {
    case Experiment::szilard: return run_szilard_point(params, cfg.seed, cfg.threads, table);
    case Experiment::reeb_wolf: return run_reeb_wolf_point(params, cfg.seed, cfg.threads, table);
    case Experiment::erasure: return run_erasure_point(params, cfg.seed, cfg.threads, table);
    case Experiment::jarzynski: return run_jarzynski_point(params, cfg.seed, cfg.threads, table);
    case Experiment::bounds: return run_bounds_point(params, cfg.seed, cfg.threads, table);
    case Experiment::feedback: return run_feedback_point(params, cfg.seed, cfg.threads, table);
    case Experiment::gamble: return run_gamble_point(params, cfg.seed, cfg.threads, table);
  }
  throw std::logic_error("run_point: unhandled experiment");
}

std::string render_csv(const ExperimentConfig& cfg, const ExperimentTable& table) {
  std::ostringstream out;
  out << "# " << kVersion << "\n";
  out << "# config " << cfg.canonical_dump() << "\n";
  const auto& cols = columns_for(cfg.experiment);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const Row& row : table.rows) {
    std::string line;
    for (const std::string& cell : row.cells) {
      if (!line.empty()) line += ",";
      line += cell;
    }
    out << line << "\n";
  }
  return out.str();
}

std::string render_json(const ExperimentConfig& cfg, const ExperimentTable& table) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = cfg.to_json();
  j["summary"] = table.summary;
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& row : table.rows) rows.push_back(row.object);
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
  return nlohmann::json{{"config_hash", config_hash},
                        {"version", version},
                        {"duration_s", duration_s},
                        {"rows", rows},
                        {"summary", summary}};
}

RunManifest execute(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  // deterministic lexicographic grid order (std::map keeps keys sorted)
  std::vector<std::string> axes;
  std::size_t total = 1;
  for (const auto& [key, values] : cfg.grid) {
    axes.push_back(key);
    total *= values.size();
    if (total > kMaxGridPoints)
      throw std::invalid_argument("sweep: grid size exceeds " + std::to_string(kMaxGridPoints) +
                                  " points");
  }

  ExperimentTable table;
  for (std::size_t index = 0; index < total; ++index) {
    nlohmann::json params = cfg.params;
    std::size_t rem = index;
    for (std::size_t a = axes.size(); a-- > 0;) {
      const auto& values = cfg.grid.at(axes[a]);
      params[axes[a]] = values[rem % values.size()];
      rem /= values.size();
    }
    run_point(cfg, params, table);
  }

  const std::string payload = cfg.format == OutputFormat::csv ? render_csv(cfg, table)
                                                              : render_json(cfg, table);
  if (cfg.output_path.empty())
    std::cout << payload;
  else
    atomic_write_file(cfg.output_path, payload);

  RunManifest manifest;
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(cfg.config_hash()));
  manifest.config_hash = hash;
  manifest.rows = table.rows.size();
  manifest.summary = table.summary;
  manifest.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return manifest;
}

}  // namespace infotherm::cli

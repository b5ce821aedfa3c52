// Command-line front end: parse a JSON game configuration, dispatch to the
// library, and print a machine-readable report.
//
// Angles in configs are in units of pi ("phi": 0.5 means pi/2).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpg/cost.hpp"
#include "qpg/engine.hpp"
#include "qpg/equilibrium.hpp"
#include "qpg/version.hpp"

using json = nlohmann::json;
using namespace qpg;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

struct CliOptions {
  std::string config_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<int> threads;
  std::optional<std::string> caps;  // "amplitudes,work"
};

json load_config(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  return json::parse(in);
}

EntanglementScheme parse_scheme(const std::string& s) {
  if (s == "full") return EntanglementScheme::Full;
  if (s == "all_pairs") return EntanglementScheme::AllPairs;
  if (s == "neighbor_ring") return EntanglementScheme::NeighborRing;
  throw std::invalid_argument("unknown scheme: " + s);
}

Interpretation parse_interpretation(const std::string& s) {
  if (s == "direct") return Interpretation::Direct;
  if (s == "partial") return Interpretation::Partial;
  if (s == "all_or_none") return Interpretation::AllOrNone;
  if (s == "majority") return Interpretation::Majority;
  throw std::invalid_argument("unknown interpretation: " + s);
}

GameSpec parse_spec(const json& cfg) {
  GameSpec spec;
  spec.n = cfg.at("n").get<int>();
  spec.a = cfg.at("a").get<double>();
  if (cfg.contains("endowments"))
    spec.endowments = cfg["endowments"].get<std::vector<double>>();
  else
    spec.endowments.assign(std::max(spec.n, 0), 1.0);
  spec.scheme = parse_scheme(cfg.value("scheme", "full"));
  spec.interpretation = parse_interpretation(cfg.value("interpretation", "direct"));
  if (cfg.contains("contribution_caps"))
    spec.contribution_caps = cfg["contribution_caps"].get<std::vector<double>>();
  spec.validate();
  return spec;
}

EngineCaps parse_caps(const json& cfg, const CliOptions& opts) {
  EngineCaps caps;
  if (cfg.contains("caps")) {
    caps.max_amplitudes = cfg["caps"].value("amplitudes", caps.max_amplitudes);
    caps.max_work = cfg["caps"].value("work", caps.max_work);
  }
  if (opts.caps) {
    std::istringstream ss(*opts.caps);
    char comma = 0;
    if (!(ss >> caps.max_amplitudes >> comma >> caps.max_work) || comma != ',')
      throw std::invalid_argument("--caps expects <amplitudes>,<work>");
  }
  return caps;
}

SingleQubitOp parse_op(const json& j) {
  return build_operator(j.at("theta").get<double>() * std::numbers::pi,
                        j.at("phi").get<double>() * std::numbers::pi,
                        j.at("alpha").get<double>() * std::numbers::pi);
}

json op_to_json(double theta, double phi, double alpha) {
  return {{"theta", theta / std::numbers::pi},
          {"phi", phi / std::numbers::pi},
          {"alpha", alpha / std::numbers::pi}};
}

std::vector<MixedStrategy> parse_strategy(const json& cfg, const QubitLayout& layout) {
  const json& strat = cfg.at("strategy");
  const std::string type = strat.at("type").get<std::string>();
  if (type == "paper_mixture") return paper_mixture(layout);

  std::vector<MixedStrategy> profile;
  if (type == "operators") {
    const auto& players = strat.at("players");
    if (static_cast<int>(players.size()) != layout.n)
      throw std::invalid_argument("strategy.players must list every player");
    for (const auto& ops : players) {
      PureStrategy s;
      for (const auto& op : ops) s.ops.push_back(parse_op(op));
      profile.push_back(MixedStrategy::pure(std::move(s)));
    }
  } else if (type == "bits") {
    const auto bits = strat.at("bits").get<std::vector<int>>();
    if (static_cast<int>(bits.size()) != layout.n)
      throw std::invalid_argument("strategy.bits must list every player");
    for (int k = 0; k < layout.n; ++k) {
      if (bits[k] != 0 && bits[k] != 1)
        throw std::invalid_argument("strategy.bits entries must be 0 or 1");
      const SingleQubitOp op = bits[k] == 0
                                   ? build_operator(0.0, 0.0, 0.0)
                                   : build_operator(std::numbers::pi, 0.0,
                                                    std::numbers::pi / 2.0);
      PureStrategy s;
      s.ops.assign(layout.ownership[k].size(), op);
      profile.push_back(MixedStrategy::pure(std::move(s)));
    }
  } else {
    throw std::invalid_argument("unknown strategy type: " + type);
  }
  for (int k = 0; k < layout.n; ++k) profile[k].validate(layout.owned_count(k));
  return profile;
}

SimMethod parse_method(const json& cfg, const CliOptions& opts) {
  SimMethod method = SimMethod::exact();
  if (cfg.contains("method")) {
    const std::string type = cfg["method"].value("type", "exact");
    if (type == "mc") {
      method = SimMethod::monte_carlo(cfg["method"].value("samples", std::uint64_t{100000}),
                                      cfg["method"].value("seed", std::uint64_t{0}));
    } else if (type != "exact") {
      throw std::invalid_argument("unknown method type: " + type);
    }
  }
  if (opts.samples) {
    if (method.kind != SimMethod::Kind::MonteCarlo)
      method = SimMethod::monte_carlo(*opts.samples, 0);
    method.samples = *opts.samples;
  }
  if (opts.seed) method.seed = *opts.seed;
  return method;
}

json spec_echo(const GameSpec& spec) {
  json j{{"n", spec.n},
         {"a", spec.a},
         {"endowments", spec.endowments},
         {"scheme", to_string(spec.scheme)},
         {"interpretation", to_string(spec.interpretation)}};
  if (spec.contribution_caps) j["contribution_caps"] = *spec.contribution_caps;
  return j;
}

void emit(const std::string& text) {
  // Single atomic write.
  std::fwrite(text.data(), 1, text.size(), stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  return row;
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  return ss.str();
}

int run_payoff_table(const json& cfg, const CliOptions& opts) {
  GameSpec spec = parse_spec(cfg);
  spec.scheme = EntanglementScheme::Full;
  spec.interpretation = Interpretation::Direct;
  spec.validate();
  const QubitLayout layout = build_layout(EntanglementScheme::Full, spec.n);

  json rows = json::array();
  std::vector<std::string> csv_lines;
  for (std::size_t s = 0; s < (std::size_t{1} << spec.n); ++s) {
    const std::string bits = index_to_bits(s, spec.n);
    const std::vector<double> payoffs = payoff_vector(bits, spec, layout);
    rows.push_back({{"bits", bits}, {"payoffs", payoffs}});
    std::vector<std::string> cells{bits};
    for (double p : payoffs) cells.push_back(fmt(p));
    csv_lines.push_back(csv_row(cells));
  }

  if (opts.format == "csv") {
    std::string out = "bits";
    for (int k = 0; k < spec.n; ++k) out += ",player" + std::to_string(k);
    for (const std::string& line : csv_lines) out += "\n" + line;
    emit(out);
  } else {
    emit(json{{"version", kVersion},
              {"subcommand", "payoff-table"},
              {"config", spec_echo(spec)},
              {"rows", rows}}
             .dump(2));
  }
  return 0;
}

int run_simulate(const json& cfg, const CliOptions& opts) {
  const GameSpec spec = parse_spec(cfg);
  const QubitLayout layout = build_layout(spec.scheme, spec.n);
  const EngineCaps caps = parse_caps(cfg, opts);
  const SimMethod method = parse_method(cfg, opts);
  const std::vector<MixedStrategy> profile = parse_strategy(cfg, layout);

  const PayoffReport report = expected_payoffs(profile, spec, layout, method, caps);

  if (opts.format == "csv") {
    std::string out = report.method == SimMethod::Kind::MonteCarlo
                          ? "player,expected,std_error"
                          : "player,expected";
    for (int k = 0; k < spec.n; ++k) {
      out += "\n" + std::to_string(k) + "," + fmt(report.expected[k]);
      if (report.method == SimMethod::Kind::MonteCarlo) out += "," + fmt(report.std_error[k]);
    }
    emit(out);
    return 0;
  }

  json j{{"version", kVersion},
         {"subcommand", "simulate"},
         {"config", spec_echo(spec)},
         {"strategy", cfg.at("strategy")},
         {"expected", report.expected},
         {"method", report.method == SimMethod::Kind::MonteCarlo ? "mc" : "exact"}};
  if (report.method == SimMethod::Kind::MonteCarlo) {
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["std_error"] = report.std_error;
  }
  emit(j.dump(2));
  return 0;
}

int run_equilibrium(const json& cfg, const CliOptions& opts) {
  const GameSpec spec = parse_spec(cfg);
  const QubitLayout layout = build_layout(spec.scheme, spec.n);
  const EngineCaps caps = parse_caps(cfg, opts);

  SearchConfig search;
  search.grid_points_per_angle = cfg.value("grid", search.grid_points_per_angle);
  search.random_samples = cfg.value("random_samples", search.random_samples);
  search.seed = cfg.value("seed", search.seed);
  if (opts.seed) search.seed = *opts.seed;
  const int player = cfg.value("player", 0);

  const double closed = closed_form_payoff(spec.scheme, spec.interpretation, spec.n, spec.a);
  const DeviationReport report =
      verify_deviation_independence(spec, layout, player, search, caps);

  if (opts.format == "csv") {
    emit("closed_form,baseline,max_gain,max_abs_deviation,evaluated\n" +
         csv_row({fmt(closed), fmt(report.baseline), fmt(report.max_gain),
                  fmt(report.max_abs_deviation), std::to_string(report.evaluated)}));
    return 0;
  }

  json argmax = json::array();
  for (const auto& [theta, phi, alpha] : report.argmax_ops)
    argmax.push_back(op_to_json(theta, phi, alpha));
  emit(json{{"version", kVersion},
            {"subcommand", "equilibrium"},
            {"config", spec_echo(spec)},
            {"player", report.player},
            {"closed_form", closed},
            {"baseline", report.baseline},
            {"max_gain", report.max_gain},
            {"max_abs_deviation", report.max_abs_deviation},
            {"argmax_ops", argmax},
            {"search",
             {{"grid", search.grid_points_per_angle},
              {"random_samples", search.random_samples},
              {"seed", search.seed},
              {"evaluated", report.evaluated}}}}
           .dump(2));
  return 0;
}

int run_plan(const json& cfg, const CliOptions& opts) {
  const int n = cfg.at("n").get<int>();
  const double a = cfg.at("a").get<double>();
  std::vector<double> endowments;
  if (cfg.contains("endowments"))
    endowments = cfg["endowments"].get<std::vector<double>>();
  else
    endowments.assign(n, 1.0);
  if (static_cast<int>(endowments.size()) != n)
    throw std::invalid_argument("endowments size must equal n");

  const ContributionPlan plan = plan_heterogeneous(endowments, a);
  GameSpec spec = GameSpec::uniform(n, a, EntanglementScheme::Full, Interpretation::Direct);
  spec.endowments = endowments;
  const VoluntaryCheck check = check_voluntary(plan, spec);

  if (opts.format == "csv") {
    std::string out = "player,endowment,contribution,margin";
    for (int k = 0; k < n; ++k)
      out += "\n" + csv_row({std::to_string(k), fmt(endowments[k]),
                             fmt(plan.contributions[k]), fmt(check.margins[k])});
    emit(out);
    return 0;
  }

  emit(json{{"version", kVersion},
            {"subcommand", "plan"},
            {"config", {{"n", n}, {"a", a}, {"endowments", endowments}}},
            {"cutoff", plan.cutoff},
            {"full_contributors", plan.m},
            {"contributions", plan.contributions},
            {"voluntary", check.satisfied},
            {"margins", check.margins}}
           .dump(2));
  return 0;
}

int run_cost(const json& cfg, const CliOptions& opts) {
  CostQuery query;
  query.scheme = parse_scheme(cfg.at("scheme").get<std::string>());
  query.n = cfg.at("n").get<int>();
  query.beta = cfg.at("beta").get<double>();
  const double trials = expected_trials(query);

  if (opts.format == "csv") {
    emit("scheme,n,beta,expected_trials\n" +
         csv_row({to_string(query.scheme), std::to_string(query.n), fmt(query.beta),
                  fmt(trials)}));
    return 0;
  }
  emit(json{{"version", kVersion},
            {"subcommand", "cost"},
            {"config",
             {{"scheme", to_string(query.scheme)}, {"n", query.n}, {"beta", query.beta}}},
            {"expected_trials", trials}}
           .dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum public-goods game simulator"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CliOptions opts;
  if (const char* env = std::getenv("QPG_THREADS")) opts.threads = std::atoi(env);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "Config JSON file, or - for stdin")
        ->required();
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", opts.seed, "Override RNG seed");
    sub->add_option("--samples", opts.samples, "Override Monte Carlo sample count");
    sub->add_option("--threads", opts.threads, "Worker thread count");
    sub->add_option("--caps", opts.caps, "Capacity caps as <amplitudes>,<work>");
  };

  CLI::App* table = app.add_subcommand("payoff-table", "Classical payoff table (all 2^n outcomes)");
  CLI::App* simulate = app.add_subcommand("simulate", "Expected payoffs for a strategy profile");
  CLI::App* equilibrium =
      app.add_subcommand("equilibrium", "Closed-form payoff and deviation search");
  CLI::App* plan = app.add_subcommand("plan", "Heterogeneous-wealth contribution plan");
  CLI::App* cost = app.add_subcommand("cost", "Expected entanglement-distribution trials");
  for (CLI::App* sub : {table, simulate, equilibrium, plan, cost}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const json cfg = load_config(opts.config_path);
    if (table->parsed()) return run_payoff_table(cfg, opts);
    if (simulate->parsed()) return run_simulate(cfg, opts);
    if (equilibrium->parsed()) return run_equilibrium(cfg, opts);
    if (plan->parsed()) return run_plan(cfg, opts);
    if (cost->parsed()) return run_cost(cfg, opts);
    return kExitValidation;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

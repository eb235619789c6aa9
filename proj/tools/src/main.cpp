#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "onestep/errors.hpp"
#include "onestep/evolve.hpp"
#include "onestep/fock.hpp"
#include "onestep/io.hpp"
#include "onestep/langevin.hpp"
#include "onestep/liouville.hpp"
#include "onestep/parallel.hpp"
#include "onestep/rng.hpp"
#include "onestep/scheme_parser.hpp"
#include "onestep/ssa.hpp"
#include "onestep/stats.hpp"
#include "onestep/stochastization.hpp"
#include "onestep/version.hpp"

namespace {

using json = nlohmann::json;
using namespace onestep;

constexpr std::uint64_t kDefaultSeed = 1;

// Exit codes: 0 success (and verified equal), 1 usage or input-syntax error,
// 2 domain error, 3 verification mismatch.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMismatch = 3;

/// Input files that fail to open or parse are usage errors, distinct from
/// mathematically invalid requests.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool color_enabled() {
  const char* env = std::getenv("ONESTEP_COLOR");
  return env != nullptr && std::string_view(env) == "1";
}

void print_error(const std::string& message) {
  if (color_enabled()) {
    std::cerr << "\x1b[31merror:\x1b[0m " << message << '\n';
  } else {
    std::cerr << "error: " << message << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

State parse_counts(const std::string& text, const char* what) {
  State values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::int64_t value = 0;
    const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
    if (result.ec != std::errc{} || result.ptr != item.data() + item.size()) {
      throw UsageError(std::string(what) + ": expected comma-separated integers, got '" + text + "'");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw UsageError(std::string(what) + ": empty list");
  return values;
}

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": expected comma-separated numbers, got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw UsageError(std::string(what) + ": empty list");
  return values;
}

/// Expands a single value to one per species; validates length otherwise.
template <class T>
std::vector<T> per_species(std::vector<T> values, std::size_t arity, const char* what) {
  if (values.size() == 1 && arity > 1) values.resize(arity, values.front());
  if (values.size() != arity) {
    throw UsageError(std::string(what) + ": expected 1 or " + std::to_string(arity) + " values");
  }
  return values;
}

struct Common {
  std::string scheme_path;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  std::string convention = "paper";
  unsigned threads = 0;

  unsigned resolved_threads() const {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

/// Metadata block embedded in every artifact. `--threads` and `--output` are
/// deliberately excluded so reruns are byte-identical regardless of them.
json make_meta(const Common& common, const std::string& command, const InteractionScheme& scheme,
               json config) {
  config["scheme"] = common.scheme_path;
  config["format"] = common.format;
  json meta;
  meta["command"] = command;
  meta["config"] = std::move(config);
  meta["scheme_hash"] = scheme_hash(scheme);
  meta["seed"] = common.seed;
  meta["version"] = kVersion;
  return meta;
}

MetadataList csv_metadata(const json& meta) {
  MetadataList list;
  list.emplace_back("version", meta["version"].get<std::string>());
  list.emplace_back("command", meta["command"].get<std::string>());
  list.emplace_back("config", meta["config"].dump());
  list.emplace_back("seed", std::to_string(meta["seed"].get<std::uint64_t>()));
  list.emplace_back("scheme_hash", meta["scheme_hash"].get<std::string>());
  return list;
}

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + common.output);
  out << text;
}

void require_json_format(const Common& common, const char* command) {
  if (common.format != "json") {
    throw UsageError(std::string(command) + " supports --format json only");
  }
}

InteractionScheme load_scheme(const Common& common) {
  return parse_scheme(read_file(common.scheme_path));
}

json rational_pair_json(const RationalPropensityPair& pair) {
  return json{{"forward", to_string(pair.forward)}, {"backward", to_string(pair.backward)}};
}

json double_pair_json(const PropensityPair& pair) {
  return json{{"forward", pair.forward}, {"backward", pair.backward}};
}

int run_parse(const Common& common) {
  require_json_format(common, "parse");
  const InteractionScheme scheme = load_scheme(common);
  json out;
  out["meta"] = make_meta(common, "parse", scheme, json::object());
  out["species"] = scheme.species.names();
  json interactions = json::array();
  for (const Interaction& interaction : scheme.interactions) {
    interactions.push_back({{"reactants", interaction.reactants},
                            {"products", interaction.products},
                            {"rate_forward", to_string(interaction.rate_forward)},
                            {"rate_backward", to_string(interaction.rate_backward)}});
  }
  out["interactions"] = std::move(interactions);
  json reactants = json::array(), products = json::array(), steps = json::array();
  for (const Interaction& interaction : scheme.interactions) {
    reactants.push_back(interaction.reactants);
    products.push_back(interaction.products);
    steps.push_back(interaction.step());
  }
  out["I"] = std::move(reactants);
  out["F"] = std::move(products);
  out["r"] = std::move(steps);
  json parameters = json::object();
  for (const auto& [name, value] : scheme.parameters) parameters[name] = to_string(value);
  out["parameters"] = std::move(parameters);
  emit(common, out.dump(2) + "\n");
  return kExitOk;
}

int run_derive(const Common& common, const std::string& at) {
  require_json_format(common, "derive");
  const InteractionScheme scheme = load_scheme(common);
  const Convention convention = convention_from_string(common.convention);
  const State state = per_species(parse_counts(at, "--at"), scheme.species.size(), "--at");

  const auto exact = exact_propensities_rational(scheme, state);
  const auto poly = polynomial_propensities(scheme, state);
  const JumpMoment xi1 = jump_moment(scheme, state, 1);
  const JumpMoment xi2 = jump_moment(scheme, state, 2);
  const DriftDiffusion dd = drift_diffusion(scheme, state, convention);

  json out;
  json config;
  config["at"] = state;
  config["convention"] = to_string(convention);
  out["meta"] = make_meta(common, "derive", scheme, std::move(config));
  out["state"] = state;
  json exact_json = json::array(), poly_json = json::array();
  for (const auto& pair : exact) exact_json.push_back(rational_pair_json(pair));
  for (const auto& pair : poly) poly_json.push_back(double_pair_json(pair));
  out["propensities_exact"] = std::move(exact_json);
  out["propensities_polynomial"] = std::move(poly_json);
  out["jump_moment_1"] = xi1.vec;
  json xi2_rows = json::array();
  for (std::size_t i = 0; i < xi2.mat.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < xi2.mat.cols; ++j) row.push_back(xi2.mat.at(i, j));
    xi2_rows.push_back(std::move(row));
  }
  out["jump_moment_2"] = std::move(xi2_rows);
  out["drift"] = dd.drift;
  json diffusion = json::array();
  for (std::size_t i = 0; i < dd.diffusion.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < dd.diffusion.cols; ++j) row.push_back(dd.diffusion.at(i, j));
    diffusion.push_back(std::move(row));
  }
  out["diffusion"] = std::move(diffusion);
  out["convention"] = to_string(convention);
  emit(common, out.dump(2) + "\n");
  return kExitOk;
}

int run_cme(const Common& common, const std::string& cap, const std::string& x0, double t_end,
            double dt) {
  const InteractionScheme scheme = load_scheme(common);
  const std::size_t arity = scheme.species.size();
  const State caps = per_species(parse_counts(cap, "--cap"), arity, "--cap");
  const State start = per_species(parse_counts(x0, "--x0"), arity, "--x0");
  if (!(t_end >= 0.0)) throw UsageError("--t-end must be non-negative");

  const TruncatedLattice lattice(caps);
  const GeneratorMatrix generator = build_generator(scheme, lattice);
  const double dt_resolved = dt > 0.0 ? dt : suggest_dt(generator);
  const ProbabilityDistribution initial = delta_distribution(lattice, start);
  const EvolveResult result = evolve(initial, generator, t_end, dt_resolved);
  const std::vector<double> mean = distribution_mean(result.dist, lattice);

  json config;
  config["cap"] = caps;
  config["x0"] = start;
  config["t_end"] = t_end;
  config["dt"] = dt_resolved;
  const json meta = make_meta(common, "cme", scheme, std::move(config));

  if (common.format == "csv") {
    std::ostringstream out;
    write_distribution_csv(out, result.dist, lattice, scheme.species.names(), csv_metadata(meta));
    emit(common, out.str());
    return kExitOk;
  }
  if (common.format != "json") throw UsageError("cme supports --format json or csv");

  json out;
  out["meta"] = meta;
  out["time"] = result.dist.time;
  out["steps"] = result.steps;
  out["leakage"] = result.leakage;
  out["mean"] = mean;
  json rows = json::array();
  for (std::size_t index = 0; index < result.dist.p.size(); ++index) {
    rows.push_back({{"state", lattice.state_of(index)}, {"p", result.dist.p[index]}});
  }
  out["distribution"] = std::move(rows);
  emit(common, out.dump(2) + "\n");
  return kExitOk;
}

std::vector<double> sample_grid(double t_end, std::size_t samples) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  std::vector<double> times(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    times[k] = t_end * static_cast<double>(k) / static_cast<double>(samples - 1);
  }
  return times;
}

json stats_json(const EnsembleStats& stats) {
  json out;
  out["times"] = stats.times;
  out["mean"] = stats.mean;
  out["variance"] = stats.variance;
  out["standard_error"] = stats.standard_error;
  out["replicas"] = stats.replicas;
  return out;
}

int run_ssa(const Common& common, const std::string& x0, double t_end, std::size_t replicas,
            std::size_t samples) {
  const InteractionScheme scheme = load_scheme(common);
  const std::size_t arity = scheme.species.size();
  const State start = per_species(parse_counts(x0, "--x0"), arity, "--x0");
  if (!(t_end >= 0.0)) throw UsageError("--t-end must be non-negative");
  if (replicas == 0) throw UsageError("--replicas must be positive");

  json config;
  config["x0"] = start;
  config["t_end"] = t_end;
  config["replicas"] = replicas;

  if (replicas == 1) {
    Rng rng = Rng::substream(common.seed, 0);
    const Trajectory trajectory = ssa_sample(scheme, start, t_end, rng);
    const json meta = make_meta(common, "ssa", scheme, std::move(config));
    if (common.format == "csv") {
      std::ostringstream out;
      write_trajectory_csv(out, trajectory, scheme.species.names(), csv_metadata(meta));
      emit(common, out.str());
      return kExitOk;
    }
    if (common.format != "json") throw UsageError("ssa supports --format json or csv");
    json out;
    out["meta"] = meta;
    out["times"] = trajectory.times;
    out["states"] = trajectory.states;
    emit(common, out.dump(2) + "\n");
    return kExitOk;
  }

  config["samples"] = samples;
  const std::vector<double> grid = sample_grid(t_end, samples);
  std::vector<SampledSeries> ensemble(replicas);
  parallel_for_index(replicas, common.resolved_threads(), [&](std::size_t r) {
    Rng rng = Rng::substream(common.seed, r);
    ensemble[r] = sample_trajectory(ssa_sample(scheme, start, t_end, rng), grid);
  });
  const EnsembleStats stats = ensemble_stats(ensemble);
  const json meta = make_meta(common, "ssa", scheme, std::move(config));
  if (common.format == "csv") {
    std::ostringstream out;
    write_stats_csv(out, stats, scheme.species.names(), csv_metadata(meta));
    emit(common, out.str());
    return kExitOk;
  }
  if (common.format != "json") throw UsageError("ssa supports --format json or csv");
  json out;
  out["meta"] = meta;
  out.update(stats_json(stats));
  emit(common, out.dump(2) + "\n");
  return kExitOk;
}

int run_langevin(const Common& common, const std::string& x0, double t_end, double dt,
                 std::size_t replicas, std::size_t samples, const std::string& policy,
                 const std::string& noise) {
  const InteractionScheme scheme = load_scheme(common);
  const std::size_t arity = scheme.species.size();
  const std::vector<double> start = per_species(parse_reals(x0, "--x0"), arity, "--x0");
  if (!(t_end > 0.0)) throw UsageError("--t-end must be positive");
  if (!(dt > 0.0)) throw UsageError("--dt must be positive");
  if (replicas == 0) throw UsageError("--replicas must be positive");
  if (noise != "on" && noise != "off") throw UsageError("--noise must be on or off");

  SdeModel model;
  model.scheme = &scheme;
  model.convention = convention_from_string(common.convention);
  model.policy = noise_policy_from_string(policy);
  model.noise = noise == "on";
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));

  json config;
  config["x0"] = start;
  config["t_end"] = t_end;
  config["dt"] = dt;
  config["steps"] = steps;
  config["replicas"] = replicas;
  config["convention"] = to_string(model.convention);
  config["policy"] = policy;
  config["noise"] = noise;

  if (replicas == 1) {
    Rng rng = Rng::substream(common.seed, 0);
    const SdeTrajectory trajectory = euler_maruyama(model, start, dt, steps, rng);
    const json meta = make_meta(common, "langevin", scheme, std::move(config));
    if (common.format == "csv") {
      std::ostringstream out;
      write_series_csv(out, trajectory.series, scheme.species.names(), csv_metadata(meta));
      emit(common, out.str());
      return kExitOk;
    }
    if (common.format != "json") throw UsageError("langevin supports --format json or csv");
    json out;
    out["meta"] = meta;
    out["times"] = trajectory.series.times;
    out["values"] = trajectory.series.values;
    out["invalid_diffusion_events"] = trajectory.invalid_diffusion_events;
    out["floor_clamps"] = trajectory.floor_clamps;
    emit(common, out.dump(2) + "\n");
    return kExitOk;
  }

  config["samples"] = samples;
  const std::vector<double> grid = sample_grid(t_end, samples);
  std::vector<SampledSeries> ensemble(replicas);
  std::vector<std::size_t> invalid(replicas, 0), clamps(replicas, 0);
  parallel_for_index(replicas, common.resolved_threads(), [&](std::size_t r) {
    Rng rng = Rng::substream(common.seed, r);
    const SdeTrajectory trajectory = euler_maruyama(model, start, dt, steps, rng);
    invalid[r] = trajectory.invalid_diffusion_events;
    clamps[r] = trajectory.floor_clamps;
    SampledSeries sampled;
    sampled.times = grid;
    for (const double t : grid) {
      auto index = static_cast<std::size_t>(t / dt + 1e-9);
      if (index > steps) index = steps;
      sampled.values.push_back(trajectory.series.values[index]);
    }
    ensemble[r] = std::move(sampled);
  });
  const EnsembleStats stats = ensemble_stats(ensemble);
  std::size_t invalid_total = 0, clamp_total = 0;
  for (std::size_t r = 0; r < replicas; ++r) {
    invalid_total += invalid[r];
    clamp_total += clamps[r];
  }
  const json meta = make_meta(common, "langevin", scheme, std::move(config));
  if (common.format == "csv") {
    std::ostringstream out;
    write_stats_csv(out, stats, scheme.species.names(), csv_metadata(meta));
    emit(common, out.str());
    return kExitOk;
  }
  if (common.format != "json") throw UsageError("langevin supports --format json or csv");
  json out;
  out["meta"] = meta;
  out.update(stats_json(stats));
  out["invalid_diffusion_events"] = invalid_total;
  out["floor_clamps"] = clamp_total;
  emit(common, out.dump(2) + "\n");
  return kExitOk;
}

int run_liouville(const Common& common) {
  require_json_format(common, "liouville");
  const InteractionScheme scheme = load_scheme(common);
  const LiouvilleOperator liouville = build_liouville(scheme);
  json out;
  out["meta"] = make_meta(common, "liouville", scheme, json::object());
  out["pretty"] = pretty(liouville.poly, liouville.species);
  out["operator"] = json::parse(to_json_text(liouville.poly));
  out["species"] = liouville.species;
  emit(common, out.dump(2) + "\n");
  return kExitOk;
}

int run_verify(const Common& common, const std::string& cap) {
  require_json_format(common, "verify");
  const InteractionScheme scheme = load_scheme(common);
  const State caps = per_species(parse_counts(cap, "--cap"), scheme.species.size(), "--cap");
  const TruncatedLattice lattice(caps);
  const EquivalenceReport report = verify_equivalence(scheme, lattice);
  json config;
  config["cap"] = caps;
  json out;
  out["meta"] = make_meta(common, "verify", scheme, std::move(config));
  out.update(json::parse(to_json_text(report)));
  emit(common, out.dump(2) + "\n");
  return report.equal ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-step stochastization toolkit: interaction schemes to master equation, "
               "Fokker-Planck/Langevin, and creation/annihilation operator form"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", common.output, "Write the artifact to PATH instead of stdout");
  app.add_option("--seed", common.seed, "Root RNG seed (always recorded in output metadata)");
  app.add_option("--convention", common.convention,
                 "Diffusion sign convention: paper or km (kramers_moyal)")
      ->check(CLI::IsMember({"paper", "km", "kramers_moyal"}));
  app.add_option("--threads", common.threads,
                 "Worker threads for ensembles (0 = all cores); never changes results");

  auto* cmd_parse = app.add_subcommand("parse", "Parse a scheme and print its structure");
  cmd_parse->add_option("file", common.scheme_path, "Scheme file")->required();

  std::string at;
  auto* cmd_derive =
      app.add_subcommand("derive", "Propensities, jump moments, drift and diffusion at a state");
  cmd_derive->add_option("file", common.scheme_path, "Scheme file")->required();
  cmd_derive->add_option("--at", at, "State counts, comma-separated")->required();

  std::string cme_cap = "64", cme_x0 = "0";
  double cme_t_end = 1.0, cme_dt = 0.0;
  auto* cmd_cme = app.add_subcommand("cme", "Evolve the truncated master equation");
  cmd_cme->add_option("file", common.scheme_path, "Scheme file")->required();
  cmd_cme->add_option("--cap", cme_cap, "Per-species truncation cap(s)");
  cmd_cme->add_option("--x0", cme_x0, "Initial state counts");
  cmd_cme->add_option("--t-end", cme_t_end, "End time");
  cmd_cme->add_option("--dt", cme_dt, "Step size (0 = auto from the stability bound)");

  std::string ssa_x0 = "0";
  double ssa_t_end = 1.0;
  std::size_t ssa_replicas = 1, ssa_samples = 11;
  auto* cmd_ssa = app.add_subcommand("ssa", "Sample exact jump trajectories (Gillespie)");
  cmd_ssa->add_option("file", common.scheme_path, "Scheme file")->required();
  cmd_ssa->add_option("--x0", ssa_x0, "Initial state counts");
  cmd_ssa->add_option("--t-end", ssa_t_end, "End time");
  cmd_ssa->add_option("--replicas", ssa_replicas, "Trajectories (1 = raw path, >1 = statistics)");
  cmd_ssa->add_option("--samples", ssa_samples, "Grid points for ensemble statistics");

  std::string lg_x0 = "0", lg_policy = "strict", lg_noise = "on";
  double lg_t_end = 1.0, lg_dt = 0.01;
  std::size_t lg_replicas = 1, lg_samples = 11;
  auto* cmd_langevin = app.add_subcommand("langevin", "Integrate the Langevin approximation");
  cmd_langevin->add_option("file", common.scheme_path, "Scheme file")->required();
  cmd_langevin->add_option("--x0", lg_x0, "Initial values");
  cmd_langevin->add_option("--t-end", lg_t_end, "End time");
  cmd_langevin->add_option("--dt", lg_dt, "Step size");
  cmd_langevin->add_option("--replicas", lg_replicas, "Paths (1 = raw path, >1 = statistics)");
  cmd_langevin->add_option("--samples", lg_samples, "Grid points for ensemble statistics");
  cmd_langevin->add_option("--policy", lg_policy, "Failed noise factorization: strict or clamp")
      ->check(CLI::IsMember({"strict", "clamp"}));
  cmd_langevin->add_option("--noise", lg_noise, "on integrates the SDE, off the drift ODE")
      ->check(CLI::IsMember({"on", "off"}));

  auto* cmd_liouville =
      app.add_subcommand("liouville", "Normal-ordered operator form of the scheme");
  cmd_liouville->add_option("file", common.scheme_path, "Scheme file")->required();

  std::string verify_cap = "64";
  auto* cmd_verify = app.add_subcommand(
      "verify", "Check combinatorial vs operator generator equality (exit 3 on mismatch)");
  cmd_verify->add_option("file", common.scheme_path, "Scheme file")->required();
  cmd_verify->add_option("--cap", verify_cap, "Per-species truncation cap(s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_parse->parsed()) return run_parse(common);
    if (cmd_derive->parsed()) return run_derive(common, at);
    if (cmd_cme->parsed()) return run_cme(common, cme_cap, cme_x0, cme_t_end, cme_dt);
    if (cmd_ssa->parsed()) return run_ssa(common, ssa_x0, ssa_t_end, ssa_replicas, ssa_samples);
    if (cmd_langevin->parsed()) {
      return run_langevin(common, lg_x0, lg_t_end, lg_dt, lg_replicas, lg_samples, lg_policy,
                          lg_noise);
    }
    if (cmd_liouville->parsed()) return run_liouville(common);
    if (cmd_verify->parsed()) return run_verify(common, verify_cap);
    print_error("no subcommand selected");
    return kExitUsage;
  } catch (const UsageError& error) {
    print_error(error.what());
    return kExitUsage;
  } catch (const ParseError& error) {
    print_error(std::string("in ") + common.scheme_path + ": " + error.what());
    return kExitUsage;
  } catch (const NotPositiveSemidefinite& error) {
    std::ostringstream detail;
    detail << error.what();
    if (error.has_state()) {
      detail << " at state (";
      for (std::size_t i = 0; i < error.state().size(); ++i) {
        if (i > 0) detail << ", ";
        detail << format_double(error.state()[i]);
      }
      detail << "), t = " << format_double(error.time());
    }
    print_error(detail.str());
    return kExitDomain;
  } catch (const DomainError& error) {
    print_error(error.what());
    return kExitDomain;
  } catch (const std::exception& error) {
    print_error(error.what());
    return kExitDomain;
  }
}

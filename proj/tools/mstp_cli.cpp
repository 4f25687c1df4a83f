// Command-line front end: instance generation, the four-stage solve, Pareto
// re-layering of vector tables and topology rendering.
//
// Exit codes: 0 success, 2 infeasible/disconnected, 3 invalid input, 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mstp/instance.hpp"
#include "mstp/pareto.hpp"
#include "mstp/pipeline.hpp"
#include "mstp/render.hpp"
#include "mstp/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInfeasible = 2, kInvalidInput = 3, kIoError = 4 };

mstp::Sense parse_q_sense(const std::string& s) { return s == "min" ? mstp::Sense::Minimize : mstp::Sense::Maximize; }

struct GenOptions {
  int n = 0;
  std::uint64_t seed = 1;
  mstp::Terrain terrain;
  mstp::CostCoefficients coeffs;
  std::string out;
};

struct SolveOptions {
  std::string instance;
  int granularity = 3;
  std::size_t max_cluster = 6;
  std::string q_sense = "max";
  std::optional<double> alpha;
  std::optional<double> beta;
  std::size_t roots = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct LayersOptions {
  std::string csv;
  std::string q_sense = "max";
};

struct RenderOptions {
  std::string result;
  std::string entry;
  std::string out;
};

int run_gen(const GenOptions& o) {
  const mstp::Network net = mstp::generate_instance(o.n, o.seed, o.terrain, o.coeffs);
  mstp::save_instance(net, o.out);
  std::cout << "wrote " << net.size() << " nodes to " << o.out << "\n";
  return kOk;
}

int run_solve(const SolveOptions& o) {
  const mstp::Network instance = mstp::load_instance(o.instance);
  mstp::SchemeConfig cfg;
  cfg.granularity = o.granularity;
  cfg.max_cluster = o.max_cluster;
  cfg.senses[mstp::Criterion::Qos] = parse_q_sense(o.q_sense);
  cfg.coefficients = instance.coefficients();
  if (o.alpha) {
    cfg.coefficients.alpha = *o.alpha;
  }
  if (o.beta) {
    cfg.coefficients.beta = *o.beta;
  }
  cfg.roots = o.roots;
  cfg.seed = o.seed;

  const mstp::SchemeResult result = mstp::run_scheme(instance, cfg);

  const std::filesystem::path dir(o.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw mstp::IoError(o.out_dir, ec.message());
  }
  mstp::write_report(result, (dir / "report.csv").string());
  mstp::save_result(result, (dir / "result.json").string());
  for (const auto& e : result.entries) {
    if (e.pareto_layer == 1) {
      mstp::render_svg(result.entry_network(e), e.edges, (dir / (e.label + ".svg")).string());
    }
  }
  std::cout << mstp::report_csv(result);
  return kOk;
}

int run_layers(const LayersOptions& o) {
  const auto rows = mstp::read_vector_csv(o.csv);
  if (rows.empty()) {
    throw mstp::InvalidInput(o.csv + ": no data rows");
  }
  mstp::SenseVector senses = mstp::SenseVector::all_minimize();
  senses[mstp::Criterion::Qos] = parse_q_sense(o.q_sense);

  std::vector<mstp::ObjectiveVector> vectors;
  for (const auto& r : rows) {
    vectors.push_back(r.objectives);
  }
  const auto layers = mstp::pareto_layers(vectors, senses);

  std::size_t compared = 0;
  std::size_t mismatches = 0;
  std::cout << "approach,L,C,Delta,Q,pareto_layer\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& v = rows[i].objectives;
    std::printf("%s,%.6g,%.6g,%.6g,%.6g,%d\n", rows[i].label.c_str(), v.length, v.cost, v.altitude_gap, v.qos,
                layers[i]);
    if (rows[i].pareto_layer) {
      ++compared;
      mismatches += *rows[i].pareto_layer != layers[i] ? 1 : 0;
    }
  }
  std::fflush(stdout);
  if (compared > 0) {
    std::cerr << "stored pareto_layer column: " << (compared - mismatches) << "/" << compared << " rows agree\n";
  }
  return kOk;
}

int run_render(const RenderOptions& o) {
  const mstp::SchemeResult result = mstp::load_result(o.result);
  const mstp::SchemeEntry* entry = result.find(o.entry);
  if (entry == nullptr) {
    throw mstp::InvalidInput(o.result + ": no entry labelled \"" + o.entry + "\"");
  }
  mstp::render_svg(result.entry_network(*entry), entry->edges, o.out);
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multicriteria Steiner tree design for communication network topologies"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance on a hilly terrain");
  gen_cmd->add_option("--n", gen.n, "Number of stations")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--hills", gen.terrain.hills, "Number of Gaussian hills")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--amp", gen.terrain.amplitude, "Hill amplitude (m)");
  gen_cmd->add_option("--sigma", gen.terrain.sigma, "Hill spread (m)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--alpha", gen.coeffs.alpha, "Cost coefficient on altitude gap cubed")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--beta", gen.coeffs.beta, "Cost coefficient on QoS")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", gen.out, "Output instance file")->required();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the four-stage scheme on an instance");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--g", solve.granularity, "Weight sweep granularity")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-cluster", solve.max_cluster, "Maximum cluster size")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--q-sense", solve.q_sense, "Optimization sense of QoS")->check(CLI::IsMember({"min", "max"}));
  solve_cmd->add_option("--alpha", solve.alpha, "Override the instance's alpha")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--beta", solve.beta, "Override the instance's beta")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--roots", solve.roots, "Number of Prim roots (spanning forest start)")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed, "Seed recorded with the result");
  solve_cmd->add_option("--out-dir", solve.out_dir, "Output directory")->required();

  LayersOptions layers;
  auto* layers_cmd = app.add_subcommand("layers", "Recompute Pareto layers of an (L, C, Delta, Q) table");
  layers_cmd->add_option("--csv", layers.csv, "CSV with L, C, Delta, Q columns")->required();
  layers_cmd->add_option("--q-sense", layers.q_sense, "Optimization sense of QoS")->check(CLI::IsMember({"min", "max"}));

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Render one topology of a saved result as SVG");
  render_cmd->add_option("--result", render.result, "result.json from solve")->required();
  render_cmd->add_option("--entry", render.entry, "Entry label, e.g. MSTP-3")->required();
  render_cmd->add_option("--out", render.out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*gen_cmd) {
      return run_gen(gen);
    }
    if (*solve_cmd) {
      return run_solve(solve);
    }
    if (*layers_cmd) {
      return run_layers(layers);
    }
    return run_render(render);
  } catch (const mstp::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const mstp::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const mstp::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  }
}

// relieflab command line: generate synthetic datasets, weigh features with
// the Relief family, run the blocking design, and plot records.
//
// Exit codes: 0 success, 2 usage error, 1 runtime failure.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relieflab/dataset_io.hpp"
#include "relieflab/experiment.hpp"
#include "relieflab/generators.hpp"
#include "relieflab/plotting.hpp"
#include "relieflab/relief.hpp"
#include "relieflab/version.hpp"

namespace {

using namespace relieflab;

std::string format_weight(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  if (ec != std::errc{}) return "?";
  return std::string(buf, ptr);
}

struct GenerateArgs {
  std::string kind = "modulo-p";
  int relevant = 1;
  int irrelevant = 1;
  int instances = 100;
  int p = 3;
  int classes = 2;
  int centers = 3;
  bool p_set = false, classes_set = false, centers_set = false;
};

int cmd_generate(const GenerateArgs& args, std::uint64_t seed, const std::string& out) {
  const auto kind = kind_from_name(args.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown problem kind '" + args.kind + "'");

  if (args.p_set && *kind != GeneratorKind::ModuloP)
    throw CLI::ValidationError("--p", "only meaningful with --kind modulo-p");
  if (args.classes_set && *kind != GeneratorKind::Rdg1Continuous &&
      *kind != GeneratorKind::Rdg1Categoric && *kind != GeneratorKind::RandomRbf)
    throw CLI::ValidationError("--classes", "only meaningful with rdg-* or rbf kinds");
  if (args.centers_set && *kind != GeneratorKind::RandomRbf)
    throw CLI::ValidationError("--centers", "only meaningful with --kind rbf");

  GeneratorSpec spec;
  spec.kind = *kind;
  spec.n_relevant = args.relevant;
  spec.n_irrelevant = args.irrelevant;
  spec.n_instances = args.instances;
  spec.seed = seed;
  spec.p = args.p;
  spec.n_classes = args.classes;
  spec.centers_per_class = args.centers;

  const Dataset ds = generate(spec);
  if (ds.present_class_count() < 2)
    throw std::runtime_error("generated dataset has a single class present; "
                             "no algorithm can run on it (try more instances or another seed)");

  std::filesystem::path csv = out.empty() ? std::string(kind_name(*kind)) + ".csv" : out;
  if (csv.extension() != ".csv") csv += ".csv";
  write_dataset(ds, csv);
  std::cout << "wrote " << csv.string() << " (" << ds.instance_count() << " instances, "
            << ds.feature_count() << " features, " << ds.present_class_count()
            << " classes) and " << sidecar_path(csv).string() << '\n';
  return 0;
}

struct WeighArgs {
  std::string dataset;
  std::string algo = "relieff";
  int k = 10;
  int m = 0;
  double s = 0.0633657;
  double a = 2.0;
};

int cmd_weigh(const WeighArgs& args, std::uint64_t seed, bool json_output) {
  const auto variant = variant_from_name(args.algo);
  if (!variant)
    throw CLI::ValidationError("--algo", "unknown algorithm '" + args.algo + "'");

  const Dataset ds = read_dataset(args.dataset);

  ReliefConfig config;
  config.sample_count = args.m;
  config.neighbor_count = args.k;
  config.seed = seed;
  config.schedule.s = args.s;
  config.schedule.a = args.a;

  const WeightVector weights = run_variant(*variant, ds, config);

  bool any_relevant = false, any_irrelevant = false;
  for (int f = 0; f < ds.feature_count(); ++f)
    (ds.feature(f).relevant ? any_relevant : any_irrelevant) = true;
  const bool have_truth = any_relevant && any_irrelevant;
  const double sep = have_truth ? separability(weights, ds) : 0.0;

  if (json_output) {
    nlohmann::json features = nlohmann::json::array();
    for (int f = 0; f < ds.feature_count(); ++f)
      features.push_back({{"name", ds.feature(f).name},
                          {"weight", weights[static_cast<std::size_t>(f)]},
                          {"relevant", ds.feature(f).relevant}});
    nlohmann::json doc = {{"algorithm", args.algo},
                          {"seed", seed},
                          {"k", args.k},
                          {"weights", features}};
    if (have_truth) doc["separability"] = sep;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "# algorithm: " << args.algo << "  k: " << args.k << "  seed: " << seed
              << '\n';
    for (int f = 0; f < ds.feature_count(); ++f) {
      std::cout << ds.feature(f).name << '\t'
                << format_weight(weights[static_cast<std::size_t>(f)]);
      if (have_truth)
        std::cout << '\t' << (ds.feature(f).relevant ? "relevant" : "irrelevant");
      std::cout << '\n';
    }
    if (have_truth) std::cout << "separability\t" << format_weight(sep) << '\n';
  }
  return 0;
}

struct ExperimentArgs {
  std::vector<std::string> problems;
  int max_relevant = 50;
  int irr_multiplier = 2;
  int iterations = 10;
  int instances = 100;
  int k = 10;
  int threads = 1;
  bool smoke = false;
  bool quiet = false;
};

int cmd_experiment(const ExperimentArgs& args, std::uint64_t seed, const std::string& out) {
  DesignConfig config;
  if (args.problems.empty()) {
    config.problems = {GeneratorKind::Rdg1Continuous, GeneratorKind::RandomRbf,
                       GeneratorKind::NonMonotonic,   GeneratorKind::MajorityN,
                       GeneratorKind::ModuloP,        GeneratorKind::Rdg1Categoric};
  } else {
    for (const std::string& name : args.problems) {
      const auto kind = kind_from_name(name);
      if (!kind)
        throw CLI::ValidationError("--problems", "unknown problem kind '" + name + "'");
      config.problems.push_back(*kind);
    }
  }
  config.max_relevant = args.max_relevant;
  config.irr_multiplier = args.irr_multiplier;
  config.iterations = args.iterations;
  if (args.smoke) {
    config.max_relevant = 10;
    config.iterations = 3;
  }
  config.n_instances = args.instances;
  config.neighbor_count = args.k;
  config.base_seed = seed;
  config.threads = args.threads;

  const std::filesystem::path out_dir = out.empty() ? "." : out;
  std::filesystem::create_directories(out_dir);

  ProgressFn progress;
  if (!args.quiet) {
    progress = [](std::size_t done, std::size_t total) {
      if (done == total || done % 250 == 0)
        std::cerr << "\rcells " << done << '/' << total << std::flush;
    };
  }
  const std::vector<ExperimentRecord> records = run_design(config, progress);
  if (!args.quiet) std::cerr << '\n';

  const std::filesystem::path records_path = out_dir / "records.csv";
  write_records(records, records_path);
  write_manifest(config, out_dir / "manifest.json");
  std::cout << "wrote " << records.size() << " records to " << records_path.string()
            << '\n';
  return 0;
}

struct PlotArgs {
  std::string records;
  std::string mode = "separability";
  std::string problem;
  int width = 960;
  int height = 600;
};

int cmd_plot(const PlotArgs& args, const std::string& out) {
  PlotSpec spec;
  if (args.mode == "separability") {
    spec.mode = PlotMode::Separability;
  } else if (args.mode == "accumulated") {
    spec.mode = PlotMode::Accumulated;
  } else {
    throw CLI::ValidationError("--mode", "expected 'separability' or 'accumulated'");
  }
  spec.problem_filter = args.problem;
  spec.width = args.width;
  spec.height = args.height;

  const std::vector<ExperimentRecord> records = read_records(args.records);
  const auto written = write_plot_files(records, spec, out.empty() ? "." : out);
  for (const auto& path : written) std::cout << "wrote " << path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relieflab — Relief-family feature weighting laboratory"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out;
  bool json_output = false;
  app.add_option("--seed", seed, "base random seed")->capture_default_str();
  app.add_option("--out", out, "output path (file or directory, command-specific)");
  app.add_flag("--json", json_output, "machine-readable output where supported");

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "emit a synthetic dataset (CSV + JSON sidecar)");
  generate->fallthrough();
  generate->add_option("--kind", gen.kind,
                       "rdg-continuous|rdg-categoric|rbf|non-monotonic|majority|modulo-p")
      ->required();
  generate->add_option("--relevant", gen.relevant, "number of relevant attributes")->required();
  generate->add_option("--irrelevant", gen.irrelevant, "number of irrelevant attributes")
      ->required();
  generate->add_option("--instances", gen.instances, "instances to generate")
      ->capture_default_str();
  auto* p_opt = generate->add_option("--p", gen.p, "modulo-p modulus");
  auto* classes_opt = generate->add_option("--classes", gen.classes, "class count (rdg/rbf)");
  auto* centers_opt = generate->add_option("--centers", gen.centers, "centers per class (rbf)");

  WeighArgs weigh;
  CLI::App* weigh_cmd = app.add_subcommand("weigh", "run one algorithm on a dataset file");
  weigh_cmd->fallthrough();
  weigh_cmd->add_option("dataset", weigh.dataset, "dataset CSV path")->required();
  weigh_cmd->add_option("--algo", weigh.algo, "relief|relieved|relieff|drelieff|pdrelieff")
      ->capture_default_str();
  weigh_cmd->add_option("--k", weigh.k, "neighbor count")->capture_default_str();
  weigh_cmd->add_option("--m", weigh.m, "sample count (0 = all instances)")
      ->capture_default_str();
  weigh_cmd->add_option("--s", weigh.s, "progressive schedule steepness")
      ->capture_default_str();
  weigh_cmd->add_option("--a", weigh.a, "progressive schedule exponent")
      ->capture_default_str();

  ExperimentArgs exp;
  CLI::App* experiment = app.add_subcommand("experiment", "run the full blocking design");
  experiment->fallthrough();
  experiment->add_option("--problems", exp.problems, "problem kinds (default: all six)");
  experiment->add_option("--max-relevant", exp.max_relevant, "upper bound on relevant attributes")
      ->capture_default_str();
  experiment->add_option("--irr-multiplier", exp.irr_multiplier,
                         "irrelevant attributes per relevant one")
      ->capture_default_str();
  experiment->add_option("--iterations", exp.iterations, "dataset regenerations per cell")
      ->capture_default_str();
  experiment->add_option("--instances", exp.instances, "instances per dataset")
      ->capture_default_str();
  experiment->add_option("--k", exp.k, "neighbor count")->capture_default_str();
  experiment->add_option("--threads", exp.threads, "concurrent design cells")
      ->capture_default_str();
  experiment->add_flag("--smoke", exp.smoke, "preset: max-relevant 10, iterations 3");
  experiment->add_flag("--quiet", exp.quiet, "suppress progress output");

  PlotArgs plot;
  CLI::App* plot_cmd = app.add_subcommand("plot", "render SVG + data files from records");
  plot_cmd->fallthrough();
  plot_cmd->add_option("records", plot.records, "records CSV path")->required();
  plot_cmd->add_option("--mode", plot.mode, "separability|accumulated")->capture_default_str();
  plot_cmd->add_option("--problem", plot.problem, "restrict to one problem kind");
  plot_cmd->add_option("--width", plot.width, "image width")->capture_default_str();
  plot_cmd->add_option("--height", plot.height, "image height")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gen.p_set = p_opt->count() > 0;
  gen.classes_set = classes_opt->count() > 0;
  gen.centers_set = centers_opt->count() > 0;

  try {
    if (generate->parsed()) return cmd_generate(gen, seed, out);
    if (weigh_cmd->parsed()) return cmd_weigh(weigh, seed, json_output);
    if (experiment->parsed()) return cmd_experiment(exp, seed, out);
    if (plot_cmd->parsed()) return cmd_plot(plot, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "relieflab/generators.hpp"
#include "relieflab/relief.hpp"

namespace relieflab {

// Full blocking design: for every problem, n_relevant runs 1..max_relevant,
// n_irrelevant runs 1..irr_multiplier*n_relevant, and each combination is
// regenerated `iterations` times with fresh seeds.
struct DesignConfig {
  std::vector<GeneratorKind> problems;
  int max_relevant = 50;
  int irr_multiplier = 2;
  int iterations = 10;
  int n_instances = 100;
  int neighbor_count = 10;
  std::uint64_t base_seed = 0;
  ProgressiveSchedule schedule{};
  int threads = 1;
  // Kind-specific generator parameters.
  int modulo_p = 3;
  int n_classes = 2;
  int centers_per_class = 3;
};

struct ExperimentRecord {
  GeneratorKind problem = GeneratorKind::ModuloP;
  ReliefVariant algorithm = ReliefVariant::ReliefF;
  int n_relevant = 0;
  int n_irrelevant = 0;
  int iteration = 0;  // 1-based dataset regeneration index
  std::uint64_t seed = 0;
  // Max relevant weight minus max irrelevant weight; NaN when the generated
  // dataset was single-class and the algorithms could not run.
  double separability = 0.0;
  double walltime_ms = 0.0;
  WeightVector weights;

  bool operator==(const ExperimentRecord&) const = default;
};

// Equality with walltime_ms ignored; timings are the one non-reproducible
// column.
bool same_results(const ExperimentRecord& a, const ExperimentRecord& b);
bool same_results(std::span<const ExperimentRecord> a,
                  std::span<const ExperimentRecord> b);

// Max weight over relevant features minus max weight over irrelevant ones.
// Throws when either group is empty.
double separability(std::span<const double> weights,
                    std::span<const std::uint8_t> relevant_flags);
double separability(const WeightVector& weights, const Dataset& ds);

struct SeriesPoint {
  int x = 0;  // total attribute count
  double y = 0.0;
  bool operator==(const SeriesPoint&) const = default;
};

// Collapses multiple points sharing an x to their mean, ascending in x.
std::vector<SeriesPoint> average_by_x(std::vector<SeriesPoint> points);

// Running sum of the per-x averaged separabilities, ascending in x. Throws
// on empty input.
std::vector<SeriesPoint> accumulate_separability(std::vector<SeriesPoint> points);

// One design cell: a generated dataset shared by the three algorithms.
struct DesignCell {
  GeneratorKind problem;
  int n_relevant;
  int n_irrelevant;
  int iteration;
  std::uint64_t seed;
};

// Deterministic per-cell seed: splitmix64 chain over
// (base_seed, problem, n_relevant, n_irrelevant, iteration).
std::uint64_t cell_seed(std::uint64_t base_seed, GeneratorKind problem,
                        int n_relevant, int n_irrelevant, int iteration);

// The design loop, flattened in canonical order
// (problem, n_relevant, n_irrelevant, iteration).
std::vector<DesignCell> enumerate_cells(const DesignConfig& config);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Runs ReliefF, dReliefF and pdReliefF on every cell's dataset. Cells run
// independently (config.threads of them concurrently); the record order and
// contents do not depend on the thread count. A cell whose dataset comes out
// single-class is recorded with NaN separability and empty weights.
std::vector<ExperimentRecord> run_design(const DesignConfig& config,
                                         const ProgressFn& progress = nullptr);

// Records CSV, schema v1:
//   problem,algorithm,n_relevant,n_irrelevant,iteration,seed,separability,walltime_ms,weights
// with weights as a ';'-joined list at 9 significant digits. write_records
// with append=true adds rows to an existing file (header written once).
void write_records(std::span<const ExperimentRecord> records,
                   const std::filesystem::path& path, bool append = false);
std::vector<ExperimentRecord> read_records(const std::filesystem::path& path);

// Captures the DesignConfig plus the artifact version next to a records file.
void write_manifest(const DesignConfig& config, const std::filesystem::path& path);

}  // namespace relieflab

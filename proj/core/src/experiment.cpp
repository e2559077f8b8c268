#include "relieflab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "relieflab/rng.hpp"
#include "relieflab/version.hpp"

namespace relieflab {

namespace {

constexpr const char* kRecordsHeader =
    "problem,algorithm,n_relevant,n_irrelevant,iteration,seed,separability,"
    "walltime_ms,weights";

std::string format_double(double v, int significant_digits) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general,
                    significant_digits);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::runtime_error(std::string("records: bad ") + what + " field '" +
                             std::string(text) + "'");
  return v;
}

long long parse_int(std::string_view text, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::runtime_error(std::string("records: bad ") + what + " field '" +
                             std::string(text) + "'");
  return v;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::runtime_error(std::string("records: bad ") + what + " field '" +
                             std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

bool same_results(const ExperimentRecord& a, const ExperimentRecord& b) {
  const bool sep_equal = (std::isnan(a.separability) && std::isnan(b.separability)) ||
                         a.separability == b.separability;
  return a.problem == b.problem && a.algorithm == b.algorithm &&
         a.n_relevant == b.n_relevant && a.n_irrelevant == b.n_irrelevant &&
         a.iteration == b.iteration && a.seed == b.seed && sep_equal &&
         a.weights == b.weights;
}

bool same_results(std::span<const ExperimentRecord> a,
                  std::span<const ExperimentRecord> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_results(a[i], b[i])) return false;
  return true;
}

double separability(std::span<const double> weights,
                    std::span<const std::uint8_t> relevant_flags) {
  if (weights.size() != relevant_flags.size())
    throw std::invalid_argument("separability: |weights| != |flags|");
  bool any_relevant = false, any_irrelevant = false;
  double max_relevant = 0.0, max_irrelevant = 0.0;
  for (std::size_t f = 0; f < weights.size(); ++f) {
    if (relevant_flags[f] != 0) {
      max_relevant = any_relevant ? std::max(max_relevant, weights[f]) : weights[f];
      any_relevant = true;
    } else {
      max_irrelevant = any_irrelevant ? std::max(max_irrelevant, weights[f]) : weights[f];
      any_irrelevant = true;
    }
  }
  if (!any_relevant || !any_irrelevant)
    throw std::invalid_argument("separability: need at least one relevant and one irrelevant feature");
  return max_relevant - max_irrelevant;
}

double separability(const WeightVector& weights, const Dataset& ds) {
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(ds.feature_count()));
  for (int f = 0; f < ds.feature_count(); ++f)
    flags[static_cast<std::size_t>(f)] = ds.feature(f).relevant ? 1 : 0;
  return separability(weights, flags);
}

std::vector<SeriesPoint> average_by_x(std::vector<SeriesPoint> points) {
  std::map<int, std::pair<double, int>> sums;
  for (const SeriesPoint& point : points) {
    auto& [sum, count] = sums[point.x];
    sum += point.y;
    ++count;
  }
  std::vector<SeriesPoint> out;
  out.reserve(sums.size());
  for (const auto& [x, sum_count] : sums)
    out.push_back({x, sum_count.first / sum_count.second});
  return out;
}

std::vector<SeriesPoint> accumulate_separability(std::vector<SeriesPoint> points) {
  if (points.empty())
    throw std::invalid_argument("accumulate_separability: empty input");
  std::vector<SeriesPoint> averaged = average_by_x(std::move(points));
  double running = 0.0;
  for (SeriesPoint& point : averaged) {
    running += point.y;
    point.y = running;
  }
  return averaged;
}

std::uint64_t cell_seed(std::uint64_t base_seed, GeneratorKind problem,
                        int n_relevant, int n_irrelevant, int iteration) {
  // Fold each coordinate into a splitmix64 chain:
  //   h = mix(h ^ v) for v in (problem, n_relevant, n_irrelevant, iteration)
  std::uint64_t h = base_seed;
  const std::uint64_t coords[4] = {
      static_cast<std::uint64_t>(problem), static_cast<std::uint64_t>(n_relevant),
      static_cast<std::uint64_t>(n_irrelevant), static_cast<std::uint64_t>(iteration)};
  for (std::uint64_t v : coords) h = splitmix64_mix(h ^ v);
  return h;
}

std::vector<DesignCell> enumerate_cells(const DesignConfig& config) {
  if (config.max_relevant < 1)
    throw std::invalid_argument("design: max_relevant must be >= 1");
  if (config.iterations < 1)
    throw std::invalid_argument("design: iterations must be >= 1");
  if (config.irr_multiplier < 1)
    throw std::invalid_argument("design: irr_multiplier must be >= 1");
  if (config.problems.empty())
    throw std::invalid_argument("design: no problems selected");

  std::vector<DesignCell> cells;
  for (GeneratorKind problem : config.problems)
    for (int n_rel = 1; n_rel <= config.max_relevant; ++n_rel)
      for (int n_irr = 1; n_irr <= config.irr_multiplier * n_rel; ++n_irr)
        for (int iter = 1; iter <= config.iterations; ++iter)
          cells.push_back({problem, n_rel, n_irr, iter,
                           cell_seed(config.base_seed, problem, n_rel, n_irr, iter)});
  return cells;
}

namespace {

constexpr ReliefVariant kDesignAlgorithms[3] = {
    ReliefVariant::ReliefF, ReliefVariant::DReliefF, ReliefVariant::PdReliefF};

GeneratorSpec cell_generator_spec(const DesignConfig& config, const DesignCell& cell) {
  GeneratorSpec spec;
  spec.kind = cell.problem;
  spec.n_relevant = cell.n_relevant;
  spec.n_irrelevant = cell.n_irrelevant;
  spec.n_instances = config.n_instances;
  spec.seed = cell.seed;
  spec.p = config.modulo_p;
  spec.n_classes = config.n_classes;
  spec.centers_per_class = config.centers_per_class;
  return spec;
}

void run_cell(const DesignConfig& config, const DesignCell& cell,
              ExperimentRecord* out) {
  const Dataset ds = generate(cell_generator_spec(config, cell));

  ReliefConfig relief_config;
  relief_config.sample_count = 0;  // full pass
  relief_config.neighbor_count = config.neighbor_count;
  relief_config.schedule = config.schedule;
  // One derived seed per cell; the three algorithms share the sample order so
  // the algorithm is the only factor varying inside the cell.
  relief_config.seed = splitmix64_mix(cell.seed);

  const bool degenerate = ds.present_class_count() < 2;
  for (int a = 0; a < 3; ++a) {
    ExperimentRecord& record = out[a];
    record.problem = cell.problem;
    record.algorithm = kDesignAlgorithms[a];
    record.n_relevant = cell.n_relevant;
    record.n_irrelevant = cell.n_irrelevant;
    record.iteration = cell.iteration;
    record.seed = cell.seed;
    if (degenerate) {
      // Single-class dataset (e.g. the one-relevant-attribute corner of the
      // non-monotonic problem): the algorithms cannot run.
      record.separability = std::numeric_limits<double>::quiet_NaN();
      record.walltime_ms = 0.0;
      record.weights.clear();
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    record.weights = run_variant(kDesignAlgorithms[a], ds, relief_config);
    const auto stop = std::chrono::steady_clock::now();
    record.walltime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    record.separability = separability(record.weights, ds);
  }
}

}  // namespace

std::vector<ExperimentRecord> run_design(const DesignConfig& config,
                                         const ProgressFn& progress) {
  const std::vector<DesignCell> cells = enumerate_cells(config);
  std::vector<ExperimentRecord> records(cells.size() * 3);

  const int thread_count = std::max(1, config.threads);
  if (thread_count == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      run_cell(config, cells[i], &records[i * 3]);
      if (progress) progress(i + 1, cells.size());
    }
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        run_cell(config, cells[i], &records[i * 3]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, cells.size());
      }
    }
  };

  std::vector<std::thread> pool;
  const std::size_t spawn =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count), cells.size());
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_records(std::span<const ExperimentRecord> records,
                   const std::filesystem::path& path, bool append) {
  const bool need_header = !append || !std::filesystem::exists(path);
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("write_records: cannot open " + path.string());
  if (need_header) out << kRecordsHeader << '\n';
  for (const ExperimentRecord& record : records) {
    out << kind_name(record.problem) << ',' << variant_name(record.algorithm) << ','
        << record.n_relevant << ',' << record.n_irrelevant << ',' << record.iteration
        << ',' << record.seed << ',' << format_double(record.separability, 9) << ','
        << format_double(record.walltime_ms, 9) << ',';
    for (std::size_t i = 0; i < record.weights.size(); ++i) {
      if (i > 0) out << ';';
      out << format_double(record.weights[i], 9);
    }
    out << '\n';
  }
  if (!out.flush()) throw std::runtime_error("write_records: write failed for " + path.string());
}

std::vector<ExperimentRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_records: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("read_records: empty file " + path.string());
  if (line != kRecordsHeader)
    throw std::runtime_error("read_records: unsupported records schema in " + path.string());

  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 9)
      throw std::runtime_error("read_records: malformed row '" + line + "'");
    ExperimentRecord record;
    const auto problem = kind_from_name(fields[0]);
    if (!problem)
      throw std::runtime_error("read_records: unknown problem '" + std::string(fields[0]) + "'");
    record.problem = *problem;
    const auto algorithm = variant_from_name(fields[1]);
    if (!algorithm)
      throw std::runtime_error("read_records: unknown algorithm '" + std::string(fields[1]) + "'");
    record.algorithm = *algorithm;
    record.n_relevant = static_cast<int>(parse_int(fields[2], "n_relevant"));
    record.n_irrelevant = static_cast<int>(parse_int(fields[3], "n_irrelevant"));
    record.iteration = static_cast<int>(parse_int(fields[4], "iteration"));
    record.seed = parse_u64(fields[5], "seed");
    record.separability = parse_double(fields[6], "separability");
    record.walltime_ms = parse_double(fields[7], "walltime_ms");
    if (!fields[8].empty())
      for (std::string_view piece : split(fields[8], ';'))
        record.weights.push_back(parse_double(piece, "weights"));
    records.push_back(std::move(record));
  }
  return records;
}

void write_manifest(const DesignConfig& config, const std::filesystem::path& path) {
  nlohmann::json problems = nlohmann::json::array();
  for (GeneratorKind problem : config.problems) problems.push_back(kind_name(problem));
  const nlohmann::json manifest = {
      {"artifact", "relieflab"},
      {"version", kVersion},
      {"records_schema", kRecordsSchemaVersion},
      {"config",
       {{"problems", problems},
        {"max_relevant", config.max_relevant},
        {"irr_multiplier", config.irr_multiplier},
        {"iterations", config.iterations},
        {"n_instances", config.n_instances},
        {"neighbor_count", config.neighbor_count},
        {"base_seed", config.base_seed},
        {"schedule", {{"s", config.schedule.s}, {"a", config.schedule.a}}},
        {"modulo_p", config.modulo_p},
        {"n_classes", config.n_classes},
        {"centers_per_class", config.centers_per_class}}}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_manifest: cannot open " + path.string());
  out << manifest.dump(2) << '\n';
}

}  // namespace relieflab

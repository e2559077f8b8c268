#include "relieflab/relief.hpp"

#include <numeric>
#include <stdexcept>

#include "relieflab/neighbors.hpp"
#include "relieflab/rng.hpp"

namespace relieflab {

std::string_view variant_name(ReliefVariant variant) {
  switch (variant) {
    case ReliefVariant::Relief: return "relief";
    case ReliefVariant::Relieved: return "relieved";
    case ReliefVariant::ReliefF: return "relieff";
    case ReliefVariant::DReliefF: return "drelieff";
    case ReliefVariant::PdReliefF: return "pdrelieff";
  }
  return "?";
}

std::optional<ReliefVariant> variant_from_name(std::string_view name) {
  for (ReliefVariant v : {ReliefVariant::Relief, ReliefVariant::Relieved,
                          ReliefVariant::ReliefF, ReliefVariant::DReliefF,
                          ReliefVariant::PdReliefF})
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

std::vector<int> sample_order(int n, int m, std::uint64_t seed) {
  if (m > n) throw std::invalid_argument("sample_order: m > n");
  if (m < 0 || n < 0) throw std::invalid_argument("sample_order: negative size");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  order.resize(static_cast<std::size_t>(m));
  return order;
}

namespace {

void check_runnable(const Dataset& ds) {
  if (!ds.stats_ready()) throw std::logic_error("relief: dataset statistics not computed");
  if (ds.present_class_count() < 2)
    throw std::invalid_argument("relief: need at least 2 classes present");
  if (ds.instance_count() < 2)
    throw std::invalid_argument("relief: need at least 2 instances");
}

int effective_m(const Dataset& ds, const ReliefConfig& config) {
  const int m = config.sample_count == 0 ? ds.instance_count() : config.sample_count;
  if (m < 1 || m > ds.instance_count())
    throw std::invalid_argument("relief: sample count must be in 1..|instances|");
  return m;
}

// How the engine derives per-feature distance ponderations per iteration.
enum class Feedback {
  None,         // ReliefF: plain distance throughout
  Running,      // dReliefF: clamped running weights
  Progressive,  // pdReliefF: clamped f(running weight, completed iterations)
};

// Shared main loop for the ReliefF family. `order` lists the references to
// visit; the weight update is Fig-2 style with a fixed m*k denominator, so a
// class with fewer than k candidates simply contributes fewer terms.
//
// Iteration 1 always searches neighbors with unit ponderations. For the
// progressive schedule that is forced (f(w,0) = 1); for the running-weights
// mode the all-zero start would otherwise clamp every distance to 0.
WeightVector fig2_engine(const Dataset& ds, const std::vector<int>& order, int k,
                         Feedback feedback, const PonderationFn& ponderation) {
  check_runnable(ds);
  if (k < 1) throw std::invalid_argument("relief: k must be >= 1");

  const int nf = ds.feature_count();
  const int m = static_cast<int>(order.size());
  const double denom = static_cast<double>(m) * static_cast<double>(k);

  // Miss contributions scale by P(C)/(1 - P(class(R))). Computed from the
  // integer counts so the two-class factor is exactly 1.
  std::vector<int> class_counts(static_cast<std::size_t>(ds.class_count()), 0);
  for (int i = 0; i < ds.instance_count(); ++i)
    ++class_counts[static_cast<std::size_t>(ds.label(i))];

  WeightVector weights(static_cast<std::size_t>(nf), 0.0);
  std::vector<double> ponderations(static_cast<std::size_t>(nf), 1.0);
  std::vector<double> hit_sum(static_cast<std::size_t>(nf));
  std::vector<double> miss_sum(static_cast<std::size_t>(nf));
  std::vector<double> class_sum(static_cast<std::size_t>(nf));

  for (int it = 1; it <= m; ++it) {
    if (it > 1 && feedback != Feedback::None) {
      const double t = static_cast<double>(it - 1);
      for (int f = 0; f < nf; ++f) {
        const double w = weights[static_cast<std::size_t>(f)];
        ponderations[static_cast<std::size_t>(f)] = clamp_ponderation(
            feedback == Feedback::Running ? w : ponderation(w, t));
      }
    }

    const int ref = order[static_cast<std::size_t>(it - 1)];
    DistanceFn dist;
    if (feedback == Feedback::None) {
      dist = [&](int a, int b) { return distance_plain(ds, a, b); };
    } else {
      dist = [&](int a, int b) {
        double total = 0.0;
        for (int f = 0; f < nf; ++f)
          total += ponderations[static_cast<std::size_t>(f)] * diff(ds, f, a, b);
        return total;
      };
    }
    const NeighborSet neighbors = find_neighbors(ds, ref, k, dist);

    std::fill(hit_sum.begin(), hit_sum.end(), 0.0);
    std::fill(miss_sum.begin(), miss_sum.end(), 0.0);
    for (int h : neighbors.hits)
      for (int f = 0; f < nf; ++f)
        hit_sum[static_cast<std::size_t>(f)] += diff(ds, f, ref, h);

    const int foreign_total =
        ds.instance_count() - class_counts[static_cast<std::size_t>(ds.label(ref))];
    for (const auto& [cls, misses] : neighbors.misses_by_class) {
      std::fill(class_sum.begin(), class_sum.end(), 0.0);
      for (int miss : misses)
        for (int f = 0; f < nf; ++f)
          class_sum[static_cast<std::size_t>(f)] += diff(ds, f, ref, miss);
      const double factor = static_cast<double>(class_counts[static_cast<std::size_t>(cls)]) /
                            static_cast<double>(foreign_total);
      for (int f = 0; f < nf; ++f)
        miss_sum[static_cast<std::size_t>(f)] += factor * class_sum[static_cast<std::size_t>(f)];
    }

    for (int f = 0; f < nf; ++f)
      weights[static_cast<std::size_t>(f)] +=
          (miss_sum[static_cast<std::size_t>(f)] - hit_sum[static_cast<std::size_t>(f)]) /
          denom;
  }
  return weights;
}

}  // namespace

WeightVector relief(const Dataset& ds, const ReliefConfig& config) {
  check_runnable(ds);
  if (ds.present_class_count() != 2)
    throw std::invalid_argument("relief: the original algorithm handles exactly 2 classes");
  const int m = effective_m(ds, config);
  const std::vector<int> order = sample_order(ds.instance_count(), m, config.seed);

  const int nf = ds.feature_count();
  WeightVector weights(static_cast<std::size_t>(nf), 0.0);
  const DistanceFn dist = [&](int a, int b) { return distance_plain(ds, a, b); };

  for (int ref : order) {
    const NeighborSet neighbors = find_neighbors(ds, ref, 1, dist);
    const int hit = neighbors.hits.empty() ? -1 : neighbors.hits.front();
    int miss = -1;
    for (const auto& [cls, list] : neighbors.misses_by_class)
      if (!list.empty()) miss = list.front();

    for (int f = 0; f < nf; ++f) {
      double update = 0.0;
      if (hit >= 0) update -= diff(ds, f, ref, hit);
      if (miss >= 0) update += diff(ds, f, ref, miss);
      weights[static_cast<std::size_t>(f)] += update / static_cast<double>(m);
    }
  }
  return weights;
}

WeightVector relieved(const Dataset& ds, const ReliefConfig& config) {
  check_runnable(ds);
  std::vector<int> order(static_cast<std::size_t>(ds.instance_count()));
  std::iota(order.begin(), order.end(), 0);
  return fig2_engine(ds, order, config.neighbor_count, Feedback::None, nullptr);
}

WeightVector relieff(const Dataset& ds, const ReliefConfig& config) {
  check_runnable(ds);
  const int m = effective_m(ds, config);
  const std::vector<int> order = sample_order(ds.instance_count(), m, config.seed);
  return fig2_engine(ds, order, config.neighbor_count, Feedback::None, nullptr);
}

WeightVector drelieff(const Dataset& ds, const ReliefConfig& config) {
  check_runnable(ds);
  const int m = effective_m(ds, config);
  const std::vector<int> order = sample_order(ds.instance_count(), m, config.seed);
  return fig2_engine(ds, order, config.neighbor_count, Feedback::Running, nullptr);
}

WeightVector pdrelieff(const Dataset& ds, const ReliefConfig& config,
                       const PonderationFn& ponderation) {
  check_runnable(ds);
  const int m = effective_m(ds, config);
  const std::vector<int> order = sample_order(ds.instance_count(), m, config.seed);
  return fig2_engine(ds, order, config.neighbor_count, Feedback::Progressive, ponderation);
}

WeightVector pdrelieff(const Dataset& ds, const ReliefConfig& config) {
  ProgressiveSchedule schedule = config.schedule;
  schedule.m = effective_m(ds, config);
  return pdrelieff(ds, config,
                   [schedule](double w, double t) { return f_progress(w, t, schedule); });
}

WeightVector run_variant(ReliefVariant variant, const Dataset& ds,
                         const ReliefConfig& config) {
  switch (variant) {
    case ReliefVariant::Relief: return relief(ds, config);
    case ReliefVariant::Relieved: return relieved(ds, config);
    case ReliefVariant::ReliefF: return relieff(ds, config);
    case ReliefVariant::DReliefF: return drelieff(ds, config);
    case ReliefVariant::PdReliefF: return pdrelieff(ds, config);
  }
  throw std::logic_error("run_variant: unknown variant");
}

}  // namespace relieflab

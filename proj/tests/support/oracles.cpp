#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace relieflab::testing {

namespace {

// Own diff: overlap for categoric, range-normalized for numeric, range
// recomputed here rather than trusting the dataset's cached statistics.
double oracle_diff(const Dataset& ds, int feature, int i1, int i2) {
  const Value& a = ds.value(i1, feature);
  const Value& b = ds.value(i2, feature);
  if (a.is_missing() || b.is_missing())
    throw std::logic_error("oracle: missing values unsupported");
  if (ds.feature(feature).kind.is_categoric()) return a.cat() == b.cat() ? 0.0 : 1.0;
  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (int i = 0; i < ds.instance_count(); ++i) {
    const double v = ds.value(i, feature).num();
    if (!seen) {
      lo = hi = v;
      seen = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi <= lo) return 0.0;
  double d = std::abs(a.num() - b.num()) / (hi - lo);
  if (d > 1.0) d = 1.0;
  return d;
}

using Ranked = std::vector<std::pair<double, int>>;

Ranked rank_all(const Dataset& ds, int ref, const std::vector<double>* multipliers) {
  Ranked ranked;
  for (int i = 0; i < ds.instance_count(); ++i) {
    if (i == ref) continue;
    double d = 0.0;
    for (int f = 0; f < ds.feature_count(); ++f) {
      const double m =
          multipliers == nullptr ? 1.0 : std::max(0.0, (*multipliers)[static_cast<std::size_t>(f)]);
      d += m * oracle_diff(ds, f, ref, i);
    }
    ranked.emplace_back(d, i);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  return ranked;
}

void fig2_update(const Dataset& ds, int ref, const Ranked& ranked, int k, double m_total,
                 WeightVector& weights) {
  const int cls = ds.label(ref);

  std::vector<int> counts(static_cast<std::size_t>(ds.class_count()), 0);
  for (int i = 0; i < ds.instance_count(); ++i)
    ++counts[static_cast<std::size_t>(ds.label(i))];

  int hits_taken = 0;
  std::map<int, int> misses_taken;
  for (const auto& [dist, idx] : ranked) {
    const int c = ds.label(idx);
    if (c == cls) {
      if (hits_taken >= k) continue;
      ++hits_taken;
      for (int f = 0; f < ds.feature_count(); ++f)
        weights[static_cast<std::size_t>(f)] -=
            oracle_diff(ds, f, ref, idx) / (m_total * k);
    } else {
      int& taken = misses_taken[c];
      if (taken >= k) continue;
      ++taken;
      const double prior_c =
          static_cast<double>(counts[static_cast<std::size_t>(c)]) / ds.instance_count();
      const double prior_ref =
          static_cast<double>(counts[static_cast<std::size_t>(cls)]) / ds.instance_count();
      const double factor = prior_c / (1.0 - prior_ref);
      for (int f = 0; f < ds.feature_count(); ++f)
        weights[static_cast<std::size_t>(f)] +=
            factor * oracle_diff(ds, f, ref, idx) / (m_total * k);
    }
  }
}

}  // namespace

WeightVector fig2_oracle(const Dataset& ds, const std::vector<int>& order, int k) {
  WeightVector weights(static_cast<std::size_t>(ds.feature_count()), 0.0);
  for (int ref : order)
    fig2_update(ds, ref, rank_all(ds, ref, nullptr), k, static_cast<double>(order.size()),
                weights);
  return weights;
}

WeightVector feedback_oracle(const Dataset& ds, const std::vector<int>& order, int k,
                             FeedbackMode mode, const ProgressiveSchedule& schedule) {
  WeightVector weights(static_cast<std::size_t>(ds.feature_count()), 0.0);
  for (std::size_t it = 1; it <= order.size(); ++it) {
    std::vector<double> multipliers(static_cast<std::size_t>(ds.feature_count()), 1.0);
    if (it > 1) {
      const double t = static_cast<double>(it - 1);
      for (std::size_t f = 0; f < multipliers.size(); ++f) {
        const double w = weights[f];
        multipliers[f] =
            mode == FeedbackMode::RunningWeights ? w : f_progress(w, t, schedule);
      }
    }
    const int ref = order[it - 1];
    fig2_update(ds, ref, rank_all(ds, ref, &multipliers), k,
                static_cast<double>(order.size()), weights);
  }
  return weights;
}

NeighborOracle knn_oracle(const Dataset& ds, int ref, int k,
                          const std::vector<double>* weights) {
  const Ranked ranked = rank_all(ds, ref, weights);
  NeighborOracle out;
  std::map<int, std::vector<int>> misses;
  for (const auto& [dist, idx] : ranked) {
    if (ds.label(idx) == ds.label(ref)) {
      if (static_cast<int>(out.hits.size()) < k) out.hits.push_back(idx);
    } else {
      auto& list = misses[ds.label(idx)];
      if (static_cast<int>(list.size()) < k) list.push_back(idx);
    }
  }
  out.misses.assign(misses.begin(), misses.end());
  return out;
}

int majority_label(const std::vector<int>& relevant_bits) {
  int ones = 0;
  for (int bit : relevant_bits) ones += bit;
  const int zeros = static_cast<int>(relevant_bits.size()) - ones;
  return ones > zeros ? 1 : 0;
}

int modulo_label(const std::vector<int>& relevant_values, int p) {
  int sum = 0;
  for (int v : relevant_values) sum = (sum + v) % p;
  return sum;
}

int non_monotonic_label(double r_i) { return static_cast<int>(r_i); }

double non_monotonic_value(double r_a, double r_i, int instance_1based) {
  if (instance_1based % 2 != 0) return r_a * r_i;
  return r_a * std::sqrt(r_i);
}

}  // namespace relieflab::testing

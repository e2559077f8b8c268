#include "relieflab/myopic.hpp"

#include <stdexcept>

namespace relieflab {

AttributeStats attribute_stats(const Dataset& ds, int feature) {
  const FeatureMeta& meta = ds.feature(feature);
  if (!meta.kind.is_categoric())
    throw std::invalid_argument("attribute_stats: feature '" + meta.name +
                                "' is not categoric");
  const int domain = meta.kind.domain_size;
  const int classes = ds.class_count();

  AttributeStats stats;
  stats.value_probs.assign(static_cast<std::size_t>(domain), 0.0);
  stats.class_probs.assign(static_cast<std::size_t>(classes), 0.0);
  stats.cond_class_probs.assign(static_cast<std::size_t>(domain),
                                std::vector<double>(static_cast<std::size_t>(classes), 0.0));

  double total = 0.0;
  for (int i = 0; i < ds.instance_count(); ++i) {
    const Value& v = ds.value(i, feature);
    if (v.is_missing()) continue;
    const auto x = static_cast<std::size_t>(v.cat());
    const auto c = static_cast<std::size_t>(ds.label(i));
    stats.value_probs[x] += 1.0;
    stats.class_probs[c] += 1.0;
    stats.cond_class_probs[x][c] += 1.0;
    total += 1.0;
  }
  if (total == 0.0)
    throw std::runtime_error("attribute_stats: feature '" + meta.name +
                             "' has no non-missing value");

  for (std::size_t x = 0; x < stats.value_probs.size(); ++x) {
    const double count = stats.value_probs[x];
    if (count > 0.0)
      for (double& cell : stats.cond_class_probs[x]) cell /= count;
    stats.value_probs[x] = count / total;
  }
  for (double& p : stats.class_probs) p /= total;
  return stats;
}

double p_eqval(const AttributeStats& stats) {
  if (stats.value_probs.empty()) throw std::invalid_argument("p_eqval: empty domain");
  double sum = 0.0;
  for (double p : stats.value_probs) sum += p * p;
  return sum;
}

double gini_gain_modified(const AttributeStats& stats) {
  const double eqval = p_eqval(stats);
  double conditioned = 0.0;
  for (std::size_t x = 0; x < stats.value_probs.size(); ++x) {
    const double px = stats.value_probs[x];
    if (px == 0.0) continue;
    double purity = 0.0;
    for (double pcx : stats.cond_class_probs[x]) purity += pcx * pcx;
    conditioned += (px * px / eqval) * purity;
  }
  double prior_purity = 0.0;
  for (double pc : stats.class_probs) prior_purity += pc * pc;
  return conditioned - prior_purity;
}

double myopic_weight(const AttributeStats& stats) {
  double p_samecl = 0.0;
  for (double pc : stats.class_probs) p_samecl += pc * pc;
  if (p_samecl <= 0.0 || p_samecl >= 1.0)
    throw std::invalid_argument("myopic_weight: degenerate class distribution");
  return p_eqval(stats) * gini_gain_modified(stats) / (p_samecl * (1.0 - p_samecl));
}

}  // namespace relieflab

#include "relieflab/dataset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace relieflab {

FeatureKind FeatureKind::categoric(int domain_size) {
  if (domain_size < 2)
    throw std::invalid_argument("categoric feature needs a domain of at least 2");
  return {FeatureType::Categoric, domain_size};
}

double Value::num() const {
  if (tag_ != Tag::Num) throw std::logic_error("Value::num on a non-numeric value");
  return num_;
}

std::int32_t Value::cat() const {
  if (tag_ != Tag::Cat) throw std::logic_error("Value::cat on a non-categoric value");
  return cat_;
}

Dataset::Dataset(std::vector<FeatureMeta> features, std::vector<Value> values,
                 std::vector<int> labels, int class_count)
    : features_(std::move(features)),
      values_(std::move(values)),
      labels_(std::move(labels)),
      class_count_(class_count) {
  const std::size_t nf = features_.size();
  if (values_.size() != labels_.size() * nf)
    throw std::invalid_argument("dataset: value matrix is not |instances| x |features|");
  if (class_count_ < 1) throw std::invalid_argument("dataset: class_count must be positive");
  for (int label : labels_) {
    if (label < 0 || label >= class_count_)
      throw std::invalid_argument("dataset: class label " + std::to_string(label) +
                                  " outside 0.." + std::to_string(class_count_ - 1));
  }
  for (std::size_t f = 0; f < nf; ++f) {
    const FeatureMeta& meta = features_[f];
    if (meta.kind.is_categoric() && meta.kind.domain_size < 2)
      throw std::invalid_argument("dataset: categoric feature '" + meta.name +
                                  "' has domain < 2");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const Value& v = values_[i * nf + f];
      if (v.is_missing()) continue;
      if (meta.kind.is_numeric() != v.is_numeric())
        throw std::invalid_argument("dataset: value type mismatch in feature '" +
                                    meta.name + "'");
      if (v.is_categoric() && (v.cat() < 0 || v.cat() >= meta.kind.domain_size))
        throw std::invalid_argument("dataset: symbol index out of domain in feature '" +
                                    meta.name + "'");
    }
  }
}

const CondTable* Dataset::missing_table(int f) const {
  if (!stats_ready_) throw std::logic_error("dataset: statistics not computed");
  const auto& slot = missing_tables_[static_cast<std::size_t>(f)];
  if (!slot.has_value()) return nullptr;
  if (slot->empty())
    throw std::runtime_error("dataset: degenerate missing-value statistics for feature '" +
                             features_[static_cast<std::size_t>(f)].name + "'");
  return &*slot;
}

Dataset compute_stats(Dataset ds) {
  const int n = ds.instance_count();
  const int nf = ds.feature_count();
  if (n == 0) throw std::invalid_argument("compute_stats: empty dataset");

  ds.class_priors_.assign(static_cast<std::size_t>(ds.class_count_), 0.0);
  for (int label : ds.labels_) ds.class_priors_[static_cast<std::size_t>(label)] += 1.0;
  ds.present_class_count_ = 0;
  for (double& prior : ds.class_priors_) {
    if (prior > 0.0) ++ds.present_class_count_;
    prior /= static_cast<double>(n);
  }

  ds.missing_tables_.assign(static_cast<std::size_t>(nf), std::nullopt);
  for (int f = 0; f < nf; ++f) {
    FeatureMeta& meta = ds.features_[static_cast<std::size_t>(f)];
    if (meta.kind.is_numeric()) {
      // Range over the non-missing values only.
      bool seen = false;
      double lo = 0.0, hi = 0.0;
      for (int i = 0; i < n; ++i) {
        const Value& v = ds.value(i, f);
        if (v.is_missing()) continue;
        if (!seen) {
          lo = hi = v.num();
          seen = true;
        } else {
          lo = std::min(lo, v.num());
          hi = std::max(hi, v.num());
        }
      }
      if (!seen)
        throw std::runtime_error("compute_stats: numeric feature '" + meta.name +
                                 "' has no non-missing value");
      meta.observed_min = lo;
      meta.observed_max = hi;
    } else {
      bool any_missing = false;
      for (int i = 0; i < n && !any_missing; ++i)
        any_missing = ds.value(i, f).is_missing();
      if (any_missing) {
        try {
          ds.missing_tables_[static_cast<std::size_t>(f)] = class_conditional_table(ds, f);
        } catch (const std::runtime_error&) {
          // Degenerate statistics: remember the feature so diff_missing can
          // report it if it is ever consulted.
          ds.missing_tables_[static_cast<std::size_t>(f)] = CondTable{};
        }
      }
    }
  }

  ds.stats_ready_ = true;
  return ds;
}

CondTable class_conditional_table(const Dataset& ds, int feature) {
  const FeatureMeta& meta = ds.feature(feature);
  if (!meta.kind.is_categoric())
    throw std::invalid_argument("class_conditional_table: feature '" + meta.name +
                                "' is not categoric");
  const int domain = meta.kind.domain_size;
  CondTable table(static_cast<std::size_t>(ds.class_count()),
                  std::vector<double>(static_cast<std::size_t>(domain), 0.0));
  std::vector<double> totals(static_cast<std::size_t>(ds.class_count()), 0.0);
  std::vector<int> members(static_cast<std::size_t>(ds.class_count()), 0);
  for (int i = 0; i < ds.instance_count(); ++i) {
    ++members[static_cast<std::size_t>(ds.label(i))];
    const Value& v = ds.value(i, feature);
    if (v.is_missing()) continue;
    table[static_cast<std::size_t>(ds.label(i))][static_cast<std::size_t>(v.cat())] += 1.0;
    totals[static_cast<std::size_t>(ds.label(i))] += 1.0;
  }
  for (int c = 0; c < ds.class_count(); ++c) {
    // Only classes that actually occur need a distribution.
    if (members[static_cast<std::size_t>(c)] == 0) continue;
    if (totals[static_cast<std::size_t>(c)] == 0.0)
      throw std::runtime_error("class_conditional_table: class " + std::to_string(c) +
                               " has no non-missing value of feature '" + meta.name + "'");
    for (double& cell : table[static_cast<std::size_t>(c)])
      cell /= totals[static_cast<std::size_t>(c)];
  }
  return table;
}

Dataset make_dataset(std::vector<FeatureMeta> features,
                     const std::vector<std::vector<Value>>& rows,
                     std::vector<int> labels, int class_count) {
  std::vector<Value> flat;
  flat.reserve(rows.size() * features.size());
  for (const auto& row : rows) {
    if (row.size() != features.size())
      throw std::invalid_argument("make_dataset: row width != |features|");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (class_count < 0) {
    class_count = 0;
    for (int label : labels) class_count = std::max(class_count, label + 1);
    class_count = std::max(class_count, 1);
  }
  return compute_stats(
      Dataset(std::move(features), std::move(flat), std::move(labels), class_count));
}

}  // namespace relieflab

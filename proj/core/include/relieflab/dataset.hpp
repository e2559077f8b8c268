#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relieflab {

enum class FeatureType : std::uint8_t { Numeric, Categoric };

struct FeatureKind {
  FeatureType type = FeatureType::Numeric;
  int domain_size = 0;  // Categoric only, >= 2

  static FeatureKind numeric() { return {FeatureType::Numeric, 0}; }
  static FeatureKind categoric(int domain_size);

  bool is_numeric() const { return type == FeatureType::Numeric; }
  bool is_categoric() const { return type == FeatureType::Categoric; }
  bool operator==(const FeatureKind&) const = default;
};

// A single cell: numeric, categoric (symbol index) or missing.
class Value {
 public:
  Value() = default;
  static Value num(double v) {
    Value out;
    out.tag_ = Tag::Num;
    out.num_ = v;
    return out;
  }
  static Value cat(std::int32_t index) {
    Value out;
    out.tag_ = Tag::Cat;
    out.cat_ = index;
    return out;
  }
  static Value missing() { return Value{}; }

  bool is_missing() const { return tag_ == Tag::Missing; }
  bool is_numeric() const { return tag_ == Tag::Num; }
  bool is_categoric() const { return tag_ == Tag::Cat; }

  double num() const;
  std::int32_t cat() const;

  bool operator==(const Value&) const = default;

 private:
  enum class Tag : std::uint8_t { Missing, Num, Cat };
  double num_ = 0.0;
  std::int32_t cat_ = 0;
  Tag tag_ = Tag::Missing;
};

struct FeatureMeta {
  std::string name;
  FeatureKind kind;
  bool relevant = false;  // ground-truth marker set by generators
  // Observed range of a numeric feature, filled by compute_stats.
  double observed_min = 0.0;
  double observed_max = 0.0;

  bool operator==(const FeatureMeta&) const = default;
};

// P(value | class) for one categoric feature, indexed [class][value].
using CondTable = std::vector<std::vector<double>>;

// Immutable tabular data shared by all algorithms, generators and the
// harness. Construct, run compute_stats once, then treat as read-only;
// everything derived (ranges, priors, missing-value tables) is stored here
// so concurrent readers never synchronize.
class Dataset {
 public:
  Dataset() = default;
  // values is row-major, |labels| x |features|. class_count covers every
  // label (labels are dense non-negative integers 0..class_count-1), though
  // not every class has to be present.
  Dataset(std::vector<FeatureMeta> features, std::vector<Value> values,
          std::vector<int> labels, int class_count);

  int instance_count() const { return static_cast<int>(labels_.size()); }
  int feature_count() const { return static_cast<int>(features_.size()); }
  int class_count() const { return class_count_; }

  const std::vector<FeatureMeta>& features() const { return features_; }
  const FeatureMeta& feature(int f) const { return features_[static_cast<std::size_t>(f)]; }
  const Value& value(int instance, int f) const {
    return values_[static_cast<std::size_t>(instance) * features_.size() +
                   static_cast<std::size_t>(f)];
  }
  int label(int instance) const { return labels_[static_cast<std::size_t>(instance)]; }
  const std::vector<int>& labels() const { return labels_; }

  bool stats_ready() const { return stats_ready_; }
  // Empirical P(C), indexed by class label. Empty before compute_stats.
  const std::vector<double>& class_priors() const { return class_priors_; }
  int present_class_count() const { return present_class_count_; }

  // Conditional table for a categoric feature that carries missing values;
  // nullptr when the feature has none. Throws if the statistics were
  // degenerate (some class had no non-missing value of the feature).
  const CondTable* missing_table(int f) const;

  friend Dataset compute_stats(Dataset ds);

 private:
  std::vector<FeatureMeta> features_;
  std::vector<Value> values_;
  std::vector<int> labels_;
  int class_count_ = 0;
  bool stats_ready_ = false;
  std::vector<double> class_priors_;
  int present_class_count_ = 0;
  // One slot per feature; engaged only for categoric features with missing
  // values. An engaged-but-empty table marks degenerate statistics.
  std::vector<std::optional<CondTable>> missing_tables_;
};

// Fills observed ranges, class priors and missing-value tables. Throws on an
// empty dataset or a numeric feature whose values are all missing.
Dataset compute_stats(Dataset ds);

// Maximum-likelihood P(value | class) over the non-missing values of a
// categoric feature. Throws when some class has no non-missing value.
CondTable class_conditional_table(const Dataset& ds, int feature);

// Convenience for building small datasets (tests, CSV loader): rows of cells.
Dataset make_dataset(std::vector<FeatureMeta> features,
                     const std::vector<std::vector<Value>>& rows,
                     std::vector<int> labels, int class_count = -1);

}  // namespace relieflab

#include "relieflab/diff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relieflab {

double diff_overlap(const Value& v1, const Value& v2) {
  if (v1.is_missing() || v2.is_missing())
    throw std::invalid_argument("diff_overlap: missing value (route to diff_missing)");
  if (!v1.is_categoric() || !v2.is_categoric())
    throw std::invalid_argument("diff_overlap: numeric value");
  return v1.cat() == v2.cat() ? 0.0 : 1.0;
}

double diff_numeric(const FeatureMeta& meta, const Value& v1, const Value& v2) {
  if (v1.is_missing() || v2.is_missing())
    throw std::invalid_argument("diff_numeric: missing value");
  const double range = meta.observed_max - meta.observed_min;
  if (range <= 0.0) return 0.0;  // constant feature carries no information
  const double d = std::abs(v1.num() - v2.num()) / range;
  return std::clamp(d, 0.0, 1.0);
}

double diff_missing(const Dataset& ds, int feature, int i1, int i2) {
  const FeatureMeta& meta = ds.feature(feature);
  const Value& v1 = ds.value(i1, feature);
  const Value& v2 = ds.value(i2, feature);
  if (!v1.is_missing() && !v2.is_missing())
    throw std::invalid_argument("diff_missing: neither value is missing");
  if (meta.kind.is_numeric())
    throw std::runtime_error("diff_missing: numeric feature '" + meta.name +
                             "' with missing value is unsupported");
  const CondTable* table = ds.missing_table(feature);
  if (table == nullptr)
    throw std::logic_error("diff_missing: no missing-value table for feature '" +
                           meta.name + "'");

  double d;
  if (v1.is_missing() && v2.is_missing()) {
    const auto& p1 = (*table)[static_cast<std::size_t>(ds.label(i1))];
    const auto& p2 = (*table)[static_cast<std::size_t>(ds.label(i2))];
    double agree = 0.0;
    for (std::size_t a = 0; a < p1.size(); ++a) agree += p1[a] * p2[a];
    d = 1.0 - agree;
  } else {
    // Condition on the class of the instance whose value is missing.
    const int missing_instance = v1.is_missing() ? i1 : i2;
    const Value& known = v1.is_missing() ? v2 : v1;
    const auto& probs = (*table)[static_cast<std::size_t>(ds.label(missing_instance))];
    d = 1.0 - probs[static_cast<std::size_t>(known.cat())];
  }
  return std::clamp(d, 0.0, 1.0);
}

double diff(const Dataset& ds, int feature, int i1, int i2) {
  const Value& v1 = ds.value(i1, feature);
  const Value& v2 = ds.value(i2, feature);
  if (v1.is_missing() || v2.is_missing()) return diff_missing(ds, feature, i1, i2);
  const FeatureMeta& meta = ds.feature(feature);
  if (meta.kind.is_numeric()) return diff_numeric(meta, v1, v2);
  return diff_overlap(v1, v2);
}

double distance_plain(const Dataset& ds, int i1, int i2) {
  double total = 0.0;
  for (int f = 0; f < ds.feature_count(); ++f) total += diff(ds, f, i1, i2);
  return total;
}

double distance_weighted(const Dataset& ds, int i1, int i2,
                         std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != ds.feature_count())
    throw std::invalid_argument("distance_weighted: |weights| != |features|");
  double total = 0.0;
  for (int f = 0; f < ds.feature_count(); ++f)
    total += clamp_ponderation(weights[static_cast<std::size_t>(f)]) * diff(ds, f, i1, i2);
  return total;
}

double c_progress(double t, const ProgressiveSchedule& sched) {
  return std::pow(t / static_cast<double>(sched.m), sched.a);
}

double f_progress(double w, double t, const ProgressiveSchedule& sched) {
  const double c = c_progress(t, sched);
  return (w - 1.0) * c / (c + sched.s) + 1.0;
}

double distance_progressive(const Dataset& ds, int i1, int i2,
                            std::span<const double> weights, double t,
                            const ProgressiveSchedule& sched) {
  if (static_cast<int>(weights.size()) != ds.feature_count())
    throw std::invalid_argument("distance_progressive: |weights| != |features|");
  double total = 0.0;
  for (int f = 0; f < ds.feature_count(); ++f) {
    const double pond =
        clamp_ponderation(f_progress(weights[static_cast<std::size_t>(f)], t, sched));
    total += pond * diff(ds, f, i1, i2);
  }
  return total;
}

namespace {

// Composite Simpson on [a, b] with an odd point count.
double simpson(const std::function<double(double)>& fn, double a, double b,
               int points) {
  if (points % 2 == 0) ++points;
  const int intervals = points - 1;
  const double h = (b - a) / intervals;
  double sum = fn(a) + fn(b);
  for (int i = 1; i < intervals; ++i) sum += fn(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

constexpr int kQuadraturePoints = 10001;

}  // namespace

double area_ratio(const std::function<double(double)>& ponderation_of_t,
                  double reference_w, int m) {
  if (m < 2) throw std::invalid_argument("area_ratio: m < 2 degenerates the integral");
  const double a = 1.0;
  const double b = static_cast<double>(m);
  const double numerator = simpson(
      [&](double t) { return ponderation_of_t(t) - reference_w; }, a, b, kQuadraturePoints);
  const double denominator =
      simpson([&](double) { return 1.0 - reference_w; }, a, b, kQuadraturePoints);
  return numerator / denominator;
}

double area_ratio(const ProgressiveSchedule& sched, double reference_w) {
  return area_ratio(
      [&](double t) { return f_progress(reference_w, t, sched); }, reference_w, sched.m);
}

}  // namespace relieflab

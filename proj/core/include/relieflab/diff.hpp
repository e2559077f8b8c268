#pragma once

#include <functional>
#include <span>

#include "relieflab/dataset.hpp"

namespace relieflab {

// Parameters of the progressive ponderation f and its iteration map c.
struct ProgressiveSchedule {
  double s = 0.0633657;  // steepness control, > 0
  double a = 2.0;        // exponent of c, > 0
  int m = 1;             // total iterations, >= 1
};

// Multiplier applied to a feature diff inside a weighted distance. Negative
// weights would make distance shrink as values differ, so they clamp to 0.
inline double clamp_ponderation(double w) { return w > 0.0 ? w : 0.0; }

// Overlap metric for two categoric values: 0 if equal, 1 otherwise.
double diff_overlap(const Value& v1, const Value& v2);

// Range-normalized absolute difference for two numeric values, clamped to
// [0,1]. A degenerate observed range (max == min) yields 0.
double diff_numeric(const FeatureMeta& meta, const Value& v1, const Value& v2);

// Difference involving missing categoric values:
//   one missing (say I1's):  1 - P(value(A,I2) | class(I1))
//   both missing:            1 - sum_a P(a|class(I1)) * P(a|class(I2))
// Numeric features with missing values are unsupported.
double diff_missing(const Dataset& ds, int feature, int i1, int i2);

// Per-feature difference in [0,1]; dispatches to the three cases above.
double diff(const Dataset& ds, int feature, int i1, int i2);

// Sum of diffs over all features; in [0, |features|].
double distance_plain(const Dataset& ds, int i1, int i2);

// Sum of clamped-weight-scaled diffs.
double distance_weighted(const Dataset& ds, int i1, int i2,
                         std::span<const double> weights);

// Iteration map c(t) = (t/m)^a; c(0) = 0, c(m) = 1.
double c_progress(double t, const ProgressiveSchedule& sched);

// Progressive ponderation f(w,t) = ((w-1)*c(t))/(c(t)+s) + 1. f(w,0) = 1 for
// every w; as t grows the value moves from 1 toward w.
double f_progress(double w, double t, const ProgressiveSchedule& sched);

// Weighted distance with ponderations f(w_i, t) instead of raw weights.
double distance_progressive(const Dataset& ds, int i1, int i2,
                            std::span<const double> weights, double t,
                            const ProgressiveSchedule& sched);

// Fraction of the area between the constant-1 and constant-w ponderations
// that a ponderation curve leaves below itself over t in [1, m]:
//
//   (int_1^m f dt - int_1^m w dt) / (int_1^m 1 dt - int_1^m w dt)
//
// Computed by composite Simpson quadrature (>= 10001 points). The value is
// independent of the reference w for the schedule's f (the w dependence
// cancels algebraically). Throws when m < 2.
double area_ratio(const ProgressiveSchedule& sched, double reference_w = 0.5);

// Same ratio for an arbitrary ponderation-of-iteration curve. Exposed so the
// two degenerate curves (constant 1, constant w) can be checked directly.
double area_ratio(const std::function<double(double)>& ponderation_of_t,
                  double reference_w, int m);

}  // namespace relieflab

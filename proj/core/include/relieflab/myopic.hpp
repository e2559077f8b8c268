#pragma once

#include <vector>

#include "relieflab/dataset.hpp"

namespace relieflab {

// Empirical distributions of one categoric attribute: P(x), P(c) and the
// conditional P(c|x) table.
struct AttributeStats {
  std::vector<double> value_probs;                  // P(x), one per value
  std::vector<double> class_probs;                  // P(c), one per class
  std::vector<std::vector<double>> cond_class_probs;  // [x][c] = P(c|x)
};

// Maximum-likelihood stats over the non-missing values of a categoric
// feature.
AttributeStats attribute_stats(const Dataset& ds, int feature);

// Collision probability of two attribute values drawn with replacement:
// sum_x P(x)^2.
double p_eqval(const AttributeStats& stats);

// Modified Gini-index gain:
//   sum_x [ P(x)^2 / sum_x P(x)^2 * sum_c P(c|x)^2 ] - sum_c P(c)^2
// Zero for an attribute independent of the class.
double gini_gain_modified(const AttributeStats& stats);

// Closed-form weight of the no-locality limit:
//   P_eqval * GG'(X) / (P_samecl * (1 - P_samecl)),  P_samecl = sum_c P(c)^2.
// Matches the neighbor-free probability difference the sampled estimate
// converges to. Throws when P_samecl is 0 or 1 (single-class input).
double myopic_weight(const AttributeStats& stats);

}  // namespace relieflab

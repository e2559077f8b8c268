#pragma once

// Independent brute-force re-implementations used to check the library.
// Everything here recomputes from first principles (own diff, own sorting,
// own probability math) and deliberately shares no code with the production
// paths it verifies.

#include <cstdint>
#include <vector>

#include "relieflab/dataset.hpp"
#include "relieflab/diff.hpp"
#include "relieflab/relief.hpp"

namespace relieflab::testing {

// Direct transcription of the ReliefF pseudocode: per reference, rank every
// other instance by (distance, index) with a global stable sort, take the
// first k of each class, apply the hit/miss update with prior factors from
// scratch.
WeightVector fig2_oracle(const Dataset& ds, const std::vector<int>& order, int k);

enum class FeedbackMode { RunningWeights, Schedule };

// Same transcription for the feedback variants: neighbor distances at
// iteration t (1-based) multiply each feature diff by max(0, g(W_{t-1}, t-1)),
// with g = identity for running weights or g = f_progress for the schedule.
// Iteration 1 uses multiplier 1 everywhere.
WeightVector feedback_oracle(const Dataset& ds, const std::vector<int>& order, int k,
                             FeedbackMode mode, const ProgressiveSchedule& schedule);

// Full-sort k-nearest-neighbor oracle: hits and per-class misses of `ref`.
struct NeighborOracle {
  std::vector<int> hits;
  std::vector<std::pair<int, std::vector<int>>> misses;  // (class, indices)
};
NeighborOracle knn_oracle(const Dataset& ds, int ref, int k,
                          const std::vector<double>* weights);

// Labeling rules recomputed from scratch.
int majority_label(const std::vector<int>& relevant_bits);
int modulo_label(const std::vector<int>& relevant_values, int p);
int non_monotonic_label(double r_i);
double non_monotonic_value(double r_a, double r_i, int instance_1based);

}  // namespace relieflab::testing

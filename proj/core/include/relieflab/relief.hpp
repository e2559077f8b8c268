#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "relieflab/dataset.hpp"
#include "relieflab/diff.hpp"

namespace relieflab {

// Per-feature relevance estimates W[A]. Every completed run keeps each
// weight inside [-1, 1].
using WeightVector = std::vector<double>;

enum class ReliefVariant { Relief, Relieved, ReliefF, DReliefF, PdReliefF };

std::string_view variant_name(ReliefVariant variant);
std::optional<ReliefVariant> variant_from_name(std::string_view name);

struct ReliefConfig {
  int sample_count = 0;     // m; 0 means all instances
  int neighbor_count = 10;  // k
  std::uint64_t seed = 0;
  // Progressive schedule (PdReliefF only); m is set to the run's sample
  // count when the run starts.
  ProgressiveSchedule schedule{};
};

// Ponderation of a running weight at a completed-iteration count t.
using PonderationFn = std::function<double(double weight, double t)>;

// First m entries of a seeded Fisher-Yates permutation of 0..n-1. Identical
// across runs and platforms for a given seed (xoshiro256** underneath).
std::vector<int> sample_order(int n, int m, std::uint64_t seed);

// Original two-class algorithm: m sampled instances, single nearest hit and
// miss, update (diff(A,R,M) - diff(A,R,H)) / m. Throws unless exactly two
// classes are present.
WeightVector relief(const Dataset& ds, const ReliefConfig& config);

// Deterministic variant: the ReliefF update applied to every instance in
// index order. Ignores sample_count and seed.
WeightVector relieved(const Dataset& ds, const ReliefConfig& config);

// k nearest hits plus k nearest misses per foreign class, miss contributions
// scaled by P(C)/(1 - P(class(R))), everything divided by m*k.
WeightVector relieff(const Dataset& ds, const ReliefConfig& config);

// ReliefF whose neighbor search ponderates feature diffs by the running
// weight estimates (clamped at 0). Iteration 1 uses plain distance: the
// all-zero initial weights would otherwise nullify every distance.
WeightVector drelieff(const Dataset& ds, const ReliefConfig& config);

// dReliefF with ponderations blended from 1 toward the running weights by
// f(w, t): iteration t searches neighbors with f(W[A] after t-1, t-1).
WeightVector pdrelieff(const Dataset& ds, const ReliefConfig& config);

// pdReliefF with a caller-supplied ponderation in place of the schedule's f.
// This is how the reductions are pinned: f == 1 reproduces ReliefF and
// f == w reproduces dReliefF, bit for bit on the same seed.
WeightVector pdrelieff(const Dataset& ds, const ReliefConfig& config,
                       const PonderationFn& ponderation);

WeightVector run_variant(ReliefVariant variant, const Dataset& ds,
                         const ReliefConfig& config);

}  // namespace relieflab

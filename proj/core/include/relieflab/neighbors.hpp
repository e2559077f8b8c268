#pragma once

#include <functional>
#include <map>
#include <vector>

#include "relieflab/dataset.hpp"

namespace relieflab {

// Nearest same-class and per-foreign-class instances of a reference, nearest
// first. The reference itself never appears. Lists are ordered by
// (distance, instance index) ascending; exact distance ties break toward the
// lower index so runs are reproducible.
struct NeighborSet {
  std::vector<int> hits;
  std::map<int, std::vector<int>> misses_by_class;
};

using DistanceFn = std::function<double(int, int)>;

// Exhaustive scan over all instances under the supplied distance. Returns up
// to k hits and up to k misses per foreign class; fewer when a class has
// fewer members. An empty hits list (reference is its class's only member)
// is a valid result, not an error.
NeighborSet find_neighbors(const Dataset& ds, int ref, int k,
                           const DistanceFn& dist);

}  // namespace relieflab

#include "relieflab/neighbors.hpp"

#include <algorithm>
#include <stdexcept>

namespace relieflab {

NeighborSet find_neighbors(const Dataset& ds, int ref, int k,
                           const DistanceFn& dist) {
  if (k < 1) throw std::invalid_argument("find_neighbors: k must be >= 1");
  const int n = ds.instance_count();
  if (n < 2) throw std::invalid_argument("find_neighbors: need at least 2 instances");
  if (ref < 0 || ref >= n) throw std::invalid_argument("find_neighbors: bad reference index");

  const int ref_class = ds.label(ref);
  std::vector<std::vector<std::pair<double, int>>> by_class(
      static_cast<std::size_t>(ds.class_count()));
  for (int i = 0; i < n; ++i) {
    if (i == ref) continue;
    by_class[static_cast<std::size_t>(ds.label(i))].emplace_back(dist(ref, i), i);
  }

  auto take_nearest = [k](std::vector<std::pair<double, int>>& bucket) {
    // (distance, index) ascending; exact ties fall to the lower index.
    std::sort(bucket.begin(), bucket.end());
    std::vector<int> out;
    out.reserve(std::min<std::size_t>(bucket.size(), static_cast<std::size_t>(k)));
    for (std::size_t j = 0; j < bucket.size() && j < static_cast<std::size_t>(k); ++j)
      out.push_back(bucket[j].second);
    return out;
  };

  NeighborSet result;
  for (int c = 0; c < ds.class_count(); ++c) {
    auto& bucket = by_class[static_cast<std::size_t>(c)];
    if (c == ref_class) {
      result.hits = take_nearest(bucket);
    } else if (!bucket.empty()) {
      result.misses_by_class[c] = take_nearest(bucket);
    }
  }
  return result;
}

}  // namespace relieflab

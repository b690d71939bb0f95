#ifndef HARVEST_SRC_SUBSET_WALK_HPP_
#define HARVEST_SRC_SUBSET_WALK_HPP_

// Depth-first walk over all 2^n coalitions carrying per-coalition aggregates.
//
// Players are added in increasing roster order, so every aggregate is folded
// in exactly the order a direct loop over the members would use. Values
// computed here are therefore bit-identical to the single-coalition routines
// and to the same walk over any subgame.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace harvest::internal {

template <typename State, typename Extend, typename Visit>
void WalkFrom(int index, int n, std::uint64_t mask, const State& state,
              const Extend& extend, const Visit& visit) {
  if (index == n) {
    visit(mask, state);
    return;
  }
  WalkFrom(index + 1, n, mask, state, extend, visit);
  WalkFrom(index + 1, n, mask | (std::uint64_t{1} << index),
           extend(state, index), extend, visit);
}

// Calls visit(mask, state) once for every mask in [0, 2^n). `extend(state, i)`
// returns the aggregate with player i added.
template <typename State, typename Extend, typename Visit>
void WalkSubsets(int n, const State& empty, const Extend& extend,
                 const Visit& visit) {
  WalkFrom(0, n, 0, empty, extend, visit);
}

// Same walk split over `workers` threads. The first `split` players are fixed
// per task, so each thread owns a disjoint set of masks. `visit` must only
// write state owned by its mask.
template <typename State, typename Extend, typename Visit>
void WalkSubsetsParallel(int n, int workers, const State& empty,
                         const Extend& extend, const Visit& visit) {
  if (workers <= 1 || n < 8) {
    WalkSubsets(n, empty, extend, visit);
    return;
  }
  const int split = std::min(n, 6);
  const std::uint64_t prefixes = std::uint64_t{1} << split;
  auto run = [&](int worker) {
    for (std::uint64_t prefix = worker; prefix < prefixes;
         prefix += static_cast<std::uint64_t>(workers)) {
      State state = empty;
      for (int i = 0; i < split; ++i) {
        if ((prefix >> i) & 1U) state = extend(state, i);
      }
      WalkFrom(split, n, prefix, state, extend, visit);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  for (auto& t : threads) t.join();
}

}  // namespace harvest::internal

#endif  // HARVEST_SRC_SUBSET_WALK_HPP_

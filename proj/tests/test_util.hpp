#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "artin/coxeter.hpp"

namespace testutil {

// Breadth-first enumeration of the whole group by right multiplication.
// Returns window -> distance from the identity, the word-length oracle.
inline std::map<std::vector<int>, int> bfs_lengths(artin::CoxType t) {
  std::map<std::vector<int>, int> dist;
  std::vector<artin::CoxElement> frontier{artin::CoxElement::identity(t)};
  dist[frontier[0].window()] = 0;
  int d = 0;
  while (!frontier.empty()) {
    std::vector<artin::CoxElement> next;
    for (const auto& w : frontier) {
      for (int s = 1; s <= t.rank; ++s) {
        artin::CoxElement u = w;
        u.right_mul_generator(s);
        if (dist.emplace(u.window(), d + 1).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
    ++d;
  }
  return dist;
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline artin::CoxElement random_element(artin::CoxType t, int steps,
                                        std::mt19937_64& rng) {
  artin::CoxElement w = artin::CoxElement::identity(t);
  for (int i = 0; i < steps; ++i) {
    w.right_mul_generator(rand_int(rng, 1, t.rank));
  }
  return w;
}

}  // namespace testutil

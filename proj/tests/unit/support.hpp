#pragma once

#include "monoseq/duality.hpp"
#include "monoseq/generators.hpp"
#include "monoseq/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace monoseq::test {

inline Rat random_rat(std::mt19937_64& rng, long range = 20, long max_den = 9) {
  std::uniform_int_distribution<long> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline PathPerm random_path(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return PathPerm(std::move(v));
}

inline Direction random_direction(std::mt19937_64& rng) {
  for (;;) {
    Rat dx = random_rat(rng, 5, 4);
    Rat dy = random_rat(rng, 5, 4);
    if (!dx.is_zero() || !dy.is_zero()) return {dx, dy};
  }
}

inline std::vector<int> labels(const PathPerm& p) { return {p.order().begin(), p.order().end()}; }

}  // namespace monoseq::test

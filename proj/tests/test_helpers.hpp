#pragma once

#include <vector>

#include "ringunits/fingroup.hpp"

namespace ringunits::testing {

inline GroupPtr s3() { return from_generators(3, {{2, 3, 1}, {2, 1, 3}}); }

inline GroupPtr c_n(int n) {
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
  return from_generators(n, {cycle});
}

// quaternion group Q8 as 8-point regular-ish permutations
inline GroupPtr q8() {
  // i = (1 2 3 4)(5 8 7 6), j = (1 5 3 7)(2 6 4 8)
  return from_generators(
      8, {{2, 3, 4, 1, 8, 5, 6, 7}, {5, 6, 7, 8, 3, 4, 1, 2}});
}

inline GroupPtr v4() {
  return from_generators(4, {{2, 1, 4, 3}, {3, 4, 1, 2}});
}

// SmallGroup(16,6) = <a,b | a^8, b^2, bab = a^5>, acting on Z/8:
// a: x -> x+1, b: x -> 5x.
inline GroupPtr g16_6() {
  return from_generators(8, {{2, 3, 4, 5, 6, 7, 8, 1}, {1, 6, 3, 8, 5, 2, 7, 4}},
                         2048, {"a", "b"});
}

// SL(2,5) acting on the 24 nonzero vectors of F_5^2,
// generated by S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
inline GroupPtr sl25() {
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      if (x || y) pts.emplace_back(x, y);
  auto idx = [&](int x, int y) {
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == std::make_pair(x, y)) return (int)i + 1;
    return 0;
  };
  std::vector<int> s(24), t(24);
  for (size_t i = 0; i < pts.size(); ++i) {
    auto [x, y] = pts[i];
    s[i] = idx((5 - y) % 5, x);        // (x,y) -> (-y, x)
    t[i] = idx((x + y) % 5, y);        // (x,y) -> (x+y, y)
  }
  return from_generators(24, {s, t}, 2048, {"s", "t"});
}

// dihedral group of order 2n
inline GroupPtr dihedral(int n) {
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n + 1;
    s[i] = (n - i) % n + 1;
  }
  return from_generators(n, {r, s});
}

}  // namespace ringunits::testing

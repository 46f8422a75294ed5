// Test-only oracles, kept independent of the implementation paths they check.
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat::oracle {

inline const std::int64_t kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};

// Crossing by exhaustive search for an ordered quadruple (b1, b2, g1, g2).
inline bool crossingBruteForce(const Partition& p, int blk1, int blk2) {
  const int n = p.totalPoints();
  auto ordered = [&](int a, int b, int c, int d) {
    // Strictly increasing after rotating so that a comes first.
    int rb = (b - a + n) % n, rc = (c - a + n) % n, rd = (d - a + n) % n;
    return 0 < rb && rb < rc && rc < rd;
  };
  std::vector<int> pos1, pos2;
  for (int pos = 0; pos < n; ++pos) {
    int b = p.blockIndexOf(p.pointAt(pos));
    if (b == blk1) pos1.push_back(pos);
    if (b == blk2) pos2.push_back(pos);
  }
  for (int b1 : pos1)
    for (int b2 : pos2)
      for (int g1 : pos1)
        for (int g2 : pos2)
          if (ordered(b1, b2, g1, g2)) return true;
  return false;
}

// Color distance recomputed from scratch by walking the cyclic order.
inline int deltaBruteForce(const Partition& p, const PointRef& a, const PointRef& b) {
  const int n = p.totalPoints();
  int s = 0;
  int pos = p.cyclicPos(a);
  int stop = p.cyclicPos(b);
  do {
    pos = (pos + 1) % n;
    s += pointSign(p, p.pointAt(pos));
  } while (pos != stop);
  return s + (pointSign(p, a) - pointSign(p, b)) / 2;
}

// All partitions with every split of at most `maxPoints` points.
inline void forAllPartitionsUpTo(int maxPoints, const std::function<void(const Partition&)>& f) {
  for (int total = 0; total <= maxPoints; ++total)
    for (int upper = 0; upper <= total; ++upper)
      enumeratePartitions(upper, total - upper,
                          [&](const Partition& p) {
                            f(p);
                            return true;
                          },
                          EnumerationOptions{maxPoints});
}

// Every consecutive set of p, as point lists (including empty and full).
inline std::vector<std::vector<PointRef>> allConsecutiveSets(const Partition& p) {
  const int n = p.totalPoints();
  std::vector<std::vector<PointRef>> out;
  out.push_back({});
  if (n == 0) return out;
  for (int start = 0; start < n; ++start)
    for (int len = 1; len < n; ++len) {
      std::vector<PointRef> arc;
      for (int i = 0; i < len; ++i) arc.push_back(p.pointAt((start + i) % n));
      out.push_back(std::move(arc));
    }
  std::vector<PointRef> all;
  for (int i = 0; i < n; ++i) all.push_back(p.pointAt(i));
  out.push_back(std::move(all));
  return out;
}

}  // namespace pcat::oracle

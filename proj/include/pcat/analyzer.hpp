/** @file analyzer.hpp
 *  @brief The six-component analysis of a finite set of partitions.
 *
 *  For a set of partitions this computes, as plain integer sets:
 *    F      block sizes
 *    V      block color sums
 *    Sigma  total color sums
 *    L      color distances between subsequent legs of one block with the
 *           same normalized color
 *    K      the same with different normalized colors
 *    X      color distances between legs of crossing blocks
 *  plus the refinements K[c1][c2] and X[c1][c2] keyed by the normalized
 *  colors of the two legs.  L = K[w][w] u K[b][b], K = K[w][b] u K[b][w]
 *  and X is the union of all four X[c1][c2].
 */
#pragma once

#include <array>
#include <set>
#include <span>
#include <string>

#include "pcat/partition.hpp"

namespace pcat {

using IntData = std::set<int>;

/// Refined table indexed by normalized colors [first leg][second leg].
using ColorTable = std::array<std::array<IntData, 2>, 2>;

inline int colorIdx(Color c) { return c == Color::white ? 0 : 1; }

struct Analysis {
  IntData f, v, sigma, l, k, x;
  ColorTable kcc{};
  ColorTable xcc{};

  friend bool operator==(const Analysis&, const Analysis&) = default;

  /// Stable key/value report, one sorted list per line.
  std::string report(bool refined = false) const;
};

Analysis analyze(std::span<const Partition> parts);
Analysis analyze(const std::vector<Partition>& parts);
void analyzeInto(const Partition& p, Analysis& out);

IntData kRefined(std::span<const Partition> parts, Color c1, Color c2);
IntData xRefined(std::span<const Partition> parts, Color c1, Color c2);

/// Members whose blocks all have size <= 2.
std::vector<Partition> restrictPairsOnly(std::span<const Partition> parts);

/// True iff all blocks have size <= 2, every block is neutral and every
/// ordered pair of legs of a block has color distance zero.
bool inSZero(const Partition& p);

/// Members of the S_0 set among the input.
std::vector<Partition> restrictSZero(std::span<const Partition> parts);

}  // namespace pcat

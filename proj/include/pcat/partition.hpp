/** @file partition.hpp
 *  @brief Two-colored partitions of an upper and a lower row of points.
 *
 *  A Partition consists of a row of upper points and a row of lower points,
 *  each point colored white or black, together with a set partition (the
 *  blocks) of all points.  The points carry a cyclic order: lower points
 *  left to right, then upper points right to left.  All measure-like
 *  quantities (color sums, color distances, crossings) are defined against
 *  this cyclic order and against *normalized* colors: a lower point keeps
 *  its drawn color, an upper point counts as the inverse of its drawn color.
 *
 *  Values are immutable after construction and cheap to copy and hash.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcat {

enum class Color : std::uint8_t { white, black };

inline Color inverse(Color c) { return c == Color::white ? Color::black : Color::white; }
inline char colorChar(Color c) { return c == Color::white ? 'w' : 'b'; }

enum class RowKind : std::uint8_t { upper, lower };

/// A named point: row plus 1-based index, counted left to right within its row.
struct PointRef {
  RowKind row;
  int index;

  friend bool operator==(const PointRef&, const PointRef&) = default;
  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

std::string pointName(const PointRef& p);
PointRef parsePointName(const std::string& text);

/// Thrown for malformed literals and invalid domain arguments.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class IntervalKind { open, half_open, closed };

class Partition {
 public:
  /// The empty partition: both rows empty, no blocks.
  Partition() = default;

  /// Validates that the blocks partition exactly the points of the two rows.
  static Partition make(std::vector<Color> upper, std::vector<Color> lower,
                        std::vector<std::vector<PointRef>> blocks);

  int upperSize() const { return static_cast<int>(upper_.size()); }
  int lowerSize() const { return static_cast<int>(lower_.size()); }
  int totalPoints() const { return upperSize() + lowerSize(); }
  bool empty() const { return totalPoints() == 0; }

  const std::vector<Color>& upperColors() const { return upper_; }
  const std::vector<Color>& lowerColors() const { return lower_; }

  bool validPoint(const PointRef& p) const;
  void requirePoint(const PointRef& p) const;

  /// Drawn color of a point, as written in the diagram.
  Color drawnColor(const PointRef& p) const;
  /// Drawn color for lower points, inverted drawn color for upper points.
  Color normalizedColor(const PointRef& p) const;

  // Cyclic order: l1..ln, um, ..., u1, treated cyclically.
  int cyclicPos(const PointRef& p) const;
  PointRef pointAt(int cyclicPos) const;
  std::vector<PointRef> cyclicOrder() const;
  PointRef successor(const PointRef& p) const;
  PointRef predecessor(const PointRef& p) const;

  const std::vector<std::vector<PointRef>>& blocks() const { return blocks_; }
  int blockCount() const { return static_cast<int>(blocks_.size()); }
  int blockIndexOf(const PointRef& p) const;
  const std::vector<PointRef>& blockOf(const PointRef& p) const;
  bool sameBlock(const PointRef& a, const PointRef& b) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.blocks_ == b.blocks_;
  }

  /// Canonical literal; also serves as an injective stable key.
  std::string toString() const;

 private:
  std::vector<Color> upper_, lower_;
  std::vector<std::vector<PointRef>> blocks_;   // canonically sorted
  std::vector<int> blockAt_;                    // block index per cyclic position
};

/// Parses the literal grammar `UPPER ":" LOWER ":" BLOCKS`, e.g. "-:wb:[l1 l2]".
Partition parsePartition(const std::string& text);
std::string printPartition(const Partition& p);

/// Signed count of one point: +1 if normalized white, -1 if normalized black.
int pointSign(const Partition& p, const PointRef& pt);

/// sigma: (# normalized white) - (# normalized black) over a point set.
int colorSum(const Partition& p, const std::vector<PointRef>& pts);

/// Sigma(p): the color sum of all points.
int totalColorSum(const Partition& p);

int blockColorSum(const Partition& p, int blockIndex);

/// Walks the cyclic order forward from `a` to `b`.  open excludes both
/// endpoints, half_open ]a,b] excludes a and includes b, closed includes both.
std::vector<PointRef> interval(const Partition& p, const PointRef& a, const PointRef& b,
                               IntervalKind kind);

/// Color distance delta_p(a,b) = sigma(]a,b]) + (sigma(a) - sigma(b)) / 2.
int colorDistance(const Partition& p, const PointRef& a, const PointRef& b);

/// True iff there are beta1,gamma1 in block b1 and beta2,gamma2 in block b2
/// with (beta1, beta2, gamma1, gamma2) ordered in the cyclic order.
bool blocksCross(const Partition& p, int b1, int b2);

/// True iff {a, succ(a)} with inverse normalized colors; the unit of erasing.
bool isTurn(const Partition& p, const PointRef& a, const PointRef& b);

struct EnumerationOptions {
  int maxTotalPoints = 8;
};

/// Yields every partition with the given row sizes exactly once (all
/// colorings x all set partitions), filtered.  Returns the number visited.
/// The callback may return false to stop early.
std::int64_t enumeratePartitions(int upperLen, int lowerLen,
                                 const std::function<bool(const Partition&)>& visit,
                                 const EnumerationOptions& opts = {});

/// Convenience: collect the full enumeration, optionally filtered.
std::vector<Partition> allPartitions(int upperLen, int lowerLen,
                                     const std::function<bool(const Partition&)>& filter = {},
                                     const EnumerationOptions& opts = {});

}  // namespace pcat

template <>
struct std::hash<pcat::Partition> {
  std::size_t operator()(const pcat::Partition& p) const {
    return std::hash<std::string>{}(p.toString());
  }
};

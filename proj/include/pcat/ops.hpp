/** @file ops.hpp
 *  @brief Category operations on two-colored partitions.
 *
 *  tensor / compose / involution are the defining operations; basic and
 *  cyclic rotations, verticolor reflection, erasing turns, projection,
 *  disconnecting points and connecting turns are derived from them.
 *
 *  Composition convention: compose(bottom, top) glues the upper row of
 *  `bottom` to the lower row of `top` (drawn colors must agree); the result
 *  keeps bottom's lower row and top's upper row.  Components confined to the
 *  glued row are dropped.
 */
#pragma once

#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

enum class Corner { up_left, up_right, down_left, down_right };

/// A turn: two cyclically consecutive points of inverse normalized colors.
struct Turn {
  PointRef a;
  PointRef b;  // b = cyclic successor of a
};

Partition tensor(const Partition& p, const Partition& q);
Partition involution(const Partition& p);

bool composable(const Partition& bottom, const Partition& top);
Partition compose(const Partition& bottom, const Partition& top);

/// Moves one end point to the other row at the same side, inverting its
/// drawn color.  up_* moves an end of the lower row up, down_* the reverse.
Partition rotate(const Partition& p, Corner corner);

/// Shifts the cyclic order by `steps` while keeping the row lengths.
Partition rotateCyclic(const Partition& p, int steps);

/// Reverses each row and inverts every drawn color.
Partition reflect(const Partition& p);

Partition eraseTurn(const Partition& p, const Turn& t);

/// All turns of p, each keyed by its first point.
std::vector<Turn> turnsOf(const Partition& p);

/// True iff `pts` is empty, all points, or a contiguous arc of the cyclic order.
bool isConsecutive(const Partition& p, const std::vector<PointRef>& pts);

/// Equivalence of (p1,S1) and (p2,S2): aligned traversals with equal
/// normalized colors and equal same-block-inside / same-block-outside
/// relations.  Full-circle arcs are compared under every cyclic alignment.
bool equivalent(const Partition& p1, const std::vector<PointRef>& s1,
                const Partition& p2, const std::vector<PointRef>& s2);

/// The projection P(p,S): rotates p until S is the lower row and forms
/// compose(rotated, involution(rotated)).  P(p, {}) is the empty partition.
Partition project(const Partition& p, const std::vector<PointRef>& s);

/// Makes the point a singleton block; everything else unchanged.
Partition disconnectPoint(const Partition& p, const PointRef& pt);

/// Merges the blocks of the two turn points; everything else unchanged.
Partition connectTurn(const Partition& p, const Turn& t);

bool isProjective(const Partition& p);

/// Convention hook used by the verification suite: when disabled, basic
/// rotations keep the moved point's drawn color instead of inverting it.
bool rotationInvertsColor();
class RotationConventionGuard {
 public:
  explicit RotationConventionGuard(bool invert);
  ~RotationConventionGuard();
  RotationConventionGuard(const RotationConventionGuard&) = delete;
  RotationConventionGuard& operator=(const RotationConventionGuard&) = delete;

 private:
  bool saved_;
};

}  // namespace pcat

#include "pcat/ops.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>

namespace pcat {

namespace {

std::atomic<bool> g_rotationInverts{true};

Color movedColor(Color c) { return g_rotationInverts.load() ? inverse(c) : c; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool rotationInvertsColor() { return g_rotationInverts.load(); }

RotationConventionGuard::RotationConventionGuard(bool invert) : saved_(g_rotationInverts.load()) {
  g_rotationInverts.store(invert);
}

RotationConventionGuard::~RotationConventionGuard() { g_rotationInverts.store(saved_); }

Partition tensor(const Partition& p, const Partition& q) {
  std::vector<Color> upper = p.upperColors();
  upper.insert(upper.end(), q.upperColors().begin(), q.upperColors().end());
  std::vector<Color> lower = p.lowerColors();
  lower.insert(lower.end(), q.lowerColors().begin(), q.lowerColors().end());

  std::vector<std::vector<PointRef>> blocks = p.blocks();
  for (const auto& blk : q.blocks()) {
    std::vector<PointRef> shifted;
    shifted.reserve(blk.size());
    for (const PointRef& pt : blk)
      shifted.push_back(PointRef{
          pt.row, pt.index + (pt.row == RowKind::lower ? p.lowerSize() : p.upperSize())});
    blocks.push_back(std::move(shifted));
  }
  return Partition::make(std::move(upper), std::move(lower), std::move(blocks));
}

Partition involution(const Partition& p) {
  std::vector<std::vector<PointRef>> blocks;
  blocks.reserve(p.blocks().size());
  for (const auto& blk : p.blocks()) {
    std::vector<PointRef> swapped;
    swapped.reserve(blk.size());
    for (const PointRef& pt : blk)
      swapped.push_back(
          PointRef{pt.row == RowKind::lower ? RowKind::upper : RowKind::lower, pt.index});
    blocks.push_back(std::move(swapped));
  }
  return Partition::make(p.lowerColors(), p.upperColors(), std::move(blocks));
}

bool composable(const Partition& bottom, const Partition& top) {
  return bottom.upperColors() == top.lowerColors();
}

Partition compose(const Partition& bottom, const Partition& top) {
  if (!composable(bottom, top))
    throw Error("not composable: the glued rows differ in length or colors");

  const int nl = bottom.lowerSize();
  const int g = bottom.upperSize();
  const int nu = top.upperSize();
  // Nodes: bottom lower | glued row | top upper.
  UnionFind uf(nl + g + nu);
  auto bottomNode = [&](const PointRef& pt) {
    return pt.row == RowKind::lower ? pt.index - 1 : nl + pt.index - 1;
  };
  auto topNode = [&](const PointRef& pt) {
    return pt.row == RowKind::lower ? nl + pt.index - 1 : nl + g + pt.index - 1;
  };
  for (const auto& blk : bottom.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i)
      uf.unite(bottomNode(blk[i - 1]), bottomNode(blk[i]));
  for (const auto& blk : top.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(topNode(blk[i - 1]), topNode(blk[i]));

  std::map<int, std::vector<PointRef>> components;
  for (int i = 0; i < nl; ++i)
    components[uf.find(i)].push_back(PointRef{RowKind::lower, i + 1});
  for (int k = 0; k < nu; ++k)
    components[uf.find(nl + g + k)].push_back(PointRef{RowKind::upper, k + 1});

  std::vector<std::vector<PointRef>> blocks;
  for (auto& [root, pts] : components) blocks.push_back(std::move(pts));
  return Partition::make(top.upperColors(), bottom.lowerColors(), std::move(blocks));
}

Partition rotate(const Partition& p, Corner corner) {
  const bool up = corner == Corner::up_left || corner == Corner::up_right;
  const bool left = corner == Corner::up_left || corner == Corner::down_left;
  if (up && p.lowerSize() == 0) throw Error("rotate: empty lower row");
  if (!up && p.upperSize() == 0) throw Error("rotate: empty upper row");

  std::vector<Color> upper = p.upperColors();
  std::vector<Color> lower = p.lowerColors();
  PointRef moved{};    // in p
  PointRef movedTo{};  // in the result
  // Remaps a surviving point of p to its place in the result.
  int lowerShift = 0, upperShift = 0;

  if (up) {
    int src = left ? 1 : p.lowerSize();
    moved = PointRef{RowKind::lower, src};
    Color c = movedColor(p.lowerColors()[src - 1]);
    lower.erase(lower.begin() + (src - 1));
    if (left) {
      upper.insert(upper.begin(), c);
      movedTo = PointRef{RowKind::upper, 1};
      lowerShift = -1;
      upperShift = 1;
    } else {
      upper.push_back(c);
      movedTo = PointRef{RowKind::upper, static_cast<int>(upper.size())};
    }
  } else {
    int src = left ? 1 : p.upperSize();
    moved = PointRef{RowKind::upper, src};
    Color c = movedColor(p.upperColors()[src - 1]);
    upper.erase(upper.begin() + (src - 1));
    if (left) {
      lower.insert(lower.begin(), c);
      movedTo = PointRef{RowKind::lower, 1};
      upperShift = -1;
      lowerShift = 1;
    } else {
      lower.push_back(c);
      movedTo = PointRef{RowKind::lower, static_cast<int>(lower.size())};
    }
  }

  auto remap = [&](const PointRef& pt) {
    if (pt == moved) return movedTo;
    if (pt.row == RowKind::lower) return PointRef{RowKind::lower, pt.index + lowerShift};
    return PointRef{RowKind::upper, pt.index + upperShift};
  };

  std::vector<std::vector<PointRef>> blocks;
  blocks.reserve(p.blocks().size());
  for (const auto& blk : p.blocks()) {
    std::vector<PointRef> mapped;
    mapped.reserve(blk.size());
    for (const PointRef& pt : blk) mapped.push_back(remap(pt));
    blocks.push_back(std::move(mapped));
  }
  return Partition::make(std::move(upper), std::move(lower), std::move(blocks));
}

Partition rotateCyclic(const Partition& p, int steps) {
  Partition q = p;
  auto forward = [](Partition r) {
    if (r.lowerSize() > 0) {
      r = rotate(r, Corner::up_left);
      r = rotate(r, Corner::down_right);
    } else if (r.upperSize() > 0) {
      r = rotate(r, Corner::down_right);
      r = rotate(r, Corner::up_left);
    }
    return r;
  };
  auto backward = [](Partition r) {
    if (r.upperSize() > 0) {
      r = rotate(r, Corner::down_left);
      r = rotate(r, Corner::up_right);
    } else if (r.lowerSize() > 0) {
      r = rotate(r, Corner::up_right);
      r = rotate(r, Corner::down_left);
    }
    return r;
  };
  int n = p.totalPoints();
  if (n == 0) return q;
  steps %= n;
  for (; steps > 0; --steps) q = forward(std::move(q));
  for (; steps < 0; ++steps) q = backward(std::move(q));
  return q;
}

Partition reflect(const Partition& p) {
  std::vector<Color> upper(p.upperColors().rbegin(), p.upperColors().rend());
  std::vector<Color> lower(p.lowerColors().rbegin(), p.lowerColors().rend());
  for (Color& c : upper) c = inverse(c);
  for (Color& c : lower) c = inverse(c);

  auto mirror = [&](const PointRef& pt) {
    int n = pt.row == RowKind::lower ? p.lowerSize() : p.upperSize();
    return PointRef{pt.row, n + 1 - pt.index};
  };
  std::vector<std::vector<PointRef>> blocks;
  blocks.reserve(p.blocks().size());
  for (const auto& blk : p.blocks()) {
    std::vector<PointRef> mapped;
    mapped.reserve(blk.size());
    for (const PointRef& pt : blk) mapped.push_back(mirror(pt));
    blocks.push_back(std::move(mapped));
  }
  return Partition::make(std::move(upper), std::move(lower), std::move(blocks));
}

std::vector<Turn> turnsOf(const Partition& p) {
  std::vector<Turn> out;
  const int n = p.totalPoints();
  if (n < 2) return out;
  for (int pos = 0; pos < n; ++pos) {
    PointRef a = p.pointAt(pos);
    PointRef b = p.successor(a);
    if (isTurn(p, a, b)) out.push_back(Turn{a, b});
  }
  return out;
}

Partition eraseTurn(const Partition& p, const Turn& t) {
  if (!isTurn(p, t.a, t.b)) throw Error("not a turn: need adjacent points of inverse colors");

  auto removedBelow = [&](const PointRef& pt) {
    int k = 0;
    for (const PointRef& r : {t.a, t.b})
      if (r.row == pt.row && r.index < pt.index) ++k;
    return k;
  };
  auto remap = [&](const PointRef& pt) {
    return PointRef{pt.row, pt.index - removedBelow(pt)};
  };

  std::vector<Color> upper, lower;
  for (int i = 1; i <= p.upperSize(); ++i) {
    PointRef pt{RowKind::upper, i};
    if (pt != t.a && pt != t.b) upper.push_back(p.drawnColor(pt));
  }
  for (int i = 1; i <= p.lowerSize(); ++i) {
    PointRef pt{RowKind::lower, i};
    if (pt != t.a && pt != t.b) lower.push_back(p.drawnColor(pt));
  }

  const int ba = p.blockIndexOf(t.a);
  const int bb = p.blockIndexOf(t.b);
  std::vector<std::vector<PointRef>> blocks;
  std::vector<PointRef> merged;
  for (int b = 0; b < p.blockCount(); ++b) {
    std::vector<PointRef> mapped;
    for (const PointRef& pt : p.blocks()[b])
      if (pt != t.a && pt != t.b) mapped.push_back(remap(pt));
    if (b == ba || b == bb) {
      merged.insert(merged.end(), mapped.begin(), mapped.end());
    } else {
      blocks.push_back(std::move(mapped));
    }
  }
  if (!merged.empty()) blocks.push_back(std::move(merged));
  return Partition::make(std::move(upper), std::move(lower), std::move(blocks));
}

bool isConsecutive(const Partition& p, const std::vector<PointRef>& pts) {
  const int n = p.totalPoints();
  std::set<int> pos;
  for (const PointRef& pt : pts) {
    p.requirePoint(pt);
    if (!pos.insert(p.cyclicPos(pt)).second) return false;  // duplicate
  }
  const int k = static_cast<int>(pos.size());
  if (k == 0 || k == n) return true;
  int gaps = 0;
  for (int q : pos)
    if (!pos.count((q + 1) % n)) ++gaps;
  return gaps == 1;
}

namespace {

// Cyclic traversal of a consecutive set, starting at the given position.
std::vector<PointRef> arcTraversal(const Partition& p, int startPos, int len) {
  std::vector<PointRef> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) out.push_back(p.pointAt((startPos + i) % p.totalPoints()));
  return out;
}

// Start positions of the arc: unique for a proper arc, every position for
// the full circle.
std::vector<int> arcStarts(const Partition& p, const std::vector<PointRef>& pts) {
  std::set<int> pos;
  for (const PointRef& pt : pts) pos.insert(p.cyclicPos(pt));
  const int n = p.totalPoints();
  std::vector<int> starts;
  if (static_cast<int>(pos.size()) == n) {
    starts.assign(pos.begin(), pos.end());
  } else {
    for (int q : pos)
      if (!pos.count((q + n - 1) % n)) starts.push_back(q);
  }
  return starts;
}

bool equivalentAligned(const Partition& p1, const std::vector<PointRef>& t1,
                       const Partition& p2, const std::vector<PointRef>& t2) {
  const int n = static_cast<int>(t1.size());
  auto blockInside = [](const Partition& p, const std::vector<PointRef>& t, const PointRef& pt) {
    std::set<int> s;
    for (const PointRef& q : t) s.insert(p.cyclicPos(q));
    for (const PointRef& q : p.blockOf(pt))
      if (!s.count(p.cyclicPos(q))) return false;
    return true;
  };
  for (int j = 0; j < n; ++j)
    if (p1.normalizedColor(t1[j]) != p2.normalizedColor(t2[j])) return false;
  for (int j = 0; j < n; ++j) {
    for (int j2 = j; j2 < n; ++j2) {
      bool same1 = p1.sameBlock(t1[j], t1[j2]);
      bool same2 = p2.sameBlock(t2[j], t2[j2]);
      bool in1 = same1 && blockInside(p1, t1, t1[j]);
      bool in2 = same2 && blockInside(p2, t2, t2[j]);
      bool out1 = same1 && !blockInside(p1, t1, t1[j]);
      bool out2 = same2 && !blockInside(p2, t2, t2[j]);
      if (in1 != in2 || out1 != out2) return false;
    }
  }
  return true;
}

}  // namespace

bool equivalent(const Partition& p1, const std::vector<PointRef>& s1,
                const Partition& p2, const std::vector<PointRef>& s2) {
  if (!isConsecutive(p1, s1) || !isConsecutive(p2, s2))
    throw Error("equivalence needs consecutive sets");
  if (s1.empty() && s2.empty()) return true;
  if (s1.size() != s2.size()) return false;

  const int len = static_cast<int>(s1.size());
  for (int a : arcStarts(p1, s1)) {
    auto t1 = arcTraversal(p1, a, len);
    for (int b : arcStarts(p2, s2)) {
      auto t2 = arcTraversal(p2, b, len);
      if (equivalentAligned(p1, t1, p2, t2)) return true;
    }
  }
  return false;
}

namespace {

struct Move {
  Corner corner;
};

Corner inverseCorner(Corner c) {
  switch (c) {
    case Corner::up_left: return Corner::down_left;
    case Corner::up_right: return Corner::down_right;
    case Corner::down_left: return Corner::up_left;
    case Corner::down_right: return Corner::up_right;
  }
  throw Error("bad corner");
}

Partition applyMove(const Partition& p, std::vector<Move>& log, Corner c) {
  log.push_back(Move{c});
  return rotate(p, c);
}

// Rotates p until the consecutive set is exactly the lower row; records the
// applied corner moves so they can be undone.
Partition bringToLowerRow(const Partition& p, const std::vector<PointRef>& arc,
                          std::vector<Move>& log) {
  // Track the arc's first point through the moves by cyclic position
  // invariance: basic rotations never change the cyclic word, so we can
  // follow the point by its cyclic position.
  Partition q = p;
  int startPos = p.cyclicPos(arc.front());
  const int k = static_cast<int>(arc.size());

  // Everything up.
  while (q.lowerSize() > 0) {
    // up_left removes the cyclic origin, shifting positions down by one.
    q = applyMove(q, log, Corner::up_left);
    startPos = (startPos - 1 + p.totalPoints()) % p.totalPoints();
  }
  // Shift the cyclic origin until the arc starts at position 0.
  while (startPos != 0) {
    q = applyMove(q, log, Corner::down_right);
    q = applyMove(q, log, Corner::up_left);
    startPos = (startPos - 1 + p.totalPoints()) % p.totalPoints();
  }
  // First k cyclic points down, in order.
  for (int i = 0; i < k; ++i) q = applyMove(q, log, Corner::down_right);
  return q;
}

Partition undoMoves(Partition q, const std::vector<Move>& log) {
  for (auto it = log.rbegin(); it != log.rend(); ++it) q = rotate(q, inverseCorner(it->corner));
  return q;
}

// Arc points listed in cyclic traversal order.
std::vector<PointRef> orderedArc(const Partition& p, const std::vector<PointRef>& pts) {
  if (pts.empty()) return {};
  auto starts = arcStarts(p, pts);
  return arcTraversal(p, starts.front(), static_cast<int>(pts.size()));
}

}  // namespace

Partition project(const Partition& p, const std::vector<PointRef>& s) {
  if (!isConsecutive(p, s)) throw Error("projection needs a consecutive set");
  if (s.empty()) return Partition();

  std::vector<Move> log;
  Partition q = bringToLowerRow(p, orderedArc(p, s), log);
  return compose(q, involution(q));
}

Partition disconnectPoint(const Partition& p, const PointRef& pt) {
  p.requirePoint(pt);
  std::vector<Move> log;
  Partition q = bringToLowerRow(p, {pt}, log);
  Color c = q.lowerColors()[0];
  Partition proj = Partition::make({c}, {c}, {{PointRef{RowKind::upper, 1}},
                                              {PointRef{RowKind::lower, 1}}});
  Partition r = compose(proj, q);
  return undoMoves(r, log);
}

Partition connectTurn(const Partition& p, const Turn& t) {
  if (!isTurn(p, t.a, t.b)) throw Error("not a turn: need adjacent points of inverse colors");
  // Bring the complement to the lower row, so the turn is the upper row.
  std::vector<PointRef> rest;
  const int n = p.totalPoints();
  int from = (p.cyclicPos(t.b) + 1) % n;
  for (int i = 0; i < n - 2; ++i) rest.push_back(p.pointAt((from + i) % n));

  std::vector<Move> log;
  Partition q;
  if (rest.empty()) {
    // The turn is the whole partition; rotate it to the upper row directly.
    q = p;
    while (q.lowerSize() > 0) q = applyMove(q, log, Corner::up_left);
  } else {
    q = bringToLowerRow(p, rest, log);
  }
  std::vector<Color> s = q.upperColors();
  Partition proj = Partition::make(s, s,
                                   {{PointRef{RowKind::upper, 1}, PointRef{RowKind::upper, 2},
                                     PointRef{RowKind::lower, 1}, PointRef{RowKind::lower, 2}}});
  Partition r = compose(q, proj);
  return undoMoves(r, log);
}

bool isProjective(const Partition& p) {
  if (p != involution(p)) return false;
  if (!composable(p, p)) return false;
  return compose(p, p) == p;
}

}  // namespace pcat

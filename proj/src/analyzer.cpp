#include "pcat/analyzer.hpp"

#include <sstream>

namespace pcat {

namespace {

// Subsequent-leg pairs of a block: ordered pairs (a1, a2) of distinct legs
// with no further leg of the block strictly between them.
bool noLegStrictlyBetween(const Partition& p, const PointRef& a1, const PointRef& a2, int block) {
  for (const PointRef& q : interval(p, a1, a2, IntervalKind::open))
    if (p.blockIndexOf(q) == block) return false;
  return true;
}

std::string fmt(const IntData& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

void analyzeInto(const Partition& p, Analysis& out) {
  out.sigma.insert(totalColorSum(p));
  const auto& blocks = p.blocks();
  for (int b = 0; b < p.blockCount(); ++b) {
    out.f.insert(static_cast<int>(blocks[b].size()));
    out.v.insert(blockColorSum(p, b));
    for (const PointRef& a1 : blocks[b]) {
      for (const PointRef& a2 : blocks[b]) {
        if (a1 == a2) continue;
        if (!noLegStrictlyBetween(p, a1, a2, b)) continue;
        int d = colorDistance(p, a1, a2);
        Color c1 = p.normalizedColor(a1);
        Color c2 = p.normalizedColor(a2);
        out.kcc[colorIdx(c1)][colorIdx(c2)].insert(d);
        if (c1 == c2)
          out.l.insert(d);
        else
          out.k.insert(d);
      }
    }
  }
  for (int b1 = 0; b1 < p.blockCount(); ++b1) {
    for (int b2 = 0; b2 < p.blockCount(); ++b2) {
      if (b1 == b2 || !blocksCross(p, b1, b2)) continue;
      for (const PointRef& a1 : blocks[b1]) {
        for (const PointRef& a2 : blocks[b2]) {
          int d = colorDistance(p, a1, a2);
          out.x.insert(d);
          out.xcc[colorIdx(p.normalizedColor(a1))][colorIdx(p.normalizedColor(a2))].insert(d);
        }
      }
    }
  }
}

Analysis analyze(std::span<const Partition> parts) {
  Analysis out;
  for (const Partition& p : parts) analyzeInto(p, out);
  return out;
}

Analysis analyze(const std::vector<Partition>& parts) {
  return analyze(std::span<const Partition>(parts.data(), parts.size()));
}

IntData kRefined(std::span<const Partition> parts, Color c1, Color c2) {
  return analyze(parts).kcc[colorIdx(c1)][colorIdx(c2)];
}

IntData xRefined(std::span<const Partition> parts, Color c1, Color c2) {
  return analyze(parts).xcc[colorIdx(c1)][colorIdx(c2)];
}

std::vector<Partition> restrictPairsOnly(std::span<const Partition> parts) {
  std::vector<Partition> out;
  for (const Partition& p : parts) {
    bool ok = true;
    for (const auto& blk : p.blocks())
      if (blk.size() > 2) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

bool inSZero(const Partition& p) {
  for (int b = 0; b < p.blockCount(); ++b) {
    const auto& blk = p.blocks()[b];
    if (blk.size() > 2) return false;
    if (blockColorSum(p, b) != 0) return false;
    for (const PointRef& a1 : blk)
      for (const PointRef& a2 : blk)
        if (a1 != a2 && colorDistance(p, a1, a2) != 0) return false;
  }
  return true;
}

std::vector<Partition> restrictSZero(std::span<const Partition> parts) {
  std::vector<Partition> out;
  for (const Partition& p : parts)
    if (inSZero(p)) out.push_back(p);
  return out;
}

std::string Analysis::report(bool refined) const {
  std::ostringstream os;
  os << "F = " << fmt(f) << '\n';
  os << "V = " << fmt(v) << '\n';
  os << "Sigma = " << fmt(sigma) << '\n';
  os << "L = " << fmt(l) << '\n';
  os << "K = " << fmt(k) << '\n';
  os << "X = " << fmt(x) << '\n';
  if (refined) {
    const char* cc[2] = {"w", "b"};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        os << "K[" << cc[i] << cc[j] << "] = " << fmt(kcc[i][j]) << '\n';
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        os << "X[" << cc[i] << cc[j] << "] = " << fmt(xcc[i][j]) << '\n';
  }
  return os.str();
}

}  // namespace pcat

#include "pcat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pcat {

std::string pointName(const PointRef& p) {
  return (p.row == RowKind::lower ? "l" : "u") + std::to_string(p.index);
}

PointRef parsePointName(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'l' && text[0] != 'u'))
    throw Error("bad point '" + text + "': expected l<k> or u<k>");
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("bad point '" + text + "': expected l<k> or u<k>");
  int idx = std::stoi(text.substr(1));
  if (idx < 1) throw Error("bad point '" + text + "': index is 1-based");
  return PointRef{text[0] == 'l' ? RowKind::lower : RowKind::upper, idx};
}

namespace {

// Point order used for canonical block storage: lower row first.
bool pointLess(const PointRef& a, const PointRef& b) {
  if (a.row != b.row) return a.row == RowKind::lower;
  return a.index < b.index;
}

}  // namespace

Partition Partition::make(std::vector<Color> upper, std::vector<Color> lower,
                          std::vector<std::vector<PointRef>> blocks) {
  Partition p;
  p.upper_ = std::move(upper);
  p.lower_ = std::move(lower);

  const int total = p.totalPoints();
  std::vector<int> seen(total, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("empty block");
    for (const PointRef& pt : blocks[b]) {
      if (!p.validPoint(pt)) throw Error("point " + pcat::pointName(pt) + " out of range");
      int pos = p.cyclicPos(pt);
      if (seen[pos] != -1) throw Error("point " + pcat::pointName(pt) + " occurs in two blocks");
      seen[pos] = static_cast<int>(b);
    }
  }
  for (int pos = 0; pos < total; ++pos)
    if (seen[pos] == -1)
      throw Error("point " + pcat::pointName(p.pointAt(pos)) + " missing from all blocks");

  for (auto& blk : blocks) std::sort(blk.begin(), blk.end(), pointLess);
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return pointLess(a.front(), b.front()); });

  p.blocks_ = std::move(blocks);
  p.blockAt_.assign(total, -1);
  for (std::size_t b = 0; b < p.blocks_.size(); ++b)
    for (const PointRef& pt : p.blocks_[b]) p.blockAt_[p.cyclicPos(pt)] = static_cast<int>(b);
  return p;
}

bool Partition::validPoint(const PointRef& p) const {
  int n = p.row == RowKind::lower ? lowerSize() : upperSize();
  return p.index >= 1 && p.index <= n;
}

void Partition::requirePoint(const PointRef& p) const {
  if (!validPoint(p)) throw Error("point " + pcat::pointName(p) + " out of range");
}

Color Partition::drawnColor(const PointRef& p) const {
  requirePoint(p);
  return p.row == RowKind::lower ? lower_[p.index - 1] : upper_[p.index - 1];
}

Color Partition::normalizedColor(const PointRef& p) const {
  Color c = drawnColor(p);
  return p.row == RowKind::lower ? c : inverse(c);
}

int Partition::cyclicPos(const PointRef& p) const {
  requirePoint(p);
  if (p.row == RowKind::lower) return p.index - 1;
  return lowerSize() + (upperSize() - p.index);
}

PointRef Partition::pointAt(int pos) const {
  if (pos < 0 || pos >= totalPoints()) throw Error("cyclic position out of range");
  if (pos < lowerSize()) return PointRef{RowKind::lower, pos + 1};
  return PointRef{RowKind::upper, upperSize() - (pos - lowerSize())};
}

std::vector<PointRef> Partition::cyclicOrder() const {
  std::vector<PointRef> out;
  out.reserve(totalPoints());
  for (int i = 0; i < totalPoints(); ++i) out.push_back(pointAt(i));
  return out;
}

PointRef Partition::successor(const PointRef& p) const {
  int n = totalPoints();
  if (n == 0) throw Error("successor in empty partition");
  return pointAt((cyclicPos(p) + 1) % n);
}

PointRef Partition::predecessor(const PointRef& p) const {
  int n = totalPoints();
  if (n == 0) throw Error("predecessor in empty partition");
  return pointAt((cyclicPos(p) + n - 1) % n);
}

int Partition::blockIndexOf(const PointRef& p) const { return blockAt_[cyclicPos(p)]; }

const std::vector<PointRef>& Partition::blockOf(const PointRef& p) const {
  return blocks_[blockIndexOf(p)];
}

bool Partition::sameBlock(const PointRef& a, const PointRef& b) const {
  return blockIndexOf(a) == blockIndexOf(b);
}

std::string Partition::toString() const {
  std::ostringstream os;
  auto row = [&os](const std::vector<Color>& cs) {
    if (cs.empty()) {
      os << '-';
    } else {
      for (Color c : cs) os << colorChar(c);
    }
  };
  row(upper_);
  os << ':';
  row(lower_);
  os << ':';
  for (const auto& blk : blocks_) {
    os << '[';
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ' ';
      os << pcat::pointName(blk[i]);
    }
    os << ']';
  }
  return os.str();
}

std::string printPartition(const Partition& p) { return p.toString(); }

Partition parsePartition(const std::string& text) {
  auto firstColon = text.find(':');
  if (firstColon == std::string::npos) throw Error("bad partition literal: missing ':'");
  auto secondColon = text.find(':', firstColon + 1);
  if (secondColon == std::string::npos) throw Error("bad partition literal: missing second ':'");

  auto parseRow = [](const std::string& s) {
    std::vector<Color> out;
    if (s == "-") return out;
    for (char ch : s) {
      if (ch == 'w')
        out.push_back(Color::white);
      else if (ch == 'b')
        out.push_back(Color::black);
      else
        throw Error(std::string("bad row character '") + ch + "'");
    }
    return out;
  };

  std::vector<Color> upper = parseRow(text.substr(0, firstColon));
  std::vector<Color> lower = parseRow(text.substr(firstColon + 1, secondColon - firstColon - 1));

  std::vector<std::vector<PointRef>> blocks;
  std::size_t i = secondColon + 1;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '[') throw Error("bad partition literal: expected '['");
    auto close = text.find(']', i);
    if (close == std::string::npos) throw Error("bad partition literal: missing ']'");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<PointRef> blk;
    std::string tok;
    while (in >> tok) blk.push_back(parsePointName(tok));
    if (blk.empty()) throw Error("bad partition literal: empty block");
    blocks.push_back(std::move(blk));
    i = close + 1;
  }
  return Partition::make(std::move(upper), std::move(lower), std::move(blocks));
}

int pointSign(const Partition& p, const PointRef& pt) {
  return p.normalizedColor(pt) == Color::white ? 1 : -1;
}

int colorSum(const Partition& p, const std::vector<PointRef>& pts) {
  int s = 0;
  for (const PointRef& pt : pts) s += pointSign(p, pt);
  return s;
}

int totalColorSum(const Partition& p) {
  int s = 0;
  for (int pos = 0; pos < p.totalPoints(); ++pos) s += pointSign(p, p.pointAt(pos));
  return s;
}

int blockColorSum(const Partition& p, int blockIndex) {
  return colorSum(p, p.blocks()[blockIndex]);
}

std::vector<PointRef> interval(const Partition& p, const PointRef& a, const PointRef& b,
                               IntervalKind kind) {
  p.requirePoint(a);
  p.requirePoint(b);
  if (a == b && kind != IntervalKind::closed)
    throw Error("open/half-open interval needs distinct endpoints");
  const int n = p.totalPoints();
  std::vector<PointRef> out;
  if (kind == IntervalKind::closed) {
    out.push_back(a);
    if (a == b) return out;
  }
  int pos = p.cyclicPos(a);
  const int stop = p.cyclicPos(b);
  while (true) {
    pos = (pos + 1) % n;
    if (pos == stop) break;
    out.push_back(p.pointAt(pos));
  }
  if (kind != IntervalKind::open) out.push_back(b);
  if (kind == IntervalKind::open && a == b) out.clear();
  return out;
}

int colorDistance(const Partition& p, const PointRef& a, const PointRef& b) {
  if (a == b) throw Error("color distance needs distinct points");
  int s = colorSum(p, interval(p, a, b, IntervalKind::half_open));
  return s + (pointSign(p, a) - pointSign(p, b)) / 2;
}

bool blocksCross(const Partition& p, int b1, int b2) {
  if (b1 < 0 || b2 < 0 || b1 >= p.blockCount() || b2 >= p.blockCount())
    throw Error("not blocks of this partition");
  if (b1 == b2) throw Error("crossing needs two distinct blocks");
  // Restricted to the two blocks, the cyclic membership word must alternate
  // somewhere: more than two runs means an ordered quadruple exists.
  std::vector<int> word;
  for (int pos = 0; pos < p.totalPoints(); ++pos) {
    int b = p.blockIndexOf(p.pointAt(pos));
    if (b == b1 || b == b2) word.push_back(b);
  }
  int runs = 0;
  const int k = static_cast<int>(word.size());
  for (int i = 0; i < k; ++i)
    if (word[i] != word[(i + 1) % k]) ++runs;
  return runs > 2;
}

bool isTurn(const Partition& p, const PointRef& a, const PointRef& b) {
  p.requirePoint(a);
  p.requirePoint(b);
  if (p.totalPoints() < 2 || a == b) return false;
  if (p.successor(a) != b) return false;
  return pointSign(p, a) + pointSign(p, b) == 0;
}

namespace {

void forEachSetPartition(int n, const std::function<void(const std::vector<int>&)>& emit) {
  // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxUsed) {
    if (i == n) {
      emit(a);
      return;
    }
    for (int v = 0; v <= maxUsed + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(maxUsed, v));
    }
  };
  rec(0, -1);
}

}  // namespace

std::int64_t enumeratePartitions(int upperLen, int lowerLen,
                                 const std::function<bool(const Partition&)>& visit,
                                 const EnumerationOptions& opts) {
  if (upperLen < 0 || lowerLen < 0) throw Error("negative row length");
  const int n = upperLen + lowerLen;
  if (n > opts.maxTotalPoints)
    throw Error("enumeration cap exceeded: " + std::to_string(n) + " > " +
                std::to_string(opts.maxTotalPoints));

  // Points in row order: l1..l_lower, u1..u_upper.
  std::vector<PointRef> pts;
  for (int i = 1; i <= lowerLen; ++i) pts.push_back(PointRef{RowKind::lower, i});
  for (int i = 1; i <= upperLen; ++i) pts.push_back(PointRef{RowKind::upper, i});

  std::int64_t count = 0;
  bool stopped = false;
  forEachSetPartition(n, [&](const std::vector<int>& rgs) {
    if (stopped) return;
    int numBlocks = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<PointRef>> blocks(numBlocks);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(pts[i]);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Color> lower(lowerLen), upper(upperLen);
      for (int i = 0; i < lowerLen; ++i)
        lower[i] = (mask >> i) & 1 ? Color::black : Color::white;
      for (int i = 0; i < upperLen; ++i)
        upper[i] = (mask >> (lowerLen + i)) & 1 ? Color::black : Color::white;
      Partition p = Partition::make(upper, lower, blocks);
      ++count;
      if (!visit(p)) {
        stopped = true;
        return;
      }
    }
  });
  return count;
}

std::vector<Partition> allPartitions(int upperLen, int lowerLen,
                                     const std::function<bool(const Partition&)>& filter,
                                     const EnumerationOptions& opts) {
  std::vector<Partition> out;
  enumeratePartitions(
      upperLen, lowerLen,
      [&](const Partition& p) {
        if (!filter || filter(p)) out.push_back(p);
        return true;
      },
      opts);
  return out;
}

}  // namespace pcat

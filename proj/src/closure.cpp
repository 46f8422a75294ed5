#include "pcat/closure.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace pcat {

std::string canonicalKey(const Partition& p) { return p.toString(); }

std::vector<Partition> basePartitions() {
  return {parsePartition("-:wb:[l1 l2]"), parsePartition("-:bw:[l1 l2]"),
          parsePartition("w:w:[u1 l1]"), parsePartition("b:b:[u1 l1]")};
}

const char* caseName(CaseKind c) {
  switch (c) {
    case CaseKind::O: return "O";
    case CaseKind::B: return "B";
    case CaseKind::S: return "S";
    case CaseKind::HyperoctahedralSuspect: return "hyperoctahedral-suspect";
  }
  return "?";
}

CaseKind detectCase(const std::vector<Partition>& members) {
  bool singleton = false, big = false;
  for (const Partition& p : members)
    for (const auto& blk : p.blocks()) {
      if (blk.size() == 1) singleton = true;
      if (blk.size() >= 3) big = true;
    }
  if (singleton && big) return CaseKind::S;
  if (singleton) return CaseKind::B;
  if (big) return CaseKind::HyperoctahedralSuspect;
  return CaseKind::O;
}

namespace {

std::string rowString(const std::vector<Color>& row) {
  std::string s;
  for (Color c : row) s += colorChar(c);
  return s;
}

struct Store {
  std::vector<Partition> members;
  std::unordered_map<std::string, int> index;
  std::unordered_map<std::string, std::vector<int>> byLower, byUpper;

  bool insert(Partition p) {
    std::string key = canonicalKey(p);
    if (index.count(key)) return false;
    int id = static_cast<int>(members.size());
    index.emplace(std::move(key), id);
    byLower[rowString(p.lowerColors())].push_back(id);
    byUpper[rowString(p.upperColors())].push_back(id);
    members.push_back(std::move(p));
    return true;
  }
};

}  // namespace

ClosureResult closure(const std::vector<Partition>& generators, const ClosureOptions& opts) {
  if (opts.cap < 2) throw Error("closure cap must be >= 2");

  Store store;
  std::vector<Partition> pending;
  std::unordered_map<std::string, char> pendingKeys;
  std::map<std::string, std::int64_t> produced;

  auto offer = [&](Partition p, const char* op) {
    if (p.totalPoints() > opts.cap) return;
    std::string key = canonicalKey(p);
    if (store.index.count(key)) return;
    if (!pendingKeys.emplace(std::move(key), 1).second) return;
    ++produced[op];
    pending.push_back(std::move(p));
  };

  for (const Partition& p : basePartitions()) offer(p, "seed");
  for (const Partition& p : generators) {
    if (p.totalPoints() > opts.cap)
      throw Error("generator exceeds the closure cap: " + p.toString());
    offer(p, "generator");
  }

  ClosureResult result;
  int frontierBegin = 0;
  while (!pending.empty() && result.rounds < opts.maxRounds) {
    frontierBegin = static_cast<int>(store.members.size());
    for (Partition& p : pending) store.insert(std::move(p));
    pending.clear();
    pendingKeys.clear();
    const int total = static_cast<int>(store.members.size());
    ++result.rounds;

    for (int fi = frontierBegin; fi < total; ++fi) {
      const Partition f = store.members[fi];  // copy: the store may rehash

      offer(involution(f), "involution");
      offer(reflect(f), "reflect");
      if (f.lowerSize() > 0) {
        offer(rotate(f, Corner::up_left), "rotate");
        offer(rotate(f, Corner::up_right), "rotate");
      }
      if (f.upperSize() > 0) {
        offer(rotate(f, Corner::down_left), "rotate");
        offer(rotate(f, Corner::down_right), "rotate");
      }
      for (const Turn& t : turnsOf(f)) offer(eraseTurn(f, t), "erase");

      // Binary operations: each ordered pair is attempted in the round where
      // its later element joined the store.
      for (int si = 0; si < total; ++si) {
        const Partition& s = store.members[si];
        bool sIsOld = si < frontierBegin;
        if (f.totalPoints() + s.totalPoints() <= opts.cap) {
          offer(tensor(f, s), "tensor");
          if (sIsOld) offer(tensor(s, f), "tensor");
        }
      }
      // compose(f, top): tops matched by the glued row.
      auto itTop = store.byLower.find(rowString(f.upperColors()));
      if (itTop != store.byLower.end()) {
        for (int si : itTop->second) {
          const Partition& s = store.members[si];
          if (f.lowerSize() + s.upperSize() > opts.cap) continue;
          offer(compose(f, s), "compose");
        }
      }
      // compose(bottom, f): bottoms from the old store only, to pair once.
      auto itBottom = store.byUpper.find(rowString(f.lowerColors()));
      if (itBottom != store.byUpper.end()) {
        for (int si : itBottom->second) {
          if (si >= frontierBegin) continue;
          const Partition& s = store.members[si];
          if (s.lowerSize() + f.upperSize() > opts.cap) continue;
          offer(compose(s, f), "compose");
        }
      }
    }
  }
  result.reachedFixpoint = pending.empty();

  result.members = std::move(store.members);
  std::sort(result.members.begin(), result.members.end(),
            [](const Partition& a, const Partition& b) {
              return canonicalKey(a) < canonicalKey(b);
            });
  result.producedBy = std::move(produced);
  return result;
}

std::string dumpClosure(const ClosureResult& r) {
  std::ostringstream os;
  for (const Partition& p : r.members) os << p.toString() << '\n';
  os << "# members: " << r.members.size() << '\n';
  os << "# rounds: " << r.rounds << (r.reachedFixpoint ? " (fixpoint)" : " (round limit)")
     << '\n';
  for (const auto& [op, n] : r.producedBy) os << "# produced by " << op << ": " << n << '\n';
  return os.str();
}

std::vector<Partition> parseCorpus(const std::string& text) {
  std::vector<Partition> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    out.push_back(parsePartition(line));
  }
  return out;
}

}  // namespace pcat

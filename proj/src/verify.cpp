#include "pcat/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "pcat/analyzer.hpp"
#include "pcat/closure.hpp"
#include "pcat/qspace.hpp"

namespace pcat {

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::pass;
  std::int64_t instances = 0;
  std::string counterexample;
};

using CheckFn = std::function<Outcome(const Budget&)>;

void forAllUpTo(int maxPoints, const std::function<void(const Partition&)>& f) {
  for (int total = 0; total <= maxPoints; ++total)
    for (int upper = 0; upper <= total; ++upper)
      enumeratePartitions(upper, total - upper,
                          [&](const Partition& p) {
                            f(p);
                            return true;
                          },
                          EnumerationOptions{maxPoints});
}

std::vector<std::vector<PointRef>> consecutiveSets(const Partition& p) {
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
  out.push_back(p.cyclicOrder());
  return out;
}

std::string arcLabel(const std::vector<PointRef>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += pointName(s[i]);
  }
  return out + "}";
}

IntData symmetrized(const IntData& d) {
  IntData out;
  for (int v : d) {
    out.insert(v);
    out.insert(-v);
  }
  return out;
}

struct ClosureData {
  ClosureResult result;
  Analysis data;
};

ClosureData closureData(const std::vector<Partition>& gens, int cap) {
  ClosureData out;
  out.result = closure(gens, ClosureOptions{cap, 64});
  out.data = analyze(out.result.members);
  return out;
}

std::vector<std::vector<Partition>> standardGeneratorSets() {
  return {{},
          {parsePartition("-:wb:[l1][l2]")},
          {parsePartition("-:wbwb:[l1 l2 l3 l4]"), parsePartition("-:wb:[l1][l2]")}};
}

const char* generatorSetName(std::size_t i) {
  static const char* names[] = {"<>", "<singles>", "<fourblock,singles>"};
  return names[i];
}

std::int64_t dataWindow(const Analysis& a, int cap) {
  // The largest radius on which pair-block witnesses saturate: a distance
  // value v needs about |v| interval points plus the two legs.
  std::int64_t w = cap - 2;
  (void)a;
  return std::max<std::int64_t>(w, 1);
}

ColorFamily kccFamily(const Analysis& a) {
  ColorFamily f;
  f.ww = intDataToSet(a.kcc[0][0]);
  f.wb = intDataToSet(a.kcc[0][1]);
  f.bw = intDataToSet(a.kcc[1][0]);
  f.bb = intDataToSet(a.kcc[1][1]);
  return f;
}

ColorFamily xccFamily(const Analysis& a) {
  ColorFamily f;
  f.ww = intDataToSet(a.xcc[0][0]);
  f.wb = intDataToSet(a.xcc[0][1]);
  f.bw = intDataToSet(a.xcc[1][0]);
  f.bb = intDataToSet(a.xcc[1][1]);
  return f;
}

// --- catalog -----------------------------------------------------------

Outcome projectionPpStar(const Budget& b) {
  Outcome out;
  forAllUpTo(b.maxPoints, [&](const Partition& p) {
    if (!out.counterexample.empty()) return;
    for (const auto& s : consecutiveSets(p)) {
      ++out.instances;
      Partition q = project(p, s);
      std::vector<PointRef> lower;
      for (int i = 1; i <= q.lowerSize(); ++i) lower.push_back(PointRef{RowKind::lower, i});
      bool ok = isProjective(q) && equivalent(q, lower, p, s);
      std::vector<PointRef> pLower;
      for (int i = 1; i <= p.lowerSize(); ++i) pLower.push_back(PointRef{RowKind::lower, i});
      if (s == pLower && q != compose(p, involution(p))) ok = false;
      if (!ok) {
        out.status = CheckStatus::fail;
        out.counterexample = p.toString() + " S=" + arcLabel(s) + " -> " + q.toString();
        return;
      }
    }
  });
  return out;
}

Outcome deltaAntisym(const Budget& b) {
  Outcome out;
  forAllUpTo(b.maxPoints, [&](const Partition& p) {
    if (!out.counterexample.empty()) return;
    const int n = p.totalPoints();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        ++out.instances;
        PointRef a = p.pointAt(i), c = p.pointAt(j);
        int fwd = colorDistance(p, a, c), bwd = colorDistance(p, c, a);
        int sig = totalColorSum(p);
        bool ok = fwd + bwd == sig;
        if (ok && sig != 0) ok = (fwd + bwd) % sig == 0;
        if (!ok) {
          out.status = CheckStatus::fail;
          out.counterexample =
              p.toString() + " " + pointName(a) + "," + pointName(c) + " fwd=" +
              std::to_string(fwd) + " bwd=" + std::to_string(bwd);
          return;
        }
      }
  });
  return out;
}

Outcome eraseTurnDelta(const Budget& b) {
  Outcome out;
  forAllUpTo(b.maxPoints, [&](const Partition& p) {
    if (!out.counterexample.empty()) return;
    for (const Turn& t : turnsOf(p)) {
      Partition r = eraseTurn(p, t);
      if (colorSum(p, {t.a, t.b}) != 0) {
        out.status = CheckStatus::fail;
        out.counterexample = p.toString() + " turn " + pointName(t.a) + "," + pointName(t.b);
        return;
      }
      std::vector<PointRef> survivors;
      for (const PointRef& pt : p.cyclicOrder())
        if (pt != t.a && pt != t.b) survivors.push_back(pt);
      auto after = r.cyclicOrder();
      for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = 0; j < survivors.size(); ++j) {
          if (i == j) continue;
          ++out.instances;
          if (colorDistance(p, survivors[i], survivors[j]) !=
              colorDistance(r, after[i], after[j])) {
            out.status = CheckStatus::fail;
            out.counterexample = p.toString() + " turn " + pointName(t.a) + "," +
                                 pointName(t.b) + " pair " + pointName(survivors[i]) + "," +
                                 pointName(survivors[j]);
            return;
          }
        }
    }
  });
  return out;
}

Outcome axiomsOnClosures(const Budget& b) {
  Outcome out;
  auto gens = standardGeneratorSets();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ClosureData cd = closureData(gens[i], b.closureCap);
    std::int64_t window = b.window > 0 ? b.window : dataWindow(cd.data, b.closureCap);
    auto bad = checkAxioms(intDataToSet(cd.data.sigma), kccFamily(cd.data), xccFamily(cd.data),
                           window);
    ++out.instances;
    if (!bad.empty()) {
      out.status = CheckStatus::fail;
      out.counterexample = std::string(generatorSetName(i)) + ": " + bad.front();
      return out;
    }
  }
  return out;
}

Outcome sigmaSubgroup(const Budget& b) {
  Outcome out;
  auto gens = standardGeneratorSets();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ClosureData cd = closureData(gens[i], b.closureCap);
    const IntData& s = cd.data.sigma;
    std::int64_t w = 0;
    for (int v : s) w = std::max<std::int64_t>(w, std::abs(v));
    bool ok = s.count(0) && s == symmetrized(s);
    for (int x : s)
      for (int y : s) {
        ++out.instances;
        if (std::abs(x + y) <= w && !s.count(x + y)) ok = false;
      }
    if (!ok) {
      out.status = CheckStatus::fail;
      out.counterexample = std::string(generatorSetName(i)) + ": Sigma-data not group-like";
      return out;
    }
  }
  return out;
}

Outcome fCases(const Budget& b) {
  Outcome out;
  auto gens = standardGeneratorSets();
  CaseKind expected[3] = {CaseKind::O, CaseKind::B, CaseKind::S};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ClosureData cd = closureData(gens[i], b.closureCap);
    ++out.instances;
    CaseKind got = detectCase(cd.result.members);
    bool ok = got == expected[i];
    if (i == 0) ok = ok && cd.data.f == IntData{2};
    if (i == 1) ok = ok && cd.data.f == IntData{1, 2};
    if (i == 2)
      ok = ok && cd.data.f.count(1) && cd.data.f.count(2) && cd.data.f.count(3);
    if (!ok) {
      out.status = CheckStatus::fail;
      std::string fs;
      for (int v : cd.data.f) fs += std::to_string(v) + " ";
      out.counterexample = std::string(generatorSetName(i)) + ": case " + caseName(got) +
                           " F-data {" + fs + "}";
      return out;
    }
  }
  return out;
}

Outcome vCases(const Budget& b) {
  Outcome out;
  auto gens = standardGeneratorSets();
  // Case O and case B: the V/L coupling, tested at the full cap.
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    ClosureData cd = closureData(gens[i], b.closureCap);
    ++out.instances;
    IntData expected;
    if (i == 0)
      expected = cd.data.l.empty() ? IntData{0} : IntData{-2, 0, 2};
    else
      expected = cd.data.l.empty() ? IntData{-1, 0, 1} : IntData{-2, -1, 0, 1, 2};
    if (cd.data.v != expected) {
      out.status = CheckStatus::fail;
      out.counterexample = std::string(generatorSetName(i)) + ": V-data off";
      return out;
    }
  }
  // Case S: V grows with the cap and is symmetric around zero.  The
  // comparison needs room above the generators, so smaller budgets only
  // cover the O/B parts and report the check as skipped.
  if (b.closureCap < 6) {
    out.status = CheckStatus::skipped;
    return out;
  }
  ClosureData small = closureData(gens[2], b.closureCap - 2);
  ClosureData large = closureData(gens[2], b.closureCap);
  ++out.instances;
  bool growing = small.data.v != large.data.v &&
                 std::includes(large.data.v.begin(), large.data.v.end(), small.data.v.begin(),
                               small.data.v.end());
  int reach = (b.closureCap - 2) / 1;
  bool range = true;
  for (int v = 0; v <= std::min(reach, 2); ++v)
    range = range && large.data.v.count(v) && large.data.v.count(-v);
  if (!growing || !range || large.data.v != symmetrized(large.data.v)) {
    out.status = CheckStatus::fail;
    out.counterexample = "<fourblock,singles>: V-data growth violated";
  }
  return out;
}

Outcome caseSZeroL(const Budget& b) {
  Outcome out;
  ClosureData cd = closureData(standardGeneratorSets()[2], b.closureCap);
  Partition coSingle = parsePartition("-:wbwb:[l1 l3][l2][l4]");
  bool present = false;
  for (const Partition& p : cd.result.members) present = present || p == coSingle;
  ++out.instances;
  if (!present || !cd.data.l.count(0)) {
    out.status = CheckStatus::fail;
    out.counterexample = "case S closure misses 0 in L-data";
  }
  return out;
}

Outcome chiLemma(const Budget& b) {
  Outcome out;
  std::mt19937_64 rng(b.seed);
  while (out.instances < b.instances) {
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
    IntSet chi;
    for (std::int64_t r = 0; r <= m / 2; ++r)
      if (rng() % 2) chi = unite(chi, mirror(IntSet::klass(r, m)));
    try {
      auto nf = chiNormalForm(chi, m);
      if (chi != complement(dSubM(IntSet::finiteSet(nf.holes), m)))
        throw Error("reconstruction mismatch");
    } catch (const Error& e) {
      out.status = CheckStatus::fail;
      out.counterexample = "m=" + std::to_string(m) + " chi=" + chi.toString() + ": " + e.what();
      return out;
    }
    ++out.instances;
  }
  return out;
}

Outcome arithmeticForwardAndFuzz(const Budget& b) {
  Outcome out;
  std::mt19937_64 rng(b.seed);
  auto uniformFam = [](const IntSet& l, const IntSet& k) {
    ColorFamily f;
    f.ww = f.bb = l;
    f.wb = f.bw = k;
    return f;
  };
  auto allFam = [](const IntSet& s) {
    ColorFamily f;
    f.ww = f.wb = f.bw = f.bb = s;
    return f;
  };
  // Forward: every table row instantiation satisfies the axioms.
  for (int row = 1; row <= 5; ++row) {
    for (std::int64_t u = 0; u <= 3; ++u) {
      for (std::int64_t m = 1; m <= 6; ++m) {
        for (int rep = 0; rep < 4; ++rep) {
          ArithDescriptor d;
          d.row = row;
          d.u = u;
          d.m = m;
          std::vector<std::int64_t> dd, ee;
          for (std::int64_t x = 0; x <= m / 2; ++x)
            if (rng() % 2) dd.push_back(x);
          for (std::int64_t x = 0; x <= 6; ++x)
            if (rng() % 3 == 0) ee.push_back(x);
          d.D = IntSet::finiteSet(dd);
          d.E = IntSet::finiteSet(ee);
          ArithTuple t = instantiateArith(d);
          ++out.instances;
          auto bad =
              checkAxioms(t.sigma, uniformFam(t.lambda, t.kappa), allFam(t.xi), 120);
          if (!bad.empty()) {
            out.status = CheckStatus::fail;
            out.counterexample = "row " + std::to_string(row) + ": " + bad.front();
            return out;
          }
        }
      }
    }
  }
  // Fuzz: exactly axiom-satisfying families classify into exactly one row.
  int passers = 0;
  while (passers < b.instances / 4 + 10) {
    ArithDescriptor d;
    d.row = 1 + static_cast<int>(rng() % 5);
    d.u = rng() % 3;
    d.m = 1 + rng() % 5;
    std::vector<std::int64_t> dd;
    for (std::int64_t x = 0; x <= d.m / 2; ++x)
      if (rng() % 2) dd.push_back(x);
    d.D = IntSet::finiteSet(dd);
    d.E = rng() % 2 ? IntSet::finiteSet({0, 2}) : IntSet();
    ArithTuple t = instantiateArith(d);
    ColorFamily kf = uniformFam(t.lambda, t.kappa);
    ColorFamily xf = allFam(t.xi);
    if (rng() % 3 == 0)
      kf.wb = unite(kf.wb, IntSet::finiteSet({1 + static_cast<std::int64_t>(rng() % 5)}));
    ++out.instances;
    if (!checkAxioms(t.sigma, kf, xf, 0).empty()) continue;
    ++passers;
    bool collapsed = kf.ww == kf.bb && kf.wb == kf.bw && xf.ww == xf.bb && xf.ww == xf.wb &&
                     xf.ww == xf.bw;
    ArithTuple c{t.sigma, kf.ww, kf.wb, xf.ww};
    auto cls = classifyArith(c);
    if (!collapsed || !cls || instantiateArith(*cls) != c) {
      out.status = CheckStatus::fail;
      out.counterexample = "family from row " + std::to_string(d.row) + " failed to classify";
      return out;
    }
  }
  return out;
}

Outcome mainTheoremConsistency(const Budget& b) {
  Outcome out;
  auto gens = standardGeneratorSets();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ClosureData cd = closureData(gens[i], b.closureCap);
    auto rows = consistentRows(cd.data);
    ++out.instances;
    bool ok = !rows.empty();
    if (i == 0)
      for (const auto& q : rows) ok = ok && rowName(q.row)[0] == 'O';
    if (!ok) {
      out.status = CheckStatus::fail;
      out.counterexample = std::string(generatorSetName(i)) + ": no consistent row";
      return out;
    }
  }
  return out;
}

Outcome s0Membership(const Budget& b) {
  Outcome out;
  int maxPts = std::min(b.maxPoints, 5);
  forAllUpTo(maxPts, [&](const Partition& p) {
    if (!out.counterexample.empty()) return;
    ++out.instances;
    // Independent re-statement of the definition.
    bool expected = true;
    for (const auto& blk : p.blocks()) {
      if (blk.size() > 2) expected = false;
      int s = 0;
      for (const PointRef& pt : blk) s += pointSign(p, pt);
      if (s != 0) expected = false;
      for (const PointRef& a : blk)
        for (const PointRef& c : blk)
          if (!(a == c) && colorDistance(p, a, c) != 0) expected = false;
    }
    std::vector<Partition> v{p};
    bool got = restrictSZero(v).size() == 1;
    if (got != expected || got != inSZero(p)) {
      out.status = CheckStatus::fail;
      out.counterexample = p.toString();
    }
  });
  return out;
}

const std::vector<std::pair<std::string, CheckFn>>& catalog() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"projection_pp_star", projectionPpStar},
      {"delta_antisym_mod_sigma", deltaAntisym},
      {"erase_turn_delta", eraseTurnDelta},
      {"axioms_on_closures", axiomsOnClosures},
      {"sigma_subgroup", sigmaSubgroup},
      {"f_cases", fCases},
      {"v_cases", vCases},
      {"case_s_zero_L", caseSZeroL},
      {"chi_lemma", chiLemma},
      {"arithmetic_forward_and_fuzz", arithmeticForwardAndFuzz},
      {"main_theorem_consistency", mainTheoremConsistency},
      {"s0_membership", s0Membership},
  };
  return table;
}

}  // namespace

std::string CheckReport::line() const {
  const char* st = status == CheckStatus::pass     ? "pass"
                   : status == CheckStatus::fail   ? "fail"
                                                   : "skipped";
  std::ostringstream os;
  os << name << ' ' << st << ' ' << instancesTried << ' ' << elapsedSeconds << "s";
  if (!counterexample.empty()) os << "\n  counterexample: " << counterexample;
  return os.str();
}

std::vector<std::string> checkNames() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : catalog()) out.push_back(name);
  return out;
}

CheckReport runCheck(const std::string& name, const Budget& budget) {
  for (const auto& [n, fn] : catalog()) {
    if (n != name) continue;
    CheckReport r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn(budget);
    auto t1 = std::chrono::steady_clock::now();
    r.status = o.status;
    r.instancesTried = o.instances;
    r.counterexample = o.counterexample;
    r.elapsedSeconds = std::chrono::duration<double>(t1 - t0).count();
    return r;
  }
  throw Error("unknown check '" + name + "'");
}

std::vector<CheckReport> runAllChecks(const Budget& budget) {
  std::vector<CheckReport> out;
  for (const auto& [name, fn] : catalog()) out.push_back(runCheck(name, budget));
  return out;
}

}  // namespace pcat

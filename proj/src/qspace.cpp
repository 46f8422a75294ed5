#include "pcat/qspace.hpp"

#include <algorithm>
#include <sstream>

namespace pcat {

namespace {

const char* kRowNames[] = {"O1", "O2", "O3", "O4", "O5", "O6", "O7",
                           "B1", "B2", "B3", "B4", "B5", "S1", "S2"};

IntSet rangeSet(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
  return IntSet::finiteSet(v);
}

IntSet holeBound(std::int64_t m) { return rangeSet(0, m / 2); }

bool usesUM(QRow r) {
  switch (r) {
    case QRow::O1: case QRow::O2: case QRow::O3:
    case QRow::B1: case QRow::B2: case QRow::B3: case QRow::S1:
      return true;
    default:
      return false;
  }
}
bool usesM(QRow r) { return usesUM(r) || r == QRow::O4; }
bool usesD(QRow r) {
  switch (r) {
    case QRow::B1: case QRow::B2: case QRow::B3: case QRow::S1: return true;
    default: return false;
  }
}
bool usesE(QRow r) { return r == QRow::B4 || r == QRow::B5 || r == QRow::S2; }
bool usesN(QRow r) { return r == QRow::O5 || r == QRow::O6 || r == QRow::O7; }

}  // namespace

const char* rowName(QRow r) { return kRowNames[static_cast<int>(r)]; }

QRow rowFromName(const std::string& name) {
  for (int i = 0; i < 14; ++i)
    if (name == kRowNames[i]) return static_cast<QRow>(i);
  throw Error("unknown row '" + name + "'");
}

std::vector<QRow> allRows() {
  std::vector<QRow> out;
  for (int i = 0; i < 14; ++i) out.push_back(static_cast<QRow>(i));
  return out;
}

void validateDescriptor(const QDescriptor& q) {
  if (q.u < 0) throw Error("descriptor: u must be >= 0");
  if (usesM(q.row) && q.m < 1) throw Error("descriptor: m must be >= 1");
  if (usesD(q.row)) {
    if (!q.D.isFinite()) throw Error("descriptor: D must be finite");
    if (!subsetOf(q.D, holeBound(q.m)))
      throw Error("descriptor: D must lie within {0} u [1..floor(m/2)]");
  }
  if (usesE(q.row) && !subsetOf(q.E, unite(IntSet::finiteSet({0}), IntSet::naturals())))
    throw Error("descriptor: E must lie within {0} u N");
  if (usesN(q.row)) {
    if (!subsetOf(q.N, IntSet::naturals())) throw Error("descriptor: N must be positive");
    if (!isSubsemigroup(q.N)) throw Error("descriptor: N must be a subsemigroup");
  }
}

QTuple instantiate(const QDescriptor& q) {
  validateDescriptor(q);
  const IntSet f2 = IntSet::finiteSet({2});
  const IntSet f12 = IntSet::finiteSet({1, 2});
  const IntSet fN = IntSet::naturals();
  const IntSet v0 = IntSet::finiteSet({0});
  const IntSet v02 = IntSet::finiteSet({-2, 0, 2});
  const IntSet v01 = IntSet::finiteSet({-1, 0, 1});
  const IntSet v012 = IntSet::finiteSet({-2, -1, 0, 1, 2});
  const IntSet vZ = IntSet::integers();
  const IntSet zero = IntSet::finiteSet({0});
  const IntSet none = IntSet();
  auto zmul = [](std::int64_t g) { return IntSet::klass(0, g); };
  const std::int64_t u = q.u, m = q.m;
  const IntSet mZ = zmul(m), twoMZ = zmul(2 * m);
  const IntSet mOdd = IntSet::klass(m, 2 * m);
  const IntSet xDm = complement(dSubM(q.D, m));
  const IntSet xE0 = complement(mirror(q.E));
  const IntSet xN0 = complement(mirror(q.N));
  const IntSet xN0p = complement(unite(mirror(q.N), zero));

  switch (q.row) {
    case QRow::O1: return {f2, v02, zmul(2 * u * m), mZ, mZ, vZ};
    case QRow::O2: return {f2, v02, zmul(2 * u * m), mOdd, twoMZ, vZ};
    case QRow::O3: return {f2, v02, zmul(2 * u * m), mOdd, twoMZ, complement(mZ)};
    case QRow::O4: return {f2, v0, zero, none, mZ, vZ};
    case QRow::O5: return {f2, v02, zero, zero, zero, xN0};
    case QRow::O6: return {f2, v0, zero, none, zero, xN0};
    case QRow::O7: return {f2, v0, zero, none, zero, xN0p};
    case QRow::B1: return {f12, v012, zmul(u * m), mZ, mZ, xDm};
    case QRow::B2: return {f12, v012, zmul(2 * u * m), mOdd, twoMZ, xDm};
    case QRow::B3: return {f12, v01, zmul(u * m), none, mZ, xDm};
    case QRow::B4: return {f12, v012, zero, zero, zero, xE0};
    case QRow::B5: return {f12, v01, zero, none, zero, xE0};
    case QRow::S1: return {fN, vZ, zmul(u * m), mZ, mZ, xDm};
    case QRow::S2: return {fN, vZ, zero, zero, zero, xE0};
  }
  throw Error("bad row");
}

ArithTuple instantiateArith(const ArithDescriptor& d) {
  const IntSet zero = IntSet::finiteSet({0});
  const IntSet none = IntSet();
  auto zmul = [](std::int64_t g) { return IntSet::klass(0, g); };
  const std::int64_t u = d.u, m = d.m;
  const IntSet xDm = complement(dSubM(d.D, m));
  const IntSet xE0 = complement(mirror(d.E));
  switch (d.row) {
    case 1: return {zmul(u * m), zmul(m), zmul(m), xDm};
    case 2: return {zmul(2 * u * m), IntSet::klass(m, 2 * m), zmul(2 * m), xDm};
    case 3: return {zmul(u * m), none, zmul(m), xDm};
    case 4: return {zero, zero, zero, xE0};
    case 5: return {zero, none, zero, xE0};
  }
  throw Error("arithmetic row must be 1..5");
}

namespace {

std::optional<QDescriptor> tryClassifyRow(QRow row, const QTuple& t) {
  QDescriptor q;
  q.row = row;
  auto genOf = [](const IntSet& s) { return isSubgroup(s); };

  if (usesM(row)) {
    auto gk = genOf(t.k);
    if (!gk || *gk < 1) return std::nullopt;
    bool doubled = row == QRow::O2 || row == QRow::O3 || row == QRow::B2;
    if (doubled) {
      if (*gk % 2 != 0 || *gk < 2) return std::nullopt;
      q.m = *gk / 2;
    } else {
      q.m = *gk;
    }
  }
  if (usesUM(row)) {
    auto gs = genOf(t.s);
    if (!gs) return std::nullopt;
    bool sDoubled = row == QRow::O1 || row == QRow::O2 || row == QRow::O3 || row == QRow::B2;
    std::int64_t unit = sDoubled ? 2 * q.m : q.m;
    if (*gs == 0) {
      q.u = 0;
    } else {
      if (*gs % unit != 0) return std::nullopt;
      q.u = *gs / unit;
    }
  }
  if (usesD(row)) {
    IntSet d = intersect(complement(t.x), holeBound(q.m));
    if (!d.isFinite()) return std::nullopt;
    q.D = d;
  }
  if (usesE(row)) {
    IntSet e = intersect(complement(t.x), unite(IntSet::finiteSet({0}), IntSet::naturals()));
    q.E = e;
  }
  if (usesN(row)) {
    IntSet n = intersect(complement(t.x), IntSet::naturals());
    if (!isSubsemigroup(n)) return std::nullopt;
    q.N = n;
  }
  try {
    if (instantiate(q) == t) return q;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

std::optional<QDescriptor> classify(const QTuple& t) {
  for (QRow row : allRows())
    if (auto q = tryClassifyRow(row, t)) return q;
  return std::nullopt;
}

std::optional<ArithDescriptor> classifyArith(const ArithTuple& t) {
  auto gs = isSubgroup(t.sigma);
  if (!gs) return std::nullopt;
  const std::int64_t k = *gs;
  const std::int64_t d = t.kappa.minPositive().value_or(0);
  const std::int64_t l = t.lambda.minPositive().value_or(0);
  const IntSet zeroAndUp = unite(IntSet::finiteSet({0}), IntSet::naturals());

  ArithDescriptor out;
  if (t.lambda.isEmpty()) {
    if (d == 0) {
      out.row = 5;
      out.E = intersect(complement(t.xi), zeroAndUp);
    } else {
      out.row = 3;
      out.m = d;
      if (k % d != 0) return std::nullopt;
      out.u = k / d;
      out.D = intersect(complement(t.xi), holeBound(d));
      if (!out.D.isFinite()) return std::nullopt;
    }
  } else if (l == 0) {
    out.row = 4;
    out.E = intersect(complement(t.xi), zeroAndUp);
  } else if (t.lambda == IntSet::klass(l, 2 * l) && t.kappa == IntSet::klass(0, 2 * l)) {
    out.row = 2;
    out.m = l;
    if (k % (2 * l) != 0) return std::nullopt;
    out.u = k / (2 * l);
    out.D = intersect(complement(t.xi), holeBound(l));
    if (!out.D.isFinite()) return std::nullopt;
  } else if (t.lambda == IntSet::klass(0, l) && t.kappa == IntSet::klass(0, l)) {
    out.row = 1;
    out.m = l;
    if (k % l != 0) return std::nullopt;
    out.u = k / l;
    out.D = intersect(complement(t.xi), holeBound(l));
    if (!out.D.isFinite()) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (instantiateArith(out) == t) return out;
  return std::nullopt;
}

const IntSet& ColorFamily::at(Color c1, Color c2) const {
  if (c1 == Color::white) return c2 == Color::white ? ww : wb;
  return c2 == Color::white ? bw : bb;
}
IntSet& ColorFamily::at(Color c1, Color c2) {
  if (c1 == Color::white) return c2 == Color::white ? ww : wb;
  return c2 == Color::white ? bw : bb;
}

std::vector<std::string> checkAxioms(const IntSet& sigma, const ColorFamily& kappa,
                                     const ColorFamily& xi, std::int64_t window) {
  std::vector<std::string> bad;
  auto clip = [&](const IntSet& s) {
    return window > 0 ? intersect(s, rangeSet(-window, window)) : s;
  };
  auto included = [&](const IntSet& lhs, const IntSet& rhs, const std::string& what) {
    if (!subsetOf(clip(lhs), rhs)) bad.push_back(what);
  };
  const Color W = Color::white, B = Color::black;
  const Color colors[2] = {W, B};
  auto inv = [](Color c) { return inverse(c); };
  auto name = [](Color c) { return c == Color::white ? 'w' : 'b'; };

  // (i) sigma is a subgroup: 0 membership, symmetry, additive closure.
  if (!sigma.contains(0)) bad.push_back("(i) 0 not in sigma");
  if (clip(sigma) != clip(negate(sigma))) bad.push_back("(i) sigma not symmetric");
  included(sumset(sigma, sigma), sigma, "(i) sigma not closed under addition");

  for (int fam = 0; fam < 2; ++fam) {
    const ColorFamily& om = fam == 0 ? kappa : xi;
    std::string fn = fam == 0 ? "kappa" : "xi";
    for (Color c1 : colors) {
      for (Color c2 : colors) {
        std::string cc = std::string(1, name(c1)) + name(c2);
        included(sumset(om.at(c1, c2), sigma), om.at(c1, c2), "(ii) " + fn + "[" + cc + "]");
        included(om.at(c1, c2), negate(om.at(inv(c2), inv(c1))), "(iii) " + fn + "[" + cc + "]");
        included(om.at(c1, c2), sumset(negate(om.at(c2, c1)), sigma),
                 "(iv) " + fn + "[" + cc + "]");
      }
    }
  }
  for (Color c1 : colors)
    for (Color c2 : colors) {
      std::string cc = std::string(1, name(c1)) + name(c2);
      included(xi.at(c1, c2),
               unite(xi.at(c1, inv(c2)), sumset(negate(xi.at(c2, inv(c1))), sigma)),
               "(v) xi[" + cc + "]");
    }
  if (!kappa.at(W, B).contains(0) || !kappa.at(B, W).contains(0))
    bad.push_back("(vi) 0 not in kappa[wb] and kappa[bw]");
  for (Color c1 : colors)
    for (Color c2 : colors)
      for (Color c3 : colors) {
        std::string ccc = std::string(1, name(c1)) + name(c2) + name(c3);
        included(sumset(kappa.at(c1, c2), kappa.at(inv(c2), c3)), kappa.at(c1, c3),
                 "(vii) " + ccc);
        included(sumset(kappa.at(c1, c2), xi.at(inv(c2), c3)), xi.at(c1, c3),
                 "(viii) " + ccc);
      }
  return bad;
}

IntSet intDataToSet(const IntData& d) {
  std::vector<std::int64_t> v(d.begin(), d.end());
  return IntSet::finiteSet(v);
}

bool zLeq(const Analysis& z, const QDescriptor& q) {
  QTuple t = instantiate(q);
  if (!subsetOf(intDataToSet(z.f), t.f)) return false;
  if (!subsetOf(intDataToSet(z.v), t.v)) return false;
  if (!subsetOf(intDataToSet(z.sigma), t.s)) return false;
  if (!subsetOf(intDataToSet(z.l), t.l)) return false;
  if (!subsetOf(intDataToSet(z.k), t.k)) return false;
  if (!subsetOf(intDataToSet(z.x), t.x)) return false;
  const int w = colorIdx(Color::white), b = colorIdx(Color::black);
  if (!subsetOf(intDataToSet(z.kcc[w][w]), t.l)) return false;
  if (!subsetOf(intDataToSet(z.kcc[b][b]), t.l)) return false;
  if (!subsetOf(intDataToSet(z.kcc[w][b]), t.k)) return false;
  if (!subsetOf(intDataToSet(z.kcc[b][w]), t.k)) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!subsetOf(intDataToSet(z.xcc[i][j]), t.x)) return false;
  return true;
}

namespace {

std::int64_t maxAbsOf(const IntData& d) {
  std::int64_t m = 0;
  for (int v : d) m = std::max(m, static_cast<std::int64_t>(std::abs(v)));
  return m;
}

// Greedy maximal subsemigroup whose mirror avoids the observed x-data.
IntSet fitSemigroup(const IntSet& xData, std::int64_t bound) {
  std::vector<std::int64_t> gens;
  IntSet current;
  for (std::int64_t g = 1; g <= bound; ++g) {
    std::vector<std::int64_t> trial = gens;
    trial.push_back(g);
    IntSet cand = semigroupFromGenerators(trial);
    if (intersect(mirror(cand), xData).isEmpty()) {
      gens = trial;
      current = cand;
    }
  }
  return current;
}

}  // namespace

std::vector<QDescriptor> consistentRows(const Analysis& z, const ConsistencyOptions& opts) {
  const IntSet xData = intDataToSet(z.x);
  std::int64_t maxObs = std::max({maxAbsOf(z.l), maxAbsOf(z.k), maxAbsOf(z.x),
                                  maxAbsOf(z.sigma)});
  const std::int64_t mMax = maxObs + opts.mSlack;
  const std::int64_t fitBound = maxObs + opts.mSlack + 2;

  std::vector<QDescriptor> out;
  auto propose = [&](QDescriptor q) {
    try {
      if (zLeq(z, q)) out.push_back(std::move(q));
    } catch (const Error&) {
    }
  };

  for (QRow row : allRows()) {
    if (usesN(row)) {
      QDescriptor q;
      q.row = row;
      q.N = fitSemigroup(xData, fitBound);
      propose(q);
      continue;
    }
    if (usesE(row)) {
      QDescriptor q;
      q.row = row;
      q.E = setMinus(unite(IntSet::finiteSet({0}), IntSet::naturals()), mirror(xData));
      propose(q);
      continue;
    }
    for (std::int64_t m = 1; m <= std::max<std::int64_t>(mMax, 1); ++m) {
      QDescriptor base;
      base.row = row;
      base.m = m;
      if (usesD(row)) {
        std::vector<std::int64_t> holes;
        for (std::int64_t dd = 0; dd <= m / 2; ++dd)
          if (intersect(dSubM(IntSet::finiteSet({dd}), m), xData).isEmpty()) holes.push_back(dd);
        base.D = IntSet::finiteSet(holes);
      }
      if (usesUM(row)) {
        for (std::int64_t u = 0; u <= opts.uMax; ++u) {
          QDescriptor q = base;
          q.u = u;
          propose(q);
        }
      } else {
        propose(base);
      }
    }
  }

  // When block sizes were observed, keep only the smallest admissible
  // f-family; the three families are nested, so larger ones carry no
  // additional information about the observed data.
  if (!z.f.empty()) {
    IntSet f = intDataToSet(z.f);
    bool isO = subsetOf(f, IntSet::finiteSet({2}));
    bool isB = subsetOf(f, IntSet::finiteSet({1, 2}));
    auto family = [&](QRow r) {
      int i = static_cast<int>(r);
      return i <= static_cast<int>(QRow::O7) ? 0 : i <= static_cast<int>(QRow::B5) ? 1 : 2;
    };
    int want = isO ? 0 : isB ? 1 : 2;
    std::erase_if(out, [&](const QDescriptor& q) { return family(q.row) != want; });
  }
  return out;
}

std::string QDescriptor::toString() const {
  std::ostringstream os;
  os << "row=" << rowName(row) << " u=" << u << " m=" << m << " D=" << D.toString();
  if (usesE(row)) os << " E=" << E.toString();
  if (usesN(row)) os << " N=" << N.toString();
  return os.str();
}

QDescriptor QDescriptor::parse(const std::string& text) {
  QDescriptor q;
  std::istringstream in(text);
  std::string tok;
  bool haveRow = false;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("descriptor: expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "row") {
      q.row = rowFromName(val);
      haveRow = true;
    } else if (key == "u") {
      q.u = std::stoll(val);
    } else if (key == "m") {
      q.m = std::stoll(val);
    } else if (key == "D") {
      q.D = parseIntSet(val);
    } else if (key == "E") {
      q.E = parseIntSet(val);
    } else if (key == "N") {
      q.N = parseIntSet(val);
    } else {
      throw Error("descriptor: unknown key '" + key + "'");
    }
  }
  if (!haveRow) throw Error("descriptor: missing row=");
  validateDescriptor(q);
  return q;
}

std::string QTuple::toString() const {
  return f.toString() + ";" + v.toString() + ";" + s.toString() + ";" + l.toString() + ";" +
         k.toString() + ";" + x.toString();
}

QTuple QTuple::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 6) throw Error("tuple literal needs six ';'-separated components");
  return QTuple{parseIntSet(parts[0]), parseIntSet(parts[1]), parseIntSet(parts[2]),
                parseIntSet(parts[3]), parseIntSet(parts[4]), parseIntSet(parts[5])};
}

}  // namespace pcat

#include "pcat/intset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace pcat {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

std::int64_t lcmChecked(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t l = a / g * b;
  if (l > 4'000'000) throw Error("intset period blow-up");
  return l;
}

bool sortedContains(const std::vector<std::int64_t>& v, std::int64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<std::int64_t> sortedUnique(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool IntSet::posTail(std::int64_t r) const { return sortedContains(posRes_, mod(r, m_)); }
bool IntSet::negTail(std::int64_t r) const { return sortedContains(negRes_, mod(r, m_)); }

bool IntSet::contains(std::int64_t x) const {
  if (x > w_) return posTail(x);
  if (x < -w_) return negTail(x);
  return sortedContains(mid_, x);
}

bool IntSet::isEmpty() const { return posRes_.empty() && negRes_.empty() && mid_.empty(); }
bool IntSet::isFinite() const { return posRes_.empty() && negRes_.empty(); }

std::vector<std::int64_t> IntSet::elements() const {
  if (!isFinite()) throw Error("elements() of an infinite set");
  return mid_;
}

std::vector<std::int64_t> IntSet::elementsIn(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::optional<std::int64_t> IntSet::minPositive() const {
  for (std::int64_t x : mid_)
    if (x > 0) return x;
  if (!posRes_.empty())
    for (std::int64_t x = std::max<std::int64_t>(w_, 0) + 1;; ++x)
      if (posTail(x)) return x;
  return std::nullopt;
}

void IntSet::normalize() {
  // Minimal period: smallest divisor of m under which both tail patterns are
  // shift-invariant.
  for (std::int64_t d = 1; d <= m_; ++d) {
    if (m_ % d != 0) continue;
    bool ok = true;
    for (std::int64_t r = 0; r < m_ && ok; ++r) {
      if (posTail(r) != posTail(r + d)) ok = false;
      if (negTail(r) != negTail(r + d)) ok = false;
    }
    if (ok) {
      std::vector<std::int64_t> pr, nr;
      for (std::int64_t r = 0; r < d; ++r) {
        if (posTail(r)) pr.push_back(r);
        if (negTail(r)) nr.push_back(r);
      }
      m_ = d;
      posRes_ = std::move(pr);
      negRes_ = std::move(nr);
      break;
    }
  }
  // Minimal window: shrink while the boundary agrees with the tails.
  std::set<std::int64_t> mid(mid_.begin(), mid_.end());
  while (w_ > 0) {
    bool memHi = mid.count(w_) > 0, memLo = mid.count(-w_) > 0;
    if (memHi != posTail(w_) || memLo != negTail(-w_)) break;
    mid.erase(w_);
    mid.erase(-w_);
    --w_;
  }
  if (w_ == 0) {
    bool mem0 = mid.count(0) > 0;
    // w = 0 still stores 0 explicitly; nothing further to shrink.
    (void)mem0;
  }
  mid_.assign(mid.begin(), mid.end());
}

IntSet IntSet::raw(std::int64_t m, std::vector<std::int64_t> posRes,
                   std::vector<std::int64_t> negRes, std::int64_t w,
                   std::vector<std::int64_t> mid) {
  if (m < 1) throw Error("intset period must be >= 1");
  IntSet s;
  s.m_ = m;
  s.posRes_ = sortedUnique(std::move(posRes));
  s.negRes_ = sortedUnique(std::move(negRes));
  s.w_ = w;
  s.mid_ = sortedUnique(std::move(mid));
  for (std::int64_t x : s.mid_)
    if (x < -w || x > w) throw Error("intset window member out of range");
  s.normalize();
  return s;
}

IntSet IntSet::finiteSet(std::vector<std::int64_t> elems) {
  elems = sortedUnique(std::move(elems));
  std::int64_t w = 0;
  for (std::int64_t x : elems) w = std::max(w, std::abs(x));
  return raw(1, {}, {}, w, std::move(elems));
}

IntSet IntSet::klass(std::int64_t a, std::int64_t m) {
  if (m == 0) return finiteSet({a});
  m = std::abs(m);
  std::int64_t r = mod(a, m);
  std::vector<std::int64_t> mid;
  for (std::int64_t x = -m; x <= m; ++x)
    if (mod(x, m) == r) mid.push_back(x);
  return raw(m, {r}, {r}, m, std::move(mid));
}

IntSet IntSet::upFrom(std::int64_t a, std::int64_t m) {
  if (m < 1) throw Error("upFrom needs m >= 1");
  std::int64_t w = std::abs(a) + m;
  std::vector<std::int64_t> mid;
  for (std::int64_t x = a; x <= w; x += m) mid.push_back(x);
  return raw(m, {mod(a, m)}, {}, w, std::move(mid));
}

IntSet IntSet::downFrom(std::int64_t a, std::int64_t m) { return negate(upFrom(-a, m)); }

// op: 0 union, 1 intersection, 2 difference.
IntSet combinePointwise(const IntSet& a, const IntSet& b, int op) {
  auto f = [op](bool x, bool y) {
    switch (op) {
      case 0: return x || y;
      case 1: return x && y;
      default: return x && !y;
    }
  };
  std::int64_t m = lcmChecked(a.m_, b.m_);
  std::int64_t w = std::max(a.w_, b.w_);
  std::vector<std::int64_t> pos, neg, mid;
  for (std::int64_t r = 0; r < m; ++r) {
    if (f(a.posTail(r), b.posTail(r))) pos.push_back(r);
    if (f(a.negTail(r), b.negTail(r))) neg.push_back(r);
  }
  for (std::int64_t x = -w; x <= w; ++x)
    if (f(a.contains(x), b.contains(x))) mid.push_back(x);
  return IntSet::raw(m, std::move(pos), std::move(neg), w, std::move(mid));
}

IntSet unite(const IntSet& a, const IntSet& b) { return combinePointwise(a, b, 0); }
IntSet intersect(const IntSet& a, const IntSet& b) { return combinePointwise(a, b, 1); }
IntSet setMinus(const IntSet& a, const IntSet& b) { return combinePointwise(a, b, 2); }
IntSet complement(const IntSet& a) { return setMinus(IntSet::integers(), a); }

IntSet negate(const IntSet& a) {
  std::vector<std::int64_t> pos, neg, mid;
  for (std::int64_t r = 0; r < a.m_; ++r) {
    if (a.negTail(-r)) pos.push_back(r);
    if (a.posTail(-r)) neg.push_back(r);
  }
  for (std::int64_t x : a.mid_) mid.push_back(-x);
  return IntSet::raw(a.m_, std::move(pos), std::move(neg), a.w_, std::move(mid));
}

IntSet shiftBy(const IntSet& a, std::int64_t k) {
  std::vector<std::int64_t> pos, neg, mid;
  for (std::int64_t r = 0; r < a.m_; ++r) {
    if (a.posTail(r - k)) pos.push_back(r);
    if (a.negTail(r - k)) neg.push_back(r);
  }
  std::int64_t w = a.w_ + std::abs(k);
  for (std::int64_t x = -w; x <= w; ++x)
    if (a.contains(x - k)) mid.push_back(x);
  return IntSet::raw(a.m_, std::move(pos), std::move(neg), w, std::move(mid));
}

IntSet scaleBy(const IntSet& a, std::int64_t c) {
  if (a.isEmpty()) return IntSet();
  if (c == 0) return IntSet::finiteSet({0});
  if (c < 0) return negate(scaleBy(a, -c));
  std::int64_t m = a.m_ * c;
  if (m > 4'000'000) throw Error("intset period blow-up");
  std::vector<std::int64_t> pos, neg, mid;
  for (std::int64_t r = 0; r < a.m_; ++r) {
    if (a.posTail(r)) pos.push_back(mod(r * c, m));
    if (a.negTail(r)) neg.push_back(mod(r * c, m));
  }
  std::int64_t w = a.w_ * c;
  for (std::int64_t x : a.mid_) mid.push_back(x * c);
  return IntSet::raw(m, std::move(pos), std::move(neg), w, std::move(mid));
}

namespace {

IntSet tailOnly(const IntSet& s, bool positive);

// Sum of two one-sided tails on the same side.
IntSet sumSameSide(const IntSet& a, const IntSet& b, bool positive) {
  // Positive case; negative handled by reflection.
  if (!positive) return negate(sumSameSide(negate(a), negate(b), true));
  std::int64_t g = std::gcd(a.period(), b.period());
  std::int64_t L = lcmChecked(a.period(), b.period());
  std::int64_t lo = a.window() + b.window() + 2;
  std::int64_t W = a.window() + b.window() + L + g + 1;
  std::vector<std::int64_t> pos;
  for (std::int64_t ra = 0; ra < a.period(); ++ra)
    if (a.contains(a.window() + 1 + mod(ra - (a.window() + 1), a.period())))
      for (std::int64_t rb = 0; rb < b.period(); ++rb)
        if (b.contains(b.window() + 1 + mod(rb - (b.window() + 1), b.period())))
          pos.push_back(mod(ra + rb, g));
  // Boundary zone: decide each candidate by direct search.
  std::vector<std::int64_t> mid;
  for (std::int64_t z = lo; z <= W; ++z) {
    bool member = false;
    for (std::int64_t x = a.window() + 1; x <= z - b.window() - 1 && !member; ++x)
      if (a.contains(x) && b.contains(z - x)) member = true;
    if (member) mid.push_back(z);
  }
  return IntSet::raw(g, std::move(pos), {}, W, std::move(mid));
}

// Sum of a positive tail and a negative tail: full residue classes.
IntSet sumOppositeSides(const IntSet& pos, const IntSet& neg) {
  std::int64_t g = std::gcd(pos.period(), neg.period());
  std::vector<std::int64_t> res;
  for (std::int64_t ra = 0; ra < pos.period(); ++ra) {
    if (!pos.contains(pos.window() + 1 + mod(ra - (pos.window() + 1), pos.period()))) continue;
    for (std::int64_t rb = 0; rb < neg.period(); ++rb) {
      if (!neg.contains(-(neg.window() + 1) - mod(-(neg.window() + 1) - rb, neg.period())))
        continue;
      res.push_back(mod(ra + rb, g));
    }
  }
  IntSet out;
  for (std::int64_t r : sortedUnique(res)) out = unite(out, IntSet::klass(r, g));
  return out;
}

IntSet tailOnly(const IntSet& s, bool positive) {
  // Keep only the strict tail beyond the window; everything else dropped.
  IntSet ray = positive ? IntSet::upFrom(s.window() + 1, 1) : IntSet::downFrom(-s.window() - 1, 1);
  return intersect(s, ray);
}

}  // namespace

IntSet sumset(const IntSet& a, const IntSet& b) {
  if (a.isEmpty() || b.isEmpty()) return IntSet();
  if (a.isFinite() && b.isFinite()) {
    std::vector<std::int64_t> out;
    for (std::int64_t x : a.elements())
      for (std::int64_t y : b.elements()) out.push_back(x + y);
    return IntSet::finiteSet(std::move(out));
  }
  if (a.isFinite()) return sumset(b, a);
  if (b.isFinite()) {
    IntSet out;
    for (std::int64_t y : b.elements()) out = unite(out, shiftBy(a, y));
    return out;
  }

  // Both infinite: split into negative tail, window part, positive tail.
  IntSet aPos = tailOnly(a, true), aNeg = tailOnly(a, false);
  IntSet bPos = tailOnly(b, true), bNeg = tailOnly(b, false);
  IntSet aMid = IntSet::finiteSet(a.elementsIn(-a.window(), a.window()));
  IntSet bMid = IntSet::finiteSet(b.elementsIn(-b.window(), b.window()));

  IntSet out;
  auto add = [&out](const IntSet& piece) { out = unite(out, piece); };
  if (!aPos.isEmpty() && !bPos.isEmpty()) add(sumSameSide(aPos, bPos, true));
  if (!aNeg.isEmpty() && !bNeg.isEmpty()) add(sumSameSide(aNeg, bNeg, false));
  if (!aPos.isEmpty() && !bNeg.isEmpty()) add(sumOppositeSides(aPos, bNeg));
  if (!aNeg.isEmpty() && !bPos.isEmpty()) add(sumOppositeSides(bPos, aNeg));
  if (!aMid.isEmpty()) add(sumset(b, aMid));
  if (!bMid.isEmpty()) {
    if (!aPos.isEmpty()) add(sumset(aPos, bMid));
    if (!aNeg.isEmpty()) add(sumset(aNeg, bMid));
  }
  return out;
}

bool subsetOf(const IntSet& a, const IntSet& b) { return setMinus(a, b).isEmpty(); }

IntSet linearCombine(std::int64_t x, const IntSet& a, std::int64_t y, const IntSet& b) {
  if (a.isEmpty() || b.isEmpty()) return IntSet();
  return sumset(scaleBy(a, x), scaleBy(b, y));
}

IntSet mirror(const IntSet& s) { return unite(s, negate(s)); }

IntSet periodicSymmetrize(const IntSet& s, std::int64_t m) {
  IntSet sym = unite(s, shiftBy(negate(s), m));
  if (m == 0) return sym;
  return sumset(sym, IntSet::klass(0, m));
}

IntSet dSubM(const IntSet& d, std::int64_t m) { return periodicSymmetrize(d, m); }

IntSet dPrimeSubM(const IntSet& d, std::int64_t m) {
  return periodicSymmetrize(unite(d, IntSet::finiteSet({0})), m);
}

std::optional<std::int64_t> isSubgroup(const IntSet& s) {
  if (!s.contains(0)) return std::nullopt;
  auto d = s.minPositive();
  if (!d) return s == IntSet::finiteSet({0}) ? std::optional<std::int64_t>(0) : std::nullopt;
  return s == IntSet::klass(0, *d) ? std::optional<std::int64_t>(*d) : std::nullopt;
}

IntSet semigroupFromGenerators(const std::vector<std::int64_t>& gens) {
  for (std::int64_t g : gens)
    if (g < 1) throw Error("semigroup generators must be positive");
  if (gens.empty()) return IntSet();
  std::int64_t g = 0;
  for (std::int64_t x : gens) g = std::gcd(g, x);
  std::vector<std::int64_t> scaled;
  for (std::int64_t x : gens) scaled.push_back(x / g);
  std::int64_t maxGen = *std::max_element(scaled.begin(), scaled.end());

  // Reachability by dynamic programming, extended until a full run of
  // maxGen consecutive reachable values appears (the conductor).
  std::vector<char> reach;
  std::int64_t bound = maxGen * maxGen + 2 * maxGen + 2;
  std::int64_t conductor = -1;
  while (conductor < 0) {
    reach.assign(bound + 1, 0);
    reach[0] = 1;
    for (std::int64_t x = 1; x <= bound; ++x)
      for (std::int64_t s : scaled)
        if (x >= s && reach[x - s]) {
          reach[x] = 1;
          break;
        }
    std::int64_t run = 0;
    for (std::int64_t x = 1; x <= bound; ++x) {
      run = reach[x] ? run + 1 : 0;
      if (run >= maxGen) {
        conductor = x - maxGen + 1;
        break;
      }
    }
    bound *= 2;
    if (bound > 100'000'000) throw Error("semigroup closure too large");
  }

  std::vector<std::int64_t> mid;
  for (std::int64_t x = 1; x <= conductor; ++x)
    if (reach[x]) mid.push_back(x * g);
  std::int64_t w = conductor * g;
  return IntSet::raw(g, {0}, {}, w, std::move(mid));
}

bool isSubsemigroup(const IntSet& s) {
  IntSet p = intersect(s, IntSet::naturals());
  if (p.isEmpty()) return true;
  return subsetOf(sumset(p, p), p);
}

ChiNormalForm chiNormalForm(const IntSet& chi, std::int64_t m) {
  if (m < 1) throw Error("chi normal form needs m >= 1");
  if (chi != negate(chi)) throw Error("chi must be symmetric");
  if (chi != shiftBy(chi, m)) throw Error("chi must be m-periodic");

  auto rangeSet = [](std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
    return IntSet::finiteSet(v);
  };
  std::int64_t half = m / 2;
  IntSet zeroToHalf = rangeSet(0, half);
  IntSet zeroToM1 = rangeSet(0, m - 1);
  IntSet oneToM1 = rangeSet(1, m - 1);

  // (a) chi = (chi cap ({0} u [1..m-1]))_m
  if (chi != periodicSymmetrize(intersect(chi, zeroToM1), m))
    throw Error("chi normal form: identity (a) fails");
  // (b) chi cap [1..m-1] = m - (chi cap [1..m-1])
  IntSet inner = intersect(chi, oneToM1);
  if (inner != shiftBy(negate(inner), m)) throw Error("chi normal form: identity (b) fails");
  // (c) chi = (chi cap ({0} u [1..floor(m/2)]))_m
  IntSet base = intersect(chi, zeroToHalf);
  if (chi != periodicSymmetrize(base, m)) throw Error("chi normal form: identity (c) fails");
  // (d) chi = Z \ D_m with D = ({0} u [1..floor(m/2)]) \ chi
  IntSet holes = setMinus(zeroToHalf, chi);
  if (chi != complement(dSubM(holes, m))) throw Error("chi normal form: identity (d) fails");

  return ChiNormalForm{base.elements(), holes.elements()};
}

// ---------------------------------------------------------------- literals

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skipSpace() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skipSpace();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eatWord(const std::string& w) {
    skipSpace();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  char peek() {
    skipSpace();
    return i < s.size() ? s[i] : '\0';
  }
  std::int64_t integer() {
    skipSpace();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw Error("intset literal: expected integer at '" + s.substr(start) + "'");
    return std::stoll(s.substr(start, i - start));
  }
};

IntSet parseTerm(Lexer& lx) {
  lx.skipSpace();
  if (lx.eat('{')) {
    std::vector<std::int64_t> elems;
    if (!lx.eat('}')) {
      do {
        elems.push_back(lx.integer());
      } while (lx.eat(','));
      if (!lx.eat('}')) throw Error("intset literal: missing '}'");
    }
    return IntSet::finiteSet(std::move(elems));
  }
  if (lx.eatWord("Z")) return IntSet::integers();
  if (lx.eatWord("N")) return IntSet::naturals();

  std::int64_t first = lx.integer();
  if (lx.eatWord("Z")) return IntSet::klass(0, first);  // mZ
  if (lx.eatWord("N")) {
    if (first < 1) throw Error("intset literal: mN needs m >= 1");
    return IntSet::upFrom(first, first);  // mN = {m, 2m, ...}
  }
  if (lx.eat('+')) {
    std::int64_t m = lx.integer();
    if (lx.eatWord("Z")) return IntSet::klass(first, m);
    if (lx.eatWord("N")) return IntSet::upFrom(first, m);
    throw Error("intset literal: expected Z or N after '+'");
  }
  if (lx.eat('-')) {
    std::int64_t m = lx.integer();
    if (lx.eatWord("N")) return IntSet::downFrom(first, m);
    throw Error("intset literal: expected N after '-'");
  }
  throw Error("intset literal: lone integer (write {n} for a singleton)");
}

}  // namespace

IntSet parseIntSet(const std::string& text) {
  Lexer lx{text};
  lx.skipSpace();
  bool comp = false, mirr = false;
  while (true) {
    if (lx.eatWord("+-")) {
      if (mirr) throw Error("intset literal: repeated '+-'");
      mirr = true;
      continue;
    }
    if (lx.peek() == '!' && lx.eat('!')) {
      if (comp) throw Error("intset literal: repeated '!'");
      comp = true;
      continue;
    }
    break;
  }
  IntSet out = parseTerm(lx);
  while (lx.eat('|')) out = unite(out, parseTerm(lx));
  lx.skipSpace();
  if (lx.i != lx.s.size()) throw Error("intset literal: trailing input '" + lx.s.substr(lx.i) + "'");
  if (mirr) out = mirror(out);
  if (comp) out = complement(out);
  return out;
}

namespace {

std::string fmtFinite(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << '}';
  return os.str();
}

std::string classTerm(std::int64_t r, std::int64_t m) {
  if (m == 1) return "Z";
  if (r == 0) return std::to_string(m) + "Z";
  return std::to_string(r) + "+" + std::to_string(m) + "Z";
}

}  // namespace

std::string IntSet::toString() const {
  if (isFinite()) return fmtFinite(mid_);
  if (*this == integers()) return "Z";
  IntSet comp = complement(*this);
  if (comp.isFinite()) return "!" + fmtFinite(comp.elements());

  std::vector<std::string> terms;
  std::vector<std::int64_t> sporadic;
  std::vector<char> claimed(2 * w_ + 1, 0);  // offset by w_
  auto claim = [&](std::int64_t x) {
    if (x >= -w_ && x <= w_) claimed[x + w_] = 1;
  };

  for (std::int64_t r = 0; r < m_; ++r) {
    bool p = posTail(r), n = negTail(r);
    if (!p && !n) continue;
    bool full = p && n;
    if (full) {
      // Use r + mZ only when the window agrees on the whole class.
      for (std::int64_t x = -w_; x <= w_ && full; ++x)
        if (mod(x, m_) == r && !contains(x)) full = false;
    }
    if (full) {
      terms.push_back(classTerm(r, m_));
      for (std::int64_t x = -w_; x <= w_; ++x)
        if (mod(x, m_) == r) claim(x);
    } else {
      if (p) {
        std::int64_t a = w_ + 1 + mod(r - (w_ + 1), m_);
        if (a == 1 && m_ == 1)
          terms.push_back("N");
        else
          terms.push_back(std::to_string(a) + "+" + std::to_string(m_) + "N");
      }
      if (n) {
        std::int64_t a = -(w_ + 1) - mod(-(r + w_ + 1), m_);
        terms.push_back(std::to_string(a) + "-" + std::to_string(m_) + "N");
      }
    }
  }
  for (std::int64_t x : mid_)
    if (!claimed[x + w_]) sporadic.push_back(x);
  if (!sporadic.empty()) terms.insert(terms.begin(), fmtFinite(sporadic));
  if (terms.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += '|';
    out += terms[i];
  }
  return out;
}

std::string printIntSet(const IntSet& s) { return s.toString(); }

}  // namespace pcat

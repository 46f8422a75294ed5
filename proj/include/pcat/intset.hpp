/** @file intset.hpp
 *  @brief Exact arithmetic on eventually periodic subsets of the integers.
 *
 *  An IntSet stores a period m, a residue pattern for the far positive tail,
 *  a residue pattern for the far negative tail, and an explicit member list
 *  on a finite window [-w, w].  The two tails may differ, so one-sided sets
 *  such as numerical semigroups are represented exactly.  All operations
 *  (boolean algebra, negation, shifts, scaling, sum sets) are exact; values
 *  are normalized to a unique canonical form, so equality is structural.
 *
 *  Literal grammar (CLI surface):
 *      expr  :=  ('!' | '+-')* union
 *      union :=  term ('|' term)*
 *      term  :=  '{' n (',' n)* '}' | '{}' | 'Z' | 'N'
 *             |  [n '+'] m 'Z'            two-sided class n + mZ
 *             |  n '+' m 'N'              upward class {n, n+m, n+2m, ...}
 *             |  n '-' m 'N'              downward class {n, n-m, n-2m, ...}
 *  '!' complements and '+-' mirrors (S u -S) the whole remainder.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcat/partition.hpp"  // for Error

namespace pcat {

class IntSet {
 public:
  IntSet() = default;  // the empty set

  static IntSet finiteSet(std::vector<std::int64_t> elems);
  /// The class a + mZ for m >= 1; for m == 0 the singleton {a}.
  static IntSet klass(std::int64_t a, std::int64_t m);
  static IntSet integers() { return klass(0, 1); }
  /// {1, 2, 3, ...}
  static IntSet naturals() { return upFrom(1, 1); }
  /// {a, a+m, a+2m, ...}
  static IntSet upFrom(std::int64_t a, std::int64_t m);
  /// {a, a-m, a-2m, ...}
  static IntSet downFrom(std::int64_t a, std::int64_t m);

  bool contains(std::int64_t x) const;
  bool isEmpty() const;
  bool isFinite() const;
  /// All members of a finite set, ascending.
  std::vector<std::int64_t> elements() const;
  std::vector<std::int64_t> elementsIn(std::int64_t lo, std::int64_t hi) const;
  std::optional<std::int64_t> minPositive() const;

  std::int64_t period() const { return m_; }
  std::int64_t window() const { return w_; }

  friend bool operator==(const IntSet&, const IntSet&) = default;

  std::string toString() const;

  /// Low-level constructor from raw representation parts; normalizes.
  static IntSet raw(std::int64_t m, std::vector<std::int64_t> posRes,
                    std::vector<std::int64_t> negRes, std::int64_t w,
                    std::vector<std::int64_t> mid);

 private:
  friend IntSet combinePointwise(const IntSet&, const IntSet&, int op);
  friend IntSet negate(const IntSet&);
  friend IntSet shiftBy(const IntSet&, std::int64_t);
  friend IntSet scaleBy(const IntSet&, std::int64_t);

  void normalize();
  bool posTail(std::int64_t r) const;
  bool negTail(std::int64_t r) const;

  // x > w_: member iff x mod m_ in posRes_; x < -w_: iff x mod m_ in negRes_;
  // |x| <= w_: iff x in mid_.  Residues canonical in [0, m_).
  std::int64_t m_ = 1;
  std::vector<std::int64_t> posRes_, negRes_;  // sorted
  std::int64_t w_ = 0;
  std::vector<std::int64_t> mid_;  // sorted members of [-w_, w_]
};

IntSet unite(const IntSet& a, const IntSet& b);
IntSet intersect(const IntSet& a, const IntSet& b);
IntSet setMinus(const IntSet& a, const IntSet& b);
IntSet complement(const IntSet& a);
IntSet negate(const IntSet& a);
IntSet shiftBy(const IntSet& a, std::int64_t k);
IntSet scaleBy(const IntSet& a, std::int64_t c);
/// Exact {x + y : x in a, y in b}.
IntSet sumset(const IntSet& a, const IntSet& b);
bool subsetOf(const IntSet& a, const IntSet& b);

/// xA + yB = {xa + yb}.
IntSet linearCombine(std::int64_t x, const IntSet& a, std::int64_t y, const IntSet& b);

/// +-S = S u (-S).
IntSet mirror(const IntSet& s);

/// D_m = (D u (m - D)) + mZ; for m == 0 this degenerates to +-D.
IntSet dSubM(const IntSet& d, std::int64_t m);
/// D'_m = (D u (m - D) u {0}) + mZ.
IntSet dPrimeSubM(const IntSet& d, std::int64_t m);

/// The closure operator S -> S_m = (S u (m - S)) + mZ.
IntSet periodicSymmetrize(const IntSet& s, std::int64_t m);

/// Returns d >= 0 with S = dZ, or nullopt.
std::optional<std::int64_t> isSubgroup(const IntSet& s);

/// Additive closure of a finite set of positive generators, materialized
/// exactly; empty generators give the empty semigroup.
IntSet semigroupFromGenerators(const std::vector<std::int64_t>& gens);

/// True iff the positive part P of S satisfies P + P within P.
bool isSubsemigroup(const IntSet& s);

struct ChiNormalForm {
  std::vector<std::int64_t> base;   // chi restricted to {0} u [1 .. floor(m/2)]
  std::vector<std::int64_t> holes;  // D with chi = Z \ D_m
};

/// Requires chi = -chi = chi + mZ; checks the four normal-form identities
/// and returns the base/hole description.
ChiNormalForm chiNormalForm(const IntSet& chi, std::int64_t m);

IntSet parseIntSet(const std::string& text);
std::string printIntSet(const IntSet& s);

}  // namespace pcat

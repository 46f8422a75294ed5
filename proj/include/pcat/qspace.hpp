/** @file qspace.hpp
 *  @brief The admissible parameter range: fourteen rows of six-tuples.
 *
 *  Each row is a template over parameters u >= 0, m >= 1, a finite hole set
 *  D within {0} u [1..floor(m/2)], an exceptional set E within {0} u N, and
 *  a subsemigroup N of the positive integers:
 *
 *      row   f      v          s      l       k     x
 *      O1    {2}    +-{0,2}    2umZ   mZ      mZ    Z
 *      O2    {2}    +-{0,2}    2umZ   m+2mZ   2mZ   Z
 *      O3    {2}    +-{0,2}    2umZ   m+2mZ   2mZ   Z \ mZ
 *      O4    {2}    {0}        {0}    {}      mZ    Z
 *      O5    {2}    +-{0,2}    {0}    {0}     {0}   Z \ N_0
 *      O6    {2}    {0}        {0}    {}      {0}   Z \ N_0
 *      O7    {2}    {0}        {0}    {}      {0}   Z \ N_0'
 *      B1    {1,2}  +-{0,1,2}  umZ    mZ      mZ    Z \ D_m
 *      B2    {1,2}  +-{0,1,2}  2umZ   m+2mZ   2mZ   Z \ D_m
 *      B3    {1,2}  +-{0,1}    umZ    {}      mZ    Z \ D_m
 *      B4    {1,2}  +-{0,1,2}  {0}    {0}     {0}   Z \ E_0
 *      B5    {1,2}  +-{0,1}    {0}    {}      {0}   Z \ E_0
 *      S1    N      Z          umZ    mZ      mZ    Z \ D_m
 *      S2    N      Z          {0}    {0}     {0}   Z \ E_0
 *
 *  instantiate maps a parameterized row to its six-tuple; classify inverts
 *  it.  The four-component arithmetic classifier covers the five (s,l,k,x)
 *  shapes these rows are built from, constructively from the minima of the
 *  positive parts.  checkAxioms evaluates the eight compatibility axioms on
 *  a (sigma, kappa-table, xi-table) family.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcat/analyzer.hpp"
#include "pcat/intset.hpp"

namespace pcat {

enum class QRow {
  O1, O2, O3, O4, O5, O6, O7,
  B1, B2, B3, B4, B5,
  S1, S2,
};

const char* rowName(QRow r);
QRow rowFromName(const std::string& name);
std::vector<QRow> allRows();

struct QDescriptor {
  QRow row;
  std::int64_t u = 0;
  std::int64_t m = 1;
  IntSet D;  // finite, within {0} u [1..floor(m/2)]
  IntSet E;  // within {0} u N
  IntSet N;  // subsemigroup of the positive integers

  friend bool operator==(const QDescriptor&, const QDescriptor&) = default;

  /// `row=O1 u=1 m=1 D={}` with E=/N= appended when the row uses them.
  std::string toString() const;
  static QDescriptor parse(const std::string& text);
};

struct QTuple {
  IntSet f, v, s, l, k, x;
  friend bool operator==(const QTuple&, const QTuple&) = default;
  std::string toString() const;
  /// Six ';'-separated IntSet literals: f;v;s;l;k;x.
  static QTuple parse(const std::string& text);
};

struct ArithTuple {
  IntSet sigma, lambda, kappa, xi;
  friend bool operator==(const ArithTuple&, const ArithTuple&) = default;
};

struct ArithDescriptor {
  int row = 0;  // 1..5
  std::int64_t u = 0;
  std::int64_t m = 1;
  IntSet D;
  IntSet E;
  friend bool operator==(const ArithDescriptor&, const ArithDescriptor&) = default;
};

/// Throws on parameters that violate the row's constraints.
void validateDescriptor(const QDescriptor& q);

QTuple instantiate(const QDescriptor& q);
ArithTuple instantiateArith(const ArithDescriptor& d);

/// Inverse of instantiate, canonicalized: lowest row index first, then the
/// generator-determined m and u.  nullopt if the tuple matches no row.
std::optional<QDescriptor> classify(const QTuple& t);

/// The five-row (sigma, lambda, kappa, xi) classifier.
std::optional<ArithDescriptor> classifyArith(const ArithTuple& t);

/// Four sets indexed by a pair of normalized colors.
struct ColorFamily {
  IntSet ww, wb, bw, bb;
  const IntSet& at(Color c1, Color c2) const;
  IntSet& at(Color c1, Color c2);
};

/// Evaluates axioms (i)-(viii) on the family.  Inclusions are tested after
/// intersecting the left side with [-window, window]; window <= 0 means
/// exact.  Returns human-readable violation descriptions, empty when clean.
std::vector<std::string> checkAxioms(const IntSet& sigma, const ColorFamily& kappa,
                                     const ColorFamily& xi, std::int64_t window);

/// Componentwise containment of observed finite data in the instantiated row.
bool zLeq(const Analysis& z, const QDescriptor& q);

struct ConsistencyOptions {
  std::int64_t mSlack = 2;   // search m up to maxObserved + mSlack
  std::int64_t uMax = 3;     // u search bound
};

/// All parameterized rows whose instantiation contains the observed data,
/// with D/E/N fitted against the complement of the observed x-data.  When
/// block sizes were observed, only the smallest admissible f-family is kept,
/// so the case split is reflected in the result.
std::vector<QDescriptor> consistentRows(const Analysis& z, const ConsistencyOptions& opts = {});

IntSet intDataToSet(const IntData& d);

}  // namespace pcat

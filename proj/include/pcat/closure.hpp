/** @file closure.hpp
 *  @brief Bounded breadth-first closure of generator sets.
 *
 *  Starting from the generators and the base partitions (the two colored
 *  lower pairs and the two identity strings), applies tensor, composition,
 *  involution, the four basic rotations, verticolor reflection and turn
 *  erasure until no partition with at most `cap` points is new.  The result
 *  is a lower bound for the closure intersected with the size bound.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcat/ops.hpp"

namespace pcat {

/// Injective stable key; equal partitions have equal keys.
std::string canonicalKey(const Partition& p);

/// The base partitions every closure is seeded with.
std::vector<Partition> basePartitions();

struct ClosureOptions {
  int cap = 6;
  int maxRounds = 64;
};

struct ClosureResult {
  std::vector<Partition> members;  // sorted by canonical key
  int rounds = 0;
  bool reachedFixpoint = false;
  std::map<std::string, std::int64_t> producedBy;  // first-producer statistics
};

ClosureResult closure(const std::vector<Partition>& generators, const ClosureOptions& opts = {});

enum class CaseKind { O, B, S, HyperoctahedralSuspect };

const char* caseName(CaseKind c);

/// Case from the observed block shapes: singletons present and a block with
/// three or more legs present mean case S; only singletons B; neither O.  A
/// big block without singletons is only reported as a suspect, since a
/// truncation cannot certify absence.
CaseKind detectCase(const std::vector<Partition>& members);

/// One literal per line sorted by key, statistics as trailing comments.
std::string dumpClosure(const ClosureResult& r);

/// Newline-separated literals; blank lines and '#' comments are skipped.
std::vector<Partition> parseCorpus(const std::string& text);

}  // namespace pcat

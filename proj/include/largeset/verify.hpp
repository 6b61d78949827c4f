#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "largeset/bigint.hpp"
#include "largeset/incidence.hpp"
#include "largeset/kset.hpp"

namespace largeset {

struct Design {
  int n = 0, k = 0, t = 0;
  Int lambda = 0;
  std::vector<KSet> blocks;
};

struct LargeSetPartition {
  int n = 0, k = 0, t = 0;
  long long l = 1;
  std::vector<std::vector<KSet>> parts;
};

enum class CounterexampleKind {
  MalformedBlock,    // wrong size, unsorted, or out of [n]
  DuplicateBlock,    // same block twice within one collection
  CoverageMismatch,  // a t-set covered != lambda times
  PartCountMismatch, // number of parts != l
  NonDisjointParts,  // a block appearing in two parts
  MissingBlock,      // union of parts misses a k-set
  UniformityMismatch // subset average disagrees with the global average
};

const char* counterexample_kind_name(CounterexampleKind k);

struct Counterexample {
  CounterexampleKind kind;
  KSet witness;           // offending block or t-set (may be empty)
  Int expected = 0, actual = 0;
  int part = -1, other_part = -1;
  std::string detail;
};

struct VerificationReport {
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

// count(a) for every t-set a of [n], indexed by colex rank; zero counts
// included.  Blocks must all share one size k >= t.
std::vector<std::int64_t> coverage_counts(const std::vector<KSet>& blocks, int n, int t);

VerificationReport verify_design(const Design& d);
VerificationReport verify_large_set(const LargeSetPartition& ls);

// |B| * sum_{b in T} phi(b) == |T| * sum_{b in B} phi(b), exact integers.
VerificationReport verify_uniform_subset(const std::vector<std::size_t>& rows,
                                         const IncidenceSystem& sys);
// Convenience for inclusion systems: T given as k-sets.
VerificationReport verify_uniform_subset(const std::vector<KSet>& blocks,
                                         const IncidenceSystem& sys);

// The all-ones vector over B lies in the column span of the system
// (exact rational rank comparison).
bool check_constants_in_V(const IncidenceSystem& sys);

// perm maps [n] -> [n]; true iff the induced action on rows permutes
// columns consistently: entry(pi(b), pi(a)) == entry(b, a) for all b, a.
bool check_symmetry_action(const std::vector<int>& perm, const IncidenceSystem& sys);

}  // namespace largeset

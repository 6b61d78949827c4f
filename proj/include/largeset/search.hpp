#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "largeset/params.hpp"
#include "largeset/verify.hpp"

namespace largeset {

enum class SearchStrategy { Exhaustive, RandomizedRestart };
enum class BlockOrder { Colex, Random };

struct SearchConfig {
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  BlockOrder block_order = BlockOrder::Colex;
  std::uint64_t node_budget = 200'000'000;
  double time_budget_seconds = 300.0;
  std::uint64_t seed = 1;
  std::uint64_t restart_nodes = 500'000;  // per-restart cap in randomized-restart mode

  // Count every complete assignment instead of stopping at the first.
  // Disables symmetry breaking so raw counts are comparable to the
  // exhaustive-probability oracle.
  bool count_solutions = false;

  // Canonical bin usage: a block may only open the lowest unused bin.
  // Sound for existence/nonexistence, not for counting (auto-disabled).
  bool symmetry_break = true;

  std::uint64_t design_enumeration_cap = 200'000;  // max_disjoint_designs only
};

struct SearchOutcome {
  enum class Status { Found, Exhausted, BudgetExceeded };
  Status status = Status::Exhausted;
  std::optional<Design> design;
  std::optional<LargeSetPartition> large_set;
  std::uint64_t nodes = 0;     // bin/decision attempts
  std::uint64_t restarts = 0;
  Int solution_count = 0;      // counting mode only
  std::string reason;
  double elapsed_seconds = 0.0;
};

SearchOutcome search_design(int n, int k, int t, const Int& lambda, const SearchConfig& cfg);
SearchOutcome search_large_set(const InstanceParams& params, const SearchConfig& cfg);

struct DisjointDesignsResult {
  std::size_t count = 0;                 // maximum pairwise-disjoint family size
  std::vector<Design> witness;           // a family attaining it
  std::uint64_t designs_enumerated = 0;  // all t-(n,k,lambda) designs found
};

DisjointDesignsResult max_disjoint_designs(int n, int k, int t, const Int& lambda,
                                           const SearchConfig& cfg);

}  // namespace largeset

#include "largeset/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>
#include <numeric>

#include "largeset/errors.hpp"
#include "largeset/rng.hpp"

namespace largeset {

namespace {

using Clock = std::chrono::steady_clock;

struct BlockTable {
  int n, k, t;
  std::vector<std::vector<std::uint32_t>> tsets;  // block rank -> t-set ranks
  std::size_t num_tsets;
  KSetIndexer blocks;

  BlockTable(int n_, int k_, int t_)
      : n(n_), k(k_), t(t_), blocks(n_, k_) {
    KSetIndexer tests(n, t);
    num_tsets = tests.size();
    tsets.resize(blocks.size());
    for (std::uint64_t b = 0; b < blocks.size(); ++b) {
      const KSet bs = blocks.unrank(b);
      for_each_subset(bs, t, [&](const KSet& a) {
        tsets[b].push_back(static_cast<std::uint32_t>(tests.rank(a)));
      });
    }
  }
};

// Shared budget bookkeeping.  `local_cap` bounds a single restart; 0 = none.
struct BudgetState {
  std::uint64_t nodes = 0;
  std::uint64_t global_cap = 0;
  std::uint64_t local_start = 0;
  std::uint64_t local_cap = 0;
  double time_cap = 0.0;
  Clock::time_point t0;
  bool exceeded = false;

  bool tick() {
    ++nodes;
    if (nodes >= global_cap ||
        (local_cap && nodes - local_start >= local_cap)) {
      exceeded = true;
      return false;
    }
    if (time_cap > 0 && (nodes & 0x1fff) == 0) {
      const double el = std::chrono::duration<double>(Clock::now() - t0).count();
      if (el >= time_cap) {
        exceeded = true;
        return false;
      }
    }
    return true;
  }
};

std::vector<std::uint32_t> block_order_vector(std::size_t nb, BlockOrder order,
                                              std::uint64_t seed, bool force_shuffle) {
  std::vector<std::uint32_t> perm(nb);
  std::iota(perm.begin(), perm.end(), 0);
  if (order == BlockOrder::Random || force_shuffle) {
    DetRng rng(seed);
    for (std::size_t i = nb; i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return perm;
}

// Include/exclude DFS over blocks for a single design.  Calls `on_found`
// with the included block ranks at every completion; returning false stops
// the search.  Returns true iff the space was fully explored.
class DesignSearcher {
 public:
  DesignSearcher(const BlockTable& tab, const Int& lambda, const Int& b_target,
                 const std::vector<std::uint32_t>& order, BudgetState& budget,
                 const std::function<bool(const std::vector<std::uint32_t>&)>& on_found)
      : tab_(tab),
        lambda_(to_int64(lambda)),
        b_target_(to_int64(b_target)),
        order_(order),
        budget_(budget),
        on_found_(on_found),
        cnt_(tab.num_tsets, 0),
        supply_(tab.num_tsets, 0) {
    for (const auto& cols : tab_.tsets)
      for (std::uint32_t a : cols) ++supply_[a];
  }

  bool run() { return dfs(0, 0); }

 private:
  // returns false when the search must stop (budget or callback)
  bool dfs(std::size_t pos, std::int64_t included) {
    if (pos == order_.size()) {
      return on_found_(chosen_);
    }
    const std::uint32_t b = order_[pos];
    const auto& cols = tab_.tsets[b];
    for (std::uint32_t a : cols) --supply_[a];

    bool ok = true;
    // include first: designs are sparse, committing early fails fast
    if (included < b_target_) {
      bool can = true;
      for (std::uint32_t a : cols)
        if (cnt_[a] >= lambda_) {
          can = false;
          break;
        }
      if (can) {
        if (!budget_.tick()) ok = false;
        if (ok) {
          for (std::uint32_t a : cols) ++cnt_[a];
          chosen_.push_back(b);
          ok = dfs(pos + 1, included + 1);
          chosen_.pop_back();
          for (std::uint32_t a : cols) --cnt_[a];
        }
      }
    }
    if (ok) {
      // exclude: every t-set inside b must still be completable
      bool can = included + static_cast<std::int64_t>(order_.size() - pos - 1) >= b_target_;
      for (std::uint32_t a : cols) {
        if (!can) break;
        if (cnt_[a] + supply_[a] < lambda_) can = false;
      }
      if (can) {
        if (!budget_.tick()) ok = false;
        if (ok) ok = dfs(pos + 1, included);
      }
    }

    for (std::uint32_t a : cols) ++supply_[a];
    return ok;
  }

  const BlockTable& tab_;
  std::int64_t lambda_, b_target_;
  const std::vector<std::uint32_t>& order_;
  BudgetState& budget_;
  std::function<bool(const std::vector<std::uint32_t>&)> on_found_;  // owned: callers pass lambdas
  std::vector<std::int64_t> cnt_, supply_;
  std::vector<std::uint32_t> chosen_;
};

Design design_from_ranks(const BlockTable& tab, const std::vector<std::uint32_t>& ranks,
                         const Int& lambda) {
  Design d;
  d.n = tab.n;
  d.k = tab.k;
  d.t = tab.t;
  d.lambda = lambda;
  for (std::uint32_t r : ranks) d.blocks.push_back(tab.blocks.unrank(r));
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

// Bin-assignment DFS for large sets.
class LargeSetSearcher {
 public:
  LargeSetSearcher(const BlockTable& tab, std::uint32_t l, const Int& lambda,
                   const std::vector<std::uint32_t>& order, bool symmetry_break,
                   BudgetState& budget,
                   const std::function<bool(const std::vector<std::uint32_t>&)>& on_found)
      : tab_(tab),
        l_(l),
        lambda_(to_int64(lambda)),
        order_(order),
        symmetry_break_(symmetry_break),
        budget_(budget),
        on_found_(on_found),
        cnt_(static_cast<std::size_t>(l) * tab.num_tsets, 0),
        bin_of_(tab.tsets.size(), 0) {}

  bool run() { return dfs(0, 0); }

 private:
  std::int64_t& cnt(std::uint32_t j, std::uint32_t a) {
    return cnt_[static_cast<std::size_t>(j) * tab_.num_tsets + a];
  }

  bool dfs(std::size_t pos, std::uint32_t used_bins) {
    if (pos == order_.size()) {
      return on_found_(bin_of_);
    }
    const std::uint32_t b = order_[pos];
    const auto& cols = tab_.tsets[b];
    const std::uint32_t limit =
        symmetry_break_ ? std::min<std::uint32_t>(l_, used_bins + 1) : l_;
    for (std::uint32_t j = 0; j < limit; ++j) {
      if (!budget_.tick()) return false;
      bool can = true;
      for (std::uint32_t a : cols)
        if (cnt(j, a) >= lambda_) {
          can = false;
          break;
        }
      if (!can) continue;
      for (std::uint32_t a : cols) ++cnt(j, a);
      bin_of_[b] = j;
      const bool cont = dfs(pos + 1, std::max(used_bins, j + 1));
      for (std::uint32_t a : cols) --cnt(j, a);
      if (!cont) return false;
    }
    return true;
  }

  const BlockTable& tab_;
  std::uint32_t l_;
  std::int64_t lambda_;
  const std::vector<std::uint32_t>& order_;
  bool symmetry_break_;
  BudgetState& budget_;
  std::function<bool(const std::vector<std::uint32_t>&)> on_found_;  // owned: callers pass lambdas
  std::vector<std::int64_t> cnt_;
  std::vector<std::uint32_t> bin_of_;
};

LargeSetPartition partition_from_bins(const BlockTable& tab, std::uint32_t l,
                                      const std::vector<std::uint32_t>& bin_of) {
  LargeSetPartition ls;
  ls.n = tab.n;
  ls.k = tab.k;
  ls.t = tab.t;
  ls.l = l;
  ls.parts.resize(l);
  for (std::uint64_t b = 0; b < bin_of.size(); ++b)
    ls.parts[bin_of[b]].push_back(tab.blocks.unrank(b));
  return ls;
}

BudgetState make_budget(const SearchConfig& cfg) {
  if (cfg.node_budget == 0 || cfg.time_budget_seconds <= 0 || cfg.restart_nodes == 0)
    fail(ErrorKind::InvalidParams, "budgets must be positive");
  BudgetState budget;
  budget.global_cap = cfg.node_budget;
  budget.time_cap = cfg.time_budget_seconds;
  budget.t0 = Clock::now();
  return budget;
}

void finish_outcome(SearchOutcome& out, const BudgetState& budget) {
  out.nodes = budget.nodes;
  out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - budget.t0).count();
}

}  // namespace

SearchOutcome search_design(int n, int k, int t, const Int& lambda, const SearchConfig& cfg) {
  InstanceParams p{n, k, t, 1};
  validate(p);
  if (lambda < 1) fail(ErrorKind::InvalidParams, "require lambda >= 1");

  BudgetState budget = make_budget(cfg);
  SearchOutcome out;

  const Int max_lambda = binomial(n - t, k - t);
  if (lambda > max_lambda) {
    out.status = SearchOutcome::Status::Exhausted;
    out.reason = "lambda exceeds C(n-t,k-t)";
    finish_outcome(out, budget);
    return out;
  }
  const DivisibilityReport div = check_design_divisibility(n, k, t, lambda);
  if (!div.pass) {
    int s_fail = 0;
    for (const auto& c : div.checks)
      if (!c.pass) {
        s_fail = c.s;
        break;
      }
    out.status = SearchOutcome::Status::Exhausted;
    out.reason = "divisibility precheck failed at s=" + std::to_string(s_fail);
    finish_outcome(out, budget);
    return out;
  }

  const BlockTable tab(n, k, t);
  const Int b_target = lambda * binomial(n, t) / binomial(k, t);

  std::optional<Design> found;
  Int count = 0;
  auto on_found = [&](const std::vector<std::uint32_t>& ranks) {
    if (!found) {
      found = design_from_ranks(tab, ranks, lambda);
      assert(verify_design(*found).pass);
    }
    if (cfg.count_solutions) {
      ++count;
      return true;
    }
    return false;
  };

  bool complete = false;
  if (cfg.strategy == SearchStrategy::Exhaustive) {
    const auto order = block_order_vector(tab.tsets.size(), cfg.block_order, cfg.seed, false);
    DesignSearcher searcher(tab, lambda, b_target, order, budget, on_found);
    complete = searcher.run() && !budget.exceeded;
  } else {
    for (std::uint64_t r = 0;; ++r) {
      budget.local_start = budget.nodes;
      budget.local_cap = cfg.restart_nodes;
      const auto order =
          block_order_vector(tab.tsets.size(), BlockOrder::Random, stream_seed(cfg.seed, r), true);
      DesignSearcher searcher(tab, lambda, b_target, order, budget, on_found);
      const bool finished = searcher.run();
      out.restarts = r + 1;
      if (found && !cfg.count_solutions) break;
      if (finished && !budget.exceeded) {
        complete = true;  // one full exploration settles nonexistence
        break;
      }
      if (budget.nodes >= budget.global_cap) break;
      const double el = std::chrono::duration<double>(Clock::now() - budget.t0).count();
      if (budget.time_cap > 0 && el >= budget.time_cap) break;
      budget.exceeded = false;  // local cap only; try the next restart
    }
  }

  out.solution_count = count;
  if (found && !cfg.count_solutions) {
    out.status = SearchOutcome::Status::Found;
    out.design = std::move(found);
  } else if (complete) {
    out.status = SearchOutcome::Status::Exhausted;
    if (cfg.count_solutions) {
      out.design = std::move(found);
      out.reason = "full enumeration";
    } else {
      out.reason = "no design exists";
    }
  } else {
    out.status = SearchOutcome::Status::BudgetExceeded;
    out.reason = "node or time budget exhausted";
  }
  finish_outcome(out, budget);
  return out;
}

SearchOutcome search_large_set(const InstanceParams& params, const SearchConfig& cfg) {
  validate(params);
  BudgetState budget = make_budget(cfg);
  SearchOutcome out;

  const DivisibilityReport div = check_largeset_divisibility(params);
  if (!div.pass) {
    int s_fail = 0;
    for (const auto& c : div.checks)
      if (!c.pass) {
        s_fail = c.s;
        break;
      }
    out.status = SearchOutcome::Status::Exhausted;
    out.reason = "divisibility precheck failed at s=" + std::to_string(s_fail);
    finish_outcome(out, budget);
    return out;
  }
  const Int lambda = lambda_of(params);
  const std::uint32_t l = static_cast<std::uint32_t>(params.l);

  const BlockTable tab(params.n, params.k, params.t);
  const bool symmetry = cfg.symmetry_break && !cfg.count_solutions;

  std::optional<LargeSetPartition> found;
  Int count = 0;
  auto on_found = [&](const std::vector<std::uint32_t>& bin_of) {
    if (!found) {
      found = partition_from_bins(tab, l, bin_of);
      assert(verify_large_set(*found).pass);
    }
    if (cfg.count_solutions) {
      ++count;
      return true;
    }
    return false;
  };

  bool complete = false;
  if (cfg.strategy == SearchStrategy::Exhaustive) {
    const auto order = block_order_vector(tab.tsets.size(), cfg.block_order, cfg.seed, false);
    LargeSetSearcher searcher(tab, l, lambda, order, symmetry, budget, on_found);
    complete = searcher.run() && !budget.exceeded;
  } else {
    for (std::uint64_t r = 0;; ++r) {
      budget.local_start = budget.nodes;
      budget.local_cap = cfg.restart_nodes;
      const auto order =
          block_order_vector(tab.tsets.size(), BlockOrder::Random, stream_seed(cfg.seed, r), true);
      LargeSetSearcher searcher(tab, l, lambda, order, symmetry, budget, on_found);
      const bool finished = searcher.run();
      out.restarts = r + 1;
      if (found && !cfg.count_solutions) break;
      if (finished && !budget.exceeded) {
        complete = true;
        break;
      }
      if (budget.nodes >= budget.global_cap) break;
      const double el = std::chrono::duration<double>(Clock::now() - budget.t0).count();
      if (budget.time_cap > 0 && el >= budget.time_cap) break;
      budget.exceeded = false;
    }
  }

  out.solution_count = count;
  if (found && !cfg.count_solutions) {
    out.status = SearchOutcome::Status::Found;
    out.large_set = std::move(found);
  } else if (complete) {
    out.status = SearchOutcome::Status::Exhausted;
    if (cfg.count_solutions) {
      out.large_set = std::move(found);
      out.reason = "full enumeration";
    } else {
      out.reason = "no large set exists";
    }
  } else {
    out.status = SearchOutcome::Status::BudgetExceeded;
    out.reason = "node or time budget exhausted";
  }
  finish_outcome(out, budget);
  return out;
}

DisjointDesignsResult max_disjoint_designs(int n, int k, int t, const Int& lambda,
                                           const SearchConfig& cfg) {
  InstanceParams p{n, k, t, 1};
  validate(p);
  if (lambda < 1) fail(ErrorKind::InvalidParams, "require lambda >= 1");

  DisjointDesignsResult res;
  const DivisibilityReport div = check_design_divisibility(n, k, t, lambda);
  if (!div.pass) return res;  // no designs at all

  BudgetState budget = make_budget(cfg);
  const BlockTable tab(n, k, t);
  const Int b_target = lambda * binomial(n, t) / binomial(k, t);

  std::vector<std::vector<std::uint32_t>> all;
  auto collect = [&](const std::vector<std::uint32_t>& ranks) {
    if (all.size() >= cfg.design_enumeration_cap)
      fail(ErrorKind::EnumerationCap,
           "design enumeration exceeds cap " + std::to_string(cfg.design_enumeration_cap));
    std::vector<std::uint32_t> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    all.push_back(std::move(sorted));
    return true;
  };
  const auto order = block_order_vector(tab.tsets.size(), BlockOrder::Colex, cfg.seed, false);
  DesignSearcher searcher(tab, lambda, b_target, order, budget, collect);
  if (!searcher.run() || budget.exceeded)
    fail(ErrorKind::BudgetExceeded, "design enumeration hit the search budget");
  res.designs_enumerated = all.size();
  if (all.empty()) return res;

  // pairwise disjointness graph + exact maximum clique
  const std::size_t m = all.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool disjoint = true;
      std::size_t a = 0, b = 0;
      while (a < all[i].size() && b < all[j].size()) {
        if (all[i][a] == all[j][b]) {
          disjoint = false;
          break;
        }
        if (all[i][a] < all[j][b])
          ++a;
        else
          ++b;
      }
      adj[i][j] = adj[j][i] = disjoint;
    }

  const Int l_max_int = binomial(n - t, k - t) / lambda;
  const std::size_t l_max = static_cast<std::size_t>(to_int64(l_max_int));

  std::vector<std::size_t> best, current;
  std::function<void(std::vector<std::size_t>&)> expand = [&](std::vector<std::size_t>& cand) {
    if (current.size() > best.size()) best = current;
    if (best.size() >= l_max) return;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      if (current.size() + (cand.size() - idx) <= best.size()) return;
      const std::size_t v = cand[idx];
      std::vector<std::size_t> next;
      for (std::size_t jdx = idx + 1; jdx < cand.size(); ++jdx)
        if (adj[v][cand[jdx]]) next.push_back(cand[jdx]);
      current.push_back(v);
      expand(next);
      current.pop_back();
      if (best.size() >= l_max) return;
    }
  };
  std::vector<std::size_t> cand(m);
  std::iota(cand.begin(), cand.end(), 0);
  expand(cand);

  res.count = best.size();
  for (std::size_t v : best) res.witness.push_back(design_from_ranks(tab, all[v], lambda));
  return res;
}

}  // namespace largeset

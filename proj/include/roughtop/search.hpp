#pragma once

#include "roughtop/canonical.hpp"
#include "roughtop/enumerate.hpp"
#include "roughtop/parallel.hpp"
#include "roughtop/predicate.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace roughtop {

/// Family of operation tables indexed by universe size.
struct OpFamily {
  enum class Kind { zn_add, mod_mul, table };
  Kind kind = Kind::zn_add;
  int param = 0;  // pinned size (zn_add:K) or modulus (mod_mul:P); 0 = any
  std::optional<OpTable> fixed;
  std::string name = "zn_add";

  /// Accepts "zn_add", "zn_add:K", "mod_mul", "mod_mul:P".
  static OpFamily parse(const std::string& spec) {
    OpFamily f;
    f.name = spec;
    std::string head = spec;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
      head = spec.substr(0, colon);
      f.param = std::atoi(spec.c_str() + colon + 1);
      if (f.param <= 0) throw error("InvalidOp", "bad family parameter in '" + spec + "'");
    }
    if (head == "zn_add")
      f.kind = Kind::zn_add;
    else if (head == "mod_mul")
      f.kind = Kind::mod_mul;
    else
      throw error("InvalidOp", "unknown op family '" + spec + "'");
    return f;
  }

  static OpFamily from_table(OpTable table, std::string name = "table") {
    OpFamily f;
    f.kind = Kind::table;
    f.fixed = std::move(table);
    f.name = std::move(name);
    return f;
  }

  /// The family's table on a universe of size n, if it has one.
  std::optional<OpTable> instantiate(int n) const {
    switch (kind) {
      case Kind::zn_add:
        if (param && param != n) return std::nullopt;
        return OpTable::zn_add(n);
      case Kind::mod_mul: {
        int p = param ? param : n + 1;
        if (p - 1 != n) return std::nullopt;
        for (int d = 2; d * d <= p; ++d)
          if (p % d == 0) return std::nullopt;
        if (p < 2) return std::nullopt;
        return OpTable::mod_mul(p);
      }
      case Kind::table:
        if (fixed && fixed->size() == n) return fixed;
        return std::nullopt;
    }
    return std::nullopt;
  }
};

enum class SearchMode { first, all, count };

struct SearchSpec {
  OpFamily family;
  int n_min = 1;
  int n_max = 1;
  PredicateExpr predicate;
  SearchMode mode = SearchMode::first;
  std::int64_t budget = 100'000'000;  // predicate evaluations
  double time_limit_s = 60.0;
  int threads = 0;  // 0: resolve from ROUGHTOP_THREADS / hardware
  bool audit = true;
  std::uint64_t audit_seed = 1;
};

struct SearchWitness {
  std::string digest;
  RoughStructure structure;
};

struct SearchStats {
  std::int64_t candidates = 0;         // structures evaluated
  std::int64_t pruned_subsets = 0;     // (partition, G) pairs cut before topologies
  std::int64_t matches = 0;            // pre-deduplication hits
  std::int64_t audit_checked = 0;
  std::int64_t audit_mismatches = 0;
  double elapsed_s = 0.0;
};

struct SearchResult {
  enum class Status { complete, budget_exhausted, time_exhausted };
  Status status = Status::complete;
  std::vector<SearchWitness> witnesses;  // deduplicated, sorted by (n, digest)
  std::int64_t distinct = 0;             // distinct canonical digests found
  SearchStats stats;

  const char* status_str() const {
    switch (status) {
      case Status::complete: return "complete";
      case Status::budget_exhausted: return "budget_exhausted";
      default: return "time_exhausted";
    }
  }
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Exhaustive witness search over (partition x subset x topology) for the
/// family's table at each size. Work is sharded by partition index; shards
/// merge into a digest-keyed map, so the witness set is independent of the
/// thread count and traversal interleaving.
inline SearchResult search(const SearchSpec& spec) {
  if (spec.n_min < 1 || spec.n_max > kTopologyCap || spec.n_min > spec.n_max)
    throw error("CapExceeded",
                "search needs 1 <= n_min <= n_max <= " + std::to_string(kTopologyCap));

  SearchResult result;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const bool prune_groups = requires_rough_group(spec.predicate);
  std::atomic<std::int64_t> evals{0}, pruned{0}, matches{0};
  std::atomic<std::int64_t> audit_checked{0}, audit_mismatches{0};
  std::atomic<bool> stop{false};
  std::atomic<int> status{0};  // 0 complete, 1 budget, 2 time

  std::map<std::string, RoughStructure> found;
  std::mutex found_mutex;

  for (int n = spec.n_min; n <= spec.n_max && !stop.load(); ++n) {
    std::optional<OpTable> op = spec.family.instantiate(n);
    if (!op) continue;
    const std::vector<std::vector<int>> auts = op_automorphisms(*op);

    std::vector<Partition> partitions;
    for_each_partition(n, [&](const Partition& p) {
      partitions.push_back(p);
      return true;
    });

    auto run_shard = [&](int shard) {
      if (stop.load()) return;
      ApproximationSpace space(Universe(n), partitions[static_cast<std::size_t>(shard)]);
      for_each_nonempty_subset(n, [&](const Subset& g) {
        if (stop.load()) return false;
        if (prune_groups && !check_rough_group(space, *op, g).ok()) {
          pruned.fetch_add(1);
          return true;
        }
        Subset up = space.upper(g);
        for_each_topology(up.count(), [&](const std::vector<Subset>& min) {
          if (stop.load()) return false;
          std::int64_t my_eval = evals.fetch_add(1);
          if (my_eval >= spec.budget) {
            status.store(1);
            stop.store(true);
            return false;
          }
          if ((my_eval & 0x3ff) == 0 && elapsed() > spec.time_limit_s) {
            status.store(2);
            stop.store(true);
            return false;
          }
          RoughStructure s = make_structure(space, *op, g, remap_topology(min, up, n));
          StructureProfile profile(&s);
          bool hit = eval_predicate(spec.predicate, profile);
          if (spec.audit &&
              detail::splitmix(spec.audit_seed ^ static_cast<std::uint64_t>(my_eval)) % 100 == 0) {
            audit_checked.fetch_add(1);
            StructureProfile fresh(&s);
            if (eval_predicate_full(spec.predicate, fresh) != hit) audit_mismatches.fetch_add(1);
          }
          if (!hit) return true;
          matches.fetch_add(1);
          std::string digest = canonical_digest(s, auts);
          {
            std::lock_guard<std::mutex> lock(found_mutex);
            found.emplace(std::move(digest), std::move(s));
          }
          if (spec.mode == SearchMode::first) {
            stop.store(true);
            return false;
          }
          return true;
        });
        return !stop.load();
      });
    };

    int nthreads = spec.threads > 0 ? spec.threads
                                    : thread_count_from_env(static_cast<int>(partitions.size()));
    parallel_shards(static_cast<int>(partitions.size()), nthreads, run_shard);
  }

  result.stats.candidates = evals.load();
  result.stats.pruned_subsets = pruned.load();
  result.stats.matches = matches.load();
  result.stats.audit_checked = audit_checked.load();
  result.stats.audit_mismatches = audit_mismatches.load();
  result.stats.elapsed_s = elapsed();
  result.distinct = static_cast<std::int64_t>(found.size());
  switch (status.load()) {
    case 1: result.status = SearchResult::Status::budget_exhausted; break;
    case 2: result.status = SearchResult::Status::time_exhausted; break;
    default: result.status = SearchResult::Status::complete; break;
  }
  if (spec.mode != SearchMode::count)
    for (auto& [digest, s] : found) result.witnesses.push_back({digest, std::move(s)});
  return result;
}

}  // namespace roughtop

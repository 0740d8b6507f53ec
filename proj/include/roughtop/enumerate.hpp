#pragma once

#include "roughtop/topology.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace roughtop {

inline constexpr int kPartitionCap = 10;
inline constexpr int kTopologyCap = 7;

/// Every set partition of {0..n-1} exactly once, in restricted-growth-string
/// order. The callback returns false to stop; the function returns false when
/// stopped early.
template <typename Fn>
bool for_each_partition(int n, Fn&& fn) {
  if (n < 1 || n > kPartitionCap)
    throw error("CapExceeded", "partition enumeration needs 1 <= n <= " +
                                   std::to_string(kPartitionCap));
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<bool(int, int)> rec = [&](int i, int maxv) -> bool {
    if (i == n) return fn(Partition::from_rgs(rgs));
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      if (!rec(i + 1, std::max(maxv, v))) return false;
    }
    return true;
  };
  return rec(1, 0);  // rgs[0] is always 0
}

/// Bell numbers via the triangle recurrence; the independent count oracle
/// for the partition stream.
inline std::uint64_t bell_number(int n) {
  std::vector<std::vector<std::uint64_t>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> row{tri.back().back()};
    for (std::uint64_t v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(std::move(row));
  }
  return tri[static_cast<std::size_t>(n)][0];
}

/// Every topology on npoints labeled points exactly once, presented as the
/// vector of minimal opens. Generation assigns m(0), m(1), ... depth-first;
/// a candidate m(i) must contain i and be transitively consistent with the
/// rows already fixed, which prunes invalid prefixes immediately.
template <typename Fn>
bool for_each_topology(int npoints, Fn&& fn) {
  if (npoints < 1 || npoints > kTopologyCap)
    throw error("CapExceeded", "topology enumeration needs 1 <= n <= " +
                                   std::to_string(kTopologyCap));
  const int n = npoints;
  std::vector<Subset> min(static_cast<std::size_t>(n), Subset(n));
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return fn(static_cast<const std::vector<Subset>&>(min));
    const std::uint64_t others = (1ull << n) - 1;
    for (std::uint64_t mask = 0; mask <= others; ++mask) {
      if (!((mask >> i) & 1u)) continue;  // i must be in m(i)
      Subset mi(n);
      for (int b = 0; b < n; ++b)
        if ((mask >> b) & 1u) mi.add(b);
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j) {
        const Subset& mj = min[static_cast<std::size_t>(j)];
        if (mi.contains(j) && !mj.subset_of(mi)) consistent = false;
        if (mj.contains(i) && !mi.subset_of(mj)) consistent = false;
      }
      if (!consistent) continue;
      min[static_cast<std::size_t>(i)] = std::move(mi);
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

inline std::uint64_t count_topologies(int n) {
  std::uint64_t c = 0;
  for_each_topology(n, [&](const std::vector<Subset>&) {
    ++c;
    return true;
  });
  return c;
}

/// Places a topology built on {0..k-1} onto the k carrier points inside an
/// ambient index space, preserving the ascending order of carrier elements.
inline Topology remap_topology(const std::vector<Subset>& min_small, const Subset& carrier,
                               int ambient) {
  std::vector<int> elems = carrier.elements();
  std::vector<Subset> min(static_cast<std::size_t>(ambient), Subset(ambient));
  for (std::size_t p = 0; p < elems.size(); ++p) {
    Subset m(ambient);
    min_small[p].for_each([&](int q) { m.add(elems[static_cast<std::size_t>(q)]); });
    min[static_cast<std::size_t>(elems[p])] = std::move(m);
  }
  return Topology::from_min_opens(ambient, carrier, std::move(min));
}

/// Non-empty subsets of {0..n-1} in increasing mask order.
template <typename Fn>
bool for_each_nonempty_subset(int n, Fn&& fn) {
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    Subset s(n);
    for (int b = 0; b < n; ++b)
      if ((mask >> b) & 1u) s.add(b);
    if (!fn(static_cast<const Subset&>(s))) return false;
  }
  return true;
}

}  // namespace roughtop

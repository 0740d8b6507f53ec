#pragma once

#include "roughtop/trg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace roughtop {

inline constexpr int kCanonicalCap = 8;

/// Permutations of the universe that preserve the operation table. Only
/// these relabelings keep the algebra intact, so canonical forms minimize
/// over them and nothing else.
inline std::vector<std::vector<int>> op_automorphisms(const OpTable& op,
                                                      int cap = kCanonicalCap) {
  const int n = op.size();
  if (n > cap)
    throw error("CapExceeded", "automorphism enumeration capped at n = " + std::to_string(cap));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (perm[static_cast<std::size_t>(op.at(x, y))] !=
            op.at(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]))
          ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace detail {

inline void encode_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  s.for_each([&](int i) { m |= 1ull << i; });
  return m;
}

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Byte encoding of (partition, G, topology) after relabeling by perm.
/// The operation table is unchanged by its own automorphisms, so it is
/// appended once by the caller rather than minimized.
inline std::string encode_relabeled(const RoughStructure& s, const std::vector<int>& perm) {
  const int n = s.space.universe.size;
  std::string out;
  // Partition as a first-seen-order growth string over relabeled elements.
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<int> block_name(s.space.partition.blocks().size(), -1);
  int next_name = 0;
  for (int i = 0; i < n; ++i) {
    int b = s.space.partition.block_index_of(inv[static_cast<std::size_t>(i)]);
    if (block_name[static_cast<std::size_t>(b)] < 0)
      block_name[static_cast<std::size_t>(b)] = next_name++;
    out.push_back(static_cast<char>(block_name[static_cast<std::size_t>(b)]));
  }
  auto relabel = [&](const Subset& set) {
    Subset r(n);
    set.for_each([&](int x) { r.add(perm[static_cast<std::size_t>(x)]); });
    return r;
  };
  encode_u64(out, mask_of(relabel(s.g)));
  Subset carrier = relabel(s.tau.carrier());
  encode_u64(out, mask_of(carrier));
  for (int i = 0; i < n; ++i) {
    if (!carrier.contains(i)) {
      encode_u64(out, 0);
      continue;
    }
    encode_u64(out, mask_of(relabel(s.tau.min_open(inv[static_cast<std::size_t>(i)]))));
  }
  return out;
}

}  // namespace detail

/// Stable identity of a structure up to operation-preserving relabeling:
/// the lexicographically least encoding over all op-table automorphisms,
/// hashed. Identical across runs, platforms and thread counts.
inline std::string canonical_digest(const RoughStructure& s,
                                    const std::vector<std::vector<int>>& automorphisms) {
  const int n = s.space.universe.size;
  std::string best;
  for (const std::vector<int>& perm : automorphisms) {
    std::string enc = detail::encode_relabeled(s, perm);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  std::string table;
  for (int v : s.op.entries()) table.push_back(static_cast<char>(v));
  std::uint64_t h = detail::fnv1a(best + "|" + table);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "n" + std::to_string(n) + "-" + buf;
}

inline std::string canonical_digest(const RoughStructure& s) {
  return canonical_digest(s, op_automorphisms(s.op));
}

}  // namespace roughtop

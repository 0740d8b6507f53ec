#pragma once

#include "roughtop/subset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roughtop {

/// Error with a stable machine-readable code ("CapExceeded", "NotSymmetric", ...).
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Boolean check result; `witness` describes the failure when !ok.
struct Verdict {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
};

/// Three-valued check result for conditions with applicability hypotheses.
struct Tri {
  enum class State { yes, no, not_applicable };
  State state = State::yes;
  std::string witness;

  bool applicable() const { return state != State::not_applicable; }
  bool holds() const { return state == State::yes; }
  static Tri yes() { return {}; }
  static Tri no(std::string w) { return {State::no, std::move(w)}; }
  static Tri na(std::string w = "") { return {State::not_applicable, std::move(w)}; }
  const char* str() const {
    switch (state) {
      case State::yes: return "true";
      case State::no: return "false";
      default: return "n/a";
    }
  }
};

/// Finite carrier: elements are indices 0..size-1; labels are cosmetic.
struct Universe {
  int size = 0;
  std::vector<std::string> labels;  // empty, or one distinct label per element

  explicit Universe(int n, std::vector<std::string> lbls = {})
      : size(n), labels(std::move(lbls)) {
    if (size < 1) throw error("InvalidUniverse", "size must be >= 1");
    if (size > 64) throw error("CapExceeded", "universe size capped at 64");
    if (!labels.empty()) {
      if (static_cast<int>(labels.size()) != size)
        throw error("InvalidUniverse", "label count != size");
      std::set<std::string> seen(labels.begin(), labels.end());
      if (static_cast<int>(seen.size()) != size)
        throw error("InvalidUniverse", "labels must be distinct");
    }
  }

  Subset all() const { return Subset::full(size); }
  friend bool operator==(const Universe& a, const Universe& b) {
    return a.size == b.size && a.labels == b.labels;
  }
};

/// Partition of a universe into disjoint non-empty blocks.
class Partition {
 public:
  Partition(int universe_size, std::vector<Subset> blocks)
      : blocks_(std::move(blocks)), block_of_(static_cast<std::size_t>(universe_size), -1) {
    Subset seen(universe_size);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].empty()) throw error("InvalidPartition", "empty block");
      if (blocks_[b].size() != universe_size)
        throw error("InvalidPartition", "block carrier size mismatch");
      if (seen.intersects(blocks_[b]))
        throw error("InvalidPartition", "blocks overlap at " + (seen & blocks_[b]).str());
      seen |= blocks_[b];
      blocks_[b].for_each([&](int x) { block_of_[static_cast<std::size_t>(x)] = static_cast<int>(b); });
    }
    if (seen != Subset::full(universe_size))
      throw error("InvalidPartition", "blocks do not cover the universe");
  }

  /// From a restricted growth string: rgs[i] = block index of element i.
  static Partition from_rgs(const std::vector<int>& rgs) {
    int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<Subset> blocks(static_cast<std::size_t>(nblocks),
                               Subset(static_cast<int>(rgs.size())));
    for (std::size_t i = 0; i < rgs.size(); ++i)
      blocks[static_cast<std::size_t>(rgs[i])].add(static_cast<int>(i));
    return Partition(static_cast<int>(rgs.size()), std::move(blocks));
  }

  int universe_size() const { return static_cast<int>(block_of_.size()); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  int block_index_of(int x) const { return block_of_[static_cast<std::size_t>(x)]; }
  const Subset& block_of(int x) const {
    return blocks_[static_cast<std::size_t>(block_index_of(x))];
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    if (a.block_of_.size() != b.block_of_.size()) return false;
    // Compare as set partitions (block order irrelevant).
    for (std::size_t x = 0; x < a.block_of_.size(); ++x)
      if (a.blocks_[static_cast<std::size_t>(a.block_of_[x])] !=
          b.blocks_[static_cast<std::size_t>(b.block_of_[x])])
        return false;
    return true;
  }

 private:
  std::vector<Subset> blocks_;
  std::vector<int> block_of_;
};

/// Approximation space (U, R): a universe with an equivalence partition.
struct ApproximationSpace {
  Universe universe;
  Partition partition;

  ApproximationSpace(Universe u, Partition p)
      : universe(std::move(u)), partition(std::move(p)) {
    if (partition.universe_size() != universe.size)
      throw error("InvalidPartition", "partition carrier != universe size");
  }

  /// Union of blocks meeting x.
  Subset upper(const Subset& x) const {
    Subset out(universe.size);
    for (const Subset& b : partition.blocks())
      if (b.intersects(x)) out |= b;
    return out;
  }

  /// Union of blocks contained in x.
  Subset lower(const Subset& x) const {
    Subset out(universe.size);
    for (const Subset& b : partition.blocks())
      if (b.subset_of(x)) out |= b;
    return out;
  }
};

/// Total binary operation on a universe, as a size x size table of indices.
class OpTable {
 public:
  OpTable(int n, std::vector<int> entries) : n_(n), t_(std::move(entries)) {
    if (static_cast<int>(t_.size()) != n_ * n_)
      throw error("InvalidOp", "table must have size*size entries");
    for (int v : t_)
      if (v < 0 || v >= n_) throw error("InvalidOp", "entry out of range: " + std::to_string(v));
  }

  /// Addition mod n on {0..n-1}.
  static OpTable zn_add(int n) {
    std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
    return OpTable(n, std::move(t));
  }

  /// Multiplication mod p on {1..p-1}; element i stands for the value i+1.
  /// Requires p prime, otherwise products can leave the carrier.
  static OpTable mod_mul(int p) {
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw error("InvalidOp", "mod_mul modulus must be prime");
    if (p < 2) throw error("InvalidOp", "mod_mul modulus must be prime");
    int n = p - 1;
    std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t[static_cast<std::size_t>(a * n + b)] = (a + 1) * (b + 1) % p - 1;
    return OpTable(n, std::move(t));
  }

  int size() const { return n_; }
  int at(int a, int b) const { return t_[static_cast<std::size_t>(a * n_ + b)]; }
  const std::vector<int>& entries() const { return t_; }

  bool commutative() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (at(a, b) != at(b, a)) return false;
    return true;
  }

  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  int n_;
  std::vector<int> t_;
};

/// Pointwise product {a*b : a in A, b in B}, computed in the total table.
inline Subset set_product(const OpTable& op, const Subset& a, const Subset& b) {
  Subset out(op.size());
  a.for_each([&](int x) { b.for_each([&](int y) { out.add(op.at(x, y)); }); });
  return out;
}

}  // namespace roughtop

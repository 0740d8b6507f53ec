#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace roughtop {

/// Subset of a finite carrier {0..nbits-1}, stored as a bit vector.
/// Small carriers (up to 128 points) stay inline; product carriers spill.
class Subset {
 public:
  Subset() = default;

  explicit Subset(int nbits) : nbits_(nbits), words_(word_count(nbits), 0u) {}

  Subset(int nbits, std::initializer_list<int> elems) : Subset(nbits) {
    for (int e : elems) add(e);
  }

  static Subset full(int nbits) {
    Subset s(nbits);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ull;
    s.trim();
    return s;
  }

  static Subset single(int nbits, int elem) {
    Subset s(nbits);
    s.add(elem);
    return s;
  }

  int size() const { return nbits_; }

  bool contains(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void add(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  void remove(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  /// Least element, or -1 when empty.
  int first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
  }

  /// Least element strictly greater than i, or -1.
  int next(int i) const {
    for (int j = i + 1; j < nbits_; ++j)
      if (contains(j)) return j;
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int i = static_cast<int>(w * 64) + std::countr_zero(bits);
        fn(i);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  Subset& operator|=(const Subset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  Subset& operator-=(const Subset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  Subset complement() const {
    Subset s(nbits_);
    for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
    s.trim();
    return s;
  }

  bool subset_of(const Subset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const Subset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

  /// Lexicographic on (nbits, bit words); a stable total order for reports.
  friend bool operator<(const Subset& a, const Subset& b) {
    if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

  std::string str() const {
    std::string out = "{";
    bool sep = false;
    for_each([&](int i) {
      if (sep) out += ',';
      out += std::to_string(i);
      sep = true;
    });
    out += '}';
    return out;
  }

 private:
  static std::size_t word_count(int nbits) {
    return static_cast<std::size_t>(nbits + 63) / 64;
  }

  void trim() {
    if (nbits_ & 63) words_.back() &= (1ull << (nbits_ & 63)) - 1;
  }

  int nbits_ = 0;
  boost::container::small_vector<std::uint64_t, 2> words_;
};

/// All subsets of `of`, in increasing order of the bit pattern.
/// Callback returns false to stop early.
template <typename Fn>
void for_each_subset_of(const Subset& of, Fn&& fn) {
  std::vector<int> elems = of.elements();
  const std::size_t k = elems.size();
  for (std::uint64_t mask = 0;; ++mask) {
    Subset s(of.size());
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) s.add(elems[i]);
    if (!fn(static_cast<const Subset&>(s))) return;
    if (mask + 1 == (1ull << k)) return;
  }
}

}  // namespace roughtop

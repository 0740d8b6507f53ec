#pragma once

#include "roughtop/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace roughtop {

/// Outcome of the four rough-group axioms, with the extracted certificate
/// data (identity, inverse map, upper/lower approximations).
struct RoughGroupResult {
  Verdict verdict;
  int violated_axiom = 0;  // 1..4 when the verdict fails

  int identity = -1;               // index of e in upper(G); -1 if axiom (3) failed
  bool multiple_identities = false;  // reported, never fatal; least index is chosen
  std::vector<int> inverse;        // per element; -1 outside G or when missing
  bool unique_inverses = true;
  Subset upper, lower;

  bool ok() const { return verdict.ok; }
  int inverse_of(int x) const { return inverse[static_cast<std::size_t>(x)]; }

  /// {x^-1 : x in S} under the canonical (least-index) inverse map.
  Subset inv_set(const Subset& s) const {
    Subset out(static_cast<int>(inverse.size()));
    s.for_each([&](int x) {
      if (inverse_of(x) >= 0) out.add(inverse_of(x));
    });
    return out;
  }
};

/// Checks the rough-group axioms for G inside (U, R, *):
///   (1) products of G stay in upper(G);
///   (2) the operation is associative on upper(G)^3 (total table);
///   (3) upper(G) has a two-sided identity e;
///   (4) every x in G has an inverse inside G.
inline RoughGroupResult check_rough_group(const ApproximationSpace& space, const OpTable& op,
                                          const Subset& g) {
  if (g.empty()) throw error("EmptySubset", "G must be non-empty");
  if (op.size() != space.universe.size)
    throw error("InvalidOp", "operation table size != universe size");

  RoughGroupResult r;
  r.upper = space.upper(g);
  r.lower = space.lower(g);
  r.inverse.assign(static_cast<std::size_t>(space.universe.size), -1);

  std::vector<int> gs = g.elements();
  std::vector<int> ups = r.upper.elements();

  for (int x : gs)
    for (int y : gs)
      if (!r.upper.contains(op.at(x, y))) {
        r.violated_axiom = 1;
        r.verdict = Verdict::fail("axiom (1): " + std::to_string(x) + "*" + std::to_string(y) +
                                  " = " + std::to_string(op.at(x, y)) + " escapes upper(G)");
        return r;
      }

  for (int x : ups)
    for (int y : ups)
      for (int z : ups)
        if (op.at(op.at(x, y), z) != op.at(x, op.at(y, z))) {
          r.violated_axiom = 2;
          r.verdict = Verdict::fail("axiom (2): (" + std::to_string(x) + "*" + std::to_string(y) +
                                    ")*" + std::to_string(z) + " != " + std::to_string(x) + "*(" +
                                    std::to_string(y) + "*" + std::to_string(z) + ")");
          return r;
        }

  for (int e : ups) {
    bool ident = true;
    for (int x : ups)
      if (op.at(e, x) != x || op.at(x, e) != x) {
        ident = false;
        break;
      }
    if (ident) {
      if (r.identity < 0)
        r.identity = e;
      else
        r.multiple_identities = true;
    }
  }
  if (r.identity < 0) {
    r.violated_axiom = 3;
    r.verdict = Verdict::fail("axiom (3): no identity element in upper(G)");
    return r;
  }

  for (int x : gs) {
    int found = -1;
    for (int y : gs)
      if (op.at(x, y) == r.identity && op.at(y, x) == r.identity) {
        if (found < 0)
          found = y;
        else
          r.unique_inverses = false;
      }
    if (found < 0) {
      r.violated_axiom = 4;
      r.verdict = Verdict::fail("axiom (4): " + std::to_string(x) + " has no inverse inside G");
      r.inverse.assign(r.inverse.size(), -1);
      return r;
    }
    r.inverse[static_cast<std::size_t>(x)] = found;
  }

  r.verdict = Verdict::pass();
  return r;
}

/// Subgroup criterion vs. the direct definition, cross-checked. Both
/// criterion halves are evaluated independently so reports name every
/// violated condition, not just the first.
struct SubgroupResult {
  Verdict products_in_upper;  // criterion (1): H*H inside upper(H)
  Verdict inverses_inside;    // criterion (2): inverses of H stay in H
  Verdict criterion;          // conjunction of the two
  Verdict definition;         // H passes the rough-group axioms itself
  bool agree = true;

  bool ok() const { return criterion.ok; }
};

inline SubgroupResult check_rough_subgroup(const ApproximationSpace& space, const OpTable& op,
                                           const Subset& g, const RoughGroupResult& parent,
                                           const Subset& h) {
  if (!parent.ok()) throw error("ParentNotRoughGroup", parent.verdict.witness);
  if (!h.subset_of(g)) throw error("NotASubgroup", "H must be a subset of G");

  SubgroupResult r;
  if (h.empty()) {
    r.products_in_upper = r.inverses_inside = r.criterion = Verdict::fail("H is empty");
    r.definition = Verdict::fail("H is empty");
    return r;
  }

  Subset upper_h = space.upper(h);
  std::vector<int> hs = h.elements();
  for (int x : hs) {
    for (int y : hs)
      if (!upper_h.contains(op.at(x, y)) && r.products_in_upper.ok)
        r.products_in_upper =
            Verdict::fail("criterion (1): " + std::to_string(x) + "*" + std::to_string(y) +
                          " = " + std::to_string(op.at(x, y)) + " escapes upper(H)");
  }
  for (int y : hs) {
    bool has = false;
    for (int z : hs)
      if (op.at(y, z) == parent.identity && op.at(z, y) == parent.identity) {
        has = true;
        break;
      }
    if (!has && r.inverses_inside.ok)
      r.inverses_inside =
          Verdict::fail("criterion (2): inverse of " + std::to_string(y) + " is not inside H");
  }
  r.criterion = r.products_in_upper.ok ? r.inverses_inside : r.products_in_upper;

  r.definition = check_rough_group(space, op, h).verdict;
  r.agree = r.criterion.ok == r.definition.ok;
  return r;
}

struct NormalityFlags {
  Verdict symmetric;            // H = H^-1
  Verdict normal;               // gH = Hg for all g in G
  Verdict weakly_rough_normal;  // (g H g^-1) & G inside H for all g in G
};

inline NormalityFlags normality_flags(const ApproximationSpace& space, const OpTable& op,
                                      const Subset& g, const RoughGroupResult& parent,
                                      const Subset& h) {
  if (!parent.ok()) throw error("ParentNotRoughGroup", parent.verdict.witness);
  (void)space;

  NormalityFlags f;
  Subset inv_h = parent.inv_set(h);
  if (inv_h != h) {
    Subset off = inv_h - h;
    f.symmetric = Verdict::fail("H^-1 contains " + std::to_string(off.first()) + " outside H");
  }

  g.for_each([&](int gg) {
    Subset single = Subset::single(op.size(), gg);
    if (f.normal.ok) {
      Subset left = set_product(op, single, h);
      Subset right = set_product(op, h, single);
      if (left != right)
        f.normal = Verdict::fail("g=" + std::to_string(gg) + ": gH = " + left.str() +
                                 " but Hg = " + right.str());
    }
    if (f.weakly_rough_normal.ok) {
      int ginv = parent.inverse_of(gg);
      if (ginv >= 0) {
        Subset conj(op.size());
        h.for_each([&](int x) { conj.add(op.at(op.at(gg, x), ginv)); });
        Subset breach = (conj & g) - h;
        if (breach.any())
          f.weakly_rough_normal =
              Verdict::fail("g=" + std::to_string(gg) + ": conjugate reaches " +
                            std::to_string(breach.first()) + " in G but outside H");
      }
    }
  });
  return f;
}

/// Least m >= 2 with H^m = H, from the power iteration H^2, H^3, ...
/// A cycle that misses H settles the answer early: no later power returns.
struct OrderResult {
  bool exceeded = false;
  int order = 0;                // valid when !exceeded
  std::vector<Subset> powers;   // H^2, H^3, ... up to the answer or a repeat
};

inline OrderResult subset_order(const ApproximationSpace& space, const OpTable& op,
                                const RoughGroupResult& parent, const Subset& h, int cap) {
  if (h.empty()) throw error("EmptySubset", "H must be non-empty");
  if (parent.inv_set(h) != h) throw error("NotSymmetric", "H must equal H^-1");
  (void)space;

  OrderResult r;
  Subset power = h;
  for (int m = 2; m <= cap; ++m) {
    power = set_product(op, power, h);
    r.powers.push_back(power);
    if (power == h) {
      r.order = m;
      return r;
    }
    for (std::size_t k = 0; k + 1 < r.powers.size(); ++k)
      if (r.powers[k] == power) {
        r.exceeded = true;  // cycling without H: no power ever returns
        return r;
      }
  }
  r.exceeded = true;
  return r;
}

struct CosetReport {
  std::vector<std::pair<int, Subset>> cosets;  // (g, gH) for g over upper(G)
  Verdict disjoint_or_equal;
};

inline CosetReport coset_report(const ApproximationSpace& space, const OpTable& op,
                                const RoughGroupResult& parent, const Subset& h) {
  (void)space;
  CosetReport r;
  parent.upper.for_each([&](int gg) {
    r.cosets.emplace_back(gg, set_product(op, Subset::single(op.size(), gg), h));
  });
  for (std::size_t i = 0; i < r.cosets.size() && r.disjoint_or_equal.ok; ++i)
    for (std::size_t j = i + 1; j < r.cosets.size(); ++j) {
      const Subset& a = r.cosets[i].second;
      const Subset& b = r.cosets[j].second;
      if (a != b && a.intersects(b)) {
        r.disjoint_or_equal =
            Verdict::fail("cosets of g=" + std::to_string(r.cosets[i].first) + " and h=" +
                          std::to_string(r.cosets[j].first) + " overlap without being equal");
        break;
      }
    }
  return r;
}

}  // namespace roughtop

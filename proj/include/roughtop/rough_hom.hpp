#pragma once

#include "roughtop/trg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace roughtop {

/// Surjection between the upper approximations of two rough structures.
struct RoughHom {
  RoughStructure source;
  RoughStructure target;
  std::vector<int> values;  // indexed by source-universe element; -1 off upper(G1)

  RoughHom(RoughStructure src, RoughStructure tgt, std::vector<int> vals)
      : source(std::move(src)), target(std::move(tgt)), values(std::move(vals)) {
    if (!source.cert.ok()) throw error("NotRoughGroup", "source: " + source.cert.verdict.witness);
    if (!target.cert.ok()) throw error("NotRoughGroup", "target: " + target.cert.verdict.witness);
    if (static_cast<int>(values.size()) != source.space.universe.size)
      throw error("CarrierMismatch", "value table size != source universe size");
    source.upper().for_each([&](int x) {
      int y = values[static_cast<std::size_t>(x)];
      if (y < 0 || y >= target.space.universe.size || !target.upper().contains(y))
        throw error("CarrierMismatch",
                    "image of " + std::to_string(x) + " is outside upper(G2)");
    });
  }

  int at(int x) const { return values[static_cast<std::size_t>(x)]; }

  Subset image(const Subset& s) const {
    Subset out(target.space.universe.size);
    (s & source.upper()).for_each([&](int x) { out.add(at(x)); });
    return out;
  }

  /// Preimage within upper(G1), the map's domain.
  Subset preimage(const Subset& s) const {
    Subset out(source.space.universe.size);
    source.upper().for_each([&](int x) {
      if (s.contains(at(x))) out.add(x);
    });
    return out;
  }
};

struct HomCheck {
  Verdict surjective;  // onto upper(G2); an invariant breach, reported first
  Verdict cond1;       // maps G1 onto G2
  Verdict cond2;       // multiplicative on G1 and the identity
  Verdict cond3;       // commutes with upper approximation (singleton form)
  Verdict overall;
};

/// Verifies the three homomorphism conditions. Condition (3) uses the
/// singleton reduction: upper approximation distributes over unions, so
/// quantifying over all subsets collapses to the equivalence classes of
/// single elements of G1. The exponential form stays available as an oracle.
inline HomCheck check_rough_hom(const RoughHom& h) {
  HomCheck c;
  if (h.image(h.source.upper()) != h.target.upper())
    c.surjective = Verdict::fail("NotSurjective: upper(G2) contains " +
                                 std::to_string((h.target.upper() - h.image(h.source.upper())).first()) +
                                 ", never hit");

  Subset img_g = h.image(h.source.g);
  if (!img_g.subset_of(h.target.g))
    c.cond1 = Verdict::fail("image of G1 reaches " + (img_g - h.target.g).str() +
                            " outside G2");
  else if (img_g != h.target.g)
    c.cond1 = Verdict::fail("G2 element " + std::to_string((h.target.g - img_g).first()) +
                            " is never hit from G1");

  Subset dom2 = h.source.g;
  dom2.add(h.source.identity());
  dom2.for_each([&](int x) {
    dom2.for_each([&](int y) {
      if (!c.cond2.ok) return;
      int lhs = h.at(h.source.op.at(x, y));
      int rhs = h.target.op.at(h.at(x), h.at(y));
      if (lhs != rhs)
        c.cond2 = Verdict::fail("phi(" + std::to_string(x) + "*" + std::to_string(y) +
                                ") = " + std::to_string(lhs) + " but phi(x)*phi(y) = " +
                                std::to_string(rhs));
    });
  });

  h.source.g.for_each([&](int x) {
    if (!c.cond3.ok) return;
    const Subset& block = h.source.space.partition.block_of(x);
    Subset rhs = h.preimage(h.target.space.partition.block_of(h.at(x)));
    if (block != rhs)
      c.cond3 = Verdict::fail("h=" + std::to_string(x) + ": class " + block.str() +
                              " != preimage of the image class " + rhs.str());
  });

  c.overall = Verdict::pass();
  for (const Verdict* v : {&c.surjective, &c.cond1, &c.cond2, &c.cond3})
    if (!v->ok && c.overall.ok) c.overall = *v;
  return c;
}

/// Exponential cross-check of condition (3): every subset of G1 commutes
/// with upper approximation.
inline Verdict hom_condition3_oracle(const RoughHom& h, int cap = 16) {
  if (h.source.g.count() > cap)
    throw error("CapExceeded", "all-subsets oracle capped at |G1| = " + std::to_string(cap));
  Verdict out = Verdict::pass();
  for_each_subset_of(h.source.g, [&](const Subset& sub) {
    Subset lhs = h.source.space.upper(sub);
    Subset rhs = h.preimage(h.target.space.upper(h.image(sub)));
    if (lhs != rhs) {
      out = Verdict::fail("H = " + sub.str() + ": upper(H) = " + lhs.str() +
                          " != phi^-1(upper(phi(H))) = " + rhs.str());
      return false;
    }
    return true;
  });
  return out;
}

struct KernelReport {
  Subset kernel;
  bool empty = true;
  // Populated only when the kernel is non-empty:
  SubgroupResult subgroup;
  Verdict weakly_rough_normal;
  Verdict square_image;  // phi(ker^2) = {e2}
};

inline KernelReport kernel(const RoughHom& h) {
  HomCheck c = check_rough_hom(h);
  if (!c.overall.ok) throw error("HomNotVerified", c.overall.witness);
  KernelReport r;
  r.kernel = Subset(h.source.space.universe.size);
  h.source.g.for_each([&](int x) {
    if (h.at(x) == h.target.identity()) r.kernel.add(x);
  });
  r.empty = r.kernel.empty();
  if (r.empty) return r;

  r.subgroup = check_rough_subgroup(h.source.space, h.source.op, h.source.g, h.source.cert,
                                    r.kernel);
  r.weakly_rough_normal =
      normality_flags(h.source.space, h.source.op, h.source.g, h.source.cert, r.kernel)
          .weakly_rough_normal;
  Subset sq = h.image(set_product(h.source.op, r.kernel, r.kernel));
  if (sq == Subset::single(h.target.space.universe.size, h.target.identity()))
    r.square_image = Verdict::pass();
  else
    r.square_image = Verdict::fail("phi(ker^2) = " + sq.str());
  return r;
}

enum class Direction { forward, backward };

struct TransportReport {
  Subset transported;
  SubgroupResult subgroup;
  Tri normality;  // forward: normal image when H normal; backward: weak normality
};

/// Pushes a verified rough subgroup through the hom (forward: phi(H) in the
/// target; backward: phi^-1(H) & G1 in the source), re-verifying subgroup
/// status and the transported normality notion.
inline TransportReport transport_subgroup(const RoughHom& h, const Subset& hsub,
                                          Direction dir) {
  HomCheck c = check_rough_hom(h);
  if (!c.overall.ok) throw error("HomNotVerified", c.overall.witness);

  const RoughStructure& from = dir == Direction::forward ? h.source : h.target;
  const RoughStructure& to = dir == Direction::forward ? h.target : h.source;
  SubgroupResult pre = check_rough_subgroup(from.space, from.op, from.g, from.cert, hsub);
  if (!pre.ok()) throw error("NotASubgroup", pre.criterion.witness);

  TransportReport r;
  r.transported = dir == Direction::forward ? h.image(hsub) : (h.preimage(hsub) & h.source.g);
  r.subgroup = check_rough_subgroup(to.space, to.op, to.g, to.cert, r.transported);

  NormalityFlags pre_flags = normality_flags(from.space, from.op, from.g, from.cert, hsub);
  if (dir == Direction::forward) {
    if (!pre_flags.normal.ok)
      r.normality = Tri::na("H is not normal");
    else {
      Verdict v = normality_flags(to.space, to.op, to.g, to.cert, r.transported).normal;
      r.normality = v.ok ? Tri::yes() : Tri::no(v.witness);
    }
  } else {
    if (!pre_flags.weakly_rough_normal.ok)
      r.normality = Tri::na("H is not weakly rough normal");
    else {
      Verdict v =
          normality_flags(to.space, to.op, to.g, to.cert, r.transported).weakly_rough_normal;
      r.normality = v.ok ? Tri::yes() : Tri::no(v.witness);
    }
  }
  return r;
}

struct OpennessReport {
  Verdict open_map;  // phi restricted to (G1, tauG1) -> (G2, tauG2)
  bool e1_in_g1 = false, e2_in_g2 = false;
  bool g1_open = false, g2_open = false;
  // The preamble of the open mapping statement asks for Hausdorff spaces;
  // without it (e.g. discrete onto indiscrete) openness genuinely fails.
  bool hausdorff_source = false, hausdorff_target = false;
  // Constant on finite carriers; reported rather than computed.
  bool locally_compact = true, sigma_compact = true;
};

inline OpennessReport openness(const RoughHom& h) {
  HomCheck c = check_rough_hom(h);
  if (!c.overall.ok) throw error("HomNotVerified", c.overall.witness);
  MapTable full = MapTable::tabulate(h.source.tau, h.target.tau,
                                     [&](int x) { return h.at(x); });
  if (Verdict cont = is_continuous(full); !cont.ok) throw error("NotContinuous", cont.witness);

  OpennessReport r;
  r.e1_in_g1 = h.source.e_in_g();
  r.e2_in_g2 = h.target.e_in_g();
  r.g1_open = h.source.g_open_in_upper();
  r.g2_open = h.target.g_open_in_upper();
  r.hausdorff_source = h.source.tau_g.separation().t2.ok;
  r.hausdorff_target = h.target.tau_g.separation().t2.ok;
  MapTable restricted = MapTable::tabulate(h.source.tau_g, h.target.tau_g,
                                           [&](int x) { return h.at(x); });
  r.open_map = is_open_map(restricted);
  return r;
}

}  // namespace roughtop

#include "roughtop/trg.hpp"
#include "roughtop/enumerate.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

using namespace roughtop;

namespace {

/// Every (partition, G, topology) candidate over Zn addition, n <= n_max.
template <typename Fn>
void small_structures(int n_max, Fn&& fn) {
  for (int n = 1; n <= n_max; ++n) {
    OpTable op = OpTable::zn_add(n);
    for_each_partition(n, [&](const Partition& p) {
      ApproximationSpace space(Universe(n), p);
      for_each_nonempty_subset(n, [&](const Subset& g) {
        Subset up = space.upper(g);
        for_each_topology(up.count(), [&](const std::vector<Subset>& min) {
          fn(make_structure(space, op, g, remap_topology(min, up, n)));
          return true;
        });
        return true;
      });
      return true;
    });
  }
}

}  // namespace

TEST_CASE("the catalogued structures are topological rough groups") {
  RoughStructure e31 = fixtures::ex31();
  REQUIRE(e31.cert.ok());
  CHECK(check_trg(e31).ok);
  CHECK_FALSE(e31.e_in_g());

  RoughStructure e34 = fixtures::ex34();
  REQUIRE(e34.cert.ok());
  CHECK(check_trg(e34).ok);
  CHECK(e34.e_in_g());
  CHECK(e34.identity() == 0);

  RoughStructure e29 = fixtures::ex29();
  REQUIRE(e29.cert.ok());
  CHECK(check_trg(e29).ok);
}

TEST_CASE("triple-product continuity separates the catalogued structures") {
  StronglyResult s29 = check_strongly(fixtures::ex29());
  CHECK(s29.verdict.ok);

  StronglyResult s31 = check_strongly(fixtures::ex31());
  CHECK_FALSE(s31.verdict.ok);
  CHECK(s31.verdict.witness.find("triple") != std::string::npos);
  CHECK_FALSE(s31.domain_note.empty());

  // Verify the reported witness triple is a genuine violation.
  RoughStructure e31 = fixtures::ex31();
  int x, y, z;
  REQUIRE(std::sscanf(s31.verdict.witness.c_str(), "triple (%d,%d,%d)", &x, &y, &z) == 3);
  Subset images(6);
  e31.tau_g.min_open(x).for_each([&](int a) {
    e31.tau_g.min_open(y).for_each([&](int b) {
      e31.tau_g.min_open(z).for_each([&](int c) {
        if (e31.upper().contains(e31.op.at(e31.op.at(a, b), c)))
          images.add(e31.op.at(e31.op.at(a, b), c));
      });
    });
  });
  CHECK_FALSE(images.subset_of(e31.tau.min_open(e31.op.at(e31.op.at(x, y), z))));
}

TEST_CASE("discrete structures are strongly topological rough groups (n <= 3)") {
  for (int n = 1; n <= 3; ++n) {
    OpTable op = OpTable::zn_add(n);
    for_each_partition(n, [&](const Partition& p) {
      ApproximationSpace space(Universe(n), p);
      for_each_nonempty_subset(n, [&](const Subset& g) {
        RoughStructure s =
            make_structure(space, op, g, Topology::discrete(n, space.upper(g)));
        if (s.cert.ok()) {
          REQUIRE(check_trg(s).ok);
          REQUIRE(check_strongly(s).verdict.ok);
        }
        return true;
      });
      return true;
    });
  }
}

TEST_CASE("the inverse map is an involutive homeomorphism on every trg (n <= 3)") {
  small_structures(3, [&](const RoughStructure& s) {
    if (!s.cert.ok() || !check_trg(s).ok) return;
    MapTable inv = inverse_map_table(s);
    REQUIRE(is_homeomorphism(inv).ok);
    s.g.for_each([&](int x) { REQUIRE(s.cert.inverse_of(s.cert.inverse_of(x)) == x); });
  });
}

TEST_CASE("a symmetric square-bounded vee exists at e (constructive form, n <= 3)") {
  // With e in G against the smallest open W around e in upper(G), the set
  // V = m_G(e) & m_G(e)^-1 is a symmetric open neighborhood with V*V in W.
  small_structures(3, [&](const RoughStructure& s) {
    if (!s.cert.ok() || !check_trg(s).ok || !s.e_in_g()) return;
    Subset me = s.tau_g.min_open(s.identity());
    Subset v = me & s.cert.inv_set(me);
    REQUIRE(v.contains(s.identity()));
    REQUIRE(s.tau_g.is_open(v));
    REQUIRE(s.cert.inv_set(v) == v);
    REQUIRE(set_product(s.op, v, v).subset_of(s.tau.min_open(s.identity())));
  });
}

TEST_CASE("an isolated identity in upper(G) forces a discrete G (n <= 3)") {
  small_structures(3, [&](const RoughStructure& s) {
    if (!s.cert.ok() || !check_trg(s).ok) return;
    if (s.tau.min_open(s.identity()) == Subset::single(s.space.universe.size, s.identity()))
      REQUIRE(s.tau_g.is_discrete());
  });
}

TEST_CASE("base-axiom report on the catalogued structures") {
  BaseAxiomReport r34 = check_base_axioms(fixtures::ex34());
  CHECK(r34.t6_i.holds());
  CHECK(r34.t6_ii.holds());
  // e = 1 is in G but G is not open in upper(G) (the minimal open of 1 is
  // {1,7,8} by value), so the identity-base conditions do not apply.
  CHECK_FALSE(r34.t5[0].applicable());

  BaseAxiomReport r29 = check_base_axioms(fixtures::ex29());
  CHECK_FALSE(r29.t5[0].applicable());  // e = 0 is outside G

  // A discrete group-like structure with e in G and G = upper(G).
  ApproximationSpace space(Universe(4), Partition(4, {Subset::full(4)}));
  RoughStructure s = make_structure(space, OpTable::zn_add(4), Subset::full(4),
                                    Topology::discrete(4, Subset::full(4)));
  BaseAxiomReport rd = check_base_axioms(s);
  for (const Tri& t : rd.t5) CHECK(t.holds());
  CHECK(rd.t6_i.holds());
  CHECK(rd.t6_ii.holds());
}

TEST_CASE("base conditions t6 characterize trg over the canonical bases (n <= 3)") {
  small_structures(3, [&](const RoughStructure& s) {
    if (!s.cert.ok()) return;
    BaseAxiomReport r = check_base_axioms(s);
    REQUIRE((r.t6_i.holds() && r.t6_ii.holds()) == check_trg(s).ok);
  });
}

TEST_CASE("translations are injective and continuous on the catalogued structures") {
  TranslationReport t31 = translations(fixtures::ex31(), 3);
  CHECK(t31.left.ok);
  CHECK(t31.right.ok);

  // a = value 2 = index 1 in the mod-11 structure.
  TranslationReport t34 = translations(fixtures::ex34(), 1);
  CHECK(t34.left.ok);
  CHECK(t34.right.ok);

  CHECK_THROWS_AS(translations(fixtures::ex31(), 0), error);  // 0 not in G
}

TEST_CASE("translations hold across all small topological rough groups (n <= 3)") {
  small_structures(3, [&](const RoughStructure& s) {
    if (!s.cert.ok() || !check_trg(s).ok) return;
    s.g.for_each([&](int a) {
      TranslationReport t = translations(s, a);
      REQUIRE(t.left.ok);
      REQUIRE(t.right.ok);
    });
  });
}

TEST_CASE("closure via translates exhibits the dropped-hypothesis counterexample") {
  // A = values {2,6} = indices {1,5}: closure in G is values {2,5,6,9},
  // the translate side is A itself, and G is not open in upper(G).
  ClosureTranslates r = closure_via_translates(fixtures::ex34(), Subset(10, {1, 5}));
  CHECK(r.lhs == Subset(10, {1, 4, 5, 8}));
  CHECK(r.rhs == Subset(10, {1, 5}));
  CHECK_FALSE(r.equal);
  CHECK(r.e_in_g);
  CHECK_FALSE(r.g_open_in_upper);
  CHECK(r.base_v == Subset(10, {0}));

  ClosureTranslates empty = closure_via_translates(fixtures::ex34(), Subset(10));
  CHECK(empty.lhs.empty());
  CHECK(empty.rhs.empty());
  CHECK(empty.equal);
}

TEST_CASE("closure via translates is exact under the hypotheses (n <= 3, discrete)") {
  for (int n = 1; n <= 3; ++n) {
    OpTable op = OpTable::zn_add(n);
    ApproximationSpace space(Universe(n), Partition(n, {Subset::full(n)}));
    RoughStructure s = make_structure(space, op, Subset::full(n),
                                      Topology::discrete(n, Subset::full(n)));
    REQUIRE(s.e_in_g());
    REQUIRE(s.g_open_in_upper());
    for_each_nonempty_subset(n, [&](const Subset& a) {
      REQUIRE(closure_via_translates(s, a).equal);
      return true;
    });
  }
}

TEST_CASE("identity core") {
  IdentityCore c34 = identity_core(fixtures::ex34());
  CHECK(c34.core == Subset(10, {0}));
  CHECK(c34.group.ok);
  CHECK_FALSE(c34.g_open_in_upper);

  ApproximationSpace space(Universe(4), Partition(4, {Subset::full(4)}));
  RoughStructure d = make_structure(space, OpTable::zn_add(4), Subset::full(4),
                                    Topology::discrete(4, Subset::full(4)));
  IdentityCore cd = identity_core(d);
  CHECK(cd.core == Subset(4, {0}));
  CHECK(cd.group.ok);

  CHECK_THROWS_AS(identity_core(fixtures::ex31()), error);  // e = 0 not in G
}

TEST_CASE("special element sets") {
  RoughStructure e31 = fixtures::ex31();
  SpecialSets s = special_sets(e31, 3);
  CHECK(s.order2.set == Subset(6, {3}));  // 3+3 = 0; 2+2 = 4; 4+4 = 2
  CHECK(s.commutant.set == e31.g);        // addition is commutative

  RoughStructure e34 = fixtures::ex34();
  SpecialSets t = special_sets(e34, 0);
  CHECK(t.commutant.set == e34.g);
  CHECK(t.square_roots.set == Subset(10, {0}));  // only 1*1 = 1 within G
  CHECK(t.order2.set == Subset(10, {0}));

  CHECK_THROWS_AS(special_sets(e31, 0), error);  // 0 not in G
}

TEST_CASE("a trg with G*G inside G satisfies the group axioms on G (n <= 3)") {
  small_structures(3, [&](const RoughStructure& s) {
    if (!s.cert.ok() || !check_trg(s).ok) return;
    if (!set_product(s.op, s.g, s.g).subset_of(s.g)) return;
    REQUIRE(s.g.contains(s.identity()));
    s.g.for_each([&](int x) { REQUIRE(s.g.contains(s.cert.inverse_of(x))); });
  });
}

#include "roughtop/rough_group.hpp"
#include "roughtop/enumerate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace roughtop;

namespace {

ApproximationSpace z6_space() {
  return {Universe(6), Partition(6, {Subset(6, {0, 1, 2}), Subset(6, {3, 4, 5})})};
}

ApproximationSpace ex34_space() {
  return {Universe(10), Partition(10, {Subset(10, {0, 1, 4}), Subset(10, {2, 7, 8}),
                                       Subset(10, {3, 5, 6, 9})})};
}

}  // namespace

TEST_CASE("upper approximation on the listed spaces") {
  ApproximationSpace s = z6_space();
  CHECK(s.upper(Subset(6, {2, 3, 4})) == Subset::full(6));
  CHECK(s.upper(Subset(6)) == Subset(6));

  // Values {2,6} live at indices {1,5}; their blocks are {1,2,5} and
  // {4,6,7,10} by value, i.e. indices {0,1,4} and {3,5,6,9}.
  ApproximationSpace t = ex34_space();
  CHECK(t.upper(Subset(10, {1, 5})) == Subset(10, {0, 1, 3, 4, 5, 6, 9}));
}

TEST_CASE("lower approximation basics") {
  ApproximationSpace s = z6_space();
  CHECK(s.lower(Subset(6, {2, 3, 4})) == Subset(6));
  CHECK(s.lower(Subset(6, {0, 1, 2})) == Subset(6, {0, 1, 2}));
  CHECK(s.lower(Subset::full(6)) == Subset::full(6));
}

TEST_CASE("approximations agree with the relation oracle and satisfy the laws") {
  for (int n = 1; n <= 4; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      ApproximationSpace space(Universe(n), p);
      for (const Subset& x : oracle::power_set(n)) {
        Subset up = space.upper(x);
        Subset low = space.lower(x);
        REQUIRE(up == oracle::upper(space, x));
        REQUIRE(low == oracle::lower(space, x));
        REQUIRE(low.subset_of(x));
        REQUIRE(x.subset_of(up));
        REQUIRE(space.upper(up) == up);
        REQUIRE(space.lower(low) == low);
      }
      return true;
    });
  }
}

TEST_CASE("upper approximation distributes over union (exhaustive n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      ApproximationSpace space(Universe(n), p);
      for (std::uint64_t ma = 0; ma < (1ull << n); ++ma)
        for (std::uint64_t mb = 0; mb < (1ull << n); ++mb) {
          Subset a(n), b(n);
          for (int i = 0; i < n; ++i) {
            if ((ma >> i) & 1u) a.add(i);
            if ((mb >> i) & 1u) b.add(i);
          }
          if (space.upper(a | b) != (space.upper(a) | space.upper(b))) REQUIRE(false);
        }
      return true;
    });
  }
  SUCCEED();
}

TEST_CASE("rough group axioms: the catalogued structures pass") {
  ApproximationSpace s = z6_space();
  OpTable op = OpTable::zn_add(6);
  RoughGroupResult r = check_rough_group(s, op, Subset(6, {2, 3, 4}));
  REQUIRE(r.ok());
  CHECK(r.identity == 0);
  CHECK_FALSE(r.multiple_identities);
  CHECK(r.unique_inverses);
  CHECK(r.inverse_of(2) == 4);
  CHECK(r.inverse_of(4) == 2);
  CHECK(r.inverse_of(3) == 3);
  CHECK(r.upper == Subset::full(6));
  CHECK(r.lower == Subset(6));

  ApproximationSpace z3(Universe(3), Partition(3, {Subset(3, {0, 1}), Subset(3, {2})}));
  RoughGroupResult r29 = check_rough_group(z3, OpTable::zn_add(3), Subset(3, {1, 2}));
  REQUIRE(r29.ok());
  CHECK(r29.identity == 0);
  CHECK(r29.inverse_of(1) == 2);
  CHECK(r29.inverse_of(2) == 1);
}

TEST_CASE("rough group axioms: missing inverse is reported with a witness") {
  ApproximationSpace s = z6_space();
  RoughGroupResult r = check_rough_group(s, OpTable::zn_add(6), Subset(6, {2, 3}));
  REQUIRE_FALSE(r.ok());
  CHECK(r.violated_axiom == 4);
  CHECK(r.verdict.witness.find("2") != std::string::npos);
}

TEST_CASE("rough group check rejects the empty subset") {
  ApproximationSpace s = z6_space();
  CHECK_THROWS_AS(check_rough_group(s, OpTable::zn_add(6), Subset(6)), error);
}

TEST_CASE("inverse map is an involutive bijection on passing groups (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    OpTable op = OpTable::zn_add(n);
    for_each_partition(n, [&](const Partition& p) {
      ApproximationSpace space(Universe(n), p);
      for_each_nonempty_subset(n, [&](const Subset& g) {
        RoughGroupResult r = check_rough_group(space, op, g);
        if (r.ok() && r.unique_inverses) {
          REQUIRE(r.inv_set(g) == g);
          g.for_each([&](int x) { REQUIRE(r.inverse_of(r.inverse_of(x)) == x); });
        }
        return true;
      });
      return true;
    });
  }
}

TEST_CASE("subgroup criterion on the mod-11 structure") {
  ApproximationSpace space = ex34_space();
  OpTable op = OpTable::mod_mul(11);
  Subset g(10, {0, 1, 4, 5, 8});
  RoughGroupResult parent = check_rough_group(space, op, g);
  REQUIRE(parent.ok());

  // Values {2,6} = indices {1,5}: symmetric (2^-1 = 6 mod 11) but NOT a
  // rough subgroup: 6*6 = 36 = 3 mod 11 and 3 is outside upper({2,6}).
  SubgroupResult h1 = check_rough_subgroup(space, op, g, parent, Subset(10, {1, 5}));
  CHECK_FALSE(h1.ok());
  CHECK_FALSE(h1.products_in_upper.ok);
  CHECK(h1.inverses_inside.ok);
  CHECK(h1.agree);

  // H = G is always its own subgroup.
  SubgroupResult full = check_rough_subgroup(space, op, g, parent, g);
  CHECK(full.ok());
  CHECK(full.agree);

  // Values {2,9} = indices {1,8}: the inverse of 2 is 6, outside H.
  SubgroupResult h2 = check_rough_subgroup(space, op, g, parent, Subset(10, {1, 8}));
  CHECK_FALSE(h2.ok());
  CHECK_FALSE(h2.inverses_inside.ok);
  CHECK(h2.inverses_inside.witness.find("criterion (2)") != std::string::npos);
  CHECK(h2.inverses_inside.witness.find("1") != std::string::npos);

  // The identity alone is a subgroup.
  SubgroupResult he = check_rough_subgroup(space, op, g, parent, Subset(10, {0}));
  CHECK(he.ok());
  CHECK(he.agree);
}

TEST_CASE("subgroup criterion matches the direct definition (exhaustive n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    for (const OpTable& op : {OpTable::zn_add(n)}) {
      for_each_partition(n, [&](const Partition& p) {
        ApproximationSpace space(Universe(n), p);
        for_each_nonempty_subset(n, [&](const Subset& g) {
          RoughGroupResult parent = check_rough_group(space, op, g);
          if (!parent.ok()) return true;
          for_each_nonempty_subset(n, [&](const Subset& h) {
            if (!h.subset_of(g)) return true;
            SubgroupResult r = check_rough_subgroup(space, op, g, parent, h);
            REQUIRE(r.agree);
            return true;
          });
          return true;
        });
        return true;
      });
    }
  }
}

TEST_CASE("normality flags") {
  ApproximationSpace space = ex34_space();
  OpTable op = OpTable::mod_mul(11);
  Subset g(10, {0, 1, 4, 5, 8});
  RoughGroupResult parent = check_rough_group(space, op, g);

  NormalityFlags h1 = normality_flags(space, op, g, parent, Subset(10, {1, 5}));
  CHECK(h1.symmetric.ok);   // 2^-1 = 6 and 6^-1 = 2 mod 11
  CHECK(h1.normal.ok);      // the table is commutative
  CHECK(h1.weakly_rough_normal.ok);

  // {e} is weakly rough normal whenever e is in G.
  NormalityFlags he = normality_flags(space, op, g, parent, Subset(10, {0}));
  CHECK(he.weakly_rough_normal.ok);

  // Values {2,5} = indices {1,4}: 2^-1 = 6 is not in H, so not symmetric.
  NormalityFlags hs = normality_flags(space, op, g, parent, Subset(10, {1, 4}));
  CHECK_FALSE(hs.symmetric.ok);
}

TEST_CASE("subset order") {
  ApproximationSpace space = z6_space();
  OpTable op = OpTable::zn_add(6);
  Subset g(6, {2, 3, 4});
  RoughGroupResult parent = check_rough_group(space, op, g);

  // {0,3} is a genuine subgroup, so 2-order.
  ApproximationSpace one_block(Universe(6), Partition(6, {Subset::full(6)}));
  RoughGroupResult whole = check_rough_group(one_block, op, Subset::full(6));
  REQUIRE(whole.ok());
  OrderResult two = subset_order(one_block, op, whole, Subset(6, {0, 3}), 6);
  CHECK_FALSE(two.exceeded);
  CHECK(two.order == 2);

  OrderResult ident = subset_order(one_block, op, whole, Subset(6, {0}), 6);
  CHECK(ident.order == 2);

  // Z3, H = {1,2}: H^2 already contains 0 and the powers never return to H.
  ApproximationSpace z3(Universe(3), Partition(3, {Subset(3, {0, 1}), Subset(3, {2})}));
  OpTable op3 = OpTable::zn_add(3);
  RoughGroupResult p3 = check_rough_group(z3, op3, Subset(3, {1, 2}));
  REQUIRE(p3.ok());
  OrderResult ord = subset_order(z3, op3, p3, Subset(3, {1, 2}), 4);
  CHECK(ord.exceeded);

  // The odd residues mod 6 are 3-order: H^2 = evens, H^3 = odds = H.
  OrderResult odd = subset_order(one_block, op, whole, Subset(6, {1, 3, 5}), 6);
  CHECK_FALSE(odd.exceeded);
  CHECK(odd.order == 3);

  CHECK_THROWS_AS(subset_order(space, op, parent, Subset(6, {2}), 4), error);  // not symmetric
}

TEST_CASE("coset reports") {
  ApproximationSpace one_block(Universe(6), Partition(6, {Subset::full(6)}));
  OpTable op = OpTable::zn_add(6);
  RoughGroupResult parent = check_rough_group(one_block, op, Subset::full(6));
  REQUIRE(parent.ok());

  // 3-order H: all cosets disjoint-or-equal.
  CosetReport odd = coset_report(one_block, op, parent, Subset(6, {1, 3, 5}));
  CHECK(odd.disjoint_or_equal.ok);
  CHECK(odd.cosets.size() == 6);

  // A full group as its own (single) coset family.
  CosetReport full = coset_report(one_block, op, parent, Subset::full(6));
  CHECK(full.disjoint_or_equal.ok);

  // {0,1}: 0+H and 1+H overlap at 1 without being equal.
  CosetReport bad = coset_report(one_block, op, parent, Subset(6, {0, 1}));
  CHECK_FALSE(bad.disjoint_or_equal.ok);
}

TEST_CASE("3-order subsets always have disjoint-or-equal cosets (n <= 6)") {
  for (int n = 2; n <= 6; ++n) {
    OpTable op = OpTable::zn_add(n);
    ApproximationSpace one_block(Universe(n), Partition(n, {Subset::full(n)}));
    RoughGroupResult parent = check_rough_group(one_block, op, Subset::full(n));
    for_each_nonempty_subset(n, [&](const Subset& h) {
      if (parent.inv_set(h) != h) return true;
      OrderResult ord = subset_order(one_block, op, parent, h, 8);
      if (!ord.exceeded && ord.order == 3)
        REQUIRE(coset_report(one_block, op, parent, h).disjoint_or_equal.ok);
      return true;
    });
  }
}

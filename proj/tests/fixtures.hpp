#pragma once

// Hand-transcribed example structures used across the test suites. The
// catalogue module ships the same data as runtime fixtures; the tests here
// keep their own copies so the suites stay independent of it.

#include "roughtop/trg.hpp"

namespace fixtures {

using namespace roughtop;

// Z6 with blocks {0,1,2} / {3,4,5}, G = {2,3,4}, six listed open sets.
inline RoughStructure ex31() {
  ApproximationSpace space(Universe(6), Partition(6, {Subset(6, {0, 1, 2}), Subset(6, {3, 4, 5})}));
  OpTable op = OpTable::zn_add(6);
  Subset g(6, {2, 3, 4});
  Subset carrier = Subset::full(6);
  Topology tau = Topology::from_open_sets(
      6, carrier,
      {Subset(6), carrier, Subset(6, {2}), Subset(6, {4}), Subset(6, {2, 4}),
       Subset(6, {2, 3, 4})});
  return make_structure(space, op, g, tau);
}

// Z3 with blocks {0,1} / {2}, G = {1,2}, discrete topology.
inline RoughStructure ex29() {
  ApproximationSpace space(Universe(3), Partition(3, {Subset(3, {0, 1}), Subset(3, {2})}));
  OpTable op = OpTable::zn_add(3);
  Subset g(3, {1, 2});
  Topology tau = Topology::discrete(3, Subset::full(3));
  return make_structure(space, op, g, tau);
}

// Multiplication mod 11 on {1..10} (element i stands for i+1), blocks
// {1,2,5} / {3,8,9} / {4,6,7,10}, G = {1,2,5,6,9}, topology generated by the
// base {{1,7,8},{3,4,10},{2},{6},{2,5},{6,9}} — all as zero-based indices.
inline RoughStructure ex34() {
  ApproximationSpace space(
      Universe(10),
      Partition(10, {Subset(10, {0, 1, 4}), Subset(10, {2, 7, 8}), Subset(10, {3, 5, 6, 9})}));
  OpTable op = OpTable::mod_mul(11);
  Subset g(10, {0, 1, 4, 5, 8});
  Subset carrier = Subset::full(10);
  Topology tau = Topology::from_base(10, carrier,
                                     {Subset(10, {0, 6, 7}), Subset(10, {2, 3, 9}),
                                      Subset(10, {1}), Subset(10, {5}), Subset(10, {1, 4}),
                                      Subset(10, {5, 8})});
  return make_structure(space, op, g, tau);
}

}  // namespace fixtures

#pragma once

#include "roughtop/predicate.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace roughtop {

/// A worked structure with its documented expected verdicts, or a
/// non-executable entry whose carrier is infinite.
struct CatalogueEntry {
  std::string id;
  bool executable = true;
  std::string title;
  std::string note;  // transcription decisions and caveats
  std::function<RoughStructure()> build;
  std::vector<std::pair<Atom, bool>> expected;
  // Entry-specific checks beyond the atom map ((name, pass) pairs).
  std::function<std::vector<std::pair<std::string, bool>>(const RoughStructure&)> extra;
};

namespace detail {

inline RoughStructure build_ex31() {
  ApproximationSpace space(Universe(6),
                           Partition(6, {Subset(6, {0, 1, 2}), Subset(6, {3, 4, 5})}));
  Subset carrier = Subset::full(6);
  Topology tau = Topology::from_open_sets(
      6, carrier,
      {Subset(6), carrier, Subset(6, {2}), Subset(6, {4}), Subset(6, {2, 4}),
       Subset(6, {2, 3, 4})});
  return make_structure(space, OpTable::zn_add(6), Subset(6, {2, 3, 4}), tau);
}

inline RoughStructure build_ex29() {
  ApproximationSpace space(Universe(3), Partition(3, {Subset(3, {0, 1}), Subset(3, {2})}));
  return make_structure(space, OpTable::zn_add(3), Subset(3, {1, 2}),
                        Topology::discrete(3, Subset::full(3)));
}

inline RoughStructure build_ex34() {
  std::vector<std::string> labels;
  for (int v = 1; v <= 10; ++v) labels.push_back(std::to_string(v));
  ApproximationSpace space(
      Universe(10, labels),
      Partition(10, {Subset(10, {0, 1, 4}), Subset(10, {2, 7, 8}), Subset(10, {3, 5, 6, 9})}));
  Topology tau = Topology::from_base(10, Subset::full(10),
                                     {Subset(10, {0, 6, 7}), Subset(10, {2, 3, 9}),
                                      Subset(10, {1}), Subset(10, {5}), Subset(10, {1, 4}),
                                      Subset(10, {5, 8})});
  return make_structure(space, OpTable::mod_mul(11), Subset(10, {0, 1, 4, 5, 8}), tau);
}

}  // namespace detail

inline const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = [] {
    std::vector<CatalogueEntry> out;

    out.push_back(CatalogueEntry{
        "ex2.9",
        true,
        "Z3 with blocks {0,1}/{2}, G = {1,2}: a strongly topological rough group "
        "that is not a topological group",
        "The topology is not pinned down by the source text; the discrete topology "
        "on upper(G) = Z3 is used, the minimal choice that makes the claim true.",
        detail::build_ex29,
        {{Atom::rough_group, true},
         {Atom::trg, true},
         {Atom::strongly, true},
         {Atom::topological_group, false},
         {Atom::e_in_g, false},
         {Atom::discrete, true},
         {Atom::t0, true},
         {Atom::t1, true}},
        nullptr});

    out.push_back(CatalogueEntry{
        "ex3.1",
        true,
        "Z6 with blocks {0,1,2}/{3,4,5}, G = {2,3,4}, six open sets: a T0 "
        "topological rough group that is neither T1 nor strongly",
        "",
        detail::build_ex31,
        {{Atom::rough_group, true},
         {Atom::trg, true},
         {Atom::strongly, false},
         {Atom::t0, true},
         {Atom::t1, false},
         {Atom::upper_t0, false},
         {Atom::e_in_g, false},
         {Atom::topological_group, false},
         {Atom::g_open_in_upper, true},
         {Atom::homogeneous, false},
         {Atom::connected, true}},
        [](const RoughStructure& s) {
          std::vector<std::pair<std::string, bool>> checks;
          checks.emplace_back("the open set {4} is not closed in upper(G)",
                              !s.tau.is_closed(Subset(6, {4})));
          return checks;
        }});

    out.push_back(CatalogueEntry{
        "ex3.4",
        true,
        "multiplication mod 11 on {1..10} with blocks {1,2,5}/{3,8,9}/{4,6,7,10}, "
        "G = {1,2,5,6,9}: a T0 topological rough group with e in G, not T1",
        "The source prints the block label E2 twice; the third block is read as "
        "{4,6,7,10}. Subsets {2,6} and {5,9} are symmetric but fail the subgroup "
        "closure criterion (6*6 = 3 and 9*9 = 4 escape the respective uppers); "
        "only their upper-approximation arithmetic is asserted here.",
        detail::build_ex34,
        {{Atom::rough_group, true},
         {Atom::trg, true},
         {Atom::t0, true},
         {Atom::t1, false},
         {Atom::e_in_g, true},
         {Atom::upper_t0, false},
         {Atom::topological_group, false},
         {Atom::g_open_in_upper, false}},
        [](const RoughStructure& s) {
          std::vector<std::pair<std::string, bool>> checks;
          Subset e0 = Subset::single(10, 0);
          checks.emplace_back("the singleton of e is open and closed in G",
                              s.tau_g.is_open(e0) && s.tau_g.is_closed(e0));
          checks.emplace_back("closure of {2} in G equals {2,5}",
                              s.tau_g.closure(Subset(10, {1})) == Subset(10, {1, 4}));
          Subset h1(10, {1, 5}), h2(10, {4, 8});
          checks.emplace_back(
              "upper({2,6}) meets upper({5,9}) exactly in {1,2,5} while the sets are disjoint",
              (s.space.upper(h1) & s.space.upper(h2)) == Subset(10, {0, 1, 4}) &&
                  (h1 & h2).empty());
          return checks;
        }});

    out.push_back(CatalogueEntry{
        "ex3.9",
        false,
        "the integers under addition, blocks {4k+1,4k+2} and {4k+3,4k+4}, G = odd "
        "integers with a cofinite-flavored topology: T1 but not Hausdorff, e "
        "outside G",
        "Infinite carrier: verifying continuity and the separation axioms needs "
        "quantification over infinitely many open sets, out of reach of this "
        "engine. The search subcommand can hunt for finite structures with the "
        "same verdict profile instead (t1 & !t2 is unsatisfiable on finite "
        "carriers, where T1 forces discreteness).",
        nullptr,
        {},
        nullptr});

    out.push_back(CatalogueEntry{
        "ex3.12",
        false,
        "the integers as in ex3.9 with G = odds plus zero, isolating {0}: T1 but "
        "not Hausdorff with e inside G",
        "Infinite carrier; see ex3.9.",
        nullptr,
        {},
        nullptr});

    out.push_back(CatalogueEntry{
        "ex4.3",
        false,
        "the integers under addition with a one-sided arithmetic-progression "
        "topology on the odds: a topological rough group where no symmetric open "
        "square-bounded neighborhood of e exists (e outside G)",
        "Infinite carrier. The finite analogue of the repaired statement (with e "
        "in G) is swept as PROP-4.4.",
        nullptr,
        {},
        nullptr});

    out.push_back(CatalogueEntry{
        "ex5.4",
        false,
        "the integers under addition, H built from residues 1 mod 8 and their "
        "negatives, with a topology isolating most points: the closure of a rough "
        "subgroup inside G need not be a rough subgroup",
        "Infinite carrier. The repaired coset-classification statement is swept "
        "as PROP-5.5 and THM-5.8.",
        nullptr,
        {},
        nullptr});

    return out;
  }();
  return entries;
}

inline const CatalogueEntry& catalogue_entry(const std::string& id) {
  for (const CatalogueEntry& e : catalogue())
    if (e.id == id) return e;
  throw error("UnknownExample", id);
}

inline RoughStructure build_example(const std::string& id) {
  const CatalogueEntry& e = catalogue_entry(id);
  if (!e.executable)
    throw error("InfiniteEntry", id + " has an infinite carrier: " + e.note);
  return e.build();
}

struct ReproduceLine {
  std::string entry;
  std::string check;  // atom name or fixture description
  bool expected = true;
  bool actual = true;
  bool pass = true;
};

struct ReproduceReport {
  std::vector<ReproduceLine> lines;
  std::vector<std::string> infinite_entries;  // listed, not executed
  int mismatches = 0;
};

/// Builds every executable entry (or one), evaluates the expected atom maps
/// and the entry-specific fixtures, and diffs. Deterministic and read-only.
inline ReproduceReport reproduce(const std::string& only_id = "") {
  ReproduceReport report;
  for (const CatalogueEntry& e : catalogue()) {
    if (!only_id.empty() && e.id != only_id) continue;
    if (!e.executable) {
      report.infinite_entries.push_back(e.id);
      continue;
    }
    RoughStructure s = e.build();
    StructureProfile profile(&s);
    for (const auto& [atom, expected] : e.expected) {
      ReproduceLine line;
      line.entry = e.id;
      line.check = std::string(atom_name(atom));
      line.expected = expected;
      line.actual = profile.atom(atom);
      line.pass = line.expected == line.actual;
      if (!line.pass) ++report.mismatches;
      report.lines.push_back(std::move(line));
    }
    if (e.extra)
      for (const auto& [name, pass] : e.extra(s)) {
        ReproduceLine line;
        line.entry = e.id;
        line.check = name;
        line.expected = true;
        line.actual = pass;
        line.pass = pass;
        if (!pass) ++report.mismatches;
        report.lines.push_back(std::move(line));
      }
  }
  if (report.lines.empty() && report.infinite_entries.empty())
    throw error("UnknownExample", only_id);
  return report;
}

}  // namespace roughtop

#pragma once

#include "roughtop/topology.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace roughtop {

/// Total map between two finite spaces, tabulated over the domain carrier.
struct MapTable {
  Topology domain;
  Topology codomain;
  std::vector<int> values;  // indexed by domain ambient index; -1 off carrier

  MapTable(Topology dom, Topology cod, std::vector<int> vals)
      : domain(std::move(dom)), codomain(std::move(cod)), values(std::move(vals)) {
    if (static_cast<int>(values.size()) != domain.ambient())
      throw error("CarrierMismatch", "value table size != domain ambient size");
    domain.carrier().for_each([&](int x) {
      int y = values[static_cast<std::size_t>(x)];
      if (y < 0 || y >= codomain.ambient() || !codomain.carrier().contains(y))
        throw error("CarrierMismatch",
                    "image of " + std::to_string(x) + " is outside the codomain carrier");
    });
  }

  static MapTable tabulate(Topology dom, Topology cod, const std::function<int(int)>& fn) {
    std::vector<int> vals(static_cast<std::size_t>(dom.ambient()), -1);
    dom.carrier().for_each([&](int x) { vals[static_cast<std::size_t>(x)] = fn(x); });
    return MapTable(std::move(dom), std::move(cod), std::move(vals));
  }

  int at(int x) const { return values[static_cast<std::size_t>(x)]; }

  Subset image(const Subset& s) const {
    Subset out(codomain.ambient());
    (s & domain.carrier()).for_each([&](int x) { out.add(at(x)); });
    return out;
  }

  Subset preimage(const Subset& s) const {
    Subset out(domain.ambient());
    domain.carrier().for_each([&](int x) {
      if (s.contains(at(x))) out.add(x);
    });
    return out;
  }
};

/// Minimal-open criterion: f(m(p)) inside m(f(p)) at every carrier point.
inline Verdict is_continuous(const MapTable& f) {
  Verdict v = Verdict::pass();
  f.domain.carrier().for_each([&](int p) {
    if (!v.ok) return;
    Subset img = f.image(f.domain.min_open(p));
    const Subset& target = f.codomain.min_open(f.at(p));
    if (!img.subset_of(target)) {
      Subset escape = img - target;
      v = Verdict::fail("at point " + std::to_string(p) + ": image of the minimal open reaches " +
                        std::to_string(escape.first()) + " outside " + target.str());
    }
  });
  return v;
}

/// Definitional cross-check: the preimage of every open set is open.
/// Exponential (enumerates the codomain's open family); test/audit use only.
inline Verdict is_continuous_oracle(const MapTable& f, int cap = kOpenFamilyCap) {
  for (const Subset& o : f.codomain.open_family(cap)) {
    if (!f.domain.is_open(f.preimage(o)))
      return Verdict::fail("preimage of the open set " + o.str() + " is not open");
  }
  return Verdict::pass();
}

inline Verdict is_injective(const MapTable& f) {
  std::vector<int> seen(static_cast<std::size_t>(f.codomain.ambient()), -1);
  Verdict v = Verdict::pass();
  f.domain.carrier().for_each([&](int x) {
    if (!v.ok) return;
    int y = f.at(x);
    if (seen[static_cast<std::size_t>(y)] >= 0)
      v = Verdict::fail("points " + std::to_string(seen[static_cast<std::size_t>(y)]) + " and " +
                        std::to_string(x) + " both map to " + std::to_string(y));
    seen[static_cast<std::size_t>(y)] = x;
  });
  return v;
}

inline Verdict is_bijective(const MapTable& f) {
  Verdict inj = is_injective(f);
  if (!inj.ok) return inj;
  if (f.image(f.domain.carrier()) != f.codomain.carrier())
    return Verdict::fail("not onto the codomain carrier");
  return Verdict::pass();
}

/// Image of every open set of the domain is open in the codomain.
inline Verdict is_open_map(const MapTable& f, int cap = kOpenFamilyCap) {
  for (const Subset& o : f.domain.open_family(cap)) {
    if (!f.codomain.is_open(f.image(o)))
      return Verdict::fail("image " + f.image(o).str() + " of the open set " + o.str() +
                           " is not open");
  }
  return Verdict::pass();
}

inline Verdict is_homeomorphism(const MapTable& f) {
  if (Verdict b = is_bijective(f); !b.ok) return b;
  if (Verdict c = is_continuous(f); !c.ok) return c;
  // Openness of a bijection via minimal opens: f(m(x)) must be open.
  Verdict v = Verdict::pass();
  f.domain.carrier().for_each([&](int x) {
    if (!v.ok) return;
    Subset img = f.image(f.domain.min_open(x));
    if (!f.codomain.is_open(img))
      v = Verdict::fail("image " + img.str() + " of the minimal open of " + std::to_string(x) +
                        " is not open");
  });
  return v;
}

struct FixedPointReport {
  Subset fixed;
  bool clopen_expected = false;  // space extremally disconnected and Hausdorff
  Verdict clopen;
};

/// Fixed points of a self-map. The clopen verdict is the hook for the
/// fixed-point theorem on extremally disconnected Hausdorff spaces.
inline FixedPointReport fixed_point_set(const MapTable& f) {
  if (f.domain.carrier() != f.codomain.carrier())
    throw error("CarrierMismatch", "fixed points need a self-map");
  FixedPointReport r{Subset(f.domain.ambient()), false, Verdict::pass()};
  f.domain.carrier().for_each([&](int x) {
    if (f.at(x) == x) r.fixed.add(x);
  });
  r.clopen_expected =
      f.domain.extremally_disconnected().ok && f.domain.separation().t2.ok;
  if (f.domain.is_open(r.fixed) && f.domain.is_closed(r.fixed))
    r.clopen = Verdict::pass();
  else
    r.clopen = Verdict::fail("fixed set " + r.fixed.str() + " is not clopen");
  return r;
}

namespace detail {

/// Backtracking enumeration of self-homeomorphisms. Points may only map to
/// points with equal minimal-open size (multiset pruning); each completed
/// assignment is verified as a homeomorphism via m-structure transport.
template <typename Fn>
bool for_each_self_homeomorphism(const Topology& t, Fn&& fn) {
  std::vector<int> pts = t.carrier().elements();
  const std::size_t k = pts.size();
  std::vector<int> perm(k);      // perm[i]: image of pts[i], as index into pts
  std::vector<bool> used(k, false);
  std::vector<int> map(static_cast<std::size_t>(t.ambient()), -1);

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) {
      // Homeomorphism iff m(f(x)) = f(m(x)) for all x.
      for (std::size_t a = 0; a < k; ++a) {
        Subset img(t.ambient());
        t.min_open(pts[a]).for_each([&](int y) { img.add(map[static_cast<std::size_t>(y)]); });
        if (img != t.min_open(map[static_cast<std::size_t>(pts[a])])) return true;
      }
      return fn(static_cast<const std::vector<int>&>(map));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      if (t.min_open(pts[i]).count() != t.min_open(pts[j]).count()) continue;
      used[j] = true;
      map[static_cast<std::size_t>(pts[i])] = pts[j];
      bool keep_going = rec(i + 1);
      used[j] = false;
      map[static_cast<std::size_t>(pts[i])] = -1;
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace detail

/// Transitivity of the self-homeomorphism action, by pruned permutation
/// enumeration. Capped: the group can be as large as carrier! elements.
inline Verdict is_homogeneous(const Topology& t, int cap = 7) {
  if (t.carrier().count() > cap)
    throw error("CapExceeded", "homogeneity check capped at carrier size " + std::to_string(cap));
  std::vector<int> pts = t.carrier().elements();
  if (pts.size() <= 1) return Verdict::pass();
  int base = pts[0];
  Subset orbit = Subset::single(t.ambient(), base);
  detail::for_each_self_homeomorphism(t, [&](const std::vector<int>& map) {
    orbit.add(map[static_cast<std::size_t>(base)]);
    // Orbits of a group action partition the carrier, so reaching everything
    // from one base point settles transitivity.
    return orbit != t.carrier();
  });
  if (orbit == t.carrier()) return Verdict::pass();
  return Verdict::fail("no self-homeomorphism moves " + std::to_string(base) + " to " +
                       std::to_string((t.carrier() - orbit).first()));
}

}  // namespace roughtop

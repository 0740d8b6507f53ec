#pragma once

#include "roughtop/trg.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace roughtop {

/// Checkable properties of a candidate structure. Atoms presupposing the
/// rough-group certificate (trg, strongly, ...) evaluate to false on
/// candidates that fail the axioms.
enum class Atom {
  rough_group,
  trg,
  strongly,
  t0,
  t1,
  t2,
  t3,
  extremally_disconnected,
  e_in_g,
  g_open_in_upper,
  connected,
  homogeneous,
  upper_t0,
  upper_t1,
  discrete,
  topological_group,
};

inline constexpr int kAtomCount = 16;

inline constexpr std::array<std::string_view, kAtomCount> kAtomNames = {
    "rough_group", "trg",     "strongly",   "t0",
    "t1",          "t2",      "t3",         "extremally_disconnected",
    "e_in_g",      "g_open_in_upper", "connected", "homogeneous",
    "upper_t0",    "upper_t1", "discrete",  "topological_group",
};

/// Rough relative prices, used to order short-circuit evaluation.
inline constexpr std::array<int, kAtomCount> kAtomCosts = {
    8,  20, 50, 3,
    3,  4,  6,  10,
    1,  2,  6,  100,
    3,  3,  2,  22,
};

inline std::optional<Atom> atom_from_name(std::string_view name) {
  for (int i = 0; i < kAtomCount; ++i)
    if (kAtomNames[static_cast<std::size_t>(i)] == name) return static_cast<Atom>(i);
  return std::nullopt;
}

inline std::string_view atom_name(Atom a) {
  return kAtomNames[static_cast<std::size_t>(a)];
}

struct PredicateExpr {
  enum class Kind { atom, negation, conjunction, disjunction };
  Kind kind = Kind::atom;
  Atom atom = Atom::rough_group;
  std::vector<PredicateExpr> kids;
  int cost = 0;

  static PredicateExpr make_atom(Atom a) {
    PredicateExpr e;
    e.kind = Kind::atom;
    e.atom = a;
    e.cost = kAtomCosts[static_cast<std::size_t>(a)];
    return e;
  }
  static PredicateExpr make(Kind k, std::vector<PredicateExpr> kids) {
    PredicateExpr e;
    e.kind = k;
    e.cost = 0;
    for (const PredicateExpr& c : kids) e.cost += c.cost;
    e.kids = std::move(kids);
    return e;
  }
};

class parse_error : public error {
 public:
  parse_error(std::string code, const std::string& what, int position)
      : error(std::move(code), what + " at column " + std::to_string(position)),
        position_(position) {}
  int position() const { return position_; }

 private:
  int position_;
};

namespace detail {

class PredicateParser {
 public:
  explicit PredicateParser(std::string_view text) : text_(text) {}

  PredicateExpr parse() {
    PredicateExpr e = parse_or();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("SyntaxError", "unexpected '" + std::string(1, text_[pos_]) + "'",
                        static_cast<int>(pos_));
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PredicateExpr parse_or() {
    std::vector<PredicateExpr> kids{parse_and()};
    while (eat('|')) kids.push_back(parse_and());
    if (kids.size() == 1) return std::move(kids.front());
    return PredicateExpr::make(PredicateExpr::Kind::disjunction, std::move(kids));
  }

  PredicateExpr parse_and() {
    std::vector<PredicateExpr> kids{parse_factor()};
    while (eat('&')) kids.push_back(parse_factor());
    if (kids.size() == 1) return std::move(kids.front());
    return PredicateExpr::make(PredicateExpr::Kind::conjunction, std::move(kids));
  }

  PredicateExpr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size())
      throw parse_error("SyntaxError", "unexpected end of input", static_cast<int>(pos_));
    if (eat('!'))
      return PredicateExpr::make(PredicateExpr::Kind::negation, {parse_factor()});
    if (text_[pos_] == '(') {
      int open_at = static_cast<int>(pos_);
      ++pos_;
      PredicateExpr e = parse_or();
      if (!eat(')'))
        throw parse_error("SyntaxError", "unclosed parenthesis opened", open_at);
      return e;
    }
    int start = static_cast<int>(pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (static_cast<int>(pos_) == start)
      throw parse_error("SyntaxError", "expected an atom, '!' or '('", start);
    std::string_view name = text_.substr(static_cast<std::size_t>(start),
                                         pos_ - static_cast<std::size_t>(start));
    if (auto a = atom_from_name(name)) return PredicateExpr::make_atom(*a);
    throw parse_error("UnknownAtom", "unknown atom '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PredicateExpr parse_predicate(std::string_view text) {
  return detail::PredicateParser(text).parse();
}

inline void collect_atoms(const PredicateExpr& e, std::vector<Atom>& out) {
  if (e.kind == PredicateExpr::Kind::atom) {
    if (std::find(out.begin(), out.end(), e.atom) == out.end()) out.push_back(e.atom);
    return;
  }
  for (const PredicateExpr& k : e.kids) collect_atoms(k, out);
}

/// True when every satisfying structure must be a rough group; lets the
/// search discard a (partition, G) pair before touching any topology.
inline bool requires_rough_group(const PredicateExpr& e) {
  switch (e.kind) {
    case PredicateExpr::Kind::atom:
      return e.atom == Atom::rough_group || e.atom == Atom::trg || e.atom == Atom::strongly ||
             e.atom == Atom::topological_group;
    case PredicateExpr::Kind::negation:
      return false;
    case PredicateExpr::Kind::conjunction:
      return std::any_of(e.kids.begin(), e.kids.end(),
                         [](const PredicateExpr& k) { return requires_rough_group(k); });
    case PredicateExpr::Kind::disjunction:
      return std::all_of(e.kids.begin(), e.kids.end(),
                         [](const PredicateExpr& k) { return requires_rough_group(k); });
  }
  return false;
}

/// Memoizing atom evaluator for one structure.
class StructureProfile {
 public:
  explicit StructureProfile(const RoughStructure* s) : s_(s) {}

  const RoughStructure& structure() const { return *s_; }

  bool atom(Atom a) {
    auto& slot = memo_[static_cast<std::size_t>(a)];
    if (!slot) slot = compute(a);
    return *slot;
  }

 private:
  bool compute(Atom a) {
    const RoughStructure& s = *s_;
    switch (a) {
      case Atom::rough_group:
        return s.cert.ok();
      case Atom::trg:
        return s.cert.ok() && check_trg(s).ok;
      case Atom::strongly:
        return atom(Atom::trg) && check_strongly(s).verdict.ok;
      case Atom::t0:
        return sep().t0.ok;
      case Atom::t1:
        return sep().t1.ok;
      case Atom::t2:
        return sep().t2.ok;
      case Atom::t3:
        return sep().t3.ok;
      case Atom::extremally_disconnected:
        return s.tau_g.extremally_disconnected().ok;
      case Atom::e_in_g:
        return s.e_in_g();
      case Atom::g_open_in_upper:
        return s.g_open_in_upper();
      case Atom::connected:
        return s.tau_g.connected();
      case Atom::homogeneous:
        return is_homogeneous(s.tau_g).ok;
      case Atom::upper_t0:
        return upper_sep().t0.ok;
      case Atom::upper_t1:
        return upper_sep().t1.ok;
      case Atom::discrete:
        return s.tau_g.is_discrete();
      case Atom::topological_group:
        return atom(Atom::trg) && set_product(s.op, s.g, s.g).subset_of(s.g);
    }
    return false;
  }

  const SeparationFlags& sep() {
    if (!sep_) sep_ = s_->tau_g.separation();
    return *sep_;
  }
  const SeparationFlags& upper_sep() {
    if (!upper_sep_) upper_sep_ = s_->tau.separation();
    return *upper_sep_;
  }

  const RoughStructure* s_;
  std::array<std::optional<bool>, kAtomCount> memo_;
  std::optional<SeparationFlags> sep_;
  std::optional<SeparationFlags> upper_sep_;
};

/// Short-circuiting evaluation; cheapest subtrees first inside & and |.
inline bool eval_predicate(const PredicateExpr& e, StructureProfile& p) {
  switch (e.kind) {
    case PredicateExpr::Kind::atom:
      return p.atom(e.atom);
    case PredicateExpr::Kind::negation:
      return !eval_predicate(e.kids.front(), p);
    case PredicateExpr::Kind::conjunction:
    case PredicateExpr::Kind::disjunction: {
      std::vector<const PredicateExpr*> order;
      order.reserve(e.kids.size());
      for (const PredicateExpr& k : e.kids) order.push_back(&k);
      std::stable_sort(order.begin(), order.end(),
                       [](const PredicateExpr* a, const PredicateExpr* b) {
                         return a->cost < b->cost;
                       });
      bool conj = e.kind == PredicateExpr::Kind::conjunction;
      for (const PredicateExpr* k : order)
        if (eval_predicate(*k, p) != conj) return !conj;
      return conj;
    }
  }
  return false;
}

/// Audit path: every atom evaluated, fixed order, no short circuit.
inline bool eval_predicate_full(const PredicateExpr& e, StructureProfile& p) {
  switch (e.kind) {
    case PredicateExpr::Kind::atom:
      return p.atom(e.atom);
    case PredicateExpr::Kind::negation:
      return !eval_predicate_full(e.kids.front(), p);
    case PredicateExpr::Kind::conjunction: {
      bool out = true;
      for (const PredicateExpr& k : e.kids) out = eval_predicate_full(k, p) && out;
      return out;
    }
    case PredicateExpr::Kind::disjunction: {
      bool out = false;
      for (const PredicateExpr& k : e.kids) out = eval_predicate_full(k, p) || out;
      return out;
    }
  }
  return false;
}

}  // namespace roughtop

#include "pombox/sat_oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "pombox/canonical.hpp"
#include "pombox/enumerate.hpp"
#include "pombox/errors.hpp"
#include "pombox/morphism.hpp"

namespace pombox {

std::string verdict_name(OracleVerdict v) {
  switch (v) {
  case OracleVerdict::False: return "false";
  case OracleVerdict::True: return "true";
  case OracleVerdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

struct BudgetExceeded {};

class Oracle {
public:
  Oracle(Relation r, OracleCaps caps) : r_(r), caps_(caps) {}

  bool eval(const Poset &x, const Formula &f) {
    // Exact encoding first; isomorphic copies share the canonical entry.
    std::string raw = raw_key(x, f);
    if (auto it = raw_memo_.find(raw); it != raw_memo_.end()) return it->second;
    std::string key = canonical_key(x).bytes;
    key.append(reinterpret_cast<const char *>(&raw[0]), sizeof(const void *));
    bool v;
    if (auto it = memo_.find(key); it != memo_.end()) {
      v = it->second;
    } else {
      v = compute(x, f);
      memo_.emplace(std::move(key), v);
    }
    raw_memo_.emplace(std::move(raw), v);
    return v;
  }

private:
  // Formula node first, then labels, order rows and boxes.
  static std::string raw_key(const Poset &x, const Formula &f) {
    std::string k;
    const void *node = f.node();
    k.append(reinterpret_cast<const char *>(&node), sizeof node);
    for (const Label &l : x.labels()) k.append(l).push_back('\0');
    for (EventSet s : x.successor_rows()) {
      const std::uint64_t b = s.bits();
      k.append(reinterpret_cast<const char *>(&b), sizeof b);
    }
    k.push_back('\1');
    for (EventSet s : x.boxes()) {
      const std::uint64_t b = s.bits();
      k.append(reinterpret_cast<const char *>(&b), sizeof b);
    }
    return k;
  }

  // Q = Q|A ; Q|Ā (or |), comparing Q with the composite built from its two
  // restrictions under the numbering that lists A first.
  static bool splits(const Poset &q, EventSet a, bool is_seq, Poset &q1, Poset &q2) {
    const EventSet rest = q.events() - a;
    // Cheap necessary condition on the order before building anything.
    for (EventId e : a) {
      if (q.predecessors(e).intersects(rest)) return false;
      if (is_seq ? !rest.subset_of(q.successors(e)) : q.successors(e).intersects(rest)) return false;
    }
    q1 = restrict(q, a);
    q2 = restrict(q, rest);
    const Poset composite = is_seq ? seq(q1, q2) : par(q1, q2);
    std::vector<EventId> m(q.size());
    EventId next = 0;
    for (EventId e : a) m[e] = next++;
    for (EventId e : rest) m[e] = next++;
    for (EventId e = 0; e < q.size(); ++e)
      for (EventId f = 0; f < q.size(); ++f)
        if (q.less(e, f) != composite.less(m[e], m[f])) return false;
    std::vector<EventSet> images;
    for (EventSet b : q.boxes()) {
      EventSet img;
      for (EventId e : b) img.insert(m[e]);
      images.push_back(img);
    }
    std::sort(images.begin(), images.end());
    return images == composite.boxes();
  }

  // Visits every Q with R(x, Q) until fn returns true.
  template <typename Fn>
  bool any_witness(const Poset &x, Fn &&fn) {
    const auto visit = [&](const Poset &q) {
      if (caps_.max_witnesses != 0 && ++visited_ > caps_.max_witnesses) throw BudgetExceeded{};
      return !fn(q);
    };
    switch (r_) {
    case Relation::Iso: return fn(x);
    case Relation::Subsume: return !for_each_weakening(x, visit);
    case Relation::RevSubsume: return !for_each_strengthening(x, caps_.max_new_boxes, visit);
    }
    return false;
  }

  template <typename Fn>
  static bool any_subset(EventSet m, Fn &&fn) {
    bool found = false;
    for_each_subset(m, [&](EventSet a) {
      if (!found && fn(a)) found = true;
    });
    return found;
  }

  bool compute(const Poset &x, const Formula &f) {
    switch (f.kind()) {
    case FormulaKind::Emp: return related(x, Poset::unit(), r_);
    case FormulaKind::Atom: return x.size() == 1 && related(x, Poset::atom(f.label()), r_);
    case FormulaKind::And: return eval(x, f.lhs()) && eval(x, f.rhs());
    case FormulaKind::Or: return eval(x, f.lhs()) || eval(x, f.rhs());
    case FormulaKind::Neg: return !eval(x, f.sub());
    case FormulaKind::SeqThen:
    case FormulaKind::ParNext: {
      const bool is_seq = f.kind() == FormulaKind::SeqThen;
      return any_witness(x, [&](const Poset &q) {
        return any_subset(q.events(), [&](EventSet a) {
          Poset q1, q2;
          if (!splits(q, a, is_seq, q1, q2)) return false;
          return eval(q1, f.lhs()) && eval(q2, f.rhs());
        });
      });
    }
    case FormulaKind::BoxMod:
      return any_witness(x, [&](const Poset &q) {
        if (q.empty()) return eval(q, f.sub());
        if (!q.has_full_box()) return false;
        return eval(q.without_full_box(), f.sub()) || eval(q, f.sub());
      });
    case FormulaKind::ContextMod:
      return any_witness(x, [&](const Poset &q) {
        return any_subset(q.events(), [&](EventSet a) {
          return eval(a == q.events() ? q : restrict(q, a), f.sub());
        });
      });
    }
    return false;
  }

  Relation r_;
  OracleCaps caps_;
  std::unordered_map<std::string, bool> memo_;
  std::unordered_map<std::string, bool> raw_memo_;
  std::size_t visited_ = 0;
};

} // namespace

OracleVerdict sat_oracle(const Poset &p, const Formula &f, Relation r, OracleCaps caps) {
  if (r != Relation::Iso && !positive(f))
    throw FragmentError("negation is only allowed under the iso relation: " + render_formula(f));
  if (p.size() > caps.max_events) return OracleVerdict::Unknown;
  bool v;
  try {
    v = Oracle(r, caps).eval(p, f);
  } catch (const BudgetExceeded &) {
    return OracleVerdict::Unknown;
  }
  if (v) return OracleVerdict::True;
  if (r == Relation::RevSubsume && count_kind(f, FormulaKind::BoxMod) > caps.max_new_boxes)
    return OracleVerdict::Unknown;
  return OracleVerdict::False;
}

} // namespace pombox

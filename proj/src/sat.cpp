#include "pombox/sat.hpp"

#include <stdexcept>

#include "pombox/errors.hpp"
#include "pombox/morphism.hpp"

namespace pombox {

std::optional<Relation> parse_relation(const std::string &name) {
  if (name == "iso") return Relation::Iso;
  if (name == "sub") return Relation::Subsume;
  if (name == "rev") return Relation::RevSubsume;
  return std::nullopt;
}

std::string relation_name(Relation r) {
  switch (r) {
  case Relation::Iso: return "iso";
  case Relation::Subsume: return "sub";
  case Relation::RevSubsume: return "rev";
  }
  return "?";
}

bool related(const Poset &p, const Poset &q, Relation r) {
  switch (r) {
  case Relation::Iso: return iso(p, q);
  case Relation::Subsume: return subsumed_by(p, q);
  case Relation::RevSubsume: return subsumed_by(q, p);
  }
  return false;
}

std::size_t SatEngine::KeyHash::operator()(const Key &k) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(k.mask);
  h ^= std::hash<const void *>{}(k.node) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(k.stripped);
}

SatEngine::SatEngine(Poset p, Relation r, SatOptions opts) : p_(std::move(p)), r_(r), opts_(opts) {}

void SatEngine::admit(const Formula &f) {
  if (r_ != Relation::Iso && !positive(f))
    throw FragmentError("negation is only allowed under the iso relation: " + render_formula(f));
  // Memo keys use node addresses; keep the formula alive so they stay unique.
  alive_.push_back(f);
}

bool SatEngine::holds(const Formula &f) {
  admit(f);
  return eval(p_.events(), false, f);
}

bool SatEngine::has_box_state(EventSet m, bool stripped) const {
  return !m.empty() && !stripped && p_.has_box(m);
}

bool SatEngine::nested(EventSet m, bool stripped, EventSet a) const {
  for (EventSet b : p_.boxes()) {
    if (!b.subset_of(m) || (stripped && b == m)) continue;
    if (!b.subset_of(a) && b.intersects(a)) return false;
  }
  return true;
}

bool SatEngine::seq_split_ok(EventSet m, bool stripped, EventSet a) const {
  const EventSet rest = m - a;
  switch (r_) {
  case Relation::Iso:
  case Relation::Subsume:
    for (EventId e : a)
      if (!rest.subset_of(p_.successors(e))) return false;
    return r_ == Relation::Subsume || nested(m, stripped, a);
  case Relation::RevSubsume:
    for (EventId e : a)
      if (p_.predecessors(e).intersects(rest)) return false;
    return nested(m, stripped, a);
  }
  return false;
}

bool SatEngine::par_split_ok(EventSet m, bool stripped, EventSet a) const {
  if (r_ == Relation::Subsume) return true;
  const EventSet rest = m - a;
  for (EventId e : a)
    if ((p_.successors(e) | p_.predecessors(e)).intersects(rest)) return false;
  if (r_ == Relation::Iso && opts_.mutation == Mutation::DropParNestedness) return true;
  return nested(m, stripped, a);
}

bool SatEngine::eval(EventSet m, bool stripped, const Formula &f) {
  stripped = stripped && p_.has_box(m);
  const Key key{m.bits(), stripped, f.node()};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool v = compute(m, stripped, f);
  memo_.emplace(key, v);
  return v;
}

namespace {

// Calls fn on each subset of m until it returns true.
template <typename Fn>
bool any_subset(EventSet m, Fn &&fn) {
  const std::uint64_t bits = m.bits();
  std::uint64_t s = bits;
  while (true) {
    if (fn(EventSet(s))) return true;
    if (s == 0) return false;
    s = (s - 1) & bits;
  }
}

} // namespace

bool SatEngine::compute(EventSet m, bool stripped, const Formula &f) {
  const auto part = [&](EventSet a) { return a == m ? stripped : false; };
  switch (f.kind()) {
  case FormulaKind::Emp: return m.empty();
  case FormulaKind::Atom:
    if (m.size() != 1 || p_.label(m.first()) != f.label()) return false;
    return r_ == Relation::Subsume || !has_box_state(m, stripped);
  case FormulaKind::And: return eval(m, stripped, f.lhs()) && eval(m, stripped, f.rhs());
  case FormulaKind::Or: return eval(m, stripped, f.lhs()) || eval(m, stripped, f.rhs());
  case FormulaKind::Neg: return !eval(m, stripped, f.sub());
  case FormulaKind::SeqThen:
    return any_subset(m, [&](EventSet a) {
      return seq_split_ok(m, stripped, a) && eval(a, part(a), f.lhs()) && eval(m - a, part(m - a), f.rhs());
    });
  case FormulaKind::ParNext:
    return any_subset(m, [&](EventSet a) {
      return par_split_ok(m, stripped, a) && eval(a, part(a), f.lhs()) && eval(m - a, part(m - a), f.rhs());
    });
  case FormulaKind::BoxMod:
    if (m.empty()) return eval(m, false, f.sub());
    if (r_ == Relation::RevSubsume) return eval(m, true, f.sub());
    return has_box_state(m, stripped) && (eval(m, true, f.sub()) || eval(m, false, f.sub()));
  case FormulaKind::ContextMod:
    return any_subset(m, [&](EventSet a) { return eval(a, part(a), f.sub()); });
  }
  return false;
}

SatResult SatEngine::explain(const Formula &f) {
  admit(f);
  SatResult out;
  out.truth = eval(p_.events(), false, f);
  if (out.truth) out.witness = build(p_.events(), false, f);
  return out;
}

// Precondition: eval(m, stripped, f) is true. Splits and contexts take the first
// subset in ascending-size, lexicographic order.
SatWitness SatEngine::build(EventSet m, bool stripped, const Formula &f) {
  stripped = stripped && p_.has_box(m);
  const auto part = [&](EventSet a) { return a == m ? stripped : false; };
  SatWitness w;
  w.events = m;
  w.stripped = stripped;
  switch (f.kind()) {
  case FormulaKind::Emp: w.rule = "emp"; return w;
  case FormulaKind::Atom: w.rule = "atom"; return w;
  case FormulaKind::Neg: w.rule = "not"; return w;
  case FormulaKind::And:
    w.rule = "and";
    w.children.push_back(build(m, stripped, f.lhs()));
    w.children.push_back(build(m, stripped, f.rhs()));
    return w;
  case FormulaKind::Or:
    if (eval(m, stripped, f.lhs())) {
      w.rule = "or-left";
      w.children.push_back(build(m, stripped, f.lhs()));
    } else {
      w.rule = "or-right";
      w.children.push_back(build(m, stripped, f.rhs()));
    }
    return w;
  case FormulaKind::SeqThen:
  case FormulaKind::ParNext: {
    const bool is_seq = f.kind() == FormulaKind::SeqThen;
    w.rule = is_seq ? "seq" : "par";
    for (EventSet a : ordered_subsets(m)) {
      const bool ok = is_seq ? seq_split_ok(m, stripped, a) : par_split_ok(m, stripped, a);
      if (!ok || !eval(a, part(a), f.lhs()) || !eval(m - a, part(m - a), f.rhs())) continue;
      w.chosen = a;
      w.children.push_back(build(a, part(a), f.lhs()));
      w.children.push_back(build(m - a, part(m - a), f.rhs()));
      return w;
    }
    break;
  }
  case FormulaKind::BoxMod:
    if (m.empty()) {
      w.rule = "box-empty";
      w.children.push_back(build(m, false, f.sub()));
    } else if (eval(m, true, f.sub())) {
      w.rule = "box";
      w.children.push_back(build(m, true, f.sub()));
    } else {
      w.rule = "box-kept";
      w.children.push_back(build(m, false, f.sub()));
    }
    return w;
  case FormulaKind::ContextMod:
    w.rule = "context";
    for (EventSet a : ordered_subsets(m)) {
      if (!eval(a, part(a), f.sub())) continue;
      w.chosen = a;
      w.children.push_back(build(a, part(a), f.sub()));
      return w;
    }
    break;
  }
  throw std::logic_error("witness requested for a false claim");
}

bool sat(const Poset &p, const Formula &f, Relation r, SatOptions opts) {
  return SatEngine(p, r, opts).holds(f);
}

SatResult sat_explain(const Poset &p, const Formula &f, Relation r) { return SatEngine(p, r).explain(f); }

namespace {

// Sub-poset of the state, in its own dense numbering.
Poset state_poset(const Poset &top, EventSet m, bool stripped) {
  Poset x = restrict(top, m);
  return stripped ? x.without_full_box() : x;
}

// Position of each top event of m inside restrict(top, m).
EventSet relocate(EventSet m, EventSet a) {
  EventSet out;
  EventId k = 0;
  for (EventId e : m) {
    if (a.contains(e)) out.insert(k);
    ++k;
  }
  return out;
}

class Replay {
public:
  Replay(const Poset &top, Relation r) : top_(top), r_(r) {}

  bool check(EventSet m, bool stripped, const Formula &f, const SatWitness &w) {
    stripped = stripped && top_.has_box(m);
    if (w.events != m || w.stripped != stripped) return false;
    const Poset x = state_poset(top_, m, stripped);
    const auto part = [&](EventSet a) { return a == m ? stripped : false; };
    const auto child = [&](std::size_t i, EventSet cm, bool cs, const Formula &cf) {
      return i < w.children.size() && check(cm, cs, cf, w.children[i]);
    };
    switch (f.kind()) {
    case FormulaKind::Emp: return w.rule == "emp" && related(x, Poset::unit(), r_);
    case FormulaKind::Atom: return w.rule == "atom" && related(x, Poset::atom(f.label()), r_);
    case FormulaKind::Neg: return w.rule == "not" && !sat(x, f.sub(), r_);
    case FormulaKind::And:
      return w.rule == "and" && child(0, m, stripped, f.lhs()) && child(1, m, stripped, f.rhs());
    case FormulaKind::Or:
      if (w.rule == "or-left") return child(0, m, stripped, f.lhs());
      if (w.rule == "or-right") return child(0, m, stripped, f.rhs());
      return false;
    case FormulaKind::SeqThen:
    case FormulaKind::ParNext: {
      const bool is_seq = f.kind() == FormulaKind::SeqThen;
      if (w.rule != (is_seq ? "seq" : "par") || !w.chosen.subset_of(m)) return false;
      const EventSet a = w.chosen, rest = m - a;
      const EventSet la = relocate(m, a), lr = relocate(m, rest);
      const Poset p1 = restrict(x, la), p2 = restrict(x, lr);
      if (!related(x, is_seq ? seq(p1, p2) : par(p1, p2), r_)) return false;
      return child(0, a, part(a), f.lhs()) && child(1, rest, part(rest), f.rhs());
    }
    case FormulaKind::BoxMod:
      if (w.rule == "box-empty") return m.empty() && child(0, m, false, f.sub());
      if (w.rule == "box" || w.rule == "box-kept") {
        const bool cs = w.rule == "box";
        if (!related(x, boxed(state_poset(top_, m, cs)), r_)) return false;
        return child(0, m, cs, f.sub());
      }
      return false;
    case FormulaKind::ContextMod:
      // R(x, x) holds for every R, and the chosen restriction is a sub-poset of x.
      return w.rule == "context" && w.chosen.subset_of(m) && child(0, w.chosen, part(w.chosen), f.sub());
    }
    return false;
  }

private:
  const Poset &top_;
  Relation r_;
};

} // namespace

bool verify_witness(const Poset &p, const Formula &f, Relation r, const SatWitness &w) {
  return Replay(p, r).check(p.events(), false, f, w);
}

bool sat_set(const PosetSet &x, const Formula &f, SatMode mode) {
  for (const Poset &p : x) {
    const bool v = sat(p, f, mode.relation);
    if (mode.quantifier == Quantifier::Exists && v) return true;
    if (mode.quantifier == Quantifier::ForAll && !v) return false;
  }
  return mode.quantifier == Quantifier::ForAll;
}

bool sat_set(const Term &e, const Formula &f, SatMode mode) { return sat_set(interp(e), f, mode); }

Formula phi_of_sp(const Term &s) {
  switch (s.kind()) {
  case TermKind::One: return Formula::emp();
  case TermKind::Atom: return Formula::atom(s.label());
  case TermKind::Seq: return Formula::seq_then(phi_of_sp(s.lhs()), phi_of_sp(s.rhs()));
  case TermKind::Par: return Formula::par_next(phi_of_sp(s.lhs()), phi_of_sp(s.rhs()));
  case TermKind::Box: return Formula::box(phi_of_sp(s.body()));
  case TermKind::Zero:
  case TermKind::Join: break;
  }
  throw FragmentError("φ(s) needs a series-parallel term: " + render_term(s));
}

Formula phi_of_term(const Term &e) {
  const auto ts = expand(e);
  if (ts.empty()) throw std::domain_error("Φ(e) is an empty disjunction for " + render_term(e));
  std::vector<Formula> fs;
  for (const Term &s : ts) fs.push_back(phi_of_sp(s));
  return disj_all(fs);
}

bool independent(const Poset &p, const Formula &phi, Relation r) {
  return !sat(p, Formula::context(Formula::box(phi)), r);
}

std::string frame_shape_name(FrameShape s) {
  switch (s) {
  case FrameShape::Par: return "par";
  case FrameShape::SeqSuffix: return "seq_suffix";
  case FrameShape::SeqPrefix: return "seq_prefix";
  }
  return "?";
}

FrameReport frame_check(const Poset &p, const Poset &q, const Formula &phi, const Formula &psi,
                        FrameShape shape, Relation r) {
  FrameReport rep;
  const Formula bphi = Formula::box(phi);
  rep.independent = independent(p, phi, r);
  rep.q_sat_box = sat(q, bphi, r);
  rep.preconditions = rep.independent && rep.q_sat_box;
  switch (shape) {
  case FrameShape::Par:
    rep.composed = par(p, q);
    rep.combined = Formula::par_next(psi, bphi);
    break;
  case FrameShape::SeqSuffix:
    rep.composed = seq(p, q);
    rep.combined = Formula::seq_then(psi, bphi);
    break;
  case FrameShape::SeqPrefix:
    rep.composed = seq(q, p);
    rep.combined = Formula::seq_then(bphi, psi);
    break;
  }
  rep.lhs = sat(p, psi, r);
  rep.rhs = sat(rep.composed, rep.combined, r);
  rep.biconditional = rep.lhs == rep.rhs;
  return rep;
}

ModularityReport check_modularity(const Term &e, const Formula &phi, const std::map<Label, Term> &sigma,
                                  const std::map<Label, Formula> &tau, SatMode mode) {
  ModularityReport rep;
  rep.premise = sat_set(e, phi, mode);
  rep.parts = true;
  for (const auto &[a, t] : sigma) {
    auto it = tau.find(a);
    const Formula target = it == tau.end() ? Formula::atom(a) : it->second;
    if (!sat_set(t, target, mode)) {
      rep.parts = false;
      break;
    }
  }
  rep.conclusion = sat_set(substitute_term(e, sigma), substitute_formula(phi, tau), mode);
  rep.consistent = !(rep.premise && rep.parts && !rep.conclusion);
  return rep;
}

} // namespace pombox

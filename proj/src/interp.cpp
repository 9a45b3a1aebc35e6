#include "pombox/interp.hpp"

#include <stdexcept>

#include "pombox/errors.hpp"

namespace pombox {

bool PosetSet::insert(const Poset &p) {
  if (!keys_.insert(canonical_key(p)).second) return false;
  members_.push_back(p);
  return true;
}

bool PosetSet::contains_iso(const Poset &p) const { return keys_.count(canonical_key(p)) != 0; }

Poset interp_sp(const Term &s) {
  switch (s.kind()) {
  case TermKind::One: return Poset::unit();
  case TermKind::Atom: return Poset::atom(s.label());
  case TermKind::Seq: return seq(interp_sp(s.lhs()), interp_sp(s.rhs()));
  case TermKind::Par: return par(interp_sp(s.lhs()), interp_sp(s.rhs()));
  case TermKind::Box: return boxed(interp_sp(s.body()));
  case TermKind::Zero:
  case TermKind::Join: break;
  }
  throw FragmentError("0 and + are not series-parallel: " + render_term(s));
}

namespace {

PosetSet lift(const PosetSet &a, const PosetSet &b, Poset (*op)(const Poset &, const Poset &)) {
  PosetSet out;
  for (const Poset &p : a)
    for (const Poset &q : b) out.insert(op(p, q));
  return out;
}

} // namespace

PosetSet interp(const Term &e) {
  PosetSet out;
  switch (e.kind()) {
  case TermKind::Zero: return out;
  case TermKind::One: out.insert(Poset::unit()); return out;
  case TermKind::Atom: out.insert(Poset::atom(e.label())); return out;
  case TermKind::Seq: return lift(interp(e.lhs()), interp(e.rhs()), seq);
  case TermKind::Par: return lift(interp(e.lhs()), interp(e.rhs()), par);
  case TermKind::Box:
    for (const Poset &p : interp(e.body())) out.insert(boxed(p));
    return out;
  case TermKind::Join:
    out = interp(e.lhs());
    for (const Poset &p : interp(e.rhs())) out.insert(p);
    return out;
  }
  return out;
}

namespace {

void add_unique(std::vector<Term> &v, Term t) {
  for (const Term &u : v)
    if (u == t) return;
  v.push_back(std::move(t));
}

} // namespace

std::vector<Term> expand(const Term &e) {
  std::vector<Term> out;
  switch (e.kind()) {
  case TermKind::Zero: return out;
  case TermKind::One:
  case TermKind::Atom: out.push_back(e); return out;
  case TermKind::Box:
    for (Term &s : expand(e.body())) add_unique(out, Term::box(std::move(s)));
    return out;
  case TermKind::Join:
    out = expand(e.lhs());
    for (Term &s : expand(e.rhs())) add_unique(out, std::move(s));
    return out;
  case TermKind::Seq:
  case TermKind::Par: {
    const auto ls = expand(e.lhs()), rs = expand(e.rhs());
    for (const Term &l : ls)
      for (const Term &r : rs)
        add_unique(out, e.kind() == TermKind::Seq ? Term::seq(l, r) : Term::par(l, r));
    return out;
  }
  }
  return out;
}

namespace {

// `a` is given in the local numbering of s, whose events are 0..atom_count(s)-1.
Term restrict_rec(const Term &s, EventSet a) {
  switch (s.kind()) {
  case TermKind::One: return s;
  case TermKind::Atom: return a.empty() ? Term::one() : s;
  case TermKind::Box:
    if (a == EventSet::all(atom_count(s))) return s;
    return restrict_rec(s.body(), a);
  case TermKind::Seq:
  case TermKind::Par: {
    const std::size_t nl = atom_count(s.lhs());
    const EventSet left = a & EventSet::all(nl);
    const EventSet right(a.bits() >> nl);
    Term l = restrict_rec(s.lhs(), left), r = restrict_rec(s.rhs(), right);
    if (right.empty()) return l;
    if (left.empty()) return r;
    return s.kind() == TermKind::Seq ? Term::seq(std::move(l), std::move(r))
                                     : Term::par(std::move(l), std::move(r));
  }
  case TermKind::Zero:
  case TermKind::Join: break;
  }
  throw FragmentError("syntactic restriction needs a series-parallel term");
}

bool has_full_box(const Term &s) { return interp_sp(s).has_full_box(); }

} // namespace

Term syntactic_restrict(const Term &s, EventSet a) {
  if (!is_sp(s)) throw FragmentError("syntactic restriction needs a series-parallel term");
  if (!a.subset_of(EventSet::all(atom_count(s)))) throw std::domain_error("event set out of range");
  return restrict_rec(s, a);
}

std::optional<Term> strip_outer_box(const Term &s) {
  if (!is_sp(s)) throw FragmentError("strip_outer_box needs a series-parallel term");
  if (atom_count(s) == 0) return Term::one();
  switch (s.kind()) {
  case TermKind::Box:
    if (has_full_box(s.body())) return strip_outer_box(s.body());
    return s.body();
  case TermKind::Seq:
  case TermKind::Par:
    // The full box can only come from a side that holds every event.
    if (atom_count(s.lhs()) == 0) return strip_outer_box(s.rhs());
    if (atom_count(s.rhs()) == 0) return strip_outer_box(s.lhs());
    return std::nullopt;
  default: return std::nullopt;
  }
}

} // namespace pombox

#include "pombox/decide.hpp"

#include "pombox/errors.hpp"

namespace pombox {

std::optional<AxiomSystem> parse_axiom_system(const std::string &name) {
  if (name == "bsp") return AxiomSystem::BSP;
  if (name == "cmb") return AxiomSystem::CMB;
  if (name == "bsr") return AxiomSystem::BSR;
  if (name == "csrb") return AxiomSystem::CSRB;
  return std::nullopt;
}

std::string axiom_system_name(AxiomSystem s) {
  switch (s) {
  case AxiomSystem::BSP: return "bsp";
  case AxiomSystem::CMB: return "cmb";
  case AxiomSystem::BSR: return "bsr";
  case AxiomSystem::CSRB: return "csrb";
  }
  return "?";
}

namespace {

bool included(const PosetSet &a, const PosetSet &b, SetRelation rel) {
  for (const Poset &p : a) {
    if (rel == SetRelation::IsoIncl) {
      if (!b.contains_iso(p)) return false;
      continue;
    }
    bool found = false;
    for (const Poset &q : b)
      if (subsumed_by(p, q)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

void require_sp(AxiomSystem sys, const Term &t) {
  if (!is_sp(t))
    throw FragmentError(axiom_system_name(sys) + " does not admit 0 or +: " + render_term(t));
}

} // namespace

bool set_rel(const PosetSet &a, const PosetSet &b, SetRelation rel) {
  if (rel == SetRelation::IsoEq) return included(a, b, SetRelation::IsoIncl) && included(b, a, SetRelation::IsoIncl);
  return included(a, b, rel);
}

bool decide(AxiomSystem sys, const Term &lhs, const Term &rhs, Judgement kind) {
  switch (sys) {
  case AxiomSystem::BSP:
    require_sp(sys, lhs);
    require_sp(sys, rhs);
    return set_rel(interp(lhs), interp(rhs), SetRelation::IsoEq);
  case AxiomSystem::CMB: {
    require_sp(sys, lhs);
    require_sp(sys, rhs);
    const PosetSet l = interp(lhs), r = interp(rhs);
    const bool le = set_rel(l, r, SetRelation::Subsume);
    return kind == Judgement::Leq ? le : le && set_rel(r, l, SetRelation::Subsume);
  }
  case AxiomSystem::BSR: {
    const PosetSet l = interp(lhs), r = interp(rhs);
    return set_rel(l, r, kind == Judgement::Leq ? SetRelation::IsoIncl : SetRelation::IsoEq);
  }
  case AxiomSystem::CSRB: {
    const PosetSet l = interp(lhs), r = interp(rhs);
    const bool le = set_rel(l, r, SetRelation::Subsume);
    return kind == Judgement::Leq ? le : le && set_rel(r, l, SetRelation::Subsume);
  }
  }
  return false;
}

std::optional<Morphism> decide_witness(AxiomSystem sys, const Term &lhs, const Term &rhs, Judgement kind) {
  if (!is_sp(lhs) || !is_sp(rhs)) return std::nullopt;
  const Poset l = interp_sp(lhs), r = interp_sp(rhs);
  if (sys == AxiomSystem::BSP || (sys == AxiomSystem::BSR) || kind == Judgement::Eq)
    return find_homomorphism(l, r, HomMode::Iso);
  return find_homomorphism(r, l, HomMode::Any);
}

} // namespace pombox

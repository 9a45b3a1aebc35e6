#pragma once

#include <optional>
#include <string>

#include "pombox/interp.hpp"
#include "pombox/morphism.hpp"

namespace pombox {

enum class AxiomSystem { BSP, CMB, BSR, CSRB };
enum class SetRelation { IsoIncl, IsoEq, Subsume };
enum class Judgement { Eq, Leq };

std::optional<AxiomSystem> parse_axiom_system(const std::string &name);
std::string axiom_system_name(AxiomSystem s);

/// IsoIncl: every member of A is isomorphic to one of B. Subsume: every member
/// of A is subsumed by one of B. IsoEq: inclusion both ways.
bool set_rel(const PosetSet &a, const PosetSet &b, SetRelation rel);

/// Provability in the given system, decided through the interpretations.
/// BSP and CMB reject terms with 0 or + (FragmentError).
///   BSP eq/leq: interpretations isomorphic (BSP has no inequations, so leq is eq).
///   CMB leq: lhs subsumed by rhs; eq: both ways.
///   BSR eq: set isomorphism; leq: isomorphic inclusion.
///   CSRB leq: set subsumption; eq: both ways.
bool decide(AxiomSystem sys, const Term &lhs, const Term &rhs, Judgement kind);

/// For SP inputs under BSP/CMB, a morphism justifying a true answer:
/// an isomorphism for BSP, a homomorphism rhs -> lhs for CMB leq.
std::optional<Morphism> decide_witness(AxiomSystem sys, const Term &lhs, const Term &rhs, Judgement kind);

} // namespace pombox

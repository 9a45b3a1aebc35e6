#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pombox/term.hpp"

namespace pombox {

enum class Pattern { P1, P2, P3, P4 };

std::string pattern_name(Pattern p);

/// An occurrence of a forbidden pattern. Events are listed in the order of the
/// pattern's variables (e1, e2, ...); boxes as (A) or (A, B).
struct PatternWitness {
  Pattern pattern;
  std::vector<EventId> events;
  std::vector<EventSet> boxes;
};

/// Scans P1, then P2, P3, P4, each over ascending event and box indices, and
/// returns the first occurrence found; nullopt means P is series-parallel.
std::optional<PatternWitness> sp_check(const Poset &p);

/// Re-evaluates the pattern's defining conjunction on the cited events and boxes.
bool validate_witness(const Poset &p, const PatternWitness &w);

/// A term whose interpretation is isomorphic to P, or nullopt if P is not
/// series-parallel.
std::optional<Term> synthesize_term(const Poset &p);

} // namespace pombox

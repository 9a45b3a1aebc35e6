#pragma once

#include "pombox/sat.hpp"

namespace pombox {

struct OracleCaps {
  std::size_t max_events = 4;
  /// Boxes a strengthening may add under RevSubsume.
  std::size_t max_new_boxes = 2;
  /// Total witnesses one query may visit; 0 means no limit.
  std::size_t max_witnesses = 500'000;
};

enum class OracleVerdict { False, True, Unknown };

std::string verdict_name(OracleVerdict v);

/// Evaluates P ⊨_R φ straight from the definition. The witnesses Q with R(P, Q)
/// are enumerated explicitly (P itself for Iso, weakenings for Subsume,
/// strengthenings up to the box cap for RevSubsume), and a split of Q is any event
/// set A with Q ≅ Q|A ; Q|Ā (resp. |). Unknown when P exceeds max_events, or when
/// a RevSubsume answer is false and φ has more box modalities than the cap, or
/// when the query visits more than max_witnesses witnesses.
OracleVerdict sat_oracle(const Poset &p, const Formula &f, Relation r, OracleCaps caps = {});

} // namespace pombox

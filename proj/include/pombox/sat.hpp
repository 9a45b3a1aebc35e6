#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pombox/formula.hpp"
#include "pombox/interp.hpp"

namespace pombox {

/// The relation R of the satisfaction ⊨_R: Iso is ≅, Subsume is ⊑, RevSubsume is ⊒.
enum class Relation { Iso, Subsume, RevSubsume };
enum class Quantifier { ForAll, Exists };

struct SatMode {
  Relation relation = Relation::Iso;
  Quantifier quantifier = Quantifier::ForAll;
};

std::optional<Relation> parse_relation(const std::string &name);
std::string relation_name(Relation r);

/// R(P, Q) decided by homomorphism search.
bool related(const Poset &p, const Poset &q, Relation r);

/// Deliberate faults for mutation testing of the differential harness.
enum class Mutation { None, DropParNestedness };

struct SatOptions {
  Mutation mutation = Mutation::None;
};

/// Derivation of a true satisfaction claim. Every node is about a sub-poset of the
/// checked poset: the restriction to `events`, without its full box if `stripped`.
/// Ids are those of the checked poset.
struct SatWitness {
  /// emp, atom, and, or-left, or-right, not, seq, par, box, box-kept, box-empty, context
  std::string rule;
  EventSet events;
  bool stripped = false;
  /// The left part of a split, or the retained events of a context step.
  EventSet chosen;
  std::vector<SatWitness> children;
};

struct SatResult {
  bool truth = false;
  /// Present iff truth holds.
  std::optional<SatWitness> witness;
};

/// Evaluates formulas on one poset by the compositional rule table. Every
/// sub-poset visited is a restriction of that poset, possibly without its full
/// box, so results are memoized per (events, stripped, formula node).
class SatEngine {
public:
  SatEngine(Poset p, Relation r, SatOptions opts = {});

  /// Throws FragmentError for negation under Subsume/RevSubsume.
  bool holds(const Formula &f);
  SatResult explain(const Formula &f);

  const Poset &poset() const { return p_; }
  Relation relation() const { return r_; }
  std::size_t memo_size() const { return memo_.size(); }

private:
  struct Key {
    std::uint64_t mask;
    bool stripped;
    const void *node;
    friend bool operator==(const Key &, const Key &) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept;
  };

  void admit(const Formula &f);
  bool eval(EventSet m, bool stripped, const Formula &f);
  bool compute(EventSet m, bool stripped, const Formula &f);
  SatWitness build(EventSet m, bool stripped, const Formula &f);

  bool seq_split_ok(EventSet m, bool stripped, EventSet a) const;
  bool par_split_ok(EventSet m, bool stripped, EventSet a) const;
  bool nested(EventSet m, bool stripped, EventSet a) const;
  bool has_box_state(EventSet m, bool stripped) const;

  Poset p_;
  Relation r_;
  SatOptions opts_;
  std::unordered_map<Key, bool, KeyHash> memo_;
  std::vector<Formula> alive_;
};

bool sat(const Poset &p, const Formula &f, Relation r, SatOptions opts = {});
SatResult sat_explain(const Poset &p, const Formula &f, Relation r);

/// Replays a witness against the satisfaction definition: each split, box or
/// context step is re-checked by an explicit R test on the rebuilt sub-posets.
bool verify_witness(const Poset &p, const Formula &f, Relation r, const SatWitness &w);

bool sat_set(const PosetSet &x, const Formula &f, SatMode mode);
bool sat_set(const Term &e, const Formula &f, SatMode mode);

/// φ(s) for an SP term; throws FragmentError on 0 or +.
Formula phi_of_sp(const Term &s);
/// Φ(e), the disjunction of φ(s) over expand(e); throws std::domain_error when
/// expand(e) is empty.
Formula phi_of_term(const Term &e);

/// P ⫫_R φ: P does not satisfy <>[φ].
bool independent(const Poset &p, const Formula &phi, Relation r);

enum class FrameShape { Par, SeqSuffix, SeqPrefix };

std::string frame_shape_name(FrameShape s);

struct FrameReport {
  bool independent = false;
  bool q_sat_box = false;
  bool preconditions = false;
  /// P ⊨ ψ
  bool lhs = false;
  /// compose(P, Q) ⊨ combined
  bool rhs = false;
  bool biconditional = false;
  Poset composed;
  Formula combined;
};

/// Frame property instance: Par pairs P|Q with ψ || [φ], SeqSuffix P;Q with
/// ψ |> [φ], SeqPrefix Q;P with [φ] |> ψ. All satisfaction checks use `r`.
FrameReport frame_check(const Poset &p, const Poset &q, const Formula &phi, const Formula &psi,
                        FrameShape shape, Relation r = Relation::Iso);

struct ModularityReport {
  bool premise = false;
  /// sigma(a) ⊨ tau(a) for every a substituted by sigma.
  bool parts = false;
  bool conclusion = false;
  /// False only when both premises hold and the conclusion fails.
  bool consistent = true;
};

ModularityReport check_modularity(const Term &e, const Formula &phi, const std::map<Label, Term> &sigma,
                                  const std::map<Label, Formula> &tau, SatMode mode);

} // namespace pombox

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../unit/helpers.hpp"
#include "pombox/case_studies.hpp"
#include "pombox/decide.hpp"
#include "pombox/enumerate.hpp"
#include "pombox/morphism.hpp"
#include "pombox/sat.hpp"
#include "pombox/sat_oracle.hpp"
#include "pombox/series_parallel.hpp"
#include "pombox/testkit.hpp"

using namespace test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char *title, double limit_s, const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream line;
  line.precision(1);
  line << std::fixed << secs << " s";
  if (limit_s > 0) {
    line << ", target < " << limit_s << " s";
    if (secs >= limit_s) {
      o.pass = false;
      o.detail += "; over the runtime target";
    }
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " | " << o.detail << " ("
            << line.str() << ")" << std::endl;
}

GenConfig config(std::uint64_t seed, std::size_t max_events = 4, std::size_t alphabet = 3) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_events = max_events;
  cfg.alphabet_size = alphabet;
  return cfg;
}

// Q with Q's event i being P's event perm[i].
Poset permute(const Poset &p, const std::vector<EventId> &perm) {
  std::vector<EventId> inv(p.size());
  for (EventId i = 0; i < p.size(); ++i) inv[perm[i]] = i;
  std::vector<Label> labels(p.size());
  std::vector<EventSet> rows(p.size());
  for (EventId i = 0; i < p.size(); ++i) {
    labels[i] = p.label(perm[i]);
    for (EventId f : p.successors(perm[i])) rows[i].insert(inv[f]);
  }
  std::vector<EventSet> boxes;
  for (EventSet b : p.boxes()) {
    EventSet img;
    for (EventId e : b) img.insert(inv[e]);
    boxes.push_back(img);
  }
  return Poset::from_closed(labels, rows, boxes);
}

Poset shuffle(const Poset &p, Rng &rng) {
  std::vector<EventId> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return permute(p, perm);
}

EventSet random_subset(EventSet of, Rng &rng) {
  EventSet s;
  for (EventId e : of)
    if (rng.chance(1, 2)) s.insert(e);
  return s;
}

// Adds order and possibly a box, so that the result is subsumed by p.
Poset strengthen(const Poset &p, Rng &rng) {
  const auto exts = order_extensions(p);
  auto boxes = p.boxes();
  if (!p.empty() && rng.chance(1, 2)) {
    const EventSet b = random_subset(p.events(), rng);
    if (!b.empty()) boxes.push_back(b);
  }
  return Poset::from_closed(p.labels(), exts[rng.below(exts.size())], boxes);
}

Poset drop_boxes(const Poset &p, Rng &rng) {
  std::vector<EventSet> kept;
  for (EventSet b : p.boxes())
    if (rng.chance(1, 2)) kept.push_back(b);
  return p.with_boxes(kept);
}

// Criterion 1 ---------------------------------------------------------------

struct Axiom {
  const char *name;
  bool inequation;
  // Builds (lhs, rhs) from SP terms s, t, u, v and general terms e, f, g.
  std::function<std::pair<Term, Term>(const std::vector<Term> &)> build;
};

std::vector<Axiom> axioms() {
  using T = Term;
  return {
      {"seq associativity", false, [](auto &x) { return std::pair{T::seq(x[0], T::seq(x[1], x[2])), T::seq(T::seq(x[0], x[1]), x[2])}; }},
      {"par associativity", false, [](auto &x) { return std::pair{T::par(x[0], T::par(x[1], x[2])), T::par(T::par(x[0], x[1]), x[2])}; }},
      {"par commutativity", false, [](auto &x) { return std::pair{T::par(x[0], x[1]), T::par(x[1], x[0])}; }},
      {"seq left unit", false, [](auto &x) { return std::pair{T::seq(T::one(), x[0]), x[0]}; }},
      {"seq right unit", false, [](auto &x) { return std::pair{T::seq(x[0], T::one()), x[0]}; }},
      {"par unit", false, [](auto &x) { return std::pair{T::par(T::one(), x[0]), x[0]}; }},
      {"box idempotence", false, [](auto &x) { return std::pair{T::box(T::box(x[0])), T::box(x[0])}; }},
      {"box of unit", false, [](auto &) { return std::pair{T::box(T::one()), T::one()}; }},
      {"exchange", true, [](auto &x) { return std::pair{T::seq(T::par(x[0], x[1]), T::par(x[2], x[3])), T::par(T::seq(x[0], x[2]), T::seq(x[1], x[3]))}; }},
      {"box below body", true, [](auto &x) { return std::pair{T::box(x[0]), x[0]}; }},
      {"join associativity", false, [](auto &x) { return std::pair{T::join(x[4], T::join(x[5], x[6])), T::join(T::join(x[4], x[5]), x[6])}; }},
      {"join commutativity", false, [](auto &x) { return std::pair{T::join(x[4], x[5]), T::join(x[5], x[4])}; }},
      {"join idempotence", false, [](auto &x) { return std::pair{T::join(x[4], x[4]), x[4]}; }},
      {"join unit", false, [](auto &x) { return std::pair{T::join(T::zero(), x[4]), x[4]}; }},
      {"seq absorbing zero", false, [](auto &x) { return std::pair{T::join(T::seq(T::zero(), x[4]), T::seq(x[4], T::zero())), T::zero()}; }},
      {"par zero", false, [](auto &x) { return std::pair{T::par(T::zero(), x[4]), T::zero()}; }},
      {"left distributivity", false, [](auto &x) { return std::pair{T::seq(x[4], T::join(x[5], x[6])), T::join(T::seq(x[4], x[5]), T::seq(x[4], x[6]))}; }},
      {"right distributivity", false, [](auto &x) { return std::pair{T::seq(T::join(x[4], x[5]), x[6]), T::join(T::seq(x[4], x[6]), T::seq(x[5], x[6]))}; }},
      {"par distributivity", false, [](auto &x) { return std::pair{T::par(x[4], T::join(x[5], x[6])), T::join(T::par(x[4], x[5]), T::par(x[4], x[6]))}; }},
      {"box of zero", false, [](auto &) { return std::pair{T::box(T::zero()), T::zero()}; }},
      {"box over join", false, [](auto &x) { return std::pair{T::box(T::join(x[4], x[5])), T::join(T::box(x[4]), T::box(x[5]))}; }},
  };
}

Outcome criterion1() {
  const auto table = axioms();
  GenConfig cfg = config(101);
  Rng rng(cfg.seed);
  int violations = 0, instances = 0;
  std::string first;
  for (const Axiom &ax : table) {
    for (int i = 0; i < 100; ++i) {
      std::vector<Term> x;
      for (int k = 0; k < 4; ++k) x.push_back(gen_sp_term(cfg, rng));
      for (int k = 0; k < 3; ++k) x.push_back(gen_term(cfg, rng));
      const auto [lhs, rhs] = ax.build(x);
      const PosetSet l = interp(lhs), r = interp(rhs);
      bool ok;
      if (ax.inequation) {
        ok = set_rel(l, r, SetRelation::Subsume);
      } else {
        ok = set_rel(l, r, SetRelation::IsoEq);
      }
      ++instances;
      // The seq-absorbing axiom is the pair 0;e = 0 and e;0 = 0.
      if (!ok) {
        ++violations;
        if (first.empty()) first = std::string(ax.name) + ": " + render_term(lhs) + " vs " + render_term(rhs);
      }
    }
  }
  std::ostringstream d;
  d << table.size() << " axioms x 100 instances = " << instances << ", violations " << violations;
  if (!first.empty()) d << " (first: " << first << ")";
  return {table.size() == 21 && instances == 2100 && violations == 0, d.str()};
}

// Criterion 2 ---------------------------------------------------------------

Outcome criterion2() {
  GenConfig cfg = config(202, 6);
  Rng rng(cfg.seed);
  int bad_a = 0;
  for (int i = 0; i < 500; ++i)
    if (sp_check(interp_sp(gen_sp_term(cfg, rng)))) ++bad_a;

  int sp_count = 0, non_sp = 0, bad_b = 0;
  for (int i = 0; i < 500; ++i) {
    const Poset p = gen_poset(cfg, rng);
    const auto w = sp_check(p);
    const auto synth = synthesize_term(p);
    if (!w) {
      ++sp_count;
      if (!synth || !brute_iso(interp_sp(*synth), p)) {
        ++bad_b;
        continue;
      }
      const auto again = synthesize_term(interp_sp(*synth));
      if (!again || !decide(AxiomSystem::BSP, *synth, *again, Judgement::Eq)) ++bad_b;
    } else {
      ++non_sp;
      if (synth || !validate_witness(p, *w)) ++bad_b;
    }
  }
  std::ostringstream d;
  d << "(a) 500 terms, " << bad_a << " rejected; (b) 500 posets (" << sp_count << " sp, " << non_sp
    << " with a pattern), " << bad_b << " failures";
  return {bad_a == 0 && bad_b == 0 && sp_count > 0 && non_sp > 0, d.str()};
}

// Criterion 3 ---------------------------------------------------------------

// Rewrites keeping the interpretation up to isomorphism.
Term equal_variant(const Term &t, Rng &rng) {
  Term out = t;
  switch (t.kind()) {
  case TermKind::Seq: out = Term::seq(equal_variant(t.lhs(), rng), equal_variant(t.rhs(), rng)); break;
  case TermKind::Par: {
    Term l = equal_variant(t.lhs(), rng), r = equal_variant(t.rhs(), rng);
    out = rng.chance(1, 2) ? Term::par(r, l) : Term::par(l, r);
    break;
  }
  case TermKind::Box: out = Term::box(equal_variant(t.body(), rng)); break;
  default: break;
  }
  switch (rng.below(8)) {
  case 0: return Term::seq(Term::one(), out);
  case 1: return Term::par(out, Term::one());
  case 2: return out.kind() == TermKind::Box ? Term::box(out) : out;
  default: return out;
  }
}

// Drops some boxes, giving a term the original is subsumed by.
Term weaker_variant(const Term &t, Rng &rng) {
  switch (t.kind()) {
  case TermKind::Seq: return Term::seq(weaker_variant(t.lhs(), rng), weaker_variant(t.rhs(), rng));
  case TermKind::Par: return Term::par(weaker_variant(t.lhs(), rng), weaker_variant(t.rhs(), rng));
  case TermKind::Box: {
    Term b = weaker_variant(t.body(), rng);
    return rng.chance(1, 2) ? b : Term::box(b);
  }
  default: return t;
  }
}

Outcome criterion3() {
  GenConfig cfg = config(303, 4, 2);
  Rng rng(cfg.seed);
  int disagreements = 0, eq_true = 0, leq_true = 0, pairs = 0;
  while (pairs < 300) {
    const Term s = gen_sp_term(cfg, rng);
    if (atom_count(s) > 7) continue;
    Term t;
    switch (rng.below(3)) {
    case 0: t = equal_variant(s, rng); break;
    case 1: t = weaker_variant(s, rng); break;
    default: t = gen_sp_term(cfg, rng);
    }
    if (atom_count(t) > 7) continue;
    ++pairs;
    const Poset ps = interp_sp(s), pt = interp_sp(t);
    const bool eq = decide(AxiomSystem::BSP, s, t, Judgement::Eq);
    const bool leq = decide(AxiomSystem::CMB, s, t, Judgement::Leq);
    eq_true += eq;
    leq_true += leq;
    if (eq != brute_iso(ps, pt) || eq != iso(ps, pt)) ++disagreements;
    if (leq != brute_subsumed(ps, pt) || leq != subsumed_by(ps, pt)) ++disagreements;
  }
  std::ostringstream d;
  d << pairs << " pairs (" << eq_true << " equal, " << leq_true << " subsumed), disagreements " << disagreements;
  return {disagreements == 0 && eq_true > 0 && leq_true > eq_true, d.str()};
}

// Criterion 4 ---------------------------------------------------------------

bool brute_related(const Poset &p, const Poset &q, Relation r) {
  switch (r) {
  case Relation::Iso: return brute_iso(p, q);
  case Relation::Subsume: return brute_subsumed(p, q);
  case Relation::RevSubsume: return brute_subsumed(q, p);
  }
  return false;
}

Outcome criterion4() {
  GenConfig cfg = config(404, 5);
  Rng rng(cfg.seed);
  int disagreements = 0, pairs = 0, related_count[3] = {0, 0, 0};
  while (pairs < 300) {
    const Term s = gen_sp_term(cfg, rng);
    if (atom_count(s) > 5) continue;
    const Poset sp_s = interp_sp(s);
    Poset p;
    switch (rng.below(5)) {
    case 0: p = sp_s; break;
    case 1: p = strengthen(sp_s, rng); break;
    case 2: p = drop_boxes(sp_s, rng); break;
    case 3: p = drop_boxes(strengthen(sp_s, rng), rng); break;
    default: p = gen_poset(cfg, rng);
    }
    p = shuffle(p, rng);
    ++pairs;
    const Formula phi = phi_of_sp(s);
    int k = 0;
    for (Relation r : {Relation::Iso, Relation::Subsume, Relation::RevSubsume}) {
      const bool expected = brute_related(p, sp_s, r);
      related_count[k++] += expected;
      if (sat(p, phi, r) != expected || related(p, sp_s, r) != expected) ++disagreements;
    }
  }
  std::ostringstream d;
  d << pairs << " pairs x 3 relations (related: iso " << related_count[0] << ", sub " << related_count[1] << ", rev "
    << related_count[2] << "), disagreements " << disagreements;
  return {disagreements == 0 && related_count[0] > 0 && related_count[1] > 0 && related_count[2] > 0, d.str()};
}

// Criterion 5 ---------------------------------------------------------------

Outcome criterion5() {
  GenConfig cfg = config(505);
  std::ostringstream d;
  bool ok = true;
  for (Relation r : {Relation::Iso, Relation::Subsume, Relation::RevSubsume}) {
    // Unknown verdicts are excluded, so draw a few spare cases.
    const auto rep = differential_run(cfg, 240, r);
    d << relation_name(r) << ": " << rep.compared << " compared, " << rep.unknown << " unknown, "
      << rep.discrepancies.size() << " disagreements; ";
    ok = ok && rep.compared >= 200 && rep.discrepancies.empty();
    for (const Discrepancy &x : rep.discrepancies) std::cerr << discrepancy_to_json(x).dump() << "\n";
  }
  return {ok, d.str()};
}

// Criterion 6 ---------------------------------------------------------------

Outcome criterion6() {
  GenConfig cfg = config(606);
  Rng rng(cfg.seed);
  std::ostringstream d;
  bool ok = true;

  for (Relation r : {Relation::Subsume, Relation::RevSubsume}) {
    int instances = 0, violations = 0, tries = 0;
    while (instances < 200 && tries < 200000) {
      ++tries;
      const Poset base = gen_poset(cfg, rng);
      const Poset stronger = shuffle(strengthen(base, rng), rng);
      // R(P, Q): under ⊑ P is the stronger one, under ⊒ Q is.
      const Poset &p = r == Relation::Subsume ? stronger : base;
      const Poset &q = r == Relation::Subsume ? base : stronger;
      if (!brute_related(p, q, r)) {
        ++violations;
        continue;
      }
      const Formula phi = gen_formula(cfg, rng, true);
      if (!sat(q, phi, r)) continue;
      ++instances;
      if (!sat(p, phi, r)) ++violations;
    }
    d << "closure " << relation_name(r) << " " << instances << " instances, " << violations << " violations; ";
    ok = ok && instances == 200 && violations == 0;
  }

  {
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
      const Poset p = gen_poset(cfg, rng), q = shuffle(p, rng);
      const Formula phi = gen_formula(cfg, rng, false);
      if (sat(p, phi, Relation::Iso) != sat(q, phi, Relation::Iso)) ++violations;
    }
    d << "iso invariance 200 instances, " << violations << " violations; ";
    ok = ok && violations == 0;
  }

  {
    int instances = 0, violations = 0, tries = 0;
    while (instances < 200 && tries < 200000) {
      ++tries;
      const Poset p = gen_poset(cfg, rng);
      const Formula phi = gen_formula(cfg, rng, true);
      if (!sat(p, phi, Relation::Iso)) continue;
      ++instances;
      if (!sat(p, phi, Relation::Subsume) || !sat(p, phi, Relation::RevSubsume)) ++violations;
    }
    d << "extension " << instances << " instances, " << violations << " violations";
    ok = ok && instances == 200 && violations == 0;
  }
  return {ok, d.str()};
}

// Criterion 7 ---------------------------------------------------------------

Outcome criterion7() {
  GenConfig cfg = config(707, 3);
  cfg.formula_depth = 2;
  Rng rng(cfg.seed);
  std::ostringstream d;
  bool ok = true;
  for (FrameShape shape : {FrameShape::Par, FrameShape::SeqSuffix, FrameShape::SeqPrefix}) {
    int instances = 0, failures_here = 0, tries = 0;
    while (instances < 100 && tries < 500000) {
      ++tries;
      const Poset p = gen_poset(cfg, rng);
      // Boxed frames make the second precondition reachable.
      Poset q = gen_poset(cfg, rng);
      if (rng.chance(1, 2)) q = boxed(q);
      const Formula phi = gen_formula(cfg, rng, false), psi = gen_formula(cfg, rng, false);
      const FrameReport rep = frame_check(p, q, phi, psi, shape);
      if (!rep.preconditions) continue;
      ++instances;
      if (!rep.biconditional) ++failures_here;
    }
    d << frame_shape_name(shape) << " " << instances << " instances, " << failures_here << " failures; ";
    ok = ok && instances == 100 && failures_here == 0;
  }

  const Formula ctx_c = parse_formula("<>c");
  const FrameReport sub =
      frame_check(sp("a"), sp("[b|[c]]"), ctx_c, parse_formula("a||b"), FrameShape::Par, Relation::Subsume);
  const FrameReport rev = frame_check(sp("a|b"), sp("c"), ctx_c, parse_formula("a"), FrameShape::Par,
                                      Relation::RevSubsume);
  const auto matches = [](const FrameReport &r) {
    return r.independent && r.q_sat_box && r.rhs && !r.lhs && !r.biconditional;
  };
  d << "counterexample sub " << (matches(sub) ? "reproduced" : "NOT reproduced") << ", rev "
    << (matches(rev) ? "reproduced" : "NOT reproduced");
  return {ok && matches(sub) && matches(rev), d.str()};
}

// Criterion 8 ---------------------------------------------------------------

Outcome criterion8() {
  std::ostringstream d;
  int failed = 0, total = 0;
  auto rows = counter_study();
  const auto voting = voting_study(2, 2);
  rows.insert(rows.end(), voting.begin(), voting.end());
  for (const CaseCheck &c : rows) {
    ++total;
    std::cout << "  " << (c.pass() ? "ok  " : "MISS") << " " << c.name << ": expected " << c.expected << ", got "
              << c.actual << "\n";
    if (!c.pass()) ++failed;
  }
  d << total << " published verdicts, " << failed << " not reproduced";
  return {failed == 0, d.str()};
}

// Criterion 9 ---------------------------------------------------------------

Outcome criterion9() {
  GenConfig cfg = config(909, 3);
  Rng rng(cfg.seed);
  const Poset unit = Poset::unit();
  int violations = 0, empties = 0;
  for (int i = 0; i < 100; ++i) {
    const Poset p = i == 0 ? unit : gen_poset(cfg, rng);
    empties += p.empty();
    const bool a = subsumed_by(p, unit), b = iso(p, unit), c = subsumed_by(unit, p);
    if (a != b || b != c || b != p.empty() || a != brute_subsumed(p, unit)) ++violations;
  }
  std::ostringstream d;
  d << "100 posets (" << empties << " empty), violations " << violations;
  return {violations == 0, d.str()};
}

} // namespace

int main() {
  report(1, "axiom soundness", 30, criterion1);
  report(2, "series-parallel characterization", 60, criterion2);
  report(3, "decision procedures agree with morphisms", 0, criterion3);
  report(4, "term formulas characterize the relations", 0, criterion4);
  report(5, "differential model checking", 300, criterion5);
  report(6, "closure and extension laws", 0, criterion6);
  report(7, "frame rule", 0, criterion7);
  report(8, "case studies", 120, criterion8);
  report(9, "the empty poset", 0, criterion9);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

#include "pombox/case_studies.hpp"

namespace pombox {

namespace {

Term atom(const std::string &s) { return Term::atom(s); }
Formula fatom(const std::string &s) { return Formula::atom(s); }

std::string idx(const std::string &base, std::size_t i) { return base + "_" + std::to_string(i); }
std::string idx(const std::string &base, std::size_t i, std::size_t j) {
  return base + "_" + std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

Term build_counter(bool boxed) {
  Term x = seq_all({atom("rx"), atom("ix"), atom("wx")});
  Term y = seq_all({atom("ry"), atom("iy"), atom("wy")});
  if (boxed) {
    x = Term::box(x);
    y = Term::box(y);
  }
  return seq_all({atom("print"), Term::par(x, y), atom("print")});
}

Poset counter_linearized_run() {
  return interp_sp(seq_all({atom("print"), atom("rx"), atom("ry"), atom("ix"), atom("iy"), atom("wx"),
                            atom("wy"), atom("print")}));
}

Formula counter_conflict() {
  return Formula::context(Formula::seq_then(Formula::par_next(fatom("rx"), fatom("ry")),
                                            Formula::par_next(fatom("wx"), fatom("wy"))));
}

Term voting_choose(std::size_t n, std::size_t k, bool boxed) {
  std::vector<Term> voters;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Term> options;
    for (std::size_t j = 1; j <= k; ++j)
      options.push_back(seq_all({atom(idx("choose", i, j)), atom(idx("read", j)), atom("inc"), atom(idx("write", j))}));
    Term vote = join_all(options);
    voters.push_back(boxed ? Term::box(vote) : vote);
  }
  return par_all(voters);
}

Term voting_publish(std::size_t n) {
  std::vector<Term> sends;
  for (std::size_t i = 1; i <= n; ++i) sends.push_back(atom(idx("send", i)));
  return par_all(sends);
}

Term build_voting(std::size_t n, std::size_t k, bool boxed) {
  return Term::seq(voting_choose(n, k, boxed), voting_publish(n));
}

Formula voting_conflict(std::size_t j) {
  const Formula r = fatom(idx("read", j)), w = fatom(idx("write", j));
  return Formula::context(Formula::seq_then(Formula::par_next(r, r), Formula::par_next(w, w)));
}

Formula voting_seqsep(std::size_t n, std::size_t k) {
  std::vector<Formula> sends, chooses;
  for (std::size_t i = 1; i <= n; ++i) {
    sends.push_back(fatom(idx("send", i)));
    for (std::size_t j = 1; j <= k; ++j) chooses.push_back(fatom(idx("choose", i, j)));
  }
  return Formula::seq_then(Formula::context(Formula::neg(disj_all(sends))),
                           Formula::context(Formula::neg(disj_all(chooses))));
}

Formula voting_votethensend(std::size_t n, std::size_t k) {
  std::vector<Formula> voters;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Formula> chooses;
    for (std::size_t j = 1; j <= k; ++j) chooses.push_back(fatom(idx("choose", i, j)));
    voters.push_back(Formula::seq_then(disj_all(chooses), fatom(idx("send", i))));
  }
  return Formula::context(par_next_all(voters));
}

Formula voting_unique_votes(std::size_t k) {
  std::vector<Formula> pairs;
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t j2 = 1; j2 <= k; ++j2)
      pairs.push_back(Formula::context(Formula::box(
          Formula::context(Formula::par_next(fatom(idx("write", j)), fatom(idx("write", j2)))))));
  return disj_all(pairs);
}

Formula voting_write_any(std::size_t k) {
  std::vector<Formula> ws;
  for (std::size_t j = 1; j <= k; ++j) ws.push_back(fatom(idx("write", j)));
  return disj_all(ws);
}

Formula voting_frame_phi(std::size_t k) {
  const Formula w = voting_write_any(k);
  return Formula::neg(Formula::disj(Formula::emp(), Formula::context(Formula::box(Formula::context(w)))));
}

Formula voting_frame_target(std::size_t k) {
  const Formula w = voting_write_any(k);
  return Formula::seq_then(Formula::context(Formula::seq_then(w, w)), Formula::box(voting_frame_phi(k)));
}

std::vector<CaseCheck> counter_study() {
  const SatMode rev_some{Relation::RevSubsume, Quantifier::Exists};
  std::vector<CaseCheck> out;
  out.push_back({"boxed counter term interprets as the atomic-increment figure",
                 true,
                 [] {
                   const std::vector<Label> labels{"print", "rx", "ix", "wx", "ry", "iy", "wy", "print"};
                   const std::vector<std::pair<EventId, EventId>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 7},
                                                                        {0, 4}, {4, 5}, {5, 6}, {6, 7}};
                   const std::vector<EventSet> boxes{EventSet(0b1110), EventSet(0b1110000)};
                   return iso(interp_sp(build_counter(true)), Poset::from_edges(labels, edges, boxes));
                 }()});
  out.push_back({"linearized faulty run |=rev conflict", true,
                 sat(counter_linearized_run(), counter_conflict(), Relation::RevSubsume)});
  out.push_back({"unboxed counter |=rev,some conflict", true,
                 sat_set(build_counter(false), counter_conflict(), rev_some)});
  out.push_back({"boxed counter |=rev,some conflict", false,
                 sat_set(build_counter(true), counter_conflict(), rev_some)});
  return out;
}

std::vector<CaseCheck> voting_study(std::size_t n, std::size_t k) {
  std::vector<CaseCheck> out;
  const Term faulty = build_voting(n, k, false), proc = build_voting(n, k, true);
  const PosetSet faulty_set = interp(faulty), proc_set = interp(proc);

  bool faulty_all = true, proc_any = false;
  for (std::size_t j = 1; j <= k; ++j) {
    faulty_all = faulty_all && sat_set(faulty_set, voting_conflict(j), {Relation::RevSubsume, Quantifier::Exists});
    proc_any = proc_any || sat_set(proc_set, voting_conflict(j), {Relation::RevSubsume, Quantifier::Exists});
  }
  out.push_back({"VoteProc' |=rev,some conflict_j (every j)", true, faulty_all});
  out.push_back({"VoteProc |=rev,some conflict_j (some j)", false, proc_any});
  out.push_back({"VoteProc |=iso,all seqsep", true,
                 sat_set(proc_set, voting_seqsep(n, k), {Relation::Iso, Quantifier::ForAll})});
  out.push_back({"VoteProc |=sub,all votethensend", true,
                 sat_set(proc_set, voting_votethensend(n, k), {Relation::Subsume, Quantifier::ForAll})});
  out.push_back({"VoteProc |=sub,some unique-votes", false,
                 sat_set(proc_set, voting_unique_votes(k), {Relation::Subsume, Quantifier::Exists})});

  // Frame argument for [Choose];[Publish].
  const Formula phi = voting_frame_phi(k), ww = Formula::context(
      Formula::seq_then(voting_write_any(k), voting_write_any(k)));
  const PosetSet choose = interp(Term::box(voting_choose(n, k, true)));
  const PosetSet publish = interp(Term::box(voting_publish(n)));
  const SatMode iso_all{Relation::Iso, Quantifier::ForAll};
  bool indep = true, bicond = true;
  for (const Poset &c : choose) {
    indep = indep && independent(c, phi, Relation::Iso);
    for (const Poset &q : publish)
      bicond = bicond && frame_check(c, q, phi, ww, FrameShape::SeqSuffix).biconditional;
  }
  out.push_back({"[Publish] |=iso,all [phi]", true, sat_set(publish, Formula::box(phi), iso_all)});
  out.push_back({"[Choose] independent of phi", true, indep});
  out.push_back({"[Choose] |=iso,all <>(W|>W)", false, sat_set(choose, ww, iso_all)});
  out.push_back({"frame biconditional on every [Choose] member", true, bicond});
  out.push_back({"[Choose];[Publish] |=iso,all <>(W|>W)|>[phi]", false,
                 sat_set(Term::seq(Term::box(voting_choose(n, k, true)), Term::box(voting_publish(n))),
                         voting_frame_target(k), iso_all)});
  return out;
}

} // namespace pombox

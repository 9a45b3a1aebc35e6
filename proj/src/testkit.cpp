#include "pombox/testkit.hpp"

#include <algorithm>

#include "pombox/poset_io.hpp"

namespace pombox {

Label gen_label(const GenConfig &cfg, Rng &rng) {
  const std::size_t k = std::max<std::size_t>(1, std::min<std::size_t>(cfg.alphabet_size, 26));
  return Label(1, static_cast<char>('a' + rng.below(k)));
}

Poset gen_poset(const GenConfig &cfg, Rng &rng) {
  const std::size_t n = rng.below(std::min(cfg.max_events, kMaxEvents) + 1);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(gen_label(cfg, rng));
  std::vector<EventId> perm(n);
  for (EventId i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<std::pair<EventId, EventId>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(1, 3)) edges.emplace_back(perm[i], perm[j]);
  std::vector<EventSet> boxes;
  if (n > 0) {
    const std::size_t attempts = rng.below(cfg.max_box_attempts + 1);
    for (std::size_t t = 0; t < attempts; ++t) {
      EventSet b;
      if (rng.chance(3, 4)) {
        const std::size_t lo = rng.below(n), hi = lo + rng.below(n - lo);
        for (std::size_t i = lo; i <= hi; ++i) b.insert(perm[i]);
      } else {
        b = EventSet(rng.below(std::uint64_t{1} << n));
      }
      if (!b.empty()) boxes.push_back(b);
    }
  }
  return Poset::from_edges(std::move(labels), edges, boxes);
}

namespace {

Term gen_term_rec(const GenConfig &cfg, Rng &rng, std::size_t depth, bool sp) {
  if (depth == 0 || rng.chance(1, 4)) {
    if (!sp && rng.chance(1, 10)) return Term::zero();
    if (rng.chance(1, 8)) return Term::one();
    return Term::atom(gen_label(cfg, rng));
  }
  const std::uint64_t choice = rng.below(sp ? 3 : 4);
  if (choice == 2) return Term::box(gen_term_rec(cfg, rng, depth - 1, sp));
  Term l = gen_term_rec(cfg, rng, depth - 1, sp);
  Term r = gen_term_rec(cfg, rng, depth - 1, sp);
  switch (choice) {
  case 0: return Term::seq(l, r);
  case 1: return Term::par(l, r);
  default: return Term::join(l, r);
  }
}

Formula gen_formula_rec(const GenConfig &cfg, Rng &rng, std::size_t depth, bool positive_only) {
  if (depth == 0 || rng.chance(1, 4)) {
    if (rng.chance(1, 6)) return Formula::emp();
    return Formula::atom(gen_label(cfg, rng));
  }
  const std::uint64_t choice = rng.below(positive_only ? 6 : 7);
  const auto sub = [&] { return gen_formula_rec(cfg, rng, depth - 1, positive_only); };
  switch (choice) {
  case 0: { Formula l = sub(); return Formula::conj(l, sub()); }
  case 1: { Formula l = sub(); return Formula::disj(l, sub()); }
  case 2: { Formula l = sub(); return Formula::seq_then(l, sub()); }
  case 3: { Formula l = sub(); return Formula::par_next(l, sub()); }
  case 4: return Formula::box(sub());
  case 5: return Formula::context(sub());
  default: return Formula::neg(sub());
  }
}

} // namespace

Term gen_sp_term(const GenConfig &cfg, Rng &rng) { return gen_term_rec(cfg, rng, cfg.term_depth, true); }
Term gen_term(const GenConfig &cfg, Rng &rng) { return gen_term_rec(cfg, rng, cfg.term_depth, false); }
Formula gen_formula(const GenConfig &cfg, Rng &rng, bool positive_only) {
  return gen_formula_rec(cfg, rng, cfg.formula_depth, positive_only);
}

nlohmann::json discrepancy_to_json(const Discrepancy &d) {
  return {{"poset", poset_to_json(d.poset)},
          {"formula", render_formula(d.formula)},
          {"relation", relation_name(d.relation)},
          {"oracle", d.expected},
          {"engine", d.actual},
          {"shrunk", d.shrunk}};
}

namespace {

bool still_mismatch(const Poset &p, const Formula &f, Relation r, SatOptions opts, OracleCaps caps) {
  const OracleVerdict v = sat_oracle(p, f, r, caps);
  if (v == OracleVerdict::Unknown) return false;
  return (v == OracleVerdict::True) != sat(p, f, r, opts);
}

std::vector<Poset> poset_shrinks(const Poset &p) {
  std::vector<Poset> out;
  for (EventId e = 0; e < p.size(); ++e) out.push_back(restrict(p, p.events() - EventSet::single(e)));
  for (std::size_t i = 0; i < p.boxes().size(); ++i) {
    auto boxes = p.boxes();
    boxes.erase(boxes.begin() + static_cast<long>(i));
    out.push_back(p.with_boxes(boxes));
  }
  const auto cover = p.covering_pairs();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    auto edges = cover;
    edges.erase(edges.begin() + static_cast<long>(i));
    out.push_back(Poset::from_edges(p.labels(), edges, p.boxes()));
  }
  return out;
}

// Formulas obtained by replacing one node with one of its children or with emp.
std::vector<Formula> formula_shrinks(const Formula &f) {
  std::vector<Formula> out;
  if (f.kind() != FormulaKind::Emp) out.push_back(Formula::emp());
  if (f.is_unary()) {
    out.push_back(f.sub());
    for (const Formula &s : formula_shrinks(f.sub())) {
      switch (f.kind()) {
      case FormulaKind::Neg: out.push_back(Formula::neg(s)); break;
      case FormulaKind::BoxMod: out.push_back(Formula::box(s)); break;
      default: out.push_back(Formula::context(s)); break;
      }
    }
  } else if (f.is_binary()) {
    out.push_back(f.lhs());
    out.push_back(f.rhs());
    const auto rebuild = [&](Formula l, Formula r) {
      switch (f.kind()) {
      case FormulaKind::And: return Formula::conj(l, r);
      case FormulaKind::Or: return Formula::disj(l, r);
      case FormulaKind::SeqThen: return Formula::seq_then(l, r);
      default: return Formula::par_next(l, r);
      }
    };
    for (const Formula &s : formula_shrinks(f.lhs())) out.push_back(rebuild(s, f.rhs()));
    for (const Formula &s : formula_shrinks(f.rhs())) out.push_back(rebuild(f.lhs(), s));
  }
  return out;
}

} // namespace

Discrepancy shrink(const Discrepancy &d, SatOptions opts, OracleCaps caps) {
  Discrepancy cur = d;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Poset &q : poset_shrinks(cur.poset)) {
      if (!still_mismatch(q, cur.formula, cur.relation, opts, caps)) continue;
      cur.poset = q;
      cur.shrunk = progress = true;
      break;
    }
    if (progress) continue;
    for (const Formula &g : formula_shrinks(cur.formula)) {
      if (!still_mismatch(cur.poset, g, cur.relation, opts, caps)) continue;
      cur.formula = g;
      cur.shrunk = progress = true;
      break;
    }
  }
  cur.expected = sat_oracle(cur.poset, cur.formula, cur.relation, caps) == OracleVerdict::True;
  cur.actual = sat(cur.poset, cur.formula, cur.relation, opts);
  return cur;
}

DifferentialReport differential_run(const GenConfig &cfg, std::size_t n_cases, Relation r, SatOptions opts,
                                    OracleCaps caps) {
  DifferentialReport rep;
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < n_cases; ++i) {
    const Poset p = gen_poset(cfg, rng);
    const Formula f = gen_formula(cfg, rng, r != Relation::Iso);
    const OracleVerdict v = sat_oracle(p, f, r, caps);
    if (v == OracleVerdict::Unknown) {
      ++rep.unknown;
      continue;
    }
    ++rep.compared;
    const bool actual = sat(p, f, r, opts);
    if (actual == (v == OracleVerdict::True)) continue;
    rep.discrepancies.push_back(shrink(Discrepancy{p, f, r, v == OracleVerdict::True, actual, false}, opts, caps));
  }
  return rep;
}

} // namespace pombox

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pombox/case_studies.hpp"
#include "pombox/decide.hpp"
#include "pombox/errors.hpp"
#include "pombox/poset_io.hpp"
#include "pombox/series_parallel.hpp"
#include "pombox/testkit.hpp"

namespace pombox::cli {

namespace {

using nlohmann::json;

constexpr int kTrue = 0, kFalse = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" reads the argument from a file.
std::string resolve(const std::string &arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

Term term_arg(const std::string &arg) { return parse_term(resolve(arg)); }

Formula formula_arg(const std::string &arg) {
  // A bare path to an existing file is accepted as well as @path.
  if (!arg.empty() && arg[0] != '@') {
    std::ifstream probe(arg);
    if (probe) return parse_formula(read_file(arg));
  }
  return parse_formula(resolve(arg));
}

Poset poset_file(const std::string &path) { return poset_from_json_text(read_file(path)); }

json events_json(EventSet s) { return s.to_vector(); }

json witness_json(const SatWitness &w) {
  json children = json::array();
  for (const auto &c : w.children) children.push_back(witness_json(c));
  json j = {{"rule", w.rule}, {"events", events_json(w.events)}};
  if (w.stripped) j["stripped"] = true;
  if (w.rule == "seq" || w.rule == "par" || w.rule == "context") j["chosen"] = events_json(w.chosen);
  if (!children.empty()) j["children"] = children;
  return j;
}

std::string set_text(EventSet s) {
  std::string out = "{";
  for (EventId e : s) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

void print_witness(std::ostream &out, const SatWitness &w, int depth) {
  out << std::string(2 * depth, ' ') << w.rule << " on " << set_text(w.events);
  if (w.stripped) out << " (outer box removed)";
  if (w.rule == "seq" || w.rule == "par" || w.rule == "context") out << " chosen " << set_text(w.chosen);
  out << "\n";
  for (const auto &c : w.children) print_witness(out, c, depth + 1);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int verdict(bool b) { return b ? kTrue : kFalse; }

struct Common {
  bool json_out = false;
};

void add_json_flag(CLI::App *sub, Common &c) { sub->add_flag("--json", c.json_out, "Machine-readable output"); }

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app("Pomsets with boxes: algebra decisions and model checking", "pombox");
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  // eq / leq
  std::string system = "bsp", lhs, rhs;
  for (const char *name : {"eq", "leq"}) {
    const bool is_eq = std::string(name) == "eq";
    auto *sub = app.add_subcommand(name, is_eq ? "Decide s = t" : "Decide s <= t");
    sub->add_option("--system", system, "bsp, cmb, bsr or csrb")->capture_default_str();
    sub->add_option("lhs", lhs, "Left term (or @file)")->required();
    sub->add_option("rhs", rhs, "Right term (or @file)")->required();
    add_json_flag(sub, common);
    sub->callback([&, is_eq] {
      action = [&, is_eq] {
        const auto sys = parse_axiom_system(system);
        if (!sys) throw UsageError("unknown axiom system '" + system + "'");
        const Term s = term_arg(lhs), t = term_arg(rhs);
        const Judgement kind = is_eq ? Judgement::Eq : Judgement::Leq;
        const bool holds = decide(*sys, s, t, kind);
        if (common.json_out) {
          json j = {{"holds", holds}, {"system", axiom_system_name(*sys)}};
          if (holds)
            if (auto m = decide_witness(*sys, s, t, kind)) j["morphism"] = m->map;
          out << j.dump() << "\n";
        } else {
          out << yes_no(holds) << "\n";
        }
        return verdict(holds);
      };
    });
  }

  // mc
  std::string relation = "iso", quantifier = "all", formula_text, mc_term, mc_json;
  {
    auto *sub = app.add_subcommand("mc", "Model check a formula against a term or poset");
    sub->add_option("--relation", relation, "iso, sub or rev")->capture_default_str();
    sub->add_option("--quantifier", quantifier, "all or some")->capture_default_str();
    sub->add_option("--formula", formula_text, "Formula text, @file or file path")->required();
    auto *pj = sub->add_option("--poset-json", mc_json, "Poset JSON file");
    sub->add_option("term", mc_term, "Term (or @file)")->excludes(pj);
    add_json_flag(sub, common);
    sub->callback([&] {
      action = [&] {
        const auto rel = parse_relation(relation);
        if (!rel) throw UsageError("unknown relation '" + relation + "'");
        if (quantifier != "all" && quantifier != "some") throw UsageError("quantifier must be all or some");
        if (mc_term.empty() && mc_json.empty()) throw UsageError("mc needs a term or --poset-json");
        const Formula f = formula_arg(formula_text);
        PosetSet members;
        if (!mc_json.empty()) members.insert(poset_file(mc_json));
        else members = interp(term_arg(mc_term));
        const bool exists = quantifier == "some";

        bool holds = !exists;
        std::optional<Poset> decisive;
        std::optional<SatWitness> derivation;
        for (const Poset &p : members) {
          SatResult r = SatEngine(p, *rel).explain(f);
          if (r.truth == exists) {
            holds = exists;
            decisive = p;
            derivation = r.witness;
            break;
          }
          if (!decisive) {
            decisive = p;
            derivation = r.witness;
          }
        }
        if (exists && !holds) decisive.reset(), derivation.reset();

        if (common.json_out) {
          json w = nullptr;
          if (decisive) {
            w = {{"poset", poset_to_json(*decisive)}};
            w["derivation"] = derivation ? witness_json(*derivation) : json(nullptr);
          }
          out << json{{"holds", holds}, {"witness", w}}.dump() << "\n";
        } else {
          out << yes_no(holds) << "\n";
          if (decisive && derivation) print_witness(out, *derivation, 1);
          else if (decisive) out << "  counterexample: " << poset_to_json(*decisive).dump() << "\n";
        }
        return verdict(holds);
      };
    });
  }

  // synth / patterns / export-dot share poset input
  std::string in_term, in_json, dot_out, dot_name = "P";
  const auto add_poset_input = [&](CLI::App *sub) {
    auto *pj = sub->add_option("--poset-json", in_json, "Poset JSON file");
    sub->add_option("term", in_term, "Term (or @file)")->excludes(pj);
  };
  const auto single_poset = [&]() -> Poset {
    if (!in_json.empty()) return poset_file(in_json);
    if (in_term.empty()) throw UsageError("expected a term or --poset-json");
    return interp_sp(term_arg(in_term));
  };
  {
    auto *sub = app.add_subcommand("synth", "Synthesize a term for a series-parallel poset");
    add_poset_input(sub);
    add_json_flag(sub, common);
    sub->callback([&] {
      action = [&] {
        const Poset p = single_poset();
        const auto t = synthesize_term(p);
        if (common.json_out) {
          json j = {{"ok", t.has_value()}};
          if (t) j["term"] = render_term(*t);
          else if (auto w = sp_check(p)) j["pattern"] = pattern_name(w->pattern);
          out << j.dump() << "\n";
        } else if (t) {
          out << render_term(*t) << "\n";
        } else {
          out << "not series-parallel (" << pattern_name(sp_check(p)->pattern) << ")\n";
        }
        return verdict(t.has_value());
      };
    });
  }
  {
    auto *sub = app.add_subcommand("patterns", "Look for a forbidden pattern");
    add_poset_input(sub);
    add_json_flag(sub, common);
    sub->callback([&] {
      action = [&] {
        const auto w = sp_check(single_poset());
        if (common.json_out) {
          json j = {{"found", w.has_value()}};
          if (w) {
            json boxes = json::array();
            for (EventSet b : w->boxes) boxes.push_back(b.to_vector());
            j["pattern"] = pattern_name(w->pattern);
            j["events"] = w->events;
            j["boxes"] = boxes;
          }
          out << j.dump() << "\n";
        } else if (w) {
          out << pattern_name(w->pattern) << " events";
          for (EventId e : w->events) out << " " << e;
          for (EventSet b : w->boxes) out << " box " << set_text(b);
          out << "\n";
        } else {
          out << "none\n";
        }
        return verdict(w.has_value());
      };
    });
  }
  {
    auto *sub = app.add_subcommand("export-dot", "Write Graphviz DOT");
    add_poset_input(sub);
    sub->add_option("-o,--output", dot_out, "Output file (default stdout)");
    sub->add_option("--name", dot_name, "Graph name")->capture_default_str();
    sub->callback([&] {
      action = [&] {
        std::vector<Poset> ps;
        if (!in_json.empty()) {
          ps.push_back(poset_file(in_json));
        } else {
          if (in_term.empty()) throw UsageError("expected a term or --poset-json");
          for (const Poset &p : interp(term_arg(in_term))) ps.push_back(p);
        }
        std::string text;
        for (std::size_t i = 0; i < ps.size(); ++i)
          text += poset_to_dot(ps[i], ps.size() == 1 ? dot_name : dot_name + std::to_string(i));
        if (dot_out.empty()) {
          out << text;
        } else {
          std::ofstream f(dot_out);
          if (!f) throw UsageError("cannot write " + dot_out);
          f << text;
        }
        return kTrue;
      };
    });
  }

  // factorize
  std::string f_first, f_second, fp_json, fq_json;
  {
    auto *sub = app.add_subcommand("factorize", "Factor P <= Q into order and box steps");
    sub->add_option("--p-json", fp_json, "P as poset JSON file");
    sub->add_option("--q-json", fq_json, "Q as poset JSON file");
    sub->add_option("first", f_first, "P as a term, or Q when P is given as JSON");
    sub->add_option("second", f_second, "Q as a term");
    add_json_flag(sub, common);
    sub->callback([&] {
      action = [&] {
        std::vector<std::string> terms;
        for (const std::string *t : {&f_first, &f_second})
          if (!t->empty()) terms.push_back(*t);
        std::size_t next = 0;
        const auto load = [&](const std::string &file) {
          if (!file.empty()) return poset_file(file);
          if (next >= terms.size()) throw UsageError("factorize needs P and Q");
          return interp_sp(term_arg(terms[next++]));
        };
        const Poset p = load(fp_json);
        const Poset q = load(fq_json);
        if (next != terms.size()) throw UsageError("too many terms");
        const auto r = factorize_subsumption(p, q);
        if (common.json_out) {
          json j = {{"subsumed", r.has_value()}};
          if (r) {
            j["r1"] = poset_to_json(r->first);
            j["r2"] = poset_to_json(r->second);
          }
          out << j.dump() << "\n";
        } else if (r) {
          out << "R1 " << poset_to_json(r->first).dump() << "\n";
          out << "R2 " << poset_to_json(r->second).dump() << "\n";
        } else {
          out << "not subsumed\n";
        }
        return verdict(r.has_value());
      };
    });
  }

  // examples
  std::string example;
  std::size_t voters = 2, counters = 2;
  {
    auto *sub = app.add_subcommand("examples", "Run a built-in case study");
    sub->add_option("name", example, "counter or voting")->required()->check(CLI::IsMember({"counter", "voting"}));
    sub->add_option("--voters", voters, "Number of voters")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--counters", counters, "Number of counters")->capture_default_str()->check(CLI::PositiveNumber);
    add_json_flag(sub, common);
    sub->callback([&] {
      action = [&] {
        const auto rows = example == "counter" ? counter_study() : voting_study(voters, counters);
        const bool all = std::all_of(rows.begin(), rows.end(), [](const CaseCheck &c) { return c.pass(); });
        if (common.json_out) {
          json j = json::array();
          for (const auto &c : rows)
            j.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass()}});
          out << json{{"example", example}, {"checks", j}, {"all_pass", all}}.dump() << "\n";
        } else {
          std::size_t width = 0;
          for (const auto &c : rows) width = std::max(width, c.name.size());
          for (const auto &c : rows)
            out << (c.pass() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name
                << "  expected " << yes_no(c.expected) << ", got " << yes_no(c.actual) << "\n";
        }
        return verdict(all);
      };
    });
  }

  // fuzz
  GenConfig cfg;
  std::size_t cases = 200;
  std::string fuzz_relation = "all", mutate = "none";
  {
    auto *sub = app.add_subcommand("fuzz", "Differential test of the engine against the oracle");
    sub->add_option("--max-events", cfg.max_events)->capture_default_str();
    sub->add_option("--box-attempts", cfg.max_box_attempts)->capture_default_str();
    sub->add_option("--alphabet", cfg.alphabet_size)->capture_default_str();
    sub->add_option("--term-depth", cfg.term_depth)->capture_default_str();
    sub->add_option("--formula-depth", cfg.formula_depth)->capture_default_str();
    sub->add_option("--seed", cfg.seed)->capture_default_str();
    sub->add_option("--cases", cases, "Cases per relation")->capture_default_str();
    sub->add_option("--relation", fuzz_relation, "iso, sub, rev or all")->capture_default_str();
    sub->add_option("--mutate", mutate, "none or drop-par-nestedness")
        ->capture_default_str()
        ->check(CLI::IsMember({"none", "drop-par-nestedness"}));
    sub->callback([&] {
      action = [&] {
        std::vector<Relation> rels;
        if (fuzz_relation == "all") rels = {Relation::Iso, Relation::Subsume, Relation::RevSubsume};
        else if (auto r = parse_relation(fuzz_relation)) rels = {*r};
        else throw UsageError("unknown relation '" + fuzz_relation + "'");
        SatOptions opts;
        if (mutate == "drop-par-nestedness") opts.mutation = Mutation::DropParNestedness;
        std::size_t found = 0, compared = 0, unknown = 0;
        for (Relation r : rels) {
          const DifferentialReport rep = differential_run(cfg, cases, r, opts);
          compared += rep.compared;
          unknown += rep.unknown;
          found += rep.discrepancies.size();
          for (const auto &d : rep.discrepancies) out << discrepancy_to_json(d).dump() << "\n";
        }
        err << "compared " << compared << ", unknown " << unknown << ", discrepancies " << found << "\n";
        return verdict(found == 0);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const FragmentError &e) {
    err << "unsupported input: " << e.what() << "\n";
  } catch (const PosetError &e) {
    err << "poset error: " << e.what() << "\n";
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

} // namespace pombox::cli

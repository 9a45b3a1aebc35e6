#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "pombox/poset.hpp"

namespace pombox {

enum class TermKind { Zero, One, Atom, Seq, Par, Join, Box };

/// Immutable term over 0, 1, atoms, ;, |, + and boxing. Series-parallel terms
/// are the ones without Zero and Join (see is_sp); they share this type.
class Term {
public:
  static Term zero();
  static Term one();
  static Term atom(Label label);
  static Term seq(Term l, Term r);
  static Term par(Term l, Term r);
  static Term join(Term l, Term r);
  static Term box(Term body);

  /// Default-constructed term is One.
  Term();

  TermKind kind() const;
  const Label &label() const;
  const Term &lhs() const;
  const Term &rhs() const;
  /// Operand of Box.
  const Term &body() const { return lhs(); }

  bool is_binary() const;

  friend bool operator==(const Term &a, const Term &b);

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// No Zero and no Join anywhere.
bool is_sp(const Term &t);
std::size_t term_size(const Term &t);
/// Number of atom occurrences, i.e. events of the interpretation of an SP term.
std::size_t atom_count(const Term &t);

/// Grammar: identifiers [A-Za-z_][A-Za-z0-9_]*, literals 0 and 1, `[t]`,
/// parentheses, and left-associative binary operators `;` > `|` > `+`.
Term parse_term(std::string_view text);
/// Minimal parenthesization; parse_term(render_term(t)) == t.
std::string render_term(const Term &t);

/// Replaces each atom a by sigma(a) when present.
Term substitute_term(const Term &t, const std::map<Label, Term> &sigma);

/// Left-nested folds; the empty fold yields `empty`.
Term seq_all(const std::vector<Term> &ts, Term empty = Term::one());
Term par_all(const std::vector<Term> &ts, Term empty = Term::one());
Term join_all(const std::vector<Term> &ts, Term empty = Term::zero());

} // namespace pombox

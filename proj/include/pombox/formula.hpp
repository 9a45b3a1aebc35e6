#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pombox/poset.hpp"

namespace pombox {

enum class FormulaKind { Emp, Atom, And, Or, Neg, SeqThen, ParNext, BoxMod, ContextMod };

/// Immutable pomset-logic formula. Subformulas are shared; node() gives a stable
/// identity for memo tables while the formula is alive.
class Formula {
public:
  static Formula emp();
  static Formula atom(Label label);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula neg(Formula f);
  static Formula seq_then(Formula l, Formula r);
  static Formula par_next(Formula l, Formula r);
  static Formula box(Formula f);
  static Formula context(Formula f);

  /// Default-constructed formula is emp.
  Formula();

  FormulaKind kind() const;
  const Label &label() const;
  const Formula &lhs() const;
  const Formula &rhs() const;
  /// Operand of Neg, BoxMod, ContextMod.
  const Formula &sub() const { return lhs(); }
  bool is_binary() const;
  bool is_unary() const;
  const void *node() const { return node_.get(); }

  friend bool operator==(const Formula &a, const Formula &b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Negation-free.
bool positive(const Formula &f);
std::size_t formula_size(const Formula &f);
std::size_t formula_depth(const Formula &f);
std::size_t count_kind(const Formula &f, FormulaKind k);

/// Grammar: `emp`, identifiers, prefix `~`, `[f]`, `<>` (tightest), then `|>`
/// (right-associative), `||`, `/\`, `\/` (loosest), parentheses. Binary operators
/// other than `|>` associate to the left.
Formula parse_formula(std::string_view text);
std::string render_formula(const Formula &f);

/// Replaces Atom leaves a by tau(a) when present.
Formula substitute_formula(const Formula &f, const std::map<Label, Formula> &tau);

/// Left-nested folds; empty folds are not allowed.
Formula disj_all(const std::vector<Formula> &fs);
Formula conj_all(const std::vector<Formula> &fs);
Formula par_next_all(const std::vector<Formula> &fs);

} // namespace pombox

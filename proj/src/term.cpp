#include "pombox/term.hpp"

#include <cctype>

#include "pombox/errors.hpp"

namespace pombox {

struct Term::Node {
  TermKind kind;
  Label label;
  Term a, b;
};

Term::Term() : Term(one()) {}

Term Term::zero() { return Term(std::make_shared<const Node>(Node{TermKind::Zero, {}, Term(nullptr), Term(nullptr)})); }
Term Term::one() {
  static const auto node = std::make_shared<const Node>(Node{TermKind::One, {}, Term(nullptr), Term(nullptr)});
  return Term(node);
}
Term Term::atom(Label label) {
  return Term(std::make_shared<const Node>(Node{TermKind::Atom, std::move(label), Term(nullptr), Term(nullptr)}));
}
Term Term::seq(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermKind::Seq, {}, std::move(l), std::move(r)}));
}
Term Term::par(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermKind::Par, {}, std::move(l), std::move(r)}));
}
Term Term::join(Term l, Term r) {
  return Term(std::make_shared<const Node>(Node{TermKind::Join, {}, std::move(l), std::move(r)}));
}
Term Term::box(Term body) {
  return Term(std::make_shared<const Node>(Node{TermKind::Box, {}, std::move(body), Term(nullptr)}));
}

TermKind Term::kind() const { return node_->kind; }
const Label &Term::label() const { return node_->label; }
const Term &Term::lhs() const { return node_->a; }
const Term &Term::rhs() const { return node_->b; }

bool Term::is_binary() const {
  const auto k = kind();
  return k == TermKind::Seq || k == TermKind::Par || k == TermKind::Join;
}

bool operator==(const Term &x, const Term &y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
  case TermKind::Zero:
  case TermKind::One: return true;
  case TermKind::Atom: return x.label() == y.label();
  case TermKind::Box: return x.body() == y.body();
  default: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

bool is_sp(const Term &t) {
  switch (t.kind()) {
  case TermKind::Zero:
  case TermKind::Join: return false;
  case TermKind::One:
  case TermKind::Atom: return true;
  case TermKind::Box: return is_sp(t.body());
  default: return is_sp(t.lhs()) && is_sp(t.rhs());
  }
}

std::size_t term_size(const Term &t) {
  if (t.kind() == TermKind::Box) return 1 + term_size(t.body());
  if (t.is_binary()) return 1 + term_size(t.lhs()) + term_size(t.rhs());
  return 1;
}

std::size_t atom_count(const Term &t) {
  if (t.kind() == TermKind::Atom) return 1;
  if (t.kind() == TermKind::Box) return atom_count(t.body());
  if (t.is_binary()) return atom_count(t.lhs()) + atom_count(t.rhs());
  return 0;
}

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = join_level();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return t;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term join_level() {
    Term t = par_level();
    while (eat('+')) t = Term::join(t, par_level());
    return t;
  }
  Term par_level() {
    Term t = seq_level();
    while (eat('|')) t = Term::par(t, seq_level());
    return t;
  }
  Term seq_level() {
    Term t = primary();
    while (eat(';')) t = Term::seq(t, primary());
    return t;
  }

  Term primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = join_level();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return t;
    }
    if (c == '[') {
      ++pos_;
      Term t = join_level();
      if (!eat(']')) throw ParseError("expected ']'", pos_);
      return Term::box(t);
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("identifiers cannot start with a digit", pos_ - 1);
      return c == '0' ? Term::zero() : Term::one();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Term::atom(std::string(s_.substr(start, pos_ - start)));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(TermKind k) {
  switch (k) {
  case TermKind::Join: return 0;
  case TermKind::Par: return 1;
  case TermKind::Seq: return 2;
  default: return 3;
  }
}

void render(const Term &t, std::string &out) {
  switch (t.kind()) {
  case TermKind::Zero: out += '0'; return;
  case TermKind::One: out += '1'; return;
  case TermKind::Atom: out += t.label(); return;
  case TermKind::Box:
    out += '[';
    render(t.body(), out);
    out += ']';
    return;
  default: break;
  }
  const int p = precedence(t.kind());
  const auto operand = [&](const Term &c, bool right) {
    const int q = precedence(c.kind());
    const bool wrap = right ? q <= p : q < p;
    if (wrap) out += '(';
    render(c, out);
    if (wrap) out += ')';
  };
  operand(t.lhs(), false);
  out += t.kind() == TermKind::Seq ? ";" : t.kind() == TermKind::Par ? " | " : " + ";
  operand(t.rhs(), true);
}

} // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string render_term(const Term &t) {
  std::string out;
  render(t, out);
  return out;
}

Term substitute_term(const Term &t, const std::map<Label, Term> &sigma) {
  switch (t.kind()) {
  case TermKind::Zero:
  case TermKind::One: return t;
  case TermKind::Atom: {
    auto it = sigma.find(t.label());
    return it == sigma.end() ? t : it->second;
  }
  case TermKind::Box: return Term::box(substitute_term(t.body(), sigma));
  case TermKind::Seq: return Term::seq(substitute_term(t.lhs(), sigma), substitute_term(t.rhs(), sigma));
  case TermKind::Par: return Term::par(substitute_term(t.lhs(), sigma), substitute_term(t.rhs(), sigma));
  case TermKind::Join: return Term::join(substitute_term(t.lhs(), sigma), substitute_term(t.rhs(), sigma));
  }
  return t;
}

namespace {

Term fold(const std::vector<Term> &ts, Term empty, Term (*op)(Term, Term)) {
  if (ts.empty()) return empty;
  Term acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = op(acc, ts[i]);
  return acc;
}

} // namespace

Term seq_all(const std::vector<Term> &ts, Term empty) { return fold(ts, std::move(empty), Term::seq); }
Term par_all(const std::vector<Term> &ts, Term empty) { return fold(ts, std::move(empty), Term::par); }
Term join_all(const std::vector<Term> &ts, Term empty) { return fold(ts, std::move(empty), Term::join); }

} // namespace pombox

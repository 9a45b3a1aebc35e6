#include "pombox/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pombox/errors.hpp"

namespace pombox {

struct Formula::Node {
  FormulaKind kind;
  Label label;
  Formula a, b;
};

namespace {

template <typename Node, typename F>
std::shared_ptr<const Node> make(FormulaKind k, Label label, F a, F b) {
  return std::make_shared<const Node>(Node{k, std::move(label), std::move(a), std::move(b)});
}

} // namespace

Formula::Formula() : Formula(emp()) {}

Formula Formula::emp() {
  static const auto node = make<Node>(FormulaKind::Emp, {}, Formula(nullptr), Formula(nullptr));
  return Formula(node);
}
Formula Formula::atom(Label label) {
  return Formula(make<Node>(FormulaKind::Atom, std::move(label), Formula(nullptr), Formula(nullptr)));
}
Formula Formula::conj(Formula l, Formula r) { return Formula(make<Node>(FormulaKind::And, {}, l, r)); }
Formula Formula::disj(Formula l, Formula r) { return Formula(make<Node>(FormulaKind::Or, {}, l, r)); }
Formula Formula::neg(Formula f) { return Formula(make<Node>(FormulaKind::Neg, {}, f, Formula(nullptr))); }
Formula Formula::seq_then(Formula l, Formula r) { return Formula(make<Node>(FormulaKind::SeqThen, {}, l, r)); }
Formula Formula::par_next(Formula l, Formula r) { return Formula(make<Node>(FormulaKind::ParNext, {}, l, r)); }
Formula Formula::box(Formula f) { return Formula(make<Node>(FormulaKind::BoxMod, {}, f, Formula(nullptr))); }
Formula Formula::context(Formula f) {
  return Formula(make<Node>(FormulaKind::ContextMod, {}, f, Formula(nullptr)));
}

FormulaKind Formula::kind() const { return node_->kind; }
const Label &Formula::label() const { return node_->label; }
const Formula &Formula::lhs() const { return node_->a; }
const Formula &Formula::rhs() const { return node_->b; }

bool Formula::is_binary() const {
  switch (kind()) {
  case FormulaKind::And:
  case FormulaKind::Or:
  case FormulaKind::SeqThen:
  case FormulaKind::ParNext: return true;
  default: return false;
  }
}

bool Formula::is_unary() const {
  const auto k = kind();
  return k == FormulaKind::Neg || k == FormulaKind::BoxMod || k == FormulaKind::ContextMod;
}

bool operator==(const Formula &x, const Formula &y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.kind() != y.kind()) return false;
  if (x.kind() == FormulaKind::Atom) return x.label() == y.label();
  if (x.is_unary()) return x.sub() == y.sub();
  if (x.is_binary()) return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  return true;
}

bool positive(const Formula &f) {
  if (f.kind() == FormulaKind::Neg) return false;
  if (f.is_unary()) return positive(f.sub());
  if (f.is_binary()) return positive(f.lhs()) && positive(f.rhs());
  return true;
}

std::size_t formula_size(const Formula &f) {
  if (f.is_unary()) return 1 + formula_size(f.sub());
  if (f.is_binary()) return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
  return 1;
}

std::size_t formula_depth(const Formula &f) {
  if (f.is_unary()) return 1 + formula_depth(f.sub());
  if (f.is_binary()) return 1 + std::max(formula_depth(f.lhs()), formula_depth(f.rhs()));
  return 0;
}

std::size_t count_kind(const Formula &f, FormulaKind k) {
  std::size_t here = f.kind() == k ? 1 : 0;
  if (f.is_unary()) return here + count_kind(f.sub(), k);
  if (f.is_binary()) return here + count_kind(f.lhs(), k) + count_kind(f.rhs(), k);
  return here;
}

namespace {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view s) : s_(s) {}

  Formula parse() {
    Formula f = disj();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return f;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula disj() {
    Formula f = conj();
    while (eat("\\/")) f = Formula::disj(f, conj());
    return f;
  }
  Formula conj() {
    Formula f = par();
    while (eat("/\\")) f = Formula::conj(f, par());
    return f;
  }
  Formula par() {
    Formula f = seq();
    while (eat("||")) f = Formula::par_next(f, seq());
    return f;
  }
  Formula seq() {
    Formula f = unary();
    if (eat("|>")) return Formula::seq_then(f, seq());
    return f;
  }

  Formula unary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    if (eat("~")) return Formula::neg(unary());
    if (eat("<>")) return Formula::context(unary());
    if (eat("[")) {
      Formula f = disj();
      if (!eat("]")) throw ParseError("expected ']'", pos_);
      return Formula::box(f);
    }
    if (eat("(")) {
      Formula f = disj();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return f;
    }
    const char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "emp") return Formula::emp();
      return Formula::atom(std::move(word));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(FormulaKind k) {
  switch (k) {
  case FormulaKind::Or: return 0;
  case FormulaKind::And: return 1;
  case FormulaKind::ParNext: return 2;
  case FormulaKind::SeqThen: return 3;
  default: return 4;
  }
}

void render(const Formula &f, std::string &out) {
  switch (f.kind()) {
  case FormulaKind::Emp: out += "emp"; return;
  case FormulaKind::Atom: out += f.label(); return;
  case FormulaKind::BoxMod:
    out += '[';
    render(f.sub(), out);
    out += ']';
    return;
  case FormulaKind::Neg:
  case FormulaKind::ContextMod: {
    out += f.kind() == FormulaKind::Neg ? "~" : "<>";
    const bool wrap = f.sub().is_binary();
    if (wrap) out += '(';
    render(f.sub(), out);
    if (wrap) out += ')';
    return;
  }
  default: break;
  }
  const int p = precedence(f.kind());
  const bool right_assoc = f.kind() == FormulaKind::SeqThen;
  const auto operand = [&](const Formula &c, bool right) {
    const int q = precedence(c.kind());
    const bool wrap = (right != right_assoc) ? q <= p : q < p;
    if (wrap) out += '(';
    render(c, out);
    if (wrap) out += ')';
  };
  operand(f.lhs(), false);
  switch (f.kind()) {
  case FormulaKind::Or: out += " \\/ "; break;
  case FormulaKind::And: out += " /\\ "; break;
  case FormulaKind::ParNext: out += " || "; break;
  default: out += " |> "; break;
  }
  operand(f.rhs(), true);
}

Formula fold(const std::vector<Formula> &fs, Formula (*op)(Formula, Formula)) {
  if (fs.empty()) throw std::invalid_argument("empty formula fold");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = op(acc, fs[i]);
  return acc;
}

} // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string render_formula(const Formula &f) {
  std::string out;
  render(f, out);
  return out;
}

Formula substitute_formula(const Formula &f, const std::map<Label, Formula> &tau) {
  switch (f.kind()) {
  case FormulaKind::Emp: return f;
  case FormulaKind::Atom: {
    auto it = tau.find(f.label());
    return it == tau.end() ? f : it->second;
  }
  case FormulaKind::Neg: return Formula::neg(substitute_formula(f.sub(), tau));
  case FormulaKind::BoxMod: return Formula::box(substitute_formula(f.sub(), tau));
  case FormulaKind::ContextMod: return Formula::context(substitute_formula(f.sub(), tau));
  case FormulaKind::And: return Formula::conj(substitute_formula(f.lhs(), tau), substitute_formula(f.rhs(), tau));
  case FormulaKind::Or: return Formula::disj(substitute_formula(f.lhs(), tau), substitute_formula(f.rhs(), tau));
  case FormulaKind::SeqThen:
    return Formula::seq_then(substitute_formula(f.lhs(), tau), substitute_formula(f.rhs(), tau));
  case FormulaKind::ParNext:
    return Formula::par_next(substitute_formula(f.lhs(), tau), substitute_formula(f.rhs(), tau));
  }
  return f;
}

Formula disj_all(const std::vector<Formula> &fs) { return fold(fs, Formula::disj); }
Formula conj_all(const std::vector<Formula> &fs) { return fold(fs, Formula::conj); }
Formula par_next_all(const std::vector<Formula> &fs) { return fold(fs, Formula::par_next); }

} // namespace pombox

#include "cjkit/formula.hpp"

#include <sstream>

#include "cjkit/errors.hpp"

namespace cjkit {

Formula Formula::make(Op op, std::string name, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw InvalidArgument("atom name must be nonempty");
  return make(Op::atom, std::move(name), nullptr, nullptr);
}
Formula Formula::top() { return make(Op::top, {}, nullptr, nullptr); }
Formula Formula::bottom() { return make(Op::bottom, {}, nullptr, nullptr); }
Formula Formula::neg(Formula f) { return make(Op::neg, {}, f.node_, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::conj, {}, a.node_, b.node_); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::disj, {}, a.node_, b.node_); }
Formula Formula::implies(Formula a, Formula b) { return make(Op::implies, {}, a.node_, b.node_); }
Formula Formula::iff(Formula a, Formula b) { return make(Op::iff, {}, a.node_, b.node_); }
Formula Formula::box_strong(Formula f) { return make(Op::box_strong, {}, f.node_, nullptr); }
Formula Formula::dia_strong(Formula f) { return make(Op::dia_strong, {}, f.node_, nullptr); }
Formula Formula::box_actual(Formula f) { return make(Op::box_actual, {}, f.node_, nullptr); }
Formula Formula::dia_actual(Formula f) { return make(Op::dia_actual, {}, f.node_, nullptr); }
Formula Formula::obl_actual(Formula f) { return make(Op::obl_actual, {}, f.node_, nullptr); }
Formula Formula::obl_ideal(Formula f) { return make(Op::obl_ideal, {}, f.node_, nullptr); }
Formula Formula::obl_cond(Formula consequent, Formula antecedent) {
  return make(Op::obl_cond, {}, consequent.node_, antecedent.node_);
}
Formula Formula::viol(Formula f) { return make(Op::viol, {}, f.node_, nullptr); }

bool Formula::is_unary() const {
  switch (op()) {
    case Op::neg:
    case Op::box_strong:
    case Op::dia_strong:
    case Op::box_actual:
    case Op::dia_actual:
    case Op::obl_actual:
    case Op::obl_ideal:
    case Op::viol:
      return true;
    default:
      return false;
  }
}

bool Formula::is_binary() const {
  switch (op()) {
    case Op::conj:
    case Op::disj:
    case Op::implies:
    case Op::iff:
    case Op::obl_cond:
      return true;
    default:
      return false;
  }
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->op != o.node_->op) return false;
  if (node_->op == Op::atom) return node_->name == o.node_->name;
  return Formula(node_->a) == Formula(o.node_->a) && Formula(node_->b) == Formula(o.node_->b);
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.empty()) return;
  if (f.op() == Op::atom) {
    out.insert(f.atom_name());
    return;
  }
  if (f.is_unary()) {
    collect_atoms(f.lhs(), out);
  } else if (f.is_binary()) {
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
  }
}

// Binding strength, loosest first. Unary operators bind tightest.
enum Level { kIff = 0, kImp, kOr, kAnd, kUnary };

Level level_of(const Formula& f) {
  switch (f.op()) {
    case Op::iff: return kIff;
    case Op::implies: return kImp;
    case Op::disj: return kOr;
    case Op::conj: return kAnd;
    default: return kUnary;
  }
}

// no_bare_or: set while rendering the consequent of O(.|.), where an
// unparenthesized | would be read as the separating bar. Any disjunction
// reached without an intervening pair of parentheses must bracket itself;
// emitted parentheses reset the flag.
void render(const Formula& f, Level min_level, bool no_bare_or, std::ostream& os) {
  const Level mine = level_of(f);
  const bool parens = (f.is_binary() && f.op() != Op::obl_cond && mine < min_level) ||
                      (no_bare_or && f.op() == Op::disj);
  if (parens) {
    os << "(";
    no_bare_or = false;
  }
  switch (f.op()) {
    case Op::atom: os << f.atom_name(); break;
    case Op::top: os << "true"; break;
    case Op::bottom: os << "false"; break;
    case Op::neg: os << "~"; render(f.lhs(), kUnary, false, os); break;
    case Op::box_strong: os << "[]"; render(f.lhs(), kUnary, false, os); break;
    case Op::dia_strong: os << "<>"; render(f.lhs(), kUnary, false, os); break;
    case Op::box_actual: os << "[a]"; render(f.lhs(), kUnary, false, os); break;
    case Op::dia_actual: os << "<a>"; render(f.lhs(), kUnary, false, os); break;
    case Op::obl_actual: os << "Oa "; render(f.lhs(), kUnary, false, os); break;
    case Op::obl_ideal: os << "Oi "; render(f.lhs(), kUnary, false, os); break;
    case Op::viol:
      os << "viol(";
      render(f.lhs(), kIff, false, os);
      os << ")";
      break;
    case Op::obl_cond:
      os << "O(";
      render(f.consequent(), kIff, true, os);
      os << "|";
      render(f.antecedent(), kIff, false, os);
      os << ")";
      break;
    // Left-associative chains render flat; the opposite nesting keeps
    // its parentheses so parsing restores the same tree.
    case Op::conj:
      render(f.lhs(), kAnd, no_bare_or, os);
      os << " & ";
      render(f.rhs(), static_cast<Level>(kAnd + 1), no_bare_or, os);
      break;
    case Op::disj:
      render(f.lhs(), kOr, false, os);
      os << " | ";
      render(f.rhs(), static_cast<Level>(kOr + 1), false, os);
      break;
    case Op::implies:  // right-associative
      render(f.lhs(), static_cast<Level>(kImp + 1), no_bare_or, os);
      os << " -> ";
      render(f.rhs(), kImp, no_bare_or, os);
      break;
    case Op::iff:
      render(f.lhs(), kIff, no_bare_or, os);
      os << " <-> ";
      render(f.rhs(), static_cast<Level>(kIff + 1), no_bare_or, os);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool is_propositional(const Formula& f) {
  switch (f.op()) {
    case Op::atom:
    case Op::top:
    case Op::bottom:
      return true;
    case Op::neg:
      return is_propositional(f.lhs());
    case Op::conj:
    case Op::disj:
    case Op::implies:
    case Op::iff:
      return is_propositional(f.lhs()) && is_propositional(f.rhs());
    default:
      return false;
  }
}

std::string render_formula(const Formula& f) {
  std::ostringstream os;
  render(f, kIff, false, os);
  return os.str();
}

}  // namespace cjkit

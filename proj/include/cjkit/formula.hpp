#pragma once

#include <memory>
#include <set>
#include <string>

namespace cjkit {

// Connectives and modalities of the object language. The two box/diamond
// pairs quantify over pv (strong) and av (actual); obl_actual and
// obl_ideal are the two monadic obligations, obl_cond the dyadic one,
// and viol abbreviates "ideally obligatory but false".
enum class Op {
  atom,
  top,
  bottom,
  neg,
  conj,
  disj,
  implies,
  iff,
  box_strong,   // []
  dia_strong,   // <>
  box_actual,   // [a]
  dia_actual,   // <a>
  obl_actual,   // Oa
  obl_ideal,    // Oi
  obl_cond,     // O(consequent | antecedent)
  viol,         // viol(...)
};

// Immutable formula tree with shared subterms. Copying is cheap;
// equality is structural. A default-constructed Formula is an empty
// placeholder and must not be evaluated or rendered.
class Formula {
 public:
  Formula() = default;

  bool empty() const { return node_ == nullptr; }
  Op op() const { return node_->op; }
  const std::string& atom_name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->a); }  // also the only child of unary ops
  Formula rhs() const { return Formula(node_->b); }

  // For obl_cond: lhs is the consequent, rhs the antecedent.
  Formula consequent() const { return lhs(); }
  Formula antecedent() const { return rhs(); }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula box_strong(Formula f);
  static Formula dia_strong(Formula f);
  static Formula box_actual(Formula f);
  static Formula dia_actual(Formula f);
  static Formula obl_actual(Formula f);
  static Formula obl_ideal(Formula f);
  static Formula obl_cond(Formula consequent, Formula antecedent);
  static Formula viol(Formula f);

  bool is_unary() const;   // neg, the four modalities, Oa, Oi, viol
  bool is_binary() const;  // conj, disj, implies, iff, obl_cond

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Op op;
    std::string name;  // atoms only
    NodePtr a, b;
  };
  explicit Formula(NodePtr n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, NodePtr a, NodePtr b);
  NodePtr node_;
};

// Names of the atoms occurring in the tree.
std::set<std::string> atoms_of(const Formula& f);

// True when the formula uses only atoms, constants and boolean
// connectives; such formulas can be evaluated from a valuation alone.
bool is_propositional(const Formula& f);

// Canonical, minimally parenthesized text. parse_formula inverts this
// up to structural equality.
std::string render_formula(const Formula& f);

}  // namespace cjkit

#pragma once

// Abstract syntax for the three formula languages handled by asimkit:
//
//   IntFormula    intuitionistic propositional formulas over p1, p2, ... built
//                 from false, &, |, ->. Negation is not primitive.
//   ModalFormula  modal propositional formulas built from ~, &, [].
//   FOFormula     first-order formulas over the vocabulary {R, =, P1, P2, ...}
//                 with unary P_n and the single binary letter R.
//
// All three are immutable handles onto shared trees: copying is cheap and
// subtrees are shared, never mutated.

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "asimkit/vocabulary.hpp"

namespace asimkit {

class IntFormula {
 public:
  enum class Kind : unsigned char { Bottom, Prop, And, Or, Imp };

  static IntFormula bottom();
  static IntFormula prop(int index);
  static IntFormula conj(IntFormula left, IntFormula right);
  static IntFormula disj(IntFormula left, IntFormula right);
  static IntFormula imp(IntFormula left, IntFormula right);

  [[nodiscard]] Kind kind() const;
  // Proposition index; only meaningful for Kind::Prop.
  [[nodiscard]] int index() const;
  [[nodiscard]] bool is_binary() const;
  [[nodiscard]] const IntFormula& left() const;
  [[nodiscard]] const IntFormula& right() const;

  friend bool operator==(const IntFormula& a, const IntFormula& b);
  // Structural order: kind, then index, then children left to right.
  friend std::strong_ordering operator<=>(const IntFormula& a, const IntFormula& b);

 private:
  struct Node;
  IntFormula() = default;
  explicit IntFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct IntFormula::Node {
  Kind kind;
  int index = 0;
  IntFormula left;
  IntFormula right;
};

inline IntFormula::Kind IntFormula::kind() const { return node_->kind; }
inline int IntFormula::index() const { return node_->index; }
inline const IntFormula& IntFormula::left() const { return node_->left; }
inline const IntFormula& IntFormula::right() const { return node_->right; }
inline bool IntFormula::is_binary() const {
  return node_->kind == Kind::And || node_->kind == Kind::Or || node_->kind == Kind::Imp;
}

class ModalFormula {
 public:
  enum class Kind : unsigned char { Prop, And, Neg, Box };

  static ModalFormula prop(int index);
  static ModalFormula conj(ModalFormula left, ModalFormula right);
  static ModalFormula neg(ModalFormula body);
  static ModalFormula box(ModalFormula body);

  [[nodiscard]] Kind kind() const;
  [[nodiscard]] int index() const;
  // For Neg and Box, the operand is left().
  [[nodiscard]] const ModalFormula& left() const;
  [[nodiscard]] const ModalFormula& right() const;
  [[nodiscard]] const ModalFormula& body() const { return left(); }

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);
  friend std::strong_ordering operator<=>(const ModalFormula& a, const ModalFormula& b);

 private:
  struct Node;
  ModalFormula() = default;
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ModalFormula::Node {
  Kind kind;
  int index = 0;
  ModalFormula left;
  ModalFormula right;
};

inline ModalFormula::Kind ModalFormula::kind() const { return node_->kind; }
inline int ModalFormula::index() const { return node_->index; }
inline const ModalFormula& ModalFormula::left() const { return node_->left; }
inline const ModalFormula& ModalFormula::right() const { return node_->right; }

class FOFormula {
 public:
  enum class Kind : unsigned char { Pred, Rel, Eq, Neg, And, Or, Imp, Forall, Exists };

  static FOFormula pred(int letter, std::string var);
  static FOFormula rel(std::string from, std::string to);
  static FOFormula eq(std::string lhs, std::string rhs);
  static FOFormula neg(FOFormula body);
  static FOFormula conj(FOFormula left, FOFormula right);
  static FOFormula disj(FOFormula left, FOFormula right);
  static FOFormula imp(FOFormula left, FOFormula right);
  static FOFormula forall(std::string var, FOFormula body);
  static FOFormula exists(std::string var, FOFormula body);

  [[nodiscard]] Kind kind() const;
  // Predicate letter index; only meaningful for Kind::Pred.
  [[nodiscard]] int letter() const;
  // Pred: the argument. Rel/Eq: first argument. Forall/Exists: bound variable.
  [[nodiscard]] const std::string& var() const;
  // Rel/Eq: second argument.
  [[nodiscard]] const std::string& var2() const;
  // Neg/Forall/Exists: the operand is left().
  [[nodiscard]] const FOFormula& left() const;
  [[nodiscard]] const FOFormula& right() const;
  [[nodiscard]] const FOFormula& body() const { return left(); }

  [[nodiscard]] bool is_atomic() const;
  [[nodiscard]] bool is_binary() const;
  [[nodiscard]] bool is_quantifier() const;

  friend bool operator==(const FOFormula& a, const FOFormula& b);
  friend std::strong_ordering operator<=>(const FOFormula& a, const FOFormula& b);

 private:
  struct Node;
  FOFormula() = default;
  explicit FOFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FOFormula::Node {
  Kind kind;
  int letter = 0;
  std::string var;
  std::string var2;
  FOFormula left;
  FOFormula right;
};

inline FOFormula::Kind FOFormula::kind() const { return node_->kind; }
inline int FOFormula::letter() const { return node_->letter; }
inline const std::string& FOFormula::var() const { return node_->var; }
inline const std::string& FOFormula::var2() const { return node_->var2; }
inline const FOFormula& FOFormula::left() const { return node_->left; }
inline const FOFormula& FOFormula::right() const { return node_->right; }

// Structural measures.

// Maximum nesting of Imp: atoms 0, And/Or max, Imp 1 + max.
[[nodiscard]] std::size_t impl_depth(const IntFormula& formula);
// Maximum nesting of Box.
[[nodiscard]] std::size_t box_depth(const ModalFormula& formula);
// Quantifier rank: atomic 0, negation transparent, binary max, quantifier +1.
[[nodiscard]] std::size_t degree(const FOFormula& formula);

// Node counts, used to order generated formulas.
[[nodiscard]] std::size_t size(const IntFormula& formula);
[[nodiscard]] std::size_t size(const FOFormula& formula);

[[nodiscard]] Vocabulary vocabulary_of(const IntFormula& formula);
[[nodiscard]] Vocabulary vocabulary_of(const ModalFormula& formula);
[[nodiscard]] Vocabulary vocabulary_of(const FOFormula& formula);

[[nodiscard]] std::set<std::string> free_variables(const FOFormula& formula);

// True when the name can be used as a first-order variable: an identifier
// that is not a keyword, R, or a letter token P<digits>/p<digits>.
[[nodiscard]] bool is_valid_variable(const std::string& name);

// Left-folded conjunction/disjunction; the list must be nonempty.
[[nodiscard]] IntFormula conjunction_of(const std::vector<IntFormula>& items);
[[nodiscard]] IntFormula disjunction_of(const std::vector<IntFormula>& items);
[[nodiscard]] FOFormula conjunction_of(const std::vector<FOFormula>& items);

}  // namespace asimkit

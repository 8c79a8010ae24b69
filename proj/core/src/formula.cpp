#include "asimkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "asimkit/error.hpp"

namespace asimkit {

// Vocabulary

Vocabulary::Vocabulary(std::initializer_list<int> letters) {
  for (int letter : letters) insert(letter);
}

void Vocabulary::insert(int letter) {
  if (letter < 1) throw PreconditionError("letter indices start at 1, got " + std::to_string(letter));
  letters_.insert(letter);
}

bool Vocabulary::subset_of(const Vocabulary& other) const {
  return std::includes(other.letters_.begin(), other.letters_.end(), letters_.begin(), letters_.end());
}

Vocabulary Vocabulary::united(const Vocabulary& other) const {
  Vocabulary out = *this;
  out.letters_.insert(other.letters_.begin(), other.letters_.end());
  return out;
}

std::string Vocabulary::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int letter : letters_) {
    if (!first) out << ", ";
    out << letter;
    first = false;
  }
  out << '}';
  return out.str();
}

// IntFormula

IntFormula IntFormula::bottom() { return IntFormula(std::make_shared<const Node>(Node{Kind::Bottom, 0, {}, {}})); }

IntFormula IntFormula::prop(int index) {
  if (index < 1) throw PreconditionError("proposition indices start at 1, got " + std::to_string(index));
  return IntFormula(std::make_shared<const Node>(Node{Kind::Prop, index, {}, {}}));
}

IntFormula IntFormula::conj(IntFormula left, IntFormula right) {
  return IntFormula(std::make_shared<const Node>(Node{Kind::And, 0, std::move(left), std::move(right)}));
}

IntFormula IntFormula::disj(IntFormula left, IntFormula right) {
  return IntFormula(std::make_shared<const Node>(Node{Kind::Or, 0, std::move(left), std::move(right)}));
}

IntFormula IntFormula::imp(IntFormula left, IntFormula right) {
  return IntFormula(std::make_shared<const Node>(Node{Kind::Imp, 0, std::move(left), std::move(right)}));
}

std::strong_ordering operator<=>(const IntFormula& a, const IntFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case IntFormula::Kind::Bottom:
      return std::strong_ordering::equal;
    case IntFormula::Kind::Prop:
      return a.index() <=> b.index();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

bool operator==(const IntFormula& a, const IntFormula& b) { return (a <=> b) == 0; }

// ModalFormula

ModalFormula ModalFormula::prop(int index) {
  if (index < 1) throw PreconditionError("proposition indices start at 1, got " + std::to_string(index));
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Prop, index, {}, {}}));
}

ModalFormula ModalFormula::conj(ModalFormula left, ModalFormula right) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::And, 0, std::move(left), std::move(right)}));
}

ModalFormula ModalFormula::neg(ModalFormula body) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Neg, 0, std::move(body), {}}));
}

ModalFormula ModalFormula::box(ModalFormula body) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Box, 0, std::move(body), {}}));
}

std::strong_ordering operator<=>(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case ModalFormula::Kind::Prop:
      return a.index() <=> b.index();
    case ModalFormula::Kind::And:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    default:
      return a.body() <=> b.body();
  }
}

bool operator==(const ModalFormula& a, const ModalFormula& b) { return (a <=> b) == 0; }

// FOFormula

namespace {

void require_variable(const std::string& name) {
  if (!is_valid_variable(name)) throw PreconditionError("invalid variable name '" + name + "'");
}

}  // namespace

FOFormula FOFormula::pred(int letter, std::string var) {
  if (letter < 1) throw PreconditionError("predicate indices start at 1, got " + std::to_string(letter));
  require_variable(var);
  return FOFormula(std::make_shared<const Node>(Node{Kind::Pred, letter, std::move(var), {}, {}, {}}));
}

FOFormula FOFormula::rel(std::string from, std::string to) {
  require_variable(from);
  require_variable(to);
  return FOFormula(std::make_shared<const Node>(Node{Kind::Rel, 0, std::move(from), std::move(to), {}, {}}));
}

FOFormula FOFormula::eq(std::string lhs, std::string rhs) {
  require_variable(lhs);
  require_variable(rhs);
  return FOFormula(std::make_shared<const Node>(Node{Kind::Eq, 0, std::move(lhs), std::move(rhs), {}, {}}));
}

FOFormula FOFormula::neg(FOFormula body) {
  return FOFormula(std::make_shared<const Node>(Node{Kind::Neg, 0, {}, {}, std::move(body), {}}));
}

FOFormula FOFormula::conj(FOFormula left, FOFormula right) {
  return FOFormula(std::make_shared<const Node>(Node{Kind::And, 0, {}, {}, std::move(left), std::move(right)}));
}

FOFormula FOFormula::disj(FOFormula left, FOFormula right) {
  return FOFormula(std::make_shared<const Node>(Node{Kind::Or, 0, {}, {}, std::move(left), std::move(right)}));
}

FOFormula FOFormula::imp(FOFormula left, FOFormula right) {
  return FOFormula(std::make_shared<const Node>(Node{Kind::Imp, 0, {}, {}, std::move(left), std::move(right)}));
}

FOFormula FOFormula::forall(std::string var, FOFormula body) {
  require_variable(var);
  return FOFormula(std::make_shared<const Node>(Node{Kind::Forall, 0, std::move(var), {}, std::move(body), {}}));
}

FOFormula FOFormula::exists(std::string var, FOFormula body) {
  require_variable(var);
  return FOFormula(std::make_shared<const Node>(Node{Kind::Exists, 0, std::move(var), {}, std::move(body), {}}));
}

bool FOFormula::is_atomic() const {
  return kind() == Kind::Pred || kind() == Kind::Rel || kind() == Kind::Eq;
}

bool FOFormula::is_binary() const { return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Imp; }

bool FOFormula::is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }

std::strong_ordering operator<=>(const FOFormula& a, const FOFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.letter() <=> b.letter(); c != 0) return c;
  if (auto c = a.var() <=> b.var(); c != 0) return c;
  if (auto c = a.var2() <=> b.var2(); c != 0) return c;
  if (a.is_atomic()) return std::strong_ordering::equal;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  if (!a.is_binary()) return std::strong_ordering::equal;
  return a.right() <=> b.right();
}

bool operator==(const FOFormula& a, const FOFormula& b) { return (a <=> b) == 0; }

// Measures

std::size_t impl_depth(const IntFormula& f) {
  switch (f.kind()) {
    case IntFormula::Kind::Bottom:
    case IntFormula::Kind::Prop:
      return 0;
    case IntFormula::Kind::Imp:
      return 1 + std::max(impl_depth(f.left()), impl_depth(f.right()));
    default:
      return std::max(impl_depth(f.left()), impl_depth(f.right()));
  }
}

std::size_t box_depth(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
      return 0;
    case ModalFormula::Kind::And:
      return std::max(box_depth(f.left()), box_depth(f.right()));
    case ModalFormula::Kind::Neg:
      return box_depth(f.body());
    case ModalFormula::Kind::Box:
      return 1 + box_depth(f.body());
  }
  return 0;
}

std::size_t degree(const FOFormula& f) {
  if (f.is_atomic()) return 0;
  if (f.kind() == FOFormula::Kind::Neg) return degree(f.body());
  if (f.is_quantifier()) return degree(f.body()) + 1;
  return std::max(degree(f.left()), degree(f.right()));
}

std::size_t size(const IntFormula& f) {
  if (!f.is_binary()) return 1;
  return 1 + size(f.left()) + size(f.right());
}

std::size_t size(const FOFormula& f) {
  if (f.is_atomic()) return 1;
  if (f.is_binary()) return 1 + size(f.left()) + size(f.right());
  return 1 + size(f.body());
}

namespace {

void collect(const IntFormula& f, Vocabulary& out) {
  if (f.kind() == IntFormula::Kind::Prop) out.insert(f.index());
  if (f.is_binary()) {
    collect(f.left(), out);
    collect(f.right(), out);
  }
}

void collect(const ModalFormula& f, Vocabulary& out) {
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
      out.insert(f.index());
      break;
    case ModalFormula::Kind::And:
      collect(f.left(), out);
      collect(f.right(), out);
      break;
    default:
      collect(f.body(), out);
  }
}

void collect(const FOFormula& f, Vocabulary& out) {
  if (f.kind() == FOFormula::Kind::Pred) out.insert(f.letter());
  if (f.is_atomic()) return;
  collect(f.left(), out);
  if (f.is_binary()) collect(f.right(), out);
}

void collect_free(const FOFormula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (f.kind()) {
    case FOFormula::Kind::Pred:
      note(f.var());
      return;
    case FOFormula::Kind::Rel:
    case FOFormula::Kind::Eq:
      note(f.var());
      note(f.var2());
      return;
    case FOFormula::Kind::Forall:
    case FOFormula::Kind::Exists:
      bound.push_back(f.var());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
    case FOFormula::Kind::Neg:
      collect_free(f.body(), bound, out);
      return;
    default:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
  }
}

bool is_letter_token(const std::string& name, char head) {
  return name.size() >= 2 && name[0] == head &&
         std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Vocabulary vocabulary_of(const IntFormula& formula) {
  Vocabulary out;
  collect(formula, out);
  return out;
}

Vocabulary vocabulary_of(const ModalFormula& formula) {
  Vocabulary out;
  collect(formula, out);
  return out;
}

Vocabulary vocabulary_of(const FOFormula& formula) {
  Vocabulary out;
  collect(formula, out);
  return out;
}

std::set<std::string> free_variables(const FOFormula& formula) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(formula, bound, out);
  return out;
}

bool is_valid_variable(const std::string& name) {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name[0]);
  if (std::isalpha(head) == 0 && head != '_') return false;
  for (unsigned char c : name) {
    if (std::isalnum(c) == 0 && c != '_') return false;
  }
  if (name == "false" || name == "forall" || name == "exists" || name == "R") return false;
  return !is_letter_token(name, 'P') && !is_letter_token(name, 'p');
}

IntFormula conjunction_of(const std::vector<IntFormula>& items) {
  if (items.empty()) throw PreconditionError("conjunction of no formulas");
  IntFormula out = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) out = IntFormula::conj(out, items[i]);
  return out;
}

IntFormula disjunction_of(const std::vector<IntFormula>& items) {
  if (items.empty()) throw PreconditionError("disjunction of no formulas");
  IntFormula out = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) out = IntFormula::disj(out, items[i]);
  return out;
}

FOFormula conjunction_of(const std::vector<FOFormula>& items) {
  if (items.empty()) throw PreconditionError("conjunction of no formulas");
  FOFormula out = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) out = FOFormula::conj(out, items[i]);
  return out;
}

}  // namespace asimkit

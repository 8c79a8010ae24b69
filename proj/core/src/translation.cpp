#include "asimkit/translation.hpp"

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

class FreshNames {
 public:
  explicit FreshNames(const std::string& avoid) : avoid_(avoid) {}

  std::string next() {
    std::string name;
    do {
      name = "y" + std::to_string(counter_++);
    } while (name == avoid_);
    return name;
  }

 private:
  const std::string& avoid_;
  std::size_t counter_ = 0;
};

FOFormula translate(const IntFormula& f, const std::string& x, FreshNames& fresh) {
  switch (f.kind()) {
    case IntFormula::Kind::Prop:
      return FOFormula::pred(f.index(), x);
    case IntFormula::Kind::Bottom:
      return FOFormula::neg(FOFormula::eq(x, x));
    case IntFormula::Kind::And: {
      FOFormula lhs = translate(f.left(), x, fresh);
      return FOFormula::conj(lhs, translate(f.right(), x, fresh));
    }
    case IntFormula::Kind::Or: {
      FOFormula lhs = translate(f.left(), x, fresh);
      return FOFormula::disj(lhs, translate(f.right(), x, fresh));
    }
    case IntFormula::Kind::Imp: {
      const std::string y = fresh.next();
      FOFormula lhs = translate(f.left(), y, fresh);
      FOFormula rhs = translate(f.right(), y, fresh);
      return FOFormula::forall(y, FOFormula::imp(FOFormula::rel(x, y), FOFormula::imp(lhs, rhs)));
    }
  }
  throw PreconditionError("unknown intuitionistic connective");
}

FOFormula translate(const ModalFormula& m, const std::string& x, FreshNames& fresh) {
  switch (m.kind()) {
    case ModalFormula::Kind::Prop:
      return FOFormula::pred(m.index(), x);
    case ModalFormula::Kind::And: {
      FOFormula lhs = translate(m.left(), x, fresh);
      return FOFormula::conj(lhs, translate(m.right(), x, fresh));
    }
    case ModalFormula::Kind::Neg:
      return FOFormula::neg(translate(m.body(), x, fresh));
    case ModalFormula::Kind::Box: {
      const std::string y = fresh.next();
      return FOFormula::forall(y, FOFormula::imp(FOFormula::rel(x, y), translate(m.body(), y, fresh)));
    }
  }
  throw PreconditionError("unknown modal connective");
}

void require_variable(const std::string& x) {
  if (!is_valid_variable(x)) throw PreconditionError("invalid translation variable '" + x + "'");
}

}  // namespace

FOFormula st(const IntFormula& formula, const std::string& x) {
  require_variable(x);
  FreshNames fresh(x);
  return translate(formula, x, fresh);
}

FOFormula tr(const ModalFormula& formula, const std::string& x) {
  require_variable(x);
  FreshNames fresh(x);
  return translate(formula, x, fresh);
}

}  // namespace asimkit

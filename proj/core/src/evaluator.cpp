#include "asimkit/evaluator.hpp"

#include <cstdint>

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

void require_vocabulary(const Model& model, const Vocabulary& used) {
  for (int letter : used) {
    if (!model.vocab().contains(letter)) {
      throw EvalError("P" + std::to_string(letter) + " is not in the model's vocabulary " + model.vocab().to_string());
    }
  }
}

// Formulas are flattened into an array of operations whose variables are
// resolved to slots of an environment array, so evaluation never touches
// strings.
struct Compiled {
  struct Op {
    FOFormula::Kind kind;
    int letter = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::vector<Op> ops;
  std::vector<std::pair<std::string, std::uint32_t>> free;
  std::size_t slots = 0;
  Vocabulary used;

  std::int32_t compile(const FOFormula& f, std::vector<std::pair<std::string, std::uint32_t>>& scope) {
    auto slot_of = [&](const std::string& name) -> std::uint32_t {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->first == name) return it->second;
      }
      const auto slot = static_cast<std::uint32_t>(slots++);
      free.emplace_back(name, slot);
      // Free variables live at the bottom of the scope so later binders shadow them.
      scope.insert(scope.begin(), {name, slot});
      return slot;
    };
    Op op{f.kind()};
    switch (f.kind()) {
      case FOFormula::Kind::Pred:
        op.letter = f.letter();
        op.a = slot_of(f.var());
        break;
      case FOFormula::Kind::Rel:
      case FOFormula::Kind::Eq:
        op.a = slot_of(f.var());
        op.b = slot_of(f.var2());
        break;
      case FOFormula::Kind::Neg:
        op.left = compile(f.body(), scope);
        break;
      case FOFormula::Kind::Forall:
      case FOFormula::Kind::Exists: {
        op.a = static_cast<std::uint32_t>(slots++);
        scope.emplace_back(f.var(), op.a);
        op.left = compile(f.body(), scope);
        scope.pop_back();
        break;
      }
      default:
        op.left = compile(f.left(), scope);
        op.right = compile(f.right(), scope);
    }
    ops.push_back(op);
    return static_cast<std::int32_t>(ops.size() - 1);
  }

  bool eval(std::int32_t index, const Model& model, std::vector<std::uint32_t>& env) const {
    const Op& op = ops[static_cast<std::size_t>(index)];
    switch (op.kind) {
      case FOFormula::Kind::Pred:
        return model.satisfies(op.letter, World{env[op.a]});
      case FOFormula::Kind::Rel:
        return model.related(World{env[op.a]}, World{env[op.b]});
      case FOFormula::Kind::Eq:
        return env[op.a] == env[op.b];
      case FOFormula::Kind::Neg:
        return !eval(op.left, model, env);
      case FOFormula::Kind::And:
        return eval(op.left, model, env) && eval(op.right, model, env);
      case FOFormula::Kind::Or:
        return eval(op.left, model, env) || eval(op.right, model, env);
      case FOFormula::Kind::Imp:
        return !eval(op.left, model, env) || eval(op.right, model, env);
      case FOFormula::Kind::Forall:
      case FOFormula::Kind::Exists: {
        const bool universal = op.kind == FOFormula::Kind::Forall;
        const auto n = static_cast<std::uint32_t>(model.size());
        const std::uint32_t saved = env[op.a];
        bool result = universal;
        for (std::uint32_t w = 0; w < n; ++w) {
          env[op.a] = w;
          if (eval(op.left, model, env) != universal) {
            result = !universal;
            break;
          }
        }
        env[op.a] = saved;
        return result;
      }
    }
    return false;
  }

  bool run(const Model& model, std::vector<std::uint32_t>& env) const {
    require_vocabulary(model, used);
    return eval(static_cast<std::int32_t>(ops.size() - 1), model, env);
  }

  void build(const FOFormula& formula) {
    std::vector<std::pair<std::string, std::uint32_t>> scope;
    compile(formula, scope);
    used = vocabulary_of(formula);
  }
};

}  // namespace

struct PointEvaluator::Program : Compiled {};

bool fo_eval(const Model& model, const Assignment& assignment, const FOFormula& formula) {
  Compiled program;
  program.build(formula);
  std::vector<std::uint32_t> env(program.slots, 0);
  for (const auto& [name, slot] : program.free) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw EvalError("free variable '" + name + "' is unassigned");
    if (!model.contains(it->second)) throw EvalError("variable '" + name + "' is assigned a world outside the model");
    env[slot] = it->second.index;
  }
  return program.run(model, env);
}

bool holds_at(const PointedModel& point, const FOFormula& formula) {
  const auto free = free_variables(formula);
  if (free.size() != 1) {
    throw EvalError("expected exactly one free variable, found " + std::to_string(free.size()));
  }
  return fo_eval(point.model(), {{*free.begin(), point.point()}}, formula);
}

PointEvaluator::PointEvaluator(const FOFormula& formula) : program_(std::make_unique<Program>()) {
  program_->build(formula);
  if (program_->free.size() > 1) {
    throw EvalError("expected at most one free variable, found " + std::to_string(program_->free.size()));
  }
}

PointEvaluator::~PointEvaluator() = default;
PointEvaluator::PointEvaluator(PointEvaluator&&) noexcept = default;
PointEvaluator& PointEvaluator::operator=(PointEvaluator&&) noexcept = default;

bool PointEvaluator::operator()(const Model& model, World world) const {
  if (!model.contains(world)) throw EvalError("world outside the model");
  std::vector<std::uint32_t> env(program_->slots, 0);
  if (!program_->free.empty()) env[program_->free.front().second] = world.index;
  return program_->run(model, env);
}

std::vector<bool> PointEvaluator::extension(const Model& model) const {
  std::vector<bool> out;
  out.reserve(model.size());
  for (World w : model.worlds()) out.push_back((*this)(model, w));
  return out;
}

namespace {

std::vector<bool> forced(const Model& model, const IntFormula& f) {
  const std::size_t n = model.size();
  switch (f.kind()) {
    case IntFormula::Kind::Bottom:
      return std::vector<bool>(n, false);
    case IntFormula::Kind::Prop: {
      std::vector<bool> out(n);
      for (World w : model.worlds()) out[w.index] = model.satisfies(f.index(), w);
      return out;
    }
    default:
      break;
  }
  auto lhs = forced(model, f.left());
  const auto rhs = forced(model, f.right());
  for (std::size_t i = 0; i < n; ++i) {
    if (f.kind() == IntFormula::Kind::And) {
      lhs[i] = lhs[i] && rhs[i];
    } else if (f.kind() == IntFormula::Kind::Or) {
      lhs[i] = lhs[i] || rhs[i];
    }
  }
  if (f.kind() != IntFormula::Kind::Imp) return lhs;
  std::vector<bool> out(n, true);
  for (World w : model.worlds()) {
    for (World v : model.successors(w)) {
      if (lhs[v.index] && !rhs[v.index]) {
        out[w.index] = false;
        break;
      }
    }
  }
  return out;
}

std::vector<bool> modal(const Model& model, const ModalFormula& f) {
  const std::size_t n = model.size();
  std::vector<bool> out(n);
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
      for (World w : model.worlds()) out[w.index] = model.satisfies(f.index(), w);
      return out;
    case ModalFormula::Kind::And: {
      const auto lhs = modal(model, f.left());
      const auto rhs = modal(model, f.right());
      for (std::size_t i = 0; i < n; ++i) out[i] = lhs[i] && rhs[i];
      return out;
    }
    case ModalFormula::Kind::Neg: {
      const auto body = modal(model, f.body());
      for (std::size_t i = 0; i < n; ++i) out[i] = !body[i];
      return out;
    }
    case ModalFormula::Kind::Box: {
      const auto body = modal(model, f.body());
      for (World w : model.worlds()) {
        bool all = true;
        for (World v : model.successors(w)) all = all && body[v.index];
        out[w.index] = all;
      }
      return out;
    }
  }
  return out;
}

void require_world(const Model& model, World world) {
  if (!model.contains(world)) throw EvalError("world outside the model");
}

}  // namespace

std::vector<bool> forced_worlds(const Model& model, const IntFormula& formula) {
  require_vocabulary(model, vocabulary_of(formula));
  return forced(model, formula);
}

bool forces(const Model& model, World world, const IntFormula& formula) {
  require_world(model, world);
  return forced_worlds(model, formula)[world.index];
}

std::vector<bool> modal_extension(const Model& model, const ModalFormula& formula) {
  require_vocabulary(model, vocabulary_of(formula));
  return modal(model, formula);
}

bool modal_sat(const Model& model, World world, const ModalFormula& formula) {
  require_world(model, world);
  return modal_extension(model, formula)[world.index];
}

}  // namespace asimkit

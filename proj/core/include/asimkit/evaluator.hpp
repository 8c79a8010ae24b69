#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "asimkit/formula.hpp"
#include "asimkit/model.hpp"

namespace asimkit {

using Assignment = std::map<std::string, World>;

// Classical satisfaction with quantifiers ranging over the worlds of the
// model and = read as identity. Throws EvalError when a free variable is
// unassigned, an assigned world is outside the model, or the formula uses a
// letter outside model.vocab().
[[nodiscard]] bool fo_eval(const Model& model, const Assignment& assignment, const FOFormula& formula);

// Truth of a formula with exactly one free variable at a pointed model. The
// name of that variable does not matter. Throws EvalError otherwise.
[[nodiscard]] bool holds_at(const PointedModel& point, const FOFormula& formula);

// A formula with one free variable compiled once for repeated evaluation
// against many worlds and models.
class PointEvaluator {
 public:
  explicit PointEvaluator(const FOFormula& formula);
  ~PointEvaluator();
  PointEvaluator(PointEvaluator&&) noexcept;
  PointEvaluator& operator=(PointEvaluator&&) noexcept;

  [[nodiscard]] bool operator()(const Model& model, World world) const;
  [[nodiscard]] bool operator()(const PointedModel& point) const {
    return (*this)(point.model(), point.point());
  }
  // Truth at every world of the model.
  [[nodiscard]] std::vector<bool> extension(const Model& model) const;

 private:
  struct Program;
  std::unique_ptr<Program> program_;
};

// Kripke forcing with clauses mirroring the standard translation: false is
// never forced, p_n iff the world is in P_n, & and | pointwise, and i -> j iff
// every R-successor forcing i forces j. Throws EvalError for foreign worlds.
[[nodiscard]] bool forces(const Model& model, World world, const IntFormula& formula);
// The set of worlds forcing the formula, computed bottom-up.
[[nodiscard]] std::vector<bool> forced_worlds(const Model& model, const IntFormula& formula);

[[nodiscard]] bool modal_sat(const Model& model, World world, const ModalFormula& formula);
[[nodiscard]] std::vector<bool> modal_extension(const Model& model, const ModalFormula& formula);

}  // namespace asimkit

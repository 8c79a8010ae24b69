#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asimkit/formula.hpp"
#include "asimkit/vocabulary.hpp"

namespace asimkit {

// Position of a world inside its model's domain.
struct World {
  std::uint32_t index = 0;

  friend auto operator<=>(const World&, const World&) = default;
};

// Name-based description of a model, as read from a document.
struct ModelSpec {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> rel;
  std::map<int, std::vector<std::string>> val;
  Vocabulary vocab;
};

// Finite Sigma'-structure: a nonempty domain of named worlds, the
// interpretation of R, and interpretations of the unary letters in vocab.
// Letters of vocab missing from val are empty everywhere.
class Model {
 public:
  // Throws ModelError on empty domains, duplicate worlds, dangling
  // references, nonpositive letters, or valuations outside vocab.
  explicit Model(const ModelSpec& spec);

  // Index-based construction used by enumeration. adjacency is row-major
  // (size n*n); extension maps each letter of vocab to n flags.
  Model(std::vector<std::string> names, const std::vector<bool>& adjacency,
        const std::map<int, std::vector<bool>>& extension, Vocabulary vocab);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(World w) const { return names_.at(w.index); }
  [[nodiscard]] std::optional<World> find(std::string_view name) const;
  // Throws ModelError when the name is not a world of this model.
  [[nodiscard]] World at(std::string_view name) const;
  [[nodiscard]] bool contains(World w) const { return w.index < names_.size(); }

  [[nodiscard]] bool related(World from, World to) const {
    return adjacency_[from.index * names_.size() + to.index];
  }
  [[nodiscard]] std::span<const World> successors(World w) const { return successors_.at(w.index); }
  // False for letters outside vocab.
  [[nodiscard]] bool satisfies(int letter, World w) const;

  [[nodiscard]] const Vocabulary& vocab() const { return vocab_; }
  [[nodiscard]] std::vector<World> worlds() const;
  [[nodiscard]] std::vector<std::pair<World, World>> edges() const;
  [[nodiscard]] std::vector<World> extension(int letter) const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  void index_successors();

  std::vector<std::string> names_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<World>> successors_;
  std::map<int, std::vector<bool>> extension_;
  Vocabulary vocab_;
};

// A model together with a distinguished world. Models are shared, so a family
// of pointed models over the same structure costs one copy of the structure.
class PointedModel {
 public:
  // Throws ModelError when point is outside the model.
  PointedModel(std::shared_ptr<const Model> model, World point);
  PointedModel(std::shared_ptr<const Model> model, std::string_view point);

  [[nodiscard]] const Model& model() const { return *model_; }
  [[nodiscard]] const std::shared_ptr<const Model>& shared_model() const { return model_; }
  [[nodiscard]] World point() const { return point_; }
  [[nodiscard]] const std::string& point_name() const { return model_->name(point_); }

 private:
  std::shared_ptr<const Model> model_;
  World point_;
};

// Every world of every model, as pointed models, in model order then world order.
[[nodiscard]] std::vector<PointedModel> all_points(const std::vector<std::shared_ptr<const Model>>& models);

struct TransitivityWitness {
  World first;
  World middle;
  World last;
};

struct PersistenceWitness {
  int letter;
  World from;
  World to;
};

// Outcome of checking the frame and valuation conditions of intuitionistic
// models: R reflexive and transitive, every letter upward closed along R.
struct IntuitionisticReport {
  bool reflexive = true;
  std::vector<World> non_reflexive;
  bool transitive = true;
  std::vector<TransitivityWitness> transitivity_failures;
  // letter -> upward closed?
  std::map<int, bool> persistent;
  std::vector<PersistenceWitness> persistence_failures;

  [[nodiscard]] bool intuitionistic() const;
};

[[nodiscard]] IntuitionisticReport validate_intuitionistic(const Model& model);

// Int(sigma): reflexivity, transitivity, then one persistence sentence per
// letter in increasing order.
[[nodiscard]] std::vector<FOFormula> int_axioms(const Vocabulary& sigma);

}  // namespace asimkit

#include "asimkit/model.hpp"

#include <set>

#include "asimkit/error.hpp"

namespace asimkit {

Model::Model(const ModelSpec& spec) : names_(spec.worlds), vocab_(spec.vocab) {
  if (names_.empty()) throw ModelError("a model needs at least one world");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw ModelError("world names must be nonempty");
    if (!seen.insert(name).second) throw ModelError("duplicate world '" + name + "'");
  }
  const std::size_t n = names_.size();
  adjacency_.assign(n * n, false);
  for (const auto& [from, to] : spec.rel) {
    const World u = at(from);
    const World v = at(to);
    adjacency_[u.index * n + v.index] = true;
  }
  for (const auto& [letter, members] : spec.val) {
    if (letter < 1) throw ModelError("letter indices start at 1, got " + std::to_string(letter));
    if (!vocab_.contains(letter)) {
      throw ModelError("valuation for P" + std::to_string(letter) + " outside the vocabulary " + vocab_.to_string());
    }
    auto& flags = extension_[letter];
    flags.assign(n, false);
    for (const auto& name : members) flags[at(name).index] = true;
  }
  for (int letter : vocab_) extension_.try_emplace(letter, std::vector<bool>(n, false));
  index_successors();
}

Model::Model(std::vector<std::string> names, const std::vector<bool>& adjacency,
             const std::map<int, std::vector<bool>>& extension, Vocabulary vocab)
    : names_(std::move(names)), adjacency_(adjacency), vocab_(std::move(vocab)) {
  const std::size_t n = names_.size();
  if (n == 0) throw ModelError("a model needs at least one world");
  if (adjacency_.size() != n * n) throw ModelError("adjacency matrix does not match the domain size");
  for (const auto& [letter, flags] : extension) {
    if (!vocab_.contains(letter)) throw ModelError("valuation for P" + std::to_string(letter) + " outside the vocabulary");
    if (flags.size() != n) throw ModelError("valuation does not match the domain size");
    extension_[letter] = flags;
  }
  for (int letter : vocab_) extension_.try_emplace(letter, std::vector<bool>(n, false));
  index_successors();
}

void Model::index_successors() {
  const std::size_t n = names_.size();
  successors_.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (adjacency_[u * n + v]) successors_[u].push_back(World{static_cast<std::uint32_t>(v)});
    }
  }
}

std::optional<World> Model::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return World{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

World Model::at(std::string_view name) const {
  if (auto w = find(name)) return *w;
  throw ModelError("unknown world '" + std::string(name) + "'");
}

bool Model::satisfies(int letter, World w) const {
  auto it = extension_.find(letter);
  return it != extension_.end() && it->second[w.index];
}

std::vector<World> Model::worlds() const {
  std::vector<World> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(World{static_cast<std::uint32_t>(i)});
  return out;
}

std::vector<std::pair<World, World>> Model::edges() const {
  std::vector<std::pair<World, World>> out;
  for (World u : worlds()) {
    for (World v : successors(u)) out.emplace_back(u, v);
  }
  return out;
}

std::vector<World> Model::extension(int letter) const {
  std::vector<World> out;
  for (World w : worlds()) {
    if (satisfies(letter, w)) out.push_back(w);
  }
  return out;
}

bool operator==(const Model& a, const Model& b) {
  return a.names_ == b.names_ && a.adjacency_ == b.adjacency_ && a.extension_ == b.extension_ && a.vocab_ == b.vocab_;
}

PointedModel::PointedModel(std::shared_ptr<const Model> model, World point)
    : model_(std::move(model)), point_(point) {
  if (!model_) throw ModelError("pointed model without a model");
  if (!model_->contains(point_)) throw ModelError("point outside the model's domain");
}

PointedModel::PointedModel(std::shared_ptr<const Model> model, std::string_view point)
    : PointedModel(model, model ? model->at(point) : World{}) {}

std::vector<PointedModel> all_points(const std::vector<std::shared_ptr<const Model>>& models) {
  std::vector<PointedModel> out;
  for (const auto& m : models) {
    for (World w : m->worlds()) out.emplace_back(m, w);
  }
  return out;
}

bool IntuitionisticReport::intuitionistic() const {
  if (!reflexive || !transitive) return false;
  for (const auto& [letter, ok] : persistent) {
    if (!ok) return false;
  }
  return true;
}

IntuitionisticReport validate_intuitionistic(const Model& model) {
  IntuitionisticReport report;
  const auto worlds = model.worlds();
  for (World w : worlds) {
    if (!model.related(w, w)) report.non_reflexive.push_back(w);
  }
  report.reflexive = report.non_reflexive.empty();
  for (World u : worlds) {
    for (World v : model.successors(u)) {
      for (World w : model.successors(v)) {
        if (!model.related(u, w)) report.transitivity_failures.push_back({u, v, w});
      }
    }
  }
  report.transitive = report.transitivity_failures.empty();
  for (int letter : model.vocab()) {
    bool ok = true;
    for (auto [u, v] : model.edges()) {
      if (model.satisfies(letter, u) && !model.satisfies(letter, v)) {
        report.persistence_failures.push_back({letter, u, v});
        ok = false;
      }
    }
    report.persistent[letter] = ok;
  }
  return report;
}

std::vector<FOFormula> int_axioms(const Vocabulary& sigma) {
  using F = FOFormula;
  std::vector<FOFormula> out;
  out.push_back(F::forall("y", F::rel("y", "y")));
  out.push_back(F::forall(
      "y", F::forall("z", F::forall("w", F::imp(F::conj(F::rel("y", "z"), F::rel("z", "w")), F::rel("y", "w"))))));
  for (int letter : sigma) {
    out.push_back(F::forall(
        "y", F::forall("z", F::imp(F::conj(F::pred(letter, "y"), F::rel("y", "z")), F::pred(letter, "z")))));
  }
  return out;
}

}  // namespace asimkit

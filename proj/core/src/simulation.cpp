#include "asimkit/simulation.hpp"

#include <algorithm>
#include <sstream>

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

// Resolves which model plays alpha (source) and beta (target) for a direction.
struct Sides {
  const Model& left;
  const Model& right;

  [[nodiscard]] const Model& source(Direction d) const { return d == Direction::LeftToRight ? left : right; }
  [[nodiscard]] const Model& target(Direction d) const { return d == Direction::LeftToRight ? right : left; }
};

Vocabulary effective_sigma(const Model& left, const Model& right, const std::optional<Vocabulary>& sigma) {
  return sigma ? *sigma : left.vocab().united(right.vocab());
}

// First letter of sigma true at from (in source) and false at to (in target).
std::optional<int> atom_failure(const Model& source, World from, const Model& target, World to,
                                const Vocabulary& sigma) {
  for (int letter : sigma) {
    if (source.satisfies(letter, from) && !target.satisfies(letter, to)) return letter;
  }
  return std::nullopt;
}

// First R-successor of to (in target) that no R-successor of from answers in
// both orientations within the relation.
std::optional<World> unanswered_challenge(const Sides& sides, const DirectedRelation& rel, Direction dir, World from,
                                          World to) {
  const Model& source = sides.source(dir);
  const Model& target = sides.target(dir);
  for (World challenge : target.successors(to)) {
    const auto answers = source.successors(from);
    const bool answered = std::any_of(answers.begin(), answers.end(), [&](World answer) {
      return rel.contains(reversed(dir), challenge, answer) && rel.contains(dir, answer, challenge);
    });
    if (!answered) return challenge;
  }
  return std::nullopt;
}

DirectedRelation atom_respecting(const Model& left, const Model& right, const Vocabulary& sigma) {
  const Sides sides{left, right};
  DirectedRelation rel(left.size(), right.size());
  for (Direction dir : {Direction::LeftToRight, Direction::RightToLeft}) {
    const Model& source = sides.source(dir);
    const Model& target = sides.target(dir);
    for (World from : source.worlds()) {
      for (World to : target.worlds()) {
        if (!atom_failure(source, from, target, to, sigma)) rel.insert(dir, from, to);
      }
    }
  }
  return rel;
}

void require_fit(const DirectedRelation& rel, const Model& left, const Model& right) {
  if (rel.left_size() != left.size() || rel.right_size() != right.size()) {
    throw ModelError("relation does not fit the two models");
  }
}

std::string sequence(const std::vector<World>& worlds, const Model& model) {
  std::string out = "(";
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (i) out += ",";
    out += model.name(worlds[i]);
  }
  return out + ")";
}

Violation violation(ViolationKind kind, Direction dir, std::vector<World> from, std::vector<World> to,
                    std::optional<World> successor = std::nullopt, std::optional<int> letter = std::nullopt) {
  return Violation{kind, dir, std::move(from), std::move(to), successor, letter};
}

void require_small(const PointedModel& left, const PointedModel& right, std::size_t k) {
  if (left.model().size() > kBruteForceMaxWorlds || right.model().size() > kBruteForceMaxWorlds) {
    throw BudgetExceeded("brute-force search is limited to " + std::to_string(kBruteForceMaxWorlds) +
                         " worlds per model");
  }
  if (k > kBruteForceMaxRounds) {
    throw BudgetExceeded("brute-force search is limited to k <= " + std::to_string(kBruteForceMaxRounds));
  }
}

std::vector<World> extended(std::vector<World> seq, World w) {
  seq.push_back(w);
  return seq;
}

}  // namespace

DirectedRelation::DirectedRelation(std::size_t left_size, std::size_t right_size)
    : left_size_(left_size), right_size_(right_size), bits_(2 * left_size * right_size, false) {}

std::size_t DirectedRelation::slot(Direction dir, World from, World to) const {
  if (dir == Direction::LeftToRight) return from.index * right_size_ + to.index;
  return left_size_ * right_size_ + from.index * left_size_ + to.index;
}

void DirectedRelation::check_bounds(Direction dir, World from, World to) const {
  const std::size_t from_size = dir == Direction::LeftToRight ? left_size_ : right_size_;
  const std::size_t to_size = dir == Direction::LeftToRight ? right_size_ : left_size_;
  if (from.index >= from_size || to.index >= to_size) throw ModelError("relation entry outside the model domains");
}

bool DirectedRelation::contains(Direction dir, World from, World to) const {
  const std::size_t from_size = dir == Direction::LeftToRight ? left_size_ : right_size_;
  const std::size_t to_size = dir == Direction::LeftToRight ? right_size_ : left_size_;
  if (from.index >= from_size || to.index >= to_size) return false;
  return bits_[slot(dir, from, to)];
}

void DirectedRelation::insert(Direction dir, World from, World to) {
  check_bounds(dir, from, to);
  bits_[slot(dir, from, to)] = true;
}

void DirectedRelation::erase(Direction dir, World from, World to) {
  check_bounds(dir, from, to);
  bits_[slot(dir, from, to)] = false;
}

std::size_t DirectedRelation::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<DirectedPair> DirectedRelation::pairs() const {
  std::vector<DirectedPair> out;
  for (std::uint32_t from = 0; from < left_size_; ++from) {
    for (std::uint32_t to = 0; to < right_size_; ++to) {
      if (contains(Direction::LeftToRight, World{from}, World{to})) {
        out.push_back({Direction::LeftToRight, World{from}, World{to}});
      }
    }
  }
  for (std::uint32_t from = 0; from < right_size_; ++from) {
    for (std::uint32_t to = 0; to < left_size_; ++to) {
      if (contains(Direction::RightToLeft, World{from}, World{to})) {
        out.push_back({Direction::RightToLeft, World{from}, World{to}});
      }
    }
  }
  return out;
}

bool DirectedRelation::subset_of(const DirectedRelation& other) const {
  for (const auto& p : pairs()) {
    if (!other.contains(p)) return false;
  }
  return true;
}

void TupleRelation::insert(TuplePair pair) {
  if (pair.from.empty() || pair.from.size() != pair.to.size()) {
    throw PreconditionError("tuple pairs need nonempty sequences of equal length");
  }
  pairs_.insert(std::move(pair));
}

WorldRelation::WorldRelation(std::size_t left_size, std::size_t right_size)
    : left_size_(left_size), right_size_(right_size), bits_(left_size * right_size, false) {}

bool WorldRelation::contains(World left, World right) const {
  if (left.index >= left_size_ || right.index >= right_size_) return false;
  return bits_[left.index * right_size_ + right.index];
}

void WorldRelation::insert(World left, World right) {
  if (left.index >= left_size_ || right.index >= right_size_) {
    throw ModelError("relation entry outside the model domains");
  }
  bits_[left.index * right_size_ + right.index] = true;
}

void WorldRelation::erase(World left, World right) {
  if (left.index >= left_size_ || right.index >= right_size_) {
    throw ModelError("relation entry outside the model domains");
  }
  bits_[left.index * right_size_ + right.index] = false;
}

std::size_t WorldRelation::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::pair<World, World>> WorldRelation::pairs() const {
  std::vector<std::pair<World, World>> out;
  for (std::uint32_t l = 0; l < left_size_; ++l) {
    for (std::uint32_t r = 0; r < right_size_; ++r) {
      if (contains(World{l}, World{r})) out.emplace_back(World{l}, World{r});
    }
  }
  return out;
}

WorldRelation WorldRelation::identity(std::size_t size) {
  WorldRelation out(size, size);
  for (std::uint32_t w = 0; w < size; ++w) out.insert(World{w}, World{w});
  return out;
}

bool StratifiedFamily::descending() const {
  for (std::size_t j = 1; j < layers.size(); ++j) {
    if (!layers[j].subset_of(layers[j - 1])) return false;
  }
  return true;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::RootMissing: return "RootMissing";
    case ViolationKind::AtomForward: return "AtomForward";
    case ViolationKind::StepBack: return "StepBack";
    case ViolationKind::StepForth: return "StepForth";
  }
  return "unknown";
}

std::string describe(const Violation& v, const Model& left, const Model& right) {
  const Sides sides{left, right};
  const Model& source = sides.source(v.dir);
  const Model& target = sides.target(v.dir);
  std::ostringstream out;
  out << to_string(v.kind);
  if (v.from.empty()) return out.str();
  out << " at " << (v.dir == Direction::LeftToRight ? "LR " : "RL ");
  if (v.from.size() == 1) {
    out << source.name(v.from.front()) << " -> " << target.name(v.to.front());
  } else {
    out << sequence(v.from, source) << " -> " << sequence(v.to, target);
  }
  if (v.letter) out << ": P" << *v.letter << " is not carried over";
  if (v.successor) {
    if (v.kind == ViolationKind::StepForth) {
      out << ": successor " << source.name(*v.successor) << " of " << source.name(v.from.back())
          << " has no matching successor";
    } else {
      out << ": successor " << target.name(*v.successor) << " of " << target.name(v.to.back()) << " is not answered";
    }
  }
  return out.str();
}

CheckResult check_asimulation(const PointedModel& left, const PointedModel& right, const DirectedRelation& relation,
                              const std::optional<Vocabulary>& sigma) {
  const Sides sides{left.model(), right.model()};
  require_fit(relation, sides.left, sides.right);
  const Vocabulary letters = effective_sigma(sides.left, sides.right, sigma);
  if (!relation.contains(Direction::LeftToRight, left.point(), right.point())) {
    return CheckResult::fail(violation(ViolationKind::RootMissing, Direction::LeftToRight, {left.point()}, {right.point()}));
  }
  for (const auto& [dir, from, to] : relation.pairs()) {
    if (auto letter = atom_failure(sides.source(dir), from, sides.target(dir), to, letters)) {
      return CheckResult::fail(violation(ViolationKind::AtomForward, dir, {from}, {to}, std::nullopt, letter));
    }
    if (auto challenge = unanswered_challenge(sides, relation, dir, from, to)) {
      return CheckResult::fail(violation(ViolationKind::StepBack, dir, {from}, {to}, challenge));
    }
  }
  return CheckResult::pass();
}

DirectedRelation greatest_asimulation(const Model& left, const Model& right, const std::optional<Vocabulary>& sigma) {
  const Sides sides{left, right};
  DirectedRelation rel = atom_respecting(left, right, effective_sigma(left, right, sigma));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [dir, from, to] : rel.pairs()) {
      if (unanswered_challenge(sides, rel, dir, from, to)) {
        rel.erase(dir, from, to);
        changed = true;
      }
    }
  }
  return rel;
}

bool exists_asimulation(const PointedModel& left, const PointedModel& right, const std::optional<Vocabulary>& sigma) {
  return greatest_asimulation(left.model(), right.model(), sigma)
      .contains(Direction::LeftToRight, left.point(), right.point());
}

StratifiedFamily stratified_k_asim(const Model& left, const Model& right, std::size_t k,
                                   const std::optional<Vocabulary>& sigma) {
  const Sides sides{left, right};
  StratifiedFamily family;
  family.layers.push_back(atom_respecting(left, right, effective_sigma(left, right, sigma)));
  const auto base = family.layers.front().pairs();
  for (std::size_t j = 0; j < k; ++j) {
    const DirectedRelation& previous = family.layers.back();
    DirectedRelation next(left.size(), right.size());
    for (const auto& [dir, from, to] : base) {
      if (!unanswered_challenge(sides, previous, dir, from, to)) next.insert(dir, from, to);
    }
    const bool stable = next == previous;
    family.layers.push_back(std::move(next));
    if (stable) {
      // Later layers repeat; fill them without recomputation.
      while (family.layers.size() < k + 1) family.layers.push_back(family.layers.back());
      break;
    }
  }
  return family;
}

bool exists_k_asimulation(const PointedModel& left, const PointedModel& right, std::size_t k,
                          const std::optional<Vocabulary>& sigma) {
  return stratified_k_asim(left.model(), right.model(), k, sigma)
      .layers.back()
      .contains(Direction::LeftToRight, left.point(), right.point());
}

std::optional<TupleRelation> k_asimulation_witness(const PointedModel& left, const PointedModel& right, std::size_t k,
                                                   const std::optional<Vocabulary>& sigma) {
  const Sides sides{left.model(), right.model()};
  const StratifiedFamily family = stratified_k_asim(sides.left, sides.right, k, sigma);
  if (!family.layers.back().contains(Direction::LeftToRight, left.point(), right.point())) return std::nullopt;

  TupleRelation out;
  std::vector<TuplePair> pending{{Direction::LeftToRight, {left.point()}, {right.point()}}};
  while (!pending.empty()) {
    TuplePair pair = std::move(pending.back());
    pending.pop_back();
    if (out.contains(pair)) continue;
    out.insert(pair);
    const std::size_t m = pair.from.size() - 1;
    if (m >= k) continue;
    const DirectedRelation& layer = family.layers[k - m - 1];
    const World from = pair.from.back();
    const World to = pair.to.back();
    for (World challenge : sides.target(pair.dir).successors(to)) {
      for (World answer : sides.source(pair.dir).successors(from)) {
        if (layer.contains(reversed(pair.dir), challenge, answer) && layer.contains(pair.dir, answer, challenge)) {
          pending.push_back({reversed(pair.dir), extended(pair.to, challenge), extended(pair.from, answer)});
          pending.push_back({pair.dir, extended(pair.from, answer), extended(pair.to, challenge)});
          break;
        }
      }
    }
  }
  return out;
}

CheckResult check_k_asimulation_tuples(const PointedModel& left, const PointedModel& right,
                                       const TupleRelation& relation, std::size_t k,
                                       const std::optional<Vocabulary>& sigma) {
  const Sides sides{left.model(), right.model()};
  const Vocabulary letters = effective_sigma(sides.left, sides.right, sigma);
  for (const auto& pair : relation) {
    const Model& source = sides.source(pair.dir);
    const Model& target = sides.target(pair.dir);
    for (World w : pair.from) {
      if (!source.contains(w)) throw ModelError("tuple component outside the source model");
    }
    for (World w : pair.to) {
      if (!target.contains(w)) throw ModelError("tuple component outside the target model");
    }
  }
  if (!relation.contains({Direction::LeftToRight, {left.point()}, {right.point()}})) {
    return CheckResult::fail(violation(ViolationKind::RootMissing, Direction::LeftToRight, {left.point()}, {right.point()}));
  }
  for (const auto& pair : relation) {
    const Model& source = sides.source(pair.dir);
    const Model& target = sides.target(pair.dir);
    const World from = pair.from.back();
    const World to = pair.to.back();
    if (auto letter = atom_failure(source, from, target, to, letters)) {
      return CheckResult::fail(violation(ViolationKind::AtomForward, pair.dir, pair.from, pair.to, std::nullopt, letter));
    }
    if (pair.from.size() - 1 >= k) continue;
    for (World challenge : target.successors(to)) {
      const auto answers = source.successors(from);
      const bool answered = std::any_of(answers.begin(), answers.end(), [&](World answer) {
        return relation.contains({reversed(pair.dir), extended(pair.to, challenge), extended(pair.from, answer)}) &&
               relation.contains({pair.dir, extended(pair.from, answer), extended(pair.to, challenge)});
      });
      if (!answered) return CheckResult::fail(violation(ViolationKind::StepBack, pair.dir, pair.from, pair.to, challenge));
    }
  }
  return CheckResult::pass();
}

namespace {

// Closure construction for the tuple-form definition: a pair is justified when
// its atoms hold and, while it is shorter than k + 1, every challenge has some
// answer whose two extensions are themselves justified. Answers are tried in
// order on a scratch copy that is kept only on success.
class TupleSearch {
 public:
  TupleSearch(const Model& left, const Model& right, std::size_t k, Vocabulary sigma)
      : sides_{left, right}, k_(k), sigma_(std::move(sigma)) {}

  bool justify(const TuplePair& pair, TupleRelation& rel) const {
    if (rel.contains(pair)) return true;
    const Model& source = sides_.source(pair.dir);
    const Model& target = sides_.target(pair.dir);
    if (atom_failure(source, pair.from.back(), target, pair.to.back(), sigma_)) return false;
    TupleRelation grown = rel;
    grown.insert(pair);
    if (pair.from.size() - 1 < k_) {
      for (World challenge : target.successors(pair.to.back())) {
        bool answered = false;
        for (World answer : source.successors(pair.from.back())) {
          TupleRelation trial = grown;
          const TuplePair back{reversed(pair.dir), extended(pair.to, challenge), extended(pair.from, answer)};
          const TuplePair forth{pair.dir, extended(pair.from, answer), extended(pair.to, challenge)};
          if (justify(back, trial) && justify(forth, trial)) {
            grown = std::move(trial);
            answered = true;
            break;
          }
        }
        if (!answered) return false;
      }
    }
    rel = std::move(grown);
    return true;
  }

 private:
  Sides sides_;
  std::size_t k_;
  Vocabulary sigma_;
};

}  // namespace

std::optional<TupleRelation> brute_force_k_asim_witness(const PointedModel& left, const PointedModel& right,
                                                        std::size_t k, const std::optional<Vocabulary>& sigma) {
  require_small(left, right, k);
  const TupleSearch search(left.model(), right.model(), k, effective_sigma(left.model(), right.model(), sigma));
  TupleRelation rel;
  if (!search.justify({Direction::LeftToRight, {left.point()}, {right.point()}}, rel)) return std::nullopt;
  if (!check_k_asimulation_tuples(left, right, rel, k, sigma).ok()) return std::nullopt;
  return rel;
}

bool brute_force_k_asim(const PointedModel& left, const PointedModel& right, std::size_t k,
                        const std::optional<Vocabulary>& sigma) {
  return brute_force_k_asim_witness(left, right, k, sigma).has_value();
}

namespace {

std::optional<int> atom_mismatch(const Model& left, World l, const Model& right, World r, const Vocabulary& sigma) {
  for (int letter : sigma) {
    if (left.satisfies(letter, l) != right.satisfies(letter, r)) return letter;
  }
  return std::nullopt;
}

std::optional<World> zig_failure(const Model& left, const Model& right, const WorldRelation& rel, World l, World r) {
  for (World next : left.successors(l)) {
    const auto options = right.successors(r);
    if (std::none_of(options.begin(), options.end(), [&](World o) { return rel.contains(next, o); })) return next;
  }
  return std::nullopt;
}

std::optional<World> zag_failure(const Model& left, const Model& right, const WorldRelation& rel, World l, World r) {
  for (World next : right.successors(r)) {
    const auto options = left.successors(l);
    if (std::none_of(options.begin(), options.end(), [&](World o) { return rel.contains(o, next); })) return next;
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_bisimulation(const PointedModel& left, const PointedModel& right, const WorldRelation& relation,
                               const std::optional<Vocabulary>& sigma) {
  const Model& lm = left.model();
  const Model& rm = right.model();
  if (relation.left_size() != lm.size() || relation.right_size() != rm.size()) {
    throw ModelError("relation does not fit the two models");
  }
  const Vocabulary letters = effective_sigma(lm, rm, sigma);
  if (!relation.contains(left.point(), right.point())) {
    return CheckResult::fail(violation(ViolationKind::RootMissing, Direction::LeftToRight, {left.point()}, {right.point()}));
  }
  for (auto [l, r] : relation.pairs()) {
    if (auto letter = atom_mismatch(lm, l, rm, r, letters)) {
      // Orient the witness from the side where the letter holds.
      const Direction dir = lm.satisfies(*letter, l) ? Direction::LeftToRight : Direction::RightToLeft;
      Violation v = violation(ViolationKind::AtomForward, dir, {l}, {r}, std::nullopt, letter);
      if (dir == Direction::RightToLeft) std::swap(v.from, v.to);
      return CheckResult::fail(std::move(v));
    }
    if (auto next = zig_failure(lm, rm, relation, l, r)) {
      return CheckResult::fail(violation(ViolationKind::StepForth, Direction::LeftToRight, {l}, {r}, next));
    }
    if (auto next = zag_failure(lm, rm, relation, l, r)) {
      return CheckResult::fail(violation(ViolationKind::StepBack, Direction::LeftToRight, {l}, {r}, next));
    }
  }
  return CheckResult::pass();
}

WorldRelation greatest_bisimulation(const Model& left, const Model& right, const std::optional<Vocabulary>& sigma) {
  const Vocabulary letters = effective_sigma(left, right, sigma);
  WorldRelation rel(left.size(), right.size());
  for (World l : left.worlds()) {
    for (World r : right.worlds()) {
      if (!atom_mismatch(left, l, right, r, letters)) rel.insert(l, r);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [l, r] : rel.pairs()) {
      if (zig_failure(left, right, rel, l, r) || zag_failure(left, right, rel, l, r)) {
        rel.erase(l, r);
        changed = true;
      }
    }
  }
  return rel;
}

namespace {

// Every sequence of the given length over a domain of the given size, in
// lexicographic order.
std::vector<std::vector<World>> sequences(std::size_t domain, std::size_t length) {
  std::vector<std::vector<World>> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::vector<World>> next;
    for (const auto& prefix : out) {
      for (std::uint32_t w = 0; w < domain; ++w) next.push_back(extended(prefix, World{w}));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TupleRelation lift_asimulation(const DirectedRelation& relation, std::size_t max_len) {
  TupleRelation out;
  const auto pairs = relation.pairs();
  for (std::size_t length = 1; length <= max_len; ++length) {
    const auto left_prefixes = sequences(relation.left_size(), length - 1);
    const auto right_prefixes = sequences(relation.right_size(), length - 1);
    for (const auto& [dir, from, to] : pairs) {
      const auto& from_prefixes = dir == Direction::LeftToRight ? left_prefixes : right_prefixes;
      const auto& to_prefixes = dir == Direction::LeftToRight ? right_prefixes : left_prefixes;
      for (const auto& fp : from_prefixes) {
        for (const auto& tp : to_prefixes) out.insert({dir, extended(fp, from), extended(tp, to)});
      }
    }
  }
  return out;
}

DirectedRelation bisim_to_asim(const WorldRelation& relation) {
  DirectedRelation out(relation.left_size(), relation.right_size());
  for (auto [l, r] : relation.pairs()) {
    out.insert(Direction::LeftToRight, l, r);
    out.insert(Direction::RightToLeft, r, l);
  }
  return out;
}

}  // namespace asimkit

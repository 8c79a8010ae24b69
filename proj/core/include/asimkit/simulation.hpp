#pragma once

// Asimulations, k-asimulations and bisimulations between two finite models.
//
// An asimulation relates worlds across two models in both directions, so
// every pair carries an orientation tag. For a pair (a', b') oriented from
// model alpha to model beta:
//
//   atoms      every letter of sigma true at a' in alpha is true at b' in beta;
//   back-step  for every R-successor b'' of b' in beta there is an R-successor
//              a'' of a' in alpha with (b'', a'') and (a'', b'') both in the
//              relation, in their respective orientations.
//
// A k-asimulation is the tuple-indexed variant: pairs of equal-length world
// sequences, the back-step only owed while the sequences have length <= k,
// and the answering pairs are the one-step extensions of the sequences.
//
// Unless given explicitly, sigma is the union of the two models' vocabularies.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "asimkit/model.hpp"
#include "asimkit/vocabulary.hpp"

namespace asimkit {

enum class Direction : unsigned char { LeftToRight, RightToLeft };

[[nodiscard]] constexpr Direction reversed(Direction d) {
  return d == Direction::LeftToRight ? Direction::RightToLeft : Direction::LeftToRight;
}

struct DirectedPair {
  Direction dir;
  World from;
  World to;

  friend auto operator<=>(const DirectedPair&, const DirectedPair&) = default;
};

// Direction-tagged relation between the worlds of a left and a right model.
// LeftToRight pairs go left world -> right world, RightToLeft the reverse.
class DirectedRelation {
 public:
  DirectedRelation(std::size_t left_size, std::size_t right_size);

  [[nodiscard]] std::size_t left_size() const { return left_size_; }
  [[nodiscard]] std::size_t right_size() const { return right_size_; }

  [[nodiscard]] bool contains(Direction dir, World from, World to) const;
  [[nodiscard]] bool contains(const DirectedPair& p) const { return contains(p.dir, p.from, p.to); }
  // Both throw ModelError for worlds outside the respective domains.
  void insert(Direction dir, World from, World to);
  void erase(Direction dir, World from, World to);
  void insert(const DirectedPair& p) { insert(p.dir, p.from, p.to); }

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool empty() const { return size() == 0; }
  // LeftToRight first, then by source, then by target.
  [[nodiscard]] std::vector<DirectedPair> pairs() const;
  [[nodiscard]] bool subset_of(const DirectedRelation& other) const;

  friend bool operator==(const DirectedRelation&, const DirectedRelation&) = default;

 private:
  [[nodiscard]] std::size_t slot(Direction dir, World from, World to) const;
  void check_bounds(Direction dir, World from, World to) const;

  std::size_t left_size_;
  std::size_t right_size_;
  std::vector<bool> bits_;  // left*right LeftToRight slots, then right*left
};

struct TuplePair {
  Direction dir;
  std::vector<World> from;
  std::vector<World> to;

  friend auto operator<=>(const TuplePair&, const TuplePair&) = default;
};

// Direction-tagged relation between equal-length, nonempty world sequences.
class TupleRelation {
 public:
  using const_iterator = std::set<TuplePair>::const_iterator;

  // Throws PreconditionError for empty or length-mismatched sequences.
  void insert(TuplePair pair);
  [[nodiscard]] bool contains(const TuplePair& pair) const { return pairs_.count(pair) != 0; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] bool empty() const { return pairs_.empty(); }
  [[nodiscard]] const_iterator begin() const { return pairs_.begin(); }
  [[nodiscard]] const_iterator end() const { return pairs_.end(); }

  friend bool operator==(const TupleRelation&, const TupleRelation&) = default;

 private:
  std::set<TuplePair> pairs_;
};

// Plain relation between left worlds and right worlds (bisimulations).
class WorldRelation {
 public:
  WorldRelation(std::size_t left_size, std::size_t right_size);

  [[nodiscard]] std::size_t left_size() const { return left_size_; }
  [[nodiscard]] std::size_t right_size() const { return right_size_; }
  [[nodiscard]] bool contains(World left, World right) const;
  // Throws ModelError for worlds outside the domains.
  void insert(World left, World right);
  void erase(World left, World right);
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::vector<std::pair<World, World>> pairs() const;

  [[nodiscard]] static WorldRelation identity(std::size_t size);

  friend bool operator==(const WorldRelation&, const WorldRelation&) = default;

 private:
  std::size_t left_size_;
  std::size_t right_size_;
  std::vector<bool> bits_;
};

// Layers S_0 ... S_k. S_0 holds every atom-respecting pair; S_{j+1} keeps the
// pairs of S_0 whose every back-step challenge is answered inside S_j.
struct StratifiedFamily {
  std::vector<DirectedRelation> layers;

  [[nodiscard]] std::size_t rounds() const { return layers.empty() ? 0 : layers.size() - 1; }
  [[nodiscard]] bool descending() const;
};

enum class ViolationKind : unsigned char {
  RootMissing,
  AtomForward,  // for bisimulations: the atom biconditional
  StepBack,     // back-step, or the bisimulation "zag" clause
  StepForth,    // the bisimulation "zig" clause
};

[[nodiscard]] std::string to_string(ViolationKind kind);

// The offending pair; sequences have length 1 for plain relations. successor
// is the unanswered R-successor (in the target model for StepBack, in the
// source model for StepForth); letter is set for AtomForward.
struct Violation {
  ViolationKind kind;
  Direction dir = Direction::LeftToRight;
  std::vector<World> from;
  std::vector<World> to;
  std::optional<World> successor;
  std::optional<int> letter;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckResult {
  std::optional<Violation> violation;

  [[nodiscard]] bool ok() const { return !violation.has_value(); }
  [[nodiscard]] static CheckResult pass() { return {}; }
  [[nodiscard]] static CheckResult fail(Violation v) { return {std::move(v)}; }
};

// Human-readable rendering of a violation using world names.
[[nodiscard]] std::string describe(const Violation& v, const Model& left, const Model& right);

// Checks the root pair and both conditions for every pair, in sorted pair
// order. Throws ModelError when the relation does not fit the two models.
[[nodiscard]] CheckResult check_asimulation(const PointedModel& left, const PointedModel& right,
                                            const DirectedRelation& relation,
                                            const std::optional<Vocabulary>& sigma = std::nullopt);

// Largest relation closed under atoms and back-step, by iterated removal from
// the atom-respecting pairs.
[[nodiscard]] DirectedRelation greatest_asimulation(const Model& left, const Model& right,
                                                    const std::optional<Vocabulary>& sigma = std::nullopt);

[[nodiscard]] bool exists_asimulation(const PointedModel& left, const PointedModel& right,
                                      const std::optional<Vocabulary>& sigma = std::nullopt);

[[nodiscard]] StratifiedFamily stratified_k_asim(const Model& left, const Model& right, std::size_t k,
                                                 const std::optional<Vocabulary>& sigma = std::nullopt);

// Root membership in S_k.
[[nodiscard]] bool exists_k_asimulation(const PointedModel& left, const PointedModel& right, std::size_t k,
                                        const std::optional<Vocabulary>& sigma = std::nullopt);

// Tuple-form witness read off the stratified family: the root at depth 0 and,
// for every pair at depth m < k and every challenge, one answer drawn from
// S_{k-m-1} in both orientations. Absent when no k-asimulation exists.
[[nodiscard]] std::optional<TupleRelation> k_asimulation_witness(
    const PointedModel& left, const PointedModel& right, std::size_t k,
    const std::optional<Vocabulary>& sigma = std::nullopt);

// Checks the tuple-form conditions verbatim: the singleton root pair, atoms on
// the last coordinates, and for pairs of length m + 1 with m < k the back-step
// with both one-step extensions present. Throws ModelError for components
// outside their domains.
[[nodiscard]] CheckResult check_k_asimulation_tuples(const PointedModel& left, const PointedModel& right,
                                                     const TupleRelation& relation, std::size_t k,
                                                     const std::optional<Vocabulary>& sigma = std::nullopt);

inline constexpr std::size_t kBruteForceMaxWorlds = 3;
inline constexpr std::size_t kBruteForceMaxRounds = 2;

// Independent oracle for exists_k_asimulation: grows a tuple relation from the
// root by exhaustive choice of answers, without the stratified layers, then
// confirms it with check_k_asimulation_tuples. Throws BudgetExceeded beyond
// kBruteForceMaxWorlds worlds per side or kBruteForceMaxRounds rounds.
[[nodiscard]] std::optional<TupleRelation> brute_force_k_asim_witness(
    const PointedModel& left, const PointedModel& right, std::size_t k,
    const std::optional<Vocabulary>& sigma = std::nullopt);
[[nodiscard]] bool brute_force_k_asim(const PointedModel& left, const PointedModel& right, std::size_t k,
                                      const std::optional<Vocabulary>& sigma = std::nullopt);

// Root pair, atom biconditional, zig and zag.
[[nodiscard]] CheckResult check_bisimulation(const PointedModel& left, const PointedModel& right,
                                             const WorldRelation& relation,
                                             const std::optional<Vocabulary>& sigma = std::nullopt);

[[nodiscard]] WorldRelation greatest_bisimulation(const Model& left, const Model& right,
                                                  const std::optional<Vocabulary>& sigma = std::nullopt);

// Every directed pair of sequences of length <= max_len whose last
// coordinates stand in the relation; prefixes range over the full domains.
[[nodiscard]] TupleRelation lift_asimulation(const DirectedRelation& relation, std::size_t max_len);

// E as LeftToRight pairs together with its converse as RightToLeft pairs.
[[nodiscard]] DirectedRelation bisim_to_asim(const WorldRelation& relation);

}  // namespace asimkit

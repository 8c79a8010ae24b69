#pragma once

// Finite-scale versions of the invariance/definability machinery. Everything
// here is relative to explicit finite families of pointed models: semantic
// equivalence of intuitionistic formulas is approximated by agreement of
// truth signatures over a probe family.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asimkit/formula.hpp"
#include "asimkit/model.hpp"
#include "asimkit/simulation.hpp"

namespace asimkit {

// Fixed-length bit pattern, one bit per member of a family.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::size_t bits);
  explicit Signature(const std::vector<bool>& bits);

  [[nodiscard]] std::size_t size() const { return bits_; }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  [[nodiscard]] bool all() const;
  [[nodiscard]] bool none() const;
  [[nodiscard]] bool subset_of(const Signature& other) const;

  friend Signature operator&(const Signature& a, const Signature& b);
  friend Signature operator|(const Signature& a, const Signature& b);
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RepertoireEntry {
  IntFormula representative;
  std::size_t depth;
  Signature signature;  // over the probe family
  Signature extent;     // over every world of every probe model
};

// One representative intuitionistic formula per truth signature over the
// probe, for formulas over sigma of implication depth <= depth.
struct Repertoire {
  Vocabulary sigma;
  std::size_t depth = 0;
  std::vector<PointedModel> probe;
  std::vector<RepertoireEntry> entries;
  // False when the generation budget ran out; entries are then partial.
  bool complete = true;
  std::size_t generated = 0;
};

// Generates formulas level by level: at depth 0 false and the letters of
// sigma, then at each depth the implications between earlier
// representatives; after each level the repertoire is closed under & and |.
// Within one round candidates are ordered by size, then structurally, and
// the first formula with a new signature represents its class. budget bounds
// the number of candidate formulas built. Throws PreconditionError for an
// empty probe.
[[nodiscard]] Repertoire enumerate_int_formulas(const Vocabulary& sigma, std::size_t depth,
                                                std::vector<PointedModel> probe,
                                                std::size_t budget = 1'000'000);

// Representatives of depth <= k whose translation holds at the point, in
// repertoire order. Throws PreconditionError when the repertoire was built
// over a different vocabulary or to a smaller depth.
[[nodiscard]] std::vector<IntFormula> theory_at(const PointedModel& point, const Vocabulary& sigma,
                                                std::size_t k, const Repertoire& repertoire);

// theory_at(source) is contained in theory_at(target).
[[nodiscard]] bool leq_k(const PointedModel& source, const PointedModel& target, const Vocabulary& sigma,
                         std::size_t k, const Repertoire& repertoire);

struct BoundedComparison {
  bool holds;
  // The comparison only covers formulas up to this implication depth.
  std::size_t depth_bound;
};

[[nodiscard]] BoundedComparison leq_sigma(const PointedModel& source, const PointedModel& target,
                                          const Vocabulary& sigma, std::size_t depth_bound,
                                          const Repertoire& repertoire);

struct ScanMode {
  enum class Kind : unsigned char { Asim, KAsim, Bisim, IntAsim };
  Kind kind = Kind::Asim;
  std::size_t k = 0;

  [[nodiscard]] static ScanMode asim() { return {Kind::Asim, 0}; }
  [[nodiscard]] static ScanMode kasim(std::size_t k) { return {Kind::KAsim, k}; }
  [[nodiscard]] static ScanMode bisim() { return {Kind::Bisim, 0}; }
  [[nodiscard]] static ScanMode int_asim() { return {Kind::IntAsim, 0}; }
  // "asim", "kasim:K", "bisim" or "int"; throws PreconditionError otherwise.
  [[nodiscard]] static ScanMode parse(const std::string& text);
};

// Asim/IntAsim: the greatest asimulation between the two models.
// KAsim: a tuple-form k-asimulation. Bisim: the greatest bisimulation.
using RelationEvidence = std::variant<DirectedRelation, TupleRelation, WorldRelation>;

struct Counterexample {
  PointedModel source;  // the formula holds here
  PointedModel target;  // and fails here
  RelationEvidence evidence;
};

struct Verdict {
  std::optional<Counterexample> counterexample;

  [[nodiscard]] bool pass() const { return !counterexample.has_value(); }
};

// Looks for an ordered pair (source, target) of family members related by the
// mode's relation with the formula true at the source and false at the
// target. Pairs are scanned source-major in family order; the first hit is
// returned. IntAsim first drops members whose model is not intuitionistic.
// Throws PreconditionError for an empty family and EvalError when the
// formula does not have one free variable or uses letters a member lacks.
[[nodiscard]] Verdict invariance_scan(const FOFormula& formula, const std::vector<PointedModel>& family,
                                      ScanMode mode);

// Representatives of depth <= k over the formula's own letters that hold at
// the point; st(false -> false) when there are none.
[[nodiscard]] std::vector<IntFormula> complete_conjuncts(const FOFormula& formula, const PointedModel& point,
                                                         std::size_t k, const Repertoire& repertoire);

// Conjunction of the translations of complete_conjuncts. Throws
// PreconditionError when the formula fails at the point, k == 0, or the
// repertoire does not cover the formula's letters to depth k.
[[nodiscard]] FOFormula complete_conjunction(const FOFormula& formula, const PointedModel& point, std::size_t k,
                                             const Repertoire& repertoire);

// Searches for an intuitionistic j with holds_at(P, formula) iff
// holds_at(P, st(j, x)) on every member P of the family. Candidates are
// disjunctions of complete conjunctions, one per member satisfying the
// formula; a single representative with the right truth pattern is preferred
// when one exists. Absent exactly when no such disjunction over the
// repertoire works on the family. With intuitionistic_only, only members with
// intuitionistic models are considered.
[[nodiscard]] std::optional<IntFormula> synthesize(const FOFormula& formula, std::size_t k,
                                                   const std::vector<PointedModel>& family,
                                                   const Repertoire& repertoire, bool intuitionistic_only = false);

}  // namespace asimkit

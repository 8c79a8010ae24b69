#include "asimkit/invariance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "asimkit/error.hpp"
#include "asimkit/evaluator.hpp"
#include "asimkit/translation.hpp"

namespace asimkit {

Signature::Signature(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

Signature::Signature(const std::vector<bool>& bits) : Signature(bits.size()) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) set(i);
  }
}

void Signature::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

bool Signature::all() const {
  for (std::size_t i = 0; i < bits_; ++i) {
    if (!test(i)) return false;
  }
  return true;
}

bool Signature::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Signature::subset_of(const Signature& other) const {
  if (bits_ != other.bits_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Signature operator&(const Signature& a, const Signature& b) {
  if (a.bits_ != b.bits_) throw PreconditionError("signature length mismatch");
  Signature out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
  return out;
}

Signature operator|(const Signature& a, const Signature& b) {
  if (a.bits_ != b.bits_) throw PreconditionError("signature length mismatch");
  Signature out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] |= b.words_[i];
  return out;
}

std::string Signature::to_string() const {
  std::string out;
  out.reserve(bits_);
  for (std::size_t i = 0; i < bits_; ++i) out += test(i) ? '1' : '0';
  return out;
}

namespace {

// Every world of every distinct probe model laid out in one index space, with
// successor lists translated into it.
struct ProbeSpace {
  std::vector<std::vector<std::size_t>> successors;
  std::vector<std::size_t> probe_index;  // probe member -> global world
  std::map<const Model*, std::size_t> offset;

  explicit ProbeSpace(const std::vector<PointedModel>& probe) {
    for (const auto& member : probe) {
      const Model* model = &member.model();
      auto [it, fresh] = offset.try_emplace(model, successors.size());
      if (fresh) {
        for (World w : model->worlds()) {
          std::vector<std::size_t> next;
          for (World v : model->successors(w)) next.push_back(it->second + v.index);
          successors.push_back(std::move(next));
        }
      }
      probe_index.push_back(it->second + member.point().index);
    }
  }

  [[nodiscard]] std::size_t worlds() const { return successors.size(); }

  [[nodiscard]] Signature letter(int letter) const {
    Signature out(worlds());
    for (const auto& [model, base] : offset) {
      for (World w : model->worlds()) out.set(base + w.index, model->satisfies(letter, w));
    }
    return out;
  }

  [[nodiscard]] Signature implication(const Signature& lhs, const Signature& rhs) const {
    Signature out(worlds());
    for (std::size_t w = 0; w < worlds(); ++w) {
      bool ok = true;
      for (std::size_t v : successors[w]) {
        if (lhs.test(v) && !rhs.test(v)) {
          ok = false;
          break;
        }
      }
      out.set(w, ok);
    }
    return out;
  }

  [[nodiscard]] Signature restrict(const Signature& extent) const {
    Signature out(probe_index.size());
    for (std::size_t i = 0; i < probe_index.size(); ++i) out.set(i, extent.test(probe_index[i]));
    return out;
  }
};

struct Candidate {
  IntFormula formula;
  std::size_t size;
  IntFormula::Kind op;
  std::size_t lhs;
  std::size_t rhs;
};

class Generator {
 public:
  Generator(Repertoire& out, std::size_t budget) : out_(out), space_(out.probe), budget_(budget) {}

  void run() {
    std::vector<Candidate> atoms;
    atoms.push_back({IntFormula::bottom(), 1, IntFormula::Kind::Bottom, 0, 0});
    for (int letter : out_.sigma) atoms.push_back({IntFormula::prop(letter), 1, IntFormula::Kind::Prop, 0, 0});
    std::size_t start = out_.entries.size();
    if (!admit(atoms, 0)) return;
    if (!saturate(start)) return;
    for (std::size_t d = 1; d <= out_.depth; ++d) {
      std::vector<Candidate> implications;
      const std::size_t end = out_.entries.size();
      for (std::size_t i = 0; i < end; ++i) {
        for (std::size_t j = 0; j < end; ++j) {
          const auto& a = out_.entries[i];
          const auto& b = out_.entries[j];
          if (std::max(a.depth, b.depth) + 1 != d) continue;
          if (!spend()) return;
          IntFormula f = IntFormula::imp(a.representative, b.representative);
          implications.push_back({f, size(f), IntFormula::Kind::Imp, i, j});
        }
      }
      start = out_.entries.size();
      if (!admit(implications, d)) return;
      if (!saturate(start)) return;
    }
  }

 private:
  bool spend() {
    if (out_.generated >= budget_) {
      out_.complete = false;
      return false;
    }
    ++out_.generated;
    return true;
  }

  Signature extent_of(const Candidate& c) const {
    switch (c.op) {
      case IntFormula::Kind::Bottom:
        return Signature(space_.worlds());
      case IntFormula::Kind::Prop:
        return space_.letter(c.formula.index());
      case IntFormula::Kind::And:
        return out_.entries[c.lhs].extent & out_.entries[c.rhs].extent;
      case IntFormula::Kind::Or:
        return out_.entries[c.lhs].extent | out_.entries[c.rhs].extent;
      case IntFormula::Kind::Imp:
        return space_.implication(out_.entries[c.lhs].extent, out_.entries[c.rhs].extent);
    }
    return Signature(space_.worlds());
  }

  // Adds, in generation order, every candidate whose signature is new.
  // Returns false if nothing could be checked because the list was cut short.
  bool admit(std::vector<Candidate>& candidates, std::size_t level) {
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.size != b.size) return a.size < b.size;
      return a.formula < b.formula;
    });
    for (auto& c : candidates) {
      Signature extent = extent_of(c);
      Signature signature = space_.restrict(extent);
      if (!seen_.insert(signature).second) continue;
      const std::size_t depth = c.op == IntFormula::Kind::Imp ? level : impl_depth(c.formula);
      out_.entries.push_back({std::move(c.formula), depth, std::move(signature), std::move(extent)});
    }
    return out_.complete;
  }

  // Closes the repertoire under & and |, combining only pairs that involve an
  // entry added since the previous round.
  bool saturate(std::size_t start) {
    while (start < out_.entries.size()) {
      const std::size_t end = out_.entries.size();
      std::vector<Candidate> combos;
      for (std::size_t j = start; j < end; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const auto& a = out_.entries[i];
          const auto& b = out_.entries[j];
          if (!spend()) return false;
          IntFormula c = IntFormula::conj(a.representative, b.representative);
          combos.push_back({c, size(c), IntFormula::Kind::And, i, j});
          if (!spend()) return false;
          IntFormula d = IntFormula::disj(a.representative, b.representative);
          combos.push_back({d, size(d), IntFormula::Kind::Or, i, j});
        }
      }
      if (!admit(combos, 0)) return false;
      start = end;
    }
    return true;
  }

  Repertoire& out_;
  ProbeSpace space_;
  std::size_t budget_;
  std::set<Signature> seen_;
};

void require_repertoire(const Repertoire& repertoire, const Vocabulary& sigma, std::size_t k) {
  if (repertoire.depth < k) {
    throw PreconditionError("the repertoire only reaches depth " + std::to_string(repertoire.depth) +
                            ", but depth " + std::to_string(k) + " was requested");
  }
  if (!sigma.subset_of(repertoire.sigma)) {
    throw PreconditionError("the repertoire over " + repertoire.sigma.to_string() + " does not cover " +
                            sigma.to_string());
  }
}

std::string single_free_variable(const FOFormula& formula) {
  const auto free = free_variables(formula);
  if (free.size() != 1) {
    throw EvalError("expected exactly one free variable, found " + std::to_string(free.size()));
  }
  return *free.begin();
}

}  // namespace

Repertoire enumerate_int_formulas(const Vocabulary& sigma, std::size_t depth, std::vector<PointedModel> probe,
                                  std::size_t budget) {
  if (probe.empty()) throw PreconditionError("the probe family is empty");
  for (const auto& member : probe) {
    if (!sigma.subset_of(member.model().vocab())) {
      throw PreconditionError("probe model vocabulary " + member.model().vocab().to_string() + " does not cover " +
                              sigma.to_string());
    }
  }
  Repertoire out;
  out.sigma = sigma;
  out.depth = depth;
  out.probe = std::move(probe);
  Generator(out, budget).run();
  return out;
}

std::vector<IntFormula> theory_at(const PointedModel& point, const Vocabulary& sigma, std::size_t k,
                                  const Repertoire& repertoire) {
  if (repertoire.sigma != sigma) {
    throw PreconditionError("the repertoire is over " + repertoire.sigma.to_string() + ", not " + sigma.to_string());
  }
  require_repertoire(repertoire, sigma, k);
  std::vector<IntFormula> out;
  for (const auto& entry : repertoire.entries) {
    if (entry.depth <= k && holds_at(point, st(entry.representative))) out.push_back(entry.representative);
  }
  return out;
}

bool leq_k(const PointedModel& source, const PointedModel& target, const Vocabulary& sigma, std::size_t k,
           const Repertoire& repertoire) {
  const auto lhs = theory_at(source, sigma, k, repertoire);
  const auto rhs = theory_at(target, sigma, k, repertoire);
  return std::all_of(lhs.begin(), lhs.end(),
                     [&](const IntFormula& f) { return std::find(rhs.begin(), rhs.end(), f) != rhs.end(); });
}

BoundedComparison leq_sigma(const PointedModel& source, const PointedModel& target, const Vocabulary& sigma,
                            std::size_t depth_bound, const Repertoire& repertoire) {
  return {leq_k(source, target, sigma, depth_bound, repertoire), depth_bound};
}

ScanMode ScanMode::parse(const std::string& text) {
  if (text == "asim") return asim();
  if (text == "bisim") return bisim();
  if (text == "int") return int_asim();
  if (text.rfind("kasim:", 0) == 0 && text.size() > 6) {
    const std::string digits = text.substr(6);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 6) {
      return kasim(std::stoul(digits));
    }
  }
  throw PreconditionError("unknown scan mode '" + text + "' (expected asim, kasim:K, bisim or int)");
}

Verdict invariance_scan(const FOFormula& formula, const std::vector<PointedModel>& family, ScanMode mode) {
  if (family.empty()) throw PreconditionError("the family is empty");
  single_free_variable(formula);
  const PointEvaluator evaluate(formula);

  std::vector<const PointedModel*> members;
  std::map<const Model*, bool> intuitionistic;
  for (const auto& member : family) {
    if (mode.kind == ScanMode::Kind::IntAsim) {
      auto [it, fresh] = intuitionistic.try_emplace(&member.model(), false);
      if (fresh) it->second = validate_intuitionistic(member.model()).intuitionistic();
      if (!it->second) continue;
    }
    members.push_back(&member);
  }
  std::vector<bool> truth;
  truth.reserve(members.size());
  for (const auto* member : members) truth.push_back(evaluate(*member));

  using Key = std::pair<const Model*, const Model*>;
  std::map<Key, DirectedRelation> asims;
  std::map<Key, StratifiedFamily> strata;
  std::map<Key, WorldRelation> bisims;

  for (std::size_t s = 0; s < members.size(); ++s) {
    if (!truth[s]) continue;
    const PointedModel& source = *members[s];
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (truth[t]) continue;
      const PointedModel& target = *members[t];
      const Key key{&source.model(), &target.model()};
      switch (mode.kind) {
        case ScanMode::Kind::Asim:
        case ScanMode::Kind::IntAsim: {
          auto it = asims.find(key);
          if (it == asims.end()) it = asims.emplace(key, greatest_asimulation(source.model(), target.model())).first;
          if (it->second.contains(Direction::LeftToRight, source.point(), target.point())) {
            return {Counterexample{source, target, it->second}};
          }
          break;
        }
        case ScanMode::Kind::KAsim: {
          auto it = strata.find(key);
          if (it == strata.end()) {
            it = strata.emplace(key, stratified_k_asim(source.model(), target.model(), mode.k)).first;
          }
          if (it->second.layers.back().contains(Direction::LeftToRight, source.point(), target.point())) {
            return {Counterexample{source, target, *k_asimulation_witness(source, target, mode.k)}};
          }
          break;
        }
        case ScanMode::Kind::Bisim: {
          auto it = bisims.find(key);
          if (it == bisims.end()) {
            it = bisims.emplace(key, greatest_bisimulation(source.model(), target.model())).first;
          }
          if (it->second.contains(source.point(), target.point())) {
            return {Counterexample{source, target, it->second}};
          }
          break;
        }
      }
    }
  }
  return {};
}

std::vector<IntFormula> complete_conjuncts(const FOFormula& formula, const PointedModel& point, std::size_t k,
                                           const Repertoire& repertoire) {
  const Vocabulary letters = vocabulary_of(formula);
  require_repertoire(repertoire, letters, k);
  std::vector<IntFormula> out;
  for (const auto& entry : repertoire.entries) {
    if (entry.depth > k || !vocabulary_of(entry.representative).subset_of(letters)) continue;
    if (holds_at(point, st(entry.representative))) out.push_back(entry.representative);
  }
  if (out.empty()) out.push_back(IntFormula::imp(IntFormula::bottom(), IntFormula::bottom()));
  return out;
}

FOFormula complete_conjunction(const FOFormula& formula, const PointedModel& point, std::size_t k,
                               const Repertoire& repertoire) {
  if (k == 0) throw PreconditionError("complete conjunctions need k >= 1");
  const std::string x = single_free_variable(formula);
  require_repertoire(repertoire, vocabulary_of(formula), k);
  if (!holds_at(point, formula)) throw PreconditionError("the formula does not hold at the given point");
  std::vector<FOFormula> conjuncts;
  for (const auto& i : complete_conjuncts(formula, point, k, repertoire)) conjuncts.push_back(st(i, x));
  return conjunction_of(conjuncts);
}

std::optional<IntFormula> synthesize(const FOFormula& formula, std::size_t k, const std::vector<PointedModel>& family,
                                     const Repertoire& repertoire, bool intuitionistic_only) {
  const Vocabulary letters = vocabulary_of(formula);
  require_repertoire(repertoire, letters, k);
  single_free_variable(formula);
  const PointEvaluator evaluate(formula);

  std::vector<const PointedModel*> members;
  for (const auto& member : family) {
    if (intuitionistic_only && !validate_intuitionistic(member.model()).intuitionistic()) continue;
    members.push_back(&member);
  }
  std::vector<bool> wanted;
  for (const auto* member : members) wanted.push_back(evaluate(*member));
  const Signature target(wanted);
  if (target.none()) return IntFormula::bottom();

  // Truth pattern of every usable representative on the members.
  std::vector<const RepertoireEntry*> usable;
  std::vector<Signature> patterns;
  for (const auto& entry : repertoire.entries) {
    if (entry.depth > k || !vocabulary_of(entry.representative).subset_of(letters)) continue;
    const PointEvaluator translated(st(entry.representative));
    Signature pattern(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) pattern.set(i, translated(*members[i]));
    if (pattern == target) return entry.representative;
    usable.push_back(&entry);
    patterns.push_back(std::move(pattern));
  }

  // One complete conjunction per member satisfying the formula, identified by
  // the set of representatives it collects.
  std::vector<Signature> chosen;
  Signature covered(members.size());
  for (std::size_t m = 0; m < members.size(); ++m) {
    if (!wanted[m]) continue;
    Signature conjuncts(usable.size());
    Signature truth(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) truth.set(i);
    for (std::size_t r = 0; r < usable.size(); ++r) {
      if (patterns[r].test(m)) {
        conjuncts.set(r);
        truth = truth & patterns[r];
      }
    }
    covered = covered | truth;
    chosen.push_back(conjuncts);
  }
  if (covered != target) return std::nullopt;

  // A conjunction collecting a superset of another's conjuncts is implied by
  // it and adds nothing to the disjunction.
  std::vector<IntFormula> disjuncts;
  std::set<Signature> emitted;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    bool redundant = false;
    for (std::size_t o = 0; o < chosen.size() && !redundant; ++o) {
      if (o == c || !chosen[o].subset_of(chosen[c])) continue;
      redundant = chosen[o] != chosen[c] || o < c;
    }
    if (redundant || !emitted.insert(chosen[c]).second) continue;
    std::vector<IntFormula> parts;
    for (std::size_t r = 0; r < usable.size(); ++r) {
      if (chosen[c].test(r)) parts.push_back(usable[r]->representative);
    }
    if (parts.empty()) parts.push_back(IntFormula::imp(IntFormula::bottom(), IntFormula::bottom()));
    disjuncts.push_back(conjunction_of(parts));
  }
  return disjunction_of(disjuncts);
}

}  // namespace asimkit

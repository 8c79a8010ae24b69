#pragma once

// Models from the worked examples, random formula generators and small
// independent oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "asimkit/enumerate.hpp"
#include "asimkit/formula.hpp"
#include "asimkit/model.hpp"
#include "asimkit/simulation.hpp"

namespace fixtures {

using namespace asimkit;

inline std::shared_ptr<const Model> make(ModelSpec spec) { return std::make_shared<const Model>(spec); }

// D = {a,b,c}, R = {(a,b),(a,c)}, P1 = {c}
inline std::shared_ptr<const Model> example_m() {
  return make({{"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}, {{1, {"c"}}}, Vocabulary{1}});
}

// D = {d,e}, R = {(d,e)}, P1 = {d}
inline std::shared_ptr<const Model> example_n() {
  return make({{"d", "e"}, {{"d", "e"}}, {{1, {"d"}}}, Vocabulary{1}});
}

// Reflexive closure of M.
inline std::shared_ptr<const Model> example_m1() {
  return make({{"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"a", "c"}, {"b", "b"}, {"c", "c"}}, {{1, {"c"}}},
               Vocabulary{1}});
}

// D = {d,e}, R = {(d,d),(d,e),(e,e)}, P1 empty.
inline std::shared_ptr<const Model> example_n1() {
  return make({{"d", "e"}, {{"d", "d"}, {"d", "e"}, {"e", "e"}}, {{1, {}}}, Vocabulary{1}});
}

inline World w(const std::shared_ptr<const Model>& m, const char* name) { return m->at(name); }

inline DirectedRelation relation(const Model& left, const Model& right,
                                 const std::vector<std::tuple<Direction, std::string, std::string>>& pairs) {
  DirectedRelation out(left.size(), right.size());
  for (const auto& [dir, from, to] : pairs) {
    const Model& s = dir == Direction::LeftToRight ? left : right;
    const Model& t = dir == Direction::LeftToRight ? right : left;
    out.insert(dir, s.at(from), t.at(to));
  }
  return out;
}

inline std::vector<World> seq(const Model& m, std::initializer_list<const char*> names) {
  std::vector<World> out;
  for (const char* n : names) out.push_back(m.at(n));
  return out;
}

inline std::vector<std::shared_ptr<const Model>> shared_models(std::size_t max_worlds, const Vocabulary& sigma,
                                                               bool intuitionistic_only = false) {
  std::vector<std::shared_ptr<const Model>> out;
  for (auto& m : enumerate_models(max_worlds, sigma, intuitionistic_only)) {
    out.push_back(std::make_shared<const Model>(std::move(m)));
  }
  return out;
}

// Random generators ----------------------------------------------------------

class FormulaGen {
 public:
  explicit FormulaGen(std::uint32_t seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  IntFormula int_formula(int depth, int letters = 2) {
    if (depth == 0 || pick(0, 3) == 0) {
      const int r = pick(0, letters);
      return r == 0 ? IntFormula::bottom() : IntFormula::prop(r);
    }
    IntFormula a = int_formula(depth - 1, letters);
    IntFormula b = int_formula(depth - 1, letters);
    switch (pick(0, 2)) {
      case 0: return IntFormula::conj(a, b);
      case 1: return IntFormula::disj(a, b);
      default: return IntFormula::imp(a, b);
    }
  }

  ModalFormula modal_formula(int depth, int letters = 2) {
    if (depth == 0 || pick(0, 3) == 0) return ModalFormula::prop(pick(1, letters));
    switch (pick(0, 2)) {
      case 0: return ModalFormula::conj(modal_formula(depth - 1, letters), modal_formula(depth - 1, letters));
      case 1: return ModalFormula::neg(modal_formula(depth - 1, letters));
      default: return ModalFormula::box(modal_formula(depth - 1, letters));
    }
  }

  // Variables are drawn from a small pool so that shadowing and reuse happen.
  FOFormula fo_formula(int depth, int letters = 2) {
    static const char* pool[] = {"x", "y", "z", "u"};
    auto var = [&] { return std::string(pool[pick(0, 3)]); };
    if (depth == 0 || pick(0, 4) == 0) {
      switch (pick(0, 2)) {
        case 0: return FOFormula::pred(pick(1, letters), var());
        case 1: return FOFormula::rel(var(), var());
        default: return FOFormula::eq(var(), var());
      }
    }
    switch (pick(0, 5)) {
      case 0: return FOFormula::neg(fo_formula(depth - 1, letters));
      case 1: return FOFormula::conj(fo_formula(depth - 1, letters), fo_formula(depth - 1, letters));
      case 2: return FOFormula::disj(fo_formula(depth - 1, letters), fo_formula(depth - 1, letters));
      case 3: return FOFormula::imp(fo_formula(depth - 1, letters), fo_formula(depth - 1, letters));
      case 4: return FOFormula::forall(var(), fo_formula(depth - 1, letters));
      default: return FOFormula::exists(var(), fo_formula(depth - 1, letters));
    }
  }

 private:
  std::mt19937 rng_;
};

// Every IntFormula over the given letters with at most `nodes` connectives.
inline std::vector<IntFormula> all_int_formulas(int nodes, int letters) {
  std::vector<std::vector<IntFormula>> by_size(static_cast<std::size_t>(nodes) + 1);
  by_size[0].push_back(IntFormula::bottom());
  for (int l = 1; l <= letters; ++l) by_size[0].push_back(IntFormula::prop(l));
  for (int n = 1; n <= nodes; ++n) {
    for (int left = 0; left < n; ++left) {
      for (const auto& a : by_size[static_cast<std::size_t>(left)]) {
        for (const auto& b : by_size[static_cast<std::size_t>(n - 1 - left)]) {
          by_size[static_cast<std::size_t>(n)].push_back(IntFormula::conj(a, b));
          by_size[static_cast<std::size_t>(n)].push_back(IntFormula::disj(a, b));
          by_size[static_cast<std::size_t>(n)].push_back(IntFormula::imp(a, b));
        }
      }
    }
  }
  std::vector<IntFormula> out;
  for (auto& group : by_size) out.insert(out.end(), group.begin(), group.end());
  return out;
}

// Oracles ----------------------------------------------------------------------

// Quantifier rank as the largest number of quantifier nodes on any
// root-to-leaf path.
inline std::size_t path_degree(const FOFormula& f) {
  std::size_t here = f.is_quantifier() ? 1 : 0;
  if (f.is_atomic()) return 0;
  std::size_t below = path_degree(f.left());
  if (f.is_binary()) below = std::max(below, path_degree(f.right()));
  return here + below;
}

inline std::size_t count_cycles(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

// Number of isomorphism classes of models on exactly n worlds with `letters`
// unary letters, by Burnside's lemma: average over permutations of the number
// of labelled structures they fix.
inline std::uint64_t burnside_classes(std::size_t n, std::size_t letters) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t fixed_total = 0;
  std::uint64_t group = 0;
  do {
    const std::size_t world_cycles = count_cycles(perm);
    std::vector<std::size_t> on_pairs(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) on_pairs[i * n + j] = perm[i] * n + perm[j];
    }
    const std::size_t pair_cycles = count_cycles(on_pairs);
    fixed_total += std::uint64_t{1} << (world_cycles * letters + pair_cycles);
    ++group;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed_total / group;
}

// Labelled structure in a plain form for brute-force isomorphism handling.
struct Labelled {
  std::size_t n;
  std::vector<bool> adjacency;
  std::vector<std::vector<bool>> flags;  // [letter position][world]
};

inline Labelled labelled(const Model& m) {
  Labelled out{m.size(), std::vector<bool>(m.size() * m.size()), {}};
  for (World u : m.worlds()) {
    for (World v : m.worlds()) out.adjacency[u.index * m.size() + v.index] = m.related(u, v);
  }
  for (int letter : m.vocab()) {
    std::vector<bool> f(m.size());
    for (World u : m.worlds()) f[u.index] = m.satisfies(letter, u);
    out.flags.push_back(f);
  }
  return out;
}

inline bool isomorphic(const Model& a, const Model& b) {
  if (a.size() != b.size() || a.vocab() != b.vocab()) return false;
  const Labelled la = labelled(a);
  const Labelled lb = labelled(b);
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) {
      for (std::size_t l = 0; l < la.flags.size() && same; ++l) same = la.flags[l][i] == lb.flags[l][perm[i]];
      for (std::size_t j = 0; j < n && same; ++j) same = la.adjacency[i * n + j] == lb.adjacency[perm[i] * n + perm[j]];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace fixtures

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asimkit/error.hpp"
#include "asimkit/model_io.hpp"
#include "asimkit/simulation.hpp"
#include "asimkit/simulation_io.hpp"
#include "fixtures.hpp"

using namespace asimkit;
using fixtures::relation;
using fixtures::seq;
using fixtures::w;
constexpr auto LR = Direction::LeftToRight;
constexpr auto RL = Direction::RightToLeft;

namespace {

std::string slurp(const char* file) {
  std::ifstream in(std::filesystem::path(ASIMKIT_TEST_DATA) / file);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Example {
  std::shared_ptr<const Model> m = fixtures::example_m();
  std::shared_ptr<const Model> n = fixtures::example_n();
  PointedModel ma{m, "a"};
  PointedModel nd{n, "d"};

  [[nodiscard]] DirectedRelation b() const { return relation(*m, *n, {{LR, "a", "d"}, {LR, "b", "e"}, {RL, "e", "b"}}); }

  [[nodiscard]] TupleRelation a_tuples() const {
    TupleRelation a;
    a.insert({LR, seq(*m, {"a"}), seq(*n, {"d"})});
    a.insert({RL, seq(*n, {"d", "e"}), seq(*m, {"a", "b"})});
    a.insert({LR, seq(*m, {"a", "b"}), seq(*n, {"d", "e"})});
    return a;
  }
};

// Conditions of an asimulation checked directly, without a root: atoms over
// sigma forward, and every successor challenge answered in both orientations.
bool closed(const Model& left, const Model& right, const DirectedRelation& rel) {
  const Vocabulary sigma = left.vocab().united(right.vocab());
  for (const auto& [dir, from, to] : rel.pairs()) {
    const Model& s = dir == LR ? left : right;
    const Model& t = dir == LR ? right : left;
    for (int p : sigma) {
      if (s.satisfies(p, from) && !t.satisfies(p, to)) return false;
    }
    for (World challenge : t.successors(to)) {
      bool answered = false;
      for (World reply : s.successors(from)) {
        answered = answered || (rel.contains(reversed(dir), challenge, reply) && rel.contains(dir, reply, challenge));
      }
      if (!answered) return false;
    }
  }
  return true;
}

bool bisim_closed(const Model& left, const Model& right, const WorldRelation& rel) {
  const Vocabulary sigma = left.vocab().united(right.vocab());
  for (auto [u, v] : rel.pairs()) {
    for (int p : sigma) {
      if (left.satisfies(p, u) != right.satisfies(p, v)) return false;
    }
    for (World u2 : left.successors(u)) {
      bool ok = false;
      for (World v2 : right.successors(v)) ok = ok || rel.contains(u2, v2);
      if (!ok) return false;
    }
    for (World v2 : right.successors(v)) {
      bool ok = false;
      for (World u2 : left.successors(u)) ok = ok || rel.contains(u2, v2);
      if (!ok) return false;
    }
  }
  return true;
}

// Every directed relation between the two domains, by bitmask over slots.
template <typename F>
void for_each_relation(const Model& left, const Model& right, F&& visit) {
  std::vector<DirectedPair> slots;
  for (World a : left.worlds()) {
    for (World b : right.worlds()) slots.push_back({LR, a, b});
  }
  for (World b : right.worlds()) {
    for (World a : left.worlds()) slots.push_back({RL, b, a});
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    DirectedRelation rel(left.size(), right.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) rel.insert(slots[i]);
    }
    visit(rel);
  }
}

const std::vector<std::shared_ptr<const Model>>& small_models() {
  static const auto models = fixtures::shared_models(2, Vocabulary{1});
  return models;
}

}  // namespace

TEST(CheckAsimulation, PaperRelationB) {
  const Example ex;
  EXPECT_TRUE(check_asimulation(ex.ma, ex.nd, ex.b()).ok());
}

TEST(CheckAsimulation, SingletonFailsBackStep) {
  const Example ex;
  const auto result = check_asimulation(ex.ma, ex.nd, relation(*ex.m, *ex.n, {{LR, "a", "d"}}));
  ASSERT_FALSE(result.ok());
  const auto& v = *result.violation;
  EXPECT_EQ(v.kind, ViolationKind::StepBack);
  EXPECT_EQ(v.dir, LR);
  EXPECT_EQ(v.from, seq(*ex.m, {"a"}));
  EXPECT_EQ(v.to, seq(*ex.n, {"d"}));
  EXPECT_EQ(v.successor, w(ex.n, "e"));
  EXPECT_EQ(describe(v, *ex.m, *ex.n), "StepBack at LR a -> d: successor e of d is not answered");
}

TEST(CheckAsimulation, AtomForwardFailure) {
  const Example ex;
  const auto result = check_asimulation(ex.nd, ex.ma, relation(*ex.n, *ex.m, {{LR, "d", "a"}}));
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.violation->kind, ViolationKind::AtomForward);
  EXPECT_EQ(result.violation->letter, 1);
  EXPECT_EQ(describe(*result.violation, *ex.n, *ex.m), "AtomForward at LR d -> a: P1 is not carried over");
}

TEST(CheckAsimulation, RootMissingAndForeignWorlds) {
  const Example ex;
  const auto result = check_asimulation(ex.ma, ex.nd, relation(*ex.m, *ex.n, {{LR, "b", "e"}, {RL, "e", "b"}}));
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.violation->kind, ViolationKind::RootMissing);
  EXPECT_THROW((void)check_asimulation(ex.ma, ex.nd, DirectedRelation(2, 2)), ModelError);
  DirectedRelation r(3, 2);
  EXPECT_THROW(r.insert(LR, World{3}, World{0}), ModelError);
  EXPECT_THROW(r.insert(RL, World{2}, World{0}), ModelError);
}

TEST(CheckAsimulation, ExplicitSigmaRestrictsAtoms) {
  const Example ex;
  const auto single = relation(*ex.n, *ex.m, {{LR, "d", "a"}, {LR, "e", "b"}, {RL, "b", "e"}, {LR, "e", "c"},
                                              {RL, "c", "e"}});
  EXPECT_FALSE(check_asimulation(ex.nd, ex.ma, single).ok());
  EXPECT_TRUE(check_asimulation(ex.nd, ex.ma, single, Vocabulary{}).ok());
}

TEST(GreatestAsimulation, Examples) {
  const Example ex;
  const auto g = greatest_asimulation(*ex.m, *ex.n);
  EXPECT_TRUE(ex.b().subset_of(g));
  EXPECT_FALSE(g.contains(RL, w(ex.n, "d"), w(ex.m, "a")));
  const auto self = greatest_asimulation(*ex.m, *ex.m);
  for (World u : ex.m->worlds()) {
    EXPECT_TRUE(self.contains(LR, u, u));
    EXPECT_TRUE(self.contains(RL, u, u));
  }
}

TEST(GreatestAsimulation, ExactOnTheExamplePair) {
  const Example ex;
  DirectedRelation union_of_closed(3, 2);
  for_each_relation(*ex.m, *ex.n, [&](const DirectedRelation& rel) {
    if (!closed(*ex.m, *ex.n, rel)) return;
    for (const auto& p : rel.pairs()) union_of_closed.insert(p);
  });
  EXPECT_EQ(greatest_asimulation(*ex.m, *ex.n), union_of_closed);
}

TEST(ExistsAsimulation, Examples) {
  const Example ex;
  EXPECT_TRUE(exists_asimulation(ex.ma, ex.nd));
  EXPECT_FALSE(exists_asimulation(ex.nd, ex.ma));
  EXPECT_TRUE(exists_asimulation(ex.ma, ex.ma));
}

TEST(Stratified, Examples) {
  const Example ex;
  const auto family = stratified_k_asim(*ex.m, *ex.n, 5);
  ASSERT_EQ(family.layers.size(), 6u);
  EXPECT_EQ(family.rounds(), 5u);
  for (const auto& layer : family.layers) EXPECT_TRUE(layer.contains(LR, w(ex.m, "a"), w(ex.n, "d")));
  EXPECT_TRUE(family.descending());
  const auto g = greatest_asimulation(*ex.m, *ex.n);
  for (const auto& layer : family.layers) EXPECT_TRUE(g.subset_of(layer));
}

TEST(ExistsK, Examples) {
  const Example ex;
  EXPECT_TRUE(exists_k_asimulation(ex.ma, ex.nd, 3));
  EXPECT_FALSE(exists_k_asimulation(ex.nd, ex.ma, 0));
  EXPECT_TRUE(exists_k_asimulation(ex.ma, ex.nd, 0));
}

TEST(TupleCheck, PaperRelation) {
  const Example ex;
  const auto a = ex.a_tuples();
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_TRUE(check_k_asimulation_tuples(ex.ma, ex.nd, a, k).ok()) << k;
}

TEST(TupleCheck, MissingExtensionFails) {
  const Example ex;
  TupleRelation a;
  a.insert({LR, seq(*ex.m, {"a"}), seq(*ex.n, {"d"})});
  a.insert({RL, seq(*ex.n, {"d", "e"}), seq(*ex.m, {"a", "b"})});
  const auto result = check_k_asimulation_tuples(ex.ma, ex.nd, a, 1);
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.violation->kind, ViolationKind::StepBack);
  EXPECT_EQ(result.violation->from, seq(*ex.m, {"a"}));
  EXPECT_EQ(result.violation->successor, w(ex.n, "e"));
  // At k = 0 nothing beyond the root atoms is owed.
  EXPECT_TRUE(check_k_asimulation_tuples(ex.ma, ex.nd, a, 0).ok());
}

TEST(TupleCheck, EmptyAndMalformed) {
  const Example ex;
  const auto result = check_k_asimulation_tuples(ex.ma, ex.nd, TupleRelation{}, 2);
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.violation->kind, ViolationKind::RootMissing);
  TupleRelation a;
  EXPECT_THROW(a.insert({LR, seq(*ex.m, {"a", "b"}), seq(*ex.n, {"d"})}), PreconditionError);
  EXPECT_THROW(a.insert({LR, {}, {}}), PreconditionError);
}

TEST(TupleCheck, LongerTuplesCarryNoObligation) {
  const Example ex;
  auto a = ex.a_tuples();
  // Length 3 > k + 1 for k = 1: only the atoms on the last coordinates count.
  a.insert({LR, seq(*ex.m, {"a", "b", "a"}), seq(*ex.n, {"d", "e", "e"})});
  EXPECT_TRUE(check_k_asimulation_tuples(ex.ma, ex.nd, a, 1).ok());
}

TEST(Witness, IsThePaperRelation) {
  const Example ex;
  const auto witness = k_asimulation_witness(ex.ma, ex.nd, 1);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, ex.a_tuples());
  EXPECT_FALSE(k_asimulation_witness(ex.nd, ex.ma, 0).has_value());
}

TEST(BruteForce, Examples) {
  const Example ex;
  EXPECT_TRUE(brute_force_k_asim(ex.ma, ex.nd, 2));
  EXPECT_FALSE(brute_force_k_asim(ex.nd, ex.ma, 0));
  EXPECT_THROW((void)brute_force_k_asim(ex.ma, ex.nd, 3), BudgetExceeded);
  const auto big = std::make_shared<const Model>(
      ModelSpec{{"p", "q", "r", "s"}, {}, {}, Vocabulary{1}});
  EXPECT_THROW((void)brute_force_k_asim({big, "p"}, ex.nd, 1), BudgetExceeded);
}

TEST(Properties, GfpIsUnionOfClosedRelations) {
  for (const auto& left : small_models()) {
    for (const auto& right : small_models()) {
      const auto g = greatest_asimulation(*left, *right);
      DirectedRelation u(left->size(), right->size());
      for_each_relation(*left, *right, [&](const DirectedRelation& rel) {
        if (!closed(*left, *right, rel)) return;
        for (const auto& p : rel.pairs()) u.insert(p);
        // Anything that passes the checker lies inside the gfp.
        for (const auto& p : rel.pairs()) {
          if (p.dir != LR) continue;
          ASSERT_TRUE(check_asimulation({left, p.from}, {right, p.to}, rel).ok());
          ASSERT_TRUE(rel.subset_of(g));
          break;
        }
      });
      ASSERT_EQ(g, u);
    }
  }
}

TEST(Properties, GfpPassesItsOwnCheck) {
  const auto models = fixtures::shared_models(3, Vocabulary{1});
  for (std::size_t i = 0; i < models.size(); i += 7) {
    for (std::size_t j = 0; j < models.size(); j += 11) {
      const auto g = greatest_asimulation(*models[i], *models[j]);
      for (const auto& p : g.pairs()) {
        if (p.dir != LR) continue;
        ASSERT_TRUE(check_asimulation({models[i], p.from}, {models[j], p.to}, g).ok());
      }
    }
  }
}

TEST(Properties, StratifiedAgreesWithBruteForceAndWitness) {
  for (const auto& left : small_models()) {
    for (const auto& right : small_models()) {
      for (World a : left->worlds()) {
        for (World b : right->worlds()) {
          const PointedModel l{left, a};
          const PointedModel r{right, b};
          bool previous = true;
          for (std::size_t k = 0; k <= 2; ++k) {
            const bool fast = exists_k_asimulation(l, r, k);
            ASSERT_EQ(fast, brute_force_k_asim(l, r, k));
            const auto witness = k_asimulation_witness(l, r, k);
            ASSERT_EQ(witness.has_value(), fast);
            if (witness) {
              ASSERT_TRUE(check_k_asimulation_tuples(l, r, *witness, k).ok());
            }
            // Antitone in k.
            ASSERT_TRUE(previous || !fast);
            previous = fast;
          }
          if (exists_asimulation(l, r)) {
            ASSERT_TRUE(exists_k_asimulation(l, r, 4));
          }
        }
      }
    }
  }
}

TEST(Bisimulation, Examples) {
  const Example ex;
  const PointedModel ma{ex.m, "a"};
  EXPECT_TRUE(check_bisimulation(ma, ma, WorldRelation::identity(3)).ok());

  WorldRelation ad(3, 2);
  ad.insert(w(ex.m, "a"), w(ex.n, "d"));
  const auto bad = check_bisimulation(ma, ex.nd, ad);
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.violation->kind, ViolationKind::AtomForward);
  EXPECT_EQ(bad.violation->letter, 1);

  WorldRelation be(3, 2);
  be.insert(w(ex.m, "b"), w(ex.n, "e"));
  EXPECT_TRUE(check_bisimulation({ex.m, "b"}, {ex.n, "e"}, be).ok());

  const auto g = greatest_bisimulation(*ex.m, *ex.n);
  EXPECT_TRUE(g.contains(w(ex.m, "b"), w(ex.n, "e")));
  EXPECT_FALSE(g.contains(w(ex.m, "a"), w(ex.n, "d")));
  const auto self = greatest_bisimulation(*ex.m, *ex.m);
  for (World u : ex.m->worlds()) EXPECT_TRUE(self.contains(u, u));
}

TEST(Bisimulation, ZigAndZag) {
  const auto chain = std::make_shared<const Model>(ModelSpec{{"u", "v"}, {{"u", "v"}}, {}, Vocabulary{}});
  const auto dot = std::make_shared<const Model>(ModelSpec{{"w"}, {}, {}, Vocabulary{}});
  WorldRelation uw(2, 1);
  uw.insert(World{0}, World{0});
  const auto zig = check_bisimulation({chain, "u"}, {dot, "w"}, uw);
  ASSERT_FALSE(zig.ok());
  EXPECT_EQ(zig.violation->kind, ViolationKind::StepForth);
  EXPECT_EQ(zig.violation->successor, World{1});

  WorldRelation wu(1, 2);
  wu.insert(World{0}, World{0});
  const auto zag = check_bisimulation({dot, "w"}, {chain, "u"}, wu);
  ASSERT_FALSE(zag.ok());
  EXPECT_EQ(zag.violation->kind, ViolationKind::StepBack);
}

TEST(Bisimulation, GfpIsUnionOfClosedRelations) {
  for (const auto& left : small_models()) {
    for (const auto& right : small_models()) {
      const std::size_t slots = left->size() * right->size();
      WorldRelation u(left->size(), right->size());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        WorldRelation rel(left->size(), right->size());
        for (std::size_t i = 0; i < slots; ++i) {
          if ((mask >> i) & 1U) rel.insert(World{static_cast<std::uint32_t>(i / right->size())},
                                           World{static_cast<std::uint32_t>(i % right->size())});
        }
        if (!bisim_closed(*left, *right, rel)) continue;
        for (auto [a, b] : rel.pairs()) u.insert(a, b);
      }
      ASSERT_EQ(greatest_bisimulation(*left, *right), u);
    }
  }
}

TEST(Lift, Examples) {
  const Example ex;
  const auto lifted = lift_asimulation(ex.b(), 2);
  EXPECT_TRUE(check_k_asimulation_tuples(ex.ma, ex.nd, lifted, 1).ok());
  // Length-one tuples are the pairs themselves; length two adds a free prefix.
  EXPECT_EQ(lift_asimulation(ex.b(), 1).size(), ex.b().size());
  EXPECT_EQ(lifted.size(), 3u + 3u * 6u);
  const auto none = lift_asimulation(DirectedRelation(3, 2), 3);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(check_k_asimulation_tuples(ex.ma, ex.nd, none, 1).violation->kind, ViolationKind::RootMissing);
}

TEST(Lift, GfpLiftsPassForSmallK) {
  for (const auto& left : small_models()) {
    for (const auto& right : small_models()) {
      const auto g = greatest_asimulation(*left, *right);
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto lifted = lift_asimulation(g, k + 1);
        for (const auto& p : g.pairs()) {
          if (p.dir != LR) continue;
          ASSERT_TRUE(check_k_asimulation_tuples({left, p.from}, {right, p.to}, lifted, k).ok());
        }
      }
    }
  }
}

TEST(BisimToAsim, Examples) {
  const Example ex;
  const auto id = bisim_to_asim(WorldRelation::identity(3));
  EXPECT_EQ(id.size(), 6u);
  EXPECT_TRUE(check_asimulation(ex.ma, ex.ma, id).ok());

  WorldRelation be(3, 2);
  be.insert(w(ex.m, "b"), w(ex.n, "e"));
  const auto a = bisim_to_asim(be);
  EXPECT_EQ(a, relation(*ex.m, *ex.n, {{LR, "b", "e"}, {RL, "e", "b"}}));
  EXPECT_TRUE(check_asimulation({ex.m, "b"}, {ex.n, "e"}, a).ok());
}

TEST(RelationIo, LoadsTheExampleDocuments) {
  const Example ex;
  EXPECT_EQ(load_directed_relation(slurp("b.json"), *ex.m, *ex.n), ex.b());
  EXPECT_TRUE(is_tuple_document(slurp("a_tuples.json")));
  EXPECT_FALSE(is_tuple_document(slurp("b.json")));
  EXPECT_EQ(load_tuple_relation(slurp("a_tuples.json"), *ex.m, *ex.n), ex.a_tuples());
  const auto e = load_world_relation(slurp("bisim_be.json"), *ex.m, *ex.n);
  EXPECT_EQ(e.size(), 1u);
  EXPECT_TRUE(e.contains(w(ex.m, "b"), w(ex.n, "e")));
}

TEST(RelationIo, RoundTrip) {
  const Example ex;
  const auto g = greatest_asimulation(*ex.m, *ex.n);
  EXPECT_EQ(load_directed_relation(relation_document(g, *ex.m, *ex.n), *ex.m, *ex.n), g);
  const auto a = ex.a_tuples();
  EXPECT_EQ(load_tuple_relation(relation_document(a, *ex.m, *ex.n), *ex.m, *ex.n), a);
  const auto b = greatest_bisimulation(*ex.m, *ex.n);
  EXPECT_EQ(load_world_relation(relation_document(b, *ex.m, *ex.n), *ex.m, *ex.n), b);
}

TEST(RelationIo, Rejections) {
  const Example ex;
  EXPECT_THROW((void)load_directed_relation(R"({"pairs":[{"dir":"LR","from":"a","to":"x"}]})", *ex.m, *ex.n),
               ModelError);
  // Orientation decides which model a name is resolved against.
  EXPECT_THROW((void)load_directed_relation(R"({"pairs":[{"dir":"RL","from":"a","to":"d"}]})", *ex.m, *ex.n),
               ModelError);
  EXPECT_THROW((void)load_directed_relation(R"({"pairs":[{"dir":"UP","from":"a","to":"d"}]})", *ex.m, *ex.n),
               ModelError);
  EXPECT_THROW((void)load_directed_relation(R"({"pairs":[{"from":"a","to":"d"}]})", *ex.m, *ex.n), ModelError);
  EXPECT_THROW((void)load_directed_relation(R"({"pairs":[],"x":1})", *ex.m, *ex.n), ModelError);
  EXPECT_THROW((void)load_world_relation(R"({"pairs":[{"dir":"RL","from":"d","to":"a"}]})", *ex.m, *ex.n),
               ModelError);
  EXPECT_THROW(
      (void)load_tuple_relation(R"({"pairs":[{"dir":"LR","fromSeq":["a","b"],"toSeq":["d"]}]})", *ex.m, *ex.n),
      Error);
}

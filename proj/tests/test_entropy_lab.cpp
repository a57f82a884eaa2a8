#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/error.hpp"
#include "symdyn/moves.hpp"
#include "symdyn/presentation.hpp"

using namespace symdyn;
using testing_support::full_shift;
using testing_support::golden_mean;
using testing_support::sft;

namespace {

const double kLogPhi = std::log2((1 + std::sqrt(5.0)) / 2);

Graph labeled(std::vector<std::string> vertices, std::vector<std::tuple<int, int, std::string>> edges) {
  Graph g;
  for (auto& v : vertices) g.add_vertex(v);
  for (auto& [f, t, l] : edges) g.add_edge(f, t, l);
  return g;
}

double perron_of(const ForbiddenSetSFT& x) { return perron_entropy(sft_to_edge_shift(x).graph).value; }

}  // namespace

TEST(WordCount, Examples) {
  EXPECT_DOUBLE_EQ(entropy_word_count(full_shift({"0", "1"}), 10).value, 1.0);
  EntropyEstimate gm = entropy_word_count(golden_mean(), 24);
  EXPECT_NEAR(gm.value, kLogPhi, 0.05);
  EXPECT_EQ(gm.method, EntropyEstimate::Method::WordCount);
  EXPECT_EQ(gm.n_used, 24u);
  // Single orbit (ab)^inf: two words of every length.
  Graph cycle = labeled({"P", "Q"}, {{0, 1, "a"}, {1, 0, "b"}});
  EXPECT_DOUBLE_EQ(entropy_word_count(cycle, 10).value, 0.1);
  EXPECT_THROW(entropy_word_count(golden_mean(), 0), InputError);
}

TEST(WordCount, EmptyShiftIsFlagged) {
  EntropyEstimate e = entropy_word_count(sft({"0"}, {"0"}), 5);
  EXPECT_TRUE(e.empty_shift);
  EXPECT_EQ(e.value, 0.0);
}

TEST(WordCount, LargeLengthsStayExact) {
  EXPECT_DOUBLE_EQ(entropy_word_count(full_shift({"0", "1", "2", "3"}), 300).value, 2.0);
  EXPECT_NEAR(entropy_word_count(golden_mean(), 2000).value, kLogPhi, 1e-3);
}

TEST(WordCount, ApproachesPerronFromAbove) {
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 15; ++trial) {
    auto x = testing_support::random_sft(rng, {"a", "b", "c"}, 3, 2, 3);
    if (!is_irreducible(x)) continue;
    ++checked;
    const double h = perron_of(x);
    double prev = INFINITY;
    for (std::size_t n : {8, 16, 24}) {
      double e = entropy_word_count(x, n).value;
      EXPECT_GE(e, h - 1e-9);
      EXPECT_LE(e, prev + 1e-9);
      prev = e;
    }
  }
  EXPECT_GE(checked, 5);
  for (std::size_t n = 1; n < 20; ++n)
    EXPECT_GE(entropy_word_count(full_shift({"0", "1"}), n).value, entropy_word_count(full_shift({"0", "1"}), n + 1).value);
}

TEST(Perron, Examples) {
  EXPECT_NEAR(perron_entropy(IntMatrix({{1, 1}, {1, 0}})).value, kLogPhi, 1e-9);
  EXPECT_NEAR(perron_entropy(IntMatrix({{1, 1}, {1, 0}})).value, 0.694242, 1e-6);
  EXPECT_DOUBLE_EQ(perron_entropy(IntMatrix({{2}})).value, 1.0);
  EXPECT_DOUBLE_EQ(perron_entropy(IntMatrix({{1, 1}, {0, 1}})).value, 0.0);
  EXPECT_DOUBLE_EQ(perron_entropy(IntMatrix({{0, 1}, {0, 0}})).value, 0.0);
  EXPECT_EQ(perron_entropy(IntMatrix({{2}})).method, EntropyEstimate::Method::Perron);
}

TEST(Perron, MaximumOverComponents) {
  // Full 3-shift feeding a golden-mean component.
  IntMatrix a({{3, 1, 0}, {0, 1, 1}, {0, 1, 0}});
  EXPECT_NEAR(perron_entropy(a).value, std::log2(3.0), 1e-9);
  // Periodic components converge too.
  EXPECT_NEAR(perron_root(IntMatrix({{0, 2}, {2, 0}})), 2.0, 1e-9);
  EXPECT_NEAR(perron_root(IntMatrix({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}})), 1.3247179572, 1e-9);
}

TEST(Perron, AgreesWithCharacteristicPolynomialOnSmallMatrices) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a({{entry(rng), entry(rng)}, {entry(rng), entry(rng)}});
    double p = a(0, 0).get_d(), q = a(0, 1).get_d(), r = a(1, 0).get_d(), s = a(1, 1).get_d();
    double tr = p + s, det = p * s - q * r;
    double lambda = (tr + std::sqrt(tr * tr - 4 * det)) / 2;
    double expect = lambda >= 1 ? std::log2(lambda) : 0.0;
    EXPECT_NEAR(perron_entropy(a).value, expect, 1e-9) << a.str();
  }
}

TEST(Sofic, Examples) {
  Graph even_gap = labeled({"V1", "V2"}, {{0, 1, "0"}, {1, 0, "0"}, {0, 0, "1"}});
  EXPECT_NEAR(sofic_entropy(even_gap).value, 0.694242, 1e-6);
  Graph one = labeled({"U"}, {{0, 0, "0"}, {0, 0, "1"}});
  EXPECT_DOUBLE_EQ(sofic_entropy(one).value, 1.0);
  Graph cycle = labeled({"P", "Q", "R"}, {{0, 1, "a"}, {1, 2, "b"}, {2, 0, "a"}});
  EXPECT_DOUBLE_EQ(sofic_entropy(cycle).value, 0.0);
  // Not right-resolving: both U1 -> U2 edges read 1.
  Graph left = labeled({"U1", "U2"}, {{0, 0, "0"}, {0, 1, "0"}, {1, 1, "1"}, {1, 0, "1"}, {1, 0, "1"}});
  EXPECT_NEAR(sofic_entropy(left).value, 1.0, 1e-9);
}

TEST(Scale, Examples) {
  Graph two = graph_from_adjacency(IntMatrix({{2}}));
  Graph s2 = scale_entropy_construction(two, 2);
  EXPECT_EQ(s2.vertex_count(), 3u);
  EXPECT_NEAR(perron_root(adjacency(s2)), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(perron_entropy(s2).value, 0.5, 1e-9);
  EXPECT_EQ(adjacency(scale_entropy_construction(two, 1)), adjacency(two));
  Graph gm = graph_from_adjacency(IntMatrix({{1, 1}, {1, 0}}));
  EXPECT_NEAR(perron_entropy(scale_entropy_construction(gm, 3)).value, 0.231414, 1e-6);
  EXPECT_THROW(scale_entropy_construction(two, 0), InputError);
}

TEST(Scale, DividesEntropy) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> entry(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = entry(rng);
    Graph g = graph_from_adjacency(a);
    const double h = perron_entropy(g).value;
    for (std::size_t n = 1; n <= 6; ++n)
      EXPECT_NEAR(perron_entropy(scale_entropy_construction(g, n)).value * static_cast<double>(n), h, 1e-9);
  }
}

TEST(Boost, Examples) {
  Boost b2 = boost_entropy_construction(full_shift({"a", "b"}), "a", "b", 2);
  ForbiddenSetSFT x = b2.result();
  EXPECT_GE(entropy_word_count(x, 10).value, 2.0);
  for (const char* d : {"◇1", "◇2", "◇3", "◇4"}) EXPECT_TRUE(x.alphabet().contains(d));
  EXPECT_TRUE(embeds_full_two_shift(x, "◇1", "◇4", 8));
  // Word w_M is contracted first.
  ASSERT_FALSE(b2.pipeline.specs().empty());
  EXPECT_EQ(b2.pipeline.specs().front().word.str(), "baaaa");

  EXPECT_GE(perron_of(boost_entropy_construction(full_shift({"a", "b"}), "a", "b", 1).result()), 1.0);
  EXPECT_THROW(boost_entropy_construction(golden_mean(), "0", "1", 1), PreconditionError);
}

TEST(Boost, ReachesTargetEntropy) {
  for (std::size_t n = 1; n <= 3; ++n) {
    ForbiddenSetSFT x = boost_entropy_construction(full_shift({"a", "b"}), "a", "b", n).result();
    EXPECT_GE(perron_of(x), static_cast<double>(n) - 1e-9);
  }
}

TEST(ExpansionBounds, EntropyAtLeastHalved) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = testing_support::random_sft(rng, {"a", "b", "c"}, 3, 2, 3);
    const double h = perron_of(x);
    for (const auto& a : x.alphabet()) {
      const double he = perron_of(symbol_expand(x, a).sft);
      EXPECT_LE(he, h + 1e-9);
      EXPECT_GE(he, h / 2 - 1e-9);
      EXPECT_EQ(he < 1e-9, h < 1e-9);
    }
  }
}

TEST(Monotonicity, FactorsAndEmbeddings) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = testing_support::random_sft(rng, {"a", "b", "c"}, 3, 2, 3);
    // The subshift forbidding one more word embeds into x.
    auto sub = ForbiddenSetSFT(x.alphabet(), [&] {
      auto f = x.forbidden();
      f.insert(Word({"c", "c"}));
      return f;
    }());
    EXPECT_LE(perron_of(sub), perron_of(x) + 1e-9);
    // Merging c into b is a 1-block factor map; relabel the edge shift to present the image.
    EdgeShift es = sft_to_edge_shift(x);
    Graph image;
    for (const auto& v : es.graph.vertices()) image.add_vertex(v);
    for (std::size_t i = 0; i < es.graph.edge_count(); ++i) {
      const Edge& e = es.graph.edges()[i];
      const Symbol& last = es.edge_blocks[i].back();
      image.add_edge(e.from, e.to, last == "c" ? "b" : last);
    }
    if (image.edge_count() == 0) continue;
    EXPECT_LE(sofic_entropy(image).value, perron_of(x) + 1e-9);
    // The full shift on the alphabet contains x.
    EXPECT_LE(perron_of(x), std::log2(3.0) + 1e-9);
  }
}

TEST(Density, ScaledBoostsCoverTheInterval) {
  struct Recipe {
    std::size_t n1;
    std::string x, y;
    std::size_t n2;
  };
  const std::vector<Recipe> recipes{
      {0, "", "", 0},          {1, "", "", 0},          {2, "", "", 0},          {3, "", "", 0},
      {1, "◇2", "a", 1},       {1, "b", "◇2", 1},       {2, "◇4", "a", 1},       {1, "b", "◇2", 2},
      {2, "◇4", "a", 2},       {2, "b", "◇4", 1},       {1, "a", "◇2", 2},       {2, "b", "◇4", 2},
      {3, "◇8", "a", 1},       {3, "◇8", "a", 2},       {3, "b", "◇8", 1},       {3, "a", "◇8", 1},
      {3, "b", "◇8", 2},       {3, "a", "◇8", 2}};
  const ForbiddenSetSFT two = full_shift({"a", "b"});
  std::vector<double> realized;
  for (const auto& r : recipes) {
    ForbiddenSetSFT x = two;
    if (r.n1) x = boost_entropy_construction(x, "a", "b", r.n1).result();
    if (r.n2) x = boost_entropy_construction(x, r.x, r.y, r.n2).result();
    const Graph g = sft_to_edge_shift(x).graph;
    const double h = perron_entropy(g).value;
    for (std::size_t n = 1; n <= 8; ++n) {
      const double hn = perron_entropy(scale_entropy_construction(g, n)).value;
      EXPECT_NEAR(hn * static_cast<double>(n), h, 1e-9);
      realized.push_back(hn);
    }
  }
  for (int t = 100; t <= 3000; ++t) {
    const double target = t / 1000.0;
    double best = INFINITY;
    for (double h : realized) best = std::min(best, std::abs(h - target));
    EXPECT_LE(best, 0.15) << "target " << target;
  }
}

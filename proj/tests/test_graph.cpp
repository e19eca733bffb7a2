#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graphdesign/error.hpp"
#include "graphdesign/graph.hpp"
#include "graphdesign/polynomial.hpp"

using namespace graphdesign;

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) out.push_back({a, b});
  }
  return out;
}

template <typename Visit>
void for_each_combination(int size, int r, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == size - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t perfect_matchings(std::vector<int> free_vertices) {
  if (free_vertices.empty()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 1; i < free_vertices.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < free_vertices.size(); ++j) {
      if (j != i) rest.push_back(free_vertices[j]);
    }
    total += perfect_matchings(rest);
  }
  return total;
}

// Automorphisms by trying every vertex permutation.
std::uint64_t brute_automorphisms(const UnlabeledGraph& g) {
  const int v = g.vertex_count();
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.canonical_edges()) edges.insert({e.a, e.b});
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : g.canonical_edges()) {
      const int a = std::min(perm[e.a], perm[e.b]);
      const int b = std::max(perm[e.a], perm[e.b]);
      if (!edges.contains({a, b})) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(Colex, RankAndUnrankAgree) {
  const auto pairs = all_pairs(12);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(colex_rank(pairs[i]), static_cast<int>(i));
    EXPECT_EQ(colex_unrank(static_cast<int>(i)), pairs[i]);
  }
}

TEST(CanonicalForm, SingleEdge) {
  const std::vector<Edge> e{{1, 2}};
  const auto g = canonical_form(e);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g, enumerate_classes(1).front());
}

TEST(CanonicalForm, RelabelledMatchingsAgree) {
  const std::vector<Edge> a{{1, 2}, {3, 4}};
  const std::vector<Edge> b{{5, 6}, {1, 2}};
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalForm, PathDiffersFromMatching) {
  const std::vector<Edge> path{{1, 2}, {2, 3}};
  const std::vector<Edge> matching{{1, 2}, {3, 4}};
  EXPECT_NE(canonical_form(path), canonical_form(matching));
}

TEST(CanonicalForm, RejectsBadInput) {
  EXPECT_THROW(canonical_form(std::vector<Edge>{}), InvalidInputError);
  EXPECT_THROW(canonical_form(std::vector<Edge>{{1, 1}}), InvalidInputError);
  EXPECT_THROW(canonical_form(std::vector<Edge>{{1, 2}, {2, 1}}), InvalidInputError);
}

TEST(CanonicalForm, InvariantUnderRandomRelabelling) {
  std::mt19937 rng(12345);
  for (int m = 1; m <= 5; ++m) {
    for (const auto& g : enumerate_classes(m)) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> labels(20);
        std::iota(labels.begin(), labels.end(), 0);
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<Edge> edges;
        for (const auto& e : g.canonical_edges()) {
          int a = labels[e.a];
          int b = labels[e.b];
          if (rng() & 1u) std::swap(a, b);
          edges.push_back({a, b});
        }
        std::shuffle(edges.begin(), edges.end(), rng);
        ASSERT_EQ(canonical_form(edges), g) << g.to_string();
      }
    }
  }
}

TEST(CanonicalForm, CanonicalEdgesAreAFixedPoint) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& g : enumerate_classes(m)) {
      EXPECT_EQ(canonical_form(g.canonical_edges()).canonical_edges(), g.canonical_edges());
    }
  }
}

TEST(EnumerateClasses, Counts) {
  EXPECT_EQ(enumerate_classes(1).size(), 1u);
  EXPECT_EQ(enumerate_classes(2).size(), 2u);
  EXPECT_EQ(enumerate_classes(3).size(), 5u);
  EXPECT_EQ(enumerate_classes(4).size(), 11u);
  EXPECT_EQ(enumerate_classes(5).size(), 26u);
  EXPECT_THROW(enumerate_classes(0), UnsupportedError);
  EXPECT_THROW(enumerate_classes(6), UnsupportedError);
}

TEST(EnumerateClasses, MatchesBruteForceOverK2m) {
  for (int m = 1; m <= 5; ++m) {
    const auto pairs = all_pairs(2 * m);
    std::set<UnlabeledGraph> seen;
    for_each_combination(static_cast<int>(pairs.size()), m, [&](const std::vector<int>& idx) {
      std::vector<Edge> edges;
      for (int i : idx) edges.push_back(pairs[static_cast<std::size_t>(i)]);
      seen.insert(canonical_form(edges));
    });
    const auto& classes = enumerate_classes(m);
    ASSERT_EQ(seen.size(), classes.size()) << "m=" << m;
    EXPECT_TRUE(std::equal(seen.begin(), seen.end(), classes.begin()));
  }
}

TEST(UnlabeledGraph, StructuralInvariants) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& g : enumerate_classes(m)) {
      std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
      for (const auto& e : g.canonical_edges()) {
        ++degree[e.a];
        ++degree[e.b];
      }
      EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](int d) { return d > 0; }));
      EXPECT_LE(g.vertex_count(), 2 * g.edge_count());
      EXPECT_EQ(g.automorphism_count(), brute_automorphisms(g)) << g.to_string();
    }
  }
}

TEST(OrbitSize, Examples) {
  EXPECT_EQ(orbit_size(enumerate_classes(1).front(), 10), 45);
  const std::vector<Edge> matching{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
  const auto g = canonical_form(matching);
  std::vector<int> vertices(10);
  std::iota(vertices.begin(), vertices.end(), 0);
  EXPECT_EQ(orbit_size(g, 10), BigInt(perfect_matchings(vertices)));
  EXPECT_EQ(orbit_size(g, 10), 945);
  for (const auto& h : enumerate_classes(5)) {
    if (h.vertex_count() == 7) EXPECT_EQ(orbit_size(h, 6), 0);
  }
}

TEST(OrbitSize, SumsToAllEdgeSubsets) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 12; ++n) {
      BigInt total = 0;
      for (const auto& g : enumerate_classes(m)) total += orbit_size(g, n);
      EXPECT_EQ(total, binomial(n * (n - 1) / 2, m)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(OrbitSize, AgreesWithLabelledCount) {
  for (int m = 2; m <= 4; ++m) {
    const int n = 7;
    const auto pairs = all_pairs(n);
    Classifier classifier(m);
    std::vector<std::uint64_t> counts(enumerate_classes(m).size(), 0);
    std::vector<Edge> edges(static_cast<std::size_t>(m));
    for_each_combination(static_cast<int>(pairs.size()), m, [&](const std::vector<int>& idx) {
      for (int i = 0; i < m; ++i) edges[i] = pairs[idx[i]];
      ++counts[classifier.classify(edges)];
    });
    for (std::size_t c = 0; c < counts.size(); ++c) {
      EXPECT_EQ(orbit_size(enumerate_classes(m)[c], n), BigInt(counts[c]));
    }
  }
}

TEST(CountSubClasses, Examples) {
  const auto triangle = canonical_form(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  const auto path = canonical_form(std::vector<Edge>{{0, 1}, {1, 2}});
  const auto two_matching = canonical_form(std::vector<Edge>{{0, 1}, {2, 3}});
  const auto five_matching = canonical_form(std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  EXPECT_EQ(count_sub_classes(triangle, 2), (std::map<UnlabeledGraph, std::uint64_t>{{path, 3}}));
  EXPECT_EQ(count_sub_classes(five_matching, 2), (std::map<UnlabeledGraph, std::uint64_t>{{two_matching, 10}}));
  EXPECT_EQ(count_sub_classes(triangle, 3), (std::map<UnlabeledGraph, std::uint64_t>{{triangle, 1}}));
}

TEST(Classifier, AgreesWithCanonicalForm) {
  std::mt19937 rng(7);
  for (int m = 1; m <= 5; ++m) {
    Classifier classifier(m);
    const auto pairs = all_pairs(12);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<int> idx(pairs.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i) edges.push_back(pairs[idx[i]]);
      const auto& classes = enumerate_classes(m);
      const auto it = std::find(classes.begin(), classes.end(), canonical_form(edges));
      ASSERT_EQ(classifier.classify(edges), it - classes.begin());
    }
  }
}

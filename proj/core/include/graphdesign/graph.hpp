#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphdesign/polynomial.hpp"

namespace graphdesign {

// An unordered vertex pair. Constructors of graphs normalise to a < b.
struct Edge {
  int a = 0;
  int b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Position of the pair {a, b} (a < b) in colexicographic order:
// (0,1), (0,2), (1,2), (0,3), ...
constexpr int colex_rank(int a, int b) { return b * (b - 1) / 2 + a; }
constexpr int colex_rank(Edge e) { return colex_rank(e.a, e.b); }
Edge colex_unrank(int rank);

// Isomorphism class of a simple graph with no isolated vertices.
//
// The canonical edge list is the labelling over vertices 0..V-1 whose edge
// list, sorted by colex_rank, is lexicographically smallest among all V!
// relabellings. Classes compare by that rank sequence.
class UnlabeledGraph {
 public:
  UnlabeledGraph() = default;

  int edge_count() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& canonical_edges() const { return edges_; }
  std::uint64_t automorphism_count() const { return automorphism_count_; }

  // Edges as "a-b" pairs separated by spaces, vertices numbered from 1.
  std::string to_string() const;

  friend bool operator==(const UnlabeledGraph& x, const UnlabeledGraph& y) {
    return x.edges_ == y.edges_;
  }
  friend std::strong_ordering operator<=>(const UnlabeledGraph& x, const UnlabeledGraph& y);

 private:
  friend UnlabeledGraph canonical_form(std::span<const Edge> edges);

  std::vector<Edge> edges_;
  int vertex_count_ = 0;
  std::uint64_t automorphism_count_ = 0;
};

// Throws InvalidInputError on loops, duplicate edges or an empty list, and
// UnsupportedError above 16 non-isolated vertices.
UnlabeledGraph canonical_form(std::span<const Edge> edges);

// All classes with m edges (1 <= m <= 5), sorted. Computed once and cached.
const std::vector<UnlabeledGraph>& enumerate_classes(int m);

// Number of labelled copies of g inside K_n.
BigInt orbit_size(const UnlabeledGraph& g, int n);

// For each m-edge class, how many m-subsets of big's edges induce it.
std::map<UnlabeledGraph, std::uint64_t> count_sub_classes(const UnlabeledGraph& big, int m);

// Maps labelled m-edge graphs to their index in enumerate_classes(m).
// Results are memoised on the order-preserving compression of the vertex
// set, so one instance should be owned per thread.
class Classifier {
 public:
  explicit Classifier(int m);

  int edge_count() const { return m_; }
  // Vertex labels must lie in [0, 64).
  int classify(std::span<const Edge> edges);

 private:
  int m_;
  std::map<std::vector<Edge>, int> index_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace graphdesign

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphdesign/graph.hpp"
#include "graphdesign/search.hpp"

namespace graphdesign {

// An explicit block design on the edges of K_n. Points are the pairs
// {a, b} in lexicographic order; a block is a sorted list of point indices.
struct DesignInstance {
  int n = 0;
  int t = 0;
  int k = 0;
  std::int64_t lambda = 0;  // claimed
  std::vector<Edge> points;
  std::vector<std::vector<int>> blocks;  // sorted lexicographically
};

struct DesignCheck {
  bool ok = false;
  std::int64_t lambda = 0;      // common count when ok
  std::vector<int> witness;     // a t-subset of points with the wrong count
  std::int64_t witness_count = 0;
  std::string message;
};

// Edges of K_n in lexicographic order.
std::vector<Edge> complete_graph_edges(int n);

// All k-subsets of points whose graph lies in a selected class.
// column_classes[j] is the class behind column j of record.u. Refuses with
// BudgetExceededError when n > max_n.
DesignInstance expand(const SolutionRecord& record, std::span<const UnlabeledGraph> column_classes, int max_n = 9);

// Counts, for every t-subset of points, the blocks containing it. Never
// looks at a Kramer-Mesner matrix.
DesignCheck check_design(const DesignInstance& design);

// Every k-subset not in design.blocks; lambda becomes C(v-t, k-t) - lambda.
DesignInstance complement_design(const DesignInstance& design);

// The lambda = 1 solution of the (3,4) search at n = 5 (a 3-(10,4,1) design).
// Throws ConsistencyError when the search does not produce one.
SolutionRecord find_wilson_design();

}  // namespace graphdesign

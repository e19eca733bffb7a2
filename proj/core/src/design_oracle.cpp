#include "graphdesign/design_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

std::int64_t choose(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  return binomial(n, r).convert_to<std::int64_t>();
}

// Colex rank of a sorted subset: sum over i of C(x_i, i + 1).
std::int64_t subset_rank(std::span<const int> sorted) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank += choose(sorted[i], static_cast<std::int64_t>(i) + 1);
  return rank;
}

template <typename Visit>
void for_each_subset(int size, int r, Visit&& visit) {
  if (r > size || r < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(std::span<const int>(idx));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == size - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Edge> complete_graph_edges(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return edges;
}

DesignInstance expand(const SolutionRecord& record, std::span<const UnlabeledGraph> column_classes, int max_n) {
  if (record.n > max_n) {
    throw BudgetExceededError("expand: n=" + std::to_string(record.n) + " exceeds the limit " + std::to_string(max_n));
  }
  if (static_cast<int>(column_classes.size()) != record.width) {
    throw PreconditionError("expand: need one class per column of u");
  }
  const auto& classes = enumerate_classes(record.k);
  // class index in enumerate_classes(k) -> selected?
  std::vector<bool> selected(classes.size(), false);
  for (std::size_t c = 0; c < column_classes.size(); ++c) {
    if (!record.selects(c)) continue;
    const auto it = std::find(classes.begin(), classes.end(), column_classes[c]);
    if (it == classes.end()) throw PreconditionError("expand: column class has the wrong edge count");
    selected[static_cast<std::size_t>(it - classes.begin())] = true;
  }

  DesignInstance design;
  design.n = record.n;
  design.t = record.t;
  design.k = record.k;
  design.lambda = record.lambda;
  design.points = complete_graph_edges(record.n);
  Classifier classifier(record.k);
  std::vector<Edge> edges(static_cast<std::size_t>(record.k));
  for_each_subset(static_cast<int>(design.points.size()), record.k, [&](std::span<const int> chosen) {
    for (std::size_t i = 0; i < chosen.size(); ++i) edges[i] = design.points[static_cast<std::size_t>(chosen[i])];
    if (selected[static_cast<std::size_t>(classifier.classify(edges))]) design.blocks.emplace_back(chosen.begin(), chosen.end());
  });
  return design;
}

DesignCheck check_design(const DesignInstance& design) {
  const auto v = static_cast<int>(design.points.size());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(choose(v, design.t)), 0);
  for (const auto& block : design.blocks) {
    if (static_cast<int>(block.size()) != design.k) {
      return {false, 0, block, 0, "block of size " + std::to_string(block.size())};
    }
    std::vector<int> sub(static_cast<std::size_t>(design.t));
    for_each_subset(design.k, design.t, [&](std::span<const int> pick) {
      for (std::size_t i = 0; i < pick.size(); ++i) sub[i] = block[static_cast<std::size_t>(pick[i])];
      ++counts[static_cast<std::size_t>(subset_rank(sub))];
    });
  }
  DesignCheck result;
  std::int64_t rank = 0;
  bool failed = false;
  for_each_subset(v, design.t, [&](std::span<const int> subset) {
    if (failed) return;
    const std::int64_t count = counts[static_cast<std::size_t>(rank++)];
    if (count != design.lambda) {
      failed = true;
      result.witness.assign(subset.begin(), subset.end());
      result.witness_count = count;
    }
  });
  if (failed) {
    std::string points;
    for (int p : result.witness) {
      const Edge& e = design.points[static_cast<std::size_t>(p)];
      points += " " + std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
    }
    result.message = "t-subset {" + points + " } lies in " + std::to_string(result.witness_count) +
                     " blocks, expected " + std::to_string(design.lambda);
    return result;
  }
  result.ok = true;
  result.lambda = design.lambda;
  return result;
}

DesignInstance complement_design(const DesignInstance& design) {
  DesignInstance out = design;
  out.blocks.clear();
  const auto v = static_cast<int>(design.points.size());
  out.lambda = choose(v - design.t, design.k - design.t) - design.lambda;
  auto taken = design.blocks;
  std::sort(taken.begin(), taken.end());
  std::size_t next = 0;
  for_each_subset(v, design.k, [&](std::span<const int> subset) {
    if (next < taken.size() && std::equal(subset.begin(), subset.end(), taken[next].begin(), taken[next].end())) {
      ++next;
      return;
    }
    out.blocks.emplace_back(subset.begin(), subset.end());
  });
  return out;
}

SolutionRecord find_wilson_design() {
  for (const auto& s : sweep(3, 4, 5, 5).solutions) {
    if (s.lambda == 1) return s;
  }
  throw ConsistencyError("find_wilson_design: no lambda = 1 solution at (t,k,n) = (3,4,5)");
}

}  // namespace graphdesign

#include "graphdesign/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <set>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

constexpr int kMaxVertices = 16;
constexpr int kMaxClassEdges = 5;

struct CanonicalLabeling {
  std::vector<int> ranks;  // sorted colex ranks of the relabelled edges
  int vertex_count = 0;
  std::uint64_t automorphisms = 0;
};

// Branch and bound over labellings. Labels are assigned in increasing order;
// once labels 0..L-1 are placed, the edges among them are exactly the edges
// with colex rank < L(L-1)/2, so each level appends a fixed block of the
// final sorted rank list and partial lists can be compared against the best.
class CanonicalSearch {
 public:
  CanonicalSearch(const std::array<std::uint16_t, kMaxVertices>& adjacency, int vertex_count)
      : adj_(adjacency), v_(vertex_count) {}

  CanonicalLabeling run() {
    std::vector<int> current;
    descend(0, 0, current, /*better=*/true, version_);
    return {best_, v_, automorphisms_};
  }

 private:
  void descend(int level, std::uint16_t used, std::vector<int>& current, bool better,
               std::uint64_t seen_version) {
    if (level == v_) {
      if (!have_best_ || better) {
        best_ = current;
        have_best_ = true;
        automorphisms_ = 1;
        ++version_;
      } else {
        ++automorphisms_;
      }
      return;
    }
    const int base = colex_rank(0, level);
    for (int x = 0; x < v_; ++x) {
      if (used & (1u << x)) continue;
      // A child that improved the best leaves this prefix equal to the new best.
      if (seen_version != version_) {
        better = false;
        seen_version = version_;
      }
      const std::size_t mark = current.size();
      for (int a = 0; a < level; ++a) {
        if (adj_[static_cast<std::size_t>(order_[static_cast<std::size_t>(a)])] & (1u << x)) {
          current.push_back(base + a);
        }
      }
      bool child_better = better || !have_best_;
      if (!child_better) {
        const int cmp = compare_block(current, mark, base, level);
        if (cmp > 0) {
          current.resize(mark);
          continue;
        }
        child_better = cmp < 0;
      }
      order_[static_cast<std::size_t>(level)] = x;
      descend(level + 1, static_cast<std::uint16_t>(used | (1u << x)), current, child_better,
              version_);
      current.resize(mark);
    }
  }

  // Compares the block current[mark..] with best's ranks in [base, base+level).
  // A shorter block is worse: its next element has a larger colex rank.
  int compare_block(const std::vector<int>& current, std::size_t mark, int base, int level) const {
    auto lo = std::lower_bound(best_.begin(), best_.end(), base);
    auto hi = std::lower_bound(lo, best_.end(), base + level);
    auto it = current.begin() + static_cast<std::ptrdiff_t>(mark);
    for (; it != current.end() && lo != hi; ++it, ++lo) {
      if (*it != *lo) return *it < *lo ? -1 : 1;
    }
    if (it == current.end() && lo == hi) return 0;
    return it == current.end() ? 1 : -1;
  }

  const std::array<std::uint16_t, kMaxVertices>& adj_;
  int v_;
  std::array<int, kMaxVertices> order_{};
  std::vector<int> best_;
  bool have_best_ = false;
  std::uint64_t automorphisms_ = 0;
  std::uint64_t version_ = 0;
};

CanonicalLabeling canonicalize(std::span<const Edge> edges) {
  if (edges.empty()) throw InvalidInputError("canonical_form: empty edge list");
  std::vector<int> vertices;
  for (const Edge& e : edges) {
    if (e.a == e.b) throw InvalidInputError("canonical_form: loop at vertex " + std::to_string(e.a));
    vertices.push_back(e.a);
    vertices.push_back(e.b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw UnsupportedError("canonical_form: more than 16 non-isolated vertices");
  }
  auto index_of = [&](int x) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin());
  };
  std::array<std::uint16_t, kMaxVertices> adj{};
  for (const Edge& e : edges) {
    const int a = index_of(e.a);
    const int b = index_of(e.b);
    auto& row = adj[static_cast<std::size_t>(a)];
    if (row & (1u << b)) {
      throw InvalidInputError("canonical_form: duplicate edge " + std::to_string(e.a) + "-" +
                              std::to_string(e.b));
    }
    row = static_cast<std::uint16_t>(row | (1u << b));
    adj[static_cast<std::size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
  }
  return CanonicalSearch(adj, static_cast<int>(vertices.size())).run();
}

std::vector<UnlabeledGraph> build_classes(int m) {
  if (m == 1) return {canonical_form(std::vector<Edge>{{0, 1}})};
  std::set<UnlabeledGraph> found;
  for (const UnlabeledGraph& g : enumerate_classes(m - 1)) {
    const int v = g.vertex_count();
    std::vector<Edge> edges = g.canonical_edges();
    // New edge among existing vertices, to one new vertex, or between two new ones.
    for (int b = 1; b < v + 2; ++b) {
      for (int a = 0; a < b; ++a) {
        if (a > v) continue;
        const Edge e{a, b};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        found.insert(canonical_form(edges));
        edges.pop_back();
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

Edge colex_unrank(int rank) {
  int b = 1;
  while (colex_rank(0, b + 1) <= rank) ++b;
  return {rank - colex_rank(0, b), b};
}

std::strong_ordering operator<=>(const UnlabeledGraph& x, const UnlabeledGraph& y) {
  const auto& ex = x.edges_;
  const auto& ey = y.edges_;
  for (std::size_t i = 0; i < ex.size() && i < ey.size(); ++i) {
    const int rx = colex_rank(ex[i]);
    const int ry = colex_rank(ey[i]);
    if (rx != ry) return rx <=> ry;
  }
  return ex.size() <=> ey.size();
}

std::string UnlabeledGraph::to_string() const {
  std::string out;
  for (const Edge& e : edges_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
  }
  return out;
}

UnlabeledGraph canonical_form(std::span<const Edge> edges) {
  CanonicalLabeling labeling = canonicalize(edges);
  UnlabeledGraph g;
  g.vertex_count_ = labeling.vertex_count;
  g.automorphism_count_ = labeling.automorphisms;
  g.edges_.reserve(labeling.ranks.size());
  for (int r : labeling.ranks) g.edges_.push_back(colex_unrank(r));
  return g;
}

const std::vector<UnlabeledGraph>& enumerate_classes(int m) {
  if (m < 1 || m > kMaxClassEdges) {
    throw UnsupportedError("enumerate_classes: m must be in [1, 5], got " + std::to_string(m));
  }
  static std::array<std::vector<UnlabeledGraph>, kMaxClassEdges + 1> cache;
  static std::array<std::once_flag, kMaxClassEdges + 1> once;
  std::call_once(once[static_cast<std::size_t>(m)],
                 [m] { cache[static_cast<std::size_t>(m)] = build_classes(m); });
  return cache[static_cast<std::size_t>(m)];
}

BigInt orbit_size(const UnlabeledGraph& g, int n) {
  if (n < 1) throw PreconditionError("orbit_size: n must be positive");
  const int v = g.vertex_count();
  if (n < v) return 0;
  BigInt labelled = binomial(n, v);
  for (int i = 2; i <= v; ++i) labelled *= i;
  return labelled / g.automorphism_count();
}

std::map<UnlabeledGraph, std::uint64_t> count_sub_classes(const UnlabeledGraph& big, int m) {
  const auto& edges = big.canonical_edges();
  const int total = big.edge_count();
  if (m < 1 || m > total) throw PreconditionError("count_sub_classes: m out of range");
  std::map<UnlabeledGraph, std::uint64_t> counts;
  // Subsets in lexicographic order via a bitmask walk; total <= 16 edges in practice.
  std::vector<Edge> subset;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    if (std::popcount(mask) != m) continue;
    subset.clear();
    for (int i = 0; i < total; ++i) {
      if (mask & (1u << i)) subset.push_back(edges[static_cast<std::size_t>(i)]);
    }
    ++counts[canonical_form(subset)];
  }
  return counts;
}

Classifier::Classifier(int m) : m_(m) {
  const auto& classes = enumerate_classes(m);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    index_.emplace(classes[i].canonical_edges(), static_cast<int>(i));
  }
}

int Classifier::classify(std::span<const Edge> edges) {
  if (static_cast<int>(edges.size()) != m_) {
    throw InvalidInputError("Classifier: expected " + std::to_string(m_) + " edges");
  }
  std::uint64_t vertex_mask = 0;
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= 64 || e.b >= 64) {
      throw InvalidInputError("Classifier: vertex labels must lie in [0, 64)");
    }
    vertex_mask |= (std::uint64_t{1} << e.a) | (std::uint64_t{1} << e.b);
  }
  std::array<int, 8> codes{};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto below = [&](int x) {
      return std::popcount(vertex_mask & ((std::uint64_t{1} << x) - 1));
    };
    int a = below(edges[i].a);
    int b = below(edges[i].b);
    if (a > b) std::swap(a, b);
    codes[i] = colex_rank(a, b);
  }
  std::sort(codes.begin(), codes.begin() + m_);
  std::uint64_t key = 0;
  for (int i = 0; i < m_; ++i) key = (key << 7) | static_cast<std::uint64_t>(codes[static_cast<std::size_t>(i)] + 1);

  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const UnlabeledGraph g = canonical_form(edges);
  auto found = index_.find(g.canonical_edges());
  if (found == index_.end()) throw ConsistencyError("Classifier: graph " + g.to_string() + " not enumerated");
  memo_.emplace(key, found->second);
  return found->second;
}

}  // namespace graphdesign

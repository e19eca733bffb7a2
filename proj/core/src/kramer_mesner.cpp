#include "graphdesign/kramer_mesner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

constexpr int kIntegralityPoints = 20;
constexpr int kMinEvaluationN = 5;

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max()) {
    throw IntegralityError("value overflows 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

// Enumerates all r-subsets of {0..size-1} in lexicographic order.
template <typename Visit>
void for_each_subset(int size, int r, Visit&& visit) {
  if (r > size) return;
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

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::vector<std::uint64_t> count_row(const UnlabeledGraph& t_class, int k, int n,
                                     Classifier& classifier) {
  const int t = t_class.edge_count();
  if (classifier.edge_count() != k || t >= k) {
    throw PreconditionError("count_row: need t < k and a classifier for k edges");
  }
  if (n < t_class.vertex_count() || n > 64) {
    throw PreconditionError("count_row: n=" + std::to_string(n) + " outside [" +
                            std::to_string(t_class.vertex_count()) + ", 64]");
  }
  const auto& base = t_class.canonical_edges();
  std::vector<Edge> remaining;
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) {
      const Edge e{a, b};
      if (std::find(base.begin(), base.end(), e) == base.end()) remaining.push_back(e);
    }
  }
  std::vector<std::uint64_t> counts(enumerate_classes(k).size(), 0);
  std::vector<Edge> edges(base.begin(), base.end());
  edges.resize(static_cast<std::size_t>(k));
  for_each_subset(static_cast<int>(remaining.size()), k - t, [&](std::span<const int> chosen) {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      edges[static_cast<std::size_t>(t) + i] = remaining[static_cast<std::size_t>(chosen[i])];
    }
    ++counts[static_cast<std::size_t>(classifier.classify(edges))];
  });
  return counts;
}

std::uint64_t count_entry(const UnlabeledGraph& t_class, const UnlabeledGraph& k_class, int n) {
  const int k = k_class.edge_count();
  if (t_class.edge_count() >= k) throw PreconditionError("count_entry: need t < k");
  if (n < 2 * k) {
    throw PreconditionError("count_entry: n=" + std::to_string(n) + " below 2k=" + std::to_string(2 * k));
  }
  const auto& classes = enumerate_classes(k);
  const auto it = std::find(classes.begin(), classes.end(), k_class);
  Classifier classifier(k);
  return count_row(t_class, k, n, classifier)[static_cast<std::size_t>(it - classes.begin())];
}

KMTable build_symbolic(int t, int k) {
  if (t < 2 || t >= k || k > 5) {
    throw UnsupportedError("build_symbolic: need 2 <= t < k <= 5, got t=" + std::to_string(t) +
                           " k=" + std::to_string(k));
  }
  KMTable table;
  table.t = t;
  table.k = k;
  table.row_classes = enumerate_classes(t);
  table.col_classes = enumerate_classes(k);
  const std::size_t cols = table.col_classes.size();

  const int degree_bound = 2 * (k - t);
  const int first_n = 2 * k;
  const int check_n = first_n + degree_bound + 1;
  Classifier classifier(k);

  for (const UnlabeledGraph& row_class : table.row_classes) {
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> samples(cols);
    for (int n = first_n; n < check_n; ++n) {
      const auto counts = count_row(row_class, k, n, classifier);
      for (std::size_t c = 0; c < cols; ++c) {
        samples[c].emplace_back(n, static_cast<std::int64_t>(counts[c]));
      }
    }
    const auto check_counts = count_row(row_class, k, check_n, classifier);

    std::vector<RationalPoly> row;
    row.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      RationalPoly p = interpolate(samples[c]);
      const auto predicted = eval_int(p, check_n);
      if (predicted != static_cast<std::int64_t>(check_counts[c])) {
        throw ConsistencyError("build_symbolic: entry (" + row_class.to_string() + " | " +
                               table.col_classes[c].to_string() + ") exceeds degree " +
                               std::to_string(degree_bound) + ": predicted " + std::to_string(predicted) +
                               " counted " + std::to_string(check_counts[c]) + " at n=" +
                               std::to_string(check_n));
      }
      for (int n = kMinEvaluationN; n < kMinEvaluationN + kIntegralityPoints; ++n) {
        const std::int64_t value = eval_int(p, n);  // throws when not integral
        if (n >= row_class.vertex_count() && value < 0) {
          throw ConsistencyError("build_symbolic: negative count " + std::to_string(value) + " at n=" +
                                 std::to_string(n));
        }
      }
      row.push_back(std::move(p));
    }
    table.entries.push_back(std::move(row));
  }
  return table;
}

PaperIndexing match_paper_indices(std::span<const KMTable> computed, std::span<const KMTable> golden) {
  if (computed.empty() || computed.size() != golden.size()) {
    throw MatchingError("match_paper_indices: need one golden table per computed table");
  }
  const std::size_t cols = computed.front().cols();
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (computed[i].cols() != cols || golden[i].cols() != cols || computed[i].rows() != golden[i].rows()) {
      throw MatchingError("match_paper_indices: table shapes differ");
    }
  }

  // Polynomials rendered once; equal strings <=> equal polynomials.
  auto render = [](const KMTable& table) {
    std::vector<std::vector<std::string>> out(table.rows());
    for (std::size_t r = 0; r < table.rows(); ++r) {
      for (const auto& p : table.entries[r]) out[r].push_back(p.to_string());
    }
    return out;
  };
  std::vector<std::vector<std::vector<std::string>>> comp_str;
  std::vector<std::vector<std::vector<std::string>>> gold_str;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    comp_str.push_back(render(computed[i]));
    gold_str.push_back(render(golden[i]));
  }

  std::map<std::string, std::vector<int>> golden_groups;
  for (std::size_t c = 0; c < cols; ++c) {
    std::string key;
    for (const auto& table : gold_str) {
      for (const auto& row : table) key += row[c] + "|";
      key += "#";
    }
    golden_groups[key].push_back(static_cast<int>(c));
  }

  std::vector<std::vector<int>> perms;  // per table: internal -> reference
  for (const auto& table : computed) {
    std::vector<int> p(table.rows());
    std::iota(p.begin(), p.end(), 0);
    perms.push_back(std::move(p));
  }

  std::uint64_t solutions = 0;
  PaperIndexing found;
  // Odometer over the product of all row permutations.
  while (true) {
    std::vector<std::vector<int>> inverse(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      inverse[i].resize(perms[i].size());
      for (std::size_t r = 0; r < perms[i].size(); ++r) {
        inverse[i][static_cast<std::size_t>(perms[i][r])] = static_cast<int>(r);
      }
    }
    std::map<std::string, std::vector<int>> groups;
    for (std::size_t c = 0; c < cols; ++c) {
      std::string key;
      for (std::size_t i = 0; i < comp_str.size(); ++i) {
        for (int internal : inverse[i]) key += comp_str[i][static_cast<std::size_t>(internal)][c] + "|";
        key += "#";
      }
      groups[key].push_back(static_cast<int>(c));
    }
    bool ok = groups.size() == golden_groups.size();
    std::uint64_t ways = 1;
    for (auto it = groups.begin(), jt = golden_groups.begin(); ok && it != groups.end(); ++it, ++jt) {
      ok = it->first == jt->first && it->second.size() == jt->second.size();
      if (ok) ways *= factorial(static_cast<int>(it->second.size()));
    }
    if (ok) {
      solutions += ways;
      found.row_perms = perms;
      found.col_perm.assign(cols, -1);
      for (const auto& [key, members] : groups) {
        const auto& targets = golden_groups.at(key);
        for (std::size_t m = 0; m < members.size(); ++m) {
          found.col_perm[static_cast<std::size_t>(members[m])] = targets[m];
        }
      }
    }

    std::size_t i = 0;
    while (i < perms.size() && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
    if (i == perms.size()) break;
  }

  if (solutions == 0) throw MatchingError("match_paper_indices: no bijection matches the reference tables");
  if (solutions > 1) {
    throw MatchingError("match_paper_indices: ambiguous, " + std::to_string(solutions) +
                        " bijections match the reference tables");
  }
  return found;
}

PaperIndexing match_paper_indices(const KMTable& computed_25, const KMTable& computed_35) {
  const std::vector<KMTable> computed{computed_25, computed_35};
  const std::vector<KMTable> golden{golden_table(2, 5), golden_table(3, 5)};
  return match_paper_indices(computed, golden);
}

KMTable apply_paper_order(const KMTable& table, std::span<const int> row_perm, std::span<const int> col_perm) {
  if (row_perm.size() != table.rows() || col_perm.size() != table.cols()) {
    throw PreconditionError("apply_paper_order: permutation sizes do not match the table");
  }
  KMTable out;
  out.t = table.t;
  out.k = table.k;
  out.entries.assign(table.rows(), std::vector<RationalPoly>(table.cols()));
  if (!table.row_classes.empty()) out.row_classes.resize(table.rows());
  if (!table.col_classes.empty()) out.col_classes.resize(table.cols());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const auto pr = static_cast<std::size_t>(row_perm[r]);
    if (!table.row_classes.empty()) out.row_classes[pr] = table.row_classes[r];
    for (std::size_t c = 0; c < table.cols(); ++c) {
      out.entries[pr][static_cast<std::size_t>(col_perm[c])] = table.entries[r][c];
    }
  }
  for (std::size_t c = 0; c < table.cols(); ++c) {
    if (!table.col_classes.empty()) out.col_classes[static_cast<std::size_t>(col_perm[c])] = table.col_classes[c];
  }
  out.paper_row_perm.assign(row_perm.begin(), row_perm.end());
  out.paper_col_perm.assign(col_perm.begin(), col_perm.end());
  return out;
}

const PaperTables& paper_tables() {
  static PaperTables tables;
  static std::once_flag once;
  std::call_once(once, [] {
    const KMTable w25 = build_symbolic(2, 5);
    const KMTable w35 = build_symbolic(3, 5);
    tables.indexing = match_paper_indices(w25, w35);
    tables.w25 = apply_paper_order(w25, tables.indexing.row_perms[0], tables.indexing.col_perm);
    tables.w35 = apply_paper_order(w35, tables.indexing.row_perms[1], tables.indexing.col_perm);
    if (tables.w25.entries != golden_table(2, 5).entries || tables.w35.entries != golden_table(3, 5).entries) {
      throw ConsistencyError("paper_tables: matched tables differ from the reference data");
    }
  });
  return tables;
}

const KMTable& km_table(int t, int k) {
  if (k == 5 && t == 2) return paper_tables().w25;
  if (k == 5 && t == 3) return paper_tables().w35;
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<KMTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{t, k}];
  if (!slot) slot = std::make_unique<KMTable>(build_symbolic(t, k));
  return *slot;
}

EvaluatedKM evaluate(const KMTable& table, int n) {
  if (n < kMinEvaluationN) {
    throw PreconditionError("evaluate: n must be at least 5, got " + std::to_string(n));
  }
  if (table.rows() > 64 || table.cols() > 64) throw UnsupportedError("evaluate: more than 64 classes");
  EvaluatedKM out;
  out.t = table.t;
  out.k = table.k;
  out.n = n;
  out.v = static_cast<std::int64_t>(n) * (n - 1) / 2;
  out.row_sum = to_int64(binomial(out.v - table.t, table.k - table.t));
  out.matrix.assign(table.rows(), std::vector<std::int64_t>(table.cols()));
  for (std::size_t r = 0; r < table.rows(); ++r) {
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < table.cols(); ++c) {
      out.matrix[r][c] = eval_int(table.entries[r][c], n);
      sum += out.matrix[r][c];
    }
    if (sum != out.row_sum) {
      throw ConsistencyError("evaluate: row " + std::to_string(r + 1) + " sums to " + std::to_string(sum) +
                             ", expected " + std::to_string(out.row_sum) + " at n=" + std::to_string(n));
    }
    if (!table.row_classes.empty() && table.row_classes[r].vertex_count() > n) {
      out.empty_row_mask |= std::uint64_t{1} << r;
    }
  }
  for (std::size_t c = 0; c < table.cols(); ++c) {
    if (!table.col_classes.empty() && table.col_classes[c].vertex_count() > n) {
      out.empty_col_mask |= std::uint64_t{1} << c;
    }
  }
  return out;
}

}  // namespace graphdesign

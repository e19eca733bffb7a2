#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphdesign/graph.hpp"
#include "graphdesign/polynomial.hpp"

namespace graphdesign {

// Symbolic Kramer-Mesner matrix W_{t,k} for the induced action of S_n on
// the edges of K_n. Row i is a t-edge class, column j a k-edge class, and
// entry (i, j) counts the k-edge graphs of class j containing a fixed copy
// of class i, as a polynomial in n.
struct KMTable {
  int t = 0;
  int k = 0;
  // Empty for tables transcribed from reference data.
  std::vector<UnlabeledGraph> row_classes;
  std::vector<UnlabeledGraph> col_classes;
  std::vector<std::vector<RationalPoly>> entries;  // [row][col]
  // internal index -> reference index (0-based); empty until matched.
  std::vector<int> paper_row_perm;
  std::vector<int> paper_col_perm;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
  const RationalPoly& entry(std::size_t row, std::size_t col) const { return entries[row][col]; }
};

// W evaluated at a concrete n.
//
// matrix holds the raw polynomial values for every row, so all rows sum to
// row_sum. A row whose t-edge class needs more than n vertices has no orbit
// at this n; such rows are flagged in empty_row_mask and carry no
// constraint. Columns whose k-edge class needs more than n vertices are
// flagged in empty_col_mask and are zero on every non-empty row.
struct EvaluatedKM {
  int t = 0;
  int k = 0;
  int n = 0;
  std::int64_t v = 0;
  std::int64_t row_sum = 0;  // C(v - t, k - t)
  std::vector<std::vector<std::int64_t>> matrix;
  std::uint64_t empty_col_mask = 0;
  std::uint64_t empty_row_mask = 0;

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
  bool row_active(std::size_t r) const { return !(empty_row_mask >> r & 1u); }
  bool col_active(std::size_t c) const { return !(empty_col_mask >> c & 1u); }
};

// For one fixed labelled copy of t_class in K_n, the number of k-edge
// supersets falling in each class of enumerate_classes(k). Brute force over
// all (k - t)-subsets of the remaining edges. Requires
// t_class.vertex_count() <= n <= 64.
std::vector<std::uint64_t> count_row(const UnlabeledGraph& t_class, int k, int n,
                                     Classifier& classifier);

// Single entry of W at n; requires n >= 2k so every orbit is non-empty.
std::uint64_t count_entry(const UnlabeledGraph& t_class, const UnlabeledGraph& k_class, int n);

// Builds W_{t,k} (2 <= t < k <= 5) in internal class order by counting at
// 2(k-t)+1 consecutive n from 2k and interpolating. Every entry is then
// checked against a fresh count at the next n and for integrality at 20
// more points; a disagreement raises ConsistencyError.
KMTable build_symbolic(int t, int k);

// Transcribed reference matrices, rows and columns in reference order.
// Available for (t, k) in {(2,5), (3,5)}; otherwise UnavailableError.
KMTable golden_table(int t, int k);

struct PaperIndexing {
  std::vector<std::vector<int>> row_perms;  // one per table: internal -> reference
  std::vector<int> col_perm;                // shared: internal -> reference
};

// Finds the unique joint relabelling of rows (per table) and columns
// (shared) under which every computed table equals its golden counterpart
// as polynomials. Throws MatchingError when none or several exist.
PaperIndexing match_paper_indices(std::span<const KMTable> computed, std::span<const KMTable> golden);

// Convenience overload for the (2,5)/(3,5) pair against the reference data.
PaperIndexing match_paper_indices(const KMTable& computed_25, const KMTable& computed_35);

// Reorders table into reference order and records the permutations.
KMTable apply_paper_order(const KMTable& table, std::span<const int> row_perm,
                          std::span<const int> col_perm);

// Built, matched and verified against the golden data once per process.
struct PaperTables {
  KMTable w25;
  KMTable w35;
  PaperIndexing indexing;
};
const PaperTables& paper_tables();

// W_{t,k} ready for searching: reference order for k = 5 and t in {2,3},
// internal order otherwise. Cached.
const KMTable& km_table(int t, int k);

// Throws ConsistencyError when a row does not sum to C(v-t, k-t).
EvaluatedKM evaluate(const KMTable& table, int n);

}  // namespace graphdesign

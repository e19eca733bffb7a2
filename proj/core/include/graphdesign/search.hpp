#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphdesign/kramer_mesner.hpp"

namespace graphdesign {

// One graphical design: an orbit selection u with W u = lambda * 1.
//
// u is read as a width-digit binary number whose most significant digit
// is column 1, so u_string() prints column 1 first and ordering by u is
// ordering by that string.
struct SolutionRecord {
  int t = 0;
  int k = 0;
  int n = 0;
  std::int64_t v = 0;
  std::int64_t lambda = 0;
  std::uint64_t u = 0;
  int width = 0;

  bool selects(std::size_t column) const { return (u >> (width - 1 - static_cast<int>(column))) & 1u; }
  std::string u_string() const;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
  friend std::strong_ordering operator<=>(const SolutionRecord& a, const SolutionRecord& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.u <=> b.u;
  }
};

// Bit for 0-based column `column` in the u encoding above.
constexpr std::uint64_t column_bit(std::size_t column, std::size_t width) {
  return std::uint64_t{1} << (width - 1 - column);
}

std::uint64_t parse_u(std::string_view bits);

struct PsiCatalogue {
  int t = 0;
  int k = 0;
  int n_min = 0;
  int n_max = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> entries;  // (v, lambda) -> count
  std::uint64_t total_solutions = 0;
};

PsiCatalogue make_catalogue(int t, int k, int n_min, int n_max, std::span<const SolutionRecord> solutions);

// Binary-reflected Gray code walk over a set of columns that keeps one
// running sum per row. values[c][r] is column c's contribution to row r.
class GrayWalker {
 public:
  explicit GrayWalker(std::vector<std::vector<std::int64_t>> values);
  // Needed when values is empty.
  GrayWalker(std::vector<std::vector<std::int64_t>> values, std::size_t rows);

  // Jump to the index-th word of the Gray sequence, recomputing sums.
  void seek(std::uint64_t index);
  // Advance to the next word; one add or subtract per row. Requires
  // index() < 2^columns() - 1.
  void step();

  std::uint64_t index() const { return index_; }
  std::uint64_t mask() const { return mask_; }  // bit c set <=> column c selected
  std::span<const std::int64_t> sums() const { return sums_; }
  std::size_t columns() const { return values_.size(); }

 private:
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<std::int64_t> sums_;
  std::uint64_t index_ = 0;
  std::uint64_t mask_ = 0;
};

// lambda when u selects only non-empty columns and all active rows of
// W u agree; recomputed from scratch.
std::optional<std::int64_t> solution_lambda(const EvaluatedKM& ekm, std::uint64_t u);

// Every u over the non-empty columns with equal active row sums lambda,
// 1 <= lambda and 2 lambda <= C(v-t, k-t), sorted by (lambda, u). The
// cube is split into chunks over `jobs` threads; output does not depend on jobs.
std::vector<SolutionRecord> enumerate_solutions(const EvaluatedKM& ekm, int jobs = 1);

struct SweepResult {
  PsiCatalogue catalogue;
  std::vector<SolutionRecord> solutions;  // sorted by (n, lambda, u)
};

// enumerate_solutions for each n in [n_min, n_max] on km_table(t, k).
SweepResult sweep(int t, int k, int n_min, int n_max, int jobs = 1);

// Flips u on every non-empty column; lambda becomes C(v-t, k-t) - lambda.
// The result may exceed the half-sum normalisation.
SolutionRecord complement(const SolutionRecord& record, const EvaluatedKM& ekm);

// Default worker count: GRAPHDESIGN_JOBS when set, else hardware concurrency.
int default_jobs();

}  // namespace graphdesign

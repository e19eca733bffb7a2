#include "graphdesign/bounds.hpp"

#include <algorithm>
#include <functional>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

RationalPoly n_choose_2() {
  const RationalPoly n = RationalPoly::variable();
  return n * (n - RationalPoly(1)) * Rational(1, 2);
}

// C(C(n,2) - t, 5 - t), the common row sum.
RationalPoly row_sum_poly(int t) { return binom_of_poly(n_choose_2() - RationalPoly(t), 5 - t); }

RationalPoly from_ints(std::initializer_list<std::int64_t> high_to_low) {
  std::vector<Rational> coeffs;
  for (auto c : high_to_low) coeffs.emplace_back(c);
  std::reverse(coeffs.begin(), coeffs.end());
  return RationalPoly(std::move(coeffs));
}

const RationalPoly& entry(const KMTable& w, int row, int column) {
  return w.entry(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(column - 1));
}

// Column in the set whose entry in `row` is smallest for all large n.
int eventual_argmin(const KMTable& w, int row, const std::vector<int>& columns) {
  int best = columns.front();
  for (int c : columns) {
    if (eventual_sign(entry(w, row, c) - entry(w, row, best)) < 0) best = c;
  }
  return best;
}

void finish(LemmaRecord& rec, const RationalPoly& printed) {
  rec.inequality_poly = primitive_part(rec.lower_bound - rec.upper_bound);
  rec.printed_poly = primitive_part(printed);
  rec.matches_printed = rec.inequality_poly == rec.printed_poly;
  rec.threshold = positivity_threshold(rec.inequality_poly);
  rec.printed_threshold = positivity_threshold(rec.printed_poly);
}

struct Stage25 {
  int lambda_index;
  std::vector<int> orbits;
  RationalPoly printed;
};

std::vector<LemmaRecord> stages_25() {
  const KMTable w = golden_table(2, 5);
  const auto lambda = lambda_chain(mu_sums(w, 1));
  const RationalPoly total = row_sum_poly(2);
  const std::vector<Stage25> stages = {
      {6, {20}, from_ints({1, -69, 1085, -8435, 36642, -84664, 80832})},
      {5, {13, 21, 22}, from_ints({3, -295, 4475, -28541, 85198, -98184})},
      {4, {7, 8, 11, 16, 18, 24}, from_ints({3, -1154, 14721, -64450, 95256})},
      {3, {2, 6, 9, 10, 12, 17, 19, 23, 25}, from_ints({1, -546, 4541, -9516})},
      {2, {3, 4, 5, 14, 15}, from_ints({1, -59, 216})},
  };
  std::vector<LemmaRecord> out;
  int stage = 1;
  for (const auto& s : stages) {
    LemmaRecord rec;
    rec.t = 2;
    rec.k = 5;
    rec.stage = stage++;
    rec.orbit_indices = s.orbits;
    // lambda >= lambda_i from the orbits already forced, counted on row 2;
    // some orbit of the set is missing, so row 1 loses at least its smallest entry.
    rec.witness_column = eventual_argmin(w, 1, s.orbits);
    rec.lower_bound = lambda.at(s.lambda_index);
    rec.upper_bound = total - entry(w, 1, rec.witness_column);
    finish(rec, s.printed);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<LemmaRecord> stages_35() {
  const KMTable w = golden_table(3, 5);
  const RationalPoly total = row_sum_poly(3);
  const RationalPoly n = RationalPoly::variable();
  std::vector<LemmaRecord> out;

  // B contains Orb(G_7) by complementation, so lambda >= W[1][7]. Missing
  // Orb(G_20) costs row 2 its entry W[2][20].
  LemmaRecord first;
  first.t = 3;
  first.k = 5;
  first.stage = 1;
  first.orbit_indices = {20, 21, 22, 26};
  first.witness_column = 20;
  first.lower_bound = entry(w, 1, 7);
  first.upper_bound = total - entry(w, 2, 20);
  finish(first, (n - RationalPoly(4)) * from_ints({1, -38, 231, -498}));
  out.push_back(std::move(first));

  // With A = complement of B, lambda' counts blocks of A through G_5^(3).
  const std::vector<int> forced_b = {7, 20, 21, 22, 26};
  LemmaRecord second;
  second.t = 3;
  second.k = 5;
  second.stage = 2;
  second.complement_side = true;
  second.orbit_indices = {2, 6, 11, 13, 16, 18, 24};
  second.witness_column = 2;
  second.lower_bound = entry(w, 1, 2);
  second.upper_bound = complement_upper_bound_35(forced_b);
  finish(second, from_ints({1, -20, 95, -120}));
  out.push_back(std::move(second));

  std::vector<int> forced_more = forced_b;
  forced_more.insert(forced_more.end(), out.back().orbit_indices.begin(), out.back().orbit_indices.end());
  LemmaRecord third;
  third.t = 3;
  third.k = 5;
  third.stage = 3;
  third.complement_side = true;
  third.orbit_indices = {1, 3, 4, 5, 8, 9, 10, 12, 14, 15, 17, 19, 23, 25};
  third.witness_column = 1;
  third.lower_bound = entry(w, 1, 1);
  third.upper_bound = complement_upper_bound_35(forced_more);
  finish(third, RationalPoly(from_ints({3, -9})) - RationalPoly(54));
  out.push_back(std::move(third));
  return out;
}

}  // namespace

std::map<int, RationalPoly> mu_sums(const KMTable& table, std::size_t row) {
  if (row >= table.rows()) throw PreconditionError("mu_sums: row out of range");
  std::map<int, RationalPoly> mu;
  for (const auto& p : table.entries[row]) {
    if (p.is_zero()) continue;
    mu[p.degree()] += p;
  }
  return mu;
}

std::map<int, RationalPoly> lambda_chain(const std::map<int, RationalPoly>& mu) {
  std::map<int, RationalPoly> lambda;
  RationalPoly running;
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    running += it->second;
    lambda[it->first] = running;
  }
  return lambda;
}

std::vector<LemmaRecord> lemma_thresholds(int t, int k) {
  if (k == 5 && t == 2) return stages_25();
  if (k == 5 && t == 3) return stages_35();
  throw UnsupportedError("lemma_thresholds: only (2,5) and (3,5) are available");
}

void verify_printed(std::span<const LemmaRecord> records) {
  std::string report;
  for (const auto& rec : records) {
    if (rec.matches_printed) continue;
    report += " (" + std::to_string(rec.t) + "," + std::to_string(rec.k) + ") stage " + std::to_string(rec.stage) +
              ": derived " + rec.inequality_poly.to_string() + " vs published " + rec.printed_poly.to_string() + ";";
  }
  if (!report.empty()) throw TranscriptionError("published polynomials not reproduced:" + report);
}

std::int64_t nonexistence_bound(int t, int k) {
  std::int64_t stated = 0;
  if (k == 5 && t == 2) {
    stated = 538;
  } else if (k == 5 && t == 3) {
    stated = 34;
  } else {
    throw UnsupportedError("nonexistence_bound: only (2,5) and (3,5) are available");
  }
  std::int64_t worst = 0;
  for (const auto& rec : lemma_thresholds(t, k)) worst = std::max(worst, rec.threshold);
  if (worst > stated) {
    throw ConsistencyError("nonexistence_bound: lemma threshold " + std::to_string(worst) +
                           " exceeds stated bound " + std::to_string(stated));
  }
  return stated;
}

RationalPoly complement_upper_bound_35(std::span<const int> columns_in_b) {
  const KMTable w = golden_table(3, 5);
  RationalPoly sum;
  for (int c = 1; c <= static_cast<int>(w.cols()); ++c) {
    if (std::find(columns_in_b.begin(), columns_in_b.end(), c) != columns_in_b.end()) continue;
    sum += entry(w, 5, c);
  }
  return sum;
}

std::vector<std::int64_t> degenerate_first_column_n(std::int64_t max_n) {
  const KMTable w = golden_table(2, 5);
  const RationalPoly diff = entry(w, 1, 1) - entry(w, 2, 1);
  std::vector<std::int64_t> roots;
  for (std::int64_t x = 0; x <= max_n; ++x) {
    if (diff(Rational(x)) == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace graphdesign

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "graphdesign/kramer_mesner.hpp"
#include "graphdesign/polynomial.hpp"

namespace graphdesign {

// One step of the complement-chain argument that bounds n for k = 5.
//
// The step assumes the orbits in orbit_indices are not all in B (or, on
// the complement side, that one of them lies in A = complement of B), which
// gives lower_bound <= lambda <= upper_bound (lambda' for the complement).
// That is impossible once inequality_poly, the primitive integer form of
// lower_bound - upper_bound, turns positive; threshold is where it does.
struct LemmaRecord {
  int t = 0;
  int k = 0;
  int stage = 0;
  bool complement_side = false;
  std::vector<int> orbit_indices;  // reference column numbers, 1-based
  int witness_column = 0;          // column whose entry enters upper/lower bound
  RationalPoly lower_bound;
  RationalPoly upper_bound;
  RationalPoly inequality_poly;
  RationalPoly printed_poly;  // published form, primitive
  bool matches_printed = false;
  std::int64_t threshold = 0;
  std::int64_t printed_threshold = 0;
};

// Entries of one row grouped by polynomial degree and summed.
std::map<int, RationalPoly> mu_sums(const KMTable& table, std::size_t row);

// lambda_top = mu_top and lambda_i = lambda_{i+1} + mu_i, down to the lowest degree present.
std::map<int, RationalPoly> lambda_chain(const std::map<int, RationalPoly>& mu);

// Rebuilds every stage for (t, k) in {(2,5), (3,5)} from the reference
// matrices. Mismatches with the published polynomials are reported in the
// records, not thrown; see verify_printed.
std::vector<LemmaRecord> lemma_thresholds(int t, int k);

// Throws TranscriptionError listing every record whose derived polynomial
// differs from the published one.
void verify_printed(std::span<const LemmaRecord> records);

// Published bound n0: no graphical design for n >= n0. Throws
// ConsistencyError when a lemma threshold exceeds it.
std::int64_t nonexistence_bound(int t, int k);

// Upper bound on lambda' from the blocks of A containing the last 3-edge
// class, when B is known to contain the given reference columns.
RationalPoly complement_upper_bound_35(std::span<const int> columns_in_b);

// Integers n in [0, max_n] where both rows of W_{2,5} agree in column 1.
// Only then can B = all 5-sets minus that orbit be a design.
std::vector<std::int64_t> degenerate_first_column_n(std::int64_t max_n = 1000);

}  // namespace graphdesign

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphdesign/search.hpp"

namespace graphdesign {

using PsiPair = std::pair<std::int64_t, std::int64_t>;  // (v, lambda)

// Parameter sets listed for a (t, k) whose Psi is claimed complete.
struct CompleteRow {
  int t = 0;
  int k = 0;
  std::vector<PsiPair> pairs;  // well-formed entries only
  std::size_t stated_size = 0;
};

struct KnownSolutions {
  PsiPair pair;
  std::vector<std::string> vectors;  // reference column 1 first
};

struct Erratum {
  int t = 0;
  int k = 0;
  PsiPair pair;
  std::uint64_t count = 0;
};

// Entries of the reference tables that are malformed or impossible as printed.
struct SuspectRow {
  int t = 0;
  int k = 0;
  std::string as_printed;
  std::vector<PsiPair> candidates;
  std::string note;
};

struct GoldenTables {
  std::vector<CompleteRow> psi_complete;
  std::vector<KnownSolutions> psi35_solutions;
  std::vector<Erratum> errata;
  std::vector<SuspectRow> suspect_rows;
  // Informational: previously known parameter sets for (2,5) and (3,5).
  std::vector<CompleteRow> psi_partial;
};

const GoldenTables& golden_tables();

// What the reference data pins down for one (t, k).
struct GoldenSubset {
  int t = 0;
  int k = 0;
  bool complete = false;  // pairs are the whole of Psi(t,k)
  std::map<PsiPair, std::optional<std::uint64_t>> entries;  // pair -> solution count, when known
  std::optional<std::size_t> expected_pairs;
  std::optional<std::uint64_t> expected_solutions;
  int support_n_max = 0;  // every known design has n <= this
  std::vector<SuspectRow> suspects;
};

// Throws UnavailableError for (t, k) without reference data.
GoldenSubset golden_subset(int t, int k);

struct CountMismatch {
  PsiPair pair;
  std::uint64_t computed = 0;
  std::uint64_t expected = 0;
};

struct CatalogueDiff {
  std::vector<PsiPair> only_computed;
  std::vector<PsiPair> only_golden;
  std::vector<CountMismatch> count_mismatches;
  std::vector<std::string> total_mismatches;
  std::vector<std::string> suspect_notes;  // informational, never failures

  bool empty() const {
    return only_computed.empty() && only_golden.empty() && count_mismatches.empty() && total_mismatches.empty();
  }
  std::string to_string() const;
};

// Golden pairs are compared only inside the searched v range; totals only
// when the range covers all known designs.
CatalogueDiff diff_catalogues(const PsiCatalogue& computed, const GoldenSubset& golden);

}  // namespace graphdesign

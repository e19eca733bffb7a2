#include "graphdesign/catalogue.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

GoldenTables build_golden() {
  GoldenTables g;
  g.psi_complete.push_back({2, 3, {{10, 4}, {15, 1}, {28, 6}, {28, 10}, {55, 25}}, 5});
  g.psi_complete.push_back(
      {2,
       4,
       {{10, 2},      {10, 4},      {10, 8},      {10, 10},     {10, 12},     {15, 6},      {15, 24},
        {15, 36},     {21, 6},      {21, 12},     {21, 18},     {21, 36},     {21, 42},     {21, 45},
        {21, 48},     {21, 51},     {21, 54},     {21, 57},     {21, 60},     {21, 63},     {21, 66},
        {21, 69},     {21, 72},     {21, 75},     {21, 78},     {21, 81},     {21, 84},     {28, 5},
        {28, 55},     {28, 80},     {28, 85},     {28, 95},     {28, 120},    {28, 125},    {28, 135},
        {28, 150},    {36, 15},     {36, 90},     {36, 111},    {36, 120},    {36, 135},    {36, 165},
        {36, 210},    {36, 231},    {36, 240},    {36, 255},    {36, 276},    {45, 63},     {45, 105},
        {45, 252},    {45, 357},    {45, 378},    {45, 420},    {55, 168},    {55, 336},    {55, 504},
        {78, 630},    {78, 1080},   {78, 1350},   {91, 836},    {91, 1430},   {91, 1496},   {105, 1320},
        {105, 1326},  {105, 1650},  {105, 1656},  {105, 1782},  {105, 1788},  {105, 1980},  {105, 1986},
        {105, 2112},  {105, 2118},  {105, 2442},  {105, 2448},  {153, 4935},  {153, 5025},  {253, 14535}},
       79});
  g.psi_complete.push_back({3, 4, {{10, 1}}, 1});
  g.psi_complete.push_back({4, 5, {}, 0});
  g.psi_complete.push_back({5, 6, {}, 0});

  g.psi35_solutions = {
      {{15, 30}, {"10010100110000001000001000"}},
      {{21, 3}, {"00000010000000100000000010"}},
      {{21, 30}, {"00001100001001000000001100"}},
      {{21, 33}, {"00001110001001100000001110"}},
      {{21, 39}, {"00010010100000010000000010", "01000011010000101000000000", "01000011010001100100000000"}},
      {{21, 48}, {"10010000001100100010000010", "10100000000100100110000010"}},
      {{21, 69},
       {"00011110101001010000001110", "00101110100000011000001110", "00101110100001010100001110",
        "00101111000101010010001110", "01001111011001101000001100"}},
      {{21, 75}, {"01010011110000011000000000", "01010011110001010100000000"}},
      {{28, 30}, {"00000100000011000000001110"}},
      {{28, 150},
       {"00110101010100010110001000", "00110101011000011010001000", "11001010100111100100110110",
        "11001010101011101000110110"}},
      {{36, 180}, {"00101010011001000101001000"}},
      {{36, 198}, {"11000000011001110010001110"}},
      {{36, 258}, {"10101111000110111011000110", "10110100011100100110100010", "10110100101010101010100010"}},
  };

  g.errata = {{2, 5, {21, 52}, 1}, {2, 5, {21, 84}, 1}, {3, 5, {21, 75}, 2}};

  g.suspect_rows = {
      {2, 4, "(15,30", {{15, 30}}, "missing closing parenthesis"},
      {2, 4, "(29,110)", {{28, 110}, {28, 100}}, "29 is not a binomial coefficient C(n,2)"},
      {3, 5, "(36,270)", {{36, 258}}, "earlier listing disagrees with the complete (3,5) table"},
  };

  CompleteRow partial25{2,
                        5,
                        {{10, 16},  {10, 20},  {21, 7},   {21, 12},  {21, 19},  {21, 22},  {21, 34},
                         {21, 35},  {21, 47},  {21, 50},  {21, 52},  {21, 55},  {21, 57},  {21, 60},
                         {21, 62},  {21, 64},  {21, 67},  {21, 69},  {21, 70},  {21, 72},  {21, 77},
                         {21, 79},  {21, 82},  {21, 84},  {21, 89},  {21, 94},  {21, 95},  {21, 100},
                         {21, 120}, {28, 60},  {28, 100}, {28, 140}, {28, 160}, {28, 200}, {28, 240},
                         {28, 260}, {28, 300}, {28, 340}, {28, 360}, {36, 60},  {36, 80},  {36, 140},
                         {36, 164}, {36, 180}, {36, 224}, {36, 240}, {36, 244}, {36, 480}, {36, 720}},
                        98};
  for (std::int64_t lambda = 16; lambda <= 142; ++lambda) {
    const auto r = lambda % 10;
    if ((r == 0 || r == 2 || r == 4 || r == 6) && lambda != 20 && lambda != 50) partial25.pairs.push_back({15, lambda});
  }
  std::sort(partial25.pairs.begin(), partial25.pairs.end());
  g.psi_partial.push_back(std::move(partial25));
  g.psi_partial.push_back({3,
                           5,
                           {{15, 30},
                            {21, 3},
                            {21, 30},
                            {21, 33},
                            {21, 39},
                            {21, 48},
                            {21, 69},
                            {21, 75},
                            {28, 30},
                            {28, 150},
                            {36, 180},
                            {36, 270}},
                           12});
  return g;
}

std::string pair_string(const PsiPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::int64_t pairs_of(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

}  // namespace

const GoldenTables& golden_tables() {
  static std::once_flag once;
  static GoldenTables tables;
  std::call_once(once, [] { tables = build_golden(); });
  return tables;
}

GoldenSubset golden_subset(int t, int k) {
  const GoldenTables& g = golden_tables();
  GoldenSubset out;
  out.t = t;
  out.k = k;
  for (const auto& s : g.suspect_rows) {
    if (s.t == t && s.k == k) out.suspects.push_back(s);
  }
  if (t == 3 && k == 5) {
    out.complete = true;
    std::uint64_t total = 0;
    for (const auto& known : g.psi35_solutions) {
      out.entries[known.pair] = known.vectors.size();
      total += known.vectors.size();
    }
    out.expected_pairs = out.entries.size();
    out.expected_solutions = total;
    out.support_n_max = 9;
    // the (36,270) entry belongs to the earlier listing only
    std::erase_if(out.suspects, [](const SuspectRow& s) { return s.as_printed == "(36,270)"; });
    return out;
  }
  if (t == 2 && k == 5) {
    for (const auto& e : g.errata) {
      if (e.t == t && e.k == k) out.entries[e.pair] = e.count;
    }
    out.expected_pairs = 8619;
    out.expected_solutions = 271360;
    out.support_n_max = 39;
    return out;
  }
  for (const auto& row : g.psi_complete) {
    if (row.t != t || row.k != k) continue;
    out.complete = true;
    for (const auto& p : row.pairs) out.entries[p] = std::nullopt;
    out.expected_pairs = row.stated_size;
    for (const auto& p : row.pairs) {
      int n = 2;
      while (pairs_of(n) < p.first) ++n;
      out.support_n_max = std::max(out.support_n_max, n);
    }
    for (const auto& s : out.suspects) {
      for (const auto& c : s.candidates) {
        int n = 2;
        while (pairs_of(n) < c.first) ++n;
        out.support_n_max = std::max(out.support_n_max, n);
      }
    }
    return out;
  }
  throw UnavailableError("golden_subset: no reference data for (t,k) = (" + std::to_string(t) + "," +
                         std::to_string(k) + ")");
}

CatalogueDiff diff_catalogues(const PsiCatalogue& computed, const GoldenSubset& golden) {
  CatalogueDiff diff;
  const std::int64_t v_lo = pairs_of(computed.n_min);
  const std::int64_t v_hi = pairs_of(computed.n_max);
  const auto in_range = [&](const PsiPair& p) { return p.first >= v_lo && p.first <= v_hi; };
  const auto suspect_for = [&](const PsiPair& p) -> const SuspectRow* {
    for (const auto& s : golden.suspects) {
      if (std::find(s.candidates.begin(), s.candidates.end(), p) != s.candidates.end()) return &s;
    }
    return nullptr;
  };

  for (const auto& [pair, count] : computed.entries) {
    const auto it = golden.entries.find(pair);
    if (it == golden.entries.end()) {
      if (const SuspectRow* s = suspect_for(pair)) {
        diff.suspect_notes.push_back("computed " + pair_string(pair) + " matches suspect entry " + s->as_printed);
      } else if (golden.complete) {
        diff.only_computed.push_back(pair);
      }
      continue;
    }
    if (it->second && *it->second != count) diff.count_mismatches.push_back({pair, count, *it->second});
  }
  for (const auto& [pair, count] : golden.entries) {
    if (in_range(pair) && !computed.entries.contains(pair)) diff.only_golden.push_back(pair);
  }
  for (const auto& s : golden.suspects) {
    const bool found = std::any_of(s.candidates.begin(), s.candidates.end(),
                                   [&](const PsiPair& c) { return computed.entries.contains(c); });
    if (!found) diff.suspect_notes.push_back("no candidate for suspect entry " + s.as_printed + " was computed");
  }

  const bool covers = computed.n_min <= 5 && computed.n_max >= golden.support_n_max;
  if (covers && golden.expected_pairs && computed.entries.size() != *golden.expected_pairs) {
    diff.total_mismatches.push_back("|Psi| = " + std::to_string(computed.entries.size()) + ", expected " +
                                    std::to_string(*golden.expected_pairs));
  }
  if (covers && golden.expected_solutions && computed.total_solutions != *golden.expected_solutions) {
    diff.total_mismatches.push_back("solutions = " + std::to_string(computed.total_solutions) + ", expected " +
                                    std::to_string(*golden.expected_solutions));
  }
  return diff;
}

std::string CatalogueDiff::to_string() const {
  std::ostringstream os;
  for (const auto& p : only_computed) os << "only computed: " << pair_string(p) << '\n';
  for (const auto& p : only_golden) os << "only reference: " << pair_string(p) << '\n';
  for (const auto& m : count_mismatches) {
    os << "count " << pair_string(m.pair) << ": computed " << m.computed << ", reference " << m.expected << '\n';
  }
  for (const auto& m : total_mismatches) os << "total: " << m << '\n';
  for (const auto& note : suspect_notes) os << "note: " << note << '\n';
  return os.str();
}

}  // namespace graphdesign

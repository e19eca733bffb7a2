#include <array>

#include "graphdesign/error.hpp"
#include "graphdesign/kramer_mesner.hpp"

namespace graphdesign {

namespace {

// coefficient num/den times the falling factorial (n - shift)^{length}.
struct Term {
  int num;
  int den;
  int shift;
  int length;
};

constexpr Term kZero{0, 1, 0, 0};

RationalPoly to_poly(const Term& term) {
  if (term.num == 0) return {};
  return falling_factorial(term.shift, term.length) * Rational(term.num, term.den);
}

// Transposed W_{2,5}: one line per 5-edge class, entries for the two 2-edge classes.
constexpr std::array<std::array<Term, 2>, 26> kW25 = {{
    {{{4, 1, 3, 1}, {4, 1, 0, 0}}},
    {{{5, 2, 3, 3}, {10, 1, 4, 2}}},
    {{{6, 1, 3, 2}, {16, 1, 4, 1}}},
    {{{7, 1, 3, 2}, {12, 1, 4, 1}}},
    {{{4, 1, 3, 2}, {4, 1, 4, 1}}},
    {{{2, 3, 3, 3}, {4, 1, 4, 2}}},
    {{{1, 8, 3, 4}, {7, 6, 4, 3}}},
    {{{2, 3, 3, 4}, {4, 1, 4, 3}}},
    {{{5, 1, 3, 3}, {20, 1, 4, 2}}},
    {{{3, 2, 3, 3}, {4, 1, 4, 2}}},
    {{{3, 2, 3, 4}, {14, 1, 4, 3}}},
    {{{4, 1, 3, 3}, {24, 1, 4, 2}}},
    {{{1, 4, 3, 5}, {4, 1, 4, 4}}},
    {{{6, 1, 3, 2}, {16, 1, 4, 1}}},
    {{{1, 1, 3, 2}, {4, 1, 4, 1}}},
    {{{3, 2, 3, 4}, {14, 1, 4, 3}}},
    {{{5, 1, 3, 3}, {20, 1, 4, 2}}},
    {{{2, 1, 3, 4}, {12, 1, 4, 3}}},
    {{{7, 3, 3, 3}, {4, 1, 4, 2}}},
    {{{1, 48, 3, 6}, {3, 4, 4, 5}}},
    {{{1, 4, 3, 5}, {4, 1, 4, 4}}},
    {{{1, 8, 3, 5}, {7, 6, 4, 4}}},
    {{{1, 2, 3, 3}, {3, 1, 4, 2}}},
    {{{1, 4, 3, 4}, {2, 3, 4, 3}}},
    {{{1, 6, 3, 3}, kZero}},
    {{kZero, {1, 48, 4, 6}}},
}};

// Transposed W_{3,5}: one line per 5-edge class, entries for the five 3-edge classes.
constexpr std::array<std::array<Term, 5>, 26> kW35 = {{
    {{{3, 1, 3, 1}, kZero, {3, 1, 0, 0}, {3, 1, 0, 0}, kZero}},
    {{{3, 2, 3, 3}, {5, 1, 5, 1}, {1, 1, 4, 2}, {3, 2, 4, 2}, {12, 1, 0, 0}}},
    {{{3, 1, 3, 2}, {8, 1, 0, 0}, {4, 1, 4, 1}, {3, 1, 4, 1}, kZero}},
    {{{3, 1, 3, 2}, {4, 1, 0, 0}, {5, 1, 4, 1}, {6, 1, 4, 1}, kZero}},
    {{{3, 2, 3, 2}, {1, 1, 0, 0}, {2, 1, 4, 1}, {6, 1, 4, 1}, kZero}},
    {{{1, 2, 3, 3}, {3, 1, 5, 1}, kZero, kZero, kZero}},
    {{{1, 8, 3, 4}, {1, 2, 5, 2}, kZero, kZero, {3, 1, 6, 1}}},
    {{kZero, {3, 1, 5, 2}, kZero, {1, 2, 4, 3}, kZero}},
    {{kZero, {12, 1, 5, 1}, {3, 1, 4, 2}, {3, 1, 4, 2}, kZero}},
    {{kZero, {2, 1, 5, 1}, {1, 1, 4, 2}, {3, 2, 4, 2}, kZero}},
    {{kZero, {7, 1, 5, 2}, {1, 2, 4, 3}, kZero, {24, 1, 6, 1}}},
    {{kZero, {12, 1, 5, 1}, {3, 1, 4, 2}, kZero, {24, 1, 0, 0}}},
    {{kZero, {3, 2, 5, 3}, kZero, kZero, {12, 1, 6, 2}}},
    {{kZero, {6, 1, 0, 0}, {6, 1, 4, 1}, {3, 1, 4, 1}, kZero}},
    {{kZero, {2, 1, 0, 0}, {1, 1, 4, 1}, kZero, kZero}},
    {{kZero, {5, 1, 5, 2}, {1, 1, 4, 3}, kZero, {36, 1, 6, 1}}},
    {{kZero, {8, 1, 5, 1}, {4, 1, 4, 2}, {3, 1, 4, 2}, {24, 1, 0, 0}}},
    {{kZero, {5, 1, 5, 2}, {1, 1, 4, 3}, {3, 2, 4, 3}, {24, 1, 6, 1}}},
    {{kZero, {2, 1, 5, 1}, {1, 1, 4, 2}, {4, 1, 4, 2}, kZero}},
    {{kZero, {1, 8, 5, 4}, kZero, kZero, {7, 2, 6, 3}}},
    {{kZero, {1, 1, 5, 3}, {1, 8, 4, 4}, kZero, {15, 1, 6, 2}}},
    {{kZero, {1, 2, 5, 3}, kZero, {1, 8, 4, 4}, {3, 1, 6, 2}}},
    {{kZero, {1, 1, 5, 1}, {1, 2, 4, 2}, kZero, {6, 1, 0, 0}}},
    {{kZero, {1, 2, 5, 2}, kZero, {1, 2, 4, 3}, kZero}},
    {{kZero, kZero, kZero, {1, 2, 4, 2}, kZero}},
    {{kZero, kZero, kZero, kZero, {1, 8, 6, 4}}},
}};

template <std::size_t Rows>
KMTable from_transpose(int t, const std::array<std::array<Term, Rows>, 26>& transposed) {
  KMTable table;
  table.t = t;
  table.k = 5;
  table.entries.assign(Rows, std::vector<RationalPoly>(transposed.size()));
  for (std::size_t c = 0; c < transposed.size(); ++c) {
    for (std::size_t r = 0; r < Rows; ++r) table.entries[r][c] = to_poly(transposed[c][r]);
  }
  return table;
}

}  // namespace

KMTable golden_table(int t, int k) {
  if (k == 5 && t == 2) return from_transpose(2, kW25);
  if (k == 5 && t == 3) return from_transpose(3, kW35);
  throw UnavailableError("golden_table: no reference matrix for t=" + std::to_string(t) + " k=" + std::to_string(k));
}

}  // namespace graphdesign

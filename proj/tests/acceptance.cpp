// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "graphdesign/bounds.hpp"
#include "graphdesign/catalogue.hpp"
#include "graphdesign/design_oracle.hpp"
#include "graphdesign/error.hpp"
#include "graphdesign/io.hpp"
#include "graphdesign/kramer_mesner.hpp"
#include "graphdesign/search.hpp"

using namespace graphdesign;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "; " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  outcome.require(seconds <= budget_seconds, "over the time budget");
  if (!outcome.pass) ++failures;
  std::printf("%s %d %s (%.2f s, budget %.0f s)%s\n", outcome.pass ? "PASS" : "FAIL", number, title.c_str(), seconds,
              budget_seconds, outcome.detail.str().c_str());
  std::fflush(stdout);
}

std::string jsonl(std::span<const SolutionRecord> records) {
  std::ostringstream os;
  write_jsonl(os, records);
  return os.str();
}

}  // namespace

int main() {
  const int jobs = default_jobs();
  std::printf("workers: %d\n", jobs);

  criterion(1, "reference matrices rebuilt by counting and matched exactly", 300, [](Outcome& o) {
    const KMTable w25 = build_symbolic(2, 5);
    const KMTable w35 = build_symbolic(3, 5);
    const PaperIndexing idx = match_paper_indices(w25, w35);
    o.require(apply_paper_order(w25, idx.row_perms[0], idx.col_perm).entries == golden_table(2, 5).entries,
              "(2,5) differs");
    o.require(apply_paper_order(w35, idx.row_perms[1], idx.col_perm).entries == golden_table(3, 5).entries,
              "(3,5) differs");
  });

  criterion(2, "row sums equal C(C(n,2)-t, 5-t) for n in [5, 600]", 60, [](Outcome& o) {
    for (int t : {2, 3}) {
      for (int n = 5; n <= 600; ++n) {
        const EvaluatedKM e = evaluate(km_table(t, 5), n);
        const BigInt expected = binomial(static_cast<std::int64_t>(n) * (n - 1) / 2 - t, 5 - t);
        for (const auto& row : e.matrix) {
          BigInt sum = 0;
          for (auto x : row) sum += x;
          if (sum != expected) o.require(false, "t=" + std::to_string(t) + " n=" + std::to_string(n));
        }
      }
    }
  });

  criterion(3, "inequality polynomials, thresholds and bounds", 1, [](Outcome& o) {
    const std::vector<std::int64_t> want25{51, 82, 372, 538, 56};
    const std::vector<std::int64_t> want35{32, 14, 22};
    for (int t : {2, 3}) {
      const auto recs = lemma_thresholds(t, 5);
      const auto& want = t == 2 ? want25 : want35;
      o.require(recs.size() == want.size(), "stage count");
      for (std::size_t i = 0; i < recs.size() && i < want.size(); ++i) {
        const std::string where = "(" + std::to_string(t) + ",5) stage " + std::to_string(i + 1);
        o.require(recs[i].threshold == want[i], where + " threshold " + std::to_string(recs[i].threshold));
        o.require(recs[i].matches_printed, where + " derives " + recs[i].inequality_poly.to_string() +
                                               " but the printed form is " + recs[i].printed_poly.to_string());
      }
    }
    o.require(nonexistence_bound(2, 5) == 538, "bound (2,5)");
    o.require(nonexistence_bound(3, 5) == 34, "bound (3,5)");
  });

  SweepResult s35;
  criterion(4, "Psi(3,5): 13 pairs, 26 solutions, vectors verbatim", 60, [&](Outcome& o) {
    s35 = sweep(3, 5, 5, 39, jobs);
    const auto& cat = s35.catalogue;
    o.require(cat.entries.size() == 13, std::to_string(cat.entries.size()) + " pairs");
    o.require(cat.total_solutions == 26, std::to_string(cat.total_solutions) + " solutions");
    std::set<std::pair<PsiPair, std::string>> computed;
    for (const auto& s : s35.solutions) computed.insert({{s.v, s.lambda}, s.u_string()});
    std::set<std::pair<PsiPair, std::string>> reference;
    for (const auto& known : golden_tables().psi35_solutions) {
      const auto it = cat.entries.find(known.pair);
      const std::uint64_t count = it == cat.entries.end() ? 0 : it->second;
      o.require(count == known.vectors.size(), "count for (" + std::to_string(known.pair.first) + "," +
                                                   std::to_string(known.pair.second) + ")");
      for (const auto& u : known.vectors) {
        reference.insert({known.pair, u});
        o.require(computed.contains({known.pair, u}), "missing " + u);
      }
    }
    for (const auto& [pair, u] : computed) {
      if (!reference.contains({pair, u})) {
        o.require(false, "extra solution (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                             ") u=" + u + " absent from the reference table");
      }
    }
  });

  SweepResult s25;
  criterion(5, "Psi(2,5): 8619 pairs, 271360 solutions, none for n >= 40", 3600, [&](Outcome& o) {
    s25 = sweep(2, 5, 5, 537, jobs);
    o.require(s25.catalogue.entries.size() == 8619, std::to_string(s25.catalogue.entries.size()) + " pairs");
    o.require(s25.catalogue.total_solutions == 271360, std::to_string(s25.catalogue.total_solutions) + " solutions");
    const bool none_late = std::none_of(s25.solutions.begin(), s25.solutions.end(), [](const auto& s) { return s.n >= 40; });
    o.require(none_late, "solutions at n >= 40");
  });

  criterion(6, "errata counts: 2-(21,5,52), 2-(21,5,84), 3-(21,5,75)", 1, [&](Outcome& o) {
    const auto count = [](const SweepResult& s, PsiPair p) {
      const auto it = s.catalogue.entries.find(p);
      return it == s.catalogue.entries.end() ? std::uint64_t{0} : it->second;
    };
    o.require(count(s25, {21, 52}) == 1, "2-(21,5,52): " + std::to_string(count(s25, {21, 52})));
    o.require(count(s25, {21, 84}) == 1, "2-(21,5,84): " + std::to_string(count(s25, {21, 84})));
    o.require(count(s35, {21, 75}) == 2, "3-(21,5,75): " + std::to_string(count(s35, {21, 75})));
  });

  criterion(7, "explicit block-count verification of (3,5) and sampled (2,5) solutions", 120, [&](Outcome& o) {
    const auto& cols35 = km_table(3, 5).col_classes;
    std::size_t verified = 0;
    for (const auto& s : s35.solutions) {
      if (s.n > 9) continue;
      const DesignCheck check = check_design(expand(s, cols35));
      o.require(check.ok && check.lambda == s.lambda, "(3,5) " + s.u_string() + " " + check.message);
      ++verified;
    }
    o.require(verified >= 26, "only " + std::to_string(verified) + " (3,5) solutions");
    std::vector<SolutionRecord> small;
    for (const auto& s : s25.solutions) {
      if (s.n <= 8) small.push_back(s);
    }
    o.require(!small.empty(), "no (2,5) solutions with n <= 8");
    std::mt19937 rng(2008);
    const auto& cols25 = km_table(2, 5).col_classes;
    for (int i = 0; i < 20 && !small.empty(); ++i) {
      const auto& s = small[rng() % small.size()];
      const DesignCheck check = check_design(expand(s, cols25));
      o.require(check.ok && check.lambda == s.lambda, "(2,5) " + s.u_string() + " " + check.message);
    }
  });

  criterion(8, "generic pipeline at (2,3) and (3,4), and the 3-(10,4,1) design", 120, [&](Outcome& o) {
    const auto s23 = sweep(2, 3, 5, 100, jobs);
    std::vector<PsiPair> pairs23;
    for (const auto& [p, c] : s23.catalogue.entries) pairs23.push_back(p);
    o.require(pairs23 == std::vector<PsiPair>{{10, 4}, {15, 1}, {28, 6}, {28, 10}, {55, 25}}, "(2,3) pairs differ");
    const auto s34 = sweep(3, 4, 5, 100, jobs);
    o.require(s34.catalogue.entries.size() == 1 && s34.catalogue.entries.begin()->first == PsiPair{10, 1},
              "(3,4) pairs differ");
    const SolutionRecord w = find_wilson_design();
    o.require(w.lambda == 1 && std::popcount(w.u) == 3, "lambda=1 solution does not select three classes");
    const DesignCheck check = check_design(expand(w, km_table(3, 4).col_classes));
    o.require(check.ok && check.lambda == 1, "3-(10,4,1) check: " + check.message);
  });

  criterion(9, "double counting, complement closure, partition independence, out-of-sample", 900, [&](Outcome& o) {
    for (int t : {2, 3}) {
      const KMTable& w = km_table(t, 5);
      for (std::size_t c = 0; c < w.cols(); ++c) {
        const auto inside = count_sub_classes(w.col_classes[c], t);
        for (int n = 10; n <= 14; ++n) {
          for (std::size_t r = 0; r < w.rows(); ++r) {
            const auto it = inside.find(w.row_classes[r]);
            const BigInt lhs = orbit_size(w.row_classes[r], n) * eval_int(w.entry(r, c), n);
            const BigInt rhs = orbit_size(w.col_classes[c], n) * (it == inside.end() ? 0 : it->second);
            if (lhs != rhs) o.require(false, "double counting t=" + std::to_string(t));
          }
        }
      }
    }

    std::size_t halves = 0;
    for (const SweepResult* s : {&s25, &s35}) {
      std::set<std::pair<int, std::uint64_t>> emitted;
      for (const auto& r : s->solutions) emitted.insert({r.n, r.u});
      int last_n = 0;
      EvaluatedKM e;
      for (const auto& r : s->solutions) {
        if (r.n != last_n) {
          e = evaluate(km_table(r.t, r.k), r.n);
          last_n = r.n;
        }
        const SolutionRecord flipped = complement(r, e);
        if (solution_lambda(e, flipped.u) != e.row_sum - r.lambda) o.require(false, "complement row sums");
        const bool half = 2 * r.lambda == e.row_sum;
        halves += half;
        if (half != emitted.contains({r.n, flipped.u})) o.require(false, "complement emitted iff lambda is half");
      }
    }
    o.detail << "; lambda-half solutions " << halves;
    // Converse direction: every row-equal u above half has its complement emitted.
    for (auto [t, n] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}, {3, 8}, {2, 6}, {2, 7}}) {
      const EvaluatedKM e = evaluate(km_table(t, 5), n);
      const auto emitted = enumerate_solutions(e);
      std::set<std::uint64_t> us;
      for (const auto& r : emitted) us.insert(r.u);
      std::vector<std::vector<std::int64_t>> values;
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < e.cols(); ++c) {
        if (!e.col_active(c)) continue;
        cols.push_back(c);
        std::vector<std::int64_t> column;
        for (std::size_t r = 0; r < e.rows(); ++r) {
          if (e.row_active(r)) column.push_back(e.matrix[r][c]);
        }
        values.push_back(column);
      }
      GrayWalker walker(values);
      std::uint64_t full = 0;
      for (std::size_t c : cols) full |= column_bit(c, e.cols());
      for (std::uint64_t i = 1; i < (std::uint64_t{1} << cols.size()); ++i) {
        walker.step();
        const auto sums = walker.sums();
        if (!std::all_of(sums.begin(), sums.end(), [&](std::int64_t x) { return x == sums[0]; })) continue;
        std::uint64_t u = 0;
        for (std::size_t b = 0; b < cols.size(); ++b) {
          if (walker.mask() >> b & 1u) u |= column_bit(cols[b], e.cols());
        }
        const bool low = 2 * sums[0] <= e.row_sum;
        if (low != us.contains(u)) o.require(false, "brute-force cube disagrees at n=" + std::to_string(n));
        if (!low && u != full && !us.contains(u ^ full)) o.require(false, "complement missing at n=" + std::to_string(n));
      }
    }

    const int wide = std::max(8, jobs);
    o.require(jsonl(sweep(3, 5, 5, 39, 1).solutions) == jsonl(sweep(3, 5, 5, 39, wide).solutions),
              "(3,5) output depends on workers");
    o.require(jsonl(sweep(2, 5, 5, 39, 1).solutions) == jsonl(sweep(2, 5, 5, 39, wide).solutions),
              "(2,5) output depends on workers");
    const EvaluatedKM e9 = evaluate(km_table(2, 5), 9);
    o.require(jsonl(enumerate_solutions(e9, 1)) == jsonl(enumerate_solutions(e9, wide)),
              "single-n split depends on workers");

    const std::vector<int> fresh{18, 19, 20, 21, 22};
    const KMTable& w35 = km_table(3, 5);
    for (int n : fresh) {
      for (std::size_t r = 0; r < w35.rows(); ++r) {
        for (std::size_t c = 0; c < w35.cols(); ++c) {
          if (static_cast<std::uint64_t>(eval_int(w35.entry(r, c), n)) !=
              count_entry(w35.row_classes[r], w35.col_classes[c], n)) {
            o.require(false, "(3,5) out-of-sample n=" + std::to_string(n));
          }
        }
      }
    }
    const KMTable& w25 = km_table(2, 5);
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
      const std::size_t r = rng() % w25.rows();
      const std::size_t c = rng() % w25.cols();
      const int n = fresh[static_cast<std::size_t>(i) % fresh.size()];
      if (static_cast<std::uint64_t>(eval_int(w25.entry(r, c), n)) !=
          count_entry(w25.row_classes[r], w25.col_classes[c], n)) {
        o.require(false, "(2,5) out-of-sample n=" + std::to_string(n));
      }
    }
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

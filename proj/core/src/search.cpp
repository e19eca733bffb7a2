#include "graphdesign/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

// Columns in the inner table; 2^12 entries per row stay in L1.
constexpr int kLowColumns = 12;

struct CubeLayout {
  std::vector<std::size_t> rows;  // active rows
  std::vector<std::size_t> cols;  // active columns
  std::size_t width = 0;
};

CubeLayout layout_of(const EvaluatedKM& ekm) {
  CubeLayout layout;
  layout.width = ekm.cols();
  if (layout.width == 0 || layout.width > 63) throw UnsupportedError("enumerate_solutions: need 1..63 columns");
  for (std::size_t r = 0; r < ekm.rows(); ++r) {
    if (ekm.row_active(r)) layout.rows.push_back(r);
  }
  for (std::size_t c = 0; c < ekm.cols(); ++c) {
    if (ekm.col_active(c)) layout.cols.push_back(c);
  }
  if (layout.rows.empty()) throw PreconditionError("enumerate_solutions: no active rows");
  return layout;
}

std::vector<std::vector<std::int64_t>> column_values(const EvaluatedKM& ekm, const CubeLayout& layout,
                                                     std::span<const std::size_t> cols) {
  std::vector<std::vector<std::int64_t>> values;
  for (std::size_t c : cols) {
    std::vector<std::int64_t> column;
    for (std::size_t r : layout.rows) column.push_back(ekm.matrix[r][c]);
    values.push_back(std::move(column));
  }
  return values;
}

// Precomputed sums over every subset of the low columns, indexed by subset mask.
struct LowTable {
  std::vector<std::int64_t> first_row;                // row 0 sum
  std::vector<std::vector<std::int64_t>> differences;  // row r sum minus row 0 sum, r >= 1
  std::vector<std::uint64_t> u_bits;
};

LowTable build_low_table(const EvaluatedKM& ekm, const CubeLayout& layout, std::span<const std::size_t> low_cols) {
  const std::size_t size = std::size_t{1} << low_cols.size();
  const std::size_t rows = layout.rows.size();
  LowTable table;
  table.first_row.resize(size);
  table.differences.assign(rows - 1, std::vector<std::int64_t>(size));
  table.u_bits.resize(size);
  GrayWalker walker(column_values(ekm, layout, low_cols), layout.rows.size());
  for (std::size_t i = 0; i < size; ++i) {
    const std::uint64_t mask = walker.mask();
    const auto sums = walker.sums();
    table.first_row[mask] = sums[0];
    for (std::size_t r = 1; r < rows; ++r) table.differences[r - 1][mask] = sums[r] - sums[0];
    std::uint64_t u = 0;
    for (std::size_t b = 0; b < low_cols.size(); ++b) {
      if (mask >> b & 1u) u |= column_bit(low_cols[b], layout.width);
    }
    table.u_bits[mask] = u;
    if (i + 1 < size) walker.step();
  }
  return table;
}

struct ChunkScanner {
  const EvaluatedKM& ekm;
  const CubeLayout& layout;
  std::span<const std::size_t> high_cols;
  const LowTable& low;

  void scan(std::uint64_t begin, std::uint64_t end, std::vector<SolutionRecord>& out) const {
    GrayWalker walker(column_values(ekm, layout, high_cols), layout.rows.size());
    walker.seek(begin);
    const std::size_t rows = layout.rows.size();
    const std::size_t low_size = low.first_row.size();
    const std::int64_t* first = low.first_row.data();
    std::vector<std::int64_t> targets(rows);
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto h = walker.sums();
      for (std::size_t r = 1; r < rows; ++r) targets[r] = h[0] - h[r];
      if (rows == 1) {
        for (std::size_t m = 0; m < low_size; ++m) emit(walker, m, first[m] + h[0], out);
      } else {
        const std::int64_t* d1 = low.differences[0].data();
        const std::int64_t t1 = targets[1];
        for (std::size_t m = 0; m < low_size; ++m) {
          if (d1[m] != t1) continue;
          bool equal = true;
          for (std::size_t r = 2; r < rows && equal; ++r) equal = low.differences[r - 1][m] == targets[r];
          if (equal) emit(walker, m, first[m] + h[0], out);
        }
      }
      if (i + 1 < end) walker.step();
    }
  }

  void emit(const GrayWalker& walker, std::size_t low_mask, std::int64_t lambda,
            std::vector<SolutionRecord>& out) const {
    if (lambda < 1 || 2 * lambda > ekm.row_sum) return;
    std::uint64_t u = low.u_bits[low_mask];
    for (std::size_t b = 0; b < high_cols.size(); ++b) {
      if (walker.mask() >> b & 1u) u |= column_bit(high_cols[b], layout.width);
    }
    out.push_back({ekm.t, ekm.k, ekm.n, ekm.v, lambda, u, static_cast<int>(layout.width)});
  }
};

void sort_by_lambda_then_u(std::vector<SolutionRecord>& records) {
  std::sort(records.begin(), records.end());
}

// Runs body(i) for i in [0, count) on up to `jobs` threads; rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string SolutionRecord::u_string() const {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (selects(static_cast<std::size_t>(i))) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::uint64_t parse_u(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) throw InvalidInputError("parse_u: need 1..63 binary digits");
  std::uint64_t u = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InvalidInputError("parse_u: not a binary string: " + std::string(bits));
    u = (u << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return u;
}

PsiCatalogue make_catalogue(int t, int k, int n_min, int n_max, std::span<const SolutionRecord> solutions) {
  PsiCatalogue cat;
  cat.t = t;
  cat.k = k;
  cat.n_min = n_min;
  cat.n_max = n_max;
  for (const auto& s : solutions) {
    ++cat.entries[{s.v, s.lambda}];
    ++cat.total_solutions;
  }
  return cat;
}

GrayWalker::GrayWalker(std::vector<std::vector<std::int64_t>> values) : values_(std::move(values)) {
  if (values_.size() > 63) throw UnsupportedError("GrayWalker: at most 63 columns");
  const std::size_t rows = values_.empty() ? 0 : values_.front().size();
  for (const auto& column : values_) {
    if (column.size() != rows) throw InvalidInputError("GrayWalker: ragged column values");
  }
  sums_.assign(rows, 0);
}

GrayWalker::GrayWalker(std::vector<std::vector<std::int64_t>> values, std::size_t rows) : values_(std::move(values)) {
  if (values_.size() > 63) throw UnsupportedError("GrayWalker: at most 63 columns");
  for (const auto& column : values_) {
    if (column.size() != rows) throw InvalidInputError("GrayWalker: ragged column values");
  }
  sums_.assign(rows, 0);
}

void GrayWalker::seek(std::uint64_t index) {
  index_ = index;
  mask_ = index ^ (index >> 1);
  std::fill(sums_.begin(), sums_.end(), 0);
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (!(mask_ >> c & 1u)) continue;
    for (std::size_t r = 0; r < sums_.size(); ++r) sums_[r] += values_[c][r];
  }
}

void GrayWalker::step() {
  ++index_;
  const auto c = static_cast<std::size_t>(std::countr_zero(index_));
  const std::uint64_t bit = std::uint64_t{1} << c;
  const auto& column = values_[c];
  if (mask_ & bit) {
    for (std::size_t r = 0; r < sums_.size(); ++r) sums_[r] -= column[r];
  } else {
    for (std::size_t r = 0; r < sums_.size(); ++r) sums_[r] += column[r];
  }
  mask_ ^= bit;
}

std::optional<std::int64_t> solution_lambda(const EvaluatedKM& ekm, std::uint64_t u) {
  const std::size_t width = ekm.cols();
  if (width < 64 && (u >> width) != 0) return std::nullopt;
  std::optional<std::int64_t> lambda;
  for (std::size_t r = 0; r < ekm.rows(); ++r) {
    if (!ekm.row_active(r)) continue;
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (!(u & column_bit(c, width))) continue;
      if (!ekm.col_active(c)) return std::nullopt;
      sum += ekm.matrix[r][c];
    }
    if (lambda && *lambda != sum) return std::nullopt;
    lambda = sum;
  }
  return lambda;
}

std::vector<SolutionRecord> enumerate_solutions(const EvaluatedKM& ekm, int jobs) {
  const CubeLayout layout = layout_of(ekm);
  const std::size_t low_count = std::min<std::size_t>(layout.cols.size(), kLowColumns);
  const std::span<const std::size_t> all(layout.cols);
  const auto high_cols = all.first(layout.cols.size() - low_count);
  const auto low_cols = all.last(low_count);
  const LowTable low = build_low_table(ekm, layout, low_cols);
  const ChunkScanner scanner{ekm, layout, high_cols, low};

  const std::uint64_t high_size = std::uint64_t{1} << high_cols.size();
  const std::uint64_t chunks = std::min<std::uint64_t>(high_size, jobs > 1 ? 64 * static_cast<std::uint64_t>(jobs) : 1);
  std::vector<std::vector<SolutionRecord>> per_chunk(chunks);
  parallel_for(chunks, jobs, [&](std::size_t i) {
    const std::uint64_t begin = high_size * i / chunks;
    const std::uint64_t end = high_size * (i + 1) / chunks;
    scanner.scan(begin, end, per_chunk[i]);
  });
  std::vector<SolutionRecord> out;
  for (auto& part : per_chunk) out.insert(out.end(), part.begin(), part.end());
  sort_by_lambda_then_u(out);
  return out;
}

SweepResult sweep(int t, int k, int n_min, int n_max, int jobs) {
  if (n_min < 5 || n_max < n_min) throw PreconditionError("sweep: need 5 <= n_min <= n_max");
  const KMTable& table = km_table(t, k);
  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<std::vector<SolutionRecord>> per_n(count);
  if (count == 1) {
    per_n[0] = enumerate_solutions(evaluate(table, n_min), jobs);
  } else {
    parallel_for(count, jobs, [&](std::size_t i) {
      per_n[i] = enumerate_solutions(evaluate(table, n_min + static_cast<int>(i)), 1);
    });
  }
  SweepResult result;
  for (auto& part : per_n) result.solutions.insert(result.solutions.end(), part.begin(), part.end());
  result.catalogue = make_catalogue(t, k, n_min, n_max, result.solutions);
  return result;
}

SolutionRecord complement(const SolutionRecord& record, const EvaluatedKM& ekm) {
  const std::size_t width = ekm.cols();
  std::uint64_t active = 0;
  for (std::size_t c = 0; c < width; ++c) {
    if (ekm.col_active(c)) active |= column_bit(c, width);
  }
  SolutionRecord out = record;
  out.u = record.u ^ active;
  out.lambda = ekm.row_sum - record.lambda;
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("GRAPHDESIGN_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace graphdesign

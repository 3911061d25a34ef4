#include <algorithm>

#include "boolinv/complex.hpp"

namespace boolinv {

namespace {

using Column = std::vector<std::uint32_t>;

// a += b over GF(2); both sorted ascending.
void add_into(Column& a, const Column& b, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
  a.swap(scratch);
}

// Column reduction keyed on the lowest (largest) row index. Columns flagged in
// `skip` are known to reduce to zero and are not touched. Returns the rank and
// records, per row, whether it ended up as a pivot.
std::size_t reduce(std::vector<Column>& columns, std::size_t rows, const std::vector<bool>& skip,
                   std::vector<bool>* pivot_rows) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> owner(rows, kNone);
  Column scratch;
  std::size_t rank = 0;
  for (std::uint32_t j = 0; j < columns.size(); ++j) {
    if (!skip.empty() && skip[j]) {
      columns[j].clear();
      continue;
    }
    Column& col = columns[j];
    while (!col.empty() && owner[col.back()] != kNone) add_into(col, columns[owner[col.back()]], scratch);
    if (!col.empty()) {
      owner[col.back()] = j;
      ++rank;
    }
  }
  if (pivot_rows) {
    pivot_rows->assign(rows, false);
    for (std::size_t r = 0; r < rows; ++r) (*pivot_rows)[r] = owner[r] != kNone;
  }
  return rank;
}

}  // namespace

std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns) {
  std::uint32_t rows = 0;
  for (auto& c : columns) {
    std::sort(c.begin(), c.end());
    if (!c.empty()) rows = std::max(rows, c.back() + 1);
  }
  return reduce(columns, rows, {}, nullptr);
}

std::int64_t BettiVector::alternating_sum() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    // values[i] is dimension i - 1.
    sum += (i % 2 == 1 ? 1 : -1) * values[i];
  }
  return sum;
}

bool BettiVector::concentrated_in_top() const {
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] != 0) return false;
  return true;
}

BettiVector betti_gf2(const FacePoset& p) {
  const int n = p.top_rank();
  // boundary_rank[r] = rank of the boundary map from rank-r cells to rank-(r-1) cells.
  std::vector<std::int64_t> boundary_rank(n + 2, 0);
  std::vector<bool> cleared;

  // Top rank first: a row that becomes a pivot of the map out of rank r+1 is a
  // boundary, so its own column in the map out of rank r reduces to zero.
  for (int r = n; r >= 1; --r) {
    const CellId first = p.rank_begin(r);
    const CellId row_base = p.rank_begin(r - 1);
    std::vector<Column> columns(p.rank_count(r));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto below = p.facets(first + static_cast<CellId>(j));
      columns[j].reserve(below.size());
      for (CellId f : below) columns[j].push_back(f - row_base);
    }
    std::vector<bool> pivots;
    boundary_rank[r] = static_cast<std::int64_t>(reduce(columns, p.rank_count(r - 1), cleared, &pivots));
    cleared = std::move(pivots);
  }

  BettiVector b;
  b.values.resize(n + 1);
  for (int r = 0; r <= n; ++r) {
    b.values[r] = static_cast<std::int64_t>(p.rank_count(r)) - boundary_rank[r] - boundary_rank[r + 1];
  }
  return b;
}

}  // namespace boolinv

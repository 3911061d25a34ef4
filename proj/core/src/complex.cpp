#include "boolinv/complex.hpp"

#include <algorithm>
#include <thread>

#include "parallel.hpp"

namespace boolinv {

std::optional<CellId> FacePoset::find(const Word& canon) const {
  auto it = index_.find(canon.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CellId> FacePoset::find_word(const Word& w) const {
  return find(canonical(w, graph()).canon);
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Cell> enumerate_cells(const OrderedSystem& sys, const BuildOptions& options) {
  const auto& g = sys.graph;
  const int n = g.size();
  const unsigned threads = detail::resolve_threads(options.threads);

  std::vector<Cell> all{Cell{}};
  std::vector<Word> level{Word{}};
  for (int r = 0; r < n && !level.empty(); ++r) {
    // Every injective word of length r+1 is a word of length r plus a new
    // letter, and moves on the prefix are moves on the whole word, so
    // extending one representative per cell reaches every cell of rank r+1.
    std::vector<std::vector<Word>> parts(threads);
    detail::parallel_chunks(level.size(), threads, [&](unsigned t, std::size_t lo, std::size_t hi) {
      auto& out = parts[t];
      for (std::size_t i = lo; i < hi; ++i) {
        for (int s = 0; s < n; ++s) {
          if (!level[i].contains(s)) out.push_back(canonical(level[i].appended(s), g).canon);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<Word> next;
    for (auto& part : parts) next.insert(next.end(), part.begin(), part.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    if (all.size() + next.size() > options.max_cells) {
      throw Error(ErrorCode::kResourceLimit,
                  sys.name + ": more than " + std::to_string(options.max_cells) +
                      " cells (raise --max-cells)");
    }
    for (const Word& w : next) all.push_back(Cell{w});
    level = std::move(next);
  }
  return all;
}

// ---------------------------------------------------------------------------
// Poset

FacePoset build_poset(const OrderedSystem& sys, std::vector<Cell> cells,
                      const BuildOptions& options) {
  const auto& g = sys.graph;
  const int n = g.size();
  const unsigned threads = detail::resolve_threads(options.threads);

  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty() || cells.front().rank() != 0) {
    throw Error(ErrorCode::kMissingFacet, sys.name + ": the empty cell is missing");
  }

  FacePoset p;
  p.system_ = sys;
  p.cells_ = std::move(cells);
  const std::size_t count = p.cells_.size();

  p.rank_offsets_.assign(n + 2, 0);
  for (const Cell& c : p.cells_) {
    if (c.rank() > n || !c.support().is_subset_of(GeneratorSet((1u << n) - 1))) {
      throw Error(ErrorCode::kIndexOutOfRange, to_string(c) + " is not a word over " + sys.name);
    }
    ++p.rank_offsets_[c.rank() + 1];
  }
  for (int r = 0; r <= n; ++r) p.rank_offsets_[r + 1] += p.rank_offsets_[r];

  p.index_.reserve(count);
  for (CellId id = 0; id < count; ++id) p.index_.emplace(p.cells_[id].canon.key(), id);

  // Facets and descents, computed per cell.
  std::vector<std::vector<CellId>> facet_lists(count);
  p.descents_.assign(count, GeneratorSet{});
  std::vector<std::string> missing(threads);
  detail::parallel_chunks(count, threads, [&](unsigned t, std::size_t lo, std::size_t hi) {
    for (std::size_t id = lo; id < hi; ++id) {
      const Cell& c = p.cells_[id];
      p.descents_[id] = descents(c, g);
      if (c.rank() == 0) continue;
      auto& list = facet_lists[id];
      for (int i = 0; i < c.rank(); ++i) {
        const Cell f = canonical(c.canon.without_position(i), g);
        auto it = p.index_.find(f.canon.key());
        if (it == p.index_.end()) {
          if (missing[t].empty()) missing[t] = to_string(f) + " (facet of " + to_string(c) + ")";
          continue;
        }
        list.push_back(it->second);
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  });
  if (!options.allow_missing_facets) {
    for (const auto& m : missing) {
      if (!m.empty()) throw Error(ErrorCode::kMissingFacet, sys.name + ": " + m);
    }
  }

  p.facet_offsets_.assign(count + 1, 0);
  std::vector<std::size_t> up_degree(count, 0);
  for (std::size_t id = 0; id < count; ++id) {
    p.facet_offsets_[id + 1] = p.facet_offsets_[id] + facet_lists[id].size();
    for (CellId f : facet_lists[id]) ++up_degree[f];
  }
  p.facet_ids_.reserve(p.facet_offsets_.back());
  for (auto& list : facet_lists) p.facet_ids_.insert(p.facet_ids_.end(), list.begin(), list.end());

  p.cofacet_offsets_.assign(count + 1, 0);
  for (std::size_t id = 0; id < count; ++id) p.cofacet_offsets_[id + 1] = p.cofacet_offsets_[id] + up_degree[id];
  p.cofacet_ids_.resize(p.cofacet_offsets_.back());
  std::vector<std::size_t> fill(p.cofacet_offsets_.begin(), p.cofacet_offsets_.end() - 1);
  // Ascending id order keeps every cofacet list sorted.
  for (CellId id = 0; id < count; ++id)
    for (CellId f : p.facets(id)) p.cofacet_ids_[fill[f]++] = id;
  return p;
}

// ---------------------------------------------------------------------------
// Statistics

std::vector<std::int64_t> f_vector(const FacePoset& p) {
  std::vector<std::int64_t> f(p.top_rank() + 1, 0);
  for (int r = 0; r <= p.top_rank(); ++r) f[r] = static_cast<std::int64_t>(p.rank_count(r));
  return f;
}

std::int64_t reduced_euler(const FacePoset& p) {
  const auto f = f_vector(p);
  std::int64_t chi = 0;
  for (std::size_t r = 1; r < f.size(); ++r) chi += (r % 2 == 1 ? 1 : -1) * f[r];
  return chi - f[0];
}

SimplicialReport check_simplicial(const FacePoset& p) {
  SimplicialReport report;
  std::vector<std::uint32_t> stamp(p.size(), 0);
  std::vector<CellId> stack;
  for (CellId id = 0; id < p.size(); ++id) {
    const int r = p.rank(id);
    const auto below = p.facets(id);
    ++report.cells_checked;
    if (static_cast<int>(below.size()) != r) {
      report.ok = false;
      report.failure = to_string(p.cell(id)) + " has " + std::to_string(below.size()) +
                       " facets, expected " + std::to_string(r);
      return report;
    }
    for (CellId f : below) {
      if (p.rank(f) != r - 1) {
        report.ok = false;
        report.failure = to_string(p.cell(f)) + " is not one rank below " + to_string(p.cell(id));
        return report;
      }
    }
    // Walk the lower ideal.
    std::size_t seen = 1;
    stamp[id] = id + 1;
    stack.assign(1, id);
    while (!stack.empty()) {
      const CellId c = stack.back();
      stack.pop_back();
      for (CellId f : p.facets(c)) {
        if (stamp[f] == id + 1) continue;
        stamp[f] = id + 1;
        ++seen;
        stack.push_back(f);
      }
    }
    if (seen != (std::size_t{1} << r)) {
      report.ok = false;
      report.failure = "ideal of " + to_string(p.cell(id)) + " has " + std::to_string(seen) +
                       " cells, expected " + std::to_string(std::size_t{1} << r);
      return report;
    }
  }
  return report;
}

SimplicialReport check_pure(const FacePoset& p) {
  SimplicialReport report;
  for (CellId id = 0; id < p.size(); ++id) {
    ++report.cells_checked;
    if (p.rank(id) < p.top_rank() && p.cofacets(id).empty()) {
      report.ok = false;
      report.failure = to_string(p.cell(id)) + " is maximal but has rank " +
                       std::to_string(p.rank(id)) + " < " + std::to_string(p.top_rank());
      return report;
    }
  }
  return report;
}

std::string check_isomorphic(const FacePoset& a, const FacePoset& b) {
  if (a.size() != b.size()) {
    return "cell counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  }
  std::vector<CellId> image(a.size());
  for (CellId id = 0; id < a.size(); ++id) {
    auto other = b.find(a.cell(id).canon);
    if (!other) return to_string(a.cell(id)) + " has no partner";
    if (a.rank(id) != b.rank(*other)) return to_string(a.cell(id)) + " changes rank";
    image[id] = *other;
  }
  for (CellId id = 0; id < a.size(); ++id) {
    std::vector<CellId> mapped;
    for (CellId f : a.facets(id)) mapped.push_back(image[f]);
    std::sort(mapped.begin(), mapped.end());
    const auto theirs = b.facets(image[id]);
    if (!std::equal(mapped.begin(), mapped.end(), theirs.begin(), theirs.end())) {
      return "covers of " + to_string(a.cell(id)) + " are not preserved";
    }
  }
  return {};
}

}  // namespace boolinv

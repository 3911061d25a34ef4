#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolinv/coxsys.hpp"
#include "boolinv/words.hpp"

namespace boolinv {

using CellId = std::uint32_t;

struct BuildOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  std::size_t max_cells = 2'000'000;
  // Drop facets missing from the cell list instead of throwing; only useful
  // for feeding deliberately broken posets to the checkers.
  bool allow_missing_facets = false;
};

// Cells of Delta_inv(W) sorted by (rank, canonical word), with their facets.
// Cell 0 is always the empty cell.
class FacePoset {
 public:
  FacePoset() = default;

  const OrderedSystem& system() const { return system_; }
  const CoxeterGraph& graph() const { return system_.graph; }
  int top_rank() const { return system_.size(); }

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(CellId id) const { return cells_[id]; }
  const std::vector<Cell>& cells() const { return cells_; }
  int rank(CellId id) const { return cells_[id].rank(); }

  // Ids of rank-r cells form the half-open range [rank_begin(r), rank_end(r)).
  CellId rank_begin(int r) const { return rank_offsets_[r]; }
  CellId rank_end(int r) const { return rank_offsets_[r + 1]; }
  std::size_t rank_count(int r) const { return rank_end(r) - rank_begin(r); }

  // Cover relations below / above a cell, sorted by id.
  std::span<const CellId> facets(CellId id) const {
    return {facet_ids_.data() + facet_offsets_[id], facet_ids_.data() + facet_offsets_[id + 1]};
  }
  std::span<const CellId> cofacets(CellId id) const {
    return {cofacet_ids_.data() + cofacet_offsets_[id],
            cofacet_ids_.data() + cofacet_offsets_[id + 1]};
  }

  std::optional<CellId> find(const Word& canon) const;
  // Canonicalizes first.
  std::optional<CellId> find_word(const Word& w) const;

  GeneratorSet descents(CellId id) const { return descents_[id]; }

  friend FacePoset build_poset(const OrderedSystem& sys, std::vector<Cell> cells,
                               const BuildOptions& options);

 private:
  OrderedSystem system_;
  std::vector<Cell> cells_;
  std::vector<CellId> rank_offsets_;
  std::vector<std::size_t> facet_offsets_;
  std::vector<CellId> facet_ids_;
  std::vector<std::size_t> cofacet_offsets_;
  std::vector<CellId> cofacet_ids_;
  std::vector<GeneratorSet> descents_;
  std::unordered_map<std::uint64_t, CellId> index_;
};

// All boolean involutions (including the empty cell), sorted by (rank, canon).
// Throws kResourceLimit once more than options.max_cells cells appear.
std::vector<Cell> enumerate_cells(const OrderedSystem& sys, const BuildOptions& options = {});

// Throws kMissingFacet when a facet is absent from `cells`.
FacePoset build_poset(const OrderedSystem& sys, std::vector<Cell> cells,
                      const BuildOptions& options = {});

inline FacePoset build_complex(const OrderedSystem& sys, const BuildOptions& options = {}) {
  return build_poset(sys, enumerate_cells(sys, options), options);
}

// f[d + 1] = number of cells of dimension d, d = -1 .. n-1.
std::vector<std::int64_t> f_vector(const FacePoset& p);

// Sum over d >= 0 of (-1)^d f_d, minus 1 for the empty cell.
std::int64_t reduced_euler(const FacePoset& p);

// Reduced mod-2 Betti numbers; betti[d + 1] is b~_d for d = -1 .. n-1.
struct BettiVector {
  std::vector<std::int64_t> values;

  std::int64_t at_dim(int d) const { return values.at(d + 1); }
  std::int64_t top() const { return values.back(); }
  std::int64_t alternating_sum() const;
  // Nonzero only in the top dimension (or everywhere zero).
  bool concentrated_in_top() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector betti_gf2(const FacePoset& p);

// Rank over GF(2) of a sparse 0/1 matrix given as columns of sorted row indices.
std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns);

struct SimplicialReport {
  bool ok = true;
  std::size_t cells_checked = 0;
  std::string failure;
};

// Every cell has exactly rank(c) distinct facets and 2^rank(c) cells below it.
SimplicialReport check_simplicial(const FacePoset& p);

// Every cell below top rank is a facet of something.
SimplicialReport check_pure(const FacePoset& p);

// A rank-preserving bijection between two posets that maps covers onto covers.
// Cells are matched by canonical word; returns an empty string on success.
std::string check_isomorphic(const FacePoset& a, const FacePoset& b);

}  // namespace boolinv

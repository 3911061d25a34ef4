#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolinv/complex.hpp"

namespace boolinv {

// A matching on the cells of a FacePoset: mate(x) == x means x is critical.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t cells);
  // Arbitrary map, possibly not an involution; for feeding the verifiers.
  static Matching from_map(std::vector<CellId> mates);

  std::size_t size() const { return mates_.size(); }
  CellId mate(CellId id) const { return mates_[id]; }
  bool is_critical(CellId id) const { return mates_[id] == id; }

  void pair(CellId a, CellId b);
  void unpair(CellId a);

  std::vector<CellId> critical() const;
  std::size_t pair_count() const;
  const std::vector<CellId>& mates() const { return mates_; }

 private:
  std::vector<CellId> mates_;
};

struct MorseReport {
  bool is_matching = true;
  bool acyclic = true;
  std::size_t pairs = 0;
  std::vector<CellId> critical;
  std::vector<int> critical_dims;  // rank - 1 of each critical cell
  // First pair that breaks involutivity or the cover relation.
  std::optional<std::pair<CellId, CellId>> bad_pair;
  // a_1, M(a_1), a_2, M(a_2), ..., a_k, M(a_k); back to a_1 by a down edge.
  std::vector<CellId> cycle;

  // Gamma-matching clauses; only meaningful after verify_gamma_matching.
  bool critical_top_dim = true;
  bool preserves_gamma = true;
  bool critical_in_gamma = true;

  std::string failure;

  bool ok() const {
    return is_matching && acyclic && critical_top_dim && preserves_gamma && critical_in_gamma;
  }
};

// Cells a with s_n <= a and s_n not a right descent of a. For n = 0 this is
// the empty cell alone.
std::vector<bool> gamma_mask(const FacePoset& p);
std::vector<CellId> gamma_set(const FacePoset& p);

// Involutivity and covers; fills pairs/critical.
MorseReport verify_matching(const FacePoset& p, const Matching& m);
// Directed cycle search in the Hasse diagram with matched edges pointing up.
MorseReport verify_acyclic(const FacePoset& p, const Matching& m);
// Matching + acyclic + all four Gamma clauses.
MorseReport verify_gamma_matching(const FacePoset& p, const Matching& m);

struct GammaPartition {
  // part[id] in {1, 2, 3}.
  std::vector<std::uint8_t> part;
  std::vector<CellId> p1, p2, p3;
  // Append-suffix images: p2_source[i] is the W_{-3} cell mapped onto p2[i],
  // p3_source[i] the Gamma(W_{-2}) cell mapped onto p3[i].
  std::vector<Cell> p2_source, p3_source;

  std::vector<bool> mask(std::initializer_list<int> parts) const;
};

// Builds P2 from Delta_inv(W_{-3}) and P3 from Gamma(W_{-2}) by appending
// suffixes and checks they tile Gamma(W). Throws kNotPathEnded, or
// kPartitionMismatch when the pieces do not fit.
GammaPartition partition_p123(const FacePoset& p, const BuildOptions& options = {});

struct IdealReport {
  bool ok = true;
  // t < a with a in the set and t outside it.
  std::optional<std::pair<CellId, CellId>> violation;
  std::string failure;
};

IdealReport check_order_ideal(const FacePoset& p, const std::vector<bool>& members);
// P1 and P1 u P2 are order ideals.
IdealReport check_patchwork(const FacePoset& p, const GammaPartition& partition);

// The complete matching a <-> a s_n on P1.
Matching toggle_matching(const FacePoset& p);

struct SearchOptions {
  std::size_t node_limit = 50'000'000;
};

// Toggle matching on P1 plus a backtracking search on the Gamma subposet for
// an acyclic matching whose critical cells all have rank n. Throws
// kNoGammaMatching when no such matching exists, kResourceLimit when the node
// budget runs out first.
Matching search_gamma_matching(const FacePoset& p, const SearchOptions& options = {});

struct GammaOptions {
  BuildOptions build;
  SearchOptions search;
  // Path-ended systems with more generators than this recurse on W_{-2}, W_{-3}.
  int base_rank = 5;
};

struct GammaMatching {
  FacePoset poset;
  Matching matching;
  MorseReport report;
  bool recursive = false;
  // Critical counts of the two truncations, when recursive.
  std::size_t critical_minus2 = 0;
  std::size_t critical_minus3 = 0;
};

// Recursive construction for path-ended systems, search otherwise. The result
// is always re-verified; inspect report.ok(). Throws kNoGammaMatching if a base
// search or a sub-matching fails.
GammaMatching build_gamma_matching(const OrderedSystem& sys, const GammaOptions& options = {});

}  // namespace boolinv

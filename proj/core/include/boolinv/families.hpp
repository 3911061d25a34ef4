#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolinv/complex.hpp"
#include "boolinv/coxsys.hpp"

namespace boolinv {

// P_0 = 1, P_1 = P_2 = 0, P_k = P_{k-2} + P_{k-3}.
std::uint64_t padovan(int k);

// Closed-form number of spheres in the wedge for a family preset:
// A_n = P_n, B_n = P_{n+3}, D_n = P_{n+2}, E_6 = 0, E_7 = E_8 = 1,
// F_4 = 0, H_3 = H_4 = 1, I_2(m) = 1 for m >= 4, I_2(3) = 0 (it is A_2),
// tF4 = tE8 = 1. Throws kRankOutOfRange for anything else.
std::int64_t expected_betti(const FamilySpec& spec);

struct RecurrenceReport {
  std::string system;
  std::int64_t betti = 0;         // top reduced Betti number of Z
  std::int64_t betti_minus2 = 0;  // ... of Z_{-2}
  std::int64_t betti_minus3 = 0;  // ... of Z_{-3}
  bool wedge = true;              // all three concentrated in top dimension
  bool ok = false;
};

// beta(Z) = beta(Z_{-2}) + beta(Z_{-3}), all three by GF(2) homology.
RecurrenceReport check_recurrence(const OrderedSystem& sys, const BuildOptions& options = {});

struct TableRow {
  std::string system;
  int rank = 0;
  std::int64_t expected = 0;
  std::vector<std::int64_t> betti;  // full reduced Betti vector
  std::int64_t homology = 0;        // top entry
  std::optional<std::int64_t> morse_critical;
  bool match = false;
};

struct BettiTable {
  char family = 'A';
  std::vector<TableRow> rows;

  bool all_match() const;
};

struct TableOptions {
  BuildOptions build;
  bool with_morse = true;
  // Rows are computed concurrently when > 1; output order is fixed by rank.
  unsigned threads = 1;
};

// Rows for family letter A, B, D, E or H over ranks [from, upto].
BettiTable betti_table(char family, int from, int upto, const TableOptions& options = {});

std::string format_table(const BettiTable& table);
std::string table_json(const BettiTable& table);

}  // namespace boolinv

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "boolinv/complex.hpp"
#include "support.hpp"

namespace boolinv {
namespace {

using testing::cell;

std::vector<std::int64_t> f_of(const char* name) { return f_vector(build_complex(family(name))); }

TEST(Enumerate, SmallComplexes) {
  EXPECT_EQ(f_of("A2"), (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_EQ(f_of("B2"), (std::vector<std::int64_t>{1, 2, 2}));
  EXPECT_EQ(f_of("A3"), (std::vector<std::int64_t>{1, 3, 3, 2}));
  EXPECT_EQ(f_of("A1"), (std::vector<std::int64_t>{1, 1}));
}

TEST(Enumerate, EmptySystemHasOnlyTheEmptyCell) {
  const FacePoset p = build_complex(truncate(family("A3"), 3));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.facets(0).empty());
  EXPECT_TRUE(p.cofacets(0).empty());
  EXPECT_EQ(betti_gf2(p).values, (std::vector<std::int64_t>{1}));
}

// Independent count: canonical forms of every injective word.
TEST(Enumerate, MatchesBruteForceOverInjectiveWords) {
  for (const char* name : {"A5", "B5", "D5", "E6", "F4", "H4", "I2(6)", "tF4"}) {
    const OrderedSystem sys = family(name);
    std::set<Cell> brute;
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        brute.insert(canonical(w, sys.graph));
        for (int s = 0; s < sys.size(); ++s)
          if (!w.contains(s)) next.push_back(w.appended(s));
      }
      frontier = std::move(next);
    }
    const auto cells = enumerate_cells(sys);
    EXPECT_EQ(std::set<Cell>(cells.begin(), cells.end()), brute) << name;
    EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end())) << name;
  }
}

TEST(FacePoset, CoversInSmallCases) {
  const FacePoset a2 = build_complex(family("A2"));
  const CellId top = *a2.find(cell(a2.system(), "s1 s2").canon);
  EXPECT_EQ(a2.facets(top).size(), 2u);
  for (CellId f : a2.facets(top)) EXPECT_EQ(a2.rank(f), 1);
  EXPECT_EQ(a2.find(parse_word("s2 s1")), std::nullopt);
  EXPECT_EQ(a2.find_word(parse_word("s2 s1")), top);

  const FacePoset b2 = build_complex(family("B2"));
  for (CellId id = b2.rank_begin(2); id < b2.rank_end(2); ++id) {
    std::set<std::string> names;
    for (CellId f : b2.facets(id)) names.insert(to_string(b2.cell(f)));
    EXPECT_EQ(names, (std::set<std::string>{"s1", "s2"}));
  }
  EXPECT_EQ(b2.cofacets(0).size(), 2u);
}

TEST(FacePoset, DescentsCached) {
  const FacePoset p = build_complex(family("D5"));
  for (CellId id = 0; id < p.size(); ++id) EXPECT_EQ(p.descents(id), descents(p.cell(id), p.graph()));
}

TEST(FacePoset, ThreadCountDoesNotChangeTheResult) {
  BuildOptions one, many;
  many.threads = 4;
  const FacePoset a = build_complex(family("E7"), one);
  const FacePoset b = build_complex(family("E7"), many);
  ASSERT_EQ(a.cells(), b.cells());
  for (CellId id = 0; id < a.size(); ++id) {
    ASSERT_TRUE(std::ranges::equal(a.facets(id), b.facets(id)));
    ASSERT_TRUE(std::ranges::equal(a.cofacets(id), b.cofacets(id)));
  }
}

TEST(FacePoset, ResourceGuard) {
  BuildOptions small;
  small.max_cells = 50;
  try {
    build_complex(family("A6"), small);
    FAIL() << "expected ResourceLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(Homology, SmallComplexes) {
  EXPECT_EQ(betti_gf2(build_complex(family("B2"))).values, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(betti_gf2(build_complex(family("A2"))).values, (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(betti_gf2(build_complex(family("A3"))).values, (std::vector<std::int64_t>{0, 0, 0, 1}));
}

TEST(Homology, ReducedEuler) {
  EXPECT_EQ(reduced_euler(build_complex(family("A3"))), 1);
  EXPECT_EQ(reduced_euler(build_complex(family("B2"))), -1);
  EXPECT_EQ(reduced_euler(build_complex(family("A1"))), 0);
}

TEST(Homology, Gf2Rank) {
  EXPECT_EQ(gf2_rank({}), 0u);
  EXPECT_EQ(gf2_rank({{0, 1}, {1, 2}, {0, 2}}), 2u);
  EXPECT_EQ(gf2_rank({{0}, {1}, {2}}), 3u);
  EXPECT_EQ(gf2_rank({{}, {3}, {3}}), 1u);
}

// Dense Gaussian elimination over GF(2), one bool row per cell of rank r - 1.
std::size_t dense_rank(const FacePoset& p, int r) {
  if (r < 1 || r > p.top_rank()) return 0;
  const std::size_t rows = p.rank_count(r - 1), cols = p.rank_count(r);
  std::vector<std::vector<bool>> m(rows, std::vector<bool>(cols, false));
  for (CellId c = p.rank_begin(r); c < p.rank_end(r); ++c)
    for (CellId f : p.facets(c)) m[f - p.rank_begin(r - 1)][c - p.rank_begin(r)] = true;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && !m[pivot][col]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != rank && m[i][col]) {
        for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] != m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

TEST(Homology, AgreesWithDenseElimination) {
  for (const char* name : {"A5", "A6", "B5", "D5", "E6", "F4", "H4", "tF4", "I2(5)"}) {
    const FacePoset p = build_complex(family(name));
    const BettiVector b = betti_gf2(p);
    for (int r = 0; r <= p.top_rank(); ++r) {
      const auto expected = static_cast<std::int64_t>(p.rank_count(r) - dense_rank(p, r) - dense_rank(p, r + 1));
      EXPECT_EQ(b.at_dim(r - 1), expected) << name << " dim " << r - 1;
    }
    EXPECT_EQ(b.alternating_sum(), reduced_euler(p)) << name;
  }
}

TEST(BettiVector, Helpers) {
  BettiVector b{{0, 0, 0, 2}};
  EXPECT_EQ(b.top(), 2);
  EXPECT_EQ(b.at_dim(2), 2);
  EXPECT_EQ(b.alternating_sum(), 2);
  EXPECT_TRUE(b.concentrated_in_top());
  EXPECT_FALSE((BettiVector{{0, 1, 0, 2}}).concentrated_in_top());
  EXPECT_EQ((BettiVector{{0, 1, 0, 2}}).alternating_sum(), 1 + 2);
}

TEST(Simplicial, PresetsPass) {
  for (const char* name : {"D4", "F4", "E6", "B5", "H3", "tF4"}) {
    const FacePoset p = build_complex(family(name));
    EXPECT_TRUE(check_simplicial(p).ok) << name << ": " << check_simplicial(p).failure;
    EXPECT_TRUE(check_pure(p).ok) << name;
  }
}

TEST(Simplicial, MissingVertexIsCaught) {
  const OrderedSystem sys = family("A3");
  std::vector<Cell> cells = enumerate_cells(sys);
  const Cell removed = cell(sys, "s2");
  std::erase(cells, removed);

  try {
    build_poset(sys, cells);
    FAIL() << "expected MissingFacet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingFacet);
  }

  BuildOptions lenient;
  lenient.allow_missing_facets = true;
  const FacePoset broken = build_poset(sys, cells, lenient);
  const SimplicialReport report = check_simplicial(broken);
  EXPECT_FALSE(report.ok);
  EXPECT_NE(report.failure.find("facets, expected"), std::string::npos) << report.failure;
}

TEST(Isomorphic, LabelCollapse) {
  EXPECT_EQ(check_isomorphic(build_complex(family("H3")), build_complex(family("B3"))), "");
  EXPECT_EQ(check_isomorphic(build_complex(family("I2(9)")), build_complex(family("I2(4)"))), "");
  EXPECT_NE(check_isomorphic(build_complex(family("A3")), build_complex(family("B3"))), "");
  EXPECT_NE(check_isomorphic(build_complex(family("I2(3)")), build_complex(family("I2(4)"))), "");
}

}  // namespace
}  // namespace boolinv

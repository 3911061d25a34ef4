#include "boolinv/morse.hpp"

#include <algorithm>

namespace boolinv {

// ---------------------------------------------------------------------------
// Matching

Matching::Matching(std::size_t cells) : mates_(cells) {
  for (std::size_t i = 0; i < cells; ++i) mates_[i] = static_cast<CellId>(i);
}

Matching Matching::from_map(std::vector<CellId> mates) {
  Matching m;
  m.mates_ = std::move(mates);
  return m;
}

void Matching::pair(CellId a, CellId b) {
  mates_[a] = b;
  mates_[b] = a;
}

void Matching::unpair(CellId a) {
  const CellId b = mates_[a];
  mates_[a] = a;
  mates_[b] = b;
}

std::vector<CellId> Matching::critical() const {
  std::vector<CellId> out;
  for (CellId i = 0; i < mates_.size(); ++i)
    if (mates_[i] == i) out.push_back(i);
  return out;
}

std::size_t Matching::pair_count() const {
  std::size_t n = 0;
  for (CellId i = 0; i < mates_.size(); ++i)
    if (mates_[i] > i) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Gamma

std::vector<bool> gamma_mask(const FacePoset& p) {
  const int n = p.top_rank();
  std::vector<bool> mask(p.size(), false);
  if (n == 0) {
    mask[0] = true;
    return mask;
  }
  const int last = n - 1;
  for (CellId id = 0; id < p.size(); ++id) {
    mask[id] = p.cell(id).canon.contains(last) && !p.descents(id).contains(last);
  }
  return mask;
}

std::vector<CellId> gamma_set(const FacePoset& p) {
  const auto mask = gamma_mask(p);
  std::vector<CellId> out;
  for (CellId id = 0; id < p.size(); ++id)
    if (mask[id]) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

bool covers(const FacePoset& p, CellId lower, CellId upper) {
  const auto below = p.facets(upper);
  return std::binary_search(below.begin(), below.end(), lower);
}

// Edge x -> y of G_M: down along a cover unless the pair is matched, in
// which case it points up.
template <typename Visit>
void for_each_successor(const FacePoset& p, const Matching& m, CellId x, Visit&& visit) {
  const CellId up = m.mate(x);
  if (up != x && p.rank(up) == p.rank(x) + 1) visit(up);
  for (CellId y : p.facets(x))
    if (m.mate(y) != x) visit(y);
}

}  // namespace

MorseReport verify_matching(const FacePoset& p, const Matching& m) {
  MorseReport report;
  if (m.size() != p.size()) {
    report.is_matching = false;
    report.failure = "matching covers " + std::to_string(m.size()) + " cells, poset has " +
                     std::to_string(p.size());
    return report;
  }
  for (CellId x = 0; x < p.size(); ++x) {
    const CellId y = m.mate(x);
    if (y == x) {
      report.critical.push_back(x);
      report.critical_dims.push_back(p.rank(x) - 1);
      continue;
    }
    const bool involutive = y < p.size() && m.mate(y) == x;
    const bool related = involutive && (covers(p, x, y) || covers(p, y, x));
    if (!related) {
      report.is_matching = false;
      report.bad_pair = {x, y};
      report.failure = involutive ? to_string(p.cell(x)) + " and " + to_string(p.cell(y)) +
                                        " are not in a cover relation"
                                  : "M(M(" + to_string(p.cell(x)) + ")) != " + to_string(p.cell(x));
      return report;
    }
    if (y > x) ++report.pairs;
  }
  return report;
}

MorseReport verify_acyclic(const FacePoset& p, const Matching& m) {
  MorseReport report = verify_matching(p, m);
  if (!report.is_matching) return report;

  // Iterative three-color DFS; the grey stack is the current path.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> color(p.size(), kWhite);
  std::vector<CellId> path;
  std::vector<std::vector<CellId>> pending;
  for (CellId root = 0; root < p.size() && report.acyclic; ++root) {
    if (color[root] != kWhite) continue;
    color[root] = kGrey;
    path.assign(1, root);
    pending.clear();
    pending.emplace_back();
    for_each_successor(p, m, root, [&](CellId y) { pending.back().push_back(y); });
    while (!path.empty()) {
      auto& todo = pending.back();
      if (todo.empty()) {
        color[path.back()] = kBlack;
        path.pop_back();
        pending.pop_back();
        continue;
      }
      const CellId y = todo.back();
      todo.pop_back();
      if (color[y] == kGrey) {
        auto start = std::find(path.begin(), path.end(), y);
        std::vector<CellId> cycle(start, path.end());
        // Rotate so the cycle opens with an upward edge a_1 -> M(a_1).
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          const CellId next = cycle[(i + 1) % cycle.size()];
          if (m.mate(cycle[i]) == next && p.rank(next) == p.rank(cycle[i]) + 1) {
            std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i), cycle.end());
            break;
          }
        }
        report.acyclic = false;
        report.cycle = std::move(cycle);
        std::string text;
        for (CellId c : report.cycle) text += "[" + to_string(p.cell(c)) + "] ";
        report.failure = "directed cycle: " + text;
        break;
      }
      if (color[y] == kWhite) {
        color[y] = kGrey;
        path.push_back(y);
        pending.emplace_back();
        for_each_successor(p, m, y, [&](CellId z) { pending.back().push_back(z); });
      }
    }
  }
  return report;
}

MorseReport verify_gamma_matching(const FacePoset& p, const Matching& m) {
  MorseReport report = verify_acyclic(p, m);
  if (!report.is_matching) return report;
  const auto gamma = gamma_mask(p);
  for (std::size_t i = 0; i < report.critical.size(); ++i) {
    const CellId c = report.critical[i];
    if (report.critical_dims[i] != p.top_rank() - 1 && report.critical_top_dim) {
      report.critical_top_dim = false;
      if (report.failure.empty())
        report.failure = "critical cell " + to_string(p.cell(c)) + " is not top-dimensional";
    }
    if (!gamma[c] && report.critical_in_gamma) {
      report.critical_in_gamma = false;
      if (report.failure.empty()) report.failure = "critical cell " + to_string(p.cell(c)) + " lies outside Gamma";
    }
  }
  for (CellId x = 0; x < p.size(); ++x) {
    if (gamma[x] != gamma[m.mate(x)]) {
      report.preserves_gamma = false;
      if (report.failure.empty())
        report.failure = to_string(p.cell(x)) + " and its mate straddle the Gamma boundary";
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Partition and patchwork

std::vector<bool> GammaPartition::mask(std::initializer_list<int> parts) const {
  std::vector<bool> out(part.size(), false);
  for (std::size_t i = 0; i < part.size(); ++i)
    for (int k : parts)
      if (part[i] == k) out[i] = true;
  return out;
}

namespace {

Word with_suffix(const Word& w, std::initializer_list<int> suffix) {
  Word out = w;
  for (int s : suffix) out.push_back(s);
  return out;
}

}  // namespace

GammaPartition partition_p123(const FacePoset& p, const BuildOptions& options) {
  const auto& sys = p.system();
  if (!is_path_ended(sys)) throw Error(ErrorCode::kNotPathEnded, sys.name);
  const int n = sys.size();
  const int sn = n - 1, sn1 = n - 2, sn2 = n - 3;
  const auto gamma = gamma_mask(p);
  auto mismatch = [&](const std::string& what) {
    return Error(ErrorCode::kPartitionMismatch, sys.name + ": " + what);
  };

  GammaPartition out;
  out.part.assign(p.size(), 0);

  const FacePoset minus3 = build_complex(truncate(sys, 3), options);
  for (const Cell& x : minus3.cells()) {
    const auto id = p.find_word(with_suffix(x.canon, {sn2, sn, sn1}));
    if (!id) throw mismatch("image of " + to_string(x) + " under x -> x s_{n-2} s_n s_{n-1} is missing");
    if (out.part[*id] != 0) throw mismatch("x -> x s_{n-2} s_n s_{n-1} is not injective");
    if (!gamma[*id]) throw mismatch(to_string(p.cell(*id)) + " lies in P2 but not in Gamma");
    out.part[*id] = 2;
    out.p2.push_back(*id);
    out.p2_source.push_back(x);
  }

  const FacePoset minus2 = build_complex(truncate(sys, 2), options);
  for (CellId y : gamma_set(minus2)) {
    const auto id = p.find_word(with_suffix(minus2.cell(y).canon, {sn, sn1}));
    if (!id) throw mismatch("image of " + to_string(minus2.cell(y)) + " under y -> y s_n s_{n-1} is missing");
    if (out.part[*id] != 0) throw mismatch(to_string(p.cell(*id)) + " lies in both P2 and P3");
    if (!gamma[*id]) throw mismatch(to_string(p.cell(*id)) + " lies in P3 but not in Gamma");
    out.part[*id] = 3;
    out.p3.push_back(*id);
    out.p3_source.push_back(minus2.cell(y));
  }

  for (CellId id = 0; id < p.size(); ++id) {
    if (out.part[id] != 0) continue;
    if (gamma[id]) throw mismatch(to_string(p.cell(id)) + " is in Gamma but in neither P2 nor P3");
    out.part[id] = 1;
    out.p1.push_back(id);
  }
  return out;
}

IdealReport check_order_ideal(const FacePoset& p, const std::vector<bool>& members) {
  IdealReport report;
  for (CellId a = 0; a < p.size(); ++a) {
    if (!members[a]) continue;
    for (CellId t : p.facets(a)) {
      if (!members[t]) {
        report.ok = false;
        report.violation = {t, a};
        report.failure = to_string(p.cell(t)) + " < " + to_string(p.cell(a)) + " escapes the ideal";
        return report;
      }
    }
  }
  return report;
}

IdealReport check_patchwork(const FacePoset& p, const GammaPartition& partition) {
  IdealReport first = check_order_ideal(p, partition.mask({1}));
  if (!first.ok) {
    first.failure = "P1: " + first.failure;
    return first;
  }
  IdealReport second = check_order_ideal(p, partition.mask({1, 2}));
  if (!second.ok) second.failure = "P1 u P2: " + second.failure;
  return second;
}

// ---------------------------------------------------------------------------
// Construction

Matching toggle_matching(const FacePoset& p) {
  Matching m(p.size());
  const int n = p.top_rank();
  if (n == 0) return m;
  const int last = n - 1;
  const auto gamma = gamma_mask(p);
  for (CellId id = 0; id < p.size(); ++id) {
    if (gamma[id] || !m.is_critical(id)) continue;
    const auto partner = p.find(toggle(p.cell(id), last, p.graph()).canon);
    if (!partner) {
      throw Error(ErrorCode::kMissingFacet,
                  "toggle of " + to_string(p.cell(id)) + " by s" + std::to_string(n) + " is missing");
    }
    m.pair(id, *partner);
  }
  return m;
}

namespace {

class GammaSearch {
 public:
  GammaSearch(const FacePoset& p, Matching& m, const SearchOptions& options)
      : p_(p), m_(m), options_(options), gamma_(gamma_mask(p)), stamp_(p.size(), 0) {
    for (CellId id = 0; id < p.size(); ++id)
      if (gamma_[id] && p.rank(id) < p.top_rank()) must_match_.push_back(id);
  }

  bool run() { return solve(0); }

 private:
  bool solve(std::size_t next) {
    while (next < must_match_.size() && !m_.is_critical(must_match_[next])) ++next;
    if (next == must_match_.size()) return true;
    if (++nodes_ > options_.node_limit) {
      throw Error(ErrorCode::kResourceLimit,
                  p_.system().name + ": search budget of " + std::to_string(options_.node_limit) +
                      " nodes exhausted");
    }
    const CellId c = must_match_[next];
    for (CellId u : p_.cofacets(c)) {
      if (!gamma_[u] || !m_.is_critical(u)) continue;
      m_.pair(c, u);
      if (!reaches(u, c) && solve(next + 1)) return true;
      m_.unpair(c);
    }
    return false;
  }

  // Directed path from `from` to `target` in G_M restricted to Gamma.
  bool reaches(CellId from, CellId target) {
    ++epoch_;
    stack_.assign(1, from);
    stamp_[from] = epoch_;
    while (!stack_.empty()) {
      const CellId x = stack_.back();
      stack_.pop_back();
      bool found = false;
      for_each_successor(p_, m_, x, [&](CellId y) {
        if (found || !gamma_[y] || stamp_[y] == epoch_) return;
        if (y == target) {
          found = true;
          return;
        }
        stamp_[y] = epoch_;
        stack_.push_back(y);
      });
      if (found) return true;
    }
    return false;
  }

  const FacePoset& p_;
  Matching& m_;
  SearchOptions options_;
  std::vector<bool> gamma_;
  std::vector<CellId> must_match_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<CellId> stack_;
  std::size_t nodes_ = 0;
};

}  // namespace

Matching search_gamma_matching(const FacePoset& p, const SearchOptions& options) {
  Matching m = toggle_matching(p);
  GammaSearch search(p, m, options);
  if (!search.run()) {
    throw Error(ErrorCode::kNoGammaMatching,
                p.system().name + ": no acyclic matching on Gamma with only top-dimensional critical cells");
  }
  return m;
}

namespace {

class GammaBuilder {
 public:
  GammaBuilder(const OrderedSystem& sys, const GammaOptions& options) : sys_(sys), options_(options) {}

  // Truncation W_{-k} of the top-level system, memoized.
  const GammaMatching& level(int k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    GammaMatching result = build(k);
    return memo_.emplace(k, std::move(result)).first->second;
  }

 private:
  GammaMatching build(int k) {
    const OrderedSystem sys = truncate(sys_, k);
    GammaMatching out;
    out.poset = build_complex(sys, options_.build);
    const FacePoset& p = out.poset;
    const int n = sys.size();

    if (is_path_ended(sys) && n > options_.base_rank) {
      out.recursive = true;
      const GammaMatching& minus3 = level(k + 3);
      const GammaMatching& minus2 = level(k + 2);
      for (const auto* sub : {&minus3, &minus2}) {
        if (!sub->report.ok()) {
          throw Error(ErrorCode::kNoGammaMatching,
                      sub->poset.system().name + " has no verified Gamma-matching: " + sub->report.failure);
        }
      }
      const GammaPartition partition = partition_p123(p, options_.build);
      out.matching = toggle_matching(p);

      const int sn = n - 1, sn1 = n - 2, sn2 = n - 3;
      auto image = [&](const Cell& c, std::initializer_list<int> suffix) {
        const auto id = p.find_word(with_suffix(c.canon, suffix));
        if (!id) throw Error(ErrorCode::kPartitionMismatch, "missing image of " + to_string(c));
        return *id;
      };
      for (std::size_t i = 0; i < partition.p2.size(); ++i) {
        const auto src = minus3.poset.find(partition.p2_source[i].canon);
        const Cell& partner = minus3.poset.cell(minus3.matching.mate(*src));
        out.matching.pair(partition.p2[i], image(partner, {sn2, sn, sn1}));
      }
      for (std::size_t i = 0; i < partition.p3.size(); ++i) {
        const auto src = minus2.poset.find(partition.p3_source[i].canon);
        const Cell& partner = minus2.poset.cell(minus2.matching.mate(*src));
        out.matching.pair(partition.p3[i], image(partner, {sn, sn1}));
      }
      out.critical_minus3 = minus3.report.critical.size();
      out.critical_minus2 = minus2.report.critical.size();
    } else {
      out.matching = search_gamma_matching(p, options_.search);
    }
    out.report = verify_gamma_matching(p, out.matching);
    return out;
  }

  OrderedSystem sys_;
  GammaOptions options_;
  std::map<int, GammaMatching> memo_;
};

}  // namespace

GammaMatching build_gamma_matching(const OrderedSystem& sys, const GammaOptions& options) {
  GammaBuilder builder(sys, options);
  return builder.level(0);
}

}  // namespace boolinv

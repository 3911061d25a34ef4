#include "boolinv/coxsys.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace boolinv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kAsymmetricLabel: return "AsymmetricLabel";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kNonInjectiveWord: return "NonInjectiveWord";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kMissingFacet: return "MissingFacet";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kNoGammaMatching: return "NoGammaMatching";
    case ErrorCode::kNotPathEnded: return "NotPathEnded";
    case ErrorCode::kUnsupportedModel: return "UnsupportedModel";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// CoxeterGraph

CoxeterGraph::CoxeterGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) {
    throw Error(ErrorCode::kRankOutOfRange,
                "generator count " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxGenerators));
  }
  labels_.assign(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) labels_[index(i, i)] = 1;
}

void CoxeterGraph::set_label(int i, int j, int m) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  if (i == j) throw Error(ErrorCode::kInvalidLabel, "diagonal labels are fixed at 1");
  if (m < 2) throw Error(ErrorCode::kInvalidLabel, "label " + std::to_string(m) + " < 2");
  labels_[index(i, j)] = m;
  labels_[index(j, i)] = m;
}

CoxeterGraph CoxeterGraph::prefix(int k) const {
  CoxeterGraph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.set_label(i, j, label(i, j));
  return g;
}

CoxeterGraph CoxeterGraph::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != n_) {
    throw Error(ErrorCode::kMalformedInput, "order must list every generator once");
  }
  std::vector<bool> seen(n_, false);
  for (int v : order) {
    if (v < 0 || v >= n_ || seen[v]) {
      throw Error(ErrorCode::kMalformedInput, "order must be a permutation of 1..n");
    }
    seen[v] = true;
  }
  CoxeterGraph g(n_);
  for (int p = 0; p < n_; ++p)
    for (int q = p + 1; q < n_; ++q) g.set_label(p, q, label(order[p], order[q]));
  return g;
}

int CoxeterGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j)
    if (j != i && label(i, j) != 2) ++d;
  return d;
}

bool CoxeterGraph::is_tree() const {
  if (n_ == 0) return true;
  int edges = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (label(i, j) != 2) ++edges;
  if (edges != n_ - 1) return false;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (!seen[w] && w != v && label(v, w) != 2) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

// ---------------------------------------------------------------------------
// Graph file format

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view token) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

int parse_label(std::string_view token, int line_no) {
  if (token == "inf" || token == "infinity" || token == "oo") return kInfinity;
  auto v = to_int(token);
  if (!v) {
    throw Error(ErrorCode::kMalformedInput,
                "line " + std::to_string(line_no) + ": bad label '" + std::string(token) + "'");
  }
  return *v;
}

}  // namespace

CoxeterGraph parse_graph(std::string_view text) {
  std::optional<CoxeterGraph> graph;
  std::vector<bool> assigned;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    const std::string where = "line " + std::to_string(line_no);

    if (!graph) {
      auto n = tokens.size() == 1 ? to_int(tokens[0]) : std::nullopt;
      if (!n || *n < 0) throw Error(ErrorCode::kMalformedInput, where + ": expected generator count");
      if (*n > kMaxGenerators) {
        throw Error(ErrorCode::kRankOutOfRange, where + ": at most " +
                                                    std::to_string(kMaxGenerators) +
                                                    " generators supported");
      }
      graph.emplace(*n);
      assigned.assign(static_cast<std::size_t>(*n) * *n, false);
      continue;
    }
    if (tokens.size() != 3) throw Error(ErrorCode::kMalformedInput, where + ": expected 'i j m'");
    auto i = to_int(tokens[0]);
    auto j = to_int(tokens[1]);
    if (!i || !j) throw Error(ErrorCode::kMalformedInput, where + ": bad generator index");
    const int n = graph->size();
    if (*i < 1 || *j < 1 || *i > n || *j > n) {
      throw Error(ErrorCode::kIndexOutOfRange, where + ": index outside 1.." + std::to_string(n));
    }
    if (*i == *j) throw Error(ErrorCode::kInvalidLabel, where + ": diagonal labels are fixed at 1");
    const int m = parse_label(tokens[2], line_no);
    if (m < 2) throw Error(ErrorCode::kInvalidLabel, where + ": label must be >= 2");
    const std::size_t key = static_cast<std::size_t>(std::min(*i, *j) - 1) * n + (std::max(*i, *j) - 1);
    if (assigned[key] && graph->label(*i - 1, *j - 1) != m) {
      throw Error(ErrorCode::kAsymmetricLabel, where + ": conflicting label for the same pair");
    }
    assigned[key] = true;
    graph->set_label(*i - 1, *j - 1, m);
  }
  if (!graph) throw Error(ErrorCode::kMalformedInput, "empty graph file");
  return *graph;
}

std::string format_graph(const CoxeterGraph& g) {
  std::ostringstream out;
  out << g.size() << "\n";
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const int m = g.label(i, j);
      if (m == 2) continue;
      out << i + 1 << ' ' << j + 1 << ' ';
      if (m == kInfinity) out << "inf"; else out << m;
      out << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Families

namespace {

std::string label_text(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

void check_range(const FamilySpec& spec) {
  const int n = spec.rank;
  bool ok = true;
  switch (spec.family) {
    case Family::kA: ok = n >= 1; break;
    case Family::kB: ok = n >= 2; break;
    case Family::kD: ok = n >= 2; break;
    case Family::kE: ok = n >= 3 && n <= 8; break;
    case Family::kF: ok = n == 4; break;
    case Family::kH: ok = n >= 3 && n <= 4; break;
    case Family::kI2: ok = n == 2 && spec.extra >= 3; break;
    case Family::kAffineF4: ok = n == 5; break;
    case Family::kAffineE8: ok = n == 9; break;
    case Family::kPathExt: ok = spec.extra >= spec.base_rank; break;
  }
  if (ok && n > kMaxGenerators) ok = false;
  if (!ok) throw Error(ErrorCode::kRankOutOfRange, family_name(spec));
}

CoxeterGraph path_graph(int n) {
  CoxeterGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_label(i, i + 1, 3);
  return g;
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kA: return "A" + std::to_string(spec.rank);
    case Family::kB: return "B" + std::to_string(spec.rank);
    case Family::kD: return "D" + std::to_string(spec.rank);
    case Family::kE: return "E" + std::to_string(spec.rank);
    case Family::kF: return "F" + std::to_string(spec.rank);
    case Family::kH: return "H" + std::to_string(spec.rank);
    case Family::kI2: return "I2(" + label_text(spec.extra) + ")";
    case Family::kAffineF4: return "tF4";
    case Family::kAffineE8: return "tE8";
    case Family::kPathExt: {
      FamilySpec base{spec.base_family, spec.base_rank, spec.base_extra};
      return "pathext(" + family_name(base) + "," + std::to_string(spec.extra) + ")";
    }
  }
  return "?";
}

FamilySpec parse_family(std::string_view name) {
  const std::string text(trim(name));
  auto fail = [&]() -> FamilySpec {
    throw Error(ErrorCode::kMalformedInput, "unknown system name '" + text + "'");
  };
  if (text.empty()) return fail();

  if (text.rfind("pathext(", 0) == 0 && text.back() == ')') {
    const std::string inner = text.substr(8, text.size() - 9);
    const auto comma = inner.rfind(',');
    if (comma == std::string::npos) return fail();
    const FamilySpec base = parse_family(inner.substr(0, comma));
    auto target = to_int(trim(std::string_view(inner).substr(comma + 1)));
    if (!target || base.family == Family::kPathExt) return fail();
    FamilySpec spec;
    spec.family = Family::kPathExt;
    spec.rank = *target;
    spec.extra = *target;
    spec.base_family = base.family;
    spec.base_rank = base.rank;
    spec.base_extra = base.extra;
    check_range(spec);
    return spec;
  }
  if (text == "tF4") return FamilySpec{Family::kAffineF4, 5, 0};
  if (text == "tE8") return FamilySpec{Family::kAffineE8, 9, 0};
  if (text.rfind("I2(", 0) == 0 && text.back() == ')') {
    const std::string_view inner = std::string_view(text).substr(3, text.size() - 4);
    FamilySpec spec{Family::kI2, 2, 0};
    if (inner == "inf") {
      spec.extra = kInfinity;
    } else {
      auto m = to_int(inner);
      if (!m) return fail();
      spec.extra = *m;
    }
    check_range(spec);
    return spec;
  }
  Family f;
  switch (text[0]) {
    case 'A': f = Family::kA; break;
    case 'B': f = Family::kB; break;
    case 'D': f = Family::kD; break;
    case 'E': f = Family::kE; break;
    case 'F': f = Family::kF; break;
    case 'H': f = Family::kH; break;
    default: return fail();
  }
  auto n = to_int(std::string_view(text).substr(1));
  if (!n) return fail();
  FamilySpec spec{f, *n, 0};
  check_range(spec);
  return spec;
}

OrderedSystem family(const FamilySpec& spec) {
  check_range(spec);
  const int n = spec.rank;
  OrderedSystem sys;
  sys.name = family_name(spec);
  switch (spec.family) {
    case Family::kA:
      sys.graph = path_graph(n);
      break;
    case Family::kB:
    case Family::kH:
      sys.graph = path_graph(n);
      sys.graph.set_label(0, 1, spec.family == Family::kB ? 4 : 5);
      break;
    case Family::kD:
      // 1 and 2 both attach to 3, then a path 3-4-...-n.
      sys.graph = CoxeterGraph(n);
      if (n >= 3) {
        sys.graph.set_label(0, 2, 3);
        sys.graph.set_label(1, 2, 3);
      }
      for (int i = 2; i + 1 < n; ++i) sys.graph.set_label(i, i + 1, 3);
      break;
    case Family::kE:
      // Arms 2-1, 3, and 5-6-...-n around the branch vertex 4.
      sys.graph = CoxeterGraph(n);
      sys.graph.set_label(0, 1, 3);
      if (n >= 4) {
        sys.graph.set_label(1, 3, 3);
        sys.graph.set_label(2, 3, 3);
      }
      for (int i = 3; i + 1 < n; ++i) sys.graph.set_label(i, i + 1, 3);
      break;
    case Family::kF:
      sys.graph = path_graph(4);
      sys.graph.set_label(1, 2, 4);
      break;
    case Family::kI2:
      sys.graph = CoxeterGraph(2);
      sys.graph.set_label(0, 1, spec.extra);
      break;
    case Family::kAffineF4:
      sys.graph = extend_by_path(family(FamilySpec{Family::kF, 4, 0}), 5).graph;
      break;
    case Family::kAffineE8:
      sys.graph = extend_by_path(family(FamilySpec{Family::kE, 8, 0}), 9).graph;
      break;
    case Family::kPathExt:
      sys.graph =
          extend_by_path(family(FamilySpec{spec.base_family, spec.base_rank, spec.base_extra}),
                         spec.extra)
              .graph;
      break;
  }
  return sys;
}

CoxeterGraph collapse_labels(const CoxeterGraph& g) {
  CoxeterGraph out(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) out.set_label(i, j, std::min(g.label(i, j), 4));
  return out;
}

OrderedSystem truncate(const OrderedSystem& sys, int k) {
  if (k < 0 || k > sys.size()) {
    throw Error(ErrorCode::kRankOutOfRange,
                "cannot remove " + std::to_string(k) + " of " + std::to_string(sys.size()) +
                    " generators");
  }
  if (k == 0) return sys;
  return OrderedSystem{sys.graph.prefix(sys.size() - k), sys.name + "_{-" + std::to_string(k) + "}"};
}

bool is_path_ended(const OrderedSystem& sys) {
  const auto& g = sys.graph;
  const int n = g.size();
  if (n < 3) return false;
  const int last = n - 1, prev = n - 2;
  for (int i = 0; i <= n - 3; ++i)
    if (g.label(last, i) != 2) return false;
  for (int i = 0; i <= n - 4; ++i)
    if (g.label(prev, i) != 2) return false;
  return g.label(last, prev) == 3 && g.label(prev, prev - 1) == 3;
}

bool is_path_extension(const OrderedSystem& big, int base_n) {
  const int total = big.size();
  if (base_n < 0 || base_n > total) return false;
  for (int j = base_n; j < total; ++j) {
    for (int i = 0; i < total; ++i) {
      if (i == j) continue;
      const int expected = std::abs(i - j) == 1 ? 3 : 2;
      if (big.graph.label(i, j) != expected) return false;
    }
  }
  return true;
}

OrderedSystem extend_by_path(const OrderedSystem& sys, int target) {
  const int n = sys.size();
  if (target < n || target > kMaxGenerators) {
    throw Error(ErrorCode::kRankOutOfRange, "path extension target " + std::to_string(target));
  }
  CoxeterGraph g(target);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_label(i, j, sys.graph.label(i, j));
  for (int j = std::max(n, 1); j < target; ++j) g.set_label(j - 1, j, 3);
  return OrderedSystem{std::move(g), sys.name};
}

OrderedSystem reorder(const OrderedSystem& sys, const std::vector<int>& order) {
  return OrderedSystem{sys.graph.permuted(order), sys.name};
}

}  // namespace boolinv

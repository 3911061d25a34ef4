#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolinv/error.hpp"

namespace boolinv {

// Generators are stored 0-based; all text I/O is 1-based.
using Generator = std::uint8_t;

inline constexpr int kMaxGenerators = 15;
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// The only distinction the involution word calculus ever draws between labels.
enum class Bond : std::uint8_t { kCommute, kBraid3, kLong };

class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(int n);

  int size() const { return n_; }

  // m(i, j), 0-based; 1 on the diagonal, kInfinity for an infinite bond.
  int label(int i, int j) const { return labels_[index(i, j)]; }
  void set_label(int i, int j, int m);

  Bond bond(int i, int j) const {
    const int m = label(i, j);
    return m == 2 ? Bond::kCommute : (m == 3 ? Bond::kBraid3 : Bond::kLong);
  }
  bool commutes(int i, int j) const { return i == j || label(i, j) == 2; }

  // Induced graph on the first k generators.
  CoxeterGraph prefix(int k) const;
  // new index p -> old index order[p].
  CoxeterGraph permuted(const std::vector<int>& order) const;

  int degree(int i) const;
  bool is_tree() const;

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<int> labels_;
};

enum class Family { kA, kB, kD, kE, kF, kH, kI2, kAffineF4, kAffineE8, kPathExt };

struct FamilySpec {
  Family family = Family::kA;
  int rank = 1;
  // I2: the bond label (kInfinity allowed); pathext: target generator count.
  int extra = 0;
  // pathext only: the system being extended.
  Family base_family = Family::kA;
  int base_rank = 0;
  int base_extra = 0;
};

std::string family_name(const FamilySpec& spec);
FamilySpec parse_family(std::string_view name);

// A Coxeter graph whose generator indices define the total order s_1 < ... < s_n.
struct OrderedSystem {
  CoxeterGraph graph;
  std::string name;

  int size() const { return graph.size(); }
};

CoxeterGraph parse_graph(std::string_view text);
std::string format_graph(const CoxeterGraph& g);

OrderedSystem family(const FamilySpec& spec);
inline OrderedSystem family(std::string_view name) { return family(parse_family(name)); }

// Labels >= 4 (including infinity) become 4.
CoxeterGraph collapse_labels(const CoxeterGraph& g);

// W_{-k}: drop the k largest generators.
OrderedSystem truncate(const OrderedSystem& sys, int k);

bool is_path_ended(const OrderedSystem& sys);
bool is_path_extension(const OrderedSystem& big, int base_n);

// Attach a path of 3-bonds at the maximum generator until there are `target` generators.
OrderedSystem extend_by_path(const OrderedSystem& sys, int target);

// Reorder generators: position p of the result is old generator order[p] (0-based).
OrderedSystem reorder(const OrderedSystem& sys, const std::vector<int>& order);

}  // namespace boolinv

#pragma once

#include <string>
#include <vector>

#include "boolinv/coxsys.hpp"
#include "boolinv/words.hpp"

namespace boolinv::oracle {

// Exact models of the classical Coxeter groups, independent of the word
// calculus. Elements are vectors of ints:
//   A_n: one-line notation of a permutation of 1..n+1
//   B_n, D_n: one-line signed permutation of 1..n (entries +-1..+-n)
//   I_2(m): {reflect, k} for the map x -> (reflect ? -x : x) + k on Z/m
// Products apply the right factor first: (u * v)(i) = u(v(i)).
using Element = std::vector<int>;

enum class Kind { kA, kB, kD, kDihedral };

class Model {
 public:
  static Model type_a(int n);
  static Model type_b(int n);
  // Generator order matches family("D<n>"): s1 = [-2,-1,3,..], s2 = (1 2),
  // s_i = (i-1 i) for i >= 3.
  static Model type_d(int n);
  static Model dihedral(int m);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }

  Element identity() const;
  Element generator(int s) const;  // 0-based
  Element multiply(const Element& u, const Element& v) const;

  // w s if s w s = w, else s w s.
  Element act(const Element& w, int s) const;
  // Left-to-right fold of act over the letters, starting at the identity.
  Element eval_word(const Word& w) const;

  int length(const Element& w) const;
  GeneratorSet descents(const Element& w) const;
  bool is_involution(const Element& w) const;

  // The Coxeter graph realized by the generators: m(s,t) = order of st.
  CoxeterGraph realized_graph() const;

 private:
  Model(Kind kind, int rank, int modulus) : kind_(kind), rank_(rank), modulus_(modulus) {}

  Kind kind_;
  int rank_;
  int modulus_;  // dihedral only
};

// Model for a family preset name (A<n>, B<n>, D<n>, I2(<m>)). Throws
// kUnsupportedModel otherwise.
Model model_for(const FamilySpec& spec);

struct EquivalenceReport {
  bool ok = true;
  std::size_t words = 0;
  std::size_t classes = 0;
  std::string failure;
};

// Exhaustive over every injective word on the model's generators:
//  - canonical forms agree exactly when the model elements agree;
//  - word-calculus descents equal the model's length-drop descents;
//  - every evaluated word is an involution whose minimal S-length is the word length;
//  - appending an unused letter never appends a model descent.
// `g` is the graph the word calculus runs on (normally realized_graph()).
EquivalenceReport check_equivalence(const Model& model, const CoxeterGraph& g);

// Minimal number of S-action letters reaching each involution, by BFS from the
// identity over the whole orbit. Indexed by element through the returned map.
std::vector<std::pair<Element, int>> involution_ranks(const Model& model);

}  // namespace boolinv::oracle

#include "boolinv/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

namespace boolinv::oracle {

Model Model::type_a(int n) {
  if (n < 1) throw Error(ErrorCode::kRankOutOfRange, "A" + std::to_string(n));
  return Model(Kind::kA, n, 0);
}

Model Model::type_b(int n) {
  if (n < 2) throw Error(ErrorCode::kRankOutOfRange, "B" + std::to_string(n));
  return Model(Kind::kB, n, 0);
}

Model Model::type_d(int n) {
  if (n < 2) throw Error(ErrorCode::kRankOutOfRange, "D" + std::to_string(n));
  return Model(Kind::kD, n, 0);
}

Model Model::dihedral(int m) {
  if (m < 2 || m == kInfinity) throw Error(ErrorCode::kUnsupportedModel, "I2(m) needs finite m >= 2");
  return Model(Kind::kDihedral, 2, m);
}

Element Model::identity() const {
  if (kind_ == Kind::kDihedral) return {0, 0};
  const int points = kind_ == Kind::kA ? rank_ + 1 : rank_;
  Element e(points);
  for (int i = 0; i < points; ++i) e[i] = i + 1;
  return e;
}

Element Model::generator(int s) const {
  if (s < 0 || s >= rank_) throw Error(ErrorCode::kIndexOutOfRange, "generator " + std::to_string(s + 1));
  if (kind_ == Kind::kDihedral) return {1, s};
  Element e = identity();
  if (kind_ == Kind::kA) {
    std::swap(e[s], e[s + 1]);
    return e;
  }
  if (s == 0) {
    if (kind_ == Kind::kB) {
      e[0] = -1;
    } else {
      e[0] = -2;
      e[1] = -1;
    }
    return e;
  }
  // B and D share the transpositions (s, s+1) in 1-based positions.
  std::swap(e[s - 1], e[s]);
  return e;
}

Element Model::multiply(const Element& u, const Element& v) const {
  if (kind_ == Kind::kDihedral) {
    const int sign = u[0] ? -1 : 1;
    int k = (sign * v[1] + u[1]) % modulus_;
    if (k < 0) k += modulus_;
    return {u[0] ^ v[0], k};
  }
  Element out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int j = v[i];
    const int image = u[std::abs(j) - 1];
    out[i] = j < 0 ? -image : image;
  }
  return out;
}

Element Model::act(const Element& w, int s) const {
  const Element g = generator(s);
  Element conj = multiply(g, multiply(w, g));
  if (conj == w) return multiply(w, g);
  return conj;
}

Element Model::eval_word(const Word& w) const {
  Element e = identity();
  for (Generator s : w) e = act(e, s);
  return e;
}

int Model::length(const Element& w) const {
  if (kind_ == Kind::kDihedral) {
    const int m = modulus_;
    const int k = w[1];
    if (!w[0]) return 2 * std::min(k, m - k);
    // Reflection x -> -x + k has length |2k' - 1| minimized over k' = k mod m.
    return std::min(k == 0 ? 1 : 2 * k - 1, 2 * (m - k) + 1);
  }
  const int size = static_cast<int>(w.size());
  int inv = 0, nsp = 0, neg = 0;
  for (int i = 0; i < size; ++i) {
    if (w[i] < 0) ++neg;
    for (int j = i + 1; j < size; ++j) {
      if (w[i] > w[j]) ++inv;
      if (w[i] + w[j] < 0) ++nsp;
    }
  }
  switch (kind_) {
    case Kind::kA: return inv;
    case Kind::kB: return inv + nsp + neg;
    case Kind::kD: return inv + nsp;
    case Kind::kDihedral: break;
  }
  return 0;
}

GeneratorSet Model::descents(const Element& w) const {
  GeneratorSet out;
  const int l = length(w);
  for (int s = 0; s < rank_; ++s)
    if (length(multiply(w, generator(s))) < l) out.insert(s);
  return out;
}

bool Model::is_involution(const Element& w) const { return multiply(w, w) == identity(); }

CoxeterGraph Model::realized_graph() const {
  CoxeterGraph g(rank_);
  const Element e = identity();
  for (int s = 0; s < rank_; ++s) {
    for (int t = s + 1; t < rank_; ++t) {
      const Element st = multiply(generator(s), generator(t));
      Element power = st;
      int order = 1;
      while (power != e) {
        power = multiply(power, st);
        ++order;
      }
      g.set_label(s, t, order);
    }
  }
  return g;
}

Model model_for(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kA: return Model::type_a(spec.rank);
    case Family::kB: return Model::type_b(spec.rank);
    case Family::kD: return Model::type_d(spec.rank);
    case Family::kI2: return Model::dihedral(spec.extra);
    default: break;
  }
  throw Error(ErrorCode::kUnsupportedModel, "no permutation model for " + family_name(spec));
}

std::vector<std::pair<Element, int>> involution_ranks(const Model& model) {
  std::map<Element, int> dist{{model.identity(), 0}};
  std::deque<Element> queue{model.identity()};
  while (!queue.empty()) {
    const Element w = queue.front();
    queue.pop_front();
    const int d = dist[w];
    for (int s = 0; s < model.rank(); ++s) {
      Element next = model.act(w, s);
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    }
  }
  return {dist.begin(), dist.end()};
}

}  // namespace boolinv::oracle

namespace boolinv::oracle {

namespace {

template <typename Fn>
void for_each_injective_word(int n, Word& prefix, Fn&& fn) {
  fn(prefix);
  for (int s = 0; s < n; ++s) {
    if (prefix.contains(s)) continue;
    Word next = prefix.appended(s);
    for_each_injective_word(n, next, fn);
  }
}

}  // namespace

EquivalenceReport check_equivalence(const Model& model, const CoxeterGraph& g) {
  EquivalenceReport report;
  if (g.size() != model.rank()) {
    report.ok = false;
    report.failure = "graph and model have different ranks";
    return report;
  }
  std::map<Element, int> rho;
  for (auto& [element, r] : involution_ranks(model)) rho.emplace(element, r);

  std::map<Element, Word> canon_of_element;
  std::map<std::uint64_t, Element> element_of_canon;
  auto fail = [&](const std::string& what) {
    if (report.ok) {
      report.ok = false;
      report.failure = what;
    }
  };

  Word empty;
  for_each_injective_word(model.rank(), empty, [&](const Word& w) {
    if (!report.ok) return;
    ++report.words;
    const Element e = model.eval_word(w);
    const Cell c = canonical(w, g);
    if (!model.is_involution(e)) fail(to_string(w) + " does not evaluate to an involution");
    auto r = rho.find(e);
    if (r == rho.end() || r->second != w.size()) {
      fail(to_string(w) + " is not a reduced S-expression in the model");
    }
    auto [it, fresh] = canon_of_element.emplace(e, c.canon);
    if (!fresh && it->second != c.canon) {
      fail(to_string(w) + " and " + to_string(it->second) + " evaluate equal but have canonical forms " +
           to_string(c) + " and " + to_string(it->second));
    }
    auto [jt, fresh_canon] = element_of_canon.emplace(c.canon.key(), e);
    if (!fresh_canon && jt->second != e) {
      fail(to_string(w) + " shares canonical form " + to_string(c) + " with a different element");
    }
    if (fresh_canon) {
      ++report.classes;
      const GeneratorSet model_descents = model.descents(e);
      if (model_descents != descents(c, g)) fail("descents of " + to_string(c) + " disagree with the model");
      for (int s = 0; s < model.rank(); ++s) {
        if (!w.contains(s) && model_descents.contains(s)) {
          fail("s" + std::to_string(s + 1) + " is a model descent of " + to_string(c) + " but unused");
        }
      }
    }
  });
  return report;
}

}  // namespace boolinv::oracle

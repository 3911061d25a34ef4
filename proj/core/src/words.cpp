#include "boolinv/words.hpp"

#include <cctype>
#include <charconv>
#include <deque>
#include <set>

namespace boolinv {

std::vector<int> GeneratorSet::to_vector() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::initializer_list<int> letters) {
  for (int g : letters) push_back(g);
}

Word Word::from_letters(const std::vector<int>& letters) {
  Word w;
  for (int g : letters) w.push_back(g);
  return w;
}

void Word::push_back(int g) {
  if (g < 0 || g >= kMaxGenerators) {
    throw Error(ErrorCode::kIndexOutOfRange, "letter " + std::to_string(g + 1));
  }
  if (support_.contains(g)) {
    throw Error(ErrorCode::kNonInjectiveWord, "letter s" + std::to_string(g + 1) + " repeated");
  }
  letters_[size_++] = static_cast<Generator>(g);
  support_.insert(g);
}

Word Word::appended(int g) const {
  Word w = *this;
  w.push_back(g);
  return w;
}

Word Word::without_position(int pos) const {
  Word w;
  for (int i = 0; i < size_; ++i)
    if (i != pos) w.push_back(letters_[i]);
  return w;
}

Word Word::restricted(GeneratorSet keep) const {
  Word w;
  for (int i = 0; i < size_; ++i)
    if (keep.contains(letters_[i])) w.push_back(letters_[i]);
  return w;
}

std::uint64_t Word::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < size_; ++i) k |= static_cast<std::uint64_t>(letters_[i] + 1) << (4 * i);
  return k;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 's';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == 'e' && w.empty()) {
      ++i;
      continue;
    }
    if (text[i] == 's') ++i;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value < 1) {
      throw Error(ErrorCode::kMalformedInput, "bad word '" + std::string(text) + "'");
    }
    w.push_back(value - 1);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return w;
}

// ---------------------------------------------------------------------------
// Move classes
//
// A move class is a union of commutation classes (heaps of the injective
// word), linked by half-braid moves at the front. Each commutation class is
// represented by its lexicographic normal form, so the canonical word of a
// cell is the least normal form reachable.

namespace {

bool is_minimal(const Word& w, int pos, const CoxeterGraph& g) {
  for (int j = 0; j < pos; ++j)
    if (!g.commutes(w[j], w[pos])) return false;
  return true;
}

bool is_maximal(const Word& w, int pos, const CoxeterGraph& g) {
  for (int j = pos + 1; j < w.size(); ++j)
    if (!g.commutes(w[j], w[pos])) return false;
  return true;
}

// Greedy: repeatedly emit the smallest letter that can be commuted to the front.
Word trace_normal_form(const Word& w, const CoxeterGraph& g) {
  Word rest = w;
  Word out;
  while (!rest.empty()) {
    int best = -1;
    for (int i = 0; i < rest.size(); ++i) {
      if ((best < 0 || rest[i] < rest[best]) && is_minimal(rest, i, g)) best = i;
    }
    out.push_back(rest[best]);
    rest = rest.without_position(best);
  }
  return out;
}

std::vector<Word> commutation_classes(const Word& w, const CoxeterGraph& g) {
  std::vector<Word> forms{trace_normal_form(w, g)};
  for (std::size_t q = 0; q < forms.size(); ++q) {
    const Word u = forms[q];
    for (int i = 0; i < u.size(); ++i) {
      if (!is_minimal(u, i, g)) continue;
      const Word after_first = u.without_position(i);
      for (int j = 0; j < after_first.size(); ++j) {
        if (g.bond(u[i], after_first[j]) != Bond::kBraid3 || !is_minimal(after_first, j, g)) continue;
        Word swapped{after_first[j], u[i]};
        const Word tail = after_first.without_position(j);
        for (Generator x : tail) swapped.push_back(x);
        Word form = trace_normal_form(swapped, g);
        if (std::find(forms.begin(), forms.end(), form) == forms.end()) forms.push_back(form);
      }
    }
  }
  return forms;
}

}  // namespace

std::vector<Word> move_closure(const Word& w, const CoxeterGraph& g) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  auto visit = [&](const Word& v) {
    if (seen.insert(v).second) queue.push_back(v);
  };
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < u.size(); ++i) {
      const bool commute = g.commutes(u[i], u[i + 1]);
      const bool half_braid = i == 0 && g.bond(u[0], u[1]) == Bond::kBraid3;
      if (!commute && !half_braid) continue;
      std::vector<int> letters(u.begin(), u.end());
      std::swap(letters[i], letters[i + 1]);
      visit(Word::from_letters(letters));
    }
  }
  return {seen.begin(), seen.end()};
}

Cell canonical(const Word& w, const CoxeterGraph& g) {
  const auto forms = commutation_classes(w, g);
  return Cell{*std::min_element(forms.begin(), forms.end())};
}

GeneratorSet descents(const Cell& c, const CoxeterGraph& g) {
  GeneratorSet out;
  for (const Word& form : commutation_classes(c.canon, g)) {
    for (int i = 0; i < form.size(); ++i)
      if (is_maximal(form, i, g)) out.insert(form[i]);
  }
  return out;
}

Cell toggle(const Cell& c, int s, const CoxeterGraph& g) {
  if (!c.canon.contains(s)) return canonical(c.canon.appended(s), g);
  for (const Word& form : commutation_classes(c.canon, g)) {
    for (int i = 0; i < form.size(); ++i) {
      if (form[i] == s && is_maximal(form, i, g)) return canonical(form.without_position(i), g);
    }
  }
  throw Error(ErrorCode::kNotApplicable,
              "s" + std::to_string(s + 1) + " is in the support of " + to_string(c) +
                  " but is not a descent");
}

std::vector<Cell> facets(const Cell& c, const CoxeterGraph& g) {
  if (c.rank() == 0) throw Error(ErrorCode::kNotApplicable, "the empty cell has no facets");
  std::vector<Cell> out;
  out.reserve(c.rank());
  for (int i = 0; i < c.rank(); ++i) out.push_back(canonical(c.canon.without_position(i), g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cell> ideal(const Cell& c, const CoxeterGraph& g) {
  const int k = c.rank();
  std::vector<Cell> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Word sub;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) sub.push_back(c.canon[i]);
    out.push_back(canonical(sub, g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool bruhat_leq(const Cell& u, const Cell& w, const CoxeterGraph& g) {
  // An injective word has exactly one subword on a given letter set.
  if (!u.support().is_subset_of(w.support())) return false;
  return canonical(w.canon.restricted(u.support()), g) == u;
}

}  // namespace boolinv

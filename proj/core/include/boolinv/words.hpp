#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "boolinv/coxsys.hpp"

namespace boolinv {

// A set of generators as a bitmask over 0-based indices.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<int> gens) {
    for (int g : gens) insert(g);
  }

  constexpr bool contains(int g) const { return (bits_ >> g) & 1u; }
  constexpr void insert(int g) { bits_ |= 1u << g; }
  constexpr void erase(int g) { bits_ &= ~(1u << g); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> to_vector() const;

  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ | b.bits_);
  }

 private:
  std::uint32_t bits_ = 0;
};

// An injective word over the generators; pushing a repeated letter throws.
class Word {
 public:
  Word() = default;
  // 0-based letters.
  Word(std::initializer_list<int> letters);
  static Word from_letters(const std::vector<int>& letters);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Generator operator[](int i) const { return letters_[i]; }
  Generator back() const { return letters_[size_ - 1]; }
  const Generator* begin() const { return letters_.data(); }
  const Generator* end() const { return letters_.data() + size_; }

  GeneratorSet support() const { return support_; }
  bool contains(int g) const { return support_.contains(g); }

  void push_back(int g);
  Word appended(int g) const;
  Word without_position(int pos) const;
  // The subword consisting of the letters in `keep`, in order.
  Word restricted(GeneratorSet keep) const;

  // Injective packing for hashing: 4 bits per letter (letter + 1).
  std::uint64_t key() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  // Lexicographic by letters; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::array<Generator, kMaxGenerators> letters_{};
  std::uint8_t size_ = 0;
  GeneratorSet support_;
};

// "s1 s3 s2" (1-based). The empty word renders as "e".
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

// A boolean involution, identified by the lexicographically least word of its move class.
struct Cell {
  Word canon;

  int rank() const { return canon.size(); }
  GeneratorSet support() const { return canon.support(); }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (a.rank() != b.rank()) return a.rank() <=> b.rank();
    return a.canon <=> b.canon;
  }
};

inline std::string to_string(const Cell& c) { return to_string(c.canon); }

// All words reachable from w by commutation moves (m = 2, anywhere) and
// half-braid moves (m = 3, first two letters only). Sorted.
std::vector<Word> move_closure(const Word& w, const CoxeterGraph& g);

Cell canonical(const Word& w, const CoxeterGraph& g);

// Letters s such that some member of the move class ends in s.
GeneratorSet descents(const Cell& c, const CoxeterGraph& g);

// Right S-action of s restricted to boolean cells: append a new letter, or
// strip a descent. Throws kNotApplicable when s is in the support but not a descent.
Cell toggle(const Cell& c, int s, const CoxeterGraph& g);

std::vector<Cell> facets(const Cell& c, const CoxeterGraph& g);
std::vector<Cell> ideal(const Cell& c, const CoxeterGraph& g);
bool bruhat_leq(const Cell& u, const Cell& w, const CoxeterGraph& g);

}  // namespace boolinv

template <>
struct std::hash<boolinv::Word> {
  std::size_t operator()(const boolinv::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.key());
  }
};

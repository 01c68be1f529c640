#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "thetapos/matrix.hpp"

namespace thetapos {

/// Letters are 1-based generator indices, as in sigma_1, sigma_2, ...
using Word = std::vector<int>;

enum class CoxeterType { A, B2 };

/// Finite Coxeter system of type A_{n-1} (the symmetric group S_n) or B_2.
class CoxeterSystem {
 public:
  /// S_n, generated by the n-1 adjacent transpositions; n >= 2.
  static CoxeterSystem type_a(std::size_t n);
  static CoxeterSystem type_b2();

  CoxeterType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  /// Coxeter matrix entry for 1-based generators.
  int m(int i, int j) const;
  /// Integer Cartan matrix; the simple reflections act on root coordinates.
  const Matrix& cartan() const { return cartan_; }
  std::string name() const;

  /// Reflection representation of a word; equal matrices mean equal elements.
  Matrix element(std::span<const int> word) const;

  void check_letters(std::span<const int> word) const;

 private:
  CoxeterSystem(CoxeterType type, std::size_t rank, Matrix cartan)
      : type_(type), rank_(rank), cartan_(std::move(cartan)) {}

  CoxeterType type_;
  std::size_t rank_;
  Matrix cartan_;
};

/// A word checked to be reduced at construction.
class ReducedWord {
 public:
  static ReducedWord make(const CoxeterSystem& sys, Word letters);

  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  explicit ReducedWord(Word letters) : letters_(std::move(letters)) {}
  Word letters_;
};

/// A single braid-relation substitution starting at 0-based `position`,
/// replacing the alternating window of length m(i, j).
struct BraidMove {
  std::size_t position = 0;
  int m = 0;
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

/// Longest reduced words handled by enumeration and path search.
inline constexpr std::size_t kMaxEnumerationLength = 12;

bool is_reduced(const CoxeterSystem& sys, std::span<const int> word);
std::size_t longest_element_length(const CoxeterSystem& sys);
/// Some reduced word for the longest element, built greedily.
ReducedWord longest_word(const CoxeterSystem& sys);

/// All reduced words of the element, sorted lexicographically.
std::vector<ReducedWord> enumerate_reduced_words(const CoxeterSystem& sys,
                                                 const ReducedWord& element);

/// Moves applicable at every position of `word`.
std::vector<BraidMove> braid_moves(const CoxeterSystem& sys, std::span<const int> word);
Word apply_braid_move(const CoxeterSystem& sys, std::span<const int> word, const BraidMove& move);

/// Shortest sequence of braid moves from `from` to `to` (breadth-first).
std::vector<BraidMove> braid_move_path(const CoxeterSystem& sys, const ReducedWord& from,
                                       const ReducedWord& to);

/// Parses "121" or "1,2,1".
Word parse_word(const std::string& text);
std::string word_to_string(std::span<const int> word);

}  // namespace thetapos

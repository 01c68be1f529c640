#include "thetapos/weyl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "thetapos/error.hpp"

namespace thetapos {

namespace {

Matrix simple_reflection(const Matrix& cartan, std::size_t i) {
  Matrix s = Matrix::identity(cartan.rows());
  for (std::size_t j = 0; j < cartan.cols(); ++j) s(i, j) -= cartan(i, j);
  return s;
}

bool is_positive_root(const Vector& root) {
  return std::all_of(root.begin(), root.end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::size_t inversions(std::span<const int> word, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : word) std::swap(perm[letter - 1], perm[letter]);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) ++count;
  return count;
}

void check_enumerable(std::size_t length) {
  if (length > kMaxEnumerationLength) {
    fail(ErrorKind::Limit, "reduced-word search limited to length " +
                               std::to_string(kMaxEnumerationLength));
  }
}

}  // namespace

CoxeterSystem CoxeterSystem::type_a(std::size_t n) {
  if (n < 2) fail(ErrorKind::Domain, "type A system needs n >= 2");
  const std::size_t r = n - 1;
  Matrix c(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    c(i, i) = 2;
    if (i + 1 < r) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return CoxeterSystem(CoxeterType::A, r, std::move(c));
}

CoxeterSystem CoxeterSystem::type_b2() {
  return CoxeterSystem(CoxeterType::B2, 2, Matrix{{2, -2}, {-1, 2}});
}

int CoxeterSystem::m(int i, int j) const {
  check_letters(std::array{i, j});
  if (i == j) return 1;
  if (type_ == CoxeterType::B2) return 4;
  return std::abs(i - j) == 1 ? 3 : 2;
}

std::string CoxeterSystem::name() const {
  return type_ == CoxeterType::B2 ? "B2" : "A" + std::to_string(rank_);
}

void CoxeterSystem::check_letters(std::span<const int> word) const {
  for (int letter : word) {
    if (letter < 1 || static_cast<std::size_t>(letter) > rank_) {
      fail(ErrorKind::Index, "generator index " + std::to_string(letter) + " out of range for " +
                                 name());
    }
  }
}

Matrix CoxeterSystem::element(std::span<const int> word) const {
  check_letters(word);
  Matrix w = Matrix::identity(rank_);
  for (int letter : word) w = w * simple_reflection(cartan_, static_cast<std::size_t>(letter - 1));
  return w;
}

ReducedWord ReducedWord::make(const CoxeterSystem& sys, Word letters) {
  if (!is_reduced(sys, letters)) {
    fail(ErrorKind::Domain, "word " + word_to_string(letters) + " is not reduced in " + sys.name());
  }
  return ReducedWord(std::move(letters));
}

bool is_reduced(const CoxeterSystem& sys, std::span<const int> word) {
  sys.check_letters(word);
  if (sys.type() == CoxeterType::A) return inversions(word, sys.rank() + 1) == word.size();
  // Exchange condition: l(w s) > l(w) iff w(alpha_s) is a positive root.
  Matrix w = Matrix::identity(sys.rank());
  for (int letter : word) {
    const auto s = static_cast<std::size_t>(letter - 1);
    if (!is_positive_root(w.col(s))) return false;
    w = w * simple_reflection(sys.cartan(), s);
  }
  return true;
}

ReducedWord longest_word(const CoxeterSystem& sys) {
  Word word;
  Matrix w = Matrix::identity(sys.rank());
  bool extended = true;
  while (extended) {
    extended = false;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      if (is_positive_root(w.col(s))) {
        word.push_back(static_cast<int>(s + 1));
        w = w * simple_reflection(sys.cartan(), s);
        extended = true;
        break;
      }
    }
  }
  return ReducedWord::make(sys, std::move(word));
}

std::size_t longest_element_length(const CoxeterSystem& sys) {
  if (sys.type() == CoxeterType::A) {
    const std::size_t n = sys.rank() + 1;
    return n * (n - 1) / 2;
  }
  return longest_word(sys).length();
}

std::vector<BraidMove> braid_moves(const CoxeterSystem& sys, std::span<const int> word) {
  std::vector<BraidMove> moves;
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const int i = word[p], j = word[p + 1];
    if (i == j) continue;
    const int m = sys.m(i, j);
    if (p + static_cast<std::size_t>(m) > word.size()) continue;
    bool alternating = true;
    for (int k = 0; k < m; ++k) {
      if (word[p + static_cast<std::size_t>(k)] != (k % 2 == 0 ? i : j)) alternating = false;
    }
    if (alternating) moves.push_back({p, m});
  }
  return moves;
}

Word apply_braid_move(const CoxeterSystem& sys, std::span<const int> word, const BraidMove& move) {
  const auto m = static_cast<std::size_t>(move.m);
  if (move.position + m > word.size() || m < 2) fail(ErrorKind::Index, "braid move out of range");
  const int i = word[move.position], j = word[move.position + 1];
  if (i == j || sys.m(i, j) != move.m) fail(ErrorKind::Domain, "braid move does not apply");
  Word out(word.begin(), word.end());
  for (std::size_t k = 0; k < m; ++k) {
    if (word[move.position + k] != (k % 2 == 0 ? i : j)) {
      fail(ErrorKind::Domain, "braid move window is not alternating");
    }
    out[move.position + k] = k % 2 == 0 ? j : i;
  }
  return out;
}

std::vector<ReducedWord> enumerate_reduced_words(const CoxeterSystem& sys,
                                                 const ReducedWord& element) {
  check_enumerable(element.length());
  // Reduced words of one element form a single braid-move class (Matsumoto).
  std::set<Word> seen{element.letters()};
  std::queue<Word> frontier;
  frontier.push(element.letters());
  while (!frontier.empty()) {
    const Word w = frontier.front();
    frontier.pop();
    for (const auto& mv : braid_moves(sys, w)) {
      Word next = apply_braid_move(sys, w, mv);
      if (seen.insert(next).second) frontier.push(std::move(next));
    }
  }
  std::vector<ReducedWord> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(ReducedWord::make(sys, w));
  return out;
}

std::vector<BraidMove> braid_move_path(const CoxeterSystem& sys, const ReducedWord& from,
                                       const ReducedWord& to) {
  if (from.length() != to.length() || sys.element(from.letters()) != sys.element(to.letters())) {
    fail(ErrorKind::Domain, "words " + word_to_string(from.letters()) + " and " +
                                word_to_string(to.letters()) + " represent different elements");
  }
  check_enumerable(from.length());
  std::map<Word, std::pair<Word, BraidMove>> parent;
  std::queue<Word> frontier;
  parent.emplace(from.letters(), std::pair{Word{}, BraidMove{}});
  frontier.push(from.letters());
  while (!frontier.empty() && !parent.contains(to.letters())) {
    const Word w = frontier.front();
    frontier.pop();
    for (const auto& mv : braid_moves(sys, w)) {
      Word next = apply_braid_move(sys, w, mv);
      if (parent.contains(next)) continue;
      parent.emplace(next, std::pair{w, mv});
      frontier.push(std::move(next));
    }
  }
  if (!parent.contains(to.letters())) {
    fail(ErrorKind::Domain, "no braid-move path found");  // unreachable by Matsumoto's theorem
  }
  std::vector<BraidMove> path;
  for (Word w = to.letters(); w != from.letters();) {
    const auto& [prev, mv] = parent.at(w);
    path.push_back(mv);
    w = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Word parse_word(const std::string& text) {
  Word w;
  const bool has_comma = text.find(',') != std::string::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) fail(ErrorKind::Parse, "empty letter in word '" + text + "'");
    w.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token.push_back(c);
      if (!has_comma) flush();
    } else {
      fail(ErrorKind::Parse, "unexpected character in word '" + text + "'");
    }
  }
  if (has_comma) flush();
  return w;
}

std::string word_to_string(std::span<const int> word) {
  std::string s = "(";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(word[k]);
  }
  return s + ")";
}

}  // namespace thetapos

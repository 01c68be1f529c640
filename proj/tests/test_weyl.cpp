#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "thetapos/error.hpp"
#include "thetapos/weyl.hpp"

using namespace thetapos;

namespace {

// Permutation of {0..n-1} for a word of adjacent transpositions.
std::vector<int> permutation_of(const Word& w, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int s : w) std::swap(p[static_cast<std::size_t>(s - 1)], p[static_cast<std::size_t>(s)]);
  return p;
}

std::size_t inversions(const std::vector<int>& p) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++k;
  return k;
}

// All words of the given length over {1..r}.
void all_words(int r, std::size_t len, const std::function<void(const Word&)>& f) {
  Word w(len, 1);
  while (true) {
    f(w);
    std::size_t i = 0;
    while (i < len && w[i] == r) w[i++] = 1;
    if (i == len) return;
    ++w[i];
  }
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("is_reduced examples") {
  const auto a2 = CoxeterSystem::type_a(3);
  const auto b2 = CoxeterSystem::type_b2();
  CHECK(is_reduced(a2, Word{1, 2, 1}));
  CHECK(!is_reduced(a2, Word{1, 1}));
  CHECK(is_reduced(b2, Word{1, 2, 1, 2}));
  CHECK(!is_reduced(b2, Word{1, 2, 1, 2, 1}));
  CHECK(is_reduced(a2, Word{}));
  try {
    is_reduced(a2, Word{3});
    FAIL("expected index error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Index);
  }
}

TEST_CASE("Coxeter matrices") {
  const auto a3 = CoxeterSystem::type_a(4);
  CHECK(a3.m(1, 1) == 1);
  CHECK(a3.m(1, 2) == 3);
  CHECK(a3.m(1, 3) == 2);
  CHECK(CoxeterSystem::type_b2().m(1, 2) == 4);
}

TEST_CASE("longest element lengths") {
  CHECK(longest_element_length(CoxeterSystem::type_a(4)) == 6);
  CHECK(longest_element_length(CoxeterSystem::type_a(2)) == 1);
  CHECK(longest_element_length(CoxeterSystem::type_b2()) == 4);
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(longest_word(CoxeterSystem::type_a(n)).length() == n * (n - 1) / 2);
}

TEST_CASE("type A reducedness matches the inversion count on all short words") {
  for (int n = 3; n <= 4; ++n) {
    const auto sys = CoxeterSystem::type_a(static_cast<std::size_t>(n));
    for (std::size_t len = 0; len <= 5; ++len)
      all_words(n - 1, len, [&](const Word& w) {
        CHECK(is_reduced(sys, w) == (inversions(permutation_of(w, n)) == len));
      });
  }
}

TEST_CASE("B2 reducedness: exactly the alternating words of length <= 4") {
  const auto b2 = CoxeterSystem::type_b2();
  for (std::size_t len = 0; len <= 6; ++len)
    all_words(2, len, [&](const Word& w) {
      bool alternating = true;
      for (std::size_t i = 1; i < w.size(); ++i) alternating = alternating && w[i] != w[i - 1];
      CHECK(is_reduced(b2, w) == (alternating && len <= 4));
    });
}

TEST_CASE("reduced words of the longest elements") {
  const auto a2 = CoxeterSystem::type_a(3);
  const auto w2 = enumerate_reduced_words(a2, longest_word(a2));
  REQUIRE(w2.size() == 2);
  CHECK(w2[0].letters() == Word{1, 2, 1});
  CHECK(w2[1].letters() == Word{2, 1, 2});

  const auto b2 = CoxeterSystem::type_b2();
  const auto wb = enumerate_reduced_words(b2, longest_word(b2));
  REQUIRE(wb.size() == 2);
  CHECK(wb[0].letters() == Word{1, 2, 1, 2});
  CHECK(wb[1].letters() == Word{2, 1, 2, 1});
}

TEST_CASE("A3 longest element: 16 words, matching brute force over all length-6 words") {
  const auto a3 = CoxeterSystem::type_a(4);
  const auto words = enumerate_reduced_words(a3, longest_word(a3));
  std::set<Word> brute;
  all_words(3, 6, [&](const Word& w) {
    if (permutation_of(w, 4) == std::vector<int>{3, 2, 1, 0}) brute.insert(w);
  });
  CHECK(brute.size() == 16);
  REQUIRE(words.size() == brute.size());
  std::size_t i = 0;
  for (const Word& w : brute) CHECK(words[i++].letters() == w);  // lexicographic order
  for (const auto& w : words) CHECK(is_reduced(a3, w.letters()));
}

TEST_CASE("braid move paths") {
  const auto a2 = CoxeterSystem::type_a(3);
  const auto p = braid_move_path(a2, ReducedWord::make(a2, {1, 2, 1}), ReducedWord::make(a2, {2, 1, 2}));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == BraidMove{0, 3});
  const auto same = ReducedWord::make(a2, {1, 2, 1});
  CHECK(braid_move_path(a2, same, same).empty());

  const auto b2 = CoxeterSystem::type_b2();
  const auto pb = braid_move_path(b2, ReducedWord::make(b2, {1, 2, 1, 2}), ReducedWord::make(b2, {2, 1, 2, 1}));
  REQUIRE(pb.size() == 1);
  CHECK(pb[0].m == 4);

  try {
    braid_move_path(a2, ReducedWord::make(a2, {1, 2}), ReducedWord::make(a2, {2, 1}));
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("the reduced-word graph is connected and paths preserve length") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto sys = CoxeterSystem::type_a(n);
    const auto words = enumerate_reduced_words(sys, longest_word(sys));
    const auto& from = words.front();
    for (const auto& to : words) {
      Word cur = from.letters();
      for (const auto& mv : braid_move_path(sys, from, to)) {
        cur = apply_braid_move(sys, cur, mv);
        CHECK(cur.size() == from.length());
        CHECK(is_reduced(sys, cur));
      }
      CHECK(cur == to.letters());
    }
  }
}

TEST_CASE("non-reduced words are rejected and enumeration is bounded") {
  const auto a2 = CoxeterSystem::type_a(3);
  CHECK_THROWS_AS(ReducedWord::make(a2, {1, 1}), Error);
  const auto a5 = CoxeterSystem::type_a(6);  // w0 has length 15 > 12
  try {
    enumerate_reduced_words(a5, longest_word(a5));
    FAIL("expected limit error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Limit);
  }
}

TEST_CASE("word parsing") {
  CHECK(parse_word("121") == Word{1, 2, 1});
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(word_to_string(Word{2, 1, 2}) == "(2,1,2)");
}

}  // TEST_SUITE

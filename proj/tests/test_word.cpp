#include <doctest.h>

#include <random>

#include "milnorkit/word.hpp"

using namespace milnorkit;

namespace {

Word W(std::initializer_list<int> signed_gens) {
  std::vector<Letter> ls;
  for (int g : signed_gens) ls.push_back({g > 0 ? g : -g, g > 0 ? 1 : -1});
  return Word::reduce(ls);
}

Word random_word(std::mt19937& rng, int n_gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n_gens);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> ls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
  return Word::reduce(ls);
}

}  // namespace

TEST_SUITE_BEGIN("word");

TEST_CASE("free reduction") {
  CHECK(W({1, -1}).is_identity());
  CHECK(W({1, 2, -2, 1}) == W({1, 1}));
  // [x1,x2] is already reduced
  CHECK(W({1, 2, -1, -2}).size() == 4);
}

TEST_CASE("reduce is idempotent on random inputs") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(rng, 4, 24);
    CHECK(Word::reduce(w.letters()) == w);
  }
}

TEST_CASE("multiply") {
  CHECK(multiply(W({1}), W({-1})).is_identity());
  CHECK(multiply(W({1, 2}), W({-2, 3})) == W({1, 3}));
  Word w = W({2, -1, 2});
  CHECK(multiply(Word{}, w) == w);
  CHECK(multiply(w, Word{}) == w);
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Word u = random_word(rng, 3, 12), v = random_word(rng, 3, 12),
         w = random_word(rng, 3, 12);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
  }
}

TEST_CASE("invert") {
  CHECK(invert(W({1, 2})) == W({-2, -1}));
  CHECK(invert(Word{}).is_identity());
  CHECK(invert(W({-1})) == W({1}));
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(rng, 4, 16);
    CHECK(multiply(w, invert(w)).is_identity());
    CHECK(invert(invert(w)) == w);
  }
}

TEST_CASE("commutator") {
  CHECK(commutator(W({1}), W({2})) == W({1, 2, -1, -2}));
  Word w = W({1, -2, 1});
  CHECK(commutator(w, w).is_identity());
  CHECK(commutator(w, Word{}).is_identity());
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
    CHECK(commutator(u, v) == invert(commutator(v, u)));
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(W({1}), Word{}) == W({1}));
  CHECK(conjugate(W({1}), W({2})) == W({2, 1, -2}));
  CHECK(conjugate(Word{}, W({2, 1})).is_identity());
}

TEST_CASE("parse_word") {
  CHECK(parse_word("x1 x2^-1 x1", 2).size() == 3);
  CHECK(parse_word("", 5).is_identity());
  CHECK(parse_word("x1 x1^-1", 2).is_identity());
  CHECK(parse_word("x2^3", 2) == W({2, 2, 2}));
  CHECK(parse_word("x2^-2", 3) == W({-2, -2}));
  CHECK(parse_word("x2^0", 3).is_identity());

  CHECK_THROWS_AS(parse_word("x1 y2", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x1^", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x4", 3), ParseError);
  // the reported position points at the offending token
  try {
    parse_word("x1 zz", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("format/parse round trip") {
  std::mt19937 rng(19);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(rng, 4, 20);
    CHECK(parse_word(format_word(w), 4) == w);
  }
  CHECK(format_word(W({1, 2, 2, -3})) == "x1 x2^2 x3^-1");
  CHECK(format_word(Word{}).empty());
}

TEST_CASE("exponent sums and guards") {
  Word w = W({1, 2, 1, -3, 1, -1});
  CHECK(exponent_sum(w, 1) == 2);
  CHECK(exponent_sum(w, 3) == -1);
  CHECK(max_generator(w) == 3);

  Guards tight;
  tight.max_word_letters = 4;
  CHECK_THROWS_AS(multiply(W({1, 2, 1}), W({2, 1, 2}), tight), ResourceError);
}

TEST_SUITE_END();

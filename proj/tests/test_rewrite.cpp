#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlap/graphs.hpp"
#include "hlap/pbw.hpp"
#include "hlap/rewrite.hpp"

using namespace hlap;

namespace {

WordCombination combo(std::initializer_list<std::pair<int, const char*>> terms, int m) {
  WordCombination c;
  for (auto [k, text] : terms) c.add(parse_word(text, m), Rational(k));
  return c;
}

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (2k)!/(-2)^k * Catalan(k)
Rational catalan_value(int m) {
  if (m % 2 == 0) return Rational(0);
  const int k = m / 2;
  Rational pow2(1);
  for (int i = 0; i < k; ++i) pow2 *= -2;
  const Rational catalan = factorial(2 * k) / (factorial(k) * factorial(k + 1));
  return factorial(2 * k) / pow2 * catalan;
}

}  // namespace

TEST_CASE("R1") {
  CHECK(apply_r1(parse_word("y1 y2 x1 x2", 2), 1) == parse_word("y2 y1 x1 x2", 2));
  CHECK(apply_r1(parse_word("y1 x1 x2 y2", 2), 2) == parse_word("y1 x2 x1 y2", 2));
  CHECK_THROWS(apply_r1(parse_word("y1 x1", 1), 1));
  CHECK_THROWS(apply_r1(parse_word("y1 x1", 1), 2));
}

TEST_CASE("R2") {
  CHECK(apply_r2(parse_word("y1 y2 x1 x2", 2), 2) == combo({{1, "y1 x1 y2 x2"}, {-1, "y1 [x1 y2 x2]"}}, 2));
  CHECK(apply_r2(parse_word("y1 x1", 1), 1) == combo({{1, "x1 y1"}}, 1));
  CHECK_THROWS(apply_r2(parse_word("y1 y2 x1 x2", 2), 1));
}

TEST_CASE("R3") {
  const std::vector<int> swap{2, 1};
  CHECK(relabel_r3(parse_word("y1 x1", 2), swap) == parse_word("y2 x2", 2));
  CHECK(relabel_r3(parse_word("y1 y2 x1 x2", 2), swap) == parse_word("y2 y1 x2 x1", 2));
  const std::vector<int> id{1, 2};
  CHECK(relabel_r3(parse_word("y1 y2 x1 x2", 2), id) == parse_word("y1 y2 x1 x2", 2));
  const std::vector<int> bad{1, 1};
  CHECK_THROWS(relabel_r3(parse_word("y1 y2 x1 x2", 2), bad));
}

TEST_CASE("single rule applications are sound modulo the h-ideal") {
  const Model md = polydisc(2);
  const OpRealizer op(md.algebra);
  for (int m = 1; m <= 2; ++m)
    for (const Word& w : enumerate_words(m, 4))
      for (size_t i = 1; i < w.length(); ++i) {
        const WordCombination before(w);
        if (w[i - 1].sign() == w[i].sign())
          CHECK(oracle_equiv(before, WordCombination(apply_r1(w, i)), op));
        else
          CHECK(oracle_equiv(before, apply_r2(w, i), op));
      }
}

TEST_CASE("R2 with a two-letter tail") {
  const Model md = polydisc(2);
  const OpRealizer op(md.algebra);
  const Word w = parse_word("y2 x2 y1 x1", 2);
  CHECK(oracle_equiv(WordCombination(w), apply_r2(w, 1), op));
}

TEST_CASE("factorize examples") {
  CHECK(factorize(WordCombination(parse_word("y1 x1", 1))) == combo({{1, "y1 x1"}}, 1));
  CHECK(factorize(WordCombination(parse_word("y1 y2 x1 x2", 2))) == combo({{1, "y1 x1 y2 x2"}, {-1, "y1 [x1 y2 x2]"}}, 2));
  CHECK(reduce_mod_rprime(WordCombination(parse_word("y1 y2 x1 x2", 2))).empty());
  CHECK(reduce_mod_rprime(WordCombination(parse_word("y1 x1", 1))) == combo({{1, "y1 x1"}}, 1));
  CHECK(reduce_mod_rprime(WordCombination(parse_word("x1 [y1 x2 y2]", 2))).empty());
}

TEST_CASE("reduction output is factorized, parity-preserving and replayable") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3;
    const Word w = random_word(m, trial % 2, rng);
    for (Mode mode : {Mode::R, Mode::RPrime}) {
      RewriteTrace trace;
      const WordCombination c(w);
      const WordCombination out = reduce(c, mode, &trace);
      for (const auto& [u, k] : out.terms()) {
        CHECK(is_factorized(u));
        CHECK(u.length() % 2 == w.length() % 2);
        if (mode == Mode::RPrime) {
          CHECK_FALSE(has_cycle(u));
          CHECK_FALSE(is_product(u));
        }
      }
      CHECK(replay(c, trace) == out);
    }
  }
}

TEST_CASE("reduction is sound on random words") {
  const Model md = polydisc(2);
  const OpRealizer op(md.algebra);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const Word w = random_word(3, trial % 2, rng);
    CHECK(oracle_equiv(WordCombination(w), factorize(WordCombination(w)), op));
  }
}

TEST_CASE("tree coefficient") {
  CHECK(tree_coefficient(1) == 1);
  CHECK(tree_coefficient(2) == 0);
  CHECK(tree_coefficient(4) == 0);
  for (int m : {3, 5}) {
    CHECK(tree_coefficient(m) == catalan_value(m));
    CHECK(tree_coefficient(m, Mode::R) == tree_coefficient(m));
  }
  CHECK(tree_coefficient(7) == catalan_value(7));
}

TEST_CASE("closed-form values as printed") {
  CHECK(tree_coefficient_formula(1) == 1);
  CHECK(tree_coefficient_formula(3) == -2);
  CHECK(tree_coefficient_formula(5) == 36);
  CHECK(tree_coefficient_formula(7) == -1800);
  CHECK(tree_coefficient_formula(4) == 0);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(tree_coefficient(7, Mode::RPrime, Budget(1e-9)), BudgetExhausted);
  RewriteTrace trace;
  CHECK_THROWS_AS(factorize(WordCombination(laplacian_word(5)), &trace, Budget(1e-9)), BudgetExhausted);
}

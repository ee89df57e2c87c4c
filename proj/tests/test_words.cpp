#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlap/words.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

using namespace hlap;

namespace {

// Orbit of w under adjacent same-sign swaps and all index relabelings, by BFS.
std::set<Word> brute_orbit(const Word& w) {
  std::set<Word> seen{w};
  std::queue<Word> todo;
  todo.push(w);
  std::vector<int> tau(w.m());
  while (!todo.empty()) {
    const Word u = todo.front();
    todo.pop();
    std::vector<Word> next;
    for (size_t i = 0; i + 1 < u.length(); ++i)
      if (u[i].sign() == u[i + 1].sign()) {
        auto ls = u.letters();
        std::swap(ls[i], ls[i + 1]);
        next.emplace_back(ls, u.m());
      }
    std::iota(tau.begin(), tau.end(), 1);
    do {
      std::vector<Letter> ls;
      for (const auto& l : u.letters()) ls.push_back(l.relabeled(tau));
      next.emplace_back(ls, u.m());
    } while (std::next_permutation(tau.begin(), tau.end()));
    for (auto& v : next)
      if (seen.insert(v).second) todo.push(v);
  }
  return seen;
}

}  // namespace

TEST_CASE("parse and print") {
  const Word w = parse_word("y1 y2 x1 x2", 2);
  CHECK(w.length() == 4);
  CHECK(std::all_of(w.letters().begin(), w.letters().end(), [](const Letter& l) { return l.is_leaf(); }));
  CHECK(to_string(w) == "y1 y2 x1 x2");

  const Word v = parse_word("x1 [y1 x2 y2]", 2);
  REQUIRE(v.length() == 2);
  CHECK_FALSE(v[1].is_leaf());
  CHECK(v[1].sign() == Sign::Minus);
  CHECK(to_string(v) == "x1 [y1 x2 y2]");
  CHECK(parse_word("  x1\t[ y1  x2 y2 ] ", 2) == v);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_word("x1 [x2 y1 x1]", 2), doctest::Contains("x1"), WordError);
  CHECK_THROWS_AS(parse_word("x1 [y1 x2", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x1 z2", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x1", 1), WordError);
  CHECK_THROWS_AS(parse_word("x3 y3", 2), WordError);
  CHECK_THROWS_AS(parse_word("", 2), WordError);
  try {
    parse_word("y1 x1 ]", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("triples") {
  const Letter t = make_triple(Letter::x(1), Letter::y(1), Letter::x(2));
  CHECK(t.sign() == Sign::Plus);
  CHECK(to_string(t) == "[x1 y1 x2]");
  CHECK_THROWS_AS(make_triple(Letter::x(1), Letter::x(2), Letter::y(1)), WordError);
  CHECK_THROWS_AS(make_triple(Letter::x(1), Letter::y(2), Letter::y(3)), WordError);
  CHECK_THROWS_AS(make_triple(Letter::x(1), Letter::y(1), Letter::x(1)), WordError);

  const Letter inner = make_triple(Letter::y(1), Letter::x(2), Letter::y(2));
  const Letter big = make_triple(inner, Letter::x(3), Letter::y(3));
  CHECK(big.sign() == Sign::Minus);
  CHECK(big.symbol_count() == 5);
  CHECK(big.depth() == 2);
  const auto ch = big.children();
  CHECK(ch[0] == inner);
  CHECK(ch[2] == Letter::y(3));
}

TEST_CASE("j set and laplacian word") {
  CHECK(j_set(parse_word("y1 y2 x1 x2", 2)) == std::vector<int>{1, 2});
  CHECK(j_set(parse_word("y1 x1", 3)) == std::vector<int>{1});
  CHECK(j_set(parse_word("x1 [y1 x2 y2]", 2)) == std::vector<int>{1, 2});
  CHECK(to_string(laplacian_word(3)) == "y1 y2 y3 x1 x2 x3");
}

TEST_CASE("canonical form examples") {
  CHECK(canonical_form(parse_word("y2 y1 x1 x2", 2)) == canonical_form(parse_word("y1 y2 x1 x2", 2)));
  CHECK(canonical_form(parse_word("y1 x1", 1)) == parse_word("y1 x1", 1));
  CHECK(canonical_form(parse_word("y1 x1 y2 x2", 2)) == canonical_form(parse_word("y2 x2 y1 x1", 2)));
  CHECK(canonical_form(parse_word("y1 x1", 2)) == canonical_form(parse_word("y2 x2", 2)));
  CHECK(canonical_form(parse_word("y1 x1", 1)) != canonical_form(parse_word("x1 y1", 1)));
}

TEST_CASE("canonical form agrees with brute-force orbits") {
  for (int m = 1; m <= 3; ++m) {
    const auto words = enumerate_words(m, m == 3 ? 4 : 6);
    std::set<Word> all(words.begin(), words.end());
    std::set<Word> done;
    size_t orbits = 0;
    std::set<Word> forms;
    for (const Word& w : words) {
      if (done.count(w)) continue;
      ++orbits;
      const auto orbit = brute_orbit(w);
      const Word c = canonical_form(w);
      CHECK(orbit.count(c) == 1);
      CHECK(canonical_form(c) == c);
      for (const Word& v : orbit) {
        CHECK(canonical_form(v) == c);
        done.insert(v);
      }
      forms.insert(c);
    }
    CHECK(forms.size() == orbits);
  }
}

TEST_CASE("canonical form on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 4;
    const Word w = random_word(m, trial % 3, rng);
    const Word c = canonical_form(w);
    CHECK(canonical_form(c) == c);
    std::vector<int> tau(m);
    std::iota(tau.begin(), tau.end(), 1);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<Letter> ls;
    for (const auto& l : w.letters()) ls.push_back(l.relabeled(tau));
    CHECK(canonical_form(Word(ls, m)) == c);
  }
}

TEST_CASE("combinations") {
  WordCombination a(parse_word("y1 x1 y2 x2", 2), Rational(2));
  a.add(parse_word("y2 x2 y1 x1", 2), Rational(-2));
  CHECK(a.empty());
  WordCombination b(parse_word("y1 x1", 1), Rational(1, 3));
  b += WordCombination(parse_word("y1 x1", 1));
  CHECK(b.coefficient(parse_word("y1 x1", 1)) == Rational(4, 3));
  CHECK((b - b).empty());
  CHECK((b * Rational(3)).coefficient(parse_word("y1 x1", 1)) == Rational(4));
}

TEST_CASE("letter enumeration counts") {
  // one x and one y: only the two leaves are letters on their own
  std::vector<Symbol> two{Symbol::x(1), Symbol::y(1)};
  CHECK(enumerate_letters(std::span<const Symbol>(two.data(), 1)).size() == 1);
  CHECK(enumerate_letters(two).empty());
  // {x1, y1, x2}: [x1 y1 x2] and [x2 y1 x1]
  std::vector<Symbol> three{Symbol::x(1), Symbol::y(1), Symbol::x(2)};
  CHECK(enumerate_letters(three).size() == 2);
}

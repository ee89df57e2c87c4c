#ifndef HLAP_WORDS_HPP
#define HLAP_WORDS_HPP

#include "hlap/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlap {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// x_j (sign +) or y_j (sign -), j >= 1.
struct Symbol {
  Sign sign = Sign::Plus;
  int index = 1;

  static constexpr Symbol x(int j) { return {Sign::Plus, j}; }
  static constexpr Symbol y(int j) { return {Sign::Minus, j}; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

std::string to_string(Symbol s);

class WordError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text; position is a 0-based character offset.
class ParseError : public WordError {
public:
  ParseError(const std::string& what, size_t position)
      : WordError(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

private:
  size_t position_;
};

/// A leaf symbol or a triple <l m r> with sgn(l) = sgn(r) != sgn(m).
///
/// Stored as a prefix code: +j is x_j, -j is y_j, and 0 opens a triple
/// followed by the codes of its three arguments. Symbols are pairwise
/// distinct inside a letter.
class Letter {
public:
  static Letter leaf(Symbol s);
  static Letter x(int j) { return leaf(Symbol::x(j)); }
  static Letter y(int j) { return leaf(Symbol::y(j)); }

  bool is_leaf() const { return code_.size() == 1; }
  Sign sign() const;
  /// Only valid for leaves.
  Symbol symbol() const;
  std::array<Letter, 3> children() const;
  int symbol_count() const;
  int depth() const;
  /// Symbols in left-to-right order.
  std::vector<Symbol> symbols() const;

  /// Replace every index j by tau[j - 1].
  Letter relabeled(std::span<const int> tau) const;

  const std::vector<std::int8_t>& code() const { return code_; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

private:
  friend Letter make_triple(const Letter&, const Letter&, const Letter&);
  friend class Word;
  explicit Letter(std::vector<std::int8_t> code) : code_(std::move(code)) {}
  std::vector<std::int8_t> code_;
};

/// Validated triple constructor; throws WordError on sign violations or shared symbols.
Letter make_triple(const Letter& left, const Letter& middle, const Letter& right);

std::string to_string(const Letter& l);

/// A nonempty sequence of letters belonging to W_m: every symbol occurs at
/// most once, indices are in 1..m, and x_j occurs iff y_j occurs.
class Word {
public:
  /// Throws WordError when the letters do not form a member of W_m.
  Word(std::vector<Letter> letters, int m);

  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](size_t i) const { return letters_[i]; }
  size_t length() const { return letters_.size(); }
  int m() const { return m_; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
  int m_;
};

std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// Grammar: word := letter+ ; letter := symbol | "[" letter letter letter "]" ;
/// symbol := ("x"|"y") digit+ ; tokens separated by whitespace.
Word parse_word(std::string_view text, int m);

/// J_w, ascending.
std::vector<int> j_set(const Word& w);

/// w_m = y_1 ... y_m x_1 ... x_m.
Word laplacian_word(int m);

/// Representative of the orbit of w under reordering equal-sign runs (R1)
/// and relabeling pair indices (R3). Idempotent and constant on orbits.
Word canonical_form(const Word& w);

/// Finite linear combination of canonical words with nonzero rational coefficients.
class WordCombination {
public:
  using Terms = std::map<Word, Rational>;

  WordCombination() = default;
  explicit WordCombination(const Word& w, const Rational& c = Rational(1)) { add(w, c); }

  /// Adds c * canonical_form(w).
  void add(const Word& w, const Rational& c);
  /// Caller guarantees w is already canonical.
  void add_canonical(const Word& w, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  WordCombination& operator+=(const WordCombination& o);
  WordCombination& operator-=(const WordCombination& o);
  WordCombination& operator*=(const Rational& c);
  friend WordCombination operator+(WordCombination a, const WordCombination& b) { return a += b; }
  friend WordCombination operator-(WordCombination a, const WordCombination& b) { return a -= b; }
  friend WordCombination operator*(WordCombination a, const Rational& c) { return a *= c; }
  friend bool operator==(const WordCombination&, const WordCombination&) = default;

private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const WordCombination& c);

/// Every member of W_m with at most max_length letters (exhaustive, exponential).
std::vector<Word> enumerate_words(int m, size_t max_length);

/// Every letter whose symbols are exactly the given set.
std::vector<Letter> enumerate_letters(std::span<const Symbol> symbols);

/// Random member of W_m using all m pairs: leaves merged by `merges` random triple
/// formations, then shuffled.
Word random_word(int m, int merges, std::mt19937_64& rng);

}  // namespace hlap

#endif

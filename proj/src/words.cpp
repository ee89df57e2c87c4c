#include "hlap/words.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace hlap {

namespace {

constexpr int kMaxIndex = 127;

int sym_code(Symbol s) { return s.sign == Sign::Plus ? s.index : -s.index; }
Symbol code_sym(int c) { return c > 0 ? Symbol::x(c) : Symbol::y(-c); }

// Length of the subtree starting at code[pos].
size_t subtree_end(const std::vector<std::int8_t>& code, size_t pos) {
  size_t need = 1;
  while (need > 0) {
    need += code[pos] == 0 ? 2 : -1;  // a triple consumes itself and opens three
    ++pos;
  }
  return pos;
}

void write_letter(std::ostream& os, const std::vector<std::int8_t>& code, size_t& pos) {
  const int c = code[pos++];
  if (c != 0) {
    os << to_string(code_sym(c));
    return;
  }
  os << '[';
  for (int k = 0; k < 3; ++k) {
    if (k) os << ' ';
    write_letter(os, code, pos);
  }
  os << ']';
}

}  // namespace

std::string to_string(Symbol s) {
  return (s.sign == Sign::Plus ? "x" : "y") + std::to_string(s.index);
}

// ---- Letter ----

Letter Letter::leaf(Symbol s) {
  if (s.index < 1 || s.index > kMaxIndex) throw WordError("symbol index out of range: " + std::to_string(s.index));
  return Letter({static_cast<std::int8_t>(sym_code(s))});
}

Sign Letter::sign() const {
  // The sign of a triple is that of its leftmost leaf.
  for (auto c : code_)
    if (c != 0) return c > 0 ? Sign::Plus : Sign::Minus;
  return Sign::Plus;
}

Symbol Letter::symbol() const {
  if (!is_leaf()) throw WordError("symbol() on a triple letter");
  return code_sym(code_[0]);
}

std::array<Letter, 3> Letter::children() const {
  if (is_leaf()) throw WordError("children() on a leaf letter");
  std::array<Letter, 3> out{Letter({}), Letter({}), Letter({})};
  size_t pos = 1;
  for (auto& child : out) {
    const size_t end = subtree_end(code_, pos);
    child.code_.assign(code_.begin() + pos, code_.begin() + end);
    pos = end;
  }
  return out;
}

int Letter::symbol_count() const {
  return static_cast<int>(std::count_if(code_.begin(), code_.end(), [](auto c) { return c != 0; }));
}

int Letter::depth() const {
  if (is_leaf()) return 0;
  int best = 0;
  for (const auto& c : children()) best = std::max(best, c.depth());
  return best + 1;
}

std::vector<Symbol> Letter::symbols() const {
  std::vector<Symbol> out;
  for (auto c : code_)
    if (c != 0) out.push_back(code_sym(c));
  return out;
}

Letter Letter::relabeled(std::span<const int> tau) const {
  std::vector<std::int8_t> code = code_;
  for (auto& c : code) {
    if (c == 0) continue;
    const int j = std::abs(c);
    if (j > static_cast<int>(tau.size())) throw WordError("relabeling does not cover index " + std::to_string(j));
    const int t = tau[j - 1];
    c = static_cast<std::int8_t>(c > 0 ? t : -t);
  }
  return Letter(std::move(code));
}

Letter make_triple(const Letter& left, const Letter& middle, const Letter& right) {
  if (left.sign() != right.sign()) throw WordError("triple: outer letters have different signs");
  if (middle.sign() == left.sign()) throw WordError("triple: middle sign equals left sign");
  std::set<int> seen;
  for (const Letter* l : {&left, &middle, &right})
    for (auto c : l->code())
      if (c != 0 && !seen.insert(c).second)
        throw WordError("triple: symbol " + to_string(code_sym(c)) + " repeated");
  std::vector<std::int8_t> code{0};
  for (const Letter* l : {&left, &middle, &right}) code.insert(code.end(), l->code().begin(), l->code().end());
  return Letter(std::move(code));
}

std::string to_string(const Letter& l) {
  std::ostringstream os;
  size_t pos = 0;
  write_letter(os, l.code(), pos);
  return os.str();
}

// ---- Word ----

Word::Word(std::vector<Letter> letters, int m) : letters_(std::move(letters)), m_(m) {
  if (m < 1 || m > kMaxIndex) throw WordError("m out of range: " + std::to_string(m));
  if (letters_.empty()) throw WordError("empty word");
  std::vector<int> xs(m + 1, 0), ys(m + 1, 0);
  for (const auto& l : letters_) {
    if (l.code().empty()) throw WordError("empty letter");
    for (auto c : l.code()) {
      if (c == 0) continue;
      const int j = std::abs(c);
      if (j > m) throw WordError("index " + std::to_string(j) + " exceeds m = " + std::to_string(m));
      int& slot = c > 0 ? xs[j] : ys[j];
      if (slot++) throw WordError("symbol " + to_string(code_sym(c)) + " repeated");
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (xs[j] != ys[j])
      throw WordError("unmatched pair: " + std::string(xs[j] ? "x" : "y") + std::to_string(j) + " without " +
                      (xs[j] ? "y" : "x") + std::to_string(j));
  }
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  for (size_t i = 0; i < w.length(); ++i) {
    if (i) os << ' ';
    size_t pos = 0;
    write_letter(os, w[i].code(), pos);
  }
  return os;
}

// ---- parsing ----

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Word word(int m) {
    std::vector<Letter> letters;
    skip();
    if (at_end()) throw ParseError("empty input", pos_);
    while (!at_end()) {
      letters.push_back(letter());
      skip();
    }
    return Word(std::move(letters), m);
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Letter letter() {
    skip();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const size_t start = pos_;
    const char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      Letter a = letter();
      Letter b = letter();
      Letter d = letter();
      skip();
      if (at_end() || s_[pos_] != ']') throw ParseError("expected ']'", pos_);
      ++pos_;
      try {
        return make_triple(a, b, d);
      } catch (const ParseError&) {
        throw;
      } catch (const WordError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      const size_t digits = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == digits) throw ParseError("expected digits after '" + std::string(1, c) + "'", pos_);
      if (pos_ - digits > 3) throw ParseError("index too large", digits);
      const int j = std::stoi(std::string(s_.substr(digits, pos_ - digits)));
      if (j < 1 || j > kMaxIndex) throw ParseError("index out of range", digits);
      return Letter::leaf(c == 'x' ? Symbol::x(j) : Symbol::y(j));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int m) { return Parser(text).word(m); }

std::vector<int> j_set(const Word& w) {
  std::set<int> js;
  for (const auto& l : w.letters())
    for (auto c : l.code())
      if (c > 0) js.insert(c);
  return {js.begin(), js.end()};
}

Word laplacian_word(int m) {
  std::vector<Letter> letters;
  for (int j = 1; j <= m; ++j) letters.push_back(Letter::y(j));
  for (int j = 1; j <= m; ++j) letters.push_back(Letter::x(j));
  return Word(std::move(letters), m);
}

// ---- canonical form ----
//
// Runs of equal sign may be permuted freely and pair indices relabeled. Letters
// get label-free colours by refinement over the pairing structure; inside a
// run, letters are ordered by colour and ties are broken by searching for the
// lexicographically smallest sequence of first-occurrence labels.

namespace {

struct Slot {
  int letter;
  int slot;
};

class Canonicalizer {
public:
  explicit Canonicalizer(const Word& w) : w_(w), n_(w.length()) {
    run_.resize(n_);
    int r = 0;
    for (size_t i = 0; i < n_; ++i) {
      if (i > 0 && w[i].sign() != w[i - 1].sign()) ++r;
      run_[i] = r;
      if (static_cast<int>(run_members_.size()) <= r) run_members_.emplace_back();
      run_members_[r].push_back(static_cast<int>(i));
    }
    partner_.resize(n_);
    std::map<int, Slot> where;
    for (size_t i = 0; i < n_; ++i) {
      int s = 0;
      for (auto c : w[i].code())
        if (c != 0) where[c] = {static_cast<int>(i), s++};
      partner_[i].resize(s);
    }
    for (const auto& [c, at] : where) partner_[at.letter][at.slot] = where.at(-c);
    refine();
  }

  Word run() {
    arrangement_.clear();
    label_.assign(w_.m() + 1, 0);
    next_label_ = 1;
    used_.assign(n_, false);
    have_best_ = false;
    seq_.clear();
    search(0);
    std::vector<int> tau(w_.m());
    for (int j = 1; j <= w_.m(); ++j) tau[j - 1] = best_label_[j] ? best_label_[j] : j;
    std::vector<Letter> out;
    out.reserve(n_);
    for (int i : best_arrangement_) out.push_back(w_[i].relabeled(tau));
    return Word(std::move(out), w_.m());
  }

private:
  void refine() {
    std::vector<std::vector<int>> sig(n_);
    for (size_t i = 0; i < n_; ++i) {
      sig[i] = {run_[i]};
      for (auto c : w_[i].code()) sig[i].push_back(c == 0 ? 0 : (c > 0 ? 1 : 2));
    }
    colour_ = rank(sig);
    size_t classes = count_classes();
    for (size_t iter = 0; iter < n_ + 1; ++iter) {
      for (size_t i = 0; i < n_; ++i) {
        sig[i] = {colour_[i]};
        for (const auto& p : partner_[i]) {
          sig[i].push_back(colour_[p.letter]);
          sig[i].push_back(p.slot);
        }
      }
      colour_ = rank(sig);
      const size_t now = count_classes();
      if (now == classes) break;
      classes = now;
    }
  }

  static std::vector<int> rank(const std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(sig.size());
    for (size_t i = 0; i < sig.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    return out;
  }

  size_t count_classes() const { return std::set<int>(colour_.begin(), colour_.end()).size(); }

  // Labels emitted when placing letter i next (new pairs get fresh labels in order).
  std::vector<int> extension(int i) const {
    std::vector<int> out;
    std::vector<int> fresh;  // pairs newly labeled within this letter
    int next = next_label_;
    for (auto c : w_[i].code()) {
      if (c == 0) {
        out.push_back(0);
        continue;
      }
      const int j = std::abs(c);
      int lab = label_[j];
      if (!lab) {
        auto it = std::find(fresh.begin(), fresh.end(), j);
        lab = it == fresh.end() ? (fresh.push_back(j), next++) : next_label_ + static_cast<int>(it - fresh.begin());
      }
      out.push_back(c > 0 ? lab : -lab);
    }
    return out;
  }

  // Prefix comparison of seq_ + ext against the best complete sequence.
  int compare_with_best(const std::vector<int>& ext) const {
    if (!have_best_) return -1;
    const size_t base = seq_.size();
    for (size_t k = 0; k < ext.size(); ++k) {
      if (ext[k] != best_seq_[base + k]) return ext[k] < best_seq_[base + k] ? -1 : 1;
    }
    return 0;
  }

  void search(size_t pos) {
    if (pos == n_) {
      if (!have_best_ || seq_ < best_seq_) {
        best_seq_ = seq_;
        best_arrangement_ = arrangement_;
        best_label_ = label_;
        have_best_ = true;
      }
      return;
    }
    const auto& members = run_members_[run_[pos]];
    int min_colour = -1;
    for (int i : members)
      if (!used_[i] && (min_colour < 0 || colour_[i] < min_colour)) min_colour = colour_[i];
    std::vector<int> cands;
    std::vector<int> best_ext;
    for (int i : members) {
      if (used_[i] || colour_[i] != min_colour) continue;
      auto ext = extension(i);
      if (cands.empty() || ext < best_ext) {
        cands = {i};
        best_ext = std::move(ext);
      } else if (ext == best_ext) {
        cands.push_back(i);
      }
    }
    if (compare_with_best(best_ext) > 0) return;

    // Interchangeable leaves: two unlabeled leaf letters of one run whose partners
    // are leaves in a common run. Swapping both pairs is a symmetry of the state.
    std::set<int> twin_runs_tried;
    for (int i : cands) {
      if (w_[i].is_leaf()) {
        const Slot p = partner_[i][0];
        if (w_[p.letter].is_leaf() && !label_[std::abs(w_[i].code()[0])]) {
          if (!twin_runs_tried.insert(run_[p.letter]).second) continue;
        }
      }
      place(i, best_ext);
      search(pos + 1);
      unplace(i, best_ext.size());
    }
  }

  void place(int i, const std::vector<int>& ext) {
    used_[i] = true;
    arrangement_.push_back(i);
    for (auto c : w_[i].code()) {
      if (c == 0) continue;
      const int j = std::abs(c);
      if (!label_[j]) {
        label_[j] = next_label_++;
        assigned_.push_back(j);
      } else {
        assigned_.push_back(0);
      }
    }
    seq_.insert(seq_.end(), ext.begin(), ext.end());
  }

  void unplace(int i, size_t ext_len) {
    used_[i] = false;
    arrangement_.pop_back();
    seq_.resize(seq_.size() - ext_len);
    for (int k = w_[i].symbol_count(); k > 0; --k) {
      const int j = assigned_.back();
      assigned_.pop_back();
      if (j) {
        label_[j] = 0;
        --next_label_;
      }
    }
  }

  const Word& w_;
  size_t n_;
  std::vector<int> run_;
  std::vector<std::vector<int>> run_members_;
  std::vector<std::vector<Slot>> partner_;
  std::vector<int> colour_;

  std::vector<int> arrangement_;
  std::vector<int> label_;
  std::vector<int> assigned_;
  int next_label_ = 1;
  std::vector<bool> used_;
  std::vector<int> seq_;

  bool have_best_ = false;
  std::vector<int> best_seq_;
  std::vector<int> best_arrangement_;
  std::vector<int> best_label_;
};

}  // namespace

Word canonical_form(const Word& w) { return Canonicalizer(w).run(); }

// ---- WordCombination ----

void WordCombination::add(const Word& w, const Rational& c) { add_canonical(canonical_form(w), c); }

void WordCombination::add_canonical(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational WordCombination::coefficient(const Word& w) const {
  auto it = terms_.find(canonical_form(w));
  return it == terms_.end() ? Rational(0) : it->second;
}

WordCombination& WordCombination::operator+=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add_canonical(w, c);
  return *this;
}

WordCombination& WordCombination::operator-=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add_canonical(w, -c);
  return *this;
}

WordCombination& WordCombination::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const WordCombination& c) {
  if (c.empty()) return os << "0";
  bool first = true;
  for (const auto& [w, v] : c.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(v) << "*(" << w << ")";
  }
  return os;
}

// ---- enumeration ----

std::vector<Letter> enumerate_letters(std::span<const Symbol> symbols) {
  const size_t n = symbols.size();
  if (n == 0 || n % 2 == 0 || n > 20) return {};
  std::map<unsigned, std::vector<Letter>> memo;
  std::function<const std::vector<Letter>&(unsigned)> over = [&](unsigned mask) -> const std::vector<Letter>& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::vector<Letter> out;
    const int bits = std::popcount(mask);
    if (bits == 1) {
      out.push_back(Letter::leaf(symbols[std::countr_zero(mask)]));
    } else if (bits % 2 == 1) {
      // ordered splits mask = a | b | c with odd nonempty parts
      for (unsigned a = (mask - 1) & mask; a; a = (a - 1) & mask) {
        if (std::popcount(a) % 2 == 0) continue;
        const unsigned rest = mask & ~a;
        for (unsigned b = (rest - 1) & rest; b; b = (b - 1) & rest) {
          const unsigned c = rest & ~b;
          if (std::popcount(b) % 2 == 0 || std::popcount(c) % 2 == 0) continue;
          const auto& la = over(a);
          const auto& lb = over(b);
          const auto& lc = over(c);
          for (const auto& x : la)
            for (const auto& y : lb) {
              if (y.sign() == x.sign()) continue;
              for (const auto& z : lc)
                if (z.sign() == x.sign()) out.push_back(make_triple(x, y, z));
            }
        }
      }
    }
    return memo.emplace(mask, std::move(out)).first->second;
  };
  return over((1u << n) - 1);
}

std::vector<Word> enumerate_words(int m, size_t max_length) {
  std::vector<Word> out;
  if (m < 1 || m > 5) throw WordError("enumerate_words supports 1 <= m <= 5");
  for (unsigned jmask = 1; jmask < (1u << m); ++jmask) {
    std::vector<Symbol> syms;
    for (int j = 1; j <= m; ++j)
      if (jmask >> (j - 1) & 1u) {
        syms.push_back(Symbol::x(j));
        syms.push_back(Symbol::y(j));
      }
    const unsigned full = (1u << syms.size()) - 1;
    std::map<unsigned, std::vector<Letter>> letters_over;
    auto letters_for = [&](unsigned mask) -> const std::vector<Letter>& {
      auto it = letters_over.find(mask);
      if (it != letters_over.end()) return it->second;
      std::vector<Symbol> sub;
      for (size_t b = 0; b < syms.size(); ++b)
        if (mask >> b & 1u) sub.push_back(syms[b]);
      return letters_over.emplace(mask, enumerate_letters(sub)).first->second;
    };
    std::vector<Letter> prefix;
    std::function<void(unsigned)> rec = [&](unsigned remaining) {
      if (remaining == 0) {
        out.emplace_back(prefix, m);
        return;
      }
      if (prefix.size() == max_length) return;
      for (unsigned sub = remaining; sub; sub = (sub - 1) & remaining) {
        if (std::popcount(sub) % 2 == 0) continue;
        for (const auto& l : letters_for(sub)) {
          prefix.push_back(l);
          rec(remaining & ~sub);
          prefix.pop_back();
        }
      }
    };
    rec(full);
  }
  return out;
}

Word random_word(int m, int merges, std::mt19937_64& rng) {
  std::vector<Letter> pool;
  for (int j = 1; j <= m; ++j) {
    pool.push_back(Letter::x(j));
    pool.push_back(Letter::y(j));
  }
  for (int k = 0; k < merges; ++k) {
    std::vector<size_t> plus, minus;
    for (size_t i = 0; i < pool.size(); ++i) (pool[i].sign() == Sign::Plus ? plus : minus).push_back(i);
    const bool outer_plus = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    auto& outer = outer_plus ? plus : minus;
    auto& inner = outer_plus ? minus : plus;
    if (outer.size() < 2 || inner.empty()) continue;
    std::shuffle(outer.begin(), outer.end(), rng);
    const size_t mid = inner[std::uniform_int_distribution<size_t>(0, inner.size() - 1)(rng)];
    Letter t = make_triple(pool[outer[0]], pool[mid], pool[outer[1]]);
    std::vector<size_t> drop{outer[0], outer[1], mid};
    std::sort(drop.rbegin(), drop.rend());
    for (size_t d : drop) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    pool.push_back(std::move(t));
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  return Word(std::move(pool), m);
}

}  // namespace hlap

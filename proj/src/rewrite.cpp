#include "hlap/rewrite.hpp"

#include "hlap/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hlap {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::Prune: return "prune";
  }
  return "?";
}

namespace {

void check_position(const Word& w, size_t i) {
  if (i < 1 || i + 1 > w.length())
    throw WordError("position " + std::to_string(i) + " out of range for a word of length " +
                    std::to_string(w.length()));
}

Word swapped(const Word& w, size_t i) {
  std::vector<Letter> letters = w.letters();
  std::swap(letters[i - 1], letters[i]);
  return Word(std::move(letters), w.m());
}

}  // namespace

Word apply_r1(const Word& w, size_t i) {
  check_position(w, i);
  if (w[i - 1].sign() != w[i].sign()) throw WordError("R1 needs equal signs at position " + std::to_string(i));
  return swapped(w, i);
}

std::pair<Letter, int> bracket_letter(const Letter& l, const Letter& mu, const Letter& t) {
  if (t.sign() == l.sign()) return {make_triple(l, mu, t), 1};
  return {make_triple(mu, l, t), -1};
}

WordCombination apply_r2(const Word& w, size_t i) {
  check_position(w, i);
  const Letter& l = w[i - 1];
  const Letter& mu = w[i];
  if (l.sign() == mu.sign()) throw WordError("R2 needs different signs at position " + std::to_string(i));
  WordCombination out(swapped(w, i));
  for (size_t j = i + 1; j < w.length(); ++j) {
    auto [merged, s] = bracket_letter(l, mu, w[j]);
    std::vector<Letter> letters;
    letters.reserve(w.length() - 2);
    for (size_t k = 0; k < w.length(); ++k) {
      if (k == i - 1 || k == i) continue;
      letters.push_back(k == j ? merged : w[k]);
    }
    out.add(Word(std::move(letters), w.m()), Rational(s));
  }
  return out;
}

Word relabel_r3(const Word& w, std::span<const int> tau) {
  const int m = w.m();
  if (static_cast<int>(tau.size()) != m) throw WordError("permutation has wrong size");
  std::vector<bool> hit(m + 1, false);
  for (int t : tau) {
    if (t < 1 || t > m || hit[t]) throw WordError("tau is not a bijection on 1..m");
    hit[t] = true;
  }
  std::vector<Letter> letters;
  for (const auto& l : w.letters()) letters.push_back(l.relabeled(tau));
  return Word(std::move(letters), m);
}

namespace {

struct LongestFirst {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    return a < b;
  }
};

class Engine {
public:
  Engine(Mode mode, RewriteTrace* trace, const Budget& budget) : mode_(mode), trace_(trace), budget_(budget) {}

  WordCombination run(const WordCombination& input) {
    for (const auto& [w, c] : input.terms()) push(w, c);
    while (!pending_.empty()) {
      budget_.check();
      auto node = pending_.extract(pending_.begin());
      process(node.key(), node.mapped());
    }
    return std::move(result_);
  }

private:
  void push(const Word& canonical, const Rational& c) {
    auto [it, inserted] = pending_.try_emplace(canonical, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending_.erase(it);
  }

  bool killed(const Word& w) const { return mode_ == Mode::RPrime && (has_cycle(w) || is_product(w)); }

  void prune(const Word& w, const Rational& c) {
    if (trace_) trace_->steps.push_back({Rule::Prune, 0, WordCombination(w, c), WordCombination()});
  }

  void process(const Word& w, const Rational& c) {
    if (killed(w)) return prune(w, c);

    // Target order: components by first occurrence, original order inside each.
    const auto comp = build_graph(w).components();
    std::vector<std::pair<int, size_t>> key(w.length());
    for (size_t p = 0; p < w.length(); ++p) key[p] = {comp[p], p};

    Word u = w;
    for (;;) {
      size_t i = 0;
      while (i + 1 < u.length() && key[i] < key[i + 1]) ++i;
      if (i + 1 >= u.length()) break;
      budget_.check();
      std::swap(key[i], key[i + 1]);
      if (u[i].sign() == u[i + 1].sign()) {
        Word v = apply_r1(u, i + 1);
        if (trace_) trace_->steps.push_back({Rule::R1, i + 1, WordCombination(u, c), WordCombination(v, c)});
        u = std::move(v);
        continue;
      }
      WordCombination next = apply_r2(u, i + 1);
      Word v = swapped(u, i + 1);
      if (trace_) trace_->steps.push_back({Rule::R2, i + 1, WordCombination(u, c), next * c});
      const Word vc = canonical_form(v);
      for (const auto& [x, a] : next.terms())
        if (x != vc) push(x, a * c);
      u = std::move(v);
      if (killed(u)) return prune(u, c);
    }
    // R1 swaps can expose a product prefix
    if (killed(u)) return prune(u, c);
    result_.add(u, c);
  }

  Mode mode_;
  RewriteTrace* trace_;
  const Budget& budget_;
  std::map<Word, Rational, LongestFirst> pending_;
  WordCombination result_;
};

}  // namespace

WordCombination reduce(const WordCombination& c, Mode mode, RewriteTrace* trace, const Budget& budget) {
  return Engine(mode, trace, budget).run(c);
}

WordCombination replay(const WordCombination& initial, const RewriteTrace& trace) {
  WordCombination state = initial;
  for (const auto& s : trace.steps) {
    state -= s.before;
    state += s.after;
  }
  return state;
}

Rational tree_coefficient(int m, Mode mode, const Budget& budget) {
  const WordCombination reduced = reduce(WordCombination(laplacian_word(m)), mode, nullptr, budget);
  Rational sum = 0;
  for (const auto& [w, c] : reduced.terms())
    if (static_cast<int>(j_set(w).size()) == m && is_tree(w)) sum += c;
  return sum;
}

Rational tree_coefficient_formula(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m % 2 == 0) return 0;
  const int k = (m - 1) / 2;
  Integer fact = 1;
  for (int i = 2; i <= 2 * k; ++i) fact *= i;
  Integer binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (k + i) / i;
  Integer pow2 = 1;
  for (int i = 0; i < k; ++i) pow2 *= 2;
  Rational out = Rational(fact * binom) / Rational(pow2);
  return k % 2 ? -out : out;
}

}  // namespace hlap

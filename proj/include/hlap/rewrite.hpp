#ifndef HLAP_REWRITE_HPP
#define HLAP_REWRITE_HPP

#include "hlap/words.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hlap {

class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock allowance checked cooperatively between rewrite steps.
class Budget {
public:
  Budget() = default;
  explicit Budget(double seconds)
      : deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds))) {}

  bool exhausted() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }
  void check() const {
    if (exhausted()) throw BudgetExhausted("runtime budget exhausted");
  }

private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

enum class Rule { R1, R2, Prune };
const char* to_string(Rule r);

/// One rewrite: `before` was replaced by `after` (both in canonical form).
struct RewriteStep {
  Rule rule;
  size_t position;  // 1-based; 0 for pruning
  WordCombination before;
  WordCombination after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

/// Swap the same-sign letters at positions i, i+1 (1-based).
Word apply_r1(const Word& w, size_t i);

/// Swap the different-sign letters at positions i, i+1 and add the bracket corrections.
WordCombination apply_r2(const Word& w, size_t i);

/// The merged letter [l m t] together with its sign factor.
std::pair<Letter, int> bracket_letter(const Letter& l, const Letter& mu, const Letter& t);

/// Replace every index j by tau(j); tau is given as tau[j-1], a permutation of 1..m.
Word relabel_r3(const Word& w, std::span<const int> tau);

enum class Mode { R, RPrime };

/// Rewrite modulo R (or R') until every surviving word is factorized.
WordCombination reduce(const WordCombination& c, Mode mode, RewriteTrace* trace = nullptr,
                       const Budget& budget = Budget());

inline WordCombination factorize(const WordCombination& c, RewriteTrace* trace = nullptr,
                                 const Budget& budget = Budget()) {
  return reduce(c, Mode::R, trace, budget);
}
inline WordCombination reduce_mod_rprime(const WordCombination& c, RewriteTrace* trace = nullptr,
                                         const Budget& budget = Budget()) {
  return reduce(c, Mode::RPrime, trace, budget);
}

/// initial - sum(before) + sum(after).
WordCombination replay(const WordCombination& initial, const RewriteTrace& trace);

/// Sum of coefficients of tree words with m edges after reducing w_m.
Rational tree_coefficient(int m, Mode mode = Mode::RPrime, const Budget& budget = Budget());

/// (2k)!/(-2)^k * binom(2k, k) for m = 2k+1, zero for even m.
Rational tree_coefficient_formula(int m);

}  // namespace hlap

#endif

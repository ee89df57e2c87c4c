#ifndef HLAP_POLYNOMIAL_HPP
#define HLAP_POLYNOMIAL_HPP

#include "hlap/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlap {

/// Sparse multivariate polynomial over an exact field, keyed by exponent vectors.
template <class S>
class Polynomial {
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, S>;

  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}

  static Polynomial constant(int vars, const S& c) {
    Polynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }
  static Polynomial variable(int vars, int j) {
    Polynomial p(vars);
    Exponents e(vars, 0);
    e.at(j) = 1;
    p.add_term(e, S(1));
    return p;
  }
  static Polynomial monomial(const Exponents& e, const S& c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const S& c) {
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent vector has wrong length");
    if (hlap::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (hlap::is_zero(it->second)) terms_.erase(it);
  }

  S coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  Polynomial homogeneous_part(int d) const {
    Polynomial p(vars_);
    for (const auto& [e, c] : terms_)
      if (total(e) == d) p.terms_.emplace(e, c);
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    if (hlap::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * S(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial p(a.vars_);
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    Polynomial out = constant(vars_, S(1));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) out *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  S evaluate(const std::vector<S>& x) const {
    if (static_cast<int>(x.size()) != vars_) throw std::invalid_argument("evaluation point has wrong length");
    S sum(0);
    for (const auto& [e, c] : terms_) {
      S t = c;
      for (int i = 0; i < vars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      sum += t;
    }
    return sum;
  }

  /// Substitute variable i by subs[i] (all of the same arity).
  Polynomial compose(const std::vector<Polynomial>& subs) const {
    if (static_cast<int>(subs.size()) != vars_) throw std::invalid_argument("substitution has wrong length");
    const int out_vars = subs.empty() ? 0 : subs[0].vars();
    Polynomial out(out_vars);
    std::vector<std::vector<Polynomial>> powers(vars_);
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(out_vars, c);
      for (int i = 0; i < vars_; ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(out_vars, S(1)));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
        if (e[i]) t *= pw[e[i]];
      }
      out += t;
    }
    return out;
  }

  /// p(z + s).
  Polynomial shifted(const std::vector<S>& s) const {
    std::vector<Polynomial> subs;
    for (int i = 0; i < vars_; ++i) subs.push_back(variable(vars_, i) + constant(vars_, s.at(i)));
    return compose(subs);
  }

  Polynomial derivative(int j) const {
    Polynomial p(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Exponents f = e;
      --f[j];
      p.add_term(f, c * S(e[j]));
    }
    return p;
  }

  template <class To>
  Polynomial<To> cast() const {
    Polynomial<To> p(vars_);
    for (const auto& [e, c] : terms_) {
      if constexpr (std::is_same_v<To, Rational>)
        p.add_term(e, to_rational(c));
      else
        p.add_term(e, scalar_cast<To>(c));
    }
    return p;
  }

  /// Human-readable, variables named prefix1, prefix2, ...
  std::string str(const std::string& prefix = "z") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending degree reads naturally
    std::vector<std::pair<Exponents, S>> items(terms_.rbegin(), terms_.rend());
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return total(a.first) > total(b.first); });
    for (const auto& [e, c] : items) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      for (int i = 0; i < vars_; ++i) {
        if (e[i] == 0) continue;
        os << "*" << prefix << i + 1;
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

  static int total(const Exponents& e) {
    int t = 0;
    for (int k : e) t += k;
    return t;
  }

private:
  void check(const Polynomial& o) const {
    if (o.vars_ != vars_) throw std::invalid_argument("polynomials in different numbers of variables");
  }

  int vars_ = 0;
  Terms terms_;
};

using PolyQ = Polynomial<Rational>;

}  // namespace hlap

#endif

#ifndef HLAP_PBW_HPP
#define HLAP_PBW_HPP

#include "hlap/liealg.hpp"
#include "hlap/polynomial.hpp"
#include "hlap/words.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace hlap {

/// Enveloping algebra of a Lie algebra with an ordered basis. Monomials are
/// non-decreasing sequences of positions in the ordering.
///
/// Straightening uses u' l g = u' g l + u' [l, g] and is memoized; the memo is
/// guarded so the algebra can be shared between threads.
template <class S>
class EnvAlgebra {
public:
  using Monomial = std::vector<std::uint8_t>;
  using Terms = std::map<Monomial, S>;

  /// ad in basis coordinates; ordering[p] is the basis index placed at position p.
  EnvAlgebra(const std::vector<Mat<S>>& ad, std::vector<int> ordering, std::vector<std::string> names);

  int dim() const { return static_cast<int>(ordering_.size()); }
  const std::vector<int>& ordering() const { return ordering_; }
  int position_of(int basis_index) const { return position_.at(basis_index); }
  /// Names in ordering order.
  std::vector<std::string> ordered_names() const;

  /// Normal form of u * e_{pos}.
  const Terms& straighten(const Monomial& u, int pos) const;
  Terms times_generator(const Terms& t, int pos) const;
  Terms multiply(const Terms& a, const Terms& b) const;

  size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

private:
  std::vector<int> ordering_;
  std::vector<int> position_;
  std::vector<std::string> names_;
  // bracket_[p][q] = [e_p, e_q] in position coordinates
  std::vector<std::vector<std::vector<std::pair<int, S>>>> bracket_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Monomial, int>, Terms> memo_;
};

template <class S>
void add_to(typename EnvAlgebra<S>::Terms& t, const typename EnvAlgebra<S>::Monomial& m, const S& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (is_zero(it->second)) t.erase(it);
}

/// Element of U(g) in PBW normal form, tagged with its algebra.
template <class S>
class EnvElement {
public:
  using Algebra = EnvAlgebra<S>;
  using Terms = typename Algebra::Terms;
  using Monomial = typename Algebra::Monomial;

  explicit EnvElement(std::shared_ptr<const Algebra> alg) : alg_(std::move(alg)) {}
  EnvElement(std::shared_ptr<const Algebra> alg, Terms t) : alg_(std::move(alg)), terms_(std::move(t)) {}

  static EnvElement scalar(std::shared_ptr<const Algebra> alg, const S& c) {
    EnvElement e(std::move(alg));
    add_to<S>(e.terms_, {}, c);
    return e;
  }
  /// The basis element with the given basis index.
  static EnvElement generator(std::shared_ptr<const Algebra> alg, int basis_index) {
    EnvElement e(alg);
    e.terms_[{static_cast<std::uint8_t>(alg->position_of(basis_index))}] = S(1);
    return e;
  }
  /// A Lie algebra element as a degree-one element.
  static EnvElement from_vector(std::shared_ptr<const Algebra> alg, const Vec<S>& v) {
    EnvElement e(alg);
    for (int i = 0; i < v.size(); ++i)
      add_to<S>(e.terms_, {static_cast<std::uint8_t>(alg->position_of(i))}, v(i));
    return e;
  }

  const Terms& terms() const { return terms_; }
  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
  }

  EnvElement& operator+=(const EnvElement& o) {
    same(o);
    for (const auto& [m, c] : o.terms_) add_to<S>(terms_, m, c);
    return *this;
  }
  EnvElement& operator-=(const EnvElement& o) {
    same(o);
    for (const auto& [m, c] : o.terms_) add_to<S>(terms_, m, -c);
    return *this;
  }
  EnvElement& operator*=(const S& s) {
    if (hlap::is_zero(s)) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(EnvElement a, const S& s) { return a *= s; }
  friend EnvElement operator*(const EnvElement& a, const EnvElement& b) {
    a.same(b);
    return EnvElement(a.alg_, a.alg_->multiply(a.terms_, b.terms_));
  }
  friend bool operator==(const EnvElement& a, const EnvElement& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

private:
  void same(const EnvElement& o) const {
    if (o.alg_ != alg_) throw std::invalid_argument("elements of different enveloping algebras");
  }

  std::shared_ptr<const Algebra> alg_;
  Terms terms_;
};

using EnvQ = EnvElement<Rational>;

/// Normal form of the product of basis elements (basis indices, left to right).
template <class S>
EnvElement<S> normalize(const std::shared_ptr<const EnvAlgebra<S>>& alg, const std::vector<int>& product);

/// Enveloping algebra ordered (q-, q+, h), each block by ascending basis index.
std::shared_ptr<const EnvAlgebra<Rational>> standard_env(const LieAlgebraQ& g);

/// Drop every monomial containing an h factor; the ordering must place h last.
EnvQ reduce_mod_h(const EnvQ& e, const LieAlgebraQ& g);

/// Op: words realized in U(g) with x_j -> X_a, y_j -> Y_a summed over the dual
/// bases, letters evaluated as nested brackets, indices summed over J_w only.
class OpRealizer {
public:
  explicit OpRealizer(const LieAlgebraQ& g);
  /// Use the columns of xs as the basis of q+ (with its dual basis of q-).
  OpRealizer(const LieAlgebraQ& g, const MatQ& xs);

  const LieAlgebraQ& algebra() const { return g_; }
  const std::shared_ptr<const EnvAlgebra<Rational>>& env() const { return env_; }
  int n() const { return static_cast<int>(xs_.cols()); }

  /// Letter evaluated with x_j -> X_{alpha[j-1]}, y_j -> Y_{alpha[j-1]}.
  VecQ evaluate_letter(const Letter& l, const std::vector<int>& alpha) const;

  EnvQ realize(const Word& w) const;
  EnvQ realize(const WordCombination& c) const;

private:
  const LieAlgebraQ& g_;
  MatQ xs_, ys_;
  std::shared_ptr<const EnvAlgebra<Rational>> env_;
};

/// reduce_mod_h(realize(c1 - c2)) == 0.
bool oracle_equiv(const WordCombination& c1, const WordCombination& c2, const OpRealizer& op);

/// a-projection and Harish-Chandra map for one model.
class HarishChandra {
public:
  HarishChandra(const LieAlgebraQ& g, const CartanData<Rational>& cartan);

  const IwasawaData& iwasawa_data() const { return iw_; }
  int rank() const { return iw_.rank; }
  /// rho(A_j) / (2 c0): the shift in zeta coordinates.
  const std::vector<QSqrt2>& shift() const { return shift_; }

  /// Pure-a part with A_j read as (A_j | zeta) = 2 c0 zeta_j.
  Polynomial<QSqrt2> a_part(const EnvQ& e) const;
  Polynomial<QSqrt2> gamma_exact(const EnvQ& e) const;
  /// Throws std::domain_error when an irrational coefficient survives.
  PolyQ gamma(const EnvQ& e) const;

private:
  using Terms = EnvAlgebra<QSqrt2>::Terms;
  const Terms& prefix_product(const std::vector<int>& prefix) const;

  const LieAlgebraQ& g_;
  CartanData<Rational> cartan_;
  IwasawaData iw_;
  std::shared_ptr<const EnvAlgebra<QSqrt2>> env_;
  std::vector<QSqrt2> shift_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::vector<int>, Terms> prefix_cache_;
};

/// gamma(L_m) with L_m = realize(w_m).
PolyQ gamma_laplacian(int m, const OpRealizer& op, const HarishChandra& hc);

}  // namespace hlap

#include "hlap/pbw_impl.hpp"

#endif

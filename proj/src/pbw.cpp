#include "hlap/pbw.hpp"

#include <mutex>

namespace hlap {

std::shared_ptr<const EnvAlgebra<Rational>> standard_env(const LieAlgebraQ& g) {
  std::vector<int> ordering;
  for (Grade gr : {Grade::QMinus, Grade::QPlus, Grade::H})
    for (int i : g.indices(gr)) ordering.push_back(i);
  return std::make_shared<const EnvAlgebra<Rational>>(g.structure(), ordering, g.names());
}

EnvQ reduce_mod_h(const EnvQ& e, const LieAlgebraQ& g) {
  const auto& ord = e.algebra()->ordering();
  std::vector<bool> is_h(ord.size());
  bool seen_h = false;
  for (size_t p = 0; p < ord.size(); ++p) {
    is_h[p] = g.grade(ord[p]) == Grade::H;
    if (is_h[p]) seen_h = true;
    else if (seen_h) throw std::invalid_argument("reduce_mod_h needs an ordering with h last");
  }
  EnvQ::Terms out;
  for (const auto& [m, c] : e.terms()) {
    const bool has_h = std::any_of(m.begin(), m.end(), [&](std::uint8_t p) { return is_h[p]; });
    if (!has_h) out.emplace(m, c);
  }
  return EnvQ(e.algebra(), std::move(out));
}

// ---- Op ----

OpRealizer::OpRealizer(const LieAlgebraQ& g) : g_(g), env_(standard_env(g)) {
  std::tie(xs_, ys_) = dual_bases(g);
}

OpRealizer::OpRealizer(const LieAlgebraQ& g, const MatQ& xs) : g_(g), xs_(xs), env_(standard_env(g)) {
  ys_ = dual_basis(g, xs_);
}

VecQ OpRealizer::evaluate_letter(const Letter& l, const std::vector<int>& alpha) const {
  if (l.is_leaf()) {
    const Symbol s = l.symbol();
    const int a = alpha.at(s.index - 1);
    return s.sign == Sign::Plus ? VecQ(xs_.col(a)) : VecQ(ys_.col(a));
  }
  const auto ch = l.children();
  const VecQ inner = g_.bracket(evaluate_letter(ch[0], alpha), evaluate_letter(ch[1], alpha));
  return g_.bracket(inner, evaluate_letter(ch[2], alpha));
}

EnvQ OpRealizer::realize(const Word& w) const {
  const auto js = j_set(w);
  const int n = this->n();
  std::vector<int> alpha(w.m(), 0);
  EnvQ::Terms total;
  if (n == 0) return EnvQ(env_);
  // odometer over alpha_j for j in J_w
  for (;;) {
    EnvQ::Terms t;
    t.emplace(EnvQ::Monomial{}, Rational(1));
    for (const auto& l : w.letters()) {
      const VecQ v = evaluate_letter(l, alpha);
      EnvQ::Terms next;
      for (int i = 0; i < v.size(); ++i) {
        if (v(i).is_zero()) continue;
        for (const auto& [m, c] : env_->times_generator(t, env_->position_of(i))) add_to<Rational>(next, m, c * v(i));
      }
      t = std::move(next);
      if (t.empty()) break;
    }
    for (const auto& [m, c] : t) add_to<Rational>(total, m, c);
    size_t k = 0;
    while (k < js.size() && ++alpha[js[k] - 1] == n) alpha[js[k++] - 1] = 0;
    if (k == js.size()) break;
  }
  return EnvQ(env_, std::move(total));
}

EnvQ OpRealizer::realize(const WordCombination& c) const {
  EnvQ out(env_);
  for (const auto& [w, coeff] : c.terms()) out += realize(w) * coeff;
  return out;
}

bool oracle_equiv(const WordCombination& c1, const WordCombination& c2, const OpRealizer& op) {
  return reduce_mod_h(op.realize(c1 - c2), op.algebra()).is_zero();
}

// ---- Harish-Chandra ----

HarishChandra::HarishChandra(const LieAlgebraQ& g, const CartanData<Rational>& cartan)
    : g_(g), cartan_(cartan), iw_(iwasawa(g, cartan)) {
  std::vector<int> identity(g.dim());
  for (int i = 0; i < g.dim(); ++i) identity[i] = i;
  env_ = std::make_shared<const EnvAlgebra<QSqrt2>>(iw_.ad, identity, std::vector<std::string>{});
  const QSqrt2 two_c0 = QSqrt2(Rational(2) * cartan_.c0);
  for (const auto& r : iw_.rho) shift_.push_back(r / two_c0);
}

const HarishChandra::Terms& HarishChandra::prefix_product(const std::vector<int>& prefix) const {
  {
    std::shared_lock lock(mutex_);
    auto it = prefix_cache_.find(prefix);
    if (it != prefix_cache_.end()) return it->second;
  }
  Terms out;
  if (prefix.empty()) {
    out.emplace(EnvAlgebra<QSqrt2>::Monomial{}, QSqrt2(1));
  } else {
    const std::vector<int> head(prefix.begin(), prefix.end() - 1);
    const Terms& left = prefix_product(head);
    const int last = prefix.back();
    for (int k = 0; k < g_.dim(); ++k) {
      const QSqrt2& c = iw_.inverse(k, last);
      if (c.is_zero()) continue;
      for (const auto& [m, v] : env_->times_generator(left, k)) add_to<QSqrt2>(out, m, v * c);
    }
    // n U(g) is a right ideal; it never contributes to the a-part.
    for (auto it = out.begin(); it != out.end();) {
      if (!it->first.empty() && it->first.front() < iw_.n_dim)
        it = out.erase(it);
      else
        ++it;
    }
  }
  std::unique_lock lock(mutex_);
  return prefix_cache_.try_emplace(prefix, std::move(out)).first->second;
}

Polynomial<QSqrt2> HarishChandra::a_part(const EnvQ& e) const {
  const int r = iw_.rank;
  const auto& ord = e.algebra()->ordering();
  const QSqrt2 two_c0(Rational(2) * cartan_.c0);
  Polynomial<QSqrt2> out(r);
  for (const auto& [m, c] : e.terms()) {
    std::vector<int> factors;
    for (auto p : m) factors.push_back(ord[p]);
    for (const auto& [mono, v] : prefix_product(factors)) {
      std::vector<int> exps(r, 0);
      bool pure = true;
      for (auto p : mono) {
        if (iw_.part(p) != IwasawaData::Part::A) {
          pure = false;
          break;
        }
        ++exps[p - iw_.n_dim];
      }
      if (!pure) continue;
      QSqrt2 coeff = v * QSqrt2(c);
      for (size_t k = 0; k < mono.size(); ++k) coeff *= two_c0;
      out.add_term(exps, coeff);
    }
  }
  return out;
}

Polynomial<QSqrt2> HarishChandra::gamma_exact(const EnvQ& e) const { return a_part(e).shifted(shift_); }

PolyQ HarishChandra::gamma(const EnvQ& e) const { return gamma_exact(e).cast<Rational>(); }

PolyQ gamma_laplacian(int m, const OpRealizer& op, const HarishChandra& hc) {
  const EnvQ l = reduce_mod_h(op.realize(laplacian_word(m)), op.algebra());
  return hc.gamma(l);
}

}  // namespace hlap

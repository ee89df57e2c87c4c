// Template definitions for liealg.hpp.
#ifndef HLAP_LIEALG_IMPL_HPP
#define HLAP_LIEALG_IMPL_HPP

#include <algorithm>
#include <set>

namespace hlap {

template <class S>
GradedLieAlgebra<S>::GradedLieAlgebra(std::vector<std::string> names, std::vector<Grade> grading,
                                      std::vector<Mat<S>> ad, Mat<S> form)
    : names_(std::move(names)), grading_(std::move(grading)), ad_(std::move(ad)), form_(std::move(form)) {
  validate();
}

template <class S>
int GradedLieAlgebra<S>::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw AlgebraError("unknown basis element '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

template <class S>
std::vector<int> GradedLieAlgebra<S>::indices(Grade g) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (grading_[i] == g) out.push_back(i);
  return out;
}

template <class S>
Mat<S> GradedLieAlgebra<S>::ad_of(const Vec<S>& v) const {
  Mat<S> out = Mat<S>::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (!is_zero(v(i))) out += v(i) * ad_[i];
  return out;
}

template <class S>
void GradedLieAlgebra<S>::validate() {
  const int d = dim();
  if (d == 0) throw AlgebraError("empty basis");
  if (static_cast<int>(grading_.size()) != d || static_cast<int>(ad_.size()) != d || form_.rows() != d ||
      form_.cols() != d)
    throw AlgebraError("dimension data is not square");
  for (const auto& a : ad_)
    if (a.rows() != d || a.cols() != d) throw AlgebraError("dimension data is not square");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw AlgebraError("basis names are not distinct");

  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      if (ad_[i].col(j) != -ad_[j].col(i))
        throw AlgebraError("bracket is not antisymmetric at (" + names_[i] + ", " + names_[j] + ")");

  // Jacobi as [ad e_i, ad e_j] = ad [e_i, e_j].
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Mat<S> lhs = ad_[i] * ad_[j] - ad_[j] * ad_[i];
      if (lhs != ad_of(Vec<S>(ad_[i].col(j))))
        throw AlgebraError("Jacobi identity fails for (" + names_[i] + ", " + names_[j] + ")");
    }

  auto in_grade = [&](const Vec<S>& v, Grade g) {
    for (int k = 0; k < d; ++k)
      if (!is_zero(v(k)) && grading_[k] != g) return false;
    return true;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int gi = static_cast<int>(grading_[i]);
      const int gj = static_cast<int>(grading_[j]);
      const Vec<S> b = ad_[i].col(j);
      if (gi + gj == 2 || gi + gj == -2) {
        if (!is_zero_matrix<S>(b))
          throw AlgebraError("grading: q" + std::string(gi > 0 ? "+" : "-") + " is not abelian (" + names_[i] +
                             ", " + names_[j] + ")");
      } else if (!in_grade(b, static_cast<Grade>(gi + gj))) {
        throw AlgebraError("grading: [" + names_[i] + ", " + names_[j] + "] has the wrong degree");
      }
    }

  // Z0 from ad(Z0) = diag(grade).
  Mat<S> sys = Mat<S>::Zero(d * d, d);
  Vec<S> rhs = Vec<S>::Zero(d * d);
  for (int l = 0; l < d; ++l)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) sys(k * d + j, l) = ad_[l](k, j);
  for (int j = 0; j < d; ++j) rhs(j * d + j) = S(static_cast<int>(grading_[j]));
  auto z = solve<S>(sys, rhs);
  if (!z) throw AlgebraError("grading: no element Z0 with [Z0, X] = +-X on q+-");
  z0_ = *z;

  if (form_ != form_.transpose()) throw AlgebraError("form is not symmetric");
  if (rank<S>(form_) != d) throw AlgebraError("form is degenerate");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // ([e_i, e_j] | e_k) = (e_i | [e_j, e_k]) for all k
      const Vec<S> lhs = form_.transpose() * Vec<S>(ad_[i].col(j));
      const Vec<S> rhs2 = ad_[j].transpose() * Vec<S>(form_.row(i).transpose());
      if (lhs != rhs2)
        throw AlgebraError("form is not associative at (" + names_[i] + ", " + names_[j] + ")");
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (grading_[i] != Grade::H && grading_[i] == grading_[j] && !is_zero(form_(i, j)))
        throw AlgebraError("form pairs q" + std::string(grading_[i] == Grade::QPlus ? "+" : "-") + " with itself");
}

template <class S>
Mat<S> killing_form(const std::vector<Mat<S>>& ad) {
  const int d = static_cast<int>(ad.size());
  Mat<S> k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      k(i, j) = (ad[i] * ad[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

template <class S>
Mat<S> dual_basis(const GradedLieAlgebra<S>& g, const Mat<S>& xs) {
  const auto minus = g.indices(Grade::QMinus);
  const int n = static_cast<int>(minus.size());
  if (xs.cols() != n) throw AlgebraError("dual_basis needs a basis of q+");
  Mat<S> pairing(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairing(a, b) = g.form(Vec<S>(xs.col(a)), g.unit(minus[b]));
  auto inv = inverse<S>(pairing);
  if (!inv) throw AlgebraError("q+ and q- are not paired perfectly by the form");
  Mat<S> ys = Mat<S>::Zero(g.dim(), n);
  for (int beta = 0; beta < n; ++beta)
    for (int b = 0; b < n; ++b) ys(minus[b], beta) = (*inv)(b, beta);
  return ys;
}

template <class S>
std::pair<Mat<S>, Mat<S>> dual_bases(const GradedLieAlgebra<S>& g) {
  const auto plus = g.indices(Grade::QPlus);
  Mat<S> xs = Mat<S>::Zero(g.dim(), static_cast<Eigen::Index>(plus.size()));
  for (size_t a = 0; a < plus.size(); ++a) xs(plus[a], a) = S(1);
  return {xs, dual_basis(g, xs)};
}

template <class S>
CartanData<S> verify_cartan(const GradedLieAlgebra<S>& g, const std::vector<Vec<S>>& E,
                            const std::vector<Vec<S>>& F) {
  if (E.size() != F.size() || E.empty()) throw AlgebraError("Cartan data needs matching nonempty E and F lists");
  auto in = [&](const Vec<S>& v, Grade gr) {
    for (int k = 0; k < g.dim(); ++k)
      if (!is_zero(v(k)) && g.grade(k) != gr) return false;
    return true;
  };
  CartanData<S> c;
  c.rank = static_cast<int>(E.size());
  for (int j = 0; j < c.rank; ++j) {
    const std::string tag = std::to_string(j + 1);
    if (!in(E[j], Grade::QPlus)) throw AlgebraError("E_" + tag + " is not in q+");
    if (!in(F[j], Grade::QMinus)) throw AlgebraError("F_" + tag + " is not in q-");
    if (is_zero_matrix<S>(E[j]) || is_zero_matrix<S>(F[j])) throw AlgebraError("E_" + tag + " or F_" + tag + " is zero");
    const Vec<S> h = g.bracket(E[j], F[j]);
    if (g.bracket(h, E[j]) != E[j]) throw AlgebraError("[H_" + tag + ", E_" + tag + "] != E_" + tag);
    if (g.bracket(h, F[j]) != Vec<S>(-F[j])) throw AlgebraError("[H_" + tag + ", F_" + tag + "] != -F_" + tag);
    c.E.push_back(E[j]);
    c.F.push_back(F[j]);
    c.H.push_back(h);
    c.A.push_back(E[j] + F[j]);
  }
  for (int j = 0; j < c.rank; ++j)
    for (int k = 0; k < c.rank; ++k)
      if (j != k && !is_zero_matrix<S>(g.bracket(E[j], F[k])))
        throw AlgebraError("[E_" + std::to_string(j + 1) + ", F_" + std::to_string(k + 1) + "] != 0");
  c.c0 = g.form(E[0], F[0]);
  if (is_zero(c.c0)) throw AlgebraError("(E_1 | F_1) = 0");
  for (int j = 0; j < c.rank; ++j) {
    if (g.form(E[j], F[j]) != c.c0)
      throw AlgebraError("(E_" + std::to_string(j + 1) + " | F_" + std::to_string(j + 1) + ") differs from c0");
    for (int k = 0; k < c.rank; ++k) {
      const S want = j == k ? S(2) * c.c0 : S(0);
      if (g.form(c.A[j], c.A[k]) != want)
        throw AlgebraError("(A_" + std::to_string(j + 1) + " | A_" + std::to_string(k + 1) + ") != " +
                           (j == k ? "2 c0" : "0"));
    }
  }
  return c;
}

}  // namespace hlap

#endif

#ifndef HLAP_EXACT_LINALG_HPP
#define HLAP_EXACT_LINALG_HPP

#include "hlap/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace hlap {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;

/// Reduced row echelon form over an exact field.
template <class S>
struct Rref {
  Mat<S> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each non-zero row
};

template <class S>
Rref<S> rref(Mat<S> a) {
  Rref<S> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const S f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class S>
Eigen::Index rank(const Mat<S>& a) {
  return static_cast<Eigen::Index>(rref<S>(a).pivots.size());
}

/// Columns form a basis of { x : a x = 0 }.
template <class S>
Mat<S> nullspace(const Mat<S>& a) {
  const Rref<S> r = rref<S>(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<S> basis = Mat<S>::Zero(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, k) = S(1);
    for (size_t i = 0; i < r.pivots.size(); ++i) basis(r.pivots[i], k) = -r.reduced(i, f);
  }
  return basis;
}

/// Some solution of a x = b (free variables set to zero), or nullopt when inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Rref<S> r = rref<S>(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(a.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) x(r.pivots[i]) = r.reduced(i, a.cols());
  return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Eigen::Index n = a.rows();
  Mat<S> aug(n, 2 * n);
  aug << a, Mat<S>::Identity(n, n);
  const Rref<S> r = rref<S>(aug);
  if (static_cast<Eigen::Index>(r.pivots.size()) < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return Mat<S>(r.reduced.rightCols(n));
}

template <class S>
bool is_zero_matrix(const Mat<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class To, class From>
Mat<To> cast_matrix(const Mat<From>& a) {
  Mat<To> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = scalar_cast<To>(a(i, j));
  return out;
}

}  // namespace hlap

#endif

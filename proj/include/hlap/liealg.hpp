#ifndef HLAP_LIEALG_HPP
#define HLAP_LIEALG_HPP

#include "hlap/exact_linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlap {

enum class Grade : int { QMinus = -1, H = 0, QPlus = 1 };

const char* to_string(Grade g);
Grade parse_grade(const std::string& s);

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lie algebra given by structure constants, with a
/// grading q- + h + q+ and an invariant form. Validated on construction.
///
/// ad(i)(k, j) is the coefficient of e_k in [e_i, e_j].
template <class S>
class GradedLieAlgebra {
public:
  GradedLieAlgebra(std::vector<std::string> names, std::vector<Grade> grading, std::vector<Mat<S>> ad,
                   Mat<S> form);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;
  Grade grade(int i) const { return grading_.at(i); }
  const std::vector<Grade>& grading() const { return grading_; }
  /// Basis indices with the given grade, ascending.
  std::vector<int> indices(Grade g) const;

  const Mat<S>& ad(int i) const { return ad_.at(i); }
  const std::vector<Mat<S>>& structure() const { return ad_; }
  const Mat<S>& form_matrix() const { return form_; }
  /// The grading element: ad(Z0) acts by +1, 0, -1 on q+, h, q-.
  const Vec<S>& z0() const { return z0_; }

  Mat<S> ad_of(const Vec<S>& v) const;
  Vec<S> bracket(const Vec<S>& a, const Vec<S>& b) const { return ad_of(a) * b; }
  S form(const Vec<S>& a, const Vec<S>& b) const { return (a.transpose() * form_ * b)(0, 0); }
  Vec<S> unit(int i) const {
    Vec<S> v = Vec<S>::Zero(dim());
    v(i) = S(1);
    return v;
  }

private:
  void validate();

  std::vector<std::string> names_;
  std::vector<Grade> grading_;
  std::vector<Mat<S>> ad_;
  Mat<S> form_;
  Vec<S> z0_;
};

using LieAlgebraQ = GradedLieAlgebra<Rational>;

/// tr(ad X ad Y) on basis vectors.
template <class S>
Mat<S> killing_form(const std::vector<Mat<S>>& ad);

/// Structure constants of the span of the given (linearly independent) matrices,
/// which must be closed under commutators.
std::vector<MatQ> structure_from_matrices(const std::vector<MatQ>& basis);

/// Columns: Y_b with (X_a | Y_b) = delta_ab, where X_a are the columns of xs (in q+).
template <class S>
Mat<S> dual_basis(const GradedLieAlgebra<S>& g, const Mat<S>& xs);

/// Standard basis of q+ and its dual in q-.
template <class S>
std::pair<Mat<S>, Mat<S>> dual_bases(const GradedLieAlgebra<S>& g);

/// Verified Cartan data: A_j = E_j + F_j, H_j = [E_j, F_j], c0 = (E_j | F_j).
template <class S>
struct CartanData {
  int rank = 0;
  std::vector<Vec<S>> E, F, H, A;
  S c0;
};

template <class S>
CartanData<S> verify_cartan(const GradedLieAlgebra<S>& g, const std::vector<Vec<S>>& E,
                            const std::vector<Vec<S>>& F);

/// An algebra together with its distinguished Cartan basis.
struct Model {
  std::string label;
  LieAlgebraQ algebra;
  CartanData<Rational> cartan;
};

Model sl2_disc();
Model polydisc(int n);
Model siegel_sp(int two_r);

/// "sl2_disc", "polydisc:N", "siegel:2r".
Model builtin_model(const std::string& selector);

/// Restricted-root decomposition relative to a_C and the resulting
/// g = n + a + h, all over Q(sqrt 2).
struct IwasawaData {
  int rank = 0;
  int n_dim = 0;
  int h_dim = 0;
  int dim = 0;

  struct RootSpace {
    std::vector<QSqrt2> root;  // alpha(A_j)
    int multiplicity = 0;
    bool positive = false;
  };
  std::vector<RootSpace> roots;  // every nonzero root, positive and negative
  std::vector<QSqrt2> rho;       // rho(A_j)

  /// Columns in original coordinates: n basis, then A_1..A_r, then the h basis.
  Mat<QSqrt2> basis;
  Mat<QSqrt2> inverse;
  /// Structure constants in the new basis.
  std::vector<Mat<QSqrt2>> ad;
  /// Root of each n basis vector.
  std::vector<std::vector<QSqrt2>> n_roots;

  enum class Part { N, A, H };
  Part part(int new_index) const {
    if (new_index < n_dim) return Part::N;
    if (new_index < n_dim + rank) return Part::A;
    return Part::H;
  }
};

IwasawaData iwasawa(const LieAlgebraQ& g, const CartanData<Rational>& cartan);

/// JSON algebra definition (see README for the format).
std::string algebra_to_json(const Model& m);
Model algebra_from_json(const std::string& text);

}  // namespace hlap

#include "hlap/liealg_impl.hpp"

#endif

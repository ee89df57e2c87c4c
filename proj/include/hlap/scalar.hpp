#ifndef HLAP_SCALAR_HPP
#define HLAP_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlap {

/// Exact rational numbers (GMP backed, no expression templates so that
/// values compose cleanly inside Eigen matrices).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline int sign(const Rational& q) { return q.sign(); }

/// Best rational approximation of x with denominator at most max_den
/// (continued fractions).
Rational rationalize(double x, long max_den = 1000000);

/// If q is the square of a rational, stores the non-negative root.
bool rational_sqrt(const Rational& q, Rational& root);

/// Elements a + b*sqrt(D) of the real quadratic field Q(sqrt D), D > 1 square-free.
template <int D>
class QuadraticExt {
  static_assert(D > 1, "need a non-trivial real quadratic extension");

public:
  QuadraticExt() = default;
  QuadraticExt(int a) : a_(a) {}  // NOLINT: implicit on purpose, Eigen needs it
  QuadraticExt(const Rational& a) : a_(a) {}  // NOLINT
  QuadraticExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadraticExt sqrt_d() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadraticExt conjugate() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

  /// Sign of the real number a + b*sqrt(D).
  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with D b^2
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(D) * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  QuadraticExt operator-() const { return {-a_, -b_}; }
  QuadraticExt& operator+=(const QuadraticExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadraticExt& operator-=(const QuadraticExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadraticExt& operator*=(const QuadraticExt& o) {
    Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadraticExt& operator/=(const QuadraticExt& o) {
    const Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("division by zero in Q(sqrt d)");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadraticExt operator+(QuadraticExt l, const QuadraticExt& r) { return l += r; }
  friend QuadraticExt operator-(QuadraticExt l, const QuadraticExt& r) { return l -= r; }
  friend QuadraticExt operator*(QuadraticExt l, const QuadraticExt& r) { return l *= r; }
  friend QuadraticExt operator/(QuadraticExt l, const QuadraticExt& r) { return l /= r; }
  friend bool operator==(const QuadraticExt& l, const QuadraticExt& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator<(const QuadraticExt& l, const QuadraticExt& r) { return (l - r).sign() < 0; }
  friend bool operator>(const QuadraticExt& l, const QuadraticExt& r) { return r < l; }
  friend bool operator<=(const QuadraticExt& l, const QuadraticExt& r) { return !(r < l); }
  friend bool operator>=(const QuadraticExt& l, const QuadraticExt& r) { return !(l < r); }

  double to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(double(D));
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticExt& q) {
    return os << to_string(q);
  }

  friend std::string to_string(const QuadraticExt& q) {
    if (q.b_.is_zero()) return hlap::to_string(q.a_);
    std::string s;
    if (!q.a_.is_zero()) s = hlap::to_string(q.a_) + (q.b_.sign() > 0 ? "+" : "");
    return s + hlap::to_string(q.b_) + "*sqrt(" + std::to_string(D) + ")";
  }

private:
  Rational a_{0};
  Rational b_{0};
};

template <int D>
bool is_zero(const QuadraticExt<D>& q) { return q.is_zero(); }
template <int D>
int sign(const QuadraticExt<D>& q) { return q.sign(); }
template <int D>
QuadraticExt<D> abs(const QuadraticExt<D>& q) { return q.sign() < 0 ? -q : q; }

using QSqrt2 = QuadraticExt<2>;

/// Scalar conversion used by base changes Q -> Q(sqrt d).
template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else {
    return To(x);
  }
}

/// Rational value of an element, throwing when an irrational part survives.
template <class S>
Rational to_rational(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return x;
  } else {
    if (!x.is_rational()) throw std::domain_error("value " + to_string(x) + " is not rational");
    return x.rational_part();
  }
}

}  // namespace hlap

namespace Eigen {

template <int D>
struct NumTraits<hlap::QuadraticExt<D>> : GenericNumTraits<hlap::QuadraticExt<D>> {
  using Real = hlap::QuadraticExt<D>;
  using NonInteger = hlap::QuadraticExt<D>;
  using Nested = hlap::QuadraticExt<D>;
  using Literal = hlap::QuadraticExt<D>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif

#ifndef HLAP_WEYLPOLY_HPP
#define HLAP_WEYLPOLY_HPP

#include "hlap/pbw.hpp"

#include <random>
#include <vector>

namespace hlap {

/// zeta_1^{2k} + ... + zeta_r^{2k}.
PolyQ power_sum(int k, int r);

enum class WeylType { C, BC };

/// Fixed by every sign flip and coordinate permutation (the Weyl group of
/// type C_r and of type BC_r is the same group of signed permutations).
bool is_weyl_invariant(const PolyQ& p, WeylType type = WeylType::C);

class NotInvariant : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The unique P in Q[t_1..t_r] with p = P(p_1, ..., p_r).
PolyQ express_in_power_sums(const PolyQ& p);

/// Sum over dual-basis indices of the product of (letter | zeta), zeta = sum zeta_j A_j.
PolyQ top_symbol(const Word& w, const OpRealizer& op, const CartanData<Rational>& cartan);

/// Polynomial-valued element of g: one polynomial in zeta per basis coordinate.
using PolyVector = std::vector<PolyQ>;

/// The letter with every + slot filled by sum zeta_j E_j and every - slot by
/// sum zeta_j F_j, evaluated as nested brackets.
PolyVector mu_eval(const Letter& l, const LieAlgebraQ& g, const CartanData<Rational>& cartan);

/// sum zeta_j^d E_j (sign +) or sum zeta_j^d F_j (sign -).
PolyVector mu_expected(int d, Sign sign, const LieAlgebraQ& g, const CartanData<Rational>& cartan);

/// Every letter shape of depth at most max_depth and the given sign, filled with distinct symbols.
std::vector<Letter> letter_shapes(int max_depth, Sign sign);

/// A random letter shape of exactly the given depth.
Letter random_letter_shape(int depth, Sign sign, std::mt19937_64& rng);

/// Jacobian of the polynomials has full row rank at (1,2,3,...) or at (2,3,5,7,...).
bool independence_certificate(const std::vector<PolyQ>& polys);

struct LaplacianDecomposition {
  int m = 0;
  int k = 0;                  // floor(m/2); the top generator is t_{k+1}
  int generators = 0;         // t_1..t_generators used in the solve
  Rational leading;           // coefficient of the linear t_{k+1} term
  PolyQ representation;       // P with gamma(L_m) = P(p_1, ...)
  PolyQ remainder;            // P minus the leading term
  bool consistent = false;    // residual exactly zero
  bool unique = false;
  bool remainder_in_lower = false;  // remainder only involves t_1..t_k
};

/// Solve gamma = P(p_1..p_K) with weighted degree <= 2m, K = min(floor(m/2) + 1, r).
LaplacianDecomposition laplacian_decomposition(int m, const PolyQ& gamma_lm);

/// Convenience: gamma(L_m) computed with the given realizer and Harish-Chandra map.
LaplacianDecomposition laplacian_decomposition(int m, const OpRealizer& op, const HarishChandra& hc);

}  // namespace hlap

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlap/pbw.hpp"

using namespace hlap;

namespace {

// Image in the adjoint representation; U(g) -> End(g) is an algebra map.
MatQ in_adjoint(const EnvQ& e, const LieAlgebraQ& g) {
  const int d = g.dim();
  MatQ out = MatQ::Zero(d, d);
  const auto& ord = e.algebra()->ordering();
  for (const auto& [m, c] : e.terms()) {
    MatQ t = MatQ::Identity(d, d);
    for (auto p : m) t = t * g.ad(ord[p]);
    out += t * c;
  }
  return out;
}

MatQ product_in_adjoint(const std::vector<int>& product, const LieAlgebraQ& g) {
  const int d = g.dim();
  MatQ t = MatQ::Identity(d, d);
  for (int i : product) t = t * g.ad(i);
  return t;
}

std::vector<int> random_product(int dim, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::vector<int> p(len);
  for (auto& i : p) i = pick(rng);
  return p;
}

}  // namespace

TEST_CASE("straightening in sl2") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const auto env = standard_env(g);
  CHECK(env->ordered_names() == std::vector<std::string>{"F", "E", "H"});
  const int e = g.index_of("E"), h = g.index_of("H"), f = g.index_of("F");
  const EnvQ ef = normalize(env, {e, f});
  CHECK(ef == normalize(env, {f, e}) + EnvQ::generator(env, h));
  CHECK(normalize(env, {h}) == EnvQ::generator(env, h));
  CHECK((ef - normalize(env, {f, e}) - EnvQ::generator(env, h)).is_zero());
}

TEST_CASE("normal forms agree with the adjoint representation") {
  std::mt19937_64 rng(3);
  for (const Model& md : {sl2_disc(), polydisc(2), siegel_sp(4)}) {
    const auto& g = md.algebra;
    const auto env = standard_env(g);
    for (int trial = 0; trial < 25; ++trial) {
      const auto p = random_product(g.dim(), 1 + trial % 5, rng);
      CHECK(in_adjoint(normalize(env, p), g) == product_in_adjoint(p, g));
    }
  }
}

TEST_CASE("normalization is idempotent and multiplicative") {
  std::mt19937_64 rng(4);
  const Model md = siegel_sp(4);
  const auto env = standard_env(md.algebra);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_product(md.algebra.dim(), 1 + trial % 4, rng);
    const auto q = random_product(md.algebra.dim(), 1 + trial % 3, rng);
    const EnvQ a = normalize(env, p), b = normalize(env, q);
    EnvQ a_again = EnvQ::scalar(env, Rational(0));
    for (const auto& [m, c] : a.terms()) {
      std::vector<int> prod;
      for (auto pos : m) prod.push_back(env->ordering()[pos]);
      a_again += normalize(env, prod) * c;
    }
    CHECK(a_again == a);
    std::vector<int> pq = p;
    pq.insert(pq.end(), q.begin(), q.end());
    CHECK(normalize(env, pq) == a * b);
  }
}

TEST_CASE("realization examples") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const OpRealizer op(g);
  const auto env = op.env();
  const int e = g.index_of("E"), f = g.index_of("F");
  CHECK(op.realize(parse_word("y1 x1", 1)) == normalize(env, {f, e}) * Rational(1, 4));
  CHECK(op.realize(laplacian_word(2)) == normalize(env, {f, f, e, e}) * Rational(1, 16));
}

TEST_CASE("realization does not depend on the dual basis") {
  std::mt19937_64 rng(9);
  for (const Model& md : {polydisc(2), siegel_sp(4)}) {
    const auto& g = md.algebra;
    const OpRealizer op(g);
    const auto [xs, ys] = dual_bases(g);
    const int n = static_cast<int>(xs.cols());
    MatQ change;
    do {
      change = MatQ(n, n);
      std::uniform_int_distribution<int> pick(-2, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) change(i, j) = pick(rng);
    } while (rank<Rational>(change) < n);
    const OpRealizer other(g, xs * change);
    for (const char* text : {"y1 x1", "y1 y2 x1 x2", "y1 [x1 y2 x2]", "[y1 x2 y2] x1"}) {
      const Word w = parse_word(text, 2);
      CHECK(op.realize(w).terms() == other.realize(w).terms());
    }
  }
}

TEST_CASE("reduction modulo h") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const auto env = standard_env(g);
  const int e = g.index_of("E"), h = g.index_of("H"), f = g.index_of("F");
  CHECK(reduce_mod_h(normalize(env, {e, f}), g) == normalize(env, {f, e}));
  CHECK(reduce_mod_h(normalize(env, {f, f, e, e}), g) == normalize(env, {f, f, e, e}));
  CHECK(reduce_mod_h(EnvQ::generator(env, h), g).is_zero());
}

TEST_CASE("oracle equivalence examples") {
  const Model s = sl2_disc();
  const OpRealizer op(s.algebra);
  const Word yx = parse_word("y1 x1", 1);
  CHECK(oracle_equiv(WordCombination(yx), WordCombination(parse_word("x1 y1", 1)), op));
  CHECK_FALSE(oracle_equiv(WordCombination(yx), WordCombination(yx, Rational(2)), op));
}

TEST_CASE("a-part") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const HarishChandra hc(g, md.cartan);
  const OpRealizer op(g);
  const auto env = op.env();
  // (A_1 | zeta_1 A_1) = 2 c0 zeta_1
  const auto a1 = hc.a_part(EnvQ::from_vector(env, md.cartan.A[0]));
  CHECK(a1 == Polynomial<QSqrt2>::variable(1, 0) * QSqrt2(4));
  CHECK(hc.a_part(EnvQ::generator(env, g.index_of("H"))).is_zero());
  const auto top = hc.a_part(op.realize(parse_word("y1 x1", 1))).homogeneous_part(2);
  CHECK(top == Polynomial<QSqrt2>::variable(1, 0).pow(2) * QSqrt2(2));
}

TEST_CASE("harish-chandra map") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const HarishChandra hc(g, md.cartan);
  const OpRealizer op(g);
  CHECK(hc.gamma(EnvQ::scalar(op.env(), Rational(1))) == PolyQ::constant(1, Rational(1)));
  const PolyQ z = PolyQ::variable(1, 0);
  const EnvQ l1 = op.realize(parse_word("y1 x1", 1));
  const PolyQ g1 = hc.gamma(l1);
  CHECK(g1 == z.pow(2) * Rational(2) - PolyQ::constant(1, Rational(1, 16)));
  CHECK(hc.gamma(l1 * l1) == g1 * g1);
  CHECK(gamma_laplacian(2, op, hc) ==
        z.pow(4) * Rational(4) - z.pow(2) * Rational(5, 4) + PolyQ::constant(1, Rational(9, 256)));
}

TEST_CASE("harish-chandra map is multiplicative on realized laplacians") {
  for (const Model& md : {polydisc(2), siegel_sp(4)}) {
    const auto& g = md.algebra;
    const HarishChandra hc(g, md.cartan);
    const OpRealizer op(g);
    const EnvQ l1 = op.realize(laplacian_word(1));
    const EnvQ l2 = op.realize(laplacian_word(2));
    CHECK(hc.gamma(l1 * l2) == hc.gamma(l1) * hc.gamma(l2));
    CHECK(hc.gamma(l2 * l1) == hc.gamma(l1) * hc.gamma(l2));
  }
}

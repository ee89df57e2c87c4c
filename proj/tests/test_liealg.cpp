#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlap/liealg.hpp"

#include <set>

using namespace hlap;

namespace {

// sl(2) in the basis (E, H, F) from the hand-written brackets
// [H,E] = 2E, [H,F] = -2F, [E,F] = H.
std::vector<MatQ> sl2_constants() {
  std::vector<MatQ> ad(3, MatQ::Zero(3, 3));
  auto set = [&](int i, int j, int k, int c) {
    ad[i](k, j) = c;
    ad[j](k, i) = -c;
  };
  set(1, 0, 0, 2);
  set(1, 2, 2, -2);
  set(0, 2, 1, 1);
  return ad;
}

MatQ trace_form(const std::vector<MatQ>& ad) {
  const int d = static_cast<int>(ad.size());
  MatQ b(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational t(0);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) t += ad[i](k, l) * ad[j](l, k);
      b(i, j) = t;
    }
  return b;
}

const std::vector<Grade> kSl2Grading{Grade::QPlus, Grade::H, Grade::QMinus};

}  // namespace

TEST_CASE("sl2 from structure constants") {
  const auto ad = sl2_constants();
  const MatQ b = trace_form(ad);
  CHECK(b(0, 2) == 4);
  CHECK(b(1, 1) == 8);
  CHECK(killing_form(ad) == b);
  const LieAlgebraQ g({"E", "H", "F"}, kSl2Grading, ad, b);
  CHECK(g.dim() == 3);
  CHECK(g.z0() == VecQ(g.unit(1) / 2));
  CHECK(g.indices(Grade::QPlus) == std::vector<int>{0});
}

TEST_CASE("invalid algebras") {
  const auto ad = sl2_constants();
  CHECK_THROWS_WITH_AS(LieAlgebraQ({"E", "H", "F"}, kSl2Grading, ad, MatQ::Zero(3, 3)), doctest::Contains("degenerate"),
                       AlgebraError);
  auto broken = ad;
  broken[1](0, 0) = 3;
  broken[0](0, 1) = -3;
  CHECK_THROWS_AS(LieAlgebraQ({"E", "H", "F"}, kSl2Grading, broken, trace_form(ad)), AlgebraError);
  auto asym = ad;
  asym[0](1, 2) = 2;
  CHECK_THROWS_AS(LieAlgebraQ({"E", "H", "F"}, kSl2Grading, asym, trace_form(ad)), AlgebraError);
  CHECK_THROWS_AS(LieAlgebraQ({"E", "E", "F"}, kSl2Grading, ad, trace_form(ad)), AlgebraError);
  // E placed in h: the grading element cannot exist
  CHECK_THROWS_AS(LieAlgebraQ({"E", "H", "F"}, {Grade::H, Grade::H, Grade::QMinus}, ad, trace_form(ad)), AlgebraError);
}

TEST_CASE("dual bases") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const auto [xs, ys] = dual_bases(g);
  REQUIRE(xs.cols() == 1);
  const int e = g.index_of("E"), f = g.index_of("F");
  CHECK(xs(e, 0) == 1);
  CHECK(ys(f, 0) == Rational(1, 4));
  for (const Model& m : {polydisc(2), siegel_sp(4)}) {
    const auto [x, y] = dual_bases(m.algebra);
    for (int i = 0; i < x.cols(); ++i)
      for (int j = 0; j < y.cols(); ++j)
        CHECK(m.algebra.form(x.col(i), y.col(j)) == (i == j ? 1 : 0));
  }
}

TEST_CASE("cartan verification") {
  const Model md = sl2_disc();
  const auto& g = md.algebra;
  const VecQ e = g.unit(g.index_of("E")), f = g.unit(g.index_of("F"));
  const auto cd = verify_cartan(g, {e}, {VecQ(f / 2)});
  CHECK(cd.c0 == 2);
  CHECK(cd.A[0] == VecQ(e + f / 2));
  CHECK_THROWS_WITH_AS(verify_cartan(g, {e}, {f}), doctest::Contains("E_1"), AlgebraError);
  CHECK(polydisc(3).cartan.c0 == 2);
}

TEST_CASE("builtin models") {
  const Model s = sl2_disc();
  CHECK(s.algebra.dim() == 3);
  CHECK(s.cartan.c0 == 2);
  CHECK(s.algebra.z0() == VecQ(s.algebra.unit(s.algebra.index_of("H")) / 2));
  const Model p = polydisc(2);
  CHECK(p.algebra.dim() == 6);
  CHECK(p.cartan.rank == 2);
  const Model sp = siegel_sp(4);
  CHECK(sp.algebra.dim() == 10);
  CHECK(sp.algebra.indices(Grade::QPlus).size() == 3);
  CHECK(sp.cartan.rank == 2);
  CHECK(sp.algebra.form_matrix() == trace_form(sp.algebra.structure()));
  const Model sp6 = siegel_sp(6);
  CHECK(sp6.algebra.dim() == 21);
  CHECK(sp6.cartan.rank == 3);
  CHECK(builtin_model("siegel:4").algebra.dim() == 10);
  CHECK(builtin_model("polydisc:3").algebra.dim() == 9);
  CHECK_THROWS(builtin_model("polydisc:x"));
  CHECK_THROWS(builtin_model("nope"));
}

TEST_CASE("iwasawa data") {
  const Model s = sl2_disc();
  const IwasawaData iw = iwasawa(s.algebra, s.cartan);
  CHECK(iw.n_dim == 1);
  CHECK(iw.rank == 1);
  CHECK(iw.h_dim == 1);
  CHECK((iw.basis * iw.inverse).isIdentity());

  const Model p = polydisc(2);
  const IwasawaData ip = iwasawa(p.algebra, p.cartan);
  REQUIRE(ip.rho.size() == 2);
  CHECK(ip.rho[0] == ip.rho[1]);
  CHECK(ip.n_dim == 2);

  const Model sp = siegel_sp(4);
  const IwasawaData is = iwasawa(sp.algebra, sp.cartan);
  CHECK(is.roots.size() == 8);
  std::multiset<QSqrt2> lengths;
  int positive = 0;
  for (const auto& r : is.roots) {
    lengths.insert(r.root[0] * r.root[0] + r.root[1] * r.root[1]);
    if (r.positive) ++positive;
  }
  CHECK(positive == 4);
  REQUIRE(std::set<QSqrt2>(lengths.begin(), lengths.end()).size() == 2);
  const QSqrt2 shortest = *lengths.begin(), longest = *lengths.rbegin();
  CHECK(lengths.count(shortest) == 4);
  CHECK(longest == shortest * QSqrt2(2));
  int n = 0;
  for (const auto& r : is.roots)
    if (r.positive) n += r.multiplicity;
  CHECK(n == is.n_dim);
}

TEST_CASE("json round trip") {
  for (const Model& md : {sl2_disc(), polydisc(2), siegel_sp(4)}) {
    const Model back = algebra_from_json(algebra_to_json(md));
    CHECK(back.label == md.label);
    CHECK(back.algebra.names() == md.algebra.names());
    CHECK(back.algebra.structure() == md.algebra.structure());
    CHECK(back.algebra.form_matrix() == md.algebra.form_matrix());
    CHECK(back.cartan.c0 == md.cartan.c0);
    CHECK(algebra_to_json(back) == algebra_to_json(md));
  }
  CHECK_THROWS_AS(algebra_from_json("{"), AlgebraError);
  CHECK_THROWS_AS(algebra_from_json(R"({"label":"x","basis":["a"],"grading":["q+"]})"), AlgebraError);
}

#include "hlap/liealg.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <cmath>
#include <map>

namespace hlap {

const char* to_string(Grade g) {
  switch (g) {
    case Grade::QMinus: return "q-";
    case Grade::H: return "h";
    case Grade::QPlus: return "q+";
  }
  return "?";
}

Grade parse_grade(const std::string& s) {
  if (s == "q+") return Grade::QPlus;
  if (s == "q-") return Grade::QMinus;
  if (s == "h") return Grade::H;
  throw AlgebraError("unknown grading label '" + s + "'");
}

namespace {

VecQ flatten(const MatQ& m) {
  VecQ v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

MatQ unit_matrix(int n, int i, int j) {
  MatQ m = MatQ::Zero(n, n);
  m(i, j) = 1;
  return m;
}

Model finish(std::string label, std::vector<std::string> names, std::vector<Grade> grading,
             const std::vector<MatQ>& basis, const std::vector<std::pair<int, Rational>>& e_list,
             const std::vector<std::pair<int, Rational>>& f_list) {
  auto ad = structure_from_matrices(basis);
  MatQ form = killing_form(ad);
  LieAlgebraQ g(std::move(names), std::move(grading), std::move(ad), std::move(form));
  std::vector<VecQ> E, F;
  for (const auto& [i, c] : e_list) E.push_back(g.unit(i) * c);
  for (const auto& [i, c] : f_list) F.push_back(g.unit(i) * c);
  auto cartan = verify_cartan(g, E, F);
  return Model{std::move(label), std::move(g), std::move(cartan)};
}

}  // namespace

std::vector<MatQ> structure_from_matrices(const std::vector<MatQ>& basis) {
  const int d = static_cast<int>(basis.size());
  if (d == 0) throw AlgebraError("empty basis");
  MatQ flat(basis[0].size(), d);
  for (int i = 0; i < d; ++i) flat.col(i) = flatten(basis[i]);
  if (rank<Rational>(flat) != d) throw AlgebraError("basis matrices are linearly dependent");
  std::vector<MatQ> ad(d, MatQ::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const MatQ comm = basis[i] * basis[j] - basis[j] * basis[i];
      auto c = solve<Rational>(flat, flatten(comm));
      if (!c) throw AlgebraError("span of the matrices is not closed under commutators");
      ad[i].col(j) = *c;
    }
  return ad;
}

Model sl2_disc() {
  // E = [[0,1],[0,0]], H = diag(1,-1), F = [[0,0],[1,0]]
  MatQ e = unit_matrix(2, 0, 1);
  MatQ h = unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1);
  MatQ f = unit_matrix(2, 1, 0);
  return finish("sl2_disc", {"E", "H", "F"}, {Grade::QPlus, Grade::H, Grade::QMinus}, {e, h, f},
                {{0, Rational(1)}}, {{2, Rational(1, 2)}});
}

Model polydisc(int n) {
  if (n < 1) throw AlgebraError("polydisc needs N >= 1");
  const int size = 2 * n;
  std::vector<MatQ> basis;
  std::vector<std::string> names;
  std::vector<Grade> grading;
  std::vector<std::pair<int, Rational>> es, fs;
  for (int b = 0; b < n; ++b) {
    const int o = 2 * b;
    const std::string t = std::to_string(b + 1);
    es.emplace_back(static_cast<int>(basis.size()), Rational(1));
    basis.push_back(unit_matrix(size, o, o + 1));
    basis.push_back(unit_matrix(size, o, o) - unit_matrix(size, o + 1, o + 1));
    fs.emplace_back(static_cast<int>(basis.size()), Rational(1, 2));
    basis.push_back(unit_matrix(size, o + 1, o));
    names.insert(names.end(), {"E" + t, "H" + t, "F" + t});
    grading.insert(grading.end(), {Grade::QPlus, Grade::H, Grade::QMinus});
  }
  return finish("polydisc:" + std::to_string(n), std::move(names), std::move(grading), basis, es, fs);
}

Model siegel_sp(int two_r) {
  if (two_r < 2 || two_r % 2) throw AlgebraError("siegel_sp needs an even size 2r >= 2");
  const int r = two_r / 2;
  std::vector<MatQ> basis;
  std::vector<std::string> names;
  std::vector<Grade> grading;
  std::vector<std::pair<int, Rational>> es, fs;
  // X = [[A, B], [C, -A^T]] with B, C symmetric; q+ is the B block.
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      MatQ m = unit_matrix(two_r, i, r + j);
      if (i != j) m += unit_matrix(two_r, j, r + i);
      if (i == j) es.emplace_back(static_cast<int>(basis.size()), Rational(1));
      basis.push_back(m);
      names.push_back("B" + std::to_string(i + 1) + std::to_string(j + 1));
      grading.push_back(Grade::QPlus);
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      basis.push_back(unit_matrix(two_r, i, j) - unit_matrix(two_r, r + j, r + i));
      names.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
      grading.push_back(Grade::H);
    }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      MatQ m = unit_matrix(two_r, r + i, j);
      if (i != j) m += unit_matrix(two_r, r + j, i);
      if (i == j) fs.emplace_back(static_cast<int>(basis.size()), Rational(1, 2));
      basis.push_back(m);
      names.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
      grading.push_back(Grade::QMinus);
    }
  return finish("siegel:" + std::to_string(two_r), std::move(names), std::move(grading), basis, es, fs);
}

Model builtin_model(const std::string& selector) {
  if (selector == "sl2_disc") return sl2_disc();
  const auto colon = selector.find(':');
  if (colon != std::string::npos) {
    const std::string kind = selector.substr(0, colon);
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(selector.substr(colon + 1), &used);
      if (used != selector.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw AlgebraError("bad algebra parameter in '" + selector + "'");
    }
    if (kind == "polydisc") return polydisc(n);
    if (kind == "siegel") return siegel_sp(n);
  }
  throw AlgebraError("unknown algebra '" + selector + "'");
}

// ---- Iwasawa ----

namespace {

using MatS = Mat<QSqrt2>;

// Exact eigenvalues of ad(A) guessed from floating point and written in Q(sqrt 2).
std::vector<QSqrt2> eigenvalue_candidates(const MatQ& m) {
  Eigen::MatrixXd md(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) md(i, j) = m(i, j).convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> es(md, false);
  std::vector<QSqrt2> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const auto z = es.eigenvalues()(k);
    if (std::abs(z.imag()) > 1e-6) throw AlgebraError("ad(A) has a non-real eigenvalue");
    const double x = z.real();
    QSqrt2 v(0);
    if (std::abs(x) > 1e-9) {
      const Rational sq = rationalize(x * x, 100000);
      Rational root;
      if (rational_sqrt(sq, root)) {
        v = QSqrt2(root);
      } else if (rational_sqrt(sq / 2, root)) {
        v = QSqrt2(Rational(0), root);
      } else {
        throw AlgebraError("ad(A) eigenvalue " + std::to_string(x) + " is not in Q(sqrt 2)");
      }
      if (x < 0) v = -v;
    }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

// X with u * X = b, for u of full column rank and b in its column span.
MatS restrict_to(const MatS& u, const MatS& b) {
  MatS aug(u.rows(), u.cols() + b.cols());
  aug << u, b;
  const auto r = rref<QSqrt2>(aug);
  if (static_cast<Eigen::Index>(r.pivots.size()) != u.cols() ||
      (u.cols() > 0 && r.pivots.back() != u.cols() - 1))
    throw AlgebraError("subspace is not invariant under ad(a)");
  return r.reduced.topRightCorner(u.cols(), b.cols());
}

bool lex_positive(const std::vector<QSqrt2>& root) {
  for (const auto& x : root)
    if (!x.is_zero()) return x.sign() > 0;
  return false;
}

}  // namespace

IwasawaData iwasawa(const LieAlgebraQ& g, const CartanData<Rational>& cartan) {
  const int d = g.dim();
  const int r = cartan.rank;
  if (r < 1) throw AlgebraError("Iwasawa data needs Cartan data");

  struct Block {
    MatS basis;
    std::vector<QSqrt2> root;
  };
  std::vector<Block> blocks{{MatS::Identity(d, d), {}}};
  for (int j = 0; j < r; ++j) {
    const MatQ adq = g.ad_of(cartan.A[j]);
    const MatS ad = cast_matrix<QSqrt2>(adq);
    const auto cands = eigenvalue_candidates(adq);
    std::vector<Block> next;
    for (const auto& blk : blocks) {
      const MatS rest = restrict_to(blk.basis, ad * blk.basis);
      Eigen::Index found = 0;
      for (const auto& lam : cands) {
        const MatS shifted = rest - MatS::Identity(rest.rows(), rest.cols()) * lam;
        const MatS ns = nullspace<QSqrt2>(shifted);
        if (ns.cols() == 0) continue;
        found += ns.cols();
        Block b{blk.basis * ns, blk.root};
        b.root.push_back(lam);
        next.push_back(std::move(b));
      }
      if (found != blk.basis.cols())
        throw AlgebraError("ad(A_" + std::to_string(j + 1) + ") is not diagonalizable over Q(sqrt 2)");
    }
    blocks = std::move(next);
  }

  IwasawaData out;
  out.rank = r;
  out.dim = d;
  out.rho.assign(r, QSqrt2(0));
  std::vector<Vec<QSqrt2>> n_vectors;
  for (const auto& b : blocks) {
    const bool zero = std::all_of(b.root.begin(), b.root.end(), [](const QSqrt2& x) { return x.is_zero(); });
    if (zero) continue;
    IwasawaData::RootSpace rs{b.root, static_cast<int>(b.basis.cols()), lex_positive(b.root)};
    out.roots.push_back(rs);
    if (!rs.positive) continue;
    for (Eigen::Index c = 0; c < b.basis.cols(); ++c) {
      n_vectors.push_back(b.basis.col(c));
      out.n_roots.push_back(b.root);
    }
    for (int k = 0; k < r; ++k) out.rho[k] += b.root[k] * QSqrt2(Rational(static_cast<int>(b.basis.cols()), 2));
  }
  const auto hs = g.indices(Grade::H);
  out.n_dim = static_cast<int>(n_vectors.size());
  out.h_dim = static_cast<int>(hs.size());
  if (out.n_dim + r + out.h_dim != d)
    throw AlgebraError("dimension count fails: dim n + dim a + dim h != dim g");

  out.basis = MatS::Zero(d, d);
  int col = 0;
  for (const auto& v : n_vectors) out.basis.col(col++) = v;
  for (const auto& a : cartan.A) out.basis.col(col++) = cast_matrix<QSqrt2>(MatQ(a));
  for (int h : hs) out.basis(h, col++) = QSqrt2(1);
  auto inv = inverse<QSqrt2>(out.basis);
  if (!inv) throw AlgebraError("n + a + h is not a direct sum");
  out.inverse = std::move(*inv);

  std::vector<MatS> ad_old;
  for (int i = 0; i < d; ++i) ad_old.push_back(cast_matrix<QSqrt2>(g.ad(i)));
  for (int i = 0; i < d; ++i) {
    MatS m = MatS::Zero(d, d);
    for (int l = 0; l < d; ++l)
      if (!out.basis(l, i).is_zero()) m += ad_old[l] * out.basis(l, i);
    out.ad.push_back(out.inverse * m * out.basis);
  }
  return out;
}

// ---- JSON ----

namespace {

using nlohmann::ordered_json;

ordered_json sparse_vector(const LieAlgebraQ& g, const VecQ& v) {
  ordered_json o = ordered_json::object();
  for (int k = 0; k < g.dim(); ++k)
    if (!v(k).is_zero()) o[g.name(k)] = to_string(v(k));
  return o;
}

VecQ parse_sparse(const std::vector<std::string>& names, const nlohmann::json& o) {
  VecQ v = VecQ::Zero(static_cast<Eigen::Index>(names.size()));
  if (!o.is_object()) throw AlgebraError("expected an object of basis-name: coefficient pairs");
  for (auto it = o.begin(); it != o.end(); ++it) {
    auto pos = std::find(names.begin(), names.end(), it.key());
    if (pos == names.end()) throw AlgebraError("unknown basis element '" + it.key() + "'");
    const std::string s = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    v(pos - names.begin()) += parse_rational(s);
  }
  return v;
}

}  // namespace

std::string algebra_to_json(const Model& m) {
  const auto& g = m.algebra;
  ordered_json j;
  j["label"] = m.label;
  j["basis"] = g.names();
  std::vector<std::string> grading;
  for (auto gr : g.grading()) grading.push_back(to_string(gr));
  j["grading"] = grading;
  ordered_json brackets = ordered_json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      const VecQ v = g.ad(a).col(b);
      if (is_zero_matrix<Rational>(v)) continue;
      brackets.push_back({{"a", g.name(a)}, {"b", g.name(b)}, {"result", sparse_vector(g, v)}});
    }
  j["brackets"] = brackets;
  ordered_json form = ordered_json::array();
  for (int a = 0; a < g.dim(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < g.dim(); ++b) row.push_back(to_string(g.form_matrix()(a, b)));
    form.push_back(row);
  }
  j["form"] = form;
  if (m.cartan.rank > 0) {
    ordered_json es = ordered_json::array(), fs = ordered_json::array();
    for (int k = 0; k < m.cartan.rank; ++k) {
      es.push_back(sparse_vector(g, m.cartan.E[k]));
      fs.push_back(sparse_vector(g, m.cartan.F[k]));
    }
    j["cartan"] = {{"E", es}, {"F", fs}};
  }
  return j.dump(2);
}

Model algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto names = j.at("basis").get<std::vector<std::string>>();
    const int d = static_cast<int>(names.size());
    std::vector<Grade> grading;
    for (const auto& s : j.at("grading").get<std::vector<std::string>>()) grading.push_back(parse_grade(s));
    std::vector<MatQ> ad(d, MatQ::Zero(d, d));
    auto index = [&](const std::string& n) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw AlgebraError("unknown basis element '" + n + "'");
      return static_cast<int>(it - names.begin());
    };
    for (const auto& br : j.at("brackets")) {
      const int a = index(br.at("a").get<std::string>());
      const int b = index(br.at("b").get<std::string>());
      const VecQ v = parse_sparse(names, br.at("result"));
      ad[a].col(b) += v;
      ad[b].col(a) -= v;
    }
    MatQ form;
    if (j.contains("form")) {
      const auto& rows = j.at("form");
      if (static_cast<int>(rows.size()) != d) throw AlgebraError("form matrix has wrong size");
      form.resize(d, d);
      for (int a = 0; a < d; ++a) {
        if (static_cast<int>(rows[a].size()) != d) throw AlgebraError("form matrix has wrong size");
        for (int b = 0; b < d; ++b) {
          const auto& x = rows[a][b];
          form(a, b) = parse_rational(x.is_string() ? x.get<std::string>() : x.dump());
        }
      }
    } else {
      form = killing_form(ad);
    }
    LieAlgebraQ g(names, std::move(grading), std::move(ad), std::move(form));
    CartanData<Rational> cartan;
    if (j.contains("cartan")) {
      std::vector<VecQ> E, F;
      for (const auto& e : j.at("cartan").at("E")) E.push_back(parse_sparse(names, e));
      for (const auto& f : j.at("cartan").at("F")) F.push_back(parse_sparse(names, f));
      cartan = verify_cartan(g, E, F);
    }
    return Model{j.value("label", std::string("custom")), std::move(g), std::move(cartan)};
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed algebra definition: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw AlgebraError(std::string("malformed algebra definition: ") + e.what());
  }
}

}  // namespace hlap

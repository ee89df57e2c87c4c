#include "hlap/weylpoly.hpp"

#include <functional>
#include <set>

namespace hlap {

PolyQ power_sum(int k, int r) {
  if (k < 1 || r < 1) throw std::invalid_argument("power_sum needs k >= 1 and r >= 1");
  PolyQ p(r);
  for (int j = 0; j < r; ++j) {
    PolyQ::Exponents e(r, 0);
    e[j] = 2 * k;
    p.add_term(e, Rational(1));
  }
  return p;
}

bool is_weyl_invariant(const PolyQ& p, WeylType) {
  const int r = p.vars();
  for (const auto& [e, c] : p.terms())
    for (int x : e)
      if (x % 2) return false;
  // adjacent transpositions generate the symmetric group
  for (int j = 0; j + 1 < r; ++j)
    for (const auto& [e, c] : p.terms()) {
      PolyQ::Exponents f = e;
      std::swap(f[j], f[j + 1]);
      if (p.coefficient(f) != c) return false;
    }
  return true;
}

namespace {

// t-exponent vectors over t_1..t_K with sum 2k * e_k <= max_degree.
std::vector<PolyQ::Exponents> weighted_monomials(int K, int max_degree) {
  std::vector<PolyQ::Exponents> out;
  PolyQ::Exponents e(K, 0);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == K) {
      out.push_back(e);
      return;
    }
    for (int x = 0; 2 * (i + 1) * x <= budget; ++x) {
      e[i] = x;
      rec(i + 1, budget - 2 * (i + 1) * x);
    }
    e[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

struct PowerSumSolve {
  PolyQ representation;
  bool consistent = false;
  bool unique = false;
};

PowerSumSolve solve_in_power_sums(const PolyQ& p, int K, int max_degree) {
  const int r = p.vars();
  std::vector<PolyQ> gens;
  for (int k = 1; k <= K; ++k) gens.push_back(power_sum(k, r));
  const auto monos = weighted_monomials(K, max_degree);
  std::vector<PolyQ> columns;
  for (const auto& e : monos) columns.push_back(PolyQ::monomial(e, Rational(1)).compose(gens));

  std::map<PolyQ::Exponents, int> row;
  auto row_of = [&](const PolyQ::Exponents& e) {
    return row.try_emplace(e, static_cast<int>(row.size())).first->second;
  };
  for (const auto& [e, c] : p.terms()) row_of(e);
  for (const auto& col : columns)
    for (const auto& [e, c] : col.terms()) row_of(e);

  MatQ a = MatQ::Zero(static_cast<Eigen::Index>(row.size()), static_cast<Eigen::Index>(columns.size()));
  VecQ b = VecQ::Zero(static_cast<Eigen::Index>(row.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [e, c] : columns[j].terms()) a(row.at(e), static_cast<Eigen::Index>(j)) = c;
  for (const auto& [e, c] : p.terms()) b(row.at(e)) = c;

  PowerSumSolve out;
  out.representation = PolyQ(K);
  out.unique = rank<Rational>(a) == a.cols();
  auto x = solve<Rational>(a, b);
  if (!x) return out;
  out.consistent = true;
  for (size_t j = 0; j < monos.size(); ++j) out.representation.add_term(monos[j], (*x)(static_cast<Eigen::Index>(j)));
  return out;
}

}  // namespace

PolyQ express_in_power_sums(const PolyQ& p) {
  if (!is_weyl_invariant(p)) throw NotInvariant("polynomial is not invariant under signed permutations");
  const int r = p.vars();
  const auto s = solve_in_power_sums(p, r, std::max(p.degree(), 0));
  if (!s.consistent || !s.unique) throw std::logic_error("invariant polynomial has no unique power-sum representation");
  return s.representation;
}

// ---- symbols ----

namespace {

PolyQ pair_with_zeta(const VecQ& v, const LieAlgebraQ& g, const CartanData<Rational>& cartan) {
  PolyQ p(cartan.rank);
  for (int j = 0; j < cartan.rank; ++j) {
    PolyQ::Exponents e(cartan.rank, 0);
    e[j] = 1;
    p.add_term(e, g.form(v, cartan.A[j]));
  }
  return p;
}

PolyVector bracket(const PolyVector& u, const PolyVector& v, const LieAlgebraQ& g, int r) {
  const int d = g.dim();
  PolyVector out(d, PolyQ(r));
  for (int i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      const PolyQ uv = u[i] * v[j];
      for (int k = 0; k < d; ++k) {
        const Rational& c = g.ad(i)(k, j);
        if (!c.is_zero()) out[k] += uv * c;
      }
    }
  }
  return out;
}

}  // namespace

PolyQ top_symbol(const Word& w, const OpRealizer& op, const CartanData<Rational>& cartan) {
  const auto js = j_set(w);
  const int n = op.n();
  std::vector<int> alpha(w.m(), 0);
  PolyQ total(cartan.rank);
  for (;;) {
    PolyQ t = PolyQ::constant(cartan.rank, Rational(1));
    for (const auto& l : w.letters()) {
      t *= pair_with_zeta(op.evaluate_letter(l, alpha), op.algebra(), cartan);
      if (t.is_zero()) break;
    }
    total += t;
    size_t k = 0;
    while (k < js.size() && ++alpha[js[k] - 1] == n) alpha[js[k++] - 1] = 0;
    if (k == js.size()) break;
  }
  return total;
}

PolyVector mu_eval(const Letter& l, const LieAlgebraQ& g, const CartanData<Rational>& cartan) {
  const int r = cartan.rank;
  if (l.is_leaf()) return mu_expected(1, l.sign(), g, cartan);
  const auto ch = l.children();
  const PolyVector inner = bracket(mu_eval(ch[0], g, cartan), mu_eval(ch[1], g, cartan), g, r);
  return bracket(inner, mu_eval(ch[2], g, cartan), g, r);
}

PolyVector mu_expected(int d, Sign sign, const LieAlgebraQ& g, const CartanData<Rational>& cartan) {
  const int r = cartan.rank;
  PolyVector out(g.dim(), PolyQ(r));
  for (int j = 0; j < r; ++j) {
    PolyQ::Exponents e(r, 0);
    e[j] = d;
    const VecQ& v = sign == Sign::Plus ? cartan.E[j] : cartan.F[j];
    for (int k = 0; k < g.dim(); ++k)
      if (!v(k).is_zero()) out[k].add_term(e, v(k));
  }
  return out;
}

namespace {

Letter renumber(const Letter& l, int& next) {
  if (l.is_leaf()) {
    const int j = next++;
    return l.sign() == Sign::Plus ? Letter::x(j) : Letter::y(j);
  }
  const auto ch = l.children();
  Letter a = renumber(ch[0], next);
  Letter b = renumber(ch[1], next);
  Letter c = renumber(ch[2], next);
  return make_triple(a, b, c);
}

Letter fresh(const Letter& shape) {
  int next = 1;
  return renumber(shape, next);
}

// Shapes with possibly repeated placeholder symbols; only signs and nesting matter here.
std::vector<std::vector<int>> shape_codes(int depth, int sign) {
  std::vector<std::vector<int>> out{{sign}};
  if (depth == 0) return out;
  const auto outer = shape_codes(depth - 1, sign);
  const auto inner = shape_codes(depth - 1, -sign);
  for (const auto& a : outer)
    for (const auto& b : inner)
      for (const auto& c : outer) {
        std::vector<int> code{0};
        code.insert(code.end(), a.begin(), a.end());
        code.insert(code.end(), b.begin(), b.end());
        code.insert(code.end(), c.begin(), c.end());
        out.push_back(std::move(code));
      }
  return out;
}

Letter from_shape_code(const std::vector<int>& code, size_t& pos, int& next) {
  const int c = code[pos++];
  if (c != 0) {
    const int j = next++;
    return c > 0 ? Letter::x(j) : Letter::y(j);
  }
  Letter a = from_shape_code(code, pos, next);
  Letter b = from_shape_code(code, pos, next);
  Letter d = from_shape_code(code, pos, next);
  return make_triple(a, b, d);
}

}  // namespace

std::vector<Letter> letter_shapes(int max_depth, Sign sign) {
  std::vector<Letter> out;
  for (const auto& code : shape_codes(max_depth, sign == Sign::Plus ? 1 : -1)) {
    size_t pos = 0;
    int next = 1;
    out.push_back(from_shape_code(code, pos, next));
  }
  return out;
}

Letter random_letter_shape(int depth, Sign sign, std::mt19937_64& rng) {
  std::function<Letter(int, Sign)> build = [&](int d, Sign s) -> Letter {
    if (d == 0) return s == Sign::Plus ? Letter::x(1) : Letter::y(1);
    const int deep = std::uniform_int_distribution<int>(0, 2)(rng);
    std::array<Letter, 3> parts{Letter::x(1), Letter::x(1), Letter::x(1)};
    for (int i = 0; i < 3; ++i) {
      const int di = i == deep ? d - 1 : std::uniform_int_distribution<int>(0, d - 1)(rng);
      parts[i] = build(di, i == 1 ? opposite(s) : s);
    }
    // siblings reuse symbols until renumbered
    int next = 1;
    Letter a = renumber(parts[0], next);
    Letter b = renumber(parts[1], next);
    Letter c = renumber(parts[2], next);
    return make_triple(a, b, c);
  };
  return fresh(build(depth, sign));
}

bool independence_certificate(const std::vector<PolyQ>& polys) {
  if (polys.empty()) return true;
  const int r = polys[0].vars();
  if (static_cast<int>(polys.size()) > r) return false;
  const std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Rational> point;
    for (int j = 0; j < r; ++j)
      point.emplace_back(attempt == 0 ? j + 1 : primes[j % primes.size()] + 37 * (j / 12));
    MatQ jac(static_cast<Eigen::Index>(polys.size()), r);
    for (size_t i = 0; i < polys.size(); ++i)
      for (int j = 0; j < r; ++j) jac(static_cast<Eigen::Index>(i), j) = polys[i].derivative(j).evaluate(point);
    if (rank<Rational>(jac) == static_cast<Eigen::Index>(polys.size())) return true;
  }
  return false;
}

LaplacianDecomposition laplacian_decomposition(int m, const PolyQ& gamma_lm) {
  LaplacianDecomposition out;
  const int r = gamma_lm.vars();
  out.m = m;
  out.k = m / 2;
  out.generators = std::min(out.k + 1, r);
  const auto s = solve_in_power_sums(gamma_lm, out.generators, 2 * m);
  out.consistent = s.consistent;
  out.unique = s.unique;
  out.representation = s.representation;
  out.remainder = s.representation;
  out.leading = 0;
  if (out.k + 1 <= out.generators) {
    PolyQ::Exponents lin(out.generators, 0);
    lin[out.k] = 1;
    out.leading = s.representation.coefficient(lin);
    out.remainder.add_term(lin, -out.leading);
  }
  out.remainder_in_lower = true;
  for (const auto& [e, c] : out.remainder.terms())
    for (int i = out.k; i < out.generators; ++i)
      if (e[i]) out.remainder_in_lower = false;
  return out;
}

LaplacianDecomposition laplacian_decomposition(int m, const OpRealizer& op, const HarishChandra& hc) {
  return laplacian_decomposition(m, gamma_laplacian(m, op, hc));
}

}  // namespace hlap

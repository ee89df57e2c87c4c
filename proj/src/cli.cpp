#include "hlap/cli.hpp"

#include "hlap/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hlap {

namespace {

class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

int max_index(const Word& w) {
  int m = 0;
  for (const auto& l : w.letters())
    for (const auto& s : l.symbols()) m = std::max(m, s.index);
  return m;
}

Word word_of(const RunConfig& cfg) {
  if (cfg.word.empty()) throw InputError("a word argument is required");
  if (cfg.m) return parse_word(cfg.word, *cfg.m);
  const Word probe = parse_word(cfg.word, 127);
  return parse_word(cfg.word, max_index(probe));
}

int m_of(const RunConfig& cfg) {
  if (!cfg.m) throw InputError("--m is required");
  if (*cfg.m < 1) throw InputError("--m must be at least 1");
  return *cfg.m;
}

Model model_of(const RunConfig& cfg) {
  if (cfg.algebra.empty()) throw InputError("--algebra is required");
  if (std::filesystem::is_regular_file(cfg.algebra)) {
    std::ifstream in(cfg.algebra);
    std::stringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
  }
  return builtin_model(cfg.algebra);
}

void require_cartan(const Model& md) {
  if (md.cartan.rank == 0) throw InputError("algebra '" + md.label + "' has no Cartan basis");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  const Word w = word_of(cfg);
  RewriteTrace trace;
  WordCombination result;
  bool exhausted = false;
  try {
    result = reduce(WordCombination(w), cfg.mode, cfg.trace ? &trace : nullptr, cfg.budget());
  } catch (const BudgetExhausted&) {
    if (!cfg.trace) throw;
    exhausted = true;  // the partial trace is still worth printing
  }
  if (cfg.format == "text") {
    if (!exhausted) out << result << '\n';
    if (cfg.trace)
      for (const auto& s : trace.steps) out << to_string(s.rule) << ' ' << s.position << ": " << s.before << " -> " << s.after << '\n';
  } else if (cfg.trace) {
    Json j{{"result", exhausted ? Json(nullptr) : to_json(result)}, {"trace", to_json(trace)}};
    emit(out, j);
  } else {
    emit(out, to_json(result));
  }
  return exhausted ? kBudgetExhausted : kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Word w = word_of(cfg);
  const Json j = graph_json(w);
  if (cfg.format == "text") {
    for (const char* key : {"irreducible", "factorized", "tree", "cycle", "product"}) out << key << ": " << (j[key].get<bool>() ? "yes" : "no") << '\n';
    out << "components: " << j["components"].get<int>() << '\n';
  } else {
    emit(out, j);
  }
  return kOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const Word w = word_of(cfg);
  if (!cfg.format_given || cfg.format == "dot") {
    out << to_dot(build_graph(w));
  } else if (cfg.format == "json") {
    emit(out, graph_json(w));
  } else {
    const WordGraph g = build_graph(w);
    for (const auto& e : g.edges) out << e.index << ": " << g.labels[e.from] << " -- " << g.labels[e.to] << '\n';
  }
  return kOk;
}

int cmd_coeff(const RunConfig& cfg, std::ostream& out) {
  const int m = m_of(cfg);
  const Rational computed = tree_coefficient(m, cfg.mode, cfg.budget());
  const Rational formula = tree_coefficient_formula(m);
  const bool match = computed == formula;
  if (cfg.format == "text")
    out << "m=" << m << " computed=" << to_string(computed) << " formula=" << to_string(formula) << " match=" << (match ? "true" : "false") << '\n';
  else
    emit(out, Json{{"m", m}, {"computed", to_string(computed)}, {"formula", to_string(formula)}, {"match", match}});
  return match ? kOk : kVerificationFailed;
}

int cmd_realize(const RunConfig& cfg, std::ostream& out) {
  const Model md = model_of(cfg);
  const OpRealizer op(md.algebra);
  const EnvQ e = cfg.word.empty() ? op.realize(laplacian_word(m_of(cfg))) : op.realize(word_of(cfg));
  if (cfg.format == "text") {
    const auto names = e.algebra()->ordered_names();
    bool first = true;
    for (const auto& [mono, c] : e.terms()) {
      out << (first ? "" : " + ") << to_string(c);
      for (auto p : mono) out << '*' << names[p];
      first = false;
    }
    out << (first ? "0\n" : "\n");
  } else {
    emit(out, to_json(e));
  }
  return kOk;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  const Model md = model_of(cfg);
  require_cartan(md);
  const OpRealizer op(md.algebra);
  const HarishChandra hc(md.algebra, md.cartan);
  if (!cfg.word.empty()) {
    const PolyQ g = hc.gamma(reduce_mod_h(op.realize(word_of(cfg)), md.algebra));
    if (cfg.format == "text") out << g.str() << '\n';
    else emit(out, Json{{"algebra", md.label}, {"word", cfg.word}, {"gamma", to_json(g)}});
    return kOk;
  }
  const int m = m_of(cfg);
  const PolyQ g = gamma_laplacian(m, op, hc);
  const LaplacianDecomposition d = laplacian_decomposition(m, g);
  if (cfg.format == "text") {
    out << g.str() << '\n' << "in power sums: " << d.representation.str("t") << '\n';
  } else {
    emit(out, Json{{"algebra", md.label}, {"m", m}, {"c0", to_string(md.cartan.c0)}, {"gamma", to_json(g)}, {"decomposition", to_json(d)}});
  }
  return kOk;
}

std::vector<CheckResult> verify_checks(const Model& md, const Budget& budget) {
  std::vector<CheckResult> out;
  const auto& g = md.algebra;
  const auto& cartan = md.cartan;
  const int r = cartan.rank;
  const Rational c0 = cartan.c0;
  const OpRealizer op(g);
  const HarishChandra hc(g, cartan);
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
    budget.check();
  };

  add("cartan basis", true, "rank " + std::to_string(r) + ", c0 = " + to_string(c0));

  {
    size_t steps = 0, bad = 0;
    auto check_trace = [&](const RewriteTrace& t, size_t limit) {
      for (size_t i = 0; i < t.steps.size() && i < limit; ++i, ++steps)
        if (!oracle_equiv(t.steps[i].before, t.steps[i].after, op)) ++bad;
    };
    for (int m = 1; m <= 2; ++m)
      for (const Word& w : enumerate_words(m, 4)) {
        RewriteTrace t;
        factorize(WordCombination(w), &t, budget);
        check_trace(t, t.steps.size());
      }
    RewriteTrace t3;
    factorize(WordCombination(laplacian_word(3)), &t3, budget);
    check_trace(t3, 60);
    add("rewrite soundness", bad == 0, std::to_string(steps) + " steps, " + std::to_string(bad) + " failures");
  }

  {
    const PolyQ expected = power_sum(2, r) * c0;
    size_t trees = 0, bad = 0;
    for (const Word& w : enumerate_words(3, 4)) {
      if (!is_tree(w) || build_graph(w).edges.size() != 3) continue;
      ++trees;
      if (top_symbol(w, op, cartan) != expected) ++bad;
    }
    add("tree top symbols", bad == 0, std::to_string(trees) + " trees, " + std::to_string(bad) + " mismatches");
  }

  {
    size_t letters = 0, bad = 0;
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (const Letter& l : letter_shapes(2, s)) {
        ++letters;
        if (mu_eval(l, g, cartan) != mu_expected(l.symbol_count(), s, g, cartan)) ++bad;
      }
    add("mu formula", bad == 0, std::to_string(letters) + " letters, " + std::to_string(bad) + " mismatches");
  }

  std::vector<PolyQ> odd;
  const int top = std::max(2, 2 * r - 1);
  for (int m = 1; m <= top; ++m) {
    const PolyQ gm = gamma_laplacian(m, op, hc);
    const std::string lm = "gamma(L" + std::to_string(m) + ")";
    add(lm + " invariant", is_weyl_invariant(gm), "degree " + std::to_string(gm.degree()));
    const LaplacianDecomposition d = laplacian_decomposition(m, gm);
    add(lm + " in power sums", d.consistent && d.unique && d.remainder_in_lower, d.representation.str("t"));
    if (d.k + 1 <= r) {
      const Rational engine = tree_coefficient(m, Mode::RPrime, budget) * c0;
      add(lm + " leading = tree coefficient * c0", d.leading == engine,
          "leading " + to_string(d.leading) + ", expected " + to_string(engine));
      const Rational closed = tree_coefficient_formula(m) * c0;
      add(lm + " leading = closed form * c0", d.leading == closed,
          "leading " + to_string(d.leading) + ", expected " + to_string(closed));
    }
    if (m % 2) odd.push_back(gm);
  }
  odd.resize(std::min<size_t>(odd.size(), r));
  add("independence", independence_certificate(odd), std::to_string(odd.size()) + " generators");
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Model md = model_of(cfg);
  require_cartan(md);
  const auto checks = verify_checks(md, cfg.budget());
  const CheckResult* first_fail = nullptr;
  Json arr = Json::array();
  for (const auto& c : checks) {
    if (!c.passed && !first_fail) first_fail = &c;
    if (cfg.format == "text") out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  if (cfg.format != "text") emit(out, Json{{"algebra", md.label}, {"c0", to_string(md.cartan.c0)}, {"checks", arr}});
  if (first_fail) {
    err << "verification failed: " << first_fail->name << " (" << first_fail->detail << ")\n";
    return kVerificationFailed;
  }
  return kOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Higher Laplacian word rewriting and Harish-Chandra checks", "hlap"};
  app.require_subcommand(1);
  std::string mode = "R";
  int m = 0;
  double budget = 0;

  auto common = [&](CLI::App* sub, bool takes_word, bool takes_algebra) {
    sub->add_option("--m", m, "number of index pairs");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--budget-seconds", budget, "wall-clock budget")->check(CLI::PositiveNumber);
    sub->add_option("--mod", mode, "pruning mode")->check(CLI::IsMember({"R", "Rprime"}));
    if (takes_word) sub->add_option("word", cfg.word, "word text");
    if (takes_algebra) sub->add_option("--algebra", cfg.algebra, "builtin selector or definition file");
  };
  common(app.add_subcommand("reduce", "rewrite a word to factorized words"), true, false);
  app.get_subcommand("reduce")->add_flag("--trace", cfg.trace, "emit the rewrite trace");
  common(app.add_subcommand("classify", "graph properties of a word"), true, false);
  common(app.add_subcommand("graph", "pseudo-graph of a word"), true, false);
  common(app.add_subcommand("coeff", "tree coefficient of L_m"), false, false);
  common(app.add_subcommand("realize", "element of U(g) for a word or L_m"), true, true);
  common(app.add_subcommand("gamma", "Harish-Chandra image of a word or L_m"), true, true);
  common(app.add_subcommand("verify", "run the checks for one algebra"), false, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kInputError;
  }
  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  if (sub->count("--m")) cfg.m = m;
  if (sub->count("--budget-seconds")) cfg.budget_seconds = budget;
  cfg.format_given = sub->count("--format") > 0;
  cfg.mode = mode == "Rprime" ? Mode::RPrime : Mode::R;

  try {
    if (cfg.subcommand == "reduce") return cmd_reduce(cfg, out);
    if (cfg.subcommand == "classify") return cmd_classify(cfg, out);
    if (cfg.subcommand == "graph") return cmd_graph(cfg, out);
    if (cfg.subcommand == "coeff") return cmd_coeff(cfg, out);
    if (cfg.subcommand == "realize") return cmd_realize(cfg, out);
    if (cfg.subcommand == "gamma") return cmd_gamma(cfg, out);
    return cmd_verify(cfg, out, err);
  } catch (const BudgetExhausted& e) {
    err << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const WordError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const AlgebraError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace hlap

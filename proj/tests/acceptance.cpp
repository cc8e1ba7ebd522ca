// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mhopf/antipode.hpp"
#include "mhopf/coproduct.hpp"
#include "mhopf/dual.hpp"
#include "mhopf/enumerate.hpp"
#include "mhopf/error.hpp"
#include "mhopf/forest_text.hpp"
#include "mhopf/matrix.hpp"
#include "mhopf/shuffle.hpp"
#include "mhopf/verify.hpp"

using namespace mhopf;

namespace {

const DecorationRegistry& reg() {
  static const DecorationRegistry r({"x", "y"}, {"a", "b", "c"});
  return r;
}

Forest F(const std::string& s) { return parse_forest(s, reg()); }

struct Term {
  std::string left, right;
  Poly coeff;
};

TensorLinComb tensor_of(const std::vector<Term>& terms) {
  TensorLinComb t;
  for (const auto& [l, r, c] : terms) t.add(ForestPair{F(l), F(r)}, c);
  return t;
}

LinComb comb_of(const std::vector<std::pair<std::string, Poly>>& terms) {
  LinComb a;
  for (const auto& [f, c] : terms) a.add(F(f), c);
  return a;
}

class Criterion {
 public:
  explicit Criterion(std::ostream& details) : details_(details) {}

  template <typename T>
  void equal(const std::string& what, const T& got, const T& want) {
    if (got == want) return;
    ok_ = false;
    details_ << "    " << what << "\n      got:  " << to_string(got) << "\n      want: " << to_string(want) << '\n';
  }

  void expect(const std::string& what, bool cond) {
    if (cond) return;
    ok_ = false;
    details_ << "    " << what << '\n';
  }

  void note(const std::string& what) { details_ << "    note: " << what << '\n'; }

  bool ok() const { return ok_; }

 private:
  std::ostream& details_;
  bool ok_ = true;
};

std::string to_string(std::size_t v) { return std::to_string(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: worked examples.
void criterion1(Criterion& c) {
  const Poly L = Poly::lambda();
  c.equal("Δ(a)", coproduct(F("a")), tensor_of({{"a", "1", 1}, {"1", "a", 1}}));
  c.equal("Δ(a[x])", coproduct(F("a[x]")),
          tensor_of({{"a[x]", "1", 1}, {"a", "x", 1}, {"x", "a", 1}, {"1", "a[x]", 1}, {"a[x]", "x", L},
                     {"x", "a[x]", L}}));
  c.equal("Δ(x a[y])", coproduct(F("x a[y]")),
          tensor_of({{"x a[y]", "1", 1},  {"a[y]", "x", 1},         {"x a", "y", 1},       {"a", "x y", 1},
                     {"x y", "a", 1},     {"y", "x a", 1},          {"x", "a[y]", 1},      {"1", "x a[y]", 1},
                     {"x a[y]", "x", L},  {"x a", "x y", L},        {"a[y]", "x y", L},    {"x a[y]", "y", L},
                     {"x a[y]", "x y", L * L}, {"x y", "x a", L},   {"x", "x a[y]", L},    {"x y", "a[y]", L},
                     {"y", "x a[y]", L},  {"x y", "x a[y]", L * L}}));
  c.equal("Δ(a[x b])", coproduct(F("a[x b]")),
          tensor_of({{"a[x b]", "1", 1}, {"x b", "a", 1}, {"a[b]", "x", 1}, {"b", "a[x]", 1}, {"a[x]", "b", 1},
                     {"x", "a[b]", 1}, {"a", "x b", 1}, {"1", "a[x b]", 1}, {"a[x b]", "x", L},
                     {"x b", "a[x]", L}, {"a[x]", "x b", L}, {"x", "a[x b]", L}}));
  for (const char* f : {"a", "a[x]", "x a[y]", "a[x b]"})
    c.equal(std::string("recursive Δ(") + f + ")", coproduct_recursive(F(f)), coproduct(F(f)));

  const LinComb s1 = comb_of({{"a[y] x", 1}, {"a y x", -1}, {"y a x", -1}});
  const LinComb s2 = comb_of({{"a[x b]", -1}, {"a[x] b", 1}, {"a[b] x", 1}, {"b a[x]", 1}, {"x a[b]", 1},
                              {"x a b", -1}, {"a b x", -1}, {"b x a", -1}, {"b a x", -1}});
  c.equal("S(x a[y]) Takeuchi", antipode_takeuchi(F("x a[y]")), s1);
  c.equal("S(x a[y]) recursive", antipode_recursive(F("x a[y]")), s1);
  c.equal("S(a[x b]) Takeuchi", antipode_takeuchi(F("a[x b]")), s2);
  c.equal("S(a[x b]) recursive", antipode_recursive(F("a[x b]")), s2);

  c.equal("a ⋆ b[c]", star(F("a"), F("b[c]"), reg()),
          comb_of({{"a[b[c]]", 1}, {"a b[c]", 1}, {"b[a[c]]", 1}, {"b[a c]", 1}, {"b[c[a]]", 1}, {"b[c a]", 1},
                   {"b[c] a", 1}}));
  c.equal("x ⋆ b[c]", star(F("x"), F("b[c]"), reg()),
          comb_of({{"x b[c]", 1}, {"b[x c]", 1}, {"b[c[x]]", 1}, {"b[c x]", 1}, {"b[c] x", 1}}));

  // The printed quasi-shuffle display also lists a[x[x]], which puts an X
  // decoration on an internal vertex and so is not a forest of the algebra.
  c.equal("x ⋆_λ a[x]", star_lambda(F("x"), F("a[x]"), reg()),
          comb_of({{"x a[x]", 1}, {"a[x x]", 2}, {"a[x] x", 1}, {"a[x]", L}}));
  bool rejected = false;
  try {
    F("a[x[x]]");
  } catch (const DomainError&) {
    rejected = true;
  }
  c.expect("a[x[x]] must be rejected as a forest", rejected);
  c.note("the printed x ⋆_λ a[x] display contains a[x[x]], an X-decorated internal vertex; it is not an element "
         "of the algebra and every other printed term matches");
}

// 2: matrix codec.
void criterion2(Criterion& c) {
  const std::vector<std::pair<std::string, std::string>> displays{
      {"x", "x =\n"},
      {"a[x]", "a = h\nx 0 =\n"},
      {"a x", "a = r\nx 0 =\n"},
      {"a[x y]", "a = h h\nx 0 = r\ny 0 0 =\n"},
      {"a[b[x]]", "a = h h\nb 0 = h\nx 0 0 =\n"},
      {"a", "a =\n"},
      {"b[c]", "b = h\nc 0 =\n"},
  };
  for (const auto& [f, m] : displays) {
    c.expect("M(" + f + ") printed as\n" + print_matrix(encode(F(f))), print_matrix(encode(F(f))) == m);
    c.expect("decode of the M(" + f + ") display", decode(parse_matrix(m, reg()), reg()) == F(f));
  }
  c.note("M(a x) in the third dual-product example is printed with h; the two roots are r-related, encode emits r");

  const auto t0 = std::chrono::steady_clock::now();
  const DecorationRegistry small({"x"}, {"a", "b"});
  std::size_t n = 0;
  for (const auto& f : enumerate_forests_up_to(5, small)) {
    const ForestMatrix m = encode(f);
    if (!is_representable(m, small) || decode(m, small) != f) c.expect("round trip of " + f.text(), false);
    ++n;
  }
  const double secs = seconds_since(t0);
  c.expect("expected 5548 forests, got " + std::to_string(n), n == 5548);
  c.expect("round trip took " + std::to_string(secs) + " s", secs < 5.0);
}

struct ShuffleCase {
  std::vector<std::size_t> sigma;
  std::vector<std::string> matrices;  // printed completion matrices
  std::vector<std::string> forests;   // printed forest list
};

void fm_example(Criterion& c, const std::string& name, const std::string& f, const std::string& g,
                const std::vector<ShuffleCase>& cases) {
  const Forest ff = F(f), gg = F(g);
  const ForestMatrix a = encode(ff), b = encode(gg);
  std::vector<std::size_t> got_sizes, want_sizes;
  std::size_t total = 0;
  for (const auto& sc : cases) {
    const Shuffle s(a.rows(), b.rows(), sc.sigma);
    const auto set = fm_sigma(a, b, s, reg());
    got_sizes.push_back(set.size());
    want_sizes.push_back(sc.matrices.size());
    total += set.size();

    std::set<std::string> got;
    for (const auto& m : set) got.insert(decode(m, reg()).text());
    std::set<std::string> by_matrix;
    for (const auto& m : sc.matrices) by_matrix.insert(decode(parse_matrix(m, reg()), reg()).text());
    const std::set<std::string> by_list(sc.forests.begin(), sc.forests.end());

    auto show = [](const std::set<std::string>& xs) {
      std::string out;
      for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
      return "{" + out + "}";
    };
    if (got != by_matrix || got != by_list) {
      c.expect(name + " FM" + s.text() + ": computed " + show(got) + "; printed matrices " + show(by_matrix) +
                   "; printed forests " + show(by_list),
               false);
      // Every computed forest, and every printed one, against the subset oracle:
      // N(F,G;H) must equal the number of shuffles whose completion set holds H.
      std::set<std::string> all = got;
      all.insert(by_matrix.begin(), by_matrix.end());
      all.insert(by_list.begin(), by_list.end());
      for (const auto& h : all) {
        std::size_t hits = 0;
        for (const auto& s2 : shuffles(a.rows(), b.rows()))
          for (const auto& m : fm_sigma(a, b, s2, reg()))
            if (decode(m, reg()).text() == h) ++hits;
        const Integer n = n_count(ff, gg, F(h));
        c.note("oracle: N(" + f + ", " + g + "; " + h + ") = " + n.str() + ", shuffles hitting it = " +
               std::to_string(hits) + (got.count(h) ? "" : " (not in computed set)") +
               (by_matrix.count(h) ? "" : " (not among printed matrices)") +
               (by_list.count(h) ? "" : " (not in printed forest list)"));
      }
    }
  }
  auto tuple = [](const std::vector<std::size_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "(" + out + ")";
  };
  c.expect(name + " sizes: computed " + tuple(got_sizes) + ", expected " + tuple(want_sizes), got_sizes == want_sizes);

  // The star product collects the same completions.
  std::size_t star_terms = 0;
  for (const auto& [h, coeff] : star(ff, gg, reg())) star_terms += static_cast<std::size_t>(coeff.coefficient(0));
  c.expect(name + ": star term count " + std::to_string(star_terms) + " differs from sum of completion sets",
           star_terms == total);
}

// 3: completion sets of the three dual-product examples.
void criterion3(Criterion& c) {
  fm_example(c, "a ⋆ b[c]", "a", "b[c]",
             {{{1, 2, 3}, {"a = h h\nb 0 = h\nc 0 0 =", "a = r r\nb 0 = h\nc 0 0 ="}, {"a[b[c]]", "a b[c]"}},
              {{2, 1, 3}, {"b = h h\na 0 = h\nc 0 0 =", "b = h h\na 0 = r\nc 0 0 ="}, {"b[a[c]]", "b[a c]"}},
              {{3, 1, 2},
               {"b = h h\nc 0 = h\na 0 0 =", "b = h h\nc 0 = r\na 0 0 =", "b = h r\nc 0 = r\na 0 0 ="},
               {"b[c[a]]", "b[c a]", "b[c] a"}}});
  // the third shuffle is printed as (311); (312) is the only one left
  fm_example(c, "x ⋆ b[c]", "x", "b[c]",
             {{{1, 2, 3}, {"x = r r\nb 0 = h\nc 0 0 ="}, {"x b[c]"}},
              {{2, 1, 3}, {"b = h h\nx 0 = r\nc 0 0 ="}, {"b[x c]"}},
              {{3, 1, 2},
               {"b = h h\nc 0 = h\nx 0 0 =", "b = h h\nc 0 = r\nx 0 0 =", "b = h r\nc 0 = r\nx 0 0 ="},
               {"b[c[x]]", "b[c x]", "b[c] x"}}});
  // the last set is printed as FM_(); (3412) is the only one left
  fm_example(c, "a x ⋆ b[c]", "a x", "b[c]",
             {{{1, 2, 3, 4}, {"a = r r r\nx 0 = r r\nb 0 0 = h\nc 0 0 0 ="}, {"a x b[c]"}},
              {{1, 3, 2, 4}, {"a = r r r\nb 0 = h h\nx 0 0 = r\nc 0 0 0 ="}, {"a b[x c]"}},
              {{1, 4, 2, 3},
               {"a = h h r\nb 0 = h r\nc 0 0 = r\nx 0 0 0 =", "a = r r r\nb 0 = h r\nc 0 0 = r\nx 0 0 0 =",
                "a = r r r\nb 0 = h h\nc 0 0 = r\nx 0 0 0 =", "a = r r r\nb 0 = h h\nc 0 0 = h\nx 0 0 0 ="},
               {"a[b[c]] x", "a b[c] x", "a b[c x]", "a b[c[x]]"}},
              {{2, 3, 1, 4}, {"b = h h h\na 0 = r r\nx 0 0 = r\nc 0 0 0 ="}, {"b[a x c]"}},
              {{2, 4, 1, 3},
               {"b = h h r\na 0 = h r\nc 0 0 = r\nx 0 0 0 =", "b = h h h\na 0 = h r\nc 0 0 = r\nx 0 0 0 =",
                "b = h h r\na 0 = r r\nc 0 0 = r\nx 0 0 0 =", "b = h h h\na 0 = r r\nc 0 0 = r\nx 0 0 0 ="},
               {"b[a[c]] x", "b[a c[x]]", "b[a[c] x]", "b[a c x]"}},
              {{3, 4, 1, 2},
               {"b = h h h\nc 0 = h h\na 0 0 = r\nx 0 0 0 =", "b = h h h\nc 0 = r r\na 0 0 = r\nx 0 0 0 =",
                "b = h h r\nc 0 = r r\na 0 0 = r\nx 0 0 0 =", "b = h r r\nc 0 = r r\na 0 0 = r\nx 0 0 0 =",
                "b = h h h\nc 0 = h r\na 0 0 = r\nx 0 0 0 =", "b = h h r\nc 0 = h r\na 0 0 = r\nx 0 0 0 ="},
               {"b[c[a x]]", "b[c a x]", "b[c a] x", "b[c] a x", "b[c[a] x]", "b[c[a]] x"}}});
}

// 4: the conformance suite.
void criterion4(Criterion& c) {
  SuiteConfig cfg;
  cfg.registry = DecorationRegistry({"x"}, {"a", "b"});
  cfg.max_weight = 4;
  cfg.checks = all_checks();
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_suite(cfg);
  const double secs = seconds_since(t0);
  for (const auto& r : reports) {
    std::ostringstream line;
    line << r.check << ": " << r.instances << " instances";
    if (!r.passed()) line << ", first failure at " << r.failures.front().input;
    c.expect(line.str(), r.passed());
  }
  c.expect("suite took " + std::to_string(secs) + " s", secs < 60.0);
  c.note("suite runtime " + std::to_string(secs) + " s");
}

// 5: counting and the group-like element.
void criterion5(Criterion& c) {
  const DecorationRegistry plain({}, {"a"});
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42};
  // independent recurrence C_{n+1} = sum C_i C_{n-i}
  std::vector<std::size_t> rec{1};
  for (std::size_t n = 0; n < 5; ++n) {
    std::size_t v = 0;
    for (std::size_t i = 0; i <= n; ++i) v += rec[i] * rec[n - i];
    rec.push_back(v);
  }
  c.expect("Catalan recurrence", rec == catalan);
  for (std::size_t n = 0; n <= 5; ++n)
    c.expect("weight " + std::to_string(n) + " count", enumerate_forests(n, plain).size() == catalan[n]);

  LinComb g = unit();
  g.add(F("x"), Poly::lambda());
  c.equal("Δ(1+λx)", coproduct(g), tensor(g, g));
}

// Smallest max_weight at which some check fails, or 0 if none up to 4.
std::size_t first_failing_weight(const HopfOps& ops) {
  for (std::size_t w = 1; w <= 4; ++w) {
    SuiteConfig cfg;
    cfg.registry = DecorationRegistry({"x"}, {"a", "b"});
    cfg.max_weight = w;
    cfg.checks = all_checks();
    cfg.ops = ops;
    cfg.rota_baxter_weight = w;
    cfg.phi_weight = w;
    cfg.duality_factor_weight = w / 2;
    for (const auto& r : run_suite(cfg))
      if (!r.passed()) return w;
  }
  return 0;
}

// 6: mutations must be caught at weight <= 3.
void criterion6(Criterion& c) {
  struct Mutation {
    std::string name;
    HopfOps ops;
  };
  std::vector<Mutation> mutations;

  HopfOps sign;
  sign.antipode = [](const Forest& f) {
    const LinComb s = antipode_takeuchi(f);
    return f.weight() == 2 ? -s : s;
  };
  mutations.push_back({"antipode sign flipped at weight 2", sign});

  HopfOps one_term;
  one_term.antipode = [](const Forest& f) {
    LinComb s = antipode_takeuchi(f);
    if (f.weight() == 3 && !s.is_zero()) s.add(s.begin()->first, -s.begin()->second * 2);
    return s;
  };
  mutations.push_back({"antipode: one term sign flipped at weight 3", one_term});

  HopfOps drop_lambda;
  drop_lambda.coproduct = [](const Forest& f, const Poly& l) {
    TensorLinComb t = coproduct(f, l);
    if (f.weight() == 1 && f.vertex(0).decoration.is_x()) t.add(ForestPair{f, f}, -l);
    return t;
  };
  mutations.push_back({"coproduct: λ x⊗x dropped", drop_lambda});

  HopfOps drop_first;
  drop_first.coproduct = [](const Forest& f, const Poly& l) {
    TensorLinComb t = coproduct(f, l);
    if (f.weight() == 2) t.add(t.begin()->first, -t.begin()->second);
    return t;
  };
  mutations.push_back({"coproduct: first term dropped at weight 2", drop_first});

  for (const auto& m : mutations) {
    const std::size_t w = first_failing_weight(m.ops);
    c.expect(m.name + ": " + (w ? "first caught at weight " + std::to_string(w) : "never caught"), w != 0 && w <= 3);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"worked examples (coproducts, antipodes, dual products)", criterion1},
      {"matrix codec", criterion2},
      {"completion set sizes of the dual-product examples", criterion3},
      {"property suites", criterion4},
      {"counting sanity and group-like element", criterion5},
      {"mutation sensitivity", criterion6},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream details;
    Criterion c(details);
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(std::string("exception: ") + e.what(), false);
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << '\n'
              << details.str();
    if (!c.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}

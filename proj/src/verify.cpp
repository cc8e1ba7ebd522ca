#include "mhopf/verify.hpp"

#include <algorithm>
#include <map>

#include "mhopf/dual.hpp"
#include "mhopf/enumerate.hpp"
#include "mhopf/error.hpp"
#include "mhopf/morphism.hpp"

namespace mhopf {

namespace {

constexpr std::size_t weight_guard = 6;

class Reporter {
 public:
  Reporter(std::string name, const SuiteConfig& cfg) : cap_(cfg.max_failures) { report_.check = std::move(name); }

  template <typename T>
  void expect_equal(const std::string& input, const T& lhs, const T& rhs) {
    ++report_.instances;
    if (lhs == rhs) return;
    record(input, to_string(lhs), to_string(rhs));
  }

  void expect(const std::string& input, bool ok, const std::string& lhs, const std::string& rhs) {
    ++report_.instances;
    if (!ok) record(input, lhs, rhs);
  }

  CheckReport done() { return std::move(report_); }

 private:
  void record(const std::string& input, std::string lhs, std::string rhs) {
    if (report_.failures.size() < cap_) report_.failures.push_back({input, std::move(lhs), std::move(rhs)});
  }

  std::size_t cap_;
  CheckReport report_;
};

std::string poly_text(const Poly& p) { return p.to_string(); }

std::string at_lambda(const Poly& l) { return l == Poly::lambda() ? "" : ", λ=" + l.to_string(); }

std::vector<Forest> forests(const SuiteConfig& cfg, std::size_t max) {
  return enumerate_forests_up_to(max, cfg.registry);
}

// Ordered pairs with total weight <= total, by ascending total weight.
std::vector<std::pair<Forest, Forest>> pairs_up_to(const SuiteConfig& cfg, std::size_t total) {
  std::vector<std::vector<Forest>> by_weight;
  for (std::size_t w = 0; w <= total; ++w) by_weight.push_back(enumerate_forests(w, cfg.registry));
  std::vector<std::pair<Forest, Forest>> out;
  for (std::size_t t = 0; t <= total; ++t)
    for (std::size_t w = 0; w <= t; ++w)
      for (const auto& f : by_weight[w])
        for (const auto& g : by_weight[t - w]) out.emplace_back(f, g);
  return out;
}

void require_lambda_zero(const SuiteConfig& cfg) {
  const auto& m = cfg.lambda_mode;
  const bool zero = !m.symbolic && !m.values.empty() &&
                    std::all_of(m.values.begin(), m.values.end(), [](long long v) { return v == 0; });
  if (!zero) throw DomainError("Hopf checks require λ=0");
}

// Memoizes a basis-level antipode.
class AntipodeMemo {
 public:
  explicit AntipodeMemo(const AntipodeFn& fn) : fn_(fn) {}
  const LinComb& operator()(const Forest& f) {
    auto it = memo_.find(f);
    if (it == memo_.end()) it = memo_.emplace(f, fn_(f)).first;
    return it->second;
  }
  LinComb apply(const LinComb& a) {
    LinComb out;
    for (const auto& [f, c] : a) out += c * (*this)(f);
    return out;
  }

 private:
  const AntipodeFn& fn_;
  std::map<Forest, LinComb> memo_;
};

SuiteConfig at_lambda_zero(const SuiteConfig& cfg) {
  SuiteConfig z = cfg;
  z.lambda_mode = LambdaMode::specialized({0});
  return z;
}

bool is_hopf_check(const std::string& name) {
  return name == "antipode" || name == "s_squared" || name == "takeuchi_vs_recursive" || name == "rota_baxter";
}

}  // namespace

std::vector<Poly> LambdaMode::points() const {
  if (symbolic) return {Poly::lambda()};
  std::vector<Poly> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{
      "cocycle",  "coassoc",   "counit",    "mult_compat",           "cocommutative", "coideal",
      "coproduct_routes", "grading", "grouplike", "antipode", "s_squared", "takeuchi_vs_recursive",
      "rota_baxter", "duality", "phi"};
  return names;
}

void SuiteConfig::validate() const {
  if (max_weight > weight_guard)
    throw DomainError("max_weight " + std::to_string(max_weight) + " exceeds the guard of " +
                      std::to_string(weight_guard));
  for (const auto& c : checks)
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw DomainError("unknown check '" + c + "'");
  if (!lambda_mode.symbolic && lambda_mode.values.empty()) throw DomainError("no λ specializations given");
}

CheckReport check_cocycle(const SuiteConfig& cfg) {
  Reporter rep("cocycle", cfg);
  const auto& delta = cfg.ops.coproduct;
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& f : forests(cfg, cfg.max_weight))
      for (const auto& omega : cfg.registry.omega_decorations()) {
        const Tree t = graft(omega, f);
        rep.expect_equal("B+_" + std::string(omega.name()) + "(" + f.text() + ")" + at_lambda(lambda),
                         delta(t.as_forest(), lambda), graft_tensor(omega, delta(f, lambda)));
      }
  return rep.done();
}

CheckReport check_coassoc(const SuiteConfig& cfg) {
  Reporter rep("coassoc", cfg);
  const auto& delta = cfg.ops.coproduct;
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& f : forests(cfg, cfg.max_weight)) {
      const TensorLinComb d = delta(f, lambda);
      rep.expect_equal(f.text() + at_lambda(lambda), coproduct_left(delta, d, lambda),
                       coproduct_right(delta, d, lambda));
    }
  return rep.done();
}

CheckReport check_counit(const SuiteConfig& cfg) {
  Reporter rep("counit", cfg);
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& f : forests(cfg, cfg.max_weight)) {
      const TensorLinComb d = cfg.ops.coproduct(f, lambda);
      const LinComb id(f);
      rep.expect_equal("(ε⊗id) " + f.text() + at_lambda(lambda), apply_counit_left(d), id);
      rep.expect_equal("(id⊗ε) " + f.text() + at_lambda(lambda), apply_counit_right(d), id);
    }
  return rep.done();
}

CheckReport check_mult_compat(const SuiteConfig& cfg) {
  Reporter rep("mult_compat", cfg);
  const auto& delta = cfg.ops.coproduct;
  for (const auto& lambda : cfg.lambda_mode.points()) {
    std::map<Forest, TensorLinComb> memo;
    auto d = [&](const Forest& f) -> const TensorLinComb& {
      auto it = memo.find(f);
      if (it == memo.end()) it = memo.emplace(f, delta(f, lambda)).first;
      return it->second;
    };
    for (const auto& [f, g] : pairs_up_to(cfg, cfg.max_weight + 1))
      rep.expect_equal("(" + f.text() + ")·(" + g.text() + ")" + at_lambda(lambda), d(f * g), d(f) * d(g));
  }
  return rep.done();
}

CheckReport check_cocommutative(const SuiteConfig& cfg) {
  Reporter rep("cocommutative", cfg);
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& f : forests(cfg, cfg.max_weight)) {
      const TensorLinComb d = cfg.ops.coproduct(f, lambda);
      rep.expect_equal(f.text() + at_lambda(lambda), flip(d), d);
    }
  return rep.done();
}

CheckReport check_coideal(const SuiteConfig& cfg) {
  Reporter rep("coideal", cfg);
  auto in_image = [](const Forest& f, const Decoration& omega) {
    return f.breadth() == 1 && f.vertex(0).decoration == omega;
  };
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& f : forests(cfg, cfg.max_weight))
      for (const auto& omega : cfg.registry.omega_decorations()) {
        const Forest b = graft(omega, f).as_forest();
        const std::string input = "B+_" + std::string(omega.name()) + "(" + f.text() + ")" + at_lambda(lambda);
        rep.expect_equal("ε " + input, counit(LinComb(b)), Poly{});
        TensorLinComb stray;
        for (const auto& [p, c] : cfg.ops.coproduct(b, lambda))
          if (!in_image(p.first, omega) && !in_image(p.second, omega)) stray.add(p, c);
        rep.expect_equal("Δ " + input + " outside B+⊗H + H⊗B+", stray, TensorLinComb{});
      }
  return rep.done();
}

CheckReport check_coproduct_routes(const SuiteConfig& cfg) {
  Reporter rep("coproduct_routes", cfg);
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& f : forests(cfg, cfg.max_weight))
      rep.expect_equal(f.text() + at_lambda(lambda), cfg.ops.coproduct(f, lambda), coproduct_recursive(f, lambda));
  return rep.done();
}

CheckReport check_grading(const SuiteConfig& cfg) {
  Reporter rep("grading", cfg);
  for (const auto& f : forests(cfg, cfg.max_weight))
    for (const auto& [p, c] : cfg.ops.coproduct(f, Poly{}))
      rep.expect(f.text() + " term " + p.first.text() + "⊗" + p.second.text(),
                 p.first.weight() + p.second.weight() == f.weight(), std::to_string(p.first.weight() + p.second.weight()),
                 std::to_string(f.weight()));
  return rep.done();
}

CheckReport check_grouplike(const SuiteConfig& cfg) {
  Reporter rep("grouplike", cfg);
  for (const auto& lambda : cfg.lambda_mode.points())
    for (const auto& x : cfg.registry.x_decorations()) {
      LinComb g = unit();
      g.add(make_leaf(x), lambda);
      rep.expect_equal("1+λ" + std::string(x.name()) + at_lambda(lambda),
                       apply_coproduct(cfg.ops.coproduct, g, lambda), tensor(g, g));
    }
  return rep.done();
}

CheckReport check_antipode(const SuiteConfig& cfg) {
  require_lambda_zero(cfg);
  Reporter rep("antipode", cfg);
  AntipodeMemo s(cfg.ops.antipode);
  auto ident = [](const Forest& f) { return LinComb(f); };
  for (const auto& f : forests(cfg, cfg.max_weight)) {
    const TensorLinComb d = cfg.ops.coproduct(f, Poly{});
    const LinComb expected = counit(LinComb(f)) * unit();
    rep.expect_equal("m(S⊗id)Δ " + f.text(), multiply(apply_tensor(d, [&](const Forest& g) { return s(g); }, ident)),
                     expected);
    rep.expect_equal("m(id⊗S)Δ " + f.text(), multiply(apply_tensor(d, ident, [&](const Forest& g) { return s(g); })),
                     expected);
  }
  return rep.done();
}

CheckReport check_s_squared(const SuiteConfig& cfg) {
  require_lambda_zero(cfg);
  Reporter rep("s_squared", cfg);
  AntipodeMemo s(cfg.ops.antipode);
  for (const auto& f : forests(cfg, cfg.max_weight)) rep.expect_equal("S(S(" + f.text() + "))", s.apply(s(f)), LinComb(f));
  return rep.done();
}

CheckReport check_takeuchi_vs_recursive(const SuiteConfig& cfg) {
  require_lambda_zero(cfg);
  Reporter rep("takeuchi_vs_recursive", cfg);
  for (const auto& f : forests(cfg, cfg.max_weight)) rep.expect_equal(f.text(), cfg.ops.antipode(f), cfg.ops.antipode_alt(f));
  return rep.done();
}

CheckReport check_rota_baxter(const SuiteConfig& cfg) {
  require_lambda_zero(cfg);
  Reporter rep("rota_baxter", cfg);
  const std::size_t w = cfg.rota_baxter_weight.value_or(cfg.max_weight > 0 ? cfg.max_weight - 1 : 0);
  const auto& delta = cfg.ops.coproduct;
  AntipodeMemo s(cfg.ops.antipode);
  const std::vector<Forest> fs = forests(cfg, w);

  // With B = S: B(a)B(b) = B(sum a1 B(a2) b S(B(a3))). The a-dependent part
  // sum a1 S(a2) (x) S(S(a3)) is collected once per a.
  std::map<Forest, TensorLinComb> outer;
  for (const auto& a : fs) {
    TensorLinComb acc;
    for (const auto& [t, c] : coproduct_left(delta, delta(a, Poly{}), Poly{})) {
      const LinComb left = LinComb(t[0]) * s(t[1]);
      const LinComb right = s.apply(s(t[2]));
      acc += c * tensor(left, right);
    }
    outer.emplace(a, std::move(acc));
  }
  for (std::size_t total = 0; total <= 2 * w; ++total)
    for (const auto& a : fs)
      for (const auto& b : fs) {
        if (a.weight() + b.weight() != total) continue;
        const LinComb lhs = s(a) * s(b);
        LinComb inner;
        for (const auto& [p, c] : outer.at(a)) inner.add(p.first * b * p.second, c);
        rep.expect_equal("a=" + a.text() + ", b=" + b.text(), lhs, s.apply(inner));
      }
  return rep.done();
}

CheckReport check_duality(const SuiteConfig& cfg) {
  Reporter rep("duality", cfg);
  const std::size_t fw = cfg.duality_factor_weight.value_or(cfg.max_weight / 2);
  const std::size_t hw = cfg.duality_total_weight.value_or(cfg.max_weight);
  const std::vector<Forest> factors = forests(cfg, fw);
  const std::vector<Forest> targets = forests(cfg, hw);
  const auto lambdas = cfg.lambda_mode.points();

  std::map<Forest, TensorLinComb> delta0;
  std::vector<std::map<Forest, TensorLinComb>> delta_l(lambdas.size());
  for (const auto& h : targets) {
    delta0.emplace(h, cfg.ops.coproduct(h, Poly{}));
    for (std::size_t i = 0; i < lambdas.size(); ++i) delta_l[i].emplace(h, cfg.ops.coproduct(h, lambdas[i]));
  }

  for (const auto& [f, g] : pairs_up_to(cfg, 2 * fw)) {
    if (f.weight() > fw || g.weight() > fw) continue;
    const LinComb st = star(f, g, cfg.registry);
    std::vector<LinComb> stl;
    for (const auto& l : lambdas) stl.push_back(star_lambda(f, g, cfg.registry, l));
    const ForestPair fg{f, g};
    for (const auto& h : targets) {
      const std::string input = "F=" + f.text() + ", G=" + g.text() + ", H=" + h.text();
      const Poly by_star = st.coefficient(h);
      const Poly by_count(n_count(f, g, h));
      const Poly by_delta = delta0.at(h).coefficient(fg);
      rep.expect(input, by_star == by_count && by_count == by_delta,
                 "<F⋆G,H>=" + poly_text(by_star) + ", N=" + poly_text(by_count),
                 "<F⊗G,ΔH>=" + poly_text(by_delta));
      for (std::size_t i = 0; i < lambdas.size(); ++i)
        rep.expect_equal(input + " ⋆_λ" + at_lambda(lambdas[i]), stl[i].coefficient(h),
                         delta_l[i].at(h).coefficient(fg));
    }
  }
  return rep.done();
}

CheckReport check_phi(const SuiteConfig& cfg) {
  Reporter rep("phi", cfg);
  const std::size_t w = cfg.phi_weight.value_or(cfg.max_weight > 0 ? cfg.max_weight - 1 : 0);
  const std::vector<long long> points = cfg.lambda_mode.symbolic ? cfg.phi_points : cfg.lambda_mode.values;
  const auto& delta = cfg.ops.coproduct;
  const std::vector<Forest> fs = forests(cfg, w);
  for (auto l : points) {
    const Poly lp(l);
    for (auto m : points) {
      const Poly mp(m);
      for (const auto& f : fs) {
        const TensorLinComb lhs = apply_coproduct(delta, phi_lambda(LinComb(f), lp), lp * mp);
        const TensorLinComb rhs = phi_lambda(delta(f, mp), lp);
        rep.expect_equal(f.text() + ", λ=" + std::to_string(l) + ", μ=" + std::to_string(m), lhs, rhs);
      }
    }
    for (const auto& [f, g] : pairs_up_to(cfg, w))
      rep.expect_equal("φ(" + f.text() + " · " + g.text() + "), λ=" + std::to_string(l),
                       phi_lambda(LinComb(f * g), lp), phi_lambda(LinComb(f), lp) * phi_lambda(LinComb(g), lp));
  }
  return rep.done();
}

CheckReport run_check(const std::string& name, const SuiteConfig& cfg) {
  using Fn = CheckReport (*)(const SuiteConfig&);
  static const std::map<std::string, Fn> table{
      {"cocycle", check_cocycle},
      {"coassoc", check_coassoc},
      {"counit", check_counit},
      {"mult_compat", check_mult_compat},
      {"cocommutative", check_cocommutative},
      {"coideal", check_coideal},
      {"coproduct_routes", check_coproduct_routes},
      {"grading", check_grading},
      {"grouplike", check_grouplike},
      {"antipode", check_antipode},
      {"s_squared", check_s_squared},
      {"takeuchi_vs_recursive", check_takeuchi_vs_recursive},
      {"rota_baxter", check_rota_baxter},
      {"duality", check_duality},
      {"phi", check_phi},
  };
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown check '" + name + "'");
  return it->second(cfg);
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const SuiteConfig zero = at_lambda_zero(cfg);
  std::vector<CheckReport> out;
  for (const auto& name : cfg.checks) out.push_back(run_check(name, is_hopf_check(name) ? zero : cfg));
  return out;
}

}  // namespace mhopf

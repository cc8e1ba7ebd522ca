#include <doctest.h>

#include "helpers.hpp"
#include "mhopf/antipode.hpp"
#include "mhopf/coproduct.hpp"
#include "mhopf/dual.hpp"
#include "mhopf/enumerate.hpp"
#include "mhopf/error.hpp"
#include "mhopf/morphism.hpp"

using namespace mhopf;
using testing::F;
using testing::L;
using testing::P;
using testing::reg;

namespace {

const Poly lam = Poly::lambda();

TensorLinComb T(std::initializer_list<std::pair<ForestPair, Poly>> terms) {
  TensorLinComb t;
  for (const auto& [p, c] : terms) t.add(p, c);
  return t;
}

LinComb C(std::initializer_list<std::pair<const char*, Poly>> terms) {
  LinComb a;
  for (const auto& [f, c] : terms) a.add(F(f), c);
  return a;
}

}  // namespace

TEST_CASE("product") {
  CHECK(unit() * L("a") == L("a"));
  CHECK(L("a") * L("x") == L("a x"));
  LinComb f = (Poly(2) + lam) * L("a");
  LinComb g = Poly(3) * L("b[x]");
  CHECK(f * g == (Poly(6) + Poly(3) * lam) * L("a b[x]"));
  CHECK((L("a") + L("x")) * (L("a") - L("x")) == C({{"a a", 1}, {"x a", 1}, {"a x", -1}, {"x x", -1}}));
}

TEST_CASE("coproduct of small forests") {
  CHECK(coproduct(F("a")) == T({{P("a", "1"), 1}, {P("1", "a"), 1}}));
  CHECK(coproduct(F("a[x]")) == T({{P("a[x]", "1"), 1},
                                   {P("a", "x"), 1},
                                   {P("x", "a"), 1},
                                   {P("1", "a[x]"), 1},
                                   {P("a[x]", "x"), lam},
                                   {P("x", "a[x]"), lam}}));
  CHECK(coproduct(Forest{}) == T({{P("1", "1"), 1}}));
  CHECK(coproduct(F("x")) == T({{P("x", "1"), 1}, {P("1", "x"), 1}, {P("x", "x"), lam}}));
  // lambda specialised
  CHECK(coproduct(F("a[x]"), Poly(0)).size() == 4);
  CHECK(coproduct(F("a[x]"), Poly(2)).coefficient(P("a[x]", "x")) == Poly(2));
}

TEST_CASE("both coproduct routes agree to weight 4") {
  for (const auto& f : enumerate_forests_up_to(4, testing::small())) {
    CHECK(coproduct(f) == coproduct_recursive(f));
    CHECK(coproduct(f, Poly(3)) == coproduct_recursive(f, Poly(3)));
  }
  CHECK(coproduct_recursive(F("b[a x]")) == graft_tensor(reg().lookup("b"), coproduct_recursive(F("a x"))));
}

TEST_CASE("coproduct term count") {
  // 2 choices per Omega vertex, 3 per X vertex at symbolic lambda
  const Forest f = F("a[x b[y]] z");
  std::size_t terms = 0;
  for (const auto& [p, c] : coproduct(f)) {
    const auto count = c.coefficients().begin()->second;
    terms += static_cast<std::size_t>(count);
  }
  CHECK(terms == 2 * 2 * 3 * 3 * 3);
}

TEST_CASE("counit") {
  CHECK(counit(unit()) == Poly(1));
  CHECK(counit(L("x")) == Poly{});
  CHECK(counit(Poly(3) * unit() + Poly(2) * L("x")) == Poly(3));
  const TensorLinComb d = coproduct(F("x a[y]"));
  CHECK(apply_counit_left(d) == L("x a[y]"));
  CHECK(apply_counit_right(d) == L("x a[y]"));
}

TEST_CASE("reduced coproduct") {
  CHECK(reduced_coproduct(F("a")).is_zero());
  CHECK(reduced_coproduct(Forest{}).is_zero());
  CHECK(reduced_coproduct(F("a[x]")) == T({{P("a", "x"), 1}, {P("x", "a"), 1}}));
  for (const auto& f : enumerate_forests_up_to(4, testing::small())) {
    const TensorLinComb r = reduced_coproduct(f);
    auto red = [](const Forest& g, const Poly&) { return reduced_coproduct(g); };
    CHECK(coproduct_left(red, r, Poly{}) == coproduct_right(red, r, Poly{}));
  }
}

TEST_CASE("antipode examples") {
  CHECK(antipode_takeuchi(Forest{}) == unit());
  CHECK(antipode_recursive(F("a")) == -L("a"));
  CHECK(antipode_takeuchi(F("x a[y]")) == C({{"a[y] x", 1}, {"a y x", -1}, {"y a x", -1}}));
  CHECK(antipode_takeuchi(F("a[x b]")) == C({{"a[x b]", -1},
                                             {"a[x] b", 1},
                                             {"a[b] x", 1},
                                             {"b a[x]", 1},
                                             {"x a[b]", 1},
                                             {"x a b", -1},
                                             {"a b x", -1},
                                             {"b x a", -1},
                                             {"b a x", -1}}));
  CHECK_THROWS_WITH_AS(antipode_takeuchi(F("a"), lam), "antipode requires λ=0", DomainError);
  CHECK_THROWS_AS(antipode_recursive(F("a"), Poly(1)), DomainError);
}

TEST_CASE("antipode routes agree and satisfy the axiom to weight 4") {
  AntipodeCache cache;
  for (const auto& f : enumerate_forests_up_to(4, testing::small())) {
    const LinComb s = antipode_takeuchi(f);
    CHECK(s == antipode_recursive(f));
    CHECK(s == cache(f));
    const TensorLinComb d = coproduct(f, Poly{});
    const LinComb lhs = multiply(apply_tensor(
        d, [](const Forest& g) { return antipode_takeuchi(g); }, [](const Forest& g) { return LinComb(g); }));
    CHECK(lhs == counit(LinComb(f)) * unit());
  }
}

TEST_CASE("dual products") {
  CHECK(star(F("a"), F("b[c]"), reg()) ==
        C({{"a[b[c]]", 1}, {"a b[c]", 1}, {"b[a[c]]", 1}, {"b[a c]", 1}, {"b[c[a]]", 1}, {"b[c a]", 1}, {"b[c] a", 1}}));
  CHECK(star(F("x"), F("b[c]"), reg()) ==
        C({{"x b[c]", 1}, {"b[x c]", 1}, {"b[c[x]]", 1}, {"b[c x]", 1}, {"b[c] x", 1}}));
  CHECK(star(Forest{}, F("a[x]"), reg()) == L("a[x]"));
  CHECK(star_lambda(F("x"), F("a[x]"), reg()) ==
        C({{"x a[x]", 1}, {"a[x x]", 2}, {"a[x] x", 1}, {"a[x]", lam}}));
  for (const auto& f : enumerate_forests_up_to(2, testing::small()))
    for (const auto& g : enumerate_forests_up_to(2, testing::small()))
      CHECK(star_lambda(f, g, testing::small(), Poly{}) == star(f, g, testing::small()));
}

TEST_CASE("pairing") {
  CHECK(pairing(L("a[x]"), L("a[x]")) == Poly(1));
  CHECK(pairing(L("a[x]"), L("x a")) == Poly{});
  CHECK(pairing(Poly(2) * L("a") + L("b"), L("a")) == Poly(2));
  CHECK(pairing2(TensorLinComb(P("a", "x")), coproduct(F("a[x]"))) == Poly(1));
}

TEST_CASE("n_count") {
  CHECK(n_count(F("a"), F("b[c]"), F("a[b[c]]")) == 1);
  CHECK(n_count(F("a"), F("b[c]"), F("a[b]")) == 0);
  CHECK(n_count(Forest{}, F("a[x]"), F("a[x]")) == 1);
  CHECK(n_count(F("x"), F("x"), F("x x")) == 2);
}

TEST_CASE("phi") {
  CHECK(phi_lambda(L("x"), lam) == lam * L("x"));
  CHECK(phi_lambda(L("a"), lam) == L("a"));
  CHECK(phi_lambda(L("x a[y]"), lam) == lam * lam * L("x a[y]"));
  CHECK(phi_lambda(L("x a[y]"), Poly(0)).is_zero());
}

TEST_CASE("group-like element") {
  LinComb g = unit();
  g.add(F("x"), lam);
  CHECK(coproduct(g) == tensor(g, g));
}

TEST_CASE("evaluation") {
  CHECK(evaluate(F("x a[y b]"), identity_interpretation(reg())) == L("x a[y b]"));
  CHECK(evaluate(Forest{}, identity_interpretation(reg())) == unit());

  Interpretation<long long> count;
  count.unit = 1;
  count.product = [](long long p, long long q) { return p * q; };
  count.leaf_map.emplace("x", 1);
  count.operator_map.emplace("a", [](long long v) { return v + 1; });
  CHECK(evaluate(F("a[x x]"), count) == 2);
  CHECK(evaluate(F("a"), count) == 2);
  CHECK_THROWS_AS(evaluate(F("b"), count), DomainError);
  count.operator_map.emplace("b", [](long long v) { return 2 * v; });

  Interpretation<long long> sum_leaves;
  sum_leaves.unit = 0;
  sum_leaves.product = [](long long p, long long q) { return p + q; };
  sum_leaves.leaf_map.emplace("x", 1);
  sum_leaves.operator_map.emplace("a", [](long long v) { return 10 * v; });
  sum_leaves.operator_map.emplace("b", [](long long v) { return v + 3; });
  const auto fs = enumerate_forests_up_to(3, testing::small());
  for (const auto& f : fs)
    for (const auto& g : fs) {
      CHECK(evaluate(f * g, count) == evaluate(f, count) * evaluate(g, count));
      CHECK(evaluate(f * g, sum_leaves) == evaluate(f, sum_leaves) + evaluate(g, sum_leaves));
    }
}

TEST_CASE("text rendering") {
  CHECK(to_string(coproduct(F("a"))) == "a⊗1 + 1⊗a");
  CHECK(to_string(coproduct(F("a")), "(x)") == "a(x)1 + 1(x)a");
  CHECK(to_string(LinComb{}) == "0");
  CHECK(to_string(C({{"a", Poly(1) + lam * 2}, {"b", -1}})) == "(1+2L) a - b");
}

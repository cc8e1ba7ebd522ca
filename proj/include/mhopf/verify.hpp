#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/antipode.hpp"
#include "mhopf/coproduct.hpp"
#include "mhopf/decoration.hpp"

namespace mhopf {

struct Failure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check;
  std::size_t instances = 0;
  std::vector<Failure> failures;  // in driver order, smallest weight first

  bool passed() const noexcept { return failures.empty(); }
};

struct LambdaMode {
  bool symbolic = true;
  std::vector<long long> values;  // used when !symbolic

  static LambdaMode symbolic_mode() { return {}; }
  static LambdaMode specialized(std::vector<long long> v) { return {false, std::move(v)}; }
  // The values substituted for lambda: {L} or the integers.
  std::vector<Poly> points() const;
};

// The maps under test. Replaceable so that deliberately broken versions can
// be shown to fail.
struct HopfOps {
  CoproductFn coproduct = default_coproduct();
  AntipodeFn antipode = [](const Forest& f) { return antipode_takeuchi(f); };
  AntipodeFn antipode_alt = [](const Forest& f) { return antipode_recursive(f); };
};

struct SuiteConfig {
  DecorationRegistry registry{{"x"}, {"a", "b"}};
  std::size_t max_weight = 4;
  LambdaMode lambda_mode;
  std::vector<std::string> checks;
  HopfOps ops;

  // Unset bounds follow max_weight: Rota-Baxter max-1 per factor, duality
  // factors max/2 against H up to max, phi max-1.
  std::optional<std::size_t> rota_baxter_weight;
  std::optional<std::size_t> duality_factor_weight;
  std::optional<std::size_t> duality_total_weight;
  std::optional<std::size_t> phi_weight;
  std::vector<long long> phi_points{0, 1, 2, 3};
  std::size_t max_failures = 10;

  // Throws DomainError if max_weight exceeds 6 or a check name is unknown.
  void validate() const;
};

// Names in suite order.
const std::vector<std::string>& all_checks();

// Symbolic-lambda (or per-specialization) checks.
CheckReport check_cocycle(const SuiteConfig& cfg);
CheckReport check_coassoc(const SuiteConfig& cfg);
CheckReport check_counit(const SuiteConfig& cfg);
CheckReport check_mult_compat(const SuiteConfig& cfg);
CheckReport check_cocommutative(const SuiteConfig& cfg);
CheckReport check_coideal(const SuiteConfig& cfg);
CheckReport check_coproduct_routes(const SuiteConfig& cfg);
CheckReport check_grading(const SuiteConfig& cfg);
CheckReport check_grouplike(const SuiteConfig& cfg);

// Hopf checks: lambda_mode must be specialized to 0 only, otherwise
// DomainError("Hopf checks require λ=0").
CheckReport check_antipode(const SuiteConfig& cfg);
CheckReport check_s_squared(const SuiteConfig& cfg);
CheckReport check_takeuchi_vs_recursive(const SuiteConfig& cfg);
CheckReport check_rota_baxter(const SuiteConfig& cfg);

// <F*G, H> = N(F,G;H) = <F(x)G, Delta(H)> at lambda = 0, and the quasi-shuffle
// product against Delta_lambda at the configured lambda points.
CheckReport check_duality(const SuiteConfig& cfg);
// Delta_{lm}(phi_l F) = (phi_l (x) phi_l) Delta_m(F) and phi_l multiplicative,
// over pairs of phi_points (or the specialized values).
CheckReport check_phi(const SuiteConfig& cfg);

CheckReport run_check(const std::string& name, const SuiteConfig& cfg);
// Runs cfg.checks in order; Hopf checks run with lambda = 0.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

}  // namespace mhopf

// Command-line front end for the forest Hopf algebra.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "mhopf/antipode.hpp"
#include "mhopf/coproduct.hpp"
#include "mhopf/dual.hpp"
#include "mhopf/enumerate.hpp"
#include "mhopf/error.hpp"
#include "mhopf/forest_text.hpp"
#include "mhopf/json_io.hpp"
#include "mhopf/matrix.hpp"
#include "mhopf/morphism.hpp"
#include "mhopf/verify.hpp"

using namespace mhopf;

namespace {

constexpr int exit_domain = 1;
constexpr int exit_verify = 2;

struct Options {
  std::string x_list = "x,y,z";
  std::string omega_list = "a,b,c,d";
  std::string registry_file;
  std::string lambda;  // empty: subcommand default
  std::string output = "text";
  bool ascii = false;
};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t p = 0; (p = s.find(from, p)) != std::string::npos; p += to.size()) s.replace(p, from.size(), to);
  return s;
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o), registry_(load_registry(o)) {}

  const DecorationRegistry& registry() const { return *registry_; }
  Forest forest(const std::string& text) const { return parse_forest(text, *registry_); }
  bool json() const { return o_.output == "json"; }

  // Unset --lambda means `fallback`.
  Poly lambda(const Poly& fallback) const {
    if (o_.lambda.empty()) return fallback;
    if (o_.lambda == "sym" || o_.lambda == "L") return Poly::lambda();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(o_.lambda, &used);
      if (used == o_.lambda.size()) return Poly(v);
    } catch (const std::exception&) {
    }
    throw DomainError("--lambda must be 'sym' or an integer, got '" + o_.lambda + "'");
  }

  Poly lambda_zero_only(const std::string& what) const {
    const Poly l = lambda(Poly{});
    if (!l.is_zero()) throw DomainError(what + " requires λ=0");
    return l;
  }

  void emit(const LinComb& a) const {
    if (json()) std::cout << to_json(a).dump() << '\n';
    else std::cout << to_string(a) << '\n';
  }

  void emit(const TensorLinComb& t) const {
    if (json()) std::cout << to_json(t).dump() << '\n';
    else std::cout << to_string(t, o_.ascii ? "(x)" : "⊗") << '\n';
  }

  void emit_text(const std::string& s) const { std::cout << (o_.ascii ? replace_all(s, "⊗", "(x)") : s); }

 private:
  static std::optional<DecorationRegistry> load_registry(const Options& o) {
    if (!o.registry_file.empty()) {
      std::ifstream in(o.registry_file);
      if (!in) throw RegistryError("cannot open registry file '" + o.registry_file + "'");
      try {
        return registry_from_json(Json::parse(in));
      } catch (const Json::parse_error& e) {
        throw RegistryError(std::string("registry file is not JSON: ") + e.what());
      }
    }
    return DecorationRegistry::from_lists(o.x_list, o.omega_list);
  }

  const Options& o_;
  std::optional<DecorationRegistry> registry_;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// An optional first line {"x": [...], "omega": [...]} overrides the registry.
std::pair<std::optional<DecorationRegistry>, std::string> split_header(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos || text[start] != '{') return {std::nullopt, text};
  const auto eol = text.find('\n', start);
  const std::string header = text.substr(start, eol == std::string::npos ? std::string::npos : eol - start);
  Json j;
  try {
    j = Json::parse(header);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad JSON header: ") + e.what(), 1);
  }
  return {registry_from_json(j), eol == std::string::npos ? std::string{} : text.substr(eol + 1)};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Hopf algebra of decorated planar rooted forests"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--x", o.x_list, "X decorations (leaf-only), comma separated")->capture_default_str();
  app.add_option("--omega", o.omega_list, "Omega decorations, comma separated")->capture_default_str();
  app.add_option("--registry", o.registry_file, "JSON file {\"x\": [...], \"omega\": [...]}");
  app.add_option("--lambda", o.lambda, "sym or an integer");
  app.add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--ascii", o.ascii, "print (x) instead of the tensor sign");

  std::string f_text, g_text, file;
  std::size_t n = 0;
  bool recursive = false;

  auto* coprod = app.add_subcommand("coprod", "coproduct Δ_λ (symbolic λ unless --lambda)");
  coprod->add_option("forest", f_text)->required();
  coprod->add_flag("--recursive", recursive, "use the recursive definition");

  auto* antipode = app.add_subcommand("antipode", "antipode at λ=0");
  antipode->add_option("forest", f_text)->required();
  antipode->add_flag("--recursive", recursive, "use the recursive formula instead of Takeuchi's");

  auto* star_cmd = app.add_subcommand("star", "dual product at λ=0");
  star_cmd->add_option("f", f_text)->required();
  star_cmd->add_option("g", g_text)->required();

  auto* star_l = app.add_subcommand("star-lambda", "quasi-shuffle dual product (symbolic λ unless --lambda)");
  star_l->add_option("f", f_text)->required();
  star_l->add_option("g", g_text)->required();

  auto* encode_cmd = app.add_subcommand("encode", "forest matrix");
  encode_cmd->add_option("forest", f_text)->required();

  auto* decode_cmd = app.add_subcommand("decode", "forest from a matrix (file or stdin)");
  decode_cmd->add_option("file", file, "matrix file; '-' or absent reads stdin");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all forests of a weight");
  enumerate_cmd->add_option("n", n)->required();

  auto* stats_cmd = app.add_subcommand("stats", "weight, breadth, depth and X-leaf count");
  stats_cmd->add_option("forest", f_text)->required();

  auto* phi_cmd = app.add_subcommand("phi", "F -> λ^{d_X(F)} F (symbolic λ unless --lambda)");
  phi_cmd->add_option("forest", f_text)->required();

  std::size_t max_weight = 4;
  std::string checks, points;
  auto* verify_cmd = app.add_subcommand("verify", "run the conformance suite");
  verify_cmd->add_option("--max-weight", max_weight)->capture_default_str();
  verify_cmd->add_option("--checks", checks, "comma separated subset (default: all)");
  verify_cmd->add_option("--points", points, "comma separated λ specializations (default: symbolic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_domain;
  }

  try {
    const bool registry_given = app.count("--x") || app.count("--omega");
    if (*decode_cmd) {
      std::string text;
      if (file.empty() || file == "-") {
        text = read_all(std::cin);
      } else {
        std::ifstream in(file);
        if (!in) throw DomainError("cannot open '" + file + "'");
        text = read_all(in);
      }
      auto [header, body] = split_header(text);
      const Session s(o);
      const DecorationRegistry& reg = header ? *header : s.registry();
      const Forest f = decode(parse_matrix(body, reg), reg);
      if (s.json()) std::cout << Json(f.text()).dump() << '\n';
      else std::cout << f.text() << '\n';
      return 0;
    }

    if (*verify_cmd) {
      if (!registry_given && o.registry_file.empty()) {
        o.x_list = "x";
        o.omega_list = "a,b";
      }
      const Session s(o);
      SuiteConfig cfg;
      cfg.registry = s.registry();
      cfg.max_weight = max_weight;
      cfg.checks = checks.empty() ? all_checks() : split_commas(checks);
      if (!points.empty()) {
        std::vector<long long> values;
        for (const auto& p : split_commas(points)) {
          try {
            values.push_back(std::stoll(p));
          } catch (const std::exception&) {
            throw DomainError("bad λ point '" + p + "'");
          }
        }
        cfg.lambda_mode = LambdaMode::specialized(values);
      } else if (!o.lambda.empty() && o.lambda != "sym") {
        cfg.lambda_mode = LambdaMode::specialized({std::stoll(o.lambda)});
      }
      const auto reports = run_suite(cfg);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      if (s.json()) {
        std::cout << to_json(reports).dump(2) << '\n';
      } else {
        std::ostringstream out;
        for (const auto& r : reports) {
          out << (r.passed() ? "PASS " : "FAIL ") << r.check << " (" << r.instances << " instances)\n";
          for (const auto& f : r.failures)
            out << "  at " << f.input << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << '\n';
        }
        s.emit_text(out.str());
      }
      return ok ? 0 : exit_verify;
    }

    const Session s(o);
    if (*coprod) {
      const Forest f = s.forest(f_text);
      const Poly l = s.lambda(Poly::lambda());
      s.emit(recursive ? coproduct_recursive(f, l) : coproduct(f, l));
    } else if (*antipode) {
      const Forest f = s.forest(f_text);
      const Poly l = s.lambda_zero_only("antipode");
      s.emit(recursive ? antipode_recursive(f, l) : antipode_takeuchi(f, l));
    } else if (*star_cmd) {
      s.lambda_zero_only("star");
      s.emit(star(s.forest(f_text), s.forest(g_text), s.registry()));
    } else if (*star_l) {
      s.emit(star_lambda(s.forest(f_text), s.forest(g_text), s.registry(), s.lambda(Poly::lambda())));
    } else if (*encode_cmd) {
      const ForestMatrix m = encode(s.forest(f_text));
      if (s.json()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).text());
          rows.push_back(row);
        }
        std::cout << rows.dump() << '\n';
      } else {
        std::cout << print_matrix(m);
      }
    } else if (*enumerate_cmd) {
      if (n > 10) throw DomainError("enumerate is limited to weight 10");
      const auto fs = enumerate_forests(n, s.registry());
      if (s.json()) {
        Json out = Json::array();
        for (const auto& f : fs) out.push_back(f.text());
        std::cout << out.dump() << '\n';
      } else {
        for (const auto& f : fs) std::cout << f.text() << '\n';
      }
    } else if (*stats_cmd) {
      const ForestStats st = stats(s.forest(f_text));
      if (s.json())
        std::cout << Json{{"weight", st.weight}, {"breadth", st.breadth}, {"depth", st.depth}, {"d_X", st.x_leaves}}.dump()
                  << '\n';
      else
        std::cout << "weight " << st.weight << "\nbreadth " << st.breadth << "\ndepth " << st.depth << "\nd_X "
                  << st.x_leaves << '\n';
    } else if (*phi_cmd) {
      s.emit(phi_lambda(LinComb(s.forest(f_text)), s.lambda(Poly::lambda())));
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  }
}

#include "mhopf/enumerate.hpp"

#include <algorithm>

namespace mhopf {

namespace {

struct Tables {
  std::vector<std::vector<Tree>> trees;      // by weight
  std::vector<std::vector<Forest>> forests;  // by weight
};

Tables build(std::size_t n, const DecorationRegistry& registry) {
  Tables t;
  t.trees.resize(n + 1);
  t.forests.resize(n + 1);
  t.forests[0].push_back(Forest{});
  const auto all = registry.all();
  const auto omegas = registry.omega_decorations();
  for (std::size_t w = 1; w <= n; ++w) {
    if (w == 1) {
      for (const auto& d : all) t.trees[1].push_back(Tree::from_forest(make_leaf(d)));
    } else {
      for (const auto& om : omegas)
        for (const auto& f : t.forests[w - 1]) t.trees[w].push_back(graft(om, f));
    }
    // First tree of weight k, then any forest of the remaining weight.
    for (std::size_t k = 1; k <= w; ++k)
      for (const auto& tr : t.trees[k])
        for (const auto& rest : t.forests[w - k]) t.forests[w].push_back(concat(tr, rest));
  }
  return t;
}

}  // namespace

std::vector<Forest> enumerate_forests(std::size_t n, const DecorationRegistry& registry) {
  auto out = std::move(build(n, registry).forests[n]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests_up_to(std::size_t max_weight, const DecorationRegistry& registry) {
  auto tables = build(max_weight, registry);
  std::vector<Forest> out;
  for (auto& level : tables.forests) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Tree> enumerate_trees(std::size_t n, const DecorationRegistry& registry) {
  auto out = std::move(build(n, registry).trees[n]);
  std::sort(out.begin(), out.end(),
            [](const Tree& a, const Tree& b) { return a.as_forest() < b.as_forest(); });
  return out;
}

}  // namespace mhopf

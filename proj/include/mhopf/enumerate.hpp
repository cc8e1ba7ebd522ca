#pragma once

#include <cstddef>
#include <vector>

#include "mhopf/decoration.hpp"
#include "mhopf/forest.hpp"

namespace mhopf {

// Every forest of weight exactly n over the registry, each once, in
// canonical order.
std::vector<Forest> enumerate_forests(std::size_t n, const DecorationRegistry& registry);

// Forests of weight 0..max_weight, ascending weight, canonical order within.
std::vector<Forest> enumerate_forests_up_to(std::size_t max_weight, const DecorationRegistry& registry);

std::vector<Tree> enumerate_trees(std::size_t n, const DecorationRegistry& registry);

}  // namespace mhopf

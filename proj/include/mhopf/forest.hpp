#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhopf/decoration.hpp"

namespace mhopf {

// Subset-driven operations index vertices by bit position in a 64-bit mask.
inline constexpr std::size_t max_subset_weight = 64;

// A set of vertex indices (0-based, in the total order of the forest).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet all(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// One vertex of a forest in depth-first preorder. `parent` is -1 for roots;
// `subtree_size` counts the vertex itself.
struct Vertex {
  Decoration decoration;
  std::int32_t parent = -1;
  std::uint32_t subtree_size = 1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class Tree;

// An immutable decorated planar rooted forest, stored as its preorder vertex
// list. The empty forest is the unit 1. Ordering is the canonical one: by
// weight, then by printed text.
class Forest {
 public:
  Forest();

  // Builds a forest from preorder decorations and parent indices (-1 for a
  // root). Throws DomainError if the parents do not describe a preorder
  // listing or an X-decorated vertex has children.
  static Forest from_preorder(std::span<const Decoration> decorations,
                              std::span<const std::int32_t> parents);

  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t weight() const noexcept { return vertices_.size(); }
  std::size_t breadth() const noexcept;
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }

  std::vector<Tree> trees() const;

  // Canonical text, e.g. "x a[y b]" or "1".
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Forest& a, const Forest& b) { return a.text_ == b.text_ && a.vertices_ == b.vertices_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  explicit Forest(std::vector<Vertex> vertices);

  std::vector<Vertex> vertices_;
  std::string text_;

  friend Forest concat(const Forest& f, const Forest& g);
  friend Tree graft(const Decoration& omega, const Forest& f);
  friend Forest induced_subforest(const Forest& f, VertexSet subset);
};

// A forest of breadth exactly one.
class Tree {
 public:
  // Throws DomainError unless f has breadth 1.
  static Tree from_forest(Forest f);

  const Decoration& root_decoration() const { return forest_.vertex(0).decoration; }
  Forest children() const;
  std::size_t weight() const noexcept { return forest_.weight(); }
  const Forest& as_forest() const noexcept { return forest_; }
  operator const Forest&() const noexcept { return forest_; }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(Forest f) : forest_(std::move(f)) {}
  Forest forest_;

  friend class Forest;
  friend Tree graft(const Decoration& omega, const Forest& f);
};

// The single-vertex tree •_d (for d in X or Omega).
Forest make_leaf(const Decoration& d);

// Grafting B+_omega: a new omega-decorated root over the trees of f.
// Throws DomainError if omega is an X decoration.
Tree graft(const Decoration& omega, const Forest& f);

Forest concat(const Forest& f, const Forest& g);
inline Forest operator*(const Forest& f, const Forest& g) { return concat(f, g); }

struct ForestStats {
  std::size_t weight = 0;
  std::size_t breadth = 0;
  std::size_t depth = 0;
  std::size_t x_leaves = 0;  // d_X

  friend bool operator==(const ForestStats&, const ForestStats&) = default;
};

ForestStats stats(const Forest& f);
std::size_t depth(const Forest& f);
std::size_t x_leaf_count(const Forest& f);

struct VertexEntry {
  std::size_t index = 0;  // 0-based position in the total order
  Decoration decoration;
  std::optional<std::size_t> parent;
  bool is_x = false;
};

using VertexTable = std::vector<VertexEntry>;

// Vertices in depth-first preorder, which realizes the total order <=_{h,r}.
VertexTable vertex_table(const Forest& f);

// i <=_h j: v_i lies on the path from its root to v_j (reflexive).
bool leq_h(const Forest& f, std::size_t i, std::size_t j);
// i <=_r j: incomparable under <=_h and v_j is to the right of v_i (reflexive
// on the diagonal).
bool leq_r(const Forest& f, std::size_t i, std::size_t j);

// Set of X-decorated vertices.
VertexSet x_vertices(const Forest& f);

// F_I: vertices in I, each attached to its nearest ancestor in I, planar order
// inherited. Throws DomainError for forests above 64 vertices or indices out
// of range.
Forest induced_subforest(const Forest& f, VertexSet subset);

}  // namespace mhopf

template <>
struct std::hash<mhopf::Forest> {
  std::size_t operator()(const mhopf::Forest& f) const noexcept { return std::hash<std::string>{}(f.text()); }
};

#include "mhopf/forest.hpp"

#include <algorithm>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

void append_tree_text(std::span<const Vertex> vs, std::size_t root, std::string& out) {
  out += vs[root].decoration.name();
  const std::size_t end = root + vs[root].subtree_size;
  if (end == root + 1) return;
  out += '[';
  for (std::size_t c = root + 1; c < end; c += vs[c].subtree_size) {
    if (c != root + 1) out += ' ';
    append_tree_text(vs, c, out);
  }
  out += ']';
}

std::string forest_text(std::span<const Vertex> vs) {
  if (vs.empty()) return "1";
  std::string out;
  for (std::size_t r = 0; r < vs.size(); r += vs[r].subtree_size) {
    if (r != 0) out += ' ';
    append_tree_text(vs, r, out);
  }
  return out;
}

void check_subset_size(const Forest& f) {
  if (f.weight() > max_subset_weight)
    throw DomainError("subset operations support at most 64 vertices (forest has " +
                      std::to_string(f.weight()) + ")");
}

void check_index(const Forest& f, std::size_t i) {
  if (i >= f.weight())
    throw DomainError("vertex index " + std::to_string(i) + " out of range for forest of weight " +
                      std::to_string(f.weight()));
}

// Fills subtree sizes from parent links (parents precede children).
void fill_subtree_sizes(std::vector<Vertex>& vs) {
  for (auto& v : vs) v.subtree_size = 1;
  for (std::size_t i = vs.size(); i-- > 0;)
    if (vs[i].parent >= 0) vs[static_cast<std::size_t>(vs[i].parent)].subtree_size += vs[i].subtree_size;
}

}  // namespace

Forest::Forest() : text_("1") {}

Forest::Forest(std::vector<Vertex> vertices) : vertices_(std::move(vertices)), text_(forest_text(vertices_)) {}

Forest Forest::from_preorder(std::span<const Decoration> decorations, std::span<const std::int32_t> parents) {
  if (decorations.size() != parents.size()) throw DomainError("decoration and parent lists differ in length");
  std::vector<Vertex> vs(decorations.size());
  // Stack of open ancestors: in preorder, a vertex's parent must be on the
  // current root-to-previous-vertex path.
  std::vector<std::int32_t> path;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto p = parents[i];
    while (!path.empty() && path.back() != p) path.pop_back();
    if (p >= 0 && path.empty())
      throw DomainError("parent of vertex " + std::to_string(i) + " is not an open ancestor in preorder");
    if (p >= 0 && decorations[static_cast<std::size_t>(p)].is_x())
      throw DomainError("X-decorated vertex '" + std::string(decorations[static_cast<std::size_t>(p)].name()) +
                        "' cannot have children");
    vs[i].decoration = decorations[i];
    vs[i].parent = p;
    path.push_back(static_cast<std::int32_t>(i));
  }
  fill_subtree_sizes(vs);
  return Forest(std::move(vs));
}

std::size_t Forest::breadth() const noexcept {
  std::size_t n = 0;
  for (std::size_t r = 0; r < vertices_.size(); r += vertices_[r].subtree_size) ++n;
  return n;
}

std::vector<Tree> Forest::trees() const {
  std::vector<Tree> out;
  for (std::size_t r = 0; r < vertices_.size(); r += vertices_[r].subtree_size) {
    std::vector<Vertex> vs(vertices_.begin() + static_cast<std::ptrdiff_t>(r),
                           vertices_.begin() + static_cast<std::ptrdiff_t>(r + vertices_[r].subtree_size));
    const auto shift = static_cast<std::int32_t>(r);
    for (auto& v : vs)
      if (v.parent >= 0) v.parent -= shift;
    out.push_back(Tree(Forest(std::move(vs))));
  }
  return out;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.text_.compare(b.text_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  // Same text but different kinds only happens across registries.
  for (std::size_t i = 0; i < a.weight(); ++i) {
    auto ka = a.vertices_[i].decoration.kind(), kb = b.vertices_[i].decoration.kind();
    if (ka != kb) return ka <=> kb;
  }
  return std::strong_ordering::equal;
}

Tree Tree::from_forest(Forest f) {
  if (f.breadth() != 1) throw DomainError("expected a single tree, got '" + f.text() + "'");
  return Tree(std::move(f));
}

Forest Tree::children() const {
  const auto vs = forest_.vertices();
  std::vector<Vertex> out(vs.begin() + 1, vs.end());
  for (auto& v : out) v.parent = v.parent == 0 ? -1 : v.parent - 1;
  std::vector<Decoration> decs;
  std::vector<std::int32_t> parents;
  for (const auto& v : out) {
    decs.push_back(v.decoration);
    parents.push_back(v.parent);
  }
  return Forest::from_preorder(decs, parents);
}

Forest make_leaf(const Decoration& d) {
  const Decoration decs[] = {d};
  const std::int32_t parents[] = {-1};
  return Forest::from_preorder(decs, parents);
}

Tree graft(const Decoration& omega, const Forest& f) {
  if (omega.is_x())
    throw DomainError("cannot graft onto X decoration '" + std::string(omega.name()) + "'");
  std::vector<Vertex> vs;
  vs.reserve(f.weight() + 1);
  vs.push_back(Vertex{omega, -1, static_cast<std::uint32_t>(f.weight() + 1)});
  for (const auto& v : f.vertices_) vs.push_back(Vertex{v.decoration, v.parent + 1, v.subtree_size});
  return Tree(Forest(std::move(vs)));
}

Forest concat(const Forest& f, const Forest& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  std::vector<Vertex> vs;
  vs.reserve(f.weight() + g.weight());
  vs.insert(vs.end(), f.vertices_.begin(), f.vertices_.end());
  const auto shift = static_cast<std::int32_t>(f.weight());
  for (auto v : g.vertices_) {
    if (v.parent >= 0) v.parent += shift;
    vs.push_back(v);
  }
  return Forest(std::move(vs));
}

std::size_t depth(const Forest& f) {
  const auto vs = f.vertices();
  // Depth of a subtree: 0 for an X leaf, else 1 + max depth of its children.
  std::vector<std::size_t> d(vs.size(), 0);
  std::size_t result = 0;
  for (std::size_t i = vs.size(); i-- > 0;) {
    if (vs[i].decoration.is_omega()) d[i] += 1;
    if (vs[i].parent >= 0) {
      auto p = static_cast<std::size_t>(vs[i].parent);
      d[p] = std::max(d[p], d[i]);
    } else {
      result = std::max(result, d[i]);
    }
  }
  return result;
}

std::size_t x_leaf_count(const Forest& f) {
  return static_cast<std::size_t>(
      std::count_if(f.vertices().begin(), f.vertices().end(), [](const Vertex& v) { return v.decoration.is_x(); }));
}

ForestStats stats(const Forest& f) { return ForestStats{f.weight(), f.breadth(), depth(f), x_leaf_count(f)}; }

VertexTable vertex_table(const Forest& f) {
  VertexTable out;
  const auto vs = f.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexEntry e;
    e.index = i;
    e.decoration = vs[i].decoration;
    if (vs[i].parent >= 0) e.parent = static_cast<std::size_t>(vs[i].parent);
    e.is_x = vs[i].decoration.is_x();
    out.push_back(e);
  }
  return out;
}

bool leq_h(const Forest& f, std::size_t i, std::size_t j) {
  check_index(f, i);
  check_index(f, j);
  return i <= j && j < i + f.vertex(i).subtree_size;
}

bool leq_r(const Forest& f, std::size_t i, std::size_t j) {
  check_index(f, i);
  check_index(f, j);
  if (i == j) return true;
  return i < j && !leq_h(f, i, j);
}

VertexSet x_vertices(const Forest& f) {
  check_subset_size(f);
  VertexSet s;
  for (std::size_t i = 0; i < f.weight(); ++i)
    if (f.vertex(i).decoration.is_x()) s.insert(i);
  return s;
}

Forest induced_subforest(const Forest& f, VertexSet subset) {
  check_subset_size(f);
  if (subset.bits() & ~VertexSet::all(f.weight()).bits())
    throw DomainError("vertex subset out of range for forest of weight " + std::to_string(f.weight()));
  const auto vs = f.vertices();
  std::vector<std::int32_t> new_index(vs.size(), -1);
  std::vector<Vertex> out;
  out.reserve(subset.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!subset.contains(i)) continue;
    std::int32_t a = vs[i].parent;
    while (a >= 0 && !subset.contains(static_cast<std::size_t>(a))) a = vs[static_cast<std::size_t>(a)].parent;
    new_index[i] = static_cast<std::int32_t>(out.size());
    out.push_back(Vertex{vs[i].decoration, a >= 0 ? new_index[static_cast<std::size_t>(a)] : -1, 1});
  }
  fill_subtree_sizes(out);
  return Forest(std::move(out));
}

}  // namespace mhopf

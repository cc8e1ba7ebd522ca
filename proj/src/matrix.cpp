#include "mhopf/matrix.hpp"

#include <sstream>

#include "mhopf/error.hpp"

namespace mhopf {

std::string MatrixEntry::text() const {
  switch (kind) {
    case EntryKind::Dec: return std::string(decoration.name());
    case EntryKind::Zero: return "0";
    case EntryKind::Eq: return "=";
    case EntryKind::H: return "h";
    case EntryKind::R: return "r";
  }
  return "?";
}

ForestMatrix::ForestMatrix(std::size_t n, const Decoration& fill) : n_(n), entries_(n * (n + 1)) {
  for (std::size_t i = 0; i < n; ++i) {
    at(i, 0) = MatrixEntry::dec(fill);
    for (std::size_t j = 0; j < n; ++j)
      rel(i, j) = j < i ? MatrixEntry::zero() : j == i ? MatrixEntry::eq() : MatrixEntry::r();
  }
}

ForestMatrix ForestMatrix::from_rows(std::vector<std::vector<MatrixEntry>> rows) {
  ForestMatrix m;
  m.n_ = rows.size();
  m.entries_.reserve(m.n_ * (m.n_ + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.n_ + 1)
      throw DomainError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(m.n_ + 1));
    for (auto& e : rows[i]) m.entries_.push_back(e);
  }
  return m;
}

ForestMatrix encode(const Forest& f) {
  const std::size_t n = f.weight();
  ForestMatrix m(n, Decoration{});
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, 0) = MatrixEntry::dec(f.vertex(i).decoration);
    // Descendants of i in preorder are exactly i+1 .. i+subtree_size-1.
    const std::size_t end = i + f.vertex(i).subtree_size;
    for (std::size_t j = i + 1; j < n; ++j) m.rel(i, j) = j < end ? MatrixEntry::h() : MatrixEntry::r();
  }
  return m;
}

namespace {

Representability fail(char condition, std::string detail) { return {false, condition, std::move(detail)}; }

std::string cell(std::size_t i, std::size_t c) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(c) + ")";
}

}  // namespace

Representability is_representable(const ForestMatrix& a, const DecorationRegistry& registry) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const MatrixEntry& d = a.label(i);
    if (d.kind != EntryKind::Dec) return fail('a', "entry " + cell(i, 0) + " is not a decoration");
    const std::string name(d.decoration.name());
    if (!registry.contains(name) || registry.lookup(name).kind() != d.decoration.kind())
      return fail('a', "decoration '" + name + "' at " + cell(i, 0) + " is not registered");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a.rel(i, j).kind != EntryKind::Zero) return fail('b', "entry " + cell(i, j + 1) + " must be 0");
  for (std::size_t i = 0; i < n; ++i)
    if (a.rel(i, i).kind != EntryKind::Eq) return fail('c', "entry " + cell(i, i + 1) + " must be =");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto k = a.rel(i, j).kind;
      if (k != EntryKind::H && k != EntryKind::R) return fail('d', "entry " + cell(i, j + 1) + " must be h or r");
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.label(i).decoration.is_x()) continue;
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.rel(i, j).kind != EntryKind::R)
        return fail('e', "row " + std::to_string(i + 1) + " is X-decorated but " + cell(i, j + 1) + " is h");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const bool ij = a.rel(i, j).kind == EntryKind::H;
        const bool ik = a.rel(i, k).kind == EntryKind::H;
        const bool jk = a.rel(j, k).kind == EntryKind::H;
        // Allowed: (r,r;r) (h,h;h) (r,r;h) (h,h;r) (h,r;r)
        const bool allowed = ij ? (jk ? ik : true) : !ik;
        if (!allowed)
          return fail('f', "forbidden pattern (" + a.rel(i, j).text() + " " + a.rel(i, k).text() + "; = " +
                               a.rel(j, k).text() + ") at rows " + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + "," + std::to_string(k + 1));
      }
  return {};
}

Forest decode(const ForestMatrix& a, const DecorationRegistry& registry) {
  if (auto rep = is_representable(a, registry); !rep)
    throw DomainError(std::string("matrix is not forest-representable: condition (") + rep.condition + ") " +
                      rep.detail);
  const std::size_t n = a.rows();
  std::vector<Decoration> decs(n);
  std::vector<std::int32_t> parents(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    decs[j] = a.label(j).decoration;
    for (std::size_t i = j; i-- > 0;)
      if (a.rel(i, j).kind == EntryKind::H) {
        parents[j] = static_cast<std::int32_t>(i);
        break;
      }
  }
  return Forest::from_preorder(decs, parents);
}

std::string print_matrix(const ForestMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ' ';
      out += a.at(i, c).text();
    }
    out += '\n';
  }
  return out;
}

ForestMatrix parse_matrix(std::string_view text, const DecorationRegistry& registry) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> line_numbers;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    lines.push_back(std::move(tokens));
    line_numbers.push_back(no);
  }
  const std::size_t n = lines.size();
  std::vector<std::vector<MatrixEntry>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& tokens = lines[i];
    if (tokens.size() != n + 1)
      throw ParseError("matrix row has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(n + 1),
                       line_numbers[i]);
    std::vector<MatrixEntry> row;
    if (!is_identifier(tokens[0])) throw ParseError("expected a decoration, got '" + tokens[0] + "'", line_numbers[i]);
    row.push_back(MatrixEntry::dec(registry.lookup(tokens[0])));
    for (std::size_t c = 1; c < tokens.size(); ++c) {
      const std::string& t = tokens[c];
      if (t == "0") row.push_back(MatrixEntry::zero());
      else if (t == "=") row.push_back(MatrixEntry::eq());
      else if (t == "h") row.push_back(MatrixEntry::h());
      else if (t == "r") row.push_back(MatrixEntry::r());
      else throw ParseError("unknown matrix entry '" + t + "'", line_numbers[i]);
    }
    rows.push_back(std::move(row));
  }
  return ForestMatrix::from_rows(std::move(rows));
}

}  // namespace mhopf

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhopf/decoration.hpp"
#include "mhopf/forest.hpp"

namespace mhopf {

enum class EntryKind : std::uint8_t { Dec, Zero, Eq, H, R };

struct MatrixEntry {
  EntryKind kind = EntryKind::Zero;
  Decoration decoration;  // meaningful only for Dec

  static MatrixEntry dec(const Decoration& d) { return {EntryKind::Dec, d}; }
  static MatrixEntry zero() { return {EntryKind::Zero, {}}; }
  static MatrixEntry eq() { return {EntryKind::Eq, {}}; }
  static MatrixEntry h() { return {EntryKind::H, {}}; }
  static MatrixEntry r() { return {EntryKind::R, {}}; }

  // "0", "=", "h", "r" or the decoration name.
  std::string text() const;

  friend bool operator==(const MatrixEntry& a, const MatrixEntry& b) {
    return a.kind == b.kind && (a.kind != EntryKind::Dec || a.decoration == b.decoration);
  }
};

// An n x (n+1) matrix. Rows are 0-based; column 0 holds decorations and
// column j+1 refers to row j. Values need not be representable.
class ForestMatrix {
 public:
  ForestMatrix() = default;
  // Structurally shaped: Zero below, Eq on, R above the diagonal, column 0
  // filled with `fill`.
  ForestMatrix(std::size_t n, const Decoration& fill);

  // Throws DomainError unless every row has rows.size()+1 entries.
  static ForestMatrix from_rows(std::vector<std::vector<MatrixEntry>> rows);

  std::size_t rows() const noexcept { return n_; }
  std::size_t cols() const noexcept { return n_ + 1; }

  const MatrixEntry& at(std::size_t i, std::size_t c) const { return entries_.at(i * (n_ + 1) + c); }
  MatrixEntry& at(std::size_t i, std::size_t c) { return entries_.at(i * (n_ + 1) + c); }

  // Column 0 of row i, and the relation entry between rows i and j.
  const MatrixEntry& label(std::size_t i) const { return at(i, 0); }
  const MatrixEntry& rel(std::size_t i, std::size_t j) const { return at(i, j + 1); }
  MatrixEntry& rel(std::size_t i, std::size_t j) { return at(i, j + 1); }

  friend bool operator==(const ForestMatrix&, const ForestMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<MatrixEntry> entries_;
};

ForestMatrix encode(const Forest& f);

struct Representability {
  bool ok = true;
  // 'a'..'f', or '\0' when ok.
  char condition = '\0';
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

// Conditions (a)-(f): decorations in column 0 (known to the registry with the
// right kind), zeros below and '=' on the diagonal, h/r above, X rows all r,
// and the five allowed 2x2 patterns over every i<j<k.
Representability is_representable(const ForestMatrix& a, const DecorationRegistry& registry);

// The Hasse diagram of the h-order: the parent of row j is the largest i<j
// with entry h. Throws DomainError naming the violated condition.
Forest decode(const ForestMatrix& a, const DecorationRegistry& registry);

// One row per line, entries separated by spaces, e.g. "a = h\nx 0 =".
std::string print_matrix(const ForestMatrix& a);
// Blank lines are ignored. Throws ParseError (line number) on bad shape or
// token, RegistryError for unknown decorations.
ForestMatrix parse_matrix(std::string_view text, const DecorationRegistry& registry);

}  // namespace mhopf

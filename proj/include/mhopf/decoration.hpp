#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mhopf {

enum class DecorationKind : std::uint8_t { X, Omega };

// A vertex label. Names are interned process-wide so a Decoration is a small
// value type; the kind is fixed by the registry that produced it.
class Decoration {
 public:
  Decoration() = default;
  Decoration(std::string_view name, DecorationKind kind);

  std::string_view name() const;
  DecorationKind kind() const noexcept { return kind_; }
  bool is_x() const noexcept { return kind_ == DecorationKind::X; }
  bool is_omega() const noexcept { return kind_ == DecorationKind::Omega; }
  std::uint32_t symbol() const noexcept { return symbol_; }

  friend bool operator==(const Decoration&, const Decoration&) = default;

 private:
  std::uint32_t symbol_ = 0;
  DecorationKind kind_ = DecorationKind::Omega;
};

bool is_identifier(std::string_view s);

// The two disjoint alphabets: X (leaf-only) and Omega (any vertex, indexes
// the grafting operators). Omega must be nonempty.
class DecorationRegistry {
 public:
  DecorationRegistry(std::vector<std::string> x_names, std::vector<std::string> omega_names);

  const std::vector<std::string>& x_names() const noexcept { return x_names_; }
  const std::vector<std::string>& omega_names() const noexcept { return omega_names_; }

  bool contains(std::string_view name) const;
  // Throws RegistryError for unknown names.
  Decoration lookup(std::string_view name) const;

  std::vector<Decoration> x_decorations() const;
  std::vector<Decoration> omega_decorations() const;
  std::vector<Decoration> all() const;

  // "x,y" style comma-separated lists; empty string means the empty set.
  static DecorationRegistry from_lists(std::string_view x_list, std::string_view omega_list);

 private:
  std::vector<std::string> x_names_;
  std::vector<std::string> omega_names_;
};

}  // namespace mhopf

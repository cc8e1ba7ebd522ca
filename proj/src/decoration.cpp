#include "mhopf/decoration.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_map>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

class SymbolTable {
 public:
  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    names_.emplace_back(name);
    auto id = static_cast<std::uint32_t>(names_.size() - 1);
    ids_.emplace(names_.back(), id);
    return id;
  }

  std::string_view name(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    return names_.at(id);
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;  // deque keeps references stable
  std::unordered_map<std::string, std::uint32_t> ids_;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

std::vector<std::string> split_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    auto item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

}  // namespace

Decoration::Decoration(std::string_view name, DecorationKind kind)
    : symbol_(symbols().intern(name)), kind_(kind) {}

std::string_view Decoration::name() const { return symbols().name(symbol_); }

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c); });
}

DecorationRegistry::DecorationRegistry(std::vector<std::string> x_names,
                                       std::vector<std::string> omega_names)
    : x_names_(std::move(x_names)), omega_names_(std::move(omega_names)) {
  if (omega_names_.empty()) throw RegistryError("the Omega alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto* names : {&x_names_, &omega_names_}) {
    for (const auto& n : *names) {
      if (!is_identifier(n)) throw RegistryError("invalid decoration name '" + n + "'");
      if (!seen.insert(n).second)
        throw RegistryError("decoration '" + n + "' listed twice (X and Omega must be disjoint)");
    }
  }
}

bool DecorationRegistry::contains(std::string_view name) const {
  auto eq = [&](const std::string& n) { return n == name; };
  return std::any_of(x_names_.begin(), x_names_.end(), eq) ||
         std::any_of(omega_names_.begin(), omega_names_.end(), eq);
}

Decoration DecorationRegistry::lookup(std::string_view name) const {
  for (const auto& n : x_names_)
    if (n == name) return Decoration(n, DecorationKind::X);
  for (const auto& n : omega_names_)
    if (n == name) return Decoration(n, DecorationKind::Omega);
  throw RegistryError("unknown decoration '" + std::string(name) + "'");
}

std::vector<Decoration> DecorationRegistry::x_decorations() const {
  std::vector<Decoration> out;
  for (const auto& n : x_names_) out.emplace_back(n, DecorationKind::X);
  return out;
}

std::vector<Decoration> DecorationRegistry::omega_decorations() const {
  std::vector<Decoration> out;
  for (const auto& n : omega_names_) out.emplace_back(n, DecorationKind::Omega);
  return out;
}

std::vector<Decoration> DecorationRegistry::all() const {
  auto out = x_decorations();
  auto om = omega_decorations();
  out.insert(out.end(), om.begin(), om.end());
  return out;
}

DecorationRegistry DecorationRegistry::from_lists(std::string_view x_list, std::string_view omega_list) {
  return DecorationRegistry(split_list(x_list), split_list(omega_list));
}

}  // namespace mhopf

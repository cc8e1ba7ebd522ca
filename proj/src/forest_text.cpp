#include "mhopf/forest_text.hpp"

#include <cctype>
#include <vector>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const DecorationRegistry& registry) : text_(text), registry_(registry) {}

  Forest parse() {
    skip_ws();
    Forest f = parse_forest();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool skip_ws() {
    const auto start = pos_;
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ != start;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Forest parse_forest() {
    if (peek() == '1') {
      ++pos_;
      return Forest{};
    }
    Forest f = parse_tree();
    for (;;) {
      const auto save = pos_;
      const bool had_ws = skip_ws();
      if (!ident_start(peek())) {
        pos_ = save;
        break;
      }
      if (!had_ws) fail("expected whitespace between trees");
      f = concat(f, parse_tree());
    }
    return f;
  }

  Forest parse_tree() {
    if (!ident_start(peek())) fail(at_end() ? "unexpected end of input" : "expected identifier");
    const auto start = pos_;
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    const Decoration d = registry_.lookup(name);
    if (peek() != '[') return make_leaf(d);
    if (d.is_x())
      throw DomainError("X-decorated vertex '" + std::string(name) + "' cannot have children (position " +
                        std::to_string(start) + ")");
    ++pos_;
    skip_ws();
    Forest children = parse_forest();
    skip_ws();
    if (peek() != ']') fail(at_end() ? "unexpected end of input, expected ']'" : "expected ']'");
    ++pos_;
    return graft(d, children);
  }

  std::string_view text_;
  const DecorationRegistry& registry_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view text, const DecorationRegistry& registry) {
  return Parser(text, registry).parse();
}

}  // namespace mhopf

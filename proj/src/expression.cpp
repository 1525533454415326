#include "qlhp/expression.hpp"

#include <cctype>
#include <charconv>

namespace qlhp {

namespace {

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int parse_small_int(std::string_view digits, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("expected an integer in '" + std::string(context) + "'");
  return value;
}

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  GradedClass parse() {
    GradedClass value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  GradedClass expr() {
    GradedClass value = term();
    while (true) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  GradedClass term() {
    GradedClass value = unary();
    while (true) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const GradedClass divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        if (divisor.max_degree() != 0) fail("division only by constants");
        value = Rational(1 / divisor.constant_term()) * value;
      } else {
        return value;
      }
    }
  }

  GradedClass unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_of_atom();
  }

  GradedClass power_of_atom() {
    GradedClass base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      return power(base, parse_small_int(text_.substr(start, pos_ - start), text_));
    }
    return base;
  }

  GradedClass atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GradedClass inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      return GradedClass::constant(ring_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (is_identifier_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      if (!ring_->index_of(name)) fail("unknown generator '" + std::string(name) + "'");
      return GradedClass::generator(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RingPtr parse_relations(std::string_view relations) {
  std::vector<Generator> generators;
  while (true) {
    const auto comma = relations.find(',');
    const auto item = trim(relations.substr(0, comma));
    const auto caret = item.find('^');
    if (item.empty() || caret == std::string_view::npos)
      throw ParseError("relation must look like name^n, got '" + std::string(item) + "'");
    Generator g;
    g.name = std::string(trim(item.substr(0, caret)));
    if (g.name.empty() || !is_identifier_start(g.name.front()))
      throw ParseError("bad generator name in '" + std::string(item) + "'");
    for (char c : g.name) {
      if (!is_identifier_char(c)) throw ParseError("bad generator name in '" + std::string(item) + "'");
    }
    auto rest = trim(item.substr(caret + 1));
    const auto at = rest.find('@');
    g.nilpotency = parse_small_int(trim(rest.substr(0, at)), item);
    if (at != std::string_view::npos) g.degree = parse_small_int(trim(rest.substr(at + 1)), item);
    generators.push_back(std::move(g));
    if (comma == std::string_view::npos) break;
    relations.remove_prefix(comma + 1);
  }
  try {
    return make_ring(std::move(generators));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

GradedClass evaluate_expression(std::string_view expression, const RingPtr& ring) {
  return Parser(expression, ring).parse();
}

}  // namespace qlhp

#include "fgh/notation.hpp"

#include <cctype>
#include <string>

#include "fgh/errors.hpp"

namespace fgh {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal value = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  Ordinal parse_expr() {
    Ordinal acc = parse_term();
    while (true) {
      skip_ws();
      if (!match('+')) return acc;
      acc = add(acc, parse_term());
    }
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == 'w') {
      ++pos_;
      Ordinal exponent = from_nat(1);
      if (match('^')) exponent = parse_factor();
      Nat coeff = 1;
      if (match('*')) coeff = parse_nat();
      return Ordinal::single_term(omega_pow_checked(exponent), std::move(coeff));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return from_nat(parse_nat());
    if (c == 'e') {
      expect_e0();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*')
        throw ArgumentTooLarge("e0 cannot be scaled");
      return Ordinal::epsilon0();
    }
    fail("expected a term");
  }

  // The exponent E of w^E. single_term() wants E itself, so this only vets it.
  Ordinal omega_pow_checked(Ordinal e) {
    if (e.is_epsilon0()) throw ArgumentTooLarge("e0 cannot appear in an exponent");
    return e;
  }

  Ordinal parse_factor() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected an exponent");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return from_nat(parse_nat());
    if (c == 'w') {
      ++pos_;
      return Ordinal::single_term(from_nat(1), 1);
    }
    if (c == '(') {
      ++pos_;
      Ordinal inner = parse_expr();
      skip_ws();
      if (!match(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'e') {
      expect_e0();
      throw ArgumentTooLarge("e0 cannot appear in an exponent");
    }
    fail("expected an exponent");
  }

  Nat parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Nat(std::string(text_.substr(start, pos_ - start)));
  }

  void expect_e0() {
    // caller saw 'e'
    if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '0') fail("expected 'e0'");
    pos_ += 2;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(pos_, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Exponents render bare when the grammar can read them back without
// parentheses: a numeral or a lone 'w'.
bool exponent_needs_parens(const Ordinal& e) {
  if (e.is_epsilon0()) return true;  // unreachable from valid terms
  if (e.is_finite()) return false;
  const auto& ts = e.terms();
  return !(ts.size() == 1 && ts.front().coefficient == 1 && ts.front().exponent == from_nat(1));
}

void render_term(const Ordinal::Term& t, std::string& out) {
  if (t.exponent.is_zero()) {
    out += t.coefficient.str();
    return;
  }
  out += 'w';
  if (t.exponent != from_nat(1)) {
    out += '^';
    if (exponent_needs_parens(t.exponent)) {
      out += '(';
      out += render(t.exponent);
      out += ')';
    } else {
      out += render(t.exponent);
    }
  }
  if (t.coefficient != 1) {
    out += '*';
    out += t.coefficient.str();
  }
}

}  // namespace

Ordinal parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Ordinal& a) {
  if (a.is_epsilon0()) return "e0";
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    render_term(t, out);
    first = false;
  }
  return out;
}

}  // namespace fgh

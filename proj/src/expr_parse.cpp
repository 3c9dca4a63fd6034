#include "oscrep/expr_parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace oscrep {

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) {
    throw std::invalid_argument("to_string: variable name count mismatch");
  }
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    const bool constant_term = m.is_constant();
    if (mag != 1 || constant_term) {
      os << to_string(mag);
      if (!constant_term) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names[i];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::ostringstream os;
    os << "parse error at position " << current_.pos << ": " << message;
    if (current_.kind != Token::Kind::End) os << " (token '" << current_.text << "')";
    throw std::invalid_argument(os.str());
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    current_ = Token{};
    current_.pos = i_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::Number;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        current_.text += text_[i_++];
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::Ident;
      while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) {
        current_.text += text_[i_++];
      }
      return;
    }
    current_.kind = Token::Kind::Symbol;
    current_.text = std::string(1, c);
    ++i_;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : lexer_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    if (lexer_.peek().kind != Token::Kind::End) lexer_.fail("trailing input");
    return p;
  }

 private:
  std::size_t nvars() const { return names_.size(); }

  bool at_symbol(const char* s) const {
    return lexer_.peek().kind == Token::Kind::Symbol && lexer_.peek().text == s;
  }

  Polynomial parse_expr() {
    Polynomial acc =
        at_symbol("-") ? (lexer_.take(), -parse_term()) : parse_term();
    while (at_symbol("+") || at_symbol("-")) {
      const bool minus = lexer_.take().text == "-";
      const Polynomial rhs = parse_term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (at_symbol("*")) {
      lexer_.take();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (at_symbol("^")) {
      lexer_.take();
      if (lexer_.peek().kind != Token::Kind::Number) lexer_.fail("expected integer exponent");
      const long e = std::stol(lexer_.take().text);
      Polynomial out = Polynomial::constant(nvars(), Rational(1));
      for (long i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Polynomial parse_atom() {
    const Token& t = lexer_.peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        std::string num = lexer_.take().text;
        if (at_symbol("/")) {
          lexer_.take();
          if (lexer_.peek().kind != Token::Kind::Number) lexer_.fail("expected denominator");
          num += "/" + lexer_.take().text;
        }
        return Polynomial::constant(nvars(), parse_rational(num));
      }
      case Token::Kind::Ident: {
        const Token tok = lexer_.take();
        for (std::size_t i = 0; i < names_.size(); ++i) {
          if (names_[i] == tok.text) return Polynomial::variable(nvars(), i);
        }
        std::ostringstream os;
        os << "parse error at position " << tok.pos << ": unknown variable (token '" << tok.text
           << "')";
        throw std::invalid_argument(os.str());
      }
      case Token::Kind::Symbol:
        if (t.text == "(") {
          lexer_.take();
          Polynomial inner = parse_expr();
          if (!at_symbol(")")) lexer_.fail("expected ')'");
          lexer_.take();
          return inner;
        }
        if (t.text == "-") {
          lexer_.take();
          return -parse_factor();
        }
        lexer_.fail("unexpected symbol");
      case Token::Kind::End:
        lexer_.fail("unexpected end of input");
    }
    lexer_.fail("unexpected token");
  }

  Lexer lexer_;
  const std::vector<std::string>& names_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace oscrep

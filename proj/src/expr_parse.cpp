#include "gconj/expr_parse.hpp"

#include <cctype>

namespace gconj {

namespace {

struct Token {
  enum class Type { Name, Number, Punct, End } type;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_ = {Token::Type::End, "", i_};
      return;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      cur_ = {Token::Type::Name, std::string(text_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      bool dot = false;
      while (j < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[j])) ||
              (text_[j] == '.' && !dot && (dot = true))))
        ++j;
      cur_ = {Token::Type::Number, std::string(text_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if ((c == '<' || c == '>') && i_ + 1 < text_.size() && text_[i_ + 1] == '=') {
      cur_ = {Token::Type::Punct, std::string(text_.substr(i_, 2)), i_};
      i_ += 2;
      return;
    }
    cur_ = {Token::Type::Punct, std::string(1, c), i_};
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Token cur_;
};

class Parser {
public:
  Parser(std::string_view text, const SymbolTable& symbols)
      : lex_(text), symbols_(symbols) {}

  Expression parse_full() {
    Expression e = expr();
    expect_end();
    return e;
  }

  ConjectureLine parse_line() {
    Token name = lex_.take();
    if (name.type != Token::Type::Name)
      throw ParseError("expected an invariant name on the left-hand side", name.pos);
    skip_x_suffix();
    Token rel = lex_.take();
    if (rel.type != Token::Type::Punct || (rel.text != "<=" && rel.text != ">="))
      throw ParseError("expected '<=' or '>='", rel.pos);
    ConjectureLine line;
    line.target = name.text;
    line.direction = rel.text == "<=" ? Direction::Upper : Direction::Lower;
    line.rhs = expr();
    expect_end();
    return line;
  }

private:
  void expect_end() {
    if (lex_.peek().type != Token::Type::End)
      throw ParseError("unexpected trailing input", lex_.peek().pos);
  }

  bool eat_punct(std::string_view p) {
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == p) {
      lex_.take();
      return true;
    }
    return false;
  }

  void require_punct(std::string_view p) {
    Token t = lex_.take();
    if (t.type != Token::Type::Punct || t.text != p)
      throw ParseError("expected '" + std::string(p) + "'", t.pos);
  }

  void skip_x_suffix() {
    // Optional "(x)" after an invariant name.
    if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "(") {
      lex_.take();
      Token arg = lex_.take();
      if (arg.type != Token::Type::Name || arg.text != "x")
        throw ParseError("expected 'x' in invariant argument", arg.pos);
      require_punct(")");
    }
  }

  Expression expr() {
    Expression e = term();
    while (true) {
      if (eat_punct("+")) e = Expression::binary(OpCode::Add, e, term());
      else if (eat_punct("-")) e = Expression::binary(OpCode::Sub, e, term());
      else return e;
    }
  }

  Expression term() {
    Expression e = factor();
    while (true) {
      std::size_t pos = lex_.peek().pos;
      if (eat_punct("*")) {
        e = Expression::binary(OpCode::Mul, e, factor());
      } else if (eat_punct("/")) {
        Expression rhs = factor();
        e = fold_quotient(e, rhs, pos);
      } else {
        return e;
      }
    }
  }

  // A quotient of two constants becomes one exact rational constant, so
  // "1/2" is a leaf rather than a division tree.
  Expression fold_quotient(const Expression& l, const Expression& r, std::size_t pos) {
    if (l.kind() == Expression::Kind::Constant && r.kind() == Expression::Kind::Constant) {
      const Rational& a = l.constant_value();
      const Rational& b = r.constant_value();
      if (b.num == 0) throw ParseError("division of constants by zero", pos);
      return Expression::constant(
          Rational(a.num * b.den, a.den * b.num));
    }
    return Expression::binary(OpCode::Div, l, r);
  }

  Expression factor() {
    Expression base = atom();
    if (eat_punct("^")) return Expression::binary(OpCode::Pow, base, factor());
    return base;
  }

  Expression atom() {
    Token t = lex_.take();
    if (t.type == Token::Type::Number) return number(t);
    if (t.type == Token::Type::Punct && t.text == "(") {
      Expression e = expr();
      require_punct(")");
      return e;
    }
    if (t.type == Token::Type::Punct && t.text == "-") {
      Token n = lex_.take();
      if (n.type != Token::Type::Number)
        throw ParseError("expected a number after unary '-'", n.pos);
      Expression e = number(n);
      Rational v = e.constant_value();
      return Expression::constant(Rational(-v.num, v.den));
    }
    if (t.type != Token::Type::Name)
      throw ParseError("expected a name, number, or '('", t.pos);

    if (const OperatorSpec* op = find_operator(t.text)) {
      require_punct("(");
      Expression first = expr();
      if (op->arity == 1) {
        require_punct(")");
        return Expression::unary(op->code, first);
      }
      require_punct(",");
      Expression second = expr();
      require_punct(")");
      return Expression::binary(op->code, first, second);
    }

    const InvariantSymbol* sym = symbols_.find(t.text);
    if (!sym) throw ParseError("unknown name '" + t.text + "'", t.pos);
    skip_x_suffix();
    return Expression::symbol(*sym);
  }

  Expression number(const Token& t) {
    auto r = Rational::parse(t.text);
    if (!r) throw ParseError("bad numeric literal '" + t.text + "'", t.pos);
    return Expression::constant(*r);
  }

  Lexer lex_;
  const SymbolTable& symbols_;
};

}  // namespace

Expression parse_expression(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).parse_full();
}

ConjectureLine parse_conjecture_line(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).parse_line();
}

}  // namespace gconj

#include "mnring/cli/parse.hpp"

#include <cctype>
#include <limits>

namespace mnr::cli {

namespace {

struct Token {
  enum class Type { integer, atom, op, end };
  Type type;
  std::size_t offset;
  std::string text;  // digits, atom name, or the operator character
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::integer, i, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::atom, i, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Type::op, i, std::string(1, static_cast<char>(c))});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Type::end, s.size(), ""});
  return out;
}

ExprPtr node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->offset = offset;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t level) : tokens_(std::move(tokens)), level_(level) {}

  ExprPtr parse_all() {
    if (peek().type == Token::Type::end) throw ParseError(0, "empty expression");
    ExprPtr e = sum();
    if (peek().type != Token::Type::end) {
      if (is_op(")")) throw ParseError(peek().offset, "unmatched ')'");
      throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_op(const char* op) const { return peek().type == Token::Type::op && peek().text == op; }
  const Token& advance() { return tokens_[pos_++]; }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (is_op("+") || is_op("-")) {
      const Token& t = advance();
      ExprPtr rhs = product();
      lhs = node(t.text == "+" ? Expr::Kind::add : Expr::Kind::sub, t.offset, {lhs, rhs});
    }
    return lhs;
  }

  bool starts_primary() const {
    return peek().type == Token::Type::integer || peek().type == Token::Type::atom || is_op("(");
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      if (is_op("*") || is_op("/")) {
        const Token& t = advance();
        ExprPtr rhs = unary();
        lhs = node(t.text == "*" ? Expr::Kind::mul : Expr::Kind::div, t.offset, {lhs, rhs});
      } else if (starts_primary()) {
        const std::size_t offset = peek().offset;
        ExprPtr rhs = power();
        lhs = node(Expr::Kind::mul, offset, {lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (is_op("-")) {
      const Token& t = advance();
      return node(Expr::Kind::neg, t.offset, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!is_op("^")) return base;
    const Token& caret = advance();
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::pow;
    e->offset = caret.offset;
    e->args = {base};
    e->exponent = exponent();
    return e;
  }

  std::int64_t exponent() {
    const bool paren = is_op("(");
    if (paren) advance();
    bool negative = false;
    if (is_op("-")) {
      advance();
      negative = true;
    }
    if (peek().type != Token::Type::integer) throw ParseError(peek().offset, "expected an integer exponent");
    const Token& t = advance();
    Integer v(t.text);
    if (v > std::numeric_limits<std::int32_t>::max()) throw ParseError(t.offset, "exponent too large");
    if (paren) {
      if (!is_op(")")) throw ParseError(peek().offset, "expected ')'");
      advance();
    }
    const auto k = static_cast<std::int64_t>(v.get_si());
    return negative ? -k : k;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::integer: {
        advance();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::integer;
        e->offset = t.offset;
        e->value = Integer(t.text);
        return e;
      }
      case Token::Type::atom:
        advance();
        return atom(t);
      case Token::Type::op:
        if (t.text == "(") {
          advance();
          ExprPtr inner = sum();
          if (!is_op(")")) throw ParseError(peek().offset, "expected ')'");
          advance();
          return inner;
        }
        throw ParseError(t.offset, "unexpected '" + t.text + "'");
      case Token::Type::end:
        break;
    }
    throw ParseError(t.offset, "unexpected end of input");
  }

  ExprPtr atom(const Token& t) {
    if (t.text == "a") return node(Expr::Kind::alpha, t.offset);
    if (t.text == "s") return node(Expr::Kind::alpha_tail, t.offset);
    const char head = t.text[0];
    const std::string digits = t.text.substr(1);
    const bool numbered = !digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos;
    if (!numbered || (head != 'r' && head != 'x' && head != 't'))
      throw ParseError(t.offset, "unknown atom '" + t.text + "'");
    if (digits.size() > 9 || std::stoul(digits) == 0 || std::stoul(digits) > level_)
      throw ParseError(t.offset, "index out of range: " + t.text + " at level " + std::to_string(level_));
    auto e = std::make_shared<Expr>();
    e->kind = head == 'r' ? Expr::Kind::radical : head == 'x' ? Expr::Kind::generator : Expr::Kind::central;
    e->offset = t.offset;
    e->index = std::stoul(digits);
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t level_;
};

}  // namespace

ExprPtr parse(const std::string& text, std::size_t level) {
  return Parser(lex(text), level).parse_all();
}

std::string to_string(const Expr& e) {
  auto bin = [&](const char* op) {
    return "(" + to_string(*e.args[0]) + " " + op + " " + to_string(*e.args[1]) + ")";
  };
  switch (e.kind) {
    case Expr::Kind::integer: return e.value.get_str();
    case Expr::Kind::radical: return "r" + std::to_string(e.index);
    case Expr::Kind::generator: return "x" + std::to_string(e.index);
    case Expr::Kind::central: return "t" + std::to_string(e.index);
    case Expr::Kind::alpha: return "a";
    case Expr::Kind::alpha_tail: return "s";
    case Expr::Kind::add: return bin("+");
    case Expr::Kind::sub: return bin("-");
    case Expr::Kind::mul: return bin("*");
    case Expr::Kind::div: return bin("/");
    case Expr::Kind::neg: return "(-" + to_string(*e.args[0]) + ")";
    case Expr::Kind::pow: return "(" + to_string(*e.args[0]) + "^" + std::to_string(e.exponent) + ")";
  }
  return "?";
}

std::string render_diagnostic(const std::string& text, const ParseError& e) {
  return "error at offset " + std::to_string(e.offset()) + ": " + e.what() + "\n  " + text + "\n  " +
         std::string(e.offset(), ' ') + "^";
}

}  // namespace mnr::cli

#include "nclandau/expr.hpp"

#include <cctype>
#include <vector>

namespace nclandau {

namespace {

constexpr unsigned kMaxExponent = 64;

using NodePtr = std::shared_ptr<const ExprNode>;

struct Token {
  enum class Type { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
  Type type;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Token::Type t;
      switch (c) {
        case '+': t = Token::Type::plus; break;
        case '-': t = Token::Type::minus; break;
        case '*': t = Token::Type::star; break;
        case '^': t = Token::Type::caret; break;
        case '/': t = Token::Type::slash; break;
        case '(': t = Token::Type::lparen; break;
        case ')': t = Token::Type::rparen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", col);
      }
      out.push_back({t, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Token::Type::end, "", s.size() + 1});
  return out;
}

bool symbol_allowed(const std::string& s, ExprKind kind) {
  if (s == "x" || s == "y") return true;
  if (s == "px" || s == "py") return kind == ExprKind::phase;
  if (s == "t") return kind == ExprKind::series;
  return false;
}

bool known_symbol(const std::string& s) { return s == "x" || s == "y" || s == "px" || s == "py" || s == "t"; }

NodePtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
public:
  Parser(std::string_view text, ExprKind kind) : toks_(lex(text)), kind_(kind) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (peek().type != Token::Type::end) throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Token::Type t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      ExprNode::Op op;
      if (accept(Token::Type::plus))
        op = ExprNode::Op::add;
      else if (accept(Token::Type::minus))
        op = ExprNode::Op::sub;
      else
        return lhs;
      ExprNode n;
      n.op = op;
      n.lhs = lhs;
      n.rhs = term();
      lhs = make(std::move(n));
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (accept(Token::Type::star)) {
      ExprNode n;
      n.op = ExprNode::Op::mul;
      n.lhs = lhs;
      n.rhs = factor();
      lhs = make(std::move(n));
    }
    return lhs;
  }

  NodePtr factor() {
    if (accept(Token::Type::minus)) {
      ExprNode n;
      n.op = ExprNode::Op::neg;
      n.lhs = factor();
      return make(std::move(n));
    }
    NodePtr b = base();
    if (!accept(Token::Type::caret)) return b;
    const Token& t = next();
    if (t.type != Token::Type::number) throw ParseError("expected a non-negative integer exponent", t.column);
    if (t.text.size() > 3 || std::stoul(t.text) > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), t.column);
    ExprNode n;
    n.op = ExprNode::Op::pow;
    n.lhs = b;
    n.exponent = static_cast<unsigned>(std::stoul(t.text));
    return make(std::move(n));
  }

  NodePtr base() {
    const Token& t = next();
    switch (t.type) {
      case Token::Type::number: {
        Rational v(t.text);
        if (accept(Token::Type::slash)) {
          const Token& d = next();
          if (d.type != Token::Type::number) throw ParseError("expected a denominator", d.column);
          Rational den(d.text);
          if (den == 0) throw ParseError("zero denominator", d.column);
          v /= den;
        }
        ExprNode n;
        n.value = GaussianRational(v);
        return make(std::move(n));
      }
      case Token::Type::ident: {
        ExprNode n;
        if (t.text == "i") {
          n.value = GaussianRational::i();
          return make(std::move(n));
        }
        if (!known_symbol(t.text)) throw ParseError("unknown symbol '" + t.text + "'", t.column);
        if (!symbol_allowed(t.text, kind_))
          throw ParseError("symbol '" + t.text + "' not allowed in " + kind_name(kind_) + " expressions", t.column);
        n.op = ExprNode::Op::symbol;
        n.symbol = t.text;
        return make(std::move(n));
      }
      case Token::Type::lparen: {
        NodePtr e = expr();
        const Token& c = next();
        if (c.type != Token::Type::rparen) throw ParseError("expected ')'", c.column);
        return e;
      }
      case Token::Type::end:
        throw ParseError("unexpected end of input", t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ExprKind kind_;
};

int precedence(const ExprNode& n) {
  switch (n.op) {
    case ExprNode::Op::add:
    case ExprNode::Op::sub: return 1;
    case ExprNode::Op::mul: return 2;
    case ExprNode::Op::neg: return 3;
    case ExprNode::Op::pow: return 4;
    case ExprNode::Op::literal: return boost::multiprecision::denominator(n.value.re()) != 1 ? 4 : 5;
    case ExprNode::Op::symbol: return 5;
  }
  return 5;
}

std::string print(const ExprNode& n, int need) {
  std::string s;
  switch (n.op) {
    case ExprNode::Op::literal: s = to_string(n.value); break;
    case ExprNode::Op::symbol: s = n.symbol; break;
    case ExprNode::Op::add: s = print(*n.lhs, 1) + " + " + print(*n.rhs, 2); break;
    case ExprNode::Op::sub: s = print(*n.lhs, 1) + " - " + print(*n.rhs, 2); break;
    case ExprNode::Op::mul: s = print(*n.lhs, 2) + "*" + print(*n.rhs, 3); break;
    case ExprNode::Op::neg: s = "-" + print(*n.lhs, 3); break;
    case ExprNode::Op::pow: s = print(*n.lhs, 5) + "^" + std::to_string(n.exponent); break;
  }
  return precedence(n) < need ? "(" + s + ")" : s;
}

template <class T, class Leaf, class Mul>
T lower(const ExprNode& n, const Leaf& leaf, const Mul& mul, const T& one) {
  switch (n.op) {
    case ExprNode::Op::literal:
    case ExprNode::Op::symbol: return leaf(n);
    case ExprNode::Op::add: return lower(*n.lhs, leaf, mul, one) + lower(*n.rhs, leaf, mul, one);
    case ExprNode::Op::sub: return lower(*n.lhs, leaf, mul, one) - lower(*n.rhs, leaf, mul, one);
    case ExprNode::Op::mul: return mul(lower(*n.lhs, leaf, mul, one), lower(*n.rhs, leaf, mul, one));
    case ExprNode::Op::neg: return lower(*n.lhs, leaf, mul, one) * GaussianRational(-1);
    case ExprNode::Op::pow: {
      const T b = lower(*n.lhs, leaf, mul, one);
      T out = one;
      for (unsigned k = 0; k < n.exponent; ++k) out = mul(out, b);
      return out;
    }
  }
  return one;
}

void require_kind(const Expression& e, ExprKind k) {
  if (e.kind() != k)
    throw std::invalid_argument(std::string("expression parsed as ") + kind_name(e.kind()) + ", not " + kind_name(k));
}

template <std::size_t NV>
Poly<GaussianRational, NV> lower_poly(const Expression& e) {
  using P = Poly<GaussianRational, NV>;
  const auto leaf = [](const ExprNode& n) {
    if (n.op == ExprNode::Op::literal) return P::constant(n.value);
    const std::size_t v = n.symbol == "x" ? 0 : n.symbol == "y" ? 1 : n.symbol == "px" ? 2 : 3;
    return P::variable(v);
  };
  return lower<P>(e.root(), leaf, [](const P& a, const P& b) { return a * b; }, P::constant(GaussianRational(1)));
}

}  // namespace

const char* kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::config: return "config";
    case ExprKind::phase: return "phase";
    case ExprKind::series: return "series";
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::invalid_argument("column " + std::to_string(column) + ": " + message), message_(message), column_(column) {}

std::string Expression::to_string() const { return print(*root_, 0); }

Expression parse_expression(std::string_view text, ExprKind kind) { return Expression(kind, Parser(text, kind).parse()); }

ConfigPoly to_config_poly(const Expression& e) {
  require_kind(e, ExprKind::config);
  return lower_poly<2>(e);
}

PhasePoly to_phase_poly(const Expression& e) {
  require_kind(e, ExprKind::phase);
  return lower_poly<4>(e);
}

ThetaSeries to_theta_series(const Expression& e, int order) {
  require_kind(e, ExprKind::series);
  const auto leaf = [order](const ExprNode& n) {
    if (n.op == ExprNode::Op::literal) return ThetaSeries(order, ConfigPoly::constant(n.value));
    if (n.symbol == "t") return ThetaSeries::theta(order);
    return ThetaSeries(order, ConfigPoly::variable(n.symbol == "x" ? 0 : 1));
  };
  return lower<ThetaSeries>(e.root(), leaf, series_mul, ThetaSeries(order, ConfigPoly::constant(GaussianRational(1))));
}

std::string canonical_form(std::string_view text, ExprKind kind, int order) {
  const Expression e = parse_expression(text, kind);
  switch (kind) {
    case ExprKind::config: return to_config_poly(e).to_string();
    case ExprKind::phase: return to_phase_poly(e).to_string();
    case ExprKind::series: return to_theta_series(e, order).to_string();
  }
  return {};
}

}  // namespace nclandau

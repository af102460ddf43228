#pragma once

// Polynomial expression language for the command line.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := literal | symbol | '(' expr ')'
//
// Literals are integers, p/q rationals and the imaginary unit i. Symbols are
// x, y, px, py and t, where t stands for theta. Which symbols are allowed
// depends on the target kind: config (x, y), phase (x, y, px, py) or
// series (x, y, t). Whitespace is insignificant; there is no implicit
// multiplication.

#include "nclandau/theta_series.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nclandau {

enum class ExprKind { config, phase, series };

const char* kind_name(ExprKind k);

/// Lexical, syntax or kind error at a 1-based column.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::string message_;
  std::size_t column_;
};

struct ExprNode {
  enum class Op { literal, symbol, add, sub, mul, neg, pow };
  Op op = Op::literal;
  GaussianRational value;      // literal
  std::string symbol;          // symbol
  unsigned exponent = 0;       // pow
  std::shared_ptr<const ExprNode> lhs, rhs;  // rhs unused for neg and pow
};

class Expression {
public:
  Expression(ExprKind kind, std::shared_ptr<const ExprNode> root) : kind_(kind), root_(std::move(root)) {}
  ExprKind kind() const { return kind_; }
  const ExprNode& root() const { return *root_; }
  /// Tree printed with the minimal parentheses needed to reparse it.
  std::string to_string() const;

private:
  ExprKind kind_;
  std::shared_ptr<const ExprNode> root_;
};

Expression parse_expression(std::string_view text, ExprKind kind);

/// Lowerings; each requires the matching kind (std::invalid_argument otherwise).
ConfigPoly to_config_poly(const Expression& e);
PhasePoly to_phase_poly(const Expression& e);
ThetaSeries to_theta_series(const Expression& e, int order);

/// Parses and lowers in one step, returning the canonical printed form of
/// the result (series use the given order).
std::string canonical_form(std::string_view text, ExprKind kind, int order = 2);

}  // namespace nclandau

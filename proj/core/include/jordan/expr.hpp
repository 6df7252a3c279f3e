#pragma once

// Textual polynomial expressions:
//   (m+n)*T[x^2] - m*T[x]*x - n*x*T0[x]
// Juxtaposition also multiplies ("2m+n", "x y"). `[p, q]` is a commutator.
// Inside Combine certificates, `@label{x -> x+y}` cites an identity body.

#include "jordan/ncpoly.hpp"

#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jordan {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

/// Raised while evaluating a well-formed expression (kind mismatches, bad citations).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TokenKind { number, ident, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view text, int line, int first_column = 1);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, param_m, param_n, generator, apply, add, sub, neg, mul, pow, commutator, cite };

  Kind kind = Kind::number;
  BigInt number;
  Generator gen;
  MapSym map = MapSym::T;
  std::uint32_t exponent = 0;
  std::string label;
  std::vector<std::pair<Generator, ExprPtr>> subst;  // only for cite
  std::vector<ExprPtr> kids;
  int column = 0;
};

/// Collects the labels cited anywhere inside `e`.
void collect_citations(const ExprPtr& e, std::set<std::string>& out);

/// Recursive-descent parser over a token range. Stops at the first token that
/// cannot continue an expression, leaving it for the caller.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, std::size_t& pos, int line, const std::vector<Generator>& generators,
             bool allow_citations);

  ExprPtr parse();
  /// Parses `g -> expr (, g -> expr)*`.
  std::vector<std::pair<Generator, ExprPtr>> parse_substitution();

 private:
  ExprPtr sum();
  ExprPtr product();
  ExprPtr power();
  ExprPtr primary();
  bool starts_factor() const;
  bool is_generator(const std::string& s) const;
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(std::string_view s) const;
  void expect_symbol(std::string_view s);
  [[noreturn]] void fail(const std::string& msg) const;

  const std::vector<Token>& tokens_;
  std::size_t& pos_;
  int line_;
  const std::vector<Generator>& generators_;
  bool allow_citations_;
};

/// Result of evaluating an expression: a scalar, a ring element, or a member
/// of the ideal of verified identities (anything built from citations by
/// two-sided multiplication and addition).
struct Value {
  enum class Kind { scalar, element, ideal };
  Kind kind = Kind::scalar;
  ScalarPoly scalar;
  NCPoly poly;
};

/// Looks up a cited identity and applies a substitution to it.
using CitationResolver = std::function<NCPoly(const std::string& label, const Substitution& sigma)>;

Value evaluate(const ExprPtr& e, const CitationResolver& resolve);

/// Parses and evaluates a citation-free polynomial; scalar zero becomes the zero polynomial.
NCPoly parse_polynomial(std::string_view text, const std::vector<Generator>& generators = {kX, kY});
ScalarPoly parse_scalar(std::string_view text);

/// Evaluates a citation-free expression as a ring element (zero allowed).
NCPoly as_element(const Value& v, const std::string& what);

}  // namespace jordan

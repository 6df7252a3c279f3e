#include "jordan/expr.hpp"

#include <cctype>

namespace jordan {

std::vector<Token> tokenize(std::string_view text, int line, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return first_column + static_cast<int>(at); };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::number, std::string(text.substr(i, j - i)), col(i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({TokenKind::ident, std::string(text.substr(i, j - i)), col(i)});
      i = j;
      continue;
    }
    if (i + 1 < text.size()) {
      std::string_view two = text.substr(i, 2);
      if (two == "->" || two == "=>") {
        out.push_back({TokenKind::symbol, std::string(two), col(i)});
        i += 2;
        continue;
      }
    }
    static constexpr std::string_view singles = "+-*^()[]{},;=@";
    if (singles.find(ch) == std::string_view::npos)
      throw ParseError(std::string("unexpected character '") + ch + "'", line, col(i));
    out.push_back({TokenKind::symbol, std::string(1, ch), col(i)});
    ++i;
  }
  out.push_back({TokenKind::end, "", col(text.size())});
  return out;
}

void collect_citations(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == Expr::Kind::cite) out.insert(e->label);
  for (const auto& k : e->kids) collect_citations(k, out);
  for (const auto& [g, s] : e->subst) collect_citations(s, out);
}

// ---------------------------------------------------------------------------

ExprParser::ExprParser(const std::vector<Token>& tokens, std::size_t& pos, int line,
                       const std::vector<Generator>& generators, bool allow_citations)
    : tokens_(tokens), pos_(pos), line_(line), generators_(generators), allow_citations_(allow_citations) {}

void ExprParser::fail(const std::string& msg) const { throw ParseError(msg, line_, peek().column); }

bool ExprParser::at_symbol(std::string_view s) const {
  return peek().kind == TokenKind::symbol && peek().text == s;
}

void ExprParser::expect_symbol(std::string_view s) {
  if (!at_symbol(s)) fail("expected '" + std::string(s) + "' but found '" + peek().text + "'");
  ++pos_;
}

bool ExprParser::is_generator(const std::string& s) const {
  if (s.size() != 1) return false;
  for (Generator g : generators_)
    if (g.name == s[0]) return true;
  return false;
}

bool ExprParser::starts_factor() const {
  const Token& t = peek();
  if (t.kind == TokenKind::number) return true;
  if (t.kind == TokenKind::ident)
    return t.text == "m" || t.text == "n" || is_generator(t.text) || map_from_name(t.text).has_value();
  if (t.kind == TokenKind::symbol) return t.text == "(" || t.text == "[" || (t.text == "@" && allow_citations_);
  return false;
}

ExprPtr ExprParser::parse() {
  if (!starts_factor() && !at_symbol("-") && !at_symbol("+")) fail("expected a polynomial, found '" + peek().text + "'");
  return sum();
}

namespace {
ExprPtr node(Expr::Kind k, int column, std::vector<ExprPtr> kids = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->column = column;
  e->kids = std::move(kids);
  return e;
}
}  // namespace

ExprPtr ExprParser::sum() {
  ExprPtr acc;
  int column = peek().column;
  if (at_symbol("-")) {
    ++pos_;
    acc = node(Expr::Kind::neg, column, {product()});
  } else {
    if (at_symbol("+")) ++pos_;
    acc = product();
  }
  while (at_symbol("+") || at_symbol("-")) {
    bool minus = peek().text == "-";
    column = peek().column;
    ++pos_;
    acc = node(minus ? Expr::Kind::sub : Expr::Kind::add, column, {acc, product()});
  }
  return acc;
}

ExprPtr ExprParser::product() {
  ExprPtr acc = power();
  while (true) {
    int column = peek().column;
    if (at_symbol("*")) {
      ++pos_;
      acc = node(Expr::Kind::mul, column, {acc, power()});
    } else if (starts_factor()) {
      acc = node(Expr::Kind::mul, column, {acc, power()});
    } else {
      return acc;
    }
  }
}

ExprPtr ExprParser::power() {
  ExprPtr base = primary();
  if (!at_symbol("^")) return base;
  int column = peek().column;
  ++pos_;
  if (peek().kind != TokenKind::number) fail("exponent must be a nonnegative integer");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::pow;
  e->column = column;
  e->exponent = static_cast<std::uint32_t>(std::stoul(peek().text));
  e->kids = {base};
  ++pos_;
  return e;
}

ExprPtr ExprParser::primary() {
  const Token t = peek();
  if (t.kind == TokenKind::number) {
    ++pos_;
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::number;
    e->number = BigInt(t.text);
    e->column = t.column;
    return e;
  }
  if (t.kind == TokenKind::ident) {
    if (t.text == "m" || t.text == "n") {
      ++pos_;
      return node(t.text == "m" ? Expr::Kind::param_m : Expr::Kind::param_n, t.column);
    }
    if (is_generator(t.text)) {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::generator;
      e->gen = Generator{t.text[0]};
      e->column = t.column;
      return e;
    }
    if (auto sym = map_from_name(t.text)) {
      ++pos_;
      expect_symbol("[");
      ExprPtr arg = parse();
      expect_symbol("]");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::apply;
      e->map = *sym;
      e->kids = {arg};
      e->column = t.column;
      return e;
    }
    fail("unknown identifier '" + t.text + "'");
  }
  if (at_symbol("(")) {
    ++pos_;
    ExprPtr inner = parse();
    expect_symbol(")");
    return inner;
  }
  if (at_symbol("[")) {
    ++pos_;
    ExprPtr lhs = parse();
    expect_symbol(",");
    ExprPtr rhs = parse();
    expect_symbol("]");
    return node(Expr::Kind::commutator, t.column, {lhs, rhs});
  }
  if (at_symbol("@")) {
    if (!allow_citations_) fail("citations (@label) are only allowed in Combine certificates");
    ++pos_;
    if (peek().kind != TokenKind::ident && peek().kind != TokenKind::number) fail("expected a label after '@'");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::cite;
    e->label = peek().text;
    e->column = t.column;
    ++pos_;
    if (at_symbol("{")) {
      ++pos_;
      e->subst = parse_substitution();
      expect_symbol("}");
    }
    return e;
  }
  fail("unexpected '" + t.text + "'");
}

std::vector<std::pair<Generator, ExprPtr>> ExprParser::parse_substitution() {
  std::vector<std::pair<Generator, ExprPtr>> out;
  while (true) {
    if (peek().kind != TokenKind::ident || !is_generator(peek().text)) fail("expected a generator to substitute");
    Generator g{peek().text[0]};
    for (const auto& [h, e] : out)
      if (h == g) fail("generator substituted twice");
    ++pos_;
    expect_symbol("->");
    // Nested citations are never meaningful inside a substitution.
    bool saved = allow_citations_;
    allow_citations_ = false;
    ExprPtr r = parse();
    allow_citations_ = saved;
    out.emplace_back(g, r);
    if (!at_symbol(",")) return out;
    ++pos_;
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::scalar:
      return "scalar";
    case Value::Kind::element:
      return "ring element";
    case Value::Kind::ideal:
      return "cited identity";
  }
  return "?";
}

NCPoly poly_of(const Value& v) {
  if (v.kind != Value::Kind::scalar) return v.poly;
  if (v.scalar.is_zero()) return {};
  throw EvalError("a nonzero scalar is not a ring element (rings are not assumed unital)");
}

bool is_zero_value(const Value& v) { return v.kind == Value::Kind::scalar ? v.scalar.is_zero() : false; }

Value add_values(const Value& a, const Value& b, bool subtract) {
  if (a.kind == Value::Kind::scalar && b.kind == Value::Kind::scalar)
    return {Value::Kind::scalar, subtract ? a.scalar - b.scalar : a.scalar + b.scalar, {}};
  if (is_zero_value(a)) return subtract ? Value{b.kind, {}, -b.poly} : b;
  if (is_zero_value(b)) return a;
  if (a.kind != b.kind) {
    throw EvalError("cannot add a " + kind_name(a.kind) + " to a " + kind_name(b.kind) +
                    (a.kind == Value::Kind::ideal || b.kind == Value::Kind::ideal
                         ? ": every term of a certificate must cite an identity"
                         : ""));
  }
  return {a.kind, {}, subtract ? a.poly - b.poly : a.poly + b.poly};
}

Value mul_values(const Value& a, const Value& b) {
  using K = Value::Kind;
  if (a.kind == K::scalar && b.kind == K::scalar) return {K::scalar, a.scalar * b.scalar, {}};
  if (a.kind == K::scalar) return {b.kind, {}, a.scalar * b.poly};
  if (b.kind == K::scalar) return {a.kind, {}, b.scalar * a.poly};
  K k = (a.kind == K::ideal || b.kind == K::ideal) ? K::ideal : K::element;
  return {k, {}, a.poly * b.poly};
}

}  // namespace

Value evaluate(const ExprPtr& e, const CitationResolver& resolve) {
  using K = Value::Kind;
  switch (e->kind) {
    case Expr::Kind::number:
      return {K::scalar, ScalarPoly(e->number), {}};
    case Expr::Kind::param_m:
      return {K::scalar, ScalarPoly::m(), {}};
    case Expr::Kind::param_n:
      return {K::scalar, ScalarPoly::n(), {}};
    case Expr::Kind::generator:
      return {K::element, {}, NCPoly::generator(e->gen)};
    case Expr::Kind::apply: {
      Value arg = evaluate(e->kids[0], resolve);
      if (arg.kind == K::ideal) throw EvalError("a map cannot be applied to a cited identity");
      return {K::element, {}, NCPoly::apply(e->map, poly_of(arg))};
    }
    case Expr::Kind::add:
    case Expr::Kind::sub:
      return add_values(evaluate(e->kids[0], resolve), evaluate(e->kids[1], resolve), e->kind == Expr::Kind::sub);
    case Expr::Kind::neg: {
      Value v = evaluate(e->kids[0], resolve);
      if (v.kind == K::scalar) return {K::scalar, -v.scalar, {}};
      return {v.kind, {}, -v.poly};
    }
    case Expr::Kind::mul:
      return mul_values(evaluate(e->kids[0], resolve), evaluate(e->kids[1], resolve));
    case Expr::Kind::pow: {
      Value v = evaluate(e->kids[0], resolve);
      if (v.kind == K::scalar) return {K::scalar, v.scalar.pow(e->exponent), {}};
      if (e->exponent == 0) throw EvalError("zeroth power of a ring element needs a unit element");
      return {v.kind, {}, v.poly.pow(e->exponent)};
    }
    case Expr::Kind::commutator: {
      Value a = evaluate(e->kids[0], resolve);
      Value b = evaluate(e->kids[1], resolve);
      if (a.kind == K::scalar || b.kind == K::scalar) return {K::scalar, {}, {}};
      K k = (a.kind == K::ideal || b.kind == K::ideal) ? K::ideal : K::element;
      return {k, {}, commutator(a.poly, b.poly)};
    }
    case Expr::Kind::cite: {
      if (!resolve) throw EvalError("citation @" + e->label + " outside a certificate");
      Substitution sigma;
      for (const auto& [g, r] : e->subst) sigma[g] = as_element(evaluate(r, resolve), "substitution value");
      return {K::ideal, {}, resolve(e->label, sigma)};
    }
  }
  throw EvalError("unhandled expression node");
}

NCPoly as_element(const Value& v, const std::string& what) {
  if (v.kind == Value::Kind::ideal) throw EvalError(what + " may not cite identities");
  try {
    return poly_of(v);
  } catch (const EvalError& err) {
    throw EvalError(what + ": " + err.what());
  }
}

NCPoly parse_polynomial(std::string_view text, const std::vector<Generator>& generators) {
  auto tokens = tokenize(text, 1);
  std::size_t pos = 0;
  ExprParser parser(tokens, pos, 1, generators, false);
  ExprPtr e = parser.parse();
  if (tokens[pos].kind != TokenKind::end) throw ParseError("trailing input '" + tokens[pos].text + "'", 1, tokens[pos].column);
  return as_element(evaluate(e, {}), "polynomial");
}

ScalarPoly parse_scalar(std::string_view text) {
  auto tokens = tokenize(text, 1);
  std::size_t pos = 0;
  std::vector<Generator> none;
  ExprParser parser(tokens, pos, 1, none, false);
  ExprPtr e = parser.parse();
  if (tokens[pos].kind != TokenKind::end) throw ParseError("trailing input '" + tokens[pos].text + "'", 1, tokens[pos].column);
  Value v = evaluate(e, {});
  if (v.kind != Value::Kind::scalar) throw EvalError("expected a scalar in m and n");
  return v.scalar;
}

}  // namespace jordan

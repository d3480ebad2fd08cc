#include "qgb/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "qgb/errors.hpp"

namespace qgb {

std::string Token::describe() const {
  switch (kind) {
    case Kind::End: return "end of input";
    case Kind::Integer: return "integer '" + text + "'";
    case Kind::Ident: return "'" + text + "'";
    case Kind::Punct: return "'" + text + "'";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::Integer;
      t.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Token::Kind::Punct;
      t.text = "->";
      advance(2);
    } else if (std::string_view("+-*/^()[],;=:").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, col, {"token"}, std::string("character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// ------------------------------------------------------------ TokenCursor

const Token& TokenCursor::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

const Token& TokenCursor::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::accept(std::string_view punct) {
  if (!peek().is(punct)) return false;
  next();
  return true;
}

bool TokenCursor::accept_word(std::string_view word) {
  if (!peek().is_word(word)) return false;
  next();
  return true;
}

void TokenCursor::fail(std::vector<std::string> expected) const {
  const Token& t = peek();
  throw ParseError(t.line, t.column, std::move(expected), t.describe());
}

const Token& TokenCursor::expect(std::string_view punct) {
  if (!peek().is(punct)) fail({"'" + std::string(punct) + "'"});
  return next();
}

const Token& TokenCursor::expect_word(std::string_view word) {
  if (!peek().is_word(word)) fail({"'" + std::string(word) + "'"});
  return next();
}

const Token& TokenCursor::expect_ident(std::string_view what) {
  if (peek().kind != Token::Kind::Ident) fail({std::string(what)});
  return next();
}

const Token& TokenCursor::expect_integer() {
  if (peek().kind != Token::Kind::Integer) fail({"integer"});
  return next();
}

// ------------------------------------------------------------------- Expr

Expr Expr::number(Rational v) {
  Expr e;
  e.kind = Kind::Number;
  e.value = std::move(v);
  return e;
}

Expr Expr::var(std::string name) {
  Expr e;
  e.kind = Kind::Var;
  e.name = std::move(name);
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::neg(Expr arg) {
  Expr e;
  e.kind = Kind::Neg;
  e.args.push_back(std::move(arg));
  return e;
}

Expr Expr::power(Expr base, std::uint32_t exp) {
  Expr e;
  e.kind = Kind::Pow;
  e.exponent = exp;
  e.args.push_back(std::move(base));
  return e;
}

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Number: return value == o.value;
    case Kind::Var: return name == o.name;
    case Kind::Pow: return exponent == o.exponent && args == o.args;
    default: return args == o.args;
  }
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number: return e.value.get_den() == 1 ? 5 : 2;
    case Expr::Kind::Var: return 5;
  }
  return 0;
}

std::string render_at(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Number: s = e.value.get_str(); break;
    case Expr::Kind::Var: s = e.name; break;
    case Expr::Kind::Add: s = render_at(e.args[0], 1) + " + " + render_at(e.args[1], 2); break;
    case Expr::Kind::Sub: s = render_at(e.args[0], 1) + " - " + render_at(e.args[1], 2); break;
    case Expr::Kind::Mul: {
      // "-x*y" would re-parse as -(x*y)
      int left = e.args[0].kind == Expr::Kind::Neg ? 5 : 2;
      s = render_at(e.args[0], left) + "*" + render_at(e.args[1], 3);
      break;
    }
    case Expr::Kind::Neg: {
      const Expr& a = e.args[0];
      bool atom = a.kind == Expr::Kind::Var ||
                  (a.kind == Expr::Kind::Number && a.value.get_den() == 1);
      s = atom ? "-" + render_at(a, 5) : "-(" + render_at(a, 0) + ")";
      break;
    }
    case Expr::Kind::Pow: s = render_at(e.args[0], 5) + "^" + std::to_string(e.exponent); break;
  }
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

void collect_identifiers(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::Var) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  for (const auto& a : e.args) collect_identifiers(a, out);
}

Expr parse_atom(TokenCursor& cur);

Expr parse_power(TokenCursor& cur) {
  Expr base = parse_atom(cur);
  if (cur.accept("^")) {
    const Token& t = cur.expect_integer();
    BigInt e(t.text);
    if (e > std::numeric_limits<std::uint32_t>::max())
      throw ParseError(t.line, t.column, {"exponent below 2^32"}, t.describe());
    base = Expr::power(std::move(base), static_cast<std::uint32_t>(e.get_ui()));
  }
  return base;
}

Expr parse_term(TokenCursor& cur) {
  Expr lhs = parse_power(cur);
  while (cur.accept("*")) lhs = Expr::binary(Expr::Kind::Mul, std::move(lhs), parse_power(cur));
  return lhs;
}

Expr parse_atom(TokenCursor& cur) {
  const Token& t = cur.peek();
  if (t.kind == Token::Kind::Integer) {
    cur.next();
    Rational v{BigInt(t.text)};
    if (cur.accept("/")) {
      const Token& d = cur.expect_integer();
      BigInt den(d.text);
      if (den == 0) throw ParseError(d.line, d.column, {"nonzero denominator"}, d.describe());
      v = Rational(BigInt(t.text), den);
      v.canonicalize();
    }
    return Expr::number(std::move(v));
  }
  if (t.kind == Token::Kind::Ident) {
    cur.next();
    return Expr::var(t.text);
  }
  if (cur.accept("(")) {
    Expr inner = parse_expr(cur);
    cur.expect(")");
    return inner;
  }
  if (cur.accept("-")) return Expr::neg(parse_power(cur));
  cur.fail({"integer", "identifier", "'('", "'-'"});
}

}  // namespace

std::string Expr::render() const { return render_at(*this, 0); }

std::vector<std::string> Expr::identifiers() const {
  std::vector<std::string> out;
  collect_identifiers(*this, out);
  return out;
}

Expr parse_expr(TokenCursor& cur) {
  Expr lhs;
  if (cur.accept("-")) {
    lhs = Expr::neg(parse_term(cur));
  } else {
    cur.accept("+");
    lhs = parse_term(cur);
  }
  for (;;) {
    if (cur.accept("+")) {
      lhs = Expr::binary(Expr::Kind::Add, std::move(lhs), parse_term(cur));
    } else if (cur.accept("-")) {
      lhs = Expr::binary(Expr::Kind::Sub, std::move(lhs), parse_term(cur));
    } else {
      return lhs;
    }
  }
}

Expr parse_expr(std::string_view text) {
  TokenCursor cur(tokenize(text));
  Expr e = parse_expr(cur);
  if (!cur.at_end()) cur.fail({"operator", "end of input"});
  return e;
}

Polynomial evaluate(const Expr& e, const RingPtr& ring) {
  switch (e.kind) {
    case Expr::Kind::Number:
      try {
        return Polynomial::constant(ring, e.value);
      } catch (const std::exception& ex) {
        throw SemanticError(ex.what());
      }
    case Expr::Kind::Var:
      if (ring->vars().index_of(e.name) < 0)
        throw SemanticError("unknown variable '" + e.name + "'");
      return Polynomial::variable(ring, e.name);
    case Expr::Kind::Add: return evaluate(e.args[0], ring) + evaluate(e.args[1], ring);
    case Expr::Kind::Sub: return evaluate(e.args[0], ring) - evaluate(e.args[1], ring);
    case Expr::Kind::Mul: return evaluate(e.args[0], ring) * evaluate(e.args[1], ring);
    case Expr::Kind::Neg: return -evaluate(e.args[0], ring);
    case Expr::Kind::Pow: return pow(evaluate(e.args[0], ring), e.exponent);
  }
  return Polynomial(ring);
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return evaluate(parse_expr(text), ring);
}

}  // namespace qgb

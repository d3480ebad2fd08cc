// Tokenizer and polynomial expression trees shared by the script parser and
// parse_polynomial(). Expressions are parsed without knowing the ring and
// evaluated against one later.

#ifndef QGB_EXPR_HPP
#define QGB_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qgb/polyring.hpp"

namespace qgb {

struct Token {
  enum class Kind { Ident, Integer, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;

  bool is(std::string_view punct) const { return kind == Kind::Punct && text == punct; }
  bool is_word(std::string_view word) const { return kind == Kind::Ident && text == word; }
  std::string describe() const;
};

/// Splits text into identifiers, unsigned integers and punctuation.
/// `#` starts a comment running to the end of the line. "->" is one token.
std::vector<Token> tokenize(std::string_view text);

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool accept(std::string_view punct);
  bool accept_word(std::string_view word);
  const Token& expect(std::string_view punct);
  const Token& expect_word(std::string_view word);
  const Token& expect_ident(std::string_view what = "identifier");
  const Token& expect_integer();
  [[noreturn]] void fail(std::vector<std::string> expected) const;
  bool at_end() const { return peek().kind == Token::Kind::End; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct Expr {
  enum class Kind { Number, Var, Add, Sub, Mul, Pow, Neg };
  Kind kind = Kind::Number;
  Rational value;             // Number
  std::string name;           // Var
  std::uint32_t exponent = 0;  // Pow
  std::vector<Expr> args;

  static Expr number(Rational v);
  static Expr var(std::string name);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  static Expr neg(Expr arg);
  static Expr power(Expr base, std::uint32_t e);

  bool operator==(const Expr& o) const;
  std::string render() const;
  /// Identifiers in order of first appearance.
  std::vector<std::string> identifiers() const;
};

Expr parse_expr(TokenCursor& cur);
Expr parse_expr(std::string_view text);

/// Throws SemanticError for unknown variables or coefficients outside the
/// ring's base domain.
Polynomial evaluate(const Expr& e, const RingPtr& ring);

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace qgb

#endif  // QGB_EXPR_HPP

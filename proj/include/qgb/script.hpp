// Session scripts for the qgb command line tool.
//
//   ring R = ZZ mod 4;
//   vars x, y order lex;
//   ideal J = [2*x + 2, x^2];
//   map phi = (u, v) -> [x^2, x^3];
//   gb J;  nf (5*x) wrt J;  member (2*x) in J;  eliminate x from J;
//   intersect J K;  quot J K;  kernel phi;  syz J;  residues J;
//
// Ring forms: QQ, ZZ, ZZ mod m, GF(p), GR(q, m) rel f (q may be written
// p^n), quot(QQ | ZZ | GF(p), [relations]).

#ifndef QGB_SCRIPT_HPP
#define QGB_SCRIPT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qgb/expr.hpp"
#include "qgb/gb_engine.hpp"

namespace qgb {

struct RingSpec {
  enum class Kind { QQ, ZZ, ZZMod, GF, GR, Quot };
  Kind kind = Kind::QQ;
  /// m for ZZ mod m, p for GF(p), q or p for GR.
  BigInt number = 0;
  /// GR written as p^n: n. Zero when q was written out.
  std::uint32_t power = 0;
  /// GR: extension degree.
  std::uint32_t degree = 0;
  /// GR: the defining polynomial.
  Expr relation;
  /// quot: base (QQ, ZZ or GF) and its prime for GF.
  Kind quot_base = Kind::QQ;
  BigInt quot_prime = 0;
  std::vector<Expr> relations;

  bool operator==(const RingSpec& o) const;
};

struct Statement {
  enum class Kind {
    Ring, Vars, Ideal, Map,
    Gb, Nf, Member, Eliminate, Intersect, Quotient, Kernel, Syz, Residues,
  };
  Kind kind = Kind::Gb;
  int line = 0;
  /// Declared name, or the (first) ideal or map a command refers to.
  std::string name;
  /// Second ideal of intersect and quot.
  std::string other;
  RingSpec ring;
  /// vars, map sources, eliminated variables.
  std::vector<std::string> names;
  std::optional<OrderKind> order;
  /// Ideal generators or map images.
  std::vector<Expr> polys;
  /// Argument of nf and member.
  Expr poly;

  bool is_command() const { return kind >= Kind::Gb; }
  /// Equality ignores source positions.
  bool operator==(const Statement& o) const;
};

struct SessionScript {
  std::vector<Statement> statements;
  bool operator==(const SessionScript& o) const = default;
};

/// Throws ParseError.
SessionScript parse_script(std::string_view text);
std::string render(const Statement& s);
/// One statement per line; parse_script(render(s)) == s.
std::string render(const SessionScript& script);

struct RunOptions {
  CompletionOptions completion;
  bool show_lift = false;
};

/// Executes the commands in order, writing results to `out` as they
/// complete. Throws SemanticError and ResourceLimitExceeded.
void run(const SessionScript& script, const RunOptions& opts, std::ostream& out);

}  // namespace qgb

#endif  // QGB_SCRIPT_HPP

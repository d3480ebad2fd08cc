// Groebner bases over quotient coefficient rings by lifting.
//
// A RingTower describes A = R[x_1..x_n] with R = base[y_1..y_m] / I and base
// one of ZZ, QQ, GF(p). Everything is computed in the lifted ring
// T = base[x, y] under a block order with the x block above the y block:
// generators are lifted, the generators of I are adjoined, the ideal is
// completed in T, and the basis is projected back by reducing every
// coefficient modulo I.
//
// Elements of A are stored as their canonical lift (QuotientPoly), so
// equality in A is equality of representatives.

#ifndef QGB_PULLBACK_HPP
#define QGB_PULLBACK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgb/gb_engine.hpp"
#include "qgb/polyring.hpp"
#include "qgb/reduction.hpp"

namespace qgb {

enum class TowerFlavor {
  PlainBase,          // ZZ, QQ or GF(p) itself
  ModularInteger,     // ZZ / m
  FieldPolyQuotient,  // K[y..] / I with K = QQ or GF(p)
  AlgebraicNumber,    // ZZ[y] / <p(y)>, p primitive
  GaloisRing,         // ZZ[y] / <f, p^n>, f monic and irreducible mod p
};

std::string to_string(TowerFlavor flavor);

/// Canonical lift of an element of A: integer coefficients in [0, m),
/// y-parts fully reduced by the relation basis.
struct QuotientPoly {
  Polynomial rep;
  bool is_zero() const { return rep.is_zero(); }
  bool operator==(const QuotientPoly& o) const { return rep == o.rep; }
};

/// A T-level ring for a tower together with the relation basis expressed in
/// it. Every layout places the relation block last.
struct Layout {
  RingPtr ring;
  Basis relations;
};

class RingTower {
 public:
  static RingTower plain(BaseDomain base, std::vector<std::string> x,
                         OrderKind order = OrderKind::GrevLex);
  /// Throws SemanticError unless m >= 2.
  static RingTower modular(const BigInt& m, std::vector<std::string> x,
                           OrderKind order = OrderKind::GrevLex);
  /// Relations are polynomials in y over the field. When they are not a
  /// Groebner basis they are completed first and a notice is recorded.
  static RingTower field_quotient(BaseDomain field, std::vector<std::string> y,
                                  const std::vector<std::string>& relations,
                                  std::vector<std::string> x, OrderKind order = OrderKind::GrevLex);
  /// Minimal polynomial over QQ; stored as its primitive integer multiple.
  static RingTower algebraic(std::string y, std::string_view minimal_poly,
                             std::vector<std::string> x, OrderKind order = OrderKind::GrevLex);
  /// GR(p^n, deg f). Throws SemanticError unless p is prime, n >= 1 and f is
  /// monic, univariate in y and irreducible modulo p.
  static RingTower galois(const BigInt& p, unsigned n, std::string y, std::string_view f,
                          std::vector<std::string> x, OrderKind order = OrderKind::GrevLex);

  TowerFlavor flavor() const { return flavor_; }
  const BaseDomain& base() const { return base_; }
  const std::vector<std::string>& main_vars() const { return x_; }
  OrderKind main_order() const { return order_; }
  const std::vector<std::string>& relation_vars() const { return y_; }
  bool has_relation_vars() const { return !y_.empty(); }

  /// Standard T-level ring: [x: main order] > [y: grevlex].
  const RingPtr& ring() const { return standard_.ring; }
  const Layout& standard() const { return standard_; }
  /// Relations as supplied (after normalization), in the standard ring.
  const std::vector<Polynomial>& relations() const { return relations_; }
  const Basis& relation_basis() const { return standard_.relations; }
  const std::vector<std::string>& notices() const { return notices_; }

  /// Whether projected bases over this tower are strong.
  bool strong_projection() const;
  /// m for ModularInteger, p^n for GaloisRing, 0 otherwise.
  const BigInt& modulus() const { return modulus_; }
  std::string describe() const;

  /// Same coefficient ring, other main variables.
  RingTower with_main_vars(std::vector<std::string> x, OrderKind order) const;
  /// A T-level ring with the given blocks in front of the relation block.
  Layout layout(std::vector<VariableBlock> front) const;

  /// Canonical image of f, which may live in any layout ring of this tower.
  QuotientPoly project(const Polynomial& f) const;
  Polynomial lift(const QuotientPoly& q) const { return q.rep; }
  QuotientPoly parse(std::string_view text) const;
  /// Coefficients in y are grouped per x-monomial: (3*y + 3)*x + 2.
  std::string render(const QuotientPoly& q) const;

  QuotientPoly add(const QuotientPoly& a, const QuotientPoly& b) const;
  QuotientPoly sub(const QuotientPoly& a, const QuotientPoly& b) const;
  QuotientPoly mul(const QuotientPoly& a, const QuotientPoly& b) const;

 private:
  RingTower() = default;
  void build(std::vector<Polynomial> relations);
  const Basis& relations_in(const RingPtr& ring, Basis& scratch) const;

  TowerFlavor flavor_ = TowerFlavor::PlainBase;
  BaseDomain base_ = BaseDomain::integers();
  std::vector<std::string> x_;
  OrderKind order_ = OrderKind::GrevLex;
  std::vector<std::string> y_;
  std::vector<std::string> relation_text_;
  std::vector<Polynomial> relations_;
  Layout standard_;
  std::vector<std::string> notices_;
  BigInt modulus_ = 0;
  BigInt galois_p_ = 0;
  unsigned galois_n_ = 0;
};

struct PullbackGB {
  RingTower tower;
  /// T-level ring of t_basis.
  RingPtr ring;
  /// The T-level basis, relation part included.
  std::vector<Polynomial> t_basis;
  /// Projected basis: nonzero images of t_basis, sorted.
  std::vector<QuotientPoly> basis;
  /// basis[k] is the image of t_basis[source[k]].
  std::vector<std::size_t> source;
  bool strong = false;
  /// Transition data over the inputs (relations first, then lifts) when
  /// requested.
  std::optional<TrackedBasis> tracked;
  std::size_t nrelations = 0;
  std::size_t nlifts = 0;

  std::string order_description() const { return ring->order().describe(); }
};

struct PullbackOptions {
  CompletionOptions completion;
  bool track = false;
};

/// Lifts, adjoins the relations, completes in T and projects. Zero
/// generators are dropped.
PullbackGB gb_quotient(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                       const PullbackOptions& opts = {});

/// gb_quotient over GR(p^n, deg f).
PullbackGB gb_galois(const BigInt& p, unsigned n, const std::string& y, std::string_view f,
                     const std::vector<std::string>& gens, const std::vector<std::string>& x,
                     OrderKind order = OrderKind::GrevLex);

/// Completes lifted generators in an arbitrary layout of the tower. Inputs
/// must already live in layout.ring.
PullbackGB complete_in_layout(const RingTower& tower, const Layout& layout,
                              const std::vector<Polynomial>& lifts, const PullbackOptions& opts);

/// Builds a PullbackGB over `tower` from T-level basis elements that live in
/// (or transfer to) the tower's standard ring. Used for contractions.
PullbackGB from_t_basis(const RingTower& tower, std::vector<Polynomial> t_basis);

/// Leading data of f as an element of A: the x-monomial and its coefficient
/// (a polynomial in y, or a constant when there is no y-block).
struct XLead {
  Polynomial lc;
  Monomial lm;
};
XLead x_lead(const Polynomial& f);

/// Drops the x-terms whose y-coefficient lies in I.
Polynomial real_representation(const Polynomial& g, const RingTower& tower);

struct Membership {
  bool member = false;
  /// f = sum cofactors[k] * basis[k] in A when member.
  std::vector<QuotientPoly> cofactors;
};

Membership member(const QuotientPoly& f, const PullbackGB& gb);

/// Canonical representative of f modulo the ideal.
QuotientPoly normal_form_quotient(const QuotientPoly& f, const PullbackGB& gb);

/// All canonical residues of A / J, sorted. Throws SemanticError when the
/// quotient is infinite and ResourceLimitExceeded when there are more than
/// `bound` of them.
std::vector<QuotientPoly> enumerate_residues(const PullbackGB& gb, std::size_t bound = 100000);

/// Number of residues without listing them; nullopt for an infinite quotient.
std::optional<BigInt> count_residues(const PullbackGB& gb);

struct QuotientDivision {
  std::vector<QuotientPoly> cofactors;
  QuotientPoly remainder;
};

/// Division in A itself: each step solves the leading-coefficient equation
/// in R and cancels the leading x-term.
QuotientDivision divide_in_quotient(const QuotientPoly& f, const std::vector<QuotientPoly>& divisors,
                                    const RingTower& tower);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of q. q must be a nonzero polynomial over QQ.
Polynomial minimal_poly_to_primitive(const Polynomial& q);

/// Whether the univariate integer polynomial with the given coefficients
/// (constant term first) is irreducible modulo p.
bool irreducible_mod_p(const std::vector<BigInt>& coeffs, const BigInt& p);

}  // namespace qgb

#endif  // QGB_PULLBACK_HPP

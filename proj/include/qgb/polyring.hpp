// Sparse multivariate polynomials over a BaseDomain.
//
// A PolyRing bundles the coefficient domain, the variable names and the
// monomial order. Variables are grouped into blocks; the order compares
// block by block (first block most significant), each block with its own
// lex / grlex / grevlex rule. A ring with a single block is an ordinary
// lex / grlex / grevlex ring; several blocks give elimination orders.
//
// Polynomials keep their terms sorted strictly descending, with no zero
// coefficients, so the leading term is always terms().front().

#ifndef QGB_POLYRING_HPP
#define QGB_POLYRING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qgb/coeffarith.hpp"

namespace qgb {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// this | other
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// other must divide this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& o) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

enum class OrderKind { Lex, GrLex, GrevLex };

std::string to_string(OrderKind kind);
OrderKind order_kind_from_string(std::string_view name);

/// What a block of variables stands for in a lifted ring.
enum class BlockRole {
  Main,      // x-variables of the polynomial ring A
  Relation,  // y-variables carrying the defining relations of the coefficients
  Tag,       // auxiliary elimination variable (intersection)
  Source,    // source variables of an algebra map (kernel)
};

struct VariableBlock {
  std::string label;
  BlockRole role = BlockRole::Main;
  OrderKind order = OrderKind::GrevLex;
  std::vector<std::string> names;
};

class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<VariableBlock> blocks);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VariableBlock>& blocks() const { return blocks_; }
  /// Index of the first variable of block b.
  std::size_t block_offset(std::size_t b) const { return offsets_[b]; }
  BlockRole role_of(std::size_t var) const { return roles_[var]; }
  bool has_role(BlockRole role) const;

  /// Index of a variable, or -1.
  int index_of(std::string_view name) const;

  bool operator==(const VariableSet& o) const;

 private:
  std::vector<VariableBlock> blocks_;
  std::vector<std::string> names_;
  std::vector<std::size_t> offsets_;
  std::vector<BlockRole> roles_;
};

class MonomialOrder {
 public:
  struct Segment {
    std::size_t begin;
    std::size_t end;
    OrderKind kind;
  };

  MonomialOrder() = default;
  explicit MonomialOrder(const VariableSet& vars);
  static MonomialOrder single(std::size_t nvars, OrderKind kind);

  /// Throws std::invalid_argument when the exponent vectors have different
  /// lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t nvars() const { return nvars_; }
  std::string describe() const;

 private:
  std::vector<Segment> segments_;
  std::size_t nvars_ = 0;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(BaseDomain domain, VariableSet vars);
  static RingPtr make(BaseDomain domain, VariableSet vars);
  /// One block of main variables with the given order.
  static RingPtr make(BaseDomain domain, std::vector<std::string> names,
                      OrderKind kind = OrderKind::GrevLex);

  const BaseDomain& domain() const { return domain_; }
  const VariableSet& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }

  bool same_as(const PolyRing& o) const;

 private:
  BaseDomain domain_;
  VariableSet vars_;
  MonomialOrder order_;
};

struct Term {
  Coeff coeff;
  Monomial mono;
};

class Polynomial;

struct LeadingData {
  Term lt;
  const Monomial& lm() const { return lt.mono; }
  const Coeff& lc() const { return lt.coeff; }
};

/// Leading data of f viewed in (base[y])[x]: f = LC_x(f) * LM_x(f) + lower.
struct LeadingDataX;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: sorts, merges equal monomials, drops zeros, normalizes
  /// coefficients into the domain.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Coeff& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }
  LeadingData leading_data() const { return {leading_term()}; }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  /// this - c * m * g, the workhorse of every reduction.
  Polynomial sub_mul_term(const Coeff& c, const Monomial& m, const Polynomial& g) const;
  /// Drops the leading term.
  Polynomial tail() const;

  /// Degree in variable i.
  std::uint32_t degree_in(std::size_t var) const;
  /// Whether any term involves variable i.
  bool involves(std::size_t var) const;
  std::uint64_t total_degree() const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

struct LeadingDataX {
  Polynomial lc_x;    // coefficient in the relation variables
  Monomial lm_x;      // x-monomial, relation exponents zero
  Polynomial lt_x;    // lc_x * lm_x
};

/// Throws std::domain_error for f = 0 and std::invalid_argument when the
/// ring has no relation block.
LeadingDataX leading_data_x(const Polynomial& f);

/// Groups the terms of f by their x-part (non-relation variables). Keys are
/// x-monomials with zero relation exponents; values are the coefficients in
/// the relation variables.
std::vector<std::pair<Monomial, Polynomial>> split_by_x(const Polynomial& f);

/// Re-expresses f in another ring by variable name. Throws
/// std::invalid_argument if f uses a variable the target lacks.
Polynomial transfer(const Polynomial& f, const RingPtr& target);

/// Substitutes images[i] for variable i of f's ring; images live in a
/// common target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target);

Polynomial pow(const Polynomial& f, std::uint32_t e);

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);

}  // namespace qgb

#endif  // QGB_POLYRING_HPP

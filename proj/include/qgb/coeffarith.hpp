// Exact coefficient arithmetic over the base domains ZZ, QQ and GF(p).
//
// Every polynomial coefficient in the engine is a `Coeff`. A `BaseDomain`
// decides which rationals are legal values (integers for ZZ, least
// nonnegative residues for GF(p)) and supplies the two solvers every
// reduction rests on: coefficient ideal membership with a witness, and
// generators for the coefficient syzygy module.

#ifndef QGB_COEFFARITH_HPP
#define QGB_COEFFARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgb {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Storage type for polynomial coefficients of every base domain.
using Coeff = mpq_class;

struct ExtGcd {
  BigInt g;
  BigInt u;
  BigInt v;
};

/// Extended Euclid: g = gcd(a, b) >= 0 and u*a + v*b = g.
/// ext_gcd(0, 0) = (0, 0, 0).
ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

bool is_probable_prime(const BigInt& n);

/// Element of GF(p) stored as its least nonnegative residue.
class PrimeFieldElem {
 public:
  PrimeFieldElem(BigInt value, BigInt modulus);

  const BigInt& residue() const { return residue_; }
  const BigInt& modulus() const { return modulus_; }

  PrimeFieldElem operator+(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-(const PrimeFieldElem& o) const;
  PrimeFieldElem operator*(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-() const;
  PrimeFieldElem inverse() const;

  bool is_zero() const { return residue_ == 0; }
  bool operator==(const PrimeFieldElem& o) const {
    return residue_ == o.residue_ && modulus_ == o.modulus_;
  }

 private:
  void check_same_field(const PrimeFieldElem& o) const;

  BigInt residue_;
  BigInt modulus_;
};

class BaseDomain {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static BaseDomain integers();
  static BaseDomain rationals();
  /// Throws std::invalid_argument unless p is prime.
  static BaseDomain prime_field(const BigInt& p);

  Kind kind() const { return kind_; }
  const BigInt& characteristic() const { return modulus_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  std::string name() const;

  /// Maps a rational into the domain's canonical subset. Over ZZ the input
  /// must be an integer; over GF(p) the denominator is inverted mod p.
  Coeff normalize(const Coeff& c) const;
  bool contains(const Coeff& c) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;

  bool is_unit(const Coeff& a) const;
  Coeff inverse(const Coeff& a) const;

  /// a | b in the domain.
  bool divides(const Coeff& a, const Coeff& b) const;
  /// b / a, requires divides(a, b).
  Coeff exact_quotient(const Coeff& b, const Coeff& a) const;

  /// Generator of <a, b> (nonnegative over ZZ, 0 or 1 over a field) with
  /// Bezout witnesses.
  struct Bezout {
    Coeff g;
    Coeff u;
    Coeff v;
  };
  Bezout gcd_ext(const Coeff& a, const Coeff& b) const;
  /// Generator of <a> ∩ <b>.
  Coeff lcm(const Coeff& a, const Coeff& b) const;

  /// Unit u with u*a in normal form: positive over ZZ, 1 over a field.
  Coeff normalizing_unit(const Coeff& a) const;

  /// Returns mu with target = sum gens[i] * mu[i], or nullopt when target is
  /// not in the ideal generated by gens.
  std::optional<std::vector<Coeff>> solve_membership(
      const Coeff& target, const std::vector<Coeff>& gens) const;

  /// Generators of { mu : sum gens[i] * mu[i] = 0 }.
  std::vector<std::vector<Coeff>> syzygy_generators(
      const std::vector<Coeff>& gens) const;

  std::string render(const Coeff& c) const;

  bool operator==(const BaseDomain& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const BaseDomain& o) const { return !(*this == o); }

 private:
  BaseDomain(Kind kind, BigInt modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  BigInt reduce(const BigInt& n) const;

  Kind kind_;
  BigInt modulus_;  // p for PrimeField, 0 otherwise
};

/// Least nonnegative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace qgb

#endif  // QGB_COEFFARITH_HPP

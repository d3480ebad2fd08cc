#include "qgb/coeffarith.hpp"

#include <utility>

namespace qgb {

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r == 0) return {0, 0, 0};
  return {old_r, old_s, old_t};
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------

PrimeFieldElem::PrimeFieldElem(BigInt value, BigInt modulus)
    : residue_(mod_floor(value, modulus)), modulus_(std::move(modulus)) {
  if (!is_probable_prime(modulus_))
    throw std::invalid_argument("GF(p) modulus must be prime");
}

void PrimeFieldElem::check_same_field(const PrimeFieldElem& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("GF(p) elements from different fields");
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& o) const {
  check_same_field(o);
  return {residue_ + o.residue_, modulus_};
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& o) const {
  check_same_field(o);
  return {residue_ - o.residue_, modulus_};
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& o) const {
  check_same_field(o);
  return {residue_ * o.residue_, modulus_};
}

PrimeFieldElem PrimeFieldElem::operator-() const { return {-residue_, modulus_}; }

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (residue_ == 0) throw std::domain_error("inverse of zero in GF(p)");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
  return {inv, modulus_};
}

// ---------------------------------------------------------------------------

BaseDomain BaseDomain::integers() { return {Kind::Integers, 0}; }
BaseDomain BaseDomain::rationals() { return {Kind::Rationals, 0}; }

BaseDomain BaseDomain::prime_field(const BigInt& p) {
  if (!is_probable_prime(p)) throw std::invalid_argument("GF(" + p.get_str() + "): modulus is not prime");
  return {Kind::PrimeField, p};
}

std::string BaseDomain::name() const {
  switch (kind_) {
    case Kind::Integers: return "ZZ";
    case Kind::Rationals: return "QQ";
    case Kind::PrimeField: return "GF(" + modulus_.get_str() + ")";
  }
  return "?";
}

BigInt BaseDomain::reduce(const BigInt& n) const { return mod_floor(n, modulus_); }

Coeff BaseDomain::normalize(const Coeff& c) const {
  switch (kind_) {
    case Kind::Integers:
      if (c.get_den() != 1) throw std::invalid_argument("non-integer coefficient " + c.get_str() + " over ZZ");
      return c;
    case Kind::Rationals:
      return c;
    case Kind::PrimeField: {
      BigInt num = reduce(c.get_num());
      if (c.get_den() != 1) {
        BigInt den = reduce(c.get_den());
        if (den == 0) throw std::domain_error("denominator vanishes in " + name());
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
        num = reduce(num * inv);
      }
      return Coeff(num);
    }
  }
  return c;
}

bool BaseDomain::contains(const Coeff& c) const {
  switch (kind_) {
    case Kind::Integers: return c.get_den() == 1;
    case Kind::Rationals: return true;
    case Kind::PrimeField: return c.get_den() == 1 && c >= 0 && c.get_num() < modulus_;
  }
  return false;
}

Coeff BaseDomain::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::PrimeField) return Coeff(reduce(a.get_num() + b.get_num()));
  return a + b;
}

Coeff BaseDomain::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::PrimeField) return Coeff(reduce(a.get_num() - b.get_num()));
  return a - b;
}

Coeff BaseDomain::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::PrimeField) return Coeff(reduce(a.get_num() * b.get_num()));
  return a * b;
}

Coeff BaseDomain::neg(const Coeff& a) const {
  if (kind_ == Kind::PrimeField) return Coeff(reduce(-a.get_num()));
  return -a;
}

bool BaseDomain::is_unit(const Coeff& a) const {
  if (kind_ == Kind::Integers) return a == 1 || a == -1;
  return a != 0;
}

Coeff BaseDomain::inverse(const Coeff& a) const {
  if (!is_unit(a)) throw std::domain_error(a.get_str() + " is not a unit in " + name());
  switch (kind_) {
    case Kind::Integers: return a;
    case Kind::Rationals: return 1 / a;
    case Kind::PrimeField: return Coeff(PrimeFieldElem(a.get_num(), modulus_).inverse().residue());
  }
  return a;
}

bool BaseDomain::divides(const Coeff& a, const Coeff& b) const {
  if (kind_ != Kind::Integers) return a != 0 || b == 0;
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_num_mpz_t(), a.get_num_mpz_t()) != 0;
}

Coeff BaseDomain::exact_quotient(const Coeff& b, const Coeff& a) const {
  if (!divides(a, b)) throw std::domain_error(a.get_str() + " does not divide " + b.get_str());
  if (b == 0) return Coeff(0);
  switch (kind_) {
    case Kind::Integers: {
      BigInt q;
      mpz_divexact(q.get_mpz_t(), b.get_num_mpz_t(), a.get_num_mpz_t());
      return Coeff(q);
    }
    case Kind::Rationals: return b / a;
    case Kind::PrimeField: return mul(b, inverse(a));
  }
  return b;
}

BaseDomain::Bezout BaseDomain::gcd_ext(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Integers) {
    ExtGcd e = ext_gcd(a.get_num(), b.get_num());
    return {Coeff(e.g), Coeff(e.u), Coeff(e.v)};
  }
  if (a != 0) return {Coeff(1), inverse(a), Coeff(0)};
  if (b != 0) return {Coeff(1), Coeff(0), inverse(b)};
  return {Coeff(0), Coeff(0), Coeff(0)};
}

Coeff BaseDomain::lcm(const Coeff& a, const Coeff& b) const {
  if (a == 0 || b == 0) return Coeff(0);
  if (kind_ != Kind::Integers) return Coeff(1);
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  return Coeff(l);
}

Coeff BaseDomain::normalizing_unit(const Coeff& a) const {
  if (a == 0) return Coeff(1);
  if (kind_ == Kind::Integers) return Coeff(a < 0 ? -1 : 1);
  return inverse(a);
}

std::optional<std::vector<Coeff>> BaseDomain::solve_membership(
    const Coeff& target, const std::vector<Coeff>& gens) const {
  if (gens.empty()) throw std::invalid_argument("solve_membership: empty generator list");
  std::vector<Coeff> mu(gens.size(), Coeff(0));
  if (target == 0) return mu;

  if (kind_ != Kind::Integers) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] != 0) {
        mu[i] = exact_quotient(target, gens[i]);
        return mu;
      }
    }
    return std::nullopt;
  }

  // Fold extended Euclid over the list: g = sum gens[i] * w[i].
  BigInt g = 0;
  std::vector<BigInt> w(gens.size(), BigInt(0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ExtGcd e = ext_gcd(g, gens[i].get_num());
    for (std::size_t j = 0; j < i; ++j) w[j] *= e.u;
    w[i] = e.v;
    g = e.g;
  }
  if (g == 0 || !mpz_divisible_p(target.get_num_mpz_t(), g.get_mpz_t())) return std::nullopt;
  BigInt scale = target.get_num() / g;
  for (std::size_t i = 0; i < gens.size(); ++i) mu[i] = Coeff(BigInt(w[i] * scale));
  return mu;
}

std::vector<std::vector<Coeff>> BaseDomain::syzygy_generators(
    const std::vector<Coeff>& gens) const {
  if (gens.empty()) throw std::invalid_argument("syzygy_generators: empty generator list");
  const std::size_t m = gens.size();
  std::vector<std::vector<Coeff>> out;
  auto unit_vector = [m](std::size_t i) {
    std::vector<Coeff> v(m, Coeff(0));
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < m; ++i)
    if (gens[i] == 0) out.push_back(unit_vector(i));

  if (kind_ != Kind::Integers) {
    // Kernel basis of a 1 x m matrix: pivot on the first nonzero entry.
    std::size_t pivot = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (gens[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == m) return out;
    for (std::size_t j = pivot + 1; j < m; ++j) {
      if (gens[j] == 0) continue;
      std::vector<Coeff> v(m, Coeff(0));
      v[pivot] = gens[j];
      v[j] = neg(gens[pivot]);
      out.push_back(std::move(v));
    }
    return out;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (gens[i] == 0) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (gens[j] == 0) continue;
      BigInt g = gcd(gens[i].get_num(), gens[j].get_num());
      std::vector<Coeff> v(m, Coeff(0));
      v[i] = Coeff(BigInt(gens[j].get_num() / g));
      v[j] = Coeff(BigInt(-gens[i].get_num() / g));
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string BaseDomain::render(const Coeff& c) const { return c.get_str(); }

}  // namespace qgb

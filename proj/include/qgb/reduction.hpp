// Reduction of a polynomial by a list of divisors, in three regimes:
//
//   divide           several divisors may cancel the leading term together;
//                    the coefficient equation is solved over the base domain
//   strong_reduce    exactly one divisor per step, whose leading term divides
//                    the current leading term including the coefficient
//   canonical_normal_form
//                    strong reduction followed by replacing each surviving
//                    coefficient by its least nonnegative residue modulo the
//                    leading-coefficient ideal at that monomial
//
// The base domain and monomial order come from the polynomials' ring.

#ifndef QGB_REDUCTION_HPP
#define QGB_REDUCTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "qgb/polyring.hpp"

namespace qgb {

enum class ReductionScope {
  Head,  // stop at the first irreducible leading term
  Full,  // also reduce every lower term
};

struct DivisionOutcome {
  std::vector<Polynomial> cofactors;  // one per divisor
  Polynomial remainder;
  std::size_t steps = 0;
};

/// One reduction step of f's leading term. nullopt when f is minimal with
/// respect to F.
std::optional<Polynomial> reduce_step(const Polynomial& f, std::span<const Polynomial> divisors);

/// f = sum cofactors[i] * divisors[i] + remainder with LM(h_i f_i) <= LM(f).
DivisionOutcome divide(const Polynomial& f, std::span<const Polynomial> divisors,
                       ReductionScope scope = ReductionScope::Full);

/// Single-divisor reduction; ties go to the lowest index.
DivisionOutcome strong_reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                              ReductionScope scope = ReductionScope::Full);

/// A list of polynomials plus the producer's claim that it is a strong
/// Groebner basis of the ideal it generates.
struct Basis {
  std::vector<Polynomial> elements;
  bool strong = false;
};

/// Unique representative of f modulo <G>. Throws std::invalid_argument when
/// G is not flagged strong.
DivisionOutcome canonical_normal_form(const Polynomial& f, const Basis& basis);

}  // namespace qgb

#endif  // QGB_REDUCTION_HPP

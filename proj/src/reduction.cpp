#include "qgb/reduction.hpp"

#include <stdexcept>

namespace qgb {

namespace {

/// Accumulates cofactor terms and remainder terms; the remainder arrives in
/// descending order so it is appended directly.
class DivisionRecorder {
 public:
  DivisionRecorder(const RingPtr& ring, std::size_t ndivisors)
      : ring_(ring), cofactor_terms_(ndivisors) {}

  void cofactor(std::size_t i, const Coeff& c, const Monomial& m) {
    cofactor_terms_[i].push_back({c, m});
  }
  void remainder(const Term& t) { remainder_terms_.push_back(t); }
  void remainder(const Polynomial& p) {
    remainder_terms_.insert(remainder_terms_.end(), p.terms().begin(), p.terms().end());
  }

  DivisionOutcome finish(std::size_t steps) {
    DivisionOutcome out;
    out.cofactors.reserve(cofactor_terms_.size());
    for (auto& ts : cofactor_terms_) out.cofactors.emplace_back(ring_, std::move(ts));
    out.remainder = Polynomial(ring_, std::move(remainder_terms_));
    out.steps = steps;
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<Term>> cofactor_terms_;
  std::vector<Term> remainder_terms_;
};

std::vector<std::size_t> divisors_of(const Monomial& m, std::span<const Polynomial> divisors) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i].leading_monomial().divides(m)) idx.push_back(i);
  return idx;
}

/// Solves LT(p) = sum mu_k LT(F_k) over the divisors whose LM divides LM(p)
/// and subtracts the combination. Returns false when no solution exists.
bool multi_step(Polynomial& p, std::span<const Polynomial> divisors, DivisionRecorder* rec) {
  const Term lt = p.leading_term();
  auto idx = divisors_of(lt.mono, divisors);
  if (idx.empty()) return false;
  std::vector<Coeff> lcs;
  lcs.reserve(idx.size());
  for (auto i : idx) lcs.push_back(divisors[i].leading_coeff());
  auto mu = p.ring()->domain().solve_membership(lt.coeff, lcs);
  if (!mu) return false;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if ((*mu)[k] == 0) continue;
    const Polynomial& g = divisors[idx[k]];
    Monomial shift = lt.mono / g.leading_monomial();
    p = p.sub_mul_term((*mu)[k], shift, g);
    if (rec) rec->cofactor(idx[k], (*mu)[k], shift);
  }
  return true;
}

bool strong_step(Polynomial& p, std::span<const Polynomial> divisors, DivisionRecorder* rec) {
  const Term& lt = p.leading_term();
  const auto& dom = p.ring()->domain();
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const Polynomial& g = divisors[i];
    if (!g.leading_monomial().divides(lt.mono)) continue;
    if (!dom.divides(g.leading_coeff(), lt.coeff)) continue;
    Coeff q = dom.exact_quotient(lt.coeff, g.leading_coeff());
    Monomial shift = lt.mono / g.leading_monomial();
    if (rec) rec->cofactor(i, q, shift);
    p = p.sub_mul_term(q, shift, g);
    return true;
  }
  return false;
}

void check_divisors(std::span<const Polynomial> divisors) {
  for (const auto& g : divisors)
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
}

template <class Step>
DivisionOutcome run_division(const Polynomial& f, std::span<const Polynomial> divisors,
                             ReductionScope scope, Step step) {
  check_divisors(divisors);
  DivisionRecorder rec(f.ring(), divisors.size());
  Polynomial p = f;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    if (step(p, divisors, &rec)) {
      ++steps;
      continue;
    }
    if (scope == ReductionScope::Head) {
      rec.remainder(p);
      break;
    }
    rec.remainder(p.leading_term());
    p = p.tail();
  }
  return rec.finish(steps);
}

}  // namespace

std::optional<Polynomial> reduce_step(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (f.is_zero()) return std::nullopt;
  check_divisors(divisors);
  Polynomial p = f;
  if (!multi_step(p, divisors, nullptr)) return std::nullopt;
  return p;
}

DivisionOutcome divide(const Polynomial& f, std::span<const Polynomial> divisors,
                       ReductionScope scope) {
  return run_division(f, divisors, scope, multi_step);
}

DivisionOutcome strong_reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                              ReductionScope scope) {
  return run_division(f, divisors, scope, strong_step);
}

DivisionOutcome canonical_normal_form(const Polynomial& f, const Basis& basis) {
  if (!basis.strong) throw std::invalid_argument("canonical_normal_form: basis is not flagged strong");
  std::span<const Polynomial> divisors(basis.elements);
  check_divisors(divisors);
  const auto& dom = f.ring()->domain();
  DivisionRecorder rec(f.ring(), divisors.size());
  Polynomial p = f;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    if (strong_step(p, divisors, &rec)) {
      ++steps;
      continue;
    }
    const Term lt = p.leading_term();
    auto idx = divisors_of(lt.mono, divisors);
    if (!idx.empty() && dom.is_integers()) {
      // d = sum w_k LC(g_k) generates the leading-coefficient ideal at lt.mono.
      Coeff d = 0;
      std::vector<Coeff> w(idx.size(), Coeff(0));
      for (std::size_t k = 0; k < idx.size(); ++k) {
        auto bz = dom.gcd_ext(d, divisors[idx[k]].leading_coeff());
        for (std::size_t j = 0; j < k; ++j) w[j] *= bz.u;
        w[k] = bz.v;
        d = bz.g;
      }
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), lt.coeff.get_num_mpz_t(), d.get_num_mpz_t());
      if (q != 0) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
          Coeff c = w[k] * Coeff(q);
          if (c == 0) continue;
          const Polynomial& g = divisors[idx[k]];
          Monomial shift = lt.mono / g.leading_monomial();
          p = p.sub_mul_term(c, shift, g);
          rec.cofactor(idx[k], c, shift);
        }
        ++steps;
        if (p.is_zero() || !(p.leading_monomial() == lt.mono)) continue;
      }
    }
    rec.remainder(p.leading_term());
    p = p.tail();
  }
  return rec.finish(steps);
}

}  // namespace qgb

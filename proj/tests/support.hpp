// Small helpers shared by the test binaries.

#ifndef QGB_TEST_SUPPORT_HPP
#define QGB_TEST_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "oracles/quotient_module.hpp"
#include "qgb/expr.hpp"
#include "qgb/gb_engine.hpp"
#include "qgb/pullback.hpp"

namespace testing {

using namespace qgb;

inline std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

inline std::vector<QuotientPoly> qpolys(const RingTower& t, std::initializer_list<const char*> texts) {
  std::vector<QuotientPoly> out;
  for (const char* s : texts) out.push_back(t.parse(s));
  return out;
}

inline std::vector<Polynomial> reps(const std::vector<QuotientPoly>& qs) {
  std::vector<Polynomial> out;
  for (const auto& q : qs) out.push_back(q.rep);
  return out;
}

/// Dense view of a polynomial in x (variable 0) and optionally y (variable 1).
inline oracle::Dense to_dense(const Polynomial& f) {
  oracle::Dense out;
  for (const auto& t : f.terms()) {
    std::size_t k = t.mono[0];
    std::size_t j = t.mono.size() > 1 ? t.mono[1] : 0;
    if (out.size() <= k) out.resize(k + 1);
    if (out[k].size() <= j) out[k].resize(j + 1, oracle::Int(0));
    out[k][j] += t.coeff.get_num();
  }
  return out;
}

inline Polynomial from_dense(const RingPtr& ring, const oracle::Dense& a) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j < a[k].size(); ++j) {
      if (a[k][j] == 0) continue;
      Monomial m(ring->nvars());
      m[0] = static_cast<std::uint32_t>(k);
      if (j) m[1] = static_cast<std::uint32_t>(j);
      ts.push_back({Coeff(a[k][j]), m});
    }
  return Polynomial(ring, std::move(ts));
}

/// Every element of (ZZ/m)[y]/<f>[x] of x-degree < len, as dense tables.
inline std::vector<oracle::Dense> all_dense(const oracle::DenseRing& r, std::size_t len) {
  const std::size_t n = len * r.ydim();
  std::vector<oracle::Dense> out;
  std::vector<long> digits(n, 0);
  const long m = r.m.get_si();
  for (;;) {
    oracle::Dense a(len, oracle::IntRow(r.ydim(), oracle::Int(0)));
    for (std::size_t i = 0; i < n; ++i) a[i / r.ydim()][i % r.ydim()] = digits[i];
    out.push_back(a);
    std::size_t i = 0;
    while (i < n && ++digits[i] == m) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Random element of the tower's ring A.
inline QuotientPoly random_element(const RingTower& t, std::mt19937_64& rng, std::size_t terms,
                                   std::uint32_t max_exp, long bound) {
  return t.project(random_polynomial(t.ring(), rng, terms, max_exp, bound));
}

/// Random member sum h_i * g_i of the ideal generated by gens.
inline QuotientPoly random_member(const RingTower& t, const std::vector<QuotientPoly>& gens,
                                  std::mt19937_64& rng) {
  QuotientPoly acc{Polynomial(t.ring())};
  for (const auto& g : gens) acc = t.add(acc, t.mul(random_element(t, rng, 3, 2, 9), g));
  return acc;
}

/// Single-divisor strong reduction in (ZZ/m)[x]: LT(f) is cancelled by one
/// c * x^a * g with LM(g) | LM(f) and LC(g) | LC(f) in ZZ/m.
inline QuotientPoly strong_reduce_modular(QuotientPoly f, const std::vector<QuotientPoly>& basis,
                                          const RingTower& t) {
  const BigInt& m = t.modulus();
  while (!f.is_zero()) {
    const Term& lt = f.rep.leading_term();
    bool stepped = false;
    for (const auto& g : basis) {
      if (!g.rep.leading_monomial().divides(lt.mono)) continue;
      BigInt a = g.rep.leading_coeff().get_num(), c = lt.coeff.get_num();
      BigInt d = gcd(a, m);
      if (c % d != 0) continue;
      BigInt inv, md = m / d, ad = a / d;
      mpz_invert(inv.get_mpz_t(), ad.get_mpz_t(), md.get_mpz_t());
      BigInt q = (c / d) * inv;
      Monomial shift = lt.mono / g.rep.leading_monomial();
      f = t.project(f.rep.sub_mul_term(Coeff(q), shift, g.rep));
      stepped = true;
      break;
    }
    if (!stepped) return f;
  }
  return f;
}

}  // namespace testing

#endif  // QGB_TEST_SUPPORT_HPP

// Groebner basis completion over a base domain (ZZ, QQ or GF(p)).
//
// Over a field this is Buchberger's algorithm with the coprime criterion and
// the result is the reduced monic basis. Over ZZ both lcm-based S-pairs and
// gcd-based G-pairs are processed, with no pair skipped, and the result is a
// strong basis: every ideal member's leading term is a multiple of a single
// basis element's leading term.
//
// Pairs are treated in the normal strategy (smallest lcm monomial first, then
// by index), so output is a deterministic function of the input sequence.

#ifndef QGB_GB_ENGINE_HPP
#define QGB_GB_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qgb/polyring.hpp"
#include "qgb/reduction.hpp"

namespace qgb {

/// Caps on a single completion; 0 means unlimited. Exceeding a cap throws
/// ResourceLimitExceeded.
struct CompletionOptions {
  std::size_t max_basis = 0;
  std::size_t max_pairs = 0;
};

enum class PairKind { S, G };

struct CriticalPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  Coeff lcm_coeff;  // lcm of leading coefficients over ZZ, 1 over a field
  PairKind kind = PairKind::S;
};

/// (c/LC f)(x^g/LM f) f - (c/LC g)(x^g/LM g) g with c the lcm of the leading
/// coefficients (1 over a field). Throws std::domain_error on a zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// u (x^g/LM f) f + v (x^g/LM g) g with u LC(f) + v LC(g) = gcd. Only
/// defined over ZZ when neither leading coefficient divides the other;
/// nullopt otherwise.
std::optional<Polynomial> g_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced monic basis sorted by LM ascending. Requires a field domain.
Basis buchberger_field(std::span<const Polynomial> gens, const CompletionOptions& opts = {});

/// Interreduced strong basis with positive leading coefficients, sorted by
/// LM ascending. Requires the integers.
Basis strong_gb_integer(std::span<const Polynomial> gens, const CompletionOptions& opts = {});

/// Dispatches on the ring's domain.
Basis groebner_basis(std::span<const Polynomial> gens, const CompletionOptions& opts = {});

using PolyRow = std::vector<Polynomial>;
using PolyMatrix = std::vector<PolyRow>;

/// Basis G of <F> with transition data:
///   G[k] = sum_i M[k][i] F[i]        (M is |G| x |F|)
///   F[i] = sum_k N[i][k] G[k]        (N is |F| x |G|)
///   lt_syzygies: pairwise generators of Syz(LT(G[0]), ..., LT(G[m-1]))
///   lifted_syzygies[l] = lt_syzygies[l] minus division cofactors, so that
///                        sum_k lifted[l][k] G[k] = 0 exactly
struct TrackedBasis {
  std::vector<Polynomial> G;
  PolyMatrix M;
  PolyMatrix N;
  PolyMatrix lt_syzygies;
  PolyMatrix lifted_syzygies;
  bool strong = true;

  /// Generators of Syz(F): rows of (I - N M) followed by s M for every
  /// lifted syzygy s. Zero rows are dropped.
  PolyMatrix input_syzygies() const;
};

TrackedBasis gb_with_syzygies(std::span<const Polynomial> gens, const CompletionOptions& opts = {});

/// Every pair polynomial divides (multi-divisor) to zero.
bool verify_groebner(std::span<const Polynomial> basis);

/// Every S- and G-polynomial strong-reduces to zero, and so do `samples`
/// random combinations sum h_i g_i drawn with the given seed.
bool verify_strong(std::span<const Polynomial> basis, std::size_t samples = 20,
                   std::uint64_t seed = 1);

enum class InterreduceMode {
  Multi,   // drop or replace elements reducible by the others, multi-divisor sense
  Strong,  // drop elements whose leading term is a single-term multiple of another's
};

/// Multi: no element is reducible (head or tail) by the others.
/// Strong: leading terms are pairwise non-dividing and tails are in canonical
/// form with respect to the others; strongness of a strong basis is kept.
std::vector<Polynomial> interreduce(std::span<const Polynomial> basis,
                                    InterreduceMode mode = InterreduceMode::Multi);

/// Unit multiple with positive leading coefficient (ZZ) or leading
/// coefficient 1 (field).
Polynomial normalize_leading(const Polynomial& f);

/// Sorts ascending by leading monomial, then by rendered text.
void sort_basis(std::vector<Polynomial>& basis);

/// Random polynomial with up to `terms` terms, exponents below `max_exp` per
/// variable and coefficients in [-bound, bound].
template <class Rng>
Polynomial random_polynomial(const RingPtr& ring, Rng& rng, std::size_t terms, std::uint32_t max_exp,
                             long bound) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      m[v] = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    ts.push_back({Coeff(c), std::move(m)});
  }
  return Polynomial(ring, std::move(ts));
}

}  // namespace qgb

#endif  // QGB_GB_ENGINE_HPP

// Elimination, intersection, ideal quotients, kernels and syzygies over a
// quotient tower. Each operation builds a T-level ring with a suitable block
// layout, completes there and contracts.

#ifndef QGB_IDEAL_OPS_HPP
#define QGB_IDEAL_OPS_HPP

#include <string>
#include <vector>

#include "qgb/pullback.hpp"

namespace qgb {

/// psi: B -> A with B = R[source_vars] and psi(source_vars[i]) = images[i].
struct AlgebraMap {
  std::vector<std::string> source_vars;
  OrderKind source_order = OrderKind::GrevLex;
  RingTower target;
  std::vector<QuotientPoly> images;
};

/// Generators of the syzygy module of (f_1, ..., f_t) over A.
struct SyzygyBasis {
  std::vector<std::vector<QuotientPoly>> generators;
};

/// J ∩ R[kept variables]. The result lives in tower.with_main_vars(kept).
PullbackGB eliminate(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                     const std::vector<std::string>& remove, const PullbackOptions& opts = {});

PullbackGB intersect(const std::vector<QuotientPoly>& a, const std::vector<QuotientPoly>& b,
                     const RingTower& tower, const PullbackOptions& opts = {});

/// J1 : J2 as the intersection over h in J2 of the first components of
/// Syz(h, J1).
PullbackGB ideal_quotient(const std::vector<QuotientPoly>& j1, const std::vector<QuotientPoly>& j2,
                          const RingTower& tower, const PullbackOptions& opts = {});

/// Ker psi, over tower.with_main_vars(source_vars).
PullbackGB kernel(const AlgebraMap& map, const PullbackOptions& opts = {});

SyzygyBasis syzygies(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                     const PullbackOptions& opts = {});

/// {LC_x(g) : g in the T-level basis}, as polynomials in the relation
/// variables of gb.ring.
std::vector<Polynomial> leading_coeff_ideal(const PullbackGB& gb);

}  // namespace qgb

#endif  // QGB_IDEAL_OPS_HPP

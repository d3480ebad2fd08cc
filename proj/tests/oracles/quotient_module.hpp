// Test-only model of (ZZ/m)[y]/<f>[x] in one main variable x as a free
// ZZ/m-module with basis x^k y^j. Ideals are handled as ZZ-lattices: the
// span of shifted generators plus m*ZZ^n, put in echelon form once.

#ifndef QGB_TEST_QUOTIENT_MODULE_HPP
#define QGB_TEST_QUOTIENT_MODULE_HPP

#include <algorithm>
#include <vector>

#include "oracles/lattice.hpp"

namespace oracle {

/// c[k][j] is the coefficient of x^k y^j.
using Dense = std::vector<std::vector<Int>>;

struct DenseRing {
  Int m;
  /// Monic relation in y, constant term first. Empty means no y.
  IntRow f;

  std::size_t ydim() const { return f.empty() ? 1 : f.size() - 1; }

  /// Reduces every x-coefficient by f and every entry into [0, m).
  Dense normalize(Dense a) const {
    for (auto& row : a) {
      if (!f.empty()) {
        const std::size_t d = f.size() - 1;
        for (std::size_t j = row.size(); j-- > d;) {
          Int c = row[j];
          if (c == 0) continue;
          for (std::size_t i = 0; i <= d; ++i) row[j - d + i] -= c * f[i];
        }
      }
      row.resize(ydim(), Int(0));
      for (auto& c : row) {
        c %= m;
        if (c < 0) c += m;
      }
    }
    while (!a.empty() && std::all_of(a.back().begin(), a.back().end(), [](const Int& c) { return c == 0; }))
      a.pop_back();
    return a;
  }

  Dense shift(const Dense& a, std::size_t xk, std::size_t yj) const {
    Dense out(a.size() + xk);
    for (std::size_t k = 0; k < a.size(); ++k) {
      out[k + xk].assign(a[k].size() + yj, Int(0));
      for (std::size_t j = 0; j < a[k].size(); ++j) out[k + xk][j + yj] = a[k][j];
    }
    return normalize(out);
  }

  /// Flattens a normalized element into a vector of length len * ydim.
  IntRow flatten(const Dense& a, std::size_t len) const {
    IntRow v(len * ydim(), Int(0));
    for (std::size_t k = 0; k < a.size() && k < len; ++k)
      for (std::size_t j = 0; j < a[k].size(); ++j) v[k * ydim() + j] = a[k][j];
    return v;
  }
};

/// A ZZ-lattice containing m*ZZ^n, kept in echelon form.
class ModularLattice {
 public:
  ModularLattice(IntMatrix rows, const Int& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      IntRow e(n, Int(0));
      e[i] = m;
      rows.push_back(std::move(e));
    }
    echelon_ = integer_echelon(std::move(rows));
  }

  bool contains(IntRow v) const {
    for (const auto& row : echelon_) {
      std::size_t c = 0;
      while (row[c] == 0) ++c;
      for (std::size_t k = 0; k < c; ++k)
        if (v[k] != 0) return false;
      if (v[c] % row[c] != 0) return false;
      Int q = v[c] / row[c];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * row[k];
    }
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
  }

  /// Size of ZZ^n / lattice.
  Int index() const {
    Int out = 1;
    for (const auto& row : echelon_) {
      std::size_t c = 0;
      while (row[c] == 0) ++c;
      out *= row[c];
    }
    return out;
  }

 private:
  IntMatrix echelon_;
};

/// Lattice of the ideal generated by `gens` inside elements of x-degree
/// < len, with cofactors x^k y^j of x-degree <= cofactor_degree.
inline ModularLattice ideal_lattice(const DenseRing& ring, const std::vector<Dense>& gens,
                                    std::size_t cofactor_degree, std::size_t len) {
  IntMatrix rows;
  for (const auto& g : gens)
    for (std::size_t k = 0; k <= cofactor_degree; ++k)
      for (std::size_t j = 0; j < ring.ydim(); ++j) {
        Dense s = ring.shift(g, k, j);
        if (s.size() <= len) rows.push_back(ring.flatten(s, len));
      }
  return ModularLattice(std::move(rows), ring.m, len * ring.ydim());
}

/// Number of elements of (ZZ/m)[y]/<f>[x] / J when x^len lies in J: the
/// truncation at x-degree len is then closed under the ideal.
inline Int residue_count(const DenseRing& ring, std::vector<Dense> gens, std::size_t len) {
  IntMatrix rows;
  for (const auto& g : gens)
    for (std::size_t k = 0; k < len; ++k)
      for (std::size_t j = 0; j < ring.ydim(); ++j) {
        Dense s = ring.shift(g, k, j);
        if (s.size() > len) s.resize(len);
        rows.push_back(ring.flatten(s, len));
      }
  return ModularLattice(std::move(rows), ring.m, len * ring.ydim()).index();
}

}  // namespace oracle

#endif  // QGB_TEST_QUOTIENT_MODULE_HPP

#include "qgb/gb_engine.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qgb/errors.hpp"

namespace qgb {

namespace {

struct PairCoefficients {
  Coeff a;  // multiplier of f
  Coeff b;  // multiplier of g, subtracted
  Monomial lcm;
};

PairCoefficients s_coefficients(const Polynomial& f, const Polynomial& g) {
  const auto& dom = f.ring()->domain();
  PairCoefficients pc;
  pc.lcm = f.leading_monomial().lcm(g.leading_monomial());
  if (dom.is_field()) {
    pc.a = dom.inverse(f.leading_coeff());
    pc.b = dom.inverse(g.leading_coeff());
  } else {
    Coeff c = dom.lcm(f.leading_coeff(), g.leading_coeff());
    pc.a = dom.exact_quotient(c, f.leading_coeff());
    pc.b = dom.exact_quotient(c, g.leading_coeff());
  }
  return pc;
}

bool g_pair_needed(const Polynomial& f, const Polynomial& g) {
  const auto& dom = f.ring()->domain();
  if (dom.is_field()) return false;
  return !dom.divides(f.leading_coeff(), g.leading_coeff()) &&
         !dom.divides(g.leading_coeff(), f.leading_coeff());
}

bool term_divides(const BaseDomain& dom, const Term& a, const Term& b) {
  return a.mono.divides(b.mono) && dom.divides(a.coeff, b.coeff);
}

void check_nonzero(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("pair polynomial of the zero polynomial");
}

// Rows of polynomials indexed by the input generators. Untracked runs carry
// empty rows and every row operation is a no-op.
void row_sub_mul(PolyRow& r, const Coeff& c, const Monomial& m, const PolyRow& other) {
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i].sub_mul_term(c, m, other[i]);
}

PolyRow row_combine(const Coeff& a, const Monomial& ma, const PolyRow& ra, const Coeff& b,
                    const Monomial& mb, const PolyRow& rb) {
  PolyRow out(ra.size());
  for (std::size_t i = 0; i < ra.size(); ++i)
    out[i] = ra[i].mul_term(a, ma) + rb[i].mul_term(b, mb);
  return out;
}

PolyRow row_scale(const PolyRow& r, const Coeff& c) {
  PolyRow out;
  out.reserve(r.size());
  for (const auto& p : r) out.push_back(p.scale(c));
  return out;
}

struct Element {
  Polynomial poly;
  PolyRow row;
};

Coeff leading_normalizer(const Polynomial& f) {
  return f.ring()->domain().normalizing_unit(f.leading_coeff());
}

void normalize_element(Element& e) {
  Coeff u = leading_normalizer(e.poly);
  if (u == 1) return;
  e.poly = e.poly.scale(u);
  e.row = row_scale(e.row, u);
}

void sort_elements(std::vector<Element>& elems) {
  std::stable_sort(elems.begin(), elems.end(), [](const Element& a, const Element& b) {
    const auto& ord = a.poly.ring()->order();
    auto c = ord.compare(a.poly.leading_monomial(), b.poly.leading_monomial());
    if (c != 0) return c < 0;
    return a.poly.to_string() < b.poly.to_string();
  });
}

/// Removes elements whose leading term is a multiple of another's (strong
/// sense), then brings every tail into canonical form modulo the others.
std::vector<Element> interreduce_strong(std::vector<Element> elems) {
  if (elems.empty()) return elems;
  const auto& dom = elems.front().poly.ring()->domain();
  std::vector<bool> drop(elems.size(), false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Term& ti = elems[i].poly.leading_term();
    for (std::size_t j = 0; j < elems.size() && !drop[i]; ++j) {
      if (j == i) continue;
      const Term& tj = elems[j].poly.leading_term();
      if (!term_divides(dom, tj, ti)) continue;
      if (!term_divides(dom, ti, tj) || j < i) drop[i] = true;
    }
  }
  std::vector<Element> kept;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!drop[i]) kept.push_back(std::move(elems[i]));

  for (std::size_t i = 0; i < kept.size(); ++i) {
    Basis others;
    others.strong = true;
    std::vector<std::size_t> index;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      others.elements.push_back(kept[j].poly);
      index.push_back(j);
    }
    Polynomial tail = kept[i].poly.tail();
    if (tail.is_zero() || others.elements.empty()) continue;
    auto out = canonical_normal_form(tail, others);
    if (out.steps == 0) continue;
    Element& e = kept[i];
    Term lt = e.poly.leading_term();
    e.poly = Polynomial::monomial(e.poly.ring(), lt.coeff, lt.mono) + out.remainder;
    for (std::size_t k = 0; k < index.size(); ++k) {
      const Polynomial& q = out.cofactors[k];
      for (const auto& t : q.terms()) row_sub_mul(e.row, t.coeff, t.mono, kept[index[k]].row);
    }
  }
  for (auto& e : kept) normalize_element(e);
  sort_elements(kept);
  return kept;
}

class Completion {
 public:
  Completion(RingPtr ring, std::size_t ninputs, bool track, CompletionOptions opts)
      : ring_(std::move(ring)),
        ninputs_(ninputs),
        track_(track),
        opts_(opts),
        field_(ring_->domain().is_field()) {}

  void add_input(const Polynomial& f, std::size_t index) {
    if (!f.ring()->same_as(*ring_)) throw std::invalid_argument("mismatched variable sets");
    Element e{f, {}};
    if (track_) {
      e.row.assign(ninputs_, Polynomial(ring_));
      e.row[index] = Polynomial::constant(ring_, 1);
    }
    reduce(e);
    if (!e.poly.is_zero()) insert(std::move(e));
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = select_pair();
      CriticalPair p = *it;
      pairs_.erase(it);
      if (opts_.max_pairs && ++pairs_done_ > opts_.max_pairs)
        throw ResourceLimitExceeded("pair count exceeded the cap of " +
                                    std::to_string(opts_.max_pairs));
      Element e = pair_element(p);
      reduce(e);
      if (!e.poly.is_zero()) insert(std::move(e));
    }
  }

  std::vector<Element> finish() { return interreduce_strong(std::move(basis_)); }

 private:
  std::vector<CriticalPair>::iterator select_pair() {
    const auto& ord = ring_->order();
    return std::min_element(pairs_.begin(), pairs_.end(),
                            [&](const CriticalPair& a, const CriticalPair& b) {
                              auto c = ord.compare(a.lcm, b.lcm);
                              if (c != 0) return c < 0;
                              if (a.i != b.i) return a.i < b.i;
                              if (a.j != b.j) return a.j < b.j;
                              return a.kind == PairKind::S && b.kind == PairKind::G;
                            });
  }

  Element pair_element(const CriticalPair& p) {
    const Element& f = basis_[p.i];
    const Element& g = basis_[p.j];
    Monomial mf = p.lcm / f.poly.leading_monomial();
    Monomial mg = p.lcm / g.poly.leading_monomial();
    Coeff a, b;
    if (p.kind == PairKind::S) {
      auto pc = s_coefficients(f.poly, g.poly);
      a = pc.a;
      b = ring_->domain().neg(pc.b);
    } else {
      const auto& dom = ring_->domain();
      auto bz = dom.gcd_ext(f.poly.leading_coeff(), g.poly.leading_coeff());
      a = bz.u;
      b = bz.v;
    }
    Element e;
    e.poly = f.poly.mul_term(a, mf) + g.poly.mul_term(b, mg);
    if (track_) e.row = row_combine(a, mf, f.row, b, mg, g.row);
    return e;
  }

  /// Head reduction, one divisor per step.
  void reduce(Element& e) {
    const auto& dom = ring_->domain();
    while (!e.poly.is_zero()) {
      const Term lt = e.poly.leading_term();
      bool reduced = false;
      for (const auto& g : basis_) {
        const Term& tg = g.poly.leading_term();
        if (!term_divides(dom, tg, lt)) continue;
        Coeff q = dom.exact_quotient(lt.coeff, tg.coeff);
        Monomial shift = lt.mono / tg.mono;
        e.poly = e.poly.sub_mul_term(q, shift, g.poly);
        if (track_) row_sub_mul(e.row, q, shift, g.row);
        reduced = true;
        break;
      }
      if (!reduced) break;
    }
  }

  void insert(Element e) {
    normalize_element(e);
    std::size_t k = basis_.size();
    for (std::size_t j = 0; j < k; ++j) {
      const Polynomial& g = basis_[j].poly;
      Monomial l = g.leading_monomial().lcm(e.poly.leading_monomial());
      if (field_ && g.leading_monomial().coprime(e.poly.leading_monomial())) continue;
      Coeff c = field_ ? Coeff(1) : ring_->domain().lcm(g.leading_coeff(), e.poly.leading_coeff());
      pairs_.push_back({j, k, l, c, PairKind::S});
      if (g_pair_needed(g, e.poly)) pairs_.push_back({j, k, l, c, PairKind::G});
    }
    basis_.push_back(std::move(e));
    if (opts_.max_basis && basis_.size() > opts_.max_basis)
      throw ResourceLimitExceeded("basis size exceeded the cap of " +
                                  std::to_string(opts_.max_basis));
  }

  RingPtr ring_;
  std::size_t ninputs_;
  bool track_;
  CompletionOptions opts_;
  bool field_;
  std::vector<Element> basis_;
  std::vector<CriticalPair> pairs_;
  std::size_t pairs_done_ = 0;
};

std::vector<Element> complete(std::span<const Polynomial> gens, bool track,
                              const CompletionOptions& opts) {
  if (gens.empty()) return {};
  Completion c(gens.front().ring(), gens.size(), track, opts);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) c.add_input(gens[i], i);
  c.run();
  return c.finish();
}

Basis to_basis(std::vector<Element> elems) {
  Basis b;
  b.strong = true;
  for (auto& e : elems) b.elements.push_back(std::move(e.poly));
  return b;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  check_nonzero(f);
  check_nonzero(g);
  auto pc = s_coefficients(f, g);
  return f.mul_term(pc.a, pc.lcm / f.leading_monomial()) -
         g.mul_term(pc.b, pc.lcm / g.leading_monomial());
}

std::optional<Polynomial> g_polynomial(const Polynomial& f, const Polynomial& g) {
  check_nonzero(f);
  check_nonzero(g);
  if (!g_pair_needed(f, g)) return std::nullopt;
  const auto& dom = f.ring()->domain();
  auto bz = dom.gcd_ext(f.leading_coeff(), g.leading_coeff());
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(bz.u, l / f.leading_monomial()) + g.mul_term(bz.v, l / g.leading_monomial());
}

Basis buchberger_field(std::span<const Polynomial> gens, const CompletionOptions& opts) {
  if (!gens.empty() && !gens.front().ring()->domain().is_field())
    throw std::invalid_argument("buchberger_field needs a field domain");
  return to_basis(complete(gens, false, opts));
}

Basis strong_gb_integer(std::span<const Polynomial> gens, const CompletionOptions& opts) {
  if (!gens.empty() && !gens.front().ring()->domain().is_integers())
    throw std::invalid_argument("strong_gb_integer needs the integers");
  return to_basis(complete(gens, false, opts));
}

Basis groebner_basis(std::span<const Polynomial> gens, const CompletionOptions& opts) {
  return to_basis(complete(gens, false, opts));
}

TrackedBasis gb_with_syzygies(std::span<const Polynomial> gens, const CompletionOptions& opts) {
  TrackedBasis tb;
  auto elems = complete(gens, true, opts);
  for (auto& e : elems) {
    tb.G.push_back(e.poly);
    tb.M.push_back(std::move(e.row));
  }
  if (gens.empty()) return tb;
  const RingPtr& ring = gens.front().ring();
  const auto& dom = ring->domain();
  const std::size_t m = tb.G.size();

  for (const auto& f : gens) {
    auto out = strong_reduce(f, tb.G);
    if (!out.remainder.is_zero())
      throw std::logic_error("gb_with_syzygies: input does not reduce to zero");
    tb.N.push_back(std::move(out.cofactors));
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Polynomial& gi = tb.G[i];
      const Polynomial& gj = tb.G[j];
      auto pc = s_coefficients(gi, gj);
      PolyRow h(m, Polynomial(ring));
      h[i] = Polynomial::monomial(ring, pc.a, pc.lcm / gi.leading_monomial());
      h[j] = Polynomial::monomial(ring, dom.neg(pc.b), pc.lcm / gj.leading_monomial());
      Polynomial s = h[i] * gi + h[j] * gj;
      auto out = strong_reduce(s, tb.G);
      if (!out.remainder.is_zero())
        throw std::logic_error("gb_with_syzygies: pair polynomial does not reduce to zero");
      PolyRow lifted(m);
      for (std::size_t k = 0; k < m; ++k) lifted[k] = h[k] - out.cofactors[k];
      tb.lt_syzygies.push_back(std::move(h));
      tb.lifted_syzygies.push_back(std::move(lifted));
    }
  }
  return tb;
}

PolyMatrix TrackedBasis::input_syzygies() const {
  PolyMatrix out;
  const std::size_t t = N.size();
  if (t == 0) return out;
  const RingPtr& ring = N.front().empty() ? RingPtr{} : N.front().front().ring();
  auto zero_row = [](const PolyRow& r) {
    return std::all_of(r.begin(), r.end(), [](const Polynomial& p) { return p.is_zero(); });
  };
  for (std::size_t i = 0; i < t; ++i) {
    PolyRow row;
    row.reserve(t);
    for (std::size_t j = 0; j < t; ++j) {
      Polynomial acc = ring ? Polynomial(ring) : Polynomial();
      if (ring && i == j) acc = Polynomial::constant(ring, 1);
      for (std::size_t k = 0; k < G.size(); ++k) acc -= N[i][k] * M[k][j];
      row.push_back(std::move(acc));
    }
    if (!zero_row(row)) out.push_back(std::move(row));
  }
  for (const auto& s : lifted_syzygies) {
    PolyRow row(t, Polynomial(ring));
    for (std::size_t k = 0; k < G.size(); ++k)
      for (std::size_t j = 0; j < t; ++j) row[j] += s[k] * M[k][j];
    if (!zero_row(row)) out.push_back(std::move(row));
  }
  return out;
}

bool verify_groebner(std::span<const Polynomial> basis) {
  for (const auto& g : basis)
    if (g.is_zero()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!divide(s_polynomial(basis[i], basis[j]), basis).remainder.is_zero()) return false;
  return true;
}

bool verify_strong(std::span<const Polynomial> basis, std::size_t samples, std::uint64_t seed) {
  for (const auto& g : basis)
    if (g.is_zero()) return false;
  if (basis.empty()) return true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!strong_reduce(s_polynomial(basis[i], basis[j]), basis).remainder.is_zero())
        return false;
      auto gp = g_polynomial(basis[i], basis[j]);
      if (gp && !strong_reduce(*gp, basis).remainder.is_zero()) return false;
    }
  }
  const RingPtr& ring = basis.front().ring();
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Polynomial comb(ring);
    for (const auto& g : basis) comb += random_polynomial(ring, rng, 3, 2, 5) * g;
    if (!strong_reduce(comb, basis).remainder.is_zero()) return false;
  }
  return true;
}

std::vector<Polynomial> interreduce(std::span<const Polynomial> basis, InterreduceMode mode) {
  std::vector<Polynomial> work;
  for (const auto& g : basis)
    if (!g.is_zero()) work.push_back(g);
  if (mode == InterreduceMode::Strong) {
    std::vector<Element> elems;
    for (auto& g : work) elems.push_back({std::move(g), {}});
    std::vector<Polynomial> out;
    for (auto& e : interreduce_strong(std::move(elems))) out.push_back(std::move(e.poly));
    return out;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < work.size(); ++j)
        if (j != i) others.push_back(work[j]);
      if (others.empty()) break;
      auto out = divide(work[i], others);
      if (out.steps == 0 || out.remainder == work[i]) continue;
      changed = true;
      if (out.remainder.is_zero()) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        work[i] = normalize_leading(out.remainder);
      }
      break;
    }
  }
  for (auto& g : work) g = normalize_leading(g);
  sort_basis(work);
  return work;
}

Polynomial normalize_leading(const Polynomial& f) {
  if (f.is_zero()) return f;
  Coeff u = leading_normalizer(f);
  return u == 1 ? f : f.scale(u);
}

void sort_basis(std::vector<Polynomial>& basis) {
  std::stable_sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() != b.is_zero()) return b.is_zero();
    if (a.is_zero()) return false;
    auto c = a.ring()->order().compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.to_string() < b.to_string();
  });
}

}  // namespace qgb

#include "qgb/pullback.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qgb/errors.hpp"
#include "qgb/expr.hpp"

namespace qgb {

std::string to_string(TowerFlavor flavor) {
  switch (flavor) {
    case TowerFlavor::PlainBase: return "plain";
    case TowerFlavor::ModularInteger: return "modular integer";
    case TowerFlavor::FieldPolyQuotient: return "field polynomial quotient";
    case TowerFlavor::AlgebraicNumber: return "algebraic number";
    case TowerFlavor::GaloisRing: return "Galois ring";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

bool involves_main(const Polynomial& f) {
  const auto& vars = f.ring()->vars();
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (vars.role_of(v) != BlockRole::Relation && f.involves(v)) return true;
  return false;
}

/// Total order on polynomials of one ring: term by term from the top.
bool poly_less(const Polynomial& a, const Polynomial& b) {
  const auto& ord = a.ring()->order();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    auto c = ord.compare(ta[i].mono, tb[i].mono);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

/// Projects the T-basis, checks that leading terms survive projection and
/// fills basis/source.
void project_basis(PullbackGB& gb) {
  struct Item {
    QuotientPoly q;
    std::size_t k;
  };
  std::vector<Item> items;
  for (std::size_t k = 0; k < gb.t_basis.size(); ++k) {
    const Polynomial& g = gb.t_basis[k];
    QuotientPoly p = gb.tower.project(g);
    if (p.is_zero()) continue;
    // Leading data in A: x-monomial and its coefficient in R.
    XLead lg = x_lead(g);
    XLead lp = x_lead(p.rep);
    if (!(lg.lm == lp.lm) || !(gb.tower.project(lg.lc).rep == lp.lc))
      throw std::logic_error("projection changed the leading term of " + g.to_string());
    items.push_back({std::move(p), k});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    auto c = a.q.rep.ring()->order().compare(a.q.rep.leading_monomial(), b.q.rep.leading_monomial());
    if (c != 0) return c < 0;
    return poly_less(a.q.rep, b.q.rep);
  });
  gb.basis.clear();
  gb.source.clear();
  for (auto& it : items) {
    if (!gb.basis.empty() && gb.basis.back() == it.q) continue;
    gb.basis.push_back(std::move(it.q));
    gb.source.push_back(it.k);
  }
}

// Univariate polynomials over GF(p), constant term first, no trailing zeros.
using UPoly = std::vector<BigInt>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// a mod b over GF(p); b monic.
UPoly umod(UPoly a, const UPoly& b, const BigInt& p) {
  trim(a);
  while (a.size() >= b.size()) {
    BigInt c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_floor(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

}  // namespace

XLead x_lead(const Polynomial& f) {
  if (f.ring()->vars().has_role(BlockRole::Relation)) {
    auto d = leading_data_x(f);
    return {d.lc_x, d.lm_x};
  }
  return {Polynomial::constant(f.ring(), f.leading_coeff()), f.leading_monomial()};
}

// ------------------------------------------------------------- RingTower

RingTower RingTower::plain(BaseDomain base, std::vector<std::string> x, OrderKind order) {
  RingTower t;
  t.flavor_ = TowerFlavor::PlainBase;
  t.base_ = std::move(base);
  t.x_ = std::move(x);
  t.order_ = order;
  t.build({});
  return t;
}

RingTower RingTower::modular(const BigInt& m, std::vector<std::string> x, OrderKind order) {
  if (m < 2) throw SemanticError("modulus must be at least 2, got " + m.get_str());
  RingTower t;
  t.flavor_ = TowerFlavor::ModularInteger;
  t.base_ = BaseDomain::integers();
  t.x_ = std::move(x);
  t.order_ = order;
  t.modulus_ = m;
  t.build({});
  t.build({Polynomial::constant(t.ring(), Coeff(m))});
  return t;
}

RingTower RingTower::field_quotient(BaseDomain field, std::vector<std::string> y,
                                    const std::vector<std::string>& relations,
                                    std::vector<std::string> x, OrderKind order) {
  if (!field.is_field()) throw std::invalid_argument("field_quotient needs a field base");
  RingTower t;
  t.flavor_ = TowerFlavor::FieldPolyQuotient;
  t.base_ = std::move(field);
  t.x_ = std::move(x);
  t.y_ = std::move(y);
  t.order_ = order;
  t.build({});
  std::vector<Polynomial> rels;
  for (const auto& text : relations) {
    Polynomial r = parse_polynomial(t.ring(), text);
    if (involves_main(r)) throw SemanticError("relation '" + text + "' involves a main variable");
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  t.build(std::move(rels));
  return t;
}

RingTower RingTower::algebraic(std::string y, std::string_view minimal_poly,
                               std::vector<std::string> x, OrderKind order) {
  auto qq = PolyRing::make(BaseDomain::rationals(), {y});
  Polynomial q = parse_polynomial(qq, minimal_poly);
  if (q.is_zero() || q.is_constant())
    throw SemanticError("minimal polynomial must have positive degree");
  RingTower t;
  t.flavor_ = TowerFlavor::AlgebraicNumber;
  t.base_ = BaseDomain::integers();
  t.x_ = std::move(x);
  t.y_ = {std::move(y)};
  t.order_ = order;
  t.build({});
  t.build({transfer(minimal_poly_to_primitive(q), t.ring())});
  return t;
}

RingTower RingTower::galois(const BigInt& p, unsigned n, std::string y, std::string_view f,
                            std::vector<std::string> x, OrderKind order) {
  if (p < 2 || !is_probable_prime(p)) throw SemanticError(p.get_str() + " is not prime");
  if (n < 1) throw SemanticError("Galois ring exponent must be at least 1");
  RingTower t;
  t.flavor_ = TowerFlavor::GaloisRing;
  t.base_ = BaseDomain::integers();
  t.x_ = std::move(x);
  t.y_ = {std::move(y)};
  t.order_ = order;
  t.galois_p_ = p;
  t.galois_n_ = n;
  mpz_pow_ui(t.modulus_.get_mpz_t(), p.get_mpz_t(), n);
  t.build({});
  Polynomial fy = parse_polynomial(t.ring(), f);
  if (fy.is_zero() || fy.is_constant()) throw SemanticError("Galois polynomial must have positive degree");
  if (involves_main(fy)) throw SemanticError("Galois polynomial involves a main variable");
  if (fy.leading_coeff() != 1) throw SemanticError("Galois polynomial must be monic");
  std::size_t yi = static_cast<std::size_t>(t.ring()->vars().index_of(t.y_[0]));
  UPoly coeffs(fy.degree_in(yi) + 1, BigInt(0));
  for (const auto& term : fy.terms()) coeffs[term.mono[yi]] = term.coeff.get_num();
  if (!irreducible_mod_p(coeffs, p))
    throw SemanticError("Galois polynomial " + fy.to_string() + " is reducible modulo " + p.get_str());
  t.build({fy, Polynomial::constant(t.ring(), Coeff(t.modulus_))});
  return t;
}

void RingTower::build(std::vector<Polynomial> relations) {
  std::set<std::string> seen;
  for (const auto& names : {x_, y_})
    for (const auto& n : names)
      if (!seen.insert(n).second) throw SemanticError("variable '" + n + "' declared twice");
  if (relations.empty() && standard_.ring) {
    relations_.clear();
    standard_.relations = Basis{{}, true};
    return;
  }
  if (!standard_.ring) {
    std::vector<VariableBlock> blocks;
    if (!x_.empty()) blocks.push_back({"x", BlockRole::Main, order_, x_});
    if (!y_.empty()) blocks.push_back({"y", BlockRole::Relation, OrderKind::GrevLex, y_});
    standard_.ring = PolyRing::make(base_, VariableSet(std::move(blocks)));
    standard_.relations = Basis{{}, true};
    if (relations.empty()) return;
  }
  relations_ = std::move(relations);
  Basis rb;
  rb.strong = true;
  if (base_.is_field()) {
    rb = buchberger_field(relations_);
    if (!verify_groebner(relations_)) {
      std::vector<std::string> texts;
      for (const auto& g : rb.elements) texts.push_back(g.to_string());
      notices_.push_back("relations completed to a Groebner basis: [" + join(texts, ", ") + "]");
    }
  } else {
    rb = strong_gb_integer(relations_);
  }
  standard_.relations = std::move(rb);
}

bool RingTower::strong_projection() const {
  switch (flavor_) {
    case TowerFlavor::PlainBase:
    case TowerFlavor::ModularInteger: return true;
    case TowerFlavor::FieldPolyQuotient: return y_.size() == 1;
    case TowerFlavor::AlgebraicNumber:
    case TowerFlavor::GaloisRing: return false;
  }
  return false;
}

std::string RingTower::describe() const {
  std::vector<std::string> rels;
  for (const auto& r : relations_) rels.push_back(r.to_string());
  switch (flavor_) {
    case TowerFlavor::PlainBase: return base_.name();
    case TowerFlavor::ModularInteger: return "ZZ/" + modulus_.get_str();
    case TowerFlavor::FieldPolyQuotient:
    case TowerFlavor::AlgebraicNumber:
      return base_.name() + "[" + join(y_, ", ") + "]/<" + join(rels, ", ") + ">";
    case TowerFlavor::GaloisRing:
      return "GR(" + modulus_.get_str() + ", " + std::to_string(relations_.front().total_degree()) + ")";
  }
  return "?";
}

RingTower RingTower::with_main_vars(std::vector<std::string> x, OrderKind order) const {
  RingTower t = *this;
  t.x_ = std::move(x);
  t.order_ = order;
  t.standard_ = Layout{};
  t.build({});
  t.relations_.clear();
  for (const auto& r : relations_) t.relations_.push_back(transfer(r, t.ring()));
  for (const auto& r : standard_.relations.elements)
    t.standard_.relations.elements.push_back(transfer(r, t.ring()));
  return t;
}

Layout RingTower::layout(std::vector<VariableBlock> front) const {
  if (!y_.empty()) front.push_back({"y", BlockRole::Relation, OrderKind::GrevLex, y_});
  Layout out;
  out.ring = PolyRing::make(base_, VariableSet(std::move(front)));
  out.relations.strong = true;
  for (const auto& r : standard_.relations.elements)
    out.relations.elements.push_back(transfer(r, out.ring));
  return out;
}

const Basis& RingTower::relations_in(const RingPtr& ring, Basis& scratch) const {
  if (ring == standard_.ring) return standard_.relations;
  scratch.strong = true;
  scratch.elements.clear();
  for (const auto& r : standard_.relations.elements) scratch.elements.push_back(transfer(r, ring));
  return scratch;
}

QuotientPoly RingTower::project(const Polynomial& f) const {
  if (standard_.relations.elements.empty()) return {f};
  Basis scratch;
  const Basis& rel = relations_in(f.ring(), scratch);
  return {canonical_normal_form(f, rel).remainder};
}

QuotientPoly RingTower::parse(std::string_view text) const {
  return project(parse_polynomial(ring(), text));
}

std::string RingTower::render(const QuotientPoly& q) const {
  const Polynomial& f = q.rep;
  if (y_.empty() || f.is_zero()) return f.to_string();
  const auto& names = f.ring()->vars().names();
  std::string out;
  for (const auto& [xm, yc] : split_by_x(f)) {
    std::string piece;
    if (yc.is_constant()) {
      piece = Polynomial::monomial(f.ring(), yc.leading_coeff(), xm).to_string();
    } else if (xm.is_one()) {
      piece = yc.to_string();
    } else if (yc.size() == 1) {
      piece = yc.to_string() + "*" + render_monomial(xm, names);
    } else {
      piece = "(" + yc.to_string() + ")*" + render_monomial(xm, names);
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

QuotientPoly RingTower::add(const QuotientPoly& a, const QuotientPoly& b) const {
  return project(a.rep + b.rep);
}

QuotientPoly RingTower::sub(const QuotientPoly& a, const QuotientPoly& b) const {
  return project(a.rep - b.rep);
}

QuotientPoly RingTower::mul(const QuotientPoly& a, const QuotientPoly& b) const {
  return project(a.rep * b.rep);
}

// ------------------------------------------------------------ completion

PullbackGB complete_in_layout(const RingTower& tower, const Layout& layout,
                              const std::vector<Polynomial>& lifts, const PullbackOptions& opts) {
  PullbackGB gb{tower, layout.ring, {}, {}, {}, tower.strong_projection(), std::nullopt, 0, 0};
  std::vector<Polynomial> inputs = layout.relations.elements;
  gb.nrelations = inputs.size();
  for (const auto& f : lifts) {
    if (!f.ring()->same_as(*layout.ring)) throw std::invalid_argument("lift outside the layout ring");
    inputs.push_back(f);
  }
  gb.nlifts = lifts.size();
  if (opts.track) {
    gb.tracked = gb_with_syzygies(inputs, opts.completion);
    gb.t_basis = gb.tracked->G;
  } else {
    gb.t_basis = groebner_basis(inputs, opts.completion).elements;
  }
  project_basis(gb);
  return gb;
}

PullbackGB gb_quotient(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                       const PullbackOptions& opts) {
  std::vector<Polynomial> lifts;
  for (const auto& g : gens) {
    QuotientPoly c = tower.project(g.rep);
    if (!c.is_zero()) lifts.push_back(std::move(c.rep));
  }
  return complete_in_layout(tower, tower.standard(), lifts, opts);
}

PullbackGB gb_galois(const BigInt& p, unsigned n, const std::string& y, std::string_view f,
                     const std::vector<std::string>& gens, const std::vector<std::string>& x,
                     OrderKind order) {
  RingTower tower = RingTower::galois(p, n, y, f, x, order);
  std::vector<QuotientPoly> lifted;
  for (const auto& g : gens) lifted.push_back(tower.parse(g));
  return gb_quotient(lifted, tower);
}

PullbackGB from_t_basis(const RingTower& tower, std::vector<Polynomial> t_basis) {
  PullbackGB gb{tower, tower.ring(), {}, {}, {}, tower.strong_projection(), std::nullopt, 0, 0};
  for (auto& g : t_basis) gb.t_basis.push_back(transfer(g, tower.ring()));
  sort_basis(gb.t_basis);
  project_basis(gb);
  return gb;
}

Polynomial real_representation(const Polynomial& g, const RingTower& tower) {
  if (g.is_zero()) return g;
  std::vector<Term> kept;
  if (g.ring()->vars().has_role(BlockRole::Relation)) {
    for (const auto& [xm, yc] : split_by_x(g)) {
      if (tower.project(yc).is_zero()) continue;
      for (const auto& t : yc.terms()) kept.push_back({t.coeff, t.mono * xm});
    }
  } else {
    for (const auto& t : g.terms())
      if (!tower.project(Polynomial::constant(g.ring(), t.coeff)).is_zero()) kept.push_back(t);
  }
  return Polynomial(g.ring(), std::move(kept));
}

// ------------------------------------------------------ queries on a basis

namespace {

Polynomial in_gb_ring(const QuotientPoly& f, const PullbackGB& gb) {
  if (f.rep.ring() == gb.ring || f.rep.ring()->same_as(*gb.ring)) return f.rep;
  return transfer(f.rep, gb.ring);
}

}  // namespace

Membership member(const QuotientPoly& f, const PullbackGB& gb) {
  Membership out;
  Polynomial lift = gb.tower.project(in_gb_ring(f, gb)).rep;
  if (lift.is_zero()) {
    out.member = true;
    out.cofactors.assign(gb.basis.size(), QuotientPoly{Polynomial(gb.ring)});
    return out;
  }
  auto div = divide(lift, gb.t_basis);
  if (!div.remainder.is_zero()) return out;
  out.member = true;
  for (std::size_t j = 0; j < gb.basis.size(); ++j)
    out.cofactors.push_back(gb.tower.project(div.cofactors[gb.source[j]]));
  return out;
}

QuotientPoly normal_form_quotient(const QuotientPoly& f, const PullbackGB& gb) {
  Polynomial lift = in_gb_ring(f, gb);
  if (gb.t_basis.empty()) return gb.tower.project(lift);
  return gb.tower.project(canonical_normal_form(lift, Basis{gb.t_basis, true}).remainder);
}

namespace {

struct ResidueShape {
  bool finite = false;
  std::vector<std::uint32_t> box;               // exclusive exponent bounds
  std::vector<std::pair<Monomial, BigInt>> slots;  // monomials with more than one choice
};

ResidueShape residue_shape(const PullbackGB& gb) {
  ResidueShape shape;
  const RingPtr& ring = gb.ring;
  const auto& dom = ring->domain();
  const std::size_t n = ring->nvars();
  bool has_constant = false;
  for (const auto& g : gb.t_basis)
    if (g.leading_monomial().is_one()) has_constant = true;
  if (dom.kind() == BaseDomain::Kind::Rationals && !has_constant) return shape;
  if (dom.is_integers() && !has_constant) return shape;
  shape.box.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : gb.t_basis) {
      const Monomial& m = g.leading_monomial();
      bool pure = true;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (!pure || !dom.is_unit(g.leading_coeff())) continue;
      if (!found || m[v] < shape.box[v]) shape.box[v] = m[v];
      found = true;
    }
    if (!found) return shape;
    shape.box[v] = std::max<std::uint32_t>(shape.box[v], 1);
  }
  shape.finite = true;
  Monomial m(n);
  for (;;) {
    BigInt choices;
    std::vector<Coeff> lcs;
    for (const auto& g : gb.t_basis)
      if (g.leading_monomial().divides(m)) lcs.push_back(g.leading_coeff());
    if (dom.is_integers()) {
      Coeff d = 0;
      for (const auto& c : lcs) d = dom.gcd_ext(d, c).g;
      choices = d.get_num();
    } else if (dom.kind() == BaseDomain::Kind::PrimeField) {
      choices = lcs.empty() ? dom.characteristic() : BigInt(1);
    } else {
      choices = 1;
    }
    if (choices > 1) shape.slots.push_back({m, choices});
    std::size_t v = 0;
    while (v < n) {
      if (++m[v] < shape.box[v]) break;
      m[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return shape;
}

}  // namespace

std::optional<BigInt> count_residues(const PullbackGB& gb) {
  auto shape = residue_shape(gb);
  if (!shape.finite) return std::nullopt;
  BigInt total = 1;
  for (const auto& s : shape.slots) total *= s.second;
  return total;
}

std::vector<QuotientPoly> enumerate_residues(const PullbackGB& gb, std::size_t bound) {
  auto shape = residue_shape(gb);
  if (!shape.finite) throw SemanticError("the quotient ring is infinite");
  BigInt total = 1;
  for (const auto& s : shape.slots) total *= s.second;
  if (total > bound)
    throw ResourceLimitExceeded("quotient has " + total.get_str() + " residues, above the bound " +
                                std::to_string(bound));
  std::vector<QuotientPoly> out;
  std::vector<BigInt> digits(shape.slots.size(), BigInt(0));
  for (;;) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] != 0) ts.push_back({Coeff(digits[i]), shape.slots[i].first});
    out.push_back(gb.tower.project(Polynomial(gb.ring, std::move(ts))));
    std::size_t i = 0;
    while (i < digits.size()) {
      if (++digits[i] < shape.slots[i].second) break;
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const QuotientPoly& a, const QuotientPoly& b) { return poly_less(a.rep, b.rep); });
  return out;
}

QuotientDivision divide_in_quotient(const QuotientPoly& f, const std::vector<QuotientPoly>& divisors,
                                    const RingTower& tower) {
  const RingPtr& ring = f.rep.ring();
  Basis relations = tower.relation_basis();
  if (ring != tower.ring()) {
    relations.elements.clear();
    for (const auto& r : tower.relation_basis().elements) relations.elements.push_back(transfer(r, ring));
  }
  std::vector<Polynomial> cof(divisors.size(), Polynomial(ring));
  std::vector<XLead> leads;
  for (const auto& d : divisors)
    leads.push_back(d.is_zero() ? XLead{Polynomial(ring), Monomial(ring->nvars())} : x_lead(d.rep));
  Polynomial p = tower.project(f.rep).rep;
  Polynomial rem(ring);
  while (!p.is_zero()) {
    XLead lp = x_lead(p);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (!divisors[i].is_zero() && leads[i].lm.divides(lp.lm)) idx.push_back(i);
    bool reduced = false;
    if (!idx.empty()) {
      std::vector<Polynomial> gens;
      for (auto i : idx) gens.push_back(leads[i].lc);
      for (const auto& r : relations.elements) gens.push_back(r);
      auto tb = gb_with_syzygies(gens);
      auto div = divide(lp.lc, tb.G);
      if (div.remainder.is_zero()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
          Polynomial mu(ring);
          for (std::size_t l = 0; l < tb.G.size(); ++l) mu += div.cofactors[l] * tb.M[l][k];
          if (mu.is_zero()) continue;
          Monomial shift = lp.lm / leads[idx[k]].lm;
          Polynomial step = mu * Polynomial::monomial(ring, Coeff(1), shift);
          p = p - step * divisors[idx[k]].rep;
          cof[idx[k]] += step;
        }
        p = tower.project(p).rep;
        reduced = true;
      }
    }
    if (!reduced) {
      Polynomial head = lp.lc * Polynomial::monomial(ring, Coeff(1), lp.lm);
      rem += head;
      p = p - head;
    }
  }
  QuotientDivision out;
  for (auto& c : cof) out.cofactors.push_back(tower.project(c));
  out.remainder = tower.project(rem);
  return out;
}

// ------------------------------------------------------------- helpers

Polynomial minimal_poly_to_primitive(const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("minimal_poly_to_primitive of zero");
  BigInt den = 1;
  for (const auto& t : q.terms()) den = lcm(den, BigInt(t.coeff.get_den()));
  BigInt content = 0;
  for (const auto& t : q.terms()) content = gcd(content, BigInt(t.coeff.get_num() * (den / t.coeff.get_den())));
  if (q.leading_coeff() < 0) content = -content;
  auto zz = PolyRing::make(BaseDomain::integers(), q.ring()->vars());
  std::vector<Term> ts;
  for (const auto& t : q.terms())
    ts.push_back({Coeff(BigInt(t.coeff.get_num() * (den / t.coeff.get_den()) / content)), t.mono});
  return Polynomial(zz, std::move(ts));
}

bool irreducible_mod_p(const std::vector<BigInt>& coeffs, const BigInt& p) {
  UPoly f;
  for (const auto& c : coeffs) f.push_back(mod_floor(c, p));
  trim(f);
  if (f.size() < 2) return false;
  // Make f monic modulo p.
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), p.get_mpz_t()) == 0) return false;
  for (auto& c : f) c = mod_floor(c * inv, p);
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    BigInt count;
    mpz_pow_ui(count.get_mpz_t(), p.get_mpz_t(), d);
    if (count > 2000000)
      throw SemanticError("irreducibility check modulo " + p.get_str() + " is too large");
    UPoly g(d + 1, BigInt(0));
    g[d] = 1;
    for (;;) {
      if (umod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d) {
        if (++g[i] < p) break;
        g[i] = 0;
        ++i;
      }
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace qgb

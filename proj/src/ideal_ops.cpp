#include "qgb/ideal_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgb/errors.hpp"

namespace qgb {

namespace {

const char* const kTag = "@w";

std::vector<Polynomial> lifts_in(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                                 const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial c = tower.project(g.rep).rep;
    if (!c.is_zero()) out.push_back(transfer(c, ring));
  }
  return out;
}

std::vector<Polynomial> free_of(const std::vector<Polynomial>& basis, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> out;
  for (const auto& g : basis)
    if (std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return g.involves(v); }))
      out.push_back(g);
  return out;
}

std::vector<std::size_t> indices_of(const RingPtr& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(static_cast<std::size_t>(ring->vars().index_of(n)));
  return out;
}

VariableBlock main_block(const std::string& label, std::vector<std::string> names, OrderKind order) {
  return {label, BlockRole::Main, order, std::move(names)};
}

PullbackGB zero_ideal(const RingTower& tower) { return gb_quotient({}, tower); }

}  // namespace

PullbackGB eliminate(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                     const std::vector<std::string>& remove, const PullbackOptions& opts) {
  const auto& x = tower.main_vars();
  for (const auto& v : remove)
    if (std::find(x.begin(), x.end(), v) == x.end())
      throw SemanticError("cannot eliminate '" + v + "': not a main variable");
  if (remove.empty()) return gb_quotient(gens, tower, opts);
  std::vector<std::string> removed, kept;
  for (const auto& v : x)
    (std::find(remove.begin(), remove.end(), v) != remove.end() ? removed : kept).push_back(v);
  std::vector<VariableBlock> front{main_block("removed", removed, tower.main_order())};
  if (!kept.empty()) front.push_back(main_block("kept", kept, tower.main_order()));
  Layout layout = tower.layout(std::move(front));
  PullbackGB full = complete_in_layout(tower, layout, lifts_in(gens, tower, layout.ring), opts);
  RingTower small = tower.with_main_vars(kept, tower.main_order());
  return from_t_basis(small, free_of(full.t_basis, indices_of(layout.ring, removed)));
}

PullbackGB intersect(const std::vector<QuotientPoly>& a, const std::vector<QuotientPoly>& b,
                     const RingTower& tower, const PullbackOptions& opts) {
  std::vector<VariableBlock> front{{"tag", BlockRole::Tag, OrderKind::Lex, {kTag}}};
  if (!tower.main_vars().empty()) front.push_back(main_block("x", tower.main_vars(), tower.main_order()));
  Layout layout = tower.layout(std::move(front));
  const RingPtr& ring = layout.ring;
  Polynomial w = Polynomial::variable(ring, kTag);
  Polynomial one_minus_w = Polynomial::constant(ring, Coeff(1)) - w;
  auto la = lifts_in(a, tower, ring);
  auto lb = lifts_in(b, tower, ring);
  if (la.empty() || lb.empty()) return zero_ideal(tower);
  std::vector<Polynomial> inputs;
  for (const auto& f : la) inputs.push_back(w * f);
  for (const auto& h : lb) inputs.push_back(one_minus_w * h);
  PullbackGB full = complete_in_layout(tower, layout, inputs, opts);
  return from_t_basis(tower, free_of(full.t_basis, indices_of(ring, {kTag})));
}

SyzygyBasis syzygies(const std::vector<QuotientPoly>& gens, const RingTower& tower,
                     const PullbackOptions& opts) {
  const RingPtr& ring = tower.ring();
  std::vector<Polynomial> inputs = tower.relation_basis().elements;
  const std::size_t nrel = inputs.size();
  for (const auto& g : gens) inputs.push_back(tower.project(transfer(g.rep, ring)).rep);
  SyzygyBasis out;
  if (inputs.empty()) return out;
  TrackedBasis tb = gb_with_syzygies(inputs, opts.completion);
  for (const auto& row : tb.input_syzygies()) {
    std::vector<QuotientPoly> s;
    bool nonzero = false;
    for (std::size_t i = nrel; i < inputs.size(); ++i) {
      s.push_back(tower.project(row[i]));
      nonzero = nonzero || !s.back().is_zero();
    }
    if (!nonzero) continue;
    // Fix the unit: the first nonzero entry gets a normalized leading coefficient.
    for (const auto& c : s) {
      if (c.is_zero()) continue;
      Coeff u = ring->domain().normalizing_unit(c.rep.leading_coeff());
      if (u != 1)
        for (auto& e : s) e = tower.project(e.rep.scale(u));
      break;
    }
    QuotientPoly dot{Polynomial(ring)};
    for (std::size_t i = 0; i < s.size(); ++i) dot = tower.add(dot, tower.mul(s[i], QuotientPoly{inputs[nrel + i]}));
    if (!dot.is_zero()) throw std::logic_error("syzygy does not annihilate the generators");
    if (std::find(out.generators.begin(), out.generators.end(), s) == out.generators.end())
      out.generators.push_back(std::move(s));
  }
  return out;
}

PullbackGB ideal_quotient(const std::vector<QuotientPoly>& j1, const std::vector<QuotientPoly>& j2,
                          const RingTower& tower, const PullbackOptions& opts) {
  std::optional<std::vector<QuotientPoly>> acc;
  for (const auto& h : j2) {
    QuotientPoly hc = tower.project(h.rep);
    if (hc.is_zero()) continue;
    std::vector<QuotientPoly> system{hc};
    system.insert(system.end(), j1.begin(), j1.end());
    std::vector<QuotientPoly> firsts;
    for (const auto& s : syzygies(system, tower, opts).generators)
      if (!s.front().is_zero()) firsts.push_back(s.front());
    if (!acc) {
      acc = firsts;
    } else {
      acc = intersect(*acc, firsts, tower, opts).basis;
    }
  }
  if (!acc) return gb_quotient({tower.parse("1")}, tower, opts);
  return gb_quotient(*acc, tower, opts);
}

PullbackGB kernel(const AlgebraMap& map, const PullbackOptions& opts) {
  const RingTower& target = map.target;
  if (map.images.size() != map.source_vars.size())
    throw SemanticError("map needs one image per source variable");
  RingTower source = target.with_main_vars(map.source_vars, map.source_order);
  std::vector<std::string> renamed;
  for (std::size_t i = 0; i < map.source_vars.size(); ++i) renamed.push_back("@s" + std::to_string(i + 1));
  std::vector<VariableBlock> front;
  if (!target.main_vars().empty()) front.push_back(main_block("x", target.main_vars(), target.main_order()));
  if (!renamed.empty()) front.push_back({"source", BlockRole::Source, map.source_order, renamed});
  Layout layout = target.layout(std::move(front));
  const RingPtr& ring = layout.ring;

  std::vector<Polynomial> inputs;
  for (std::size_t i = 0; i < renamed.size(); ++i) {
    Polynomial image = transfer(target.project(map.images[i].rep).rep, ring);
    inputs.push_back(Polynomial::variable(ring, renamed[i]) - image);
  }
  PullbackGB full = complete_in_layout(target, layout, inputs, opts);
  auto contracted = free_of(full.t_basis, indices_of(ring, target.main_vars()));

  // Back to the source ring: @s_i -> u_i, y -> y, x unused.
  std::vector<Polynomial> back;
  const auto& names = ring->vars().names();
  for (std::size_t v = 0; v < names.size(); ++v) {
    auto r = std::find(renamed.begin(), renamed.end(), names[v]);
    if (r != renamed.end()) {
      back.push_back(Polynomial::variable(source.ring(), map.source_vars[r - renamed.begin()]));
    } else if (ring->vars().role_of(v) == BlockRole::Relation) {
      back.push_back(Polynomial::variable(source.ring(), names[v]));
    } else {
      back.push_back(Polynomial(source.ring()));
    }
  }
  std::vector<Polynomial> mapped;
  for (const auto& g : contracted) mapped.push_back(substitute(g, back, source.ring()));
  PullbackGB out = from_t_basis(source, std::move(mapped));

  // Every generator must vanish on the images.
  std::vector<Polynomial> images;
  const auto& snames = source.ring()->vars().names();
  for (const auto& n : snames) {
    auto u = std::find(map.source_vars.begin(), map.source_vars.end(), n);
    images.push_back(u != map.source_vars.end() ? target.project(map.images[u - map.source_vars.begin()].rep).rep
                                                : Polynomial::variable(target.ring(), n));
  }
  for (const auto& p : out.basis)
    if (!target.project(substitute(p.rep, images, target.ring())).is_zero())
      throw std::logic_error("kernel element " + p.rep.to_string() + " does not vanish");
  return out;
}

std::vector<Polynomial> leading_coeff_ideal(const PullbackGB& gb) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.t_basis) out.push_back(x_lead(g).lc);
  return out;
}

}  // namespace qgb

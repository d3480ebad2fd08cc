#include <random>
#include <set>

#include "doctest.h"
#include "oracles/quotient_module.hpp"
#include "qgb/errors.hpp"
#include "support.hpp"

using namespace qgb;
using namespace testing;

namespace {

RingTower z4() { return RingTower::modular(4, {"x"}); }
RingTower gr42() { return RingTower::galois(2, 2, "y", "y^2 + y + 1", {"x"}); }

Monomial lm_x(const Polynomial& f) {
  if (f.ring()->vars().has_role(BlockRole::Relation)) return leading_data_x(f).lm_x;
  return f.leading_monomial();
}

std::vector<std::string> texts(const RingTower& t, const std::vector<QuotientPoly>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(t.render(q));
  return out;
}

void check_cofactors(const QuotientPoly& f, const PullbackGB& gb, const Membership& mem) {
  REQUIRE(mem.cofactors.size() == gb.basis.size());
  QuotientPoly sum{Polynomial(gb.ring)};
  for (std::size_t k = 0; k < gb.basis.size(); ++k)
    sum = gb.tower.add(sum, gb.tower.mul(mem.cofactors[k], gb.basis[k]));
  CHECK(sum == gb.tower.project(f.rep));
}

}  // namespace

TEST_CASE("project and lift") {
  auto t = z4();
  CHECK(t.project(parse_polynomial(t.ring(), "4*x")).is_zero());
  CHECK(t.project(parse_polynomial(t.ring(), "5*x")) == t.parse("x"));
  CHECK(t.project(parse_polynomial(t.ring(), "-x")).rep == parse_polynomial(t.ring(), "3*x"));
  CHECK(t.lift(t.parse("3*x")) == parse_polynomial(t.ring(), "3*x"));
  CHECK(t.lift(t.parse("0")).is_zero());

  auto g = gr42();
  auto p = g.project(parse_polynomial(g.ring(), "y^2*x"));
  CHECK(p.rep == parse_polynomial(g.ring(), "3*y*x + 3*x"));
  CHECK(g.render(p) == "(3*y + 3)*x");
  CHECK(g.lift(g.parse("y + 2")) == parse_polynomial(g.ring(), "y + 2"));
  CHECK(g.render(g.parse("x^2 + 2*y*x - 1")) == "x^2 + 2*y*x + 3");
}

TEST_CASE("project is idempotent on random values of every flavor") {
  std::vector<RingTower> towers{
      RingTower::plain(BaseDomain::integers(), {"x", "z"}),
      RingTower::modular(6, {"x", "z"}),
      RingTower::field_quotient(BaseDomain::rationals(), {"y"}, {"y^2 - 2"}, {"x"}),
      RingTower::field_quotient(BaseDomain::prime_field(5), {"y", "w"}, {"y^2 - w", "w^2 - 1"}, {"x"}),
      RingTower::algebraic("y", "y^2 - 1/2", {"x"}),
      gr42(),
  };
  std::mt19937_64 rng(7);
  for (const auto& t : towers) {
    for (int k = 0; k < 30; ++k) {
      auto f = random_polynomial(t.ring(), rng, 4, 3, 20);
      auto p = t.project(f);
      CHECK(t.project(t.lift(p)) == p);
      auto q = t.project(random_polynomial(t.ring(), rng, 4, 3, 20));
      CHECK(t.mul(p, q) == t.project(f * q.rep));
      CHECK(t.sub(t.add(p, q), q) == p);
    }
  }
}

TEST_CASE("tower descriptions and validation") {
  CHECK(z4().describe() == "ZZ/4");
  CHECK(gr42().describe() == "GR(4, 2)");
  CHECK(gr42().relation_basis().elements.size() == 2);
  CHECK_FALSE(gr42().strong_projection());
  CHECK(z4().strong_projection());
  CHECK(RingTower::algebraic("y", "y^2 - 1/2", {"x"}).relations().front().to_string() == "2*y^2 - 1");

  CHECK_THROWS_AS(RingTower::modular(1, {"x"}), SemanticError);
  CHECK_THROWS_AS(RingTower::galois(4, 1, "y", "y^2 + y + 1", {"x"}), SemanticError);
  // y^2 + 1 = (y + 1)^2 modulo 2.
  CHECK_THROWS_AS(RingTower::galois(2, 2, "y", "y^2 + 1", {"x"}), SemanticError);
  CHECK_THROWS_AS(RingTower::galois(2, 2, "y", "2*y^2 + y + 1", {"x"}), SemanticError);
  CHECK_THROWS_AS(RingTower::galois(2, 2, "y", "y^2 + x", {"x"}), SemanticError);
  CHECK_THROWS_AS(RingTower::modular(4, {"x", "x"}), SemanticError);
  CHECK_THROWS_AS(RingTower::field_quotient(BaseDomain::rationals(), {"x"}, {"x^2"}, {"x"}),
                  SemanticError);

  auto multi = RingTower::field_quotient(BaseDomain::rationals(), {"y", "w"}, {"y^2 - w", "y*w - 1"}, {"x"});
  CHECK(multi.notices().size() == 1);
  CHECK(verify_groebner(multi.relation_basis().elements));
  auto single = RingTower::field_quotient(BaseDomain::rationals(), {"y"}, {"y^2"}, {"x"});
  CHECK(single.notices().empty());
}

TEST_CASE("gb_quotient worked examples") {
  auto t = z4();
  auto gb = gb_quotient(qpolys(t, {"2*x"}), t);
  CHECK(texts(t, gb.basis) == std::vector<std::string>{"2*x"});
  CHECK(gb.strong);
  CHECK(gb.t_basis.size() == 2);

  auto z6 = RingTower::modular(6, {"x"});
  gb = gb_quotient(qpolys(z6, {"3*x + 3", "2*x"}), z6);
  CHECK(texts(z6, gb.basis) == std::vector<std::string>{"x + 3"});

  auto ky = RingTower::field_quotient(BaseDomain::rationals(), {"y"}, {"y^2"}, {"x"});
  gb = gb_quotient(qpolys(ky, {"y*x"}), ky);
  CHECK(texts(ky, gb.basis) == std::vector<std::string>{"y*x"});
  CHECK(gb.strong);
  CHECK(gb.order_description() == ky.ring()->order().describe());

  gb = gb_quotient(qpolys(t, {"0", "4*x"}), t);
  CHECK(gb.basis.empty());

  gb = gb_galois(2, 2, "y", "y^2 + y + 1", {"2"}, {"x"});
  CHECK(texts(gb.tower, gb.basis) == std::vector<std::string>{"2"});
  CHECK_FALSE(gb.strong);
  gb = gb_galois(2, 2, "y", "y^2 + y + 1", {"1"}, {"x"});
  CHECK(texts(gb.tower, gb.basis) == std::vector<std::string>{"1"});
}

TEST_CASE("projected leading monomials match their sources") {
  std::mt19937_64 rng(11);
  std::vector<RingTower> towers{
      RingTower::modular(12, {"x", "z"}),
      RingTower::field_quotient(BaseDomain::prime_field(3), {"y"}, {"y^3 - y - 1"}, {"x", "z"}),
      RingTower::algebraic("y", "y^2 + 1", {"x"}),
      gr42(),
  };
  for (const auto& t : towers) {
    for (int k = 0; k < 6; ++k) {
      std::vector<QuotientPoly> gens;
      for (int i = 0; i < 2; ++i) gens.push_back(random_element(t, rng, 3, 2, 9));
      auto gb = gb_quotient(gens, t);
      for (std::size_t j = 0; j < gb.basis.size(); ++j) {
        CHECK(lm_x(gb.basis[j].rep) == lm_x(gb.t_basis[gb.source[j]]));
        CHECK(lm_x(real_representation(gb.t_basis[gb.source[j]], t)) == lm_x(gb.basis[j].rep));
      }
      for (const auto& g : gens) CHECK(member(g, gb).member);
    }
  }
}

TEST_CASE("real representation") {
  auto t = z4();
  CHECK(real_representation(parse_polynomial(t.ring(), "2*x + 4"), t) == parse_polynomial(t.ring(), "2*x"));
  CHECK(real_representation(parse_polynomial(t.ring(), "3*x + 1"), t) == parse_polynomial(t.ring(), "3*x + 1"));
  auto g = gr42();
  CHECK(real_representation(parse_polynomial(g.ring(), "(y^2 + y + 1)*x^2 + y*x"), g) ==
        parse_polynomial(g.ring(), "y*x"));
}

TEST_CASE("membership examples with cofactors") {
  auto t = z4();
  auto gb = gb_quotient(qpolys(t, {"2*x + 2"}), t);
  CHECK_FALSE(member(t.parse("2*x"), gb).member);
  CHECK(member(t.parse("0"), gb).member);
  auto f = t.parse("2*x^2 + 2*x");
  auto mem = member(f, gb);
  CHECK(mem.member);
  check_cofactors(f, gb, mem);
}

TEST_CASE("membership agrees with a cofactor lattice over ZZ/m") {
  std::mt19937_64 rng(5);
  for (long m : {2L, 3L, 4L, 6L}) {
    auto t = RingTower::modular(m, {"x"});
    oracle::DenseRing dr{m, {}};
    auto candidates = all_dense(dr, 4);
    for (int k = 0; k < 3; ++k) {
      std::vector<QuotientPoly> gens;
      std::vector<oracle::Dense> dense;
      std::size_t s = 1 + rng() % 2;
      while (gens.size() < s) {
        auto g = random_element(t, rng, 3, 2, static_cast<long>(m));
        if (g.is_zero()) continue;
        gens.push_back(g);
        dense.push_back(to_dense(g.rep));
      }
      auto gb = gb_quotient(gens, t);
      const std::size_t cofactor_degree = 6, len = 2 + cofactor_degree + 2;
      auto lattice = oracle::ideal_lattice(dr, dense, cofactor_degree, len);
      for (const auto& c : candidates) {
        QuotientPoly f = t.project(from_dense(t.ring(), c));
        auto mem = member(f, gb);
        CHECK(mem.member == lattice.contains(dr.flatten(c, len)));
        if (mem.member) check_cofactors(f, gb, mem);
      }
    }
  }
}

TEST_CASE("Galois ring membership agrees with the lattice") {
  auto gb = gb_galois(2, 2, "y", "y^2 + y + 1", {"2*x", "y*x"}, {"x"});
  const auto& t = gb.tower;
  oracle::DenseRing dr{4, {1, 1, 1}};
  std::vector<oracle::Dense> dense{to_dense(t.parse("2*x").rep), to_dense(t.parse("y*x").rep)};
  const std::size_t cofactor_degree = 4, len = 2 + cofactor_degree + 1;
  auto lattice = oracle::ideal_lattice(dr, dense, cofactor_degree, len);
  std::size_t members = 0;
  for (const auto& c : all_dense(dr, 3)) {
    QuotientPoly f = t.project(from_dense(t.ring(), c));
    bool in = member(f, gb).member;
    CHECK(in == lattice.contains(dr.flatten(c, len)));
    members += in;
  }
  // y is a unit, so the ideal is <x>: 16^2 of the 16^3 candidates.
  CHECK(members == 256);
}

TEST_CASE("residues") {
  auto t = z4();
  auto gb = gb_quotient(qpolys(t, {"2*x", "x^2"}), t);
  auto res = enumerate_residues(gb);
  CHECK(res.size() == 8);
  CHECK(*count_residues(gb) == 8);
  oracle::DenseRing dr{4, {}};
  CHECK(oracle::residue_count(dr, {to_dense(t.parse("2*x").rep), to_dense(t.parse("x^2").rep)}, 2) == 8);
  std::set<std::string> want;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b) want.insert(t.render(t.parse(std::to_string(b) + "*x + " + std::to_string(a))));
  std::set<std::string> got;
  for (const auto& r : res) got.insert(t.render(r));
  CHECK(got == want);

  auto g = gr42();
  auto ggb = gb_quotient(qpolys(g, {"2*x", "x^2"}), g);
  CHECK(enumerate_residues(ggb).size() == 64);
  oracle::DenseRing gr{4, {1, 1, 1}};
  CHECK(oracle::residue_count(gr, {to_dense(g.parse("2*x").rep), to_dense(g.parse("x^2").rep)}, 2) == 64);

  auto gf = RingTower::plain(BaseDomain::prime_field(3), {"x", "z"});
  auto fgb = gb_quotient(qpolys(gf, {"x^2", "z^2 - x"}), gf);
  CHECK(*count_residues(fgb) == 81);

  CHECK_THROWS_AS(enumerate_residues(gb_quotient(qpolys(t, {"2*x"}), t)), SemanticError);
  CHECK_FALSE(count_residues(gb_quotient(qpolys(t, {"2*x"}), t)));
  auto qq = RingTower::plain(BaseDomain::rationals(), {"x"});
  CHECK_THROWS_AS(enumerate_residues(gb_quotient(qpolys(qq, {"x^2"}), qq)), SemanticError);
  CHECK(enumerate_residues(gb_quotient(qpolys(qq, {"x - 1", "x"}), qq)).size() == 1);
  CHECK_THROWS_AS(enumerate_residues(ggb, 10), ResourceLimitExceeded);
}

TEST_CASE("normal forms are canonical coset representatives") {
  std::mt19937_64 rng(3);
  for (auto t : {z4(), RingTower::modular(6, {"x", "z"}), gr42(),
                 RingTower::field_quotient(BaseDomain::rationals(), {"y"}, {"y^2 + 1"}, {"x"})}) {
    std::vector<QuotientPoly> gens{random_element(t, rng, 3, 2, 6), random_element(t, rng, 2, 2, 6)};
    auto gb = gb_quotient(gens, t);
    for (int k = 0; k < 30; ++k) {
      auto f = random_element(t, rng, 3, 3, 6);
      auto g = random_element(t, rng, 3, 3, 6);
      auto nf = normal_form_quotient(f, gb);
      CHECK(normal_form_quotient(nf, gb) == nf);
      CHECK(member(t.sub(f, nf), gb).member);
      CHECK((nf == normal_form_quotient(g, gb)) == member(t.sub(f, g), gb).member);
      CHECK(normal_form_quotient(random_member(t, gens, rng), gb).is_zero());
    }
  }
  auto t = z4();
  auto gb = gb_quotient(qpolys(t, {"2*x", "x^2"}), t);
  CHECK(normal_form_quotient(t.parse("5*x"), gb) == t.parse("x"));
}

TEST_CASE("strong flag soundness over ZZ/m") {
  std::mt19937_64 rng(17);
  for (long m : {4L, 6L, 12L}) {
    auto t = RingTower::modular(m, {"x", "z"});
    for (int k = 0; k < 4; ++k) {
      std::vector<QuotientPoly> gens{random_element(t, rng, 3, 2, 12), random_element(t, rng, 3, 2, 12)};
      auto gb = gb_quotient(gens, t);
      REQUIRE(gb.strong);
      for (int s = 0; s < 25; ++s)
        CHECK(strong_reduce_modular(random_member(t, gens, rng), gb.basis, t).is_zero());
    }
  }
}

TEST_CASE("division inside the quotient") {
  std::mt19937_64 rng(23);
  for (auto t : {z4(), gr42(), RingTower::algebraic("y", "y^2 - 2", {"x"})}) {
    std::vector<QuotientPoly> gens{random_element(t, rng, 3, 2, 6), random_element(t, rng, 2, 2, 6)};
    auto gb = gb_quotient(gens, t);
    for (int k = 0; k < 20; ++k) {
      auto f = t.add(random_member(t, gens, rng), k % 2 ? random_element(t, rng, 2, 2, 5) : QuotientPoly{Polynomial(t.ring())});
      auto d = divide_in_quotient(f, gb.basis, t);
      QuotientPoly sum = d.remainder;
      for (std::size_t i = 0; i < gb.basis.size(); ++i) sum = t.add(sum, t.mul(d.cofactors[i], gb.basis[i]));
      CHECK(sum == f);
      if (k % 2 == 0) CHECK(d.remainder.is_zero());
    }
  }
}

TEST_CASE("primitive minimal polynomials") {
  auto qq = PolyRing::make(BaseDomain::rationals(), {"y"});
  CHECK(minimal_poly_to_primitive(parse_polynomial(qq, "y^2 - 1/2")).to_string() == "2*y^2 - 1");
  CHECK(minimal_poly_to_primitive(parse_polynomial(qq, "y^2 - 2")).to_string() == "y^2 - 2");
  CHECK(minimal_poly_to_primitive(parse_polynomial(qq, "4*y - 2")).to_string() == "2*y - 1");
  CHECK(minimal_poly_to_primitive(parse_polynomial(qq, "-3/4*y")).to_string() == "y");
  CHECK(minimal_poly_to_primitive(parse_polynomial(qq, "y^2 - 1/2")).ring()->domain().is_integers());
}

TEST_CASE("irreducibility modulo p") {
  CHECK(irreducible_mod_p({1, 1, 1}, 2));
  CHECK_FALSE(irreducible_mod_p({1, 0, 1}, 2));
  CHECK(irreducible_mod_p({1, 1, 0, 1}, 2));
  CHECK_FALSE(irreducible_mod_p({1, 0, 0, 1}, 2));
  CHECK(irreducible_mod_p({1, 0, 1}, 3));
  CHECK_FALSE(irreducible_mod_p({1, 0, 1}, 5));
  CHECK_FALSE(irreducible_mod_p({1, 0, 1, 0, 1}, 2));
  // x^4 + x + 1 over GF(2) has no roots and is not (x^2 + x + 1)^2.
  CHECK(irreducible_mod_p({1, 1, 0, 0, 1}, 2));
}

// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles/quotient_module.hpp"
#include "oracles/syzygy.hpp"
#include "qgb/errors.hpp"
#include "qgb/ideal_ops.hpp"
#include "qgb/reduction.hpp"
#include "support.hpp"

using namespace qgb;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Random polynomial of total degree <= degree with nonzero coefficients in
/// [-bound, bound].
Polynomial random_bounded(const RingPtr& ring, std::mt19937_64& rng, std::size_t terms, std::uint32_t degree,
                          long bound) {
  auto monos = oracle::monomials_up_to(ring->nvars(), degree);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    long c = 0;
    while (c == 0) c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    ts.push_back({Coeff(c), monos[rng() % monos.size()]});
  }
  return Polynomial(ring, std::move(ts));
}

/// Single-divisor reduction over ZZ: LT(f) must be an integer multiple of a
/// shifted LT(g) for one g. Returns the stuck remainder.
Polynomial strong_reduce_integer(Polynomial f, const std::vector<Polynomial>& basis) {
  while (!f.is_zero()) {
    const Term& lt = f.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& g : basis)
      if (g.leading_monomial().divides(lt.mono) && lt.coeff.get_num() % g.leading_coeff().get_num() == 0) {
        hit = &g;
        break;
      }
    if (!hit) return f;
    BigInt q = lt.coeff.get_num() / hit->leading_coeff().get_num();
    f = f.sub_mul_term(Coeff(q), lt.mono / hit->leading_monomial(), *hit);
  }
  return f;
}

// 1. Strong-basis certificate over ZZ.
Outcome strong_certificate() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  Outcome out;
  std::size_t failures = 0, reductions = 0;
  for (int k = 0; k < 50; ++k) {
    auto t = RingTower::plain(BaseDomain::integers(), k % 3 == 0 ? std::vector<std::string>{"x"}
                                                                 : std::vector<std::string>{"x", "y"});
    std::vector<QuotientPoly> gens;
    const std::size_t s = 1 + rng() % 3;
    while (gens.size() < s) {
      auto g = random_bounded(t.ring(), rng, 1 + rng() % 4, 3, 10);
      if (!g.is_zero()) gens.push_back(QuotientPoly{g});
    }
    auto gb = gb_quotient(gens, t);
    auto basis = reps(gb.basis);
    for (int c = 0; c < 20; ++c) {
      Polynomial f(t.ring());
      for (const auto& g : gens) f += random_bounded(t.ring(), rng, 1 + rng() % 3, 2, 5) * g.rep;
      failures += !strong_reduce_integer(f, basis).is_zero();
      ++reductions;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = failures == 0 && secs < 30.0;
  std::ostringstream d;
  d << reductions << " combinations, " << failures << " not reduced to 0, " << secs << " s";
  out.detail = d.str();
  return out;
}

// 2. Exhaustive membership over ZZ/m against the cofactor lattice.
Outcome membership_agreement() {
  std::mt19937_64 rng(202);
  Outcome out;
  std::size_t candidates = 0, disagreements = 0, bad_cofactors = 0;
  for (long m : {2L, 3L, 4L, 6L}) {
    auto t = RingTower::modular(m, {"x"});
    oracle::DenseRing dr{m, {}};
    auto all = all_dense(dr, 4);
    for (int k = 0; k < 10; ++k) {
      std::vector<QuotientPoly> gens;
      std::vector<oracle::Dense> dense;
      const std::size_t s = 1 + rng() % 3;
      while (gens.size() < s) {
        auto g = t.project(random_bounded(t.ring(), rng, 1 + rng() % 3, 3, m));
        if (g.is_zero()) continue;
        gens.push_back(g);
        dense.push_back(to_dense(g.rep));
      }
      auto gb = gb_quotient(gens, t);
      const std::size_t cofactor_degree = 10, len = 3 + cofactor_degree + 1;
      auto lattice = oracle::ideal_lattice(dr, dense, cofactor_degree, len);
      for (const auto& c : all) {
        QuotientPoly f = t.project(from_dense(t.ring(), c));
        auto mem = member(f, gb);
        ++candidates;
        if (mem.member != lattice.contains(dr.flatten(c, len))) ++disagreements;
        if (mem.member) {
          QuotientPoly sum{Polynomial(t.ring())};
          for (std::size_t i = 0; i < gb.basis.size(); ++i) sum = t.add(sum, t.mul(mem.cofactors[i], gb.basis[i]));
          bad_cofactors += !(sum == f);
        }
      }
    }
  }
  out.pass = disagreements == 0 && bad_cofactors == 0;
  out.detail = std::to_string(candidates) + " candidates, " + std::to_string(disagreements) + " disagreements, " +
               std::to_string(bad_cofactors) + " bad cofactor lists";
  return out;
}

// 3. Leading monomials survive projection; projected bases reduce members.
Outcome projection_structure() {
  std::mt19937_64 rng(303);
  std::vector<RingTower> towers{
      RingTower::plain(BaseDomain::integers(), {"x", "z"}),
      RingTower::modular(4, {"x"}),
      RingTower::modular(6, {"x", "z"}),
      RingTower::modular(12, {"x", "z"}),
      RingTower::field_quotient(BaseDomain::prime_field(3), {"y"}, {"y^3 - y - 1"}, {"x", "z"}),
      RingTower::field_quotient(BaseDomain::rationals(), {"y"}, {"y^2 + 1"}, {"x"}),
      RingTower::algebraic("y", "y^2 - 2", {"x"}),
      RingTower::galois(2, 2, "y", "y^2 + y + 1", {"x"}),
      RingTower::galois(3, 2, "y", "y^2 + 1", {"x"}),
  };
  Outcome out;
  std::size_t runs = 0, lm_mismatch = 0, unreduced = 0;
  for (const auto& t : towers) {
    for (int k = 0; k < 3; ++k) {
      std::vector<QuotientPoly> gens{random_element(t, rng, 3, 2, 9), random_element(t, rng, 2, 2, 9)};
      auto gb = gb_quotient(gens, t);
      ++runs;
      for (std::size_t j = 0; j < gb.basis.size(); ++j)
        lm_mismatch += !(x_lead(gb.basis[j].rep).lm == x_lead(gb.t_basis[gb.source[j]]).lm);
      for (int s = 0; s < 100; ++s) {
        auto f = random_member(t, gens, rng);
        bool zero = t.flavor() == TowerFlavor::ModularInteger
                        ? strong_reduce_modular(f, gb.basis, t).is_zero()
                        : divide_in_quotient(f, gb.basis, t).remainder.is_zero();
        unreduced += !zero;
      }
    }
  }
  out.pass = lm_mismatch == 0 && unreduced == 0;
  out.detail = std::to_string(runs) + " runs, " + std::to_string(lm_mismatch) + " leading monomial mismatches, " +
               std::to_string(unreduced) + " members not reduced to 0";
  return out;
}

/// Both inclusions of <got> and <want> by membership.
bool same_ideal(const RingTower& t, const std::vector<QuotientPoly>& got, const std::vector<std::string>& want) {
  std::vector<QuotientPoly> w;
  for (const auto& s : want) w.push_back(t.parse(s));
  auto gw = gb_quotient(w, t), gg = gb_quotient(got, t);
  for (const auto& g : got)
    if (!member(g, gw).member) return false;
  for (const auto& g : w)
    if (!member(g, gg).member) return false;
  return true;
}

std::vector<std::string> rendered(const PullbackGB& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.basis) out.push_back(gb.tower.render(g));
  return out;
}

// 4. Worked identities.
Outcome worked_identities() {
  Outcome out;
  std::vector<std::string> failed;
  auto check = [&](const std::string& name, const PullbackGB& gb, const std::vector<std::string>& want,
                   bool exact) {
    bool ok = same_ideal(gb.tower, gb.basis, want) && (!exact || rendered(gb) == want);
    if (!ok) failed.push_back(name);
  };
  auto z4 = RingTower::modular(4, {"x"});
  auto z6 = RingTower::modular(6, {"x"});
  auto zz = RingTower::plain(BaseDomain::integers(), {"x"});
  auto qq = RingTower::plain(BaseDomain::rationals(), {"x"});

  check("<2x> over Z4", gb_quotient(qpolys(z4, {"2*x"}), z4), {"2*x"}, true);
  check("<3x+3, 2x> over Z6", gb_quotient(qpolys(z6, {"3*x + 3", "2*x"}), z6), {"x + 3"}, true);
  check("<4, 6> over Z", gb_quotient(qpolys(zz, {"4", "6"}), zz), {"2"}, true);
  AlgebraMap phi{{"u", "v"}, OrderKind::GrevLex, qq, qpolys(qq, {"x^2", "x^3"})};
  check("kernel u->x^2, v->x^3", kernel(phi), {"u^3 - v^2"}, true);
  check("<x> cap <x-1> over Q", intersect(qpolys(qq, {"x"}), qpolys(qq, {"x - 1"}), qq), {"x^2 - x"}, false);
  auto cap = intersect(qpolys(z6, {"2"}), qpolys(z6, {"3"}), z6);
  if (!cap.basis.empty() || !same_ideal(z6, cap.basis, {"0"})) failed.push_back("<2> cap <3> over Z6");
  check("<2x> : <2> over Z4", ideal_quotient(qpolys(z4, {"2*x"}), qpolys(z4, {"2"}), z4), {"x", "2"}, false);

  out.pass = failed.empty();
  out.detail = "7 identities";
  for (const auto& f : failed) out.detail += ", failed: " + f;
  return out;
}

// 5. Residue counts.
Outcome residue_counts() {
  Outcome out;
  auto z4 = RingTower::modular(4, {"x"});
  auto a = gb_quotient(qpolys(z4, {"2*x", "x^2"}), z4);
  auto na = enumerate_residues(a).size();
  auto oa = oracle::residue_count({4, {}}, {to_dense(z4.parse("2*x").rep), to_dense(z4.parse("x^2").rep)}, 2);

  auto gr = RingTower::galois(2, 2, "y", "y^2 + y + 1", {"x"});
  auto b = gb_quotient(qpolys(gr, {"2*x", "x^2"}), gr);
  auto nb = enumerate_residues(b).size();
  auto ob = oracle::residue_count({4, {1, 1, 1}}, {to_dense(gr.parse("2*x").rep), to_dense(gr.parse("x^2").rep)}, 2);

  out.pass = na == 8 && oa == 8 && nb == 64 && ob == 64;
  out.detail = "Z4[x]/<2x, x^2>: " + std::to_string(na) + " (oracle " + oa.get_str() + "), GR(4,2)[x]/<2x, x^2>: " +
               std::to_string(nb) + " (oracle " + ob.get_str() + ")";
  return out;
}

// 6. Syzygies: sound and complete up to degree 2.
Outcome syzygy_suite() {
  struct Case {
    RingTower tower;
    std::vector<const char*> gens;
  };
  auto q = RingTower::plain(BaseDomain::rationals(), {"x", "y"});
  auto z = RingTower::plain(BaseDomain::integers(), {"x", "y"});
  auto z4 = RingTower::modular(4, {"x", "y"});
  std::vector<Case> cases{
      {q, {"x^2 + y", "x*y - 1", "y^2"}},
      {q, {"x", "y", "x + y"}},
      {z, {"2*x", "3*y"}},
      {z, {"2*x + 1", "x^2"}},
      {z, {"6*x", "4*y", "x*y"}},
      {z4, {"2*x", "x*y + 2"}},
      {z4, {"2", "x"}},
  };
  Outcome out;
  std::size_t unsound = 0, incomplete = 0, generators = 0;
  for (const auto& c : cases) {
    std::vector<QuotientPoly> F;
    for (const char* g : c.gens) F.push_back(c.tower.parse(g));
    auto s = syzygies(F, c.tower);
    generators += s.generators.size();
    auto report = oracle::check_syzygies(c.tower, F, s, 2);
    unsound += !report.sound;
    incomplete += !report.complete || report.oracle_rank == 0;
  }
  out.pass = unsound == 0 && incomplete == 0;
  out.detail = std::to_string(cases.size()) + " instances, " + std::to_string(generators) + " generators, " +
               std::to_string(unsound) + " unsound, " + std::to_string(incomplete) + " incomplete";
  return out;
}

std::string capture(const std::string& cmd) {
  std::string text;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) text.append(buf.data(), n);
  text += "\nstatus " + std::to_string(pclose(p));
  return text;
}

// 7. Determinism of the command line tool.
Outcome determinism() {
  Outcome out;
  std::vector<std::filesystem::path> scripts;
  for (const char* sub : {"", "errors"})
    for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(QGB_SCRIPTS_DIR) / sub))
      if (e.path().extension() == ".qgb") scripts.push_back(e.path());
  std::sort(scripts.begin(), scripts.end());
  std::size_t differing = 0;
  for (const auto& s : scripts) {
    const std::string cmd = std::string(QGB_BINARY) + " " + s.string() + " --show-lift 2>&1";
    std::string first = capture(cmd);
    for (int r = 0; r < 2; ++r)
      if (capture(cmd) != first) {
        ++differing;
        out.detail += s.filename().string() + " differs, ";
        break;
      }
  }
  out.pass = differing == 0 && !scripts.empty();
  out.detail += std::to_string(scripts.size()) + " scripts x 3 runs, " + std::to_string(differing) + " differing";
  return out;
}

// 8. Division contract for every base domain.
Outcome division_contract() {
  std::mt19937_64 rng(808);
  Outcome out;
  std::vector<std::pair<std::string, BaseDomain>> domains{
      {"ZZ", BaseDomain::integers()}, {"QQ", BaseDomain::rationals()}, {"GF(7)", BaseDomain::prime_field(7)}};
  for (const auto& [name, dom] : domains) {
    std::size_t broken = 0;
    for (int k = 0; k < 200; ++k) {
      auto ring = PolyRing::make(dom, {"x", "y"}, k % 2 ? OrderKind::Lex : OrderKind::GrevLex);
      Polynomial f = random_polynomial(ring, rng, 1 + rng() % 5, 3, 9);
      std::vector<Polynomial> F;
      const std::size_t s = 1 + rng() % 3;
      while (F.size() < s) {
        auto g = random_polynomial(ring, rng, 1 + rng() % 3, 2, 9);
        if (!g.is_zero()) F.push_back(g);
      }
      auto d = divide(f, F);
      Polynomial sum = d.remainder;
      bool ok = d.cofactors.size() == F.size();
      for (std::size_t i = 0; ok && i < F.size(); ++i) {
        Polynomial p = d.cofactors[i] * F[i];
        sum += p;
        if (!p.is_zero() && (f.is_zero() || ring->order().less(f.leading_monomial(), p.leading_monomial())))
          ok = false;
      }
      broken += !(ok && sum == f);
    }
    if (broken) out.pass = false;
    out.detail += (out.detail.empty() ? "" : ", ") + name + ": " + std::to_string(broken) + "/200 broken";
  }
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"strong basis certificate over ZZ", strong_certificate},
      {"exhaustive membership over ZZ/m", membership_agreement},
      {"projection keeps leading monomials and reduces members", projection_structure},
      {"worked identities", worked_identities},
      {"residue counts", residue_counts},
      {"syzygy suite", syzygy_suite},
      {"CLI determinism", determinism},
      {"division contract", division_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}

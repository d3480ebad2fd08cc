#include "qgb/script.hpp"

#include <map>
#include <set>

#include "qgb/errors.hpp"
#include "qgb/ideal_ops.hpp"
#include "qgb/pullback.hpp"

namespace qgb {

bool RingSpec::operator==(const RingSpec& o) const {
  return kind == o.kind && number == o.number && power == o.power && degree == o.degree &&
         relation == o.relation && quot_base == o.quot_base && quot_prime == o.quot_prime &&
         relations == o.relations;
}

bool Statement::operator==(const Statement& o) const {
  return kind == o.kind && name == o.name && other == o.other && ring == o.ring && names == o.names &&
         order == o.order && polys == o.polys && poly == o.poly;
}

// ----------------------------------------------------------------- parsing

namespace {

const std::vector<std::string> kStatementWords{
    "'ring'", "'vars'", "'ideal'", "'map'", "'gb'", "'nf'", "'member'", "'eliminate'",
    "'intersect'", "'quot'", "'kernel'", "'syz'", "'residues'"};

std::uint32_t small_integer(TokenCursor& cur) {
  const Token& t = cur.peek();
  BigInt v(cur.expect_integer().text);
  if (v > 1000000) throw ParseError(t.line, t.column, {"integer up to 1000000"}, t.describe());
  return static_cast<std::uint32_t>(v.get_ui());
}

std::vector<std::string> ident_list(TokenCursor& cur) {
  std::vector<std::string> out{cur.expect_ident().text};
  while (cur.accept(",")) out.push_back(cur.expect_ident().text);
  return out;
}

std::vector<Expr> expr_list(TokenCursor& cur) {
  std::vector<Expr> out;
  cur.expect("[");
  if (cur.accept("]")) return out;
  out.push_back(parse_expr(cur));
  while (cur.accept(",")) out.push_back(parse_expr(cur));
  cur.expect("]");
  return out;
}

Expr paren_expr(TokenCursor& cur) {
  cur.expect("(");
  Expr e = parse_expr(cur);
  cur.expect(")");
  return e;
}

BigInt gf_prime(TokenCursor& cur) {
  cur.expect("(");
  BigInt p(cur.expect_integer().text);
  cur.expect(")");
  return p;
}

RingSpec parse_ring(TokenCursor& cur) {
  RingSpec r;
  const Token& t = cur.peek();
  if (cur.accept_word("QQ")) {
    r.kind = RingSpec::Kind::QQ;
  } else if (cur.accept_word("ZZ")) {
    r.kind = RingSpec::Kind::ZZ;
    if (cur.accept_word("mod")) {
      r.kind = RingSpec::Kind::ZZMod;
      r.number = BigInt(cur.expect_integer().text);
    }
  } else if (cur.accept_word("GF")) {
    r.kind = RingSpec::Kind::GF;
    r.number = gf_prime(cur);
  } else if (cur.accept_word("GR")) {
    r.kind = RingSpec::Kind::GR;
    cur.expect("(");
    r.number = BigInt(cur.expect_integer().text);
    if (cur.accept("^")) r.power = small_integer(cur);
    cur.expect(",");
    r.degree = small_integer(cur);
    cur.expect(")");
    cur.expect_word("rel");
    r.relation = parse_expr(cur);
  } else if (cur.accept_word("quot")) {
    r.kind = RingSpec::Kind::Quot;
    cur.expect("(");
    if (cur.accept_word("QQ")) {
      r.quot_base = RingSpec::Kind::QQ;
    } else if (cur.accept_word("ZZ")) {
      r.quot_base = RingSpec::Kind::ZZ;
    } else if (cur.accept_word("GF")) {
      r.quot_base = RingSpec::Kind::GF;
      r.quot_prime = gf_prime(cur);
    } else {
      cur.fail({"'QQ'", "'ZZ'", "'GF'"});
    }
    cur.expect(",");
    r.relations = expr_list(cur);
    cur.expect(")");
  } else {
    throw ParseError(t.line, t.column, {"'QQ'", "'ZZ'", "'GF'", "'GR'", "'quot'"}, t.describe());
  }
  return r;
}

Statement parse_statement(TokenCursor& cur) {
  Statement s;
  const Token& t = cur.peek();
  s.line = t.line;
  using K = Statement::Kind;
  if (cur.accept_word("ring")) {
    s.kind = K::Ring;
    s.name = cur.expect_ident("ring name").text;
    cur.expect("=");
    s.ring = parse_ring(cur);
  } else if (cur.accept_word("vars")) {
    s.kind = K::Vars;
    s.names = ident_list(cur);
    if (cur.accept_word("order")) {
      const Token& o = cur.peek();
      if (o.is_word("lex") || o.is_word("grlex") || o.is_word("grevlex")) {
        s.order = order_kind_from_string(cur.next().text);
      } else {
        cur.fail({"'lex'", "'grlex'", "'grevlex'"});
      }
    }
  } else if (cur.accept_word("ideal")) {
    s.kind = K::Ideal;
    s.name = cur.expect_ident("ideal name").text;
    cur.expect("=");
    s.polys = expr_list(cur);
  } else if (cur.accept_word("map")) {
    s.kind = K::Map;
    s.name = cur.expect_ident("map name").text;
    cur.expect("=");
    cur.expect("(");
    s.names = ident_list(cur);
    cur.expect(")");
    cur.expect("->");
    s.polys = expr_list(cur);
  } else if (cur.accept_word("gb")) {
    s.kind = K::Gb;
    s.name = cur.expect_ident("ideal name").text;
  } else if (cur.accept_word("nf")) {
    s.kind = K::Nf;
    s.poly = paren_expr(cur);
    cur.expect_word("wrt");
    s.name = cur.expect_ident("ideal name").text;
  } else if (cur.accept_word("member")) {
    s.kind = K::Member;
    s.poly = paren_expr(cur);
    cur.expect_word("in");
    s.name = cur.expect_ident("ideal name").text;
  } else if (cur.accept_word("eliminate")) {
    s.kind = K::Eliminate;
    s.names = ident_list(cur);
    cur.expect_word("from");
    s.name = cur.expect_ident("ideal name").text;
  } else if (cur.peek().is_word("intersect") || cur.peek().is_word("quot")) {
    s.kind = cur.next().text == "quot" ? K::Quotient : K::Intersect;
    s.name = cur.expect_ident("ideal name").text;
    s.other = cur.expect_ident("ideal name").text;
  } else if (cur.accept_word("kernel")) {
    s.kind = K::Kernel;
    s.name = cur.expect_ident("map name").text;
  } else if (cur.accept_word("syz")) {
    s.kind = K::Syz;
    s.name = cur.expect_ident("ideal name").text;
  } else if (cur.accept_word("residues")) {
    s.kind = K::Residues;
    s.name = cur.expect_ident("ideal name").text;
  } else {
    cur.fail(kStatementWords);
  }
  return s;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

std::string render_list(const std::vector<Expr>& es) {
  std::vector<std::string> parts;
  for (const auto& e : es) parts.push_back(e.render());
  return "[" + join(parts) + "]";
}

std::string render_ring(const RingSpec& r) {
  using K = RingSpec::Kind;
  switch (r.kind) {
    case K::QQ: return "QQ";
    case K::ZZ: return "ZZ";
    case K::ZZMod: return "ZZ mod " + r.number.get_str();
    case K::GF: return "GF(" + r.number.get_str() + ")";
    case K::GR: {
      std::string q = r.number.get_str();
      if (r.power) q += "^" + std::to_string(r.power);
      return "GR(" + q + ", " + std::to_string(r.degree) + ") rel " + r.relation.render();
    }
    case K::Quot: {
      std::string base = r.quot_base == K::QQ ? "QQ" : r.quot_base == K::ZZ ? "ZZ" : "GF(" + r.quot_prime.get_str() + ")";
      return "quot(" + base + ", " + render_list(r.relations) + ")";
    }
  }
  return "?";
}

}  // namespace

SessionScript parse_script(std::string_view text) {
  TokenCursor cur(tokenize(text));
  SessionScript out;
  while (!cur.at_end()) {
    out.statements.push_back(parse_statement(cur));
    cur.expect(";");
  }
  return out;
}

std::string render(const Statement& s) {
  using K = Statement::Kind;
  std::string out;
  switch (s.kind) {
    case K::Ring: out = "ring " + s.name + " = " + render_ring(s.ring); break;
    case K::Vars:
      out = "vars " + join(s.names);
      if (s.order) out += " order " + to_string(*s.order);
      break;
    case K::Ideal: out = "ideal " + s.name + " = " + render_list(s.polys); break;
    case K::Map: out = "map " + s.name + " = (" + join(s.names) + ") -> " + render_list(s.polys); break;
    case K::Gb: out = "gb " + s.name; break;
    case K::Nf: out = "nf (" + s.poly.render() + ") wrt " + s.name; break;
    case K::Member: out = "member (" + s.poly.render() + ") in " + s.name; break;
    case K::Eliminate: out = "eliminate " + join(s.names) + " from " + s.name; break;
    case K::Intersect: out = "intersect " + s.name + " " + s.other; break;
    case K::Quotient: out = "quot " + s.name + " " + s.other; break;
    case K::Kernel: out = "kernel " + s.name; break;
    case K::Syz: out = "syz " + s.name; break;
    case K::Residues: out = "residues " + s.name; break;
  }
  return out + ";";
}

std::string render(const SessionScript& script) {
  std::string out;
  for (const auto& s : script.statements) out += render(s) + "\n";
  return out;
}

// --------------------------------------------------------------- execution

namespace {

std::string at_line(const Statement& s) { return "line " + std::to_string(s.line) + ": "; }

/// q = p^n with p prime, or nullopt.
std::optional<std::pair<BigInt, unsigned>> prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  BigInt p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  BigInt rest = q;
  unsigned n = 0;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, n);
}

BigInt checked_prime(const BigInt& p, const Statement& s) {
  if (p < 2 || !is_probable_prime(p)) throw SemanticError(at_line(s) + p.get_str() + " is not prime");
  return p;
}

std::vector<std::string> relation_vars(const std::vector<Expr>& rels) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& r : rels)
    for (const auto& v : r.identifiers())
      if (seen.insert(v).second) out.push_back(v);
  return out;
}

RingTower build_tower(const Statement& ring_stmt, const Statement& vars) {
  const RingSpec& r = ring_stmt.ring;
  const auto& x = vars.names;
  OrderKind order = vars.order.value_or(OrderKind::GrevLex);
  using K = RingSpec::Kind;
  switch (r.kind) {
    case K::QQ: return RingTower::plain(BaseDomain::rationals(), x, order);
    case K::ZZ: return RingTower::plain(BaseDomain::integers(), x, order);
    case K::ZZMod: return RingTower::modular(r.number, x, order);
    case K::GF: return RingTower::plain(BaseDomain::prime_field(checked_prime(r.number, ring_stmt)), x, order);
    case K::GR: {
      BigInt p;
      unsigned n;
      if (r.power) {
        p = checked_prime(r.number, ring_stmt);
        n = r.power;
      } else {
        auto pp = prime_power(r.number);
        if (!pp) throw SemanticError(at_line(ring_stmt) + r.number.get_str() + " is not a prime power");
        std::tie(p, n) = *pp;
      }
      auto ys = r.relation.identifiers();
      if (ys.size() != 1) throw SemanticError(at_line(ring_stmt) + "GR polynomial must be univariate");
      RingTower t = RingTower::galois(p, n, ys[0], r.relation.render(), x, order);
      if (t.relations().front().total_degree() != r.degree)
        throw SemanticError(at_line(ring_stmt) + "GR polynomial has degree " +
                            std::to_string(t.relations().front().total_degree()) + ", expected " +
                            std::to_string(r.degree));
      return t;
    }
    case K::Quot: {
      auto ys = relation_vars(r.relations);
      std::vector<std::string> texts;
      for (const auto& e : r.relations) texts.push_back(e.render());
      if (r.quot_base != K::ZZ) {
        BaseDomain field = r.quot_base == K::QQ ? BaseDomain::rationals()
                                                : BaseDomain::prime_field(checked_prime(r.quot_prime, ring_stmt));
        return RingTower::field_quotient(field, ys, texts, x, order);
      }
      // Over ZZ: one integer, one primitive polynomial, or GR(p^n) data.
      std::vector<const Expr*> constants, polys;
      for (const auto& e : r.relations) (e.identifiers().empty() ? constants : polys).push_back(&e);
      auto integer_of = [&](const Expr& e) {
        auto ring = PolyRing::make(BaseDomain::integers(), std::vector<std::string>{});
        Polynomial c = evaluate(e, ring);
        return c.is_zero() ? BigInt(0) : BigInt(abs(c.leading_coeff().get_num()));
      };
      if (constants.size() == 1 && polys.empty()) return RingTower::modular(integer_of(*constants[0]), x, order);
      if (ys.size() == 1 && polys.size() == 1 && constants.empty()) {
        auto zz = PolyRing::make(BaseDomain::integers(), ys);
        Polynomial p = evaluate(*polys[0], zz);
        BigInt content = 0;
        for (const auto& term : p.terms()) content = gcd(content, BigInt(term.coeff.get_num()));
        if (content != 1) throw SemanticError(at_line(ring_stmt) + "relation over ZZ must be primitive");
        return RingTower::algebraic(ys[0], texts[0], x, order);
      }
      if (ys.size() == 1 && polys.size() == 1 && constants.size() == 1) {
        auto pp = prime_power(integer_of(*constants[0]));
        if (pp) return RingTower::galois(pp->first, pp->second, ys[0], polys[0]->render(), x, order);
      }
      throw SemanticError(at_line(ring_stmt) +
                          "relations over ZZ must be one integer, one primitive polynomial, or p^n with a monic polynomial");
    }
  }
  throw SemanticError("unknown ring");
}

class Runner {
 public:
  Runner(const RunOptions& opts, std::ostream& out) : opts_(opts), out_(out) {
    popts_.completion = opts.completion;
  }

  void execute(const SessionScript& script) {
    for (const auto& s : script.statements) step(s);
  }

 private:
  void step(const Statement& s) {
    using K = Statement::Kind;
    if (s.kind == K::Ring) {
      if (ring_) throw SemanticError(at_line(s) + "only one ring per script");
      ring_ = s;
      return;
    }
    if (!ring_) throw SemanticError(at_line(s) + "ring must be declared first");
    if (s.kind == K::Vars) {
      if (tower_) throw SemanticError(at_line(s) + "vars declared twice");
      try {
        tower_ = build_tower(*ring_, s);
      } catch (const SemanticError& err) {
        std::string what = err.what();
        throw SemanticError(what.rfind("line ", 0) == 0 ? what : at_line(*ring_) + what);
      }
      for (const auto& n : tower_->notices()) out_ << "# notice: " << n << "\n";
      return;
    }
    if (!tower_) throw SemanticError(at_line(s) + "vars must be declared before use");
    switch (s.kind) {
      case K::Ideal:
        declare(s);
        ideals_[s.name] = polys(s.polys, s);
        return;
      case K::Map: {
        declare(s);
        if (s.names.size() != s.polys.size())
          throw SemanticError(at_line(s) + "map needs one image per source variable");
        maps_.emplace(s.name, AlgebraMap{s.names, tower_->main_order(), *tower_, polys(s.polys, s)});
        return;
      }
      default: break;
    }
    out_ << "# " << command_header(s) << "\n";
    switch (s.kind) {
      case K::Gb: print_basis(gb_quotient(ideal(s.name, s), *tower_, popts_)); break;
      case K::Nf: {
        auto gb = gb_quotient(ideal(s.name, s), *tower_, popts_);
        out_ << tower_->render(normal_form_quotient(poly(s.poly, s), gb)) << "\n";
        break;
      }
      case K::Member: {
        auto gb = gb_quotient(ideal(s.name, s), *tower_, popts_);
        out_ << (member(poly(s.poly, s), gb).member ? "true" : "false") << "\n";
        break;
      }
      case K::Eliminate: print_basis(eliminate(ideal(s.name, s), *tower_, s.names, popts_)); break;
      case K::Intersect: print_basis(intersect(ideal(s.name, s), ideal(s.other, s), *tower_, popts_)); break;
      case K::Quotient: print_basis(ideal_quotient(ideal(s.name, s), ideal(s.other, s), *tower_, popts_)); break;
      case K::Kernel: {
        auto it = maps_.find(s.name);
        if (it == maps_.end()) throw SemanticError(at_line(s) + "unknown map '" + s.name + "'");
        print_basis(kernel(it->second, popts_));
        break;
      }
      case K::Syz: {
        auto syz = syzygies(ideal(s.name, s), *tower_, popts_);
        for (const auto& g : syz.generators) {
          std::vector<std::string> parts;
          for (const auto& c : g) parts.push_back(tower_->render(c));
          out_ << "(" << join(parts) << ")\n";
        }
        out_ << "# generators: " << syz.generators.size() << "\n";
        break;
      }
      case K::Residues: {
        auto gb = gb_quotient(ideal(s.name, s), *tower_, popts_);
        auto res = enumerate_residues(gb);
        for (const auto& r : res) out_ << tower_->render(r) << "\n";
        out_ << "# residues: " << res.size() << "\n";
        break;
      }
      default: break;
    }
  }

  static std::string command_header(const Statement& s) {
    std::string text = render(s);
    return text.substr(0, text.size() - 1);
  }

  void declare(const Statement& s) {
    if (!names_.insert(s.name).second) throw SemanticError(at_line(s) + "'" + s.name + "' declared twice");
  }

  QuotientPoly poly(const Expr& e, const Statement& s) const {
    try {
      return tower_->project(evaluate(e, tower_->ring()));
    } catch (const SemanticError& err) {
      throw SemanticError(at_line(s) + err.what());
    }
  }

  std::vector<QuotientPoly> polys(const std::vector<Expr>& es, const Statement& s) const {
    std::vector<QuotientPoly> out;
    for (const auto& e : es) out.push_back(poly(e, s));
    return out;
  }

  const std::vector<QuotientPoly>& ideal(const std::string& name, const Statement& s) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw SemanticError(at_line(s) + "unknown ideal '" + name + "'");
    return it->second;
  }

  void print_basis(const PullbackGB& gb) {
    for (const auto& g : gb.basis) out_ << gb.tower.render(g) << "\n";
    if (opts_.show_lift)
      for (const auto& g : gb.t_basis) out_ << "# lift: " << g.to_string() << "\n";
    out_ << "# elements: " << gb.basis.size() << ", strong: " << (gb.strong ? "yes" : "no")
         << ", order: " << gb.order_description() << "\n";
  }

  const RunOptions& opts_;
  PullbackOptions popts_;
  std::ostream& out_;
  std::optional<Statement> ring_;
  std::optional<RingTower> tower_;
  std::set<std::string> names_;
  std::map<std::string, std::vector<QuotientPoly>> ideals_;
  std::map<std::string, AlgebraMap> maps_;
};

}  // namespace

void run(const SessionScript& script, const RunOptions& opts, std::ostream& out) {
  Runner(opts, out).execute(script);
}

}  // namespace qgb

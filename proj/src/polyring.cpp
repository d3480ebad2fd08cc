#include "qgb/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgb {

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial division is not exact");
    r.exps_[i] -= other.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

// ------------------------------------------------------------------ Orders

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

OrderKind order_kind_from_string(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

VariableSet::VariableSet(std::vector<VariableBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    offsets_.push_back(names_.size());
    for (const auto& n : b.names) {
      if (std::find(names_.begin(), names_.end(), n) != names_.end())
        throw std::invalid_argument("duplicate variable '" + n + "'");
      names_.push_back(n);
      roles_.push_back(b.role);
    }
  }
}

bool VariableSet::has_role(BlockRole role) const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [role](const VariableBlock& b) { return b.role == role && !b.names.empty(); });
}

int VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool VariableSet::operator==(const VariableSet& o) const {
  if (blocks_.size() != o.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& a = blocks_[i];
    const auto& b = o.blocks_[i];
    if (a.role != b.role || a.order != b.order || a.names != b.names) return false;
  }
  return true;
}

MonomialOrder::MonomialOrder(const VariableSet& vars) : nvars_(vars.size()) {
  for (std::size_t b = 0; b < vars.blocks().size(); ++b) {
    const auto& block = vars.blocks()[b];
    if (block.names.empty()) continue;
    std::size_t begin = vars.block_offset(b);
    segments_.push_back({begin, begin + block.names.size(), block.order});
  }
}

MonomialOrder MonomialOrder::single(std::size_t nvars, OrderKind kind) {
  MonomialOrder o;
  o.nvars_ = nvars;
  if (nvars > 0) o.segments_.push_back({0, nvars, kind});
  return o;
}

namespace {

std::strong_ordering compare_segment(const Monomial& a, const Monomial& b,
                                     const MonomialOrder::Segment& s) {
  if (s.kind != OrderKind::Lex) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = s.begin; i < s.end; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
  }
  if (s.kind == OrderKind::GrevLex) {
    for (std::size_t i = s.end; i-- > s.begin;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = s.begin; i < s.end; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars_ || b.size() != nvars_)
    throw std::invalid_argument("monomial compare: mismatched variable sets");
  for (const auto& s : segments_) {
    auto c = compare_segment(a, b, s);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  if (segments_.size() <= 1)
    return segments_.empty() ? std::string("grevlex") : to_string(segments_.front().kind);
  std::string out = "block(";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += " > ";
    out += to_string(segments_[i].kind);
  }
  return out + ")";
}

// -------------------------------------------------------------------- Ring

PolyRing::PolyRing(BaseDomain domain, VariableSet vars)
    : domain_(std::move(domain)), vars_(std::move(vars)), order_(vars_) {}

RingPtr PolyRing::make(BaseDomain domain, VariableSet vars) {
  return std::make_shared<const PolyRing>(std::move(domain), std::move(vars));
}

RingPtr PolyRing::make(BaseDomain domain, std::vector<std::string> names, OrderKind kind) {
  VariableBlock block{"x", BlockRole::Main, kind, std::move(names)};
  return make(std::move(domain), VariableSet({std::move(block)}));
}

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o || (domain_ == o.domain_ && vars_ == o.vars_);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& dom = ring_->domain();
  const auto& ord = ring_->order();
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars())
      throw std::invalid_argument("term has wrong number of exponents");
    t.coeff = dom.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&ord](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = dom.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), c, std::move(one));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  int idx = ring->vars().index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  Monomial m(ring->nvars());
  m[static_cast<std::size_t>(idx)] = 1;
  return monomial(std::move(ring), Coeff(1), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, const Coeff& c, Monomial m) {
  std::vector<Term> t;
  t.push_back({c, std::move(m)});
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (!ring_ || !g.ring_) throw std::invalid_argument("polynomial without a ring");
  if (!ring_->same_as(*g.ring_)) throw std::invalid_argument("mismatched variable sets");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ring(g);
  const auto& dom = ring_->domain();
  const auto& ord = ring_->order();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), b = g.terms_.begin();
  while (a != terms_.end() && b != g.terms_.end()) {
    auto c = ord.compare(a->mono, b->mono);
    if (c > 0) {
      out.terms_.push_back(*a++);
    } else if (c < 0) {
      out.terms_.push_back(*b++);
    } else {
      Coeff s = dom.add(a->coeff, b->coeff);
      if (s != 0) out.terms_.push_back({std::move(s), a->mono});
      ++a;
      ++b;
    }
  }
  out.terms_.insert(out.terms_.end(), a, terms_.end());
  out.terms_.insert(out.terms_.end(), b, g.terms_.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  const auto& dom = ring_->domain();
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = dom.neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const auto& dom = ring_->domain();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : g.terms_) prod.push_back({dom.mul(s.coeff, t.coeff), s.mono * t.mono});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scale(const Coeff& c) const {
  const auto& dom = ring_->domain();
  Coeff cn = dom.normalize(c);
  Polynomial out(ring_);
  if (cn == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff p = dom.mul(t.coeff, cn);
    if (p != 0) out.terms_.push_back({std::move(p), t.mono});
  }
  return out;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  const auto& dom = ring_->domain();
  Coeff cn = dom.normalize(c);
  Polynomial out(ring_);
  if (cn == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff p = dom.mul(t.coeff, cn);
    if (p != 0) out.terms_.push_back({std::move(p), t.mono * m});
  }
  return out;
}

Polynomial Polynomial::sub_mul_term(const Coeff& c, const Monomial& m, const Polynomial& g) const {
  check_ring(g);
  const auto& dom = ring_->domain();
  const auto& ord = ring_->order();
  Coeff cn = dom.normalize(c);
  if (cn == 0 || g.is_zero()) return *this;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Monomial shifted;
  bool have = false;
  while (b != g.terms_.end() || a != terms_.end()) {
    if (b != g.terms_.end() && !have) {
      shifted = b->mono * m;
      have = true;
    }
    if (b == g.terms_.end()) {
      out.terms_.insert(out.terms_.end(), a, terms_.end());
      break;
    }
    std::strong_ordering cmp =
        a == terms_.end() ? std::strong_ordering::less : ord.compare(a->mono, shifted);
    if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else if (cmp < 0) {
      Coeff v = dom.neg(dom.mul(cn, b->coeff));
      if (v != 0) out.terms_.push_back({std::move(v), std::move(shifted)});
      ++b;
      have = false;
    } else {
      Coeff v = dom.sub(a->coeff, dom.mul(cn, b->coeff));
      if (v != 0) out.terms_.push_back({std::move(v), a->mono});
      ++a;
      ++b;
      have = false;
    }
  }
  return out;
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const { return degree_in(var) > 0; }

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (ring_ && g.ring_ && !ring_->same_as(*g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != g.terms_[i].coeff || !(terms_[i].mono == g.terms_[i].mono)) return false;
  }
  return true;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->vars().names();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += render_monomial(t.mono, names);
    } else {
      out += c.get_str() + '*' + render_monomial(t.mono, names);
    }
  }
  return out;
}

// --------------------------------------------------------- x/y leading data

std::vector<std::pair<Monomial, Polynomial>> split_by_x(const Polynomial& f) {
  const auto& ring = f.ring();
  const auto& vars = ring->vars();
  const auto& ord = ring->order();
  std::map<std::vector<std::uint32_t>, std::vector<Term>> groups;
  std::vector<Monomial> keys;
  for (const auto& t : f.terms()) {
    Monomial xpart(t.mono);
    Monomial ypart(t.mono);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars.role_of(i) == BlockRole::Relation)
        xpart[i] = 0;
      else
        ypart[i] = 0;
    }
    auto [it, inserted] = groups.try_emplace(xpart.exponents());
    if (inserted) keys.push_back(xpart);
    it->second.push_back({t.coeff, std::move(ypart)});
  }
  // Order x-parts by the ring order restricted to monomials with y = 0.
  std::sort(keys.begin(), keys.end(),
            [&ord](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(keys.size());
  for (auto& k : keys) {
    auto& ts = groups[k.exponents()];
    out.emplace_back(k, Polynomial(ring, std::move(ts)));
  }
  return out;
}

LeadingDataX leading_data_x(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("leading data of the zero polynomial");
  if (!f.ring()->vars().has_role(BlockRole::Relation))
    throw std::invalid_argument("leading_data_x: ring has no relation block");
  auto groups = split_by_x(f);
  auto& [lm_x, lc_x] = groups.front();
  Polynomial lt_x = lc_x.mul_term(Coeff(1), lm_x);
  return {lc_x, lm_x, lt_x};
}

Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  const auto& src = f.ring()->vars();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->vars().index_of(src.names()[i]);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("variable '" + src.names()[i] + "' is not in the target ring");
      m[static_cast<std::size_t>(map[i])] = t.mono[i];
    }
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial pow(const Polynomial& f, std::uint32_t e) {
  Polynomial result = Polynomial::constant(f.ring(), Coeff(1));
  Polynomial base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target) {
  if (images.size() != f.ring()->nvars())
    throw std::invalid_argument("substitute: need one image per variable");
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) p = p * pow(images[i], t.mono[i]);
    out += p;
  }
  return out;
}

}  // namespace qgb

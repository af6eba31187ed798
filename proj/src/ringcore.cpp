#include "rq/ringcore.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rq {

namespace {
long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long mulmod_ll(long long a, long long b, long long n) {
  return static_cast<long long>((__int128)a * b % n);
}
}  // namespace

// ---------------------------------------------------------------- RingElem

bool RingElem::is_zero() const {
  return owner_->backend() == Ring::Backend::ZMod ? z_ == 0 : poly_.is_zero();
}

RingElem RingElem::operator+(const RingElem& o) const {
  owner_->check_same(o.owner_);
  if (owner_->backend() == Ring::Backend::ZMod)
    return {owner_, (z_ + o.z_) % owner_->modulus()};
  return owner_->from_poly(poly_ + o.poly_);
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  owner_->check_same(o.owner_);
  if (owner_->backend() == Ring::Backend::ZMod)
    return {owner_, mulmod_ll(z_, o.z_, owner_->modulus())};
  return owner_->from_poly(poly_ * o.poly_);
}

RingElem RingElem::operator-() const {
  if (owner_->backend() == Ring::Backend::ZMod)
    return {owner_, z_ ? owner_->modulus() - z_ : 0};
  return {owner_, -poly_};
}

RingElem RingElem::pow(unsigned e) const {
  RingElem r = owner_->one();
  RingElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool RingElem::operator==(const RingElem& o) const {
  if (!owner_->same(*o.owner_)) return false;
  return owner_->backend() == Ring::Backend::ZMod ? z_ == o.z_
                                                  : poly_ == o.poly_;
}

std::string RingElem::str() const {
  return owner_->backend() == Ring::Backend::ZMod ? std::to_string(z_)
                                                  : poly_.str();
}

// ---------------------------------------------------------------- Ideal

bool Ideal::is_zero_ideal() const {
  if (owner->backend() == Ring::Backend::ZMod) return zgen == owner->modulus();
  for (auto& g : gens)
    if (!g.is_zero()) return false;
  return gens.empty();
}

bool Ideal::is_unit_ideal() const {
  if (owner->backend() == Ring::Backend::ZMod) return zgen == 1;
  return lifted_gb.size() == 1 && lifted_gb[0].is_constant() &&
         !lifted_gb[0].is_zero();
}

bool Ideal::same_ideal(const Ideal& o) const {
  if (!owner->same(*o.owner)) return false;
  if (owner->backend() == Ring::Backend::ZMod) return zgen == o.zgen;
  return lifted_gb.size() == o.lifted_gb.size() &&
         std::equal(lifted_gb.begin(), lifted_gb.end(), o.lifted_gb.begin());
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens.size(); ++i)
    os << (i ? ", " : "") << gens[i].str();
  if (gens.empty()) os << "0";
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- Ring

RingPtr Ring::quotient(long long p, std::vector<std::string> vars,
                       MonomialOrder ord, const std::vector<Poly>& jgens) {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->backend_ = Backend::PolyQuotient;
  r->amb_ = make_ambient(p, std::move(vars));
  r->ord_ = ord;
  std::vector<Poly> gens;
  for (auto& g : jgens) {
    if (!(*g.ambient() == *r->amb_))
      throw AmbientError("defining generator in wrong ambient");
    if (!g.is_zero()) gens.push_back(g);
  }
  r->jgb_ = reduced_groebner(gens, ord);
  if (r->jgb_.size() == 1 && r->jgb_[0].is_constant() && !r->jgb_[0].is_zero())
    throw ImproperIdeal("1 lies in the defining ideal");
  r->compute_flags();
  return r;
}

RingPtr Ring::zmod(long long n) {
  if (n < 2) throw BadModulus("zmod requires n >= 2");
  if (n >= (1LL << 31)) throw BadModulus("zmod modulus must be < 2^31");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->backend_ = Backend::ZMod;
  r->n_ = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      r->nfact_.push_back({p, e});
    }
  }
  if (m > 1) r->nfact_.push_back({m, 1});
  r->compute_flags();
  return r;
}

void Ring::compute_flags() {
  if (backend_ == Backend::ZMod) {
    bool squarefree = true;
    long long wit = 1;
    for (auto& [p, e] : nfact_) {
      if (e > 1) squarefree = false;
      long long q = 1;
      for (int k = 0; k < (e + 1) / 2; ++k) q *= p;
      wit *= q;
    }
    reduced_ = squarefree ? TriState::yes()
                          : TriState::no(std::to_string(wit));
    if (nfact_.size() == 1 && nfact_[0].second == 1) {
      domain_ = TriState::yes();
    } else {
      long long u = nfact_[0].first;
      domain_ = TriState::no(std::to_string(u) + "*" +
                             std::to_string(n_ / u) + " = 0");
    }
    return;
  }
  if (jgb_.empty()) {
    reduced_ = TriState::yes();
    domain_ = TriState::yes();
    return;
  }
  bool monomial = true;
  for (auto& g : jgb_)
    if (g.terms().size() != 1) monomial = false;
  if (!monomial) {
    reduced_ = TriState::unknown();
    domain_ = TriState::unknown();
    return;
  }
  // squarefree monomial => reduced; otherwise witness = ceil-half power
  reduced_ = TriState::yes();
  for (auto& g : jgb_) {
    const Monomial& m = g.terms()[0].m;
    bool sf = true;
    for (int e : m) sf &= e <= 1;
    if (!sf) {
      Monomial w(m.size(), 0);
      for (size_t i = 0; i < m.size(); ++i) w[i] = (m[i] + 1) / 2;
      reduced_ = TriState::no(Poly::term(amb_, w, amb_->cone()).str());
      break;
    }
  }
  bool vars_only = true;
  for (auto& g : jgb_)
    if (total_degree(g.terms()[0].m) != 1) vars_only = false;
  if (vars_only) {
    domain_ = TriState::yes();
  } else {
    for (auto& g : jgb_) {
      const Monomial& m = g.terms()[0].m;
      if (total_degree(m) < 2) continue;
      // split the minimal generator into two proper divisors
      Monomial u(m.size(), 0), v = m;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0) {
          int half = std::max(1, m[i] / 2);
          if (total_degree(m) == m[i]) half = (m[i] + 1) / 2;  // pure power
          u[i] = half;
          v[i] = m[i] - half;
          if (v == Monomial(m.size(), 0)) {
            // degree-1 in one var cannot happen here
          }
          break;
        }
      }
      Poly pu = Poly::term(amb_, u, amb_->cone());
      Poly pv = Poly::term(amb_, v, amb_->cone());
      if (!reduce(pu).is_zero() && !reduce(pv).is_zero()) {
        domain_ = TriState::no(pu.str() + " * " + pv.str() + " = 0");
        return;
      }
    }
    domain_ = TriState::unknown();
  }
}

bool Ring::same(const Ring& o) const {
  if (backend_ != o.backend_) return false;
  if (backend_ == Backend::ZMod) return n_ == o.n_;
  return *amb_ == *o.amb_ && jgb_.size() == o.jgb_.size() &&
         std::equal(jgb_.begin(), jgb_.end(), o.jgb_.begin());
}

void Ring::check_same(const RingPtr& o) const {
  if (!o || !same(*o)) throw AmbientError("elements of different rings");
}

RingElem Ring::zero() const { return from_int(0); }
RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(long long v) const {
  if (backend_ == Backend::ZMod) {
    long long z = v % n_;
    if (z < 0) z += n_;
    return {shared_from_this(), z};
  }
  return {shared_from_this(), Poly::constant(amb_, amb_->cint(v))};
}

Poly Ring::reduce(const Poly& f) const {
  return jgb_.empty() ? f : normal_form(f, jgb_, ord_);
}

RingElem Ring::from_poly(const Poly& f) const {
  if (backend_ == Backend::ZMod)
    throw AmbientError("from_poly on a Z/n ring");
  if (!(*f.ambient() == *amb_)) throw AmbientError("wrong ambient");
  return {shared_from_this(), reduce(f)};
}

RingElem Ring::element_var(const std::string& name) const {
  int i = amb_ ? amb_->var_index(name) : -1;
  if (i < 0) throw NameError("unknown variable " + name);
  return from_poly(Poly::var(amb_, i));
}

// ---------------------------------------------------------------- ideals

std::vector<Poly> Ring::lift_ideal(const Ideal& i) const {
  return i.lifted_gb;
}

Ideal Ring::ideal_from_lifted(std::vector<Poly> polys) const {
  Ideal out;
  out.owner = shared_from_this();
  for (auto& g : jgb_) polys.push_back(g);
  out.lifted_gb = reduced_groebner(polys, ord_);
  for (auto& g : out.lifted_gb) {
    Poly img = reduce(g);
    if (!img.is_zero()) out.gens.push_back({shared_from_this(), img});
  }
  return out;
}

Ideal Ring::ideal(const std::vector<RingElem>& gens) const {
  if (backend_ == Backend::ZMod) {
    Ideal out;
    out.owner = shared_from_this();
    long long d = n_;
    for (auto& g : gens) {
      check_same(g.owner());
      d = gcd_ll(d, g.zval());
    }
    out.zgen = d == 0 ? n_ : d;
    if (out.zgen != n_) out.gens.push_back(from_int(out.zgen));
    return out;
  }
  std::vector<Poly> lifts;
  for (auto& g : gens) {
    check_same(g.owner());
    if (!g.is_zero()) lifts.push_back(g.poly());
  }
  return ideal_from_lifted(std::move(lifts));
}

Ideal Ring::zero_ideal() const { return ideal({}); }

Ideal Ring::sum(const Ideal& a, const Ideal& b) const {
  if (backend_ == Backend::ZMod) {
    Ideal out;
    out.owner = shared_from_this();
    out.zgen = gcd_ll(a.zgen, b.zgen);
    if (out.zgen != n_) out.gens.push_back(from_int(out.zgen));
    return out;
  }
  std::vector<Poly> lifts = a.lifted_gb;
  lifts.insert(lifts.end(), b.lifted_gb.begin(), b.lifted_gb.end());
  return ideal_from_lifted(std::move(lifts));
}

Ideal Ring::product(const Ideal& a, const Ideal& b) const {
  if (backend_ == Backend::ZMod) {
    Ideal out;
    out.owner = shared_from_this();
    out.zgen = (a.zgen == n_ || b.zgen == n_)
                   ? n_
                   : gcd_ll(a.zgen * b.zgen, n_);
    if (out.zgen != n_) out.gens.push_back(from_int(out.zgen));
    return out;
  }
  std::vector<Poly> lifts;
  for (auto& x : a.gens)
    for (auto& y : b.gens) lifts.push_back(x.poly() * y.poly());
  return ideal_from_lifted(std::move(lifts));
}

Ideal Ring::intersect(const Ideal& a, const Ideal& b) const {
  if (backend_ == Backend::ZMod) {
    Ideal out;
    out.owner = shared_from_this();
    out.zgen = a.zgen / gcd_ll(a.zgen, b.zgen) * b.zgen;
    if (out.zgen != n_) out.gens.push_back(from_int(out.zgen));
    return out;
  }
  auto inter = ideal_intersect(a.lifted_gb, b.lifted_gb, ord_);
  return ideal_from_lifted(std::move(inter));
}

Ideal Ring::colon(const Ideal& a, const RingElem& f) const {
  check_same(f.owner());
  if (f.is_zero()) {
    // (a : 0) = R
    if (backend_ == Backend::ZMod) {
      Ideal out;
      out.owner = shared_from_this();
      out.zgen = 1;
      out.gens.push_back(one());
      return out;
    }
    return ideal_from_lifted({Poly::one(amb_)});
  }
  if (backend_ == Backend::ZMod) {
    Ideal out;
    out.owner = shared_from_this();
    out.zgen = a.zgen / gcd_ll(a.zgen, f.zval());
    if (out.zgen != n_) out.gens.push_back(from_int(out.zgen));
    return out;
  }
  auto q = ideal_colon(a.lifted_gb, f.poly(), ord_);
  return ideal_from_lifted(std::move(q));
}

Ideal Ring::colon(const Ideal& a, const Ideal& b) const {
  if (b.gens.empty()) {
    // (a : (0)) = R
    return colon(a, zero());
  }
  Ideal acc = colon(a, b.gens[0]);
  for (size_t i = 1; i < b.gens.size(); ++i)
    acc = intersect(acc, colon(a, b.gens[i]));
  return acc;
}

Ideal Ring::annihilator(const RingElem& x) const {
  return colon(zero_ideal(), x);
}

Ideal Ring::annihilator(const Ideal& i) const {
  return colon(zero_ideal(), i);
}

bool Ring::member(const RingElem& x, const Ideal& i) const {
  check_same(x.owner());
  if (backend_ == Backend::ZMod) return x.zval() % i.zgen == 0;
  if (i.lifted_gb.empty()) return x.is_zero();
  return in_ideal(x.poly(), i.lifted_gb, ord_);
}

bool Ring::contains(const Ideal& a, const Ideal& b) const {
  for (auto& g : b.gens)
    if (!member(g, a)) return false;
  return true;
}

TriState Ring::radical_membership(const RingElem& f, const Ideal& j) const {
  if (backend_ == Backend::ZMod) {
    RingElem x = f;
    for (int k = 0; k < 7; ++k) {
      if (member(x, j)) return TriState::yes(f.str() + "^(2^" +
                                             std::to_string(k) + ")");
      x = x * x;
    }
    return member(x, j) ? TriState::yes() : TriState::no();
  }
  bool in = radical_member(f.poly(), j.lifted_gb, ord_);
  return in ? TriState::yes() : TriState::no();
}

// ---------------------------------------------------------------- structure

TriState Ring::is_prime(const Ideal& p) const {
  if (!p.proper()) return TriState::no("not proper");
  if (backend_ == Backend::ZMod) {
    long long d = p.zgen;
    if (d < 2) return TriState::no("unit ideal");
    for (long long q = 2; q * q <= d; ++q)
      if (d % q == 0) {
        if (p.asserted_prime)
          throw BadPrime("asserted prime (" + std::to_string(d) +
                         ") has composite generator");
        return TriState::no(std::to_string(q) + " | " + std::to_string(d));
      }
    return TriState::yes();
  }
  if (p.lifted_gb.empty() ||
      (p.lifted_gb.size() == jgb_.size() &&
       std::equal(jgb_.begin(), jgb_.end(), p.lifted_gb.begin()))) {
    // zero ideal of R
    if (domain_.is_yes()) return TriState::yes();
    if (domain_.is_no()) {
      if (p.asserted_prime)
        throw BadPrime("zero ideal asserted prime but R is not a domain");
      return TriState::no(domain_.witness);
    }
  } else {
    bool vars_only = true;
    for (auto& g : p.lifted_gb) {
      if (g.terms().size() != 1 || total_degree(g.terms()[0].m) != 1)
        vars_only = false;
    }
    if (vars_only) return TriState::yes();
  }
  if (p.asserted_prime) return TriState::yes("", "asserted");
  return TriState::unknown();
}

namespace {
// Minimal hitting sets of a family of variable-index sets.
void hitting_sets(const std::vector<std::vector<int>>& fam, size_t k,
                  std::set<int>& cur, std::vector<std::set<int>>& out) {
  if (k == fam.size()) {
    out.push_back(cur);
    return;
  }
  bool hit = false;
  for (int v : fam[k]) hit |= cur.count(v) > 0;
  if (hit) {
    hitting_sets(fam, k + 1, cur, out);
    return;
  }
  for (int v : fam[k]) {
    cur.insert(v);
    hitting_sets(fam, k + 1, cur, out);
    cur.erase(v);
  }
}
}  // namespace

std::optional<std::vector<Ideal>> Ring::minimal_primes() const {
  if (asserted_min_primes_) return asserted_min_primes_;
  if (backend_ == Backend::ZMod) {
    std::vector<Ideal> out;
    for (auto& [p, e] : nfact_) out.push_back(ideal({from_int(p)}));
    return out;
  }
  if (jgb_.empty()) return std::vector<Ideal>{zero_ideal()};
  for (auto& g : jgb_)
    if (g.terms().size() != 1) return std::nullopt;
  std::vector<std::vector<int>> fam;
  for (auto& g : jgb_) {
    std::vector<int> supp;
    const Monomial& m = g.terms()[0].m;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) supp.push_back(static_cast<int>(i));
    fam.push_back(std::move(supp));
  }
  std::set<int> cur;
  std::vector<std::set<int>> covers;
  hitting_sets(fam, 0, cur, covers);
  // keep minimal, dedupe
  std::vector<std::set<int>> minimal;
  for (auto& c : covers) {
    bool dominated = false;
    for (auto& d : covers)
      if (d != c && std::includes(c.begin(), c.end(), d.begin(), d.end()))
        dominated = true;
    if (!dominated &&
        std::find(minimal.begin(), minimal.end(), c) == minimal.end())
      minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<Ideal> out;
  for (auto& c : minimal) {
    std::vector<RingElem> gens;
    for (int v : c) gens.push_back(from_poly(Poly::var(amb_, v)));
    out.push_back(ideal(gens));
  }
  return out;
}

RingPtr Ring::with_asserted_flags(std::optional<bool> reduced,
                                  std::optional<bool> domain) const {
  auto r = std::shared_ptr<Ring>(new Ring(*this));
  if (reduced)
    r->reduced_ = *reduced ? TriState::yes("", "asserted")
                           : TriState::no("", "asserted");
  if (domain)
    r->domain_ = *domain ? TriState::yes("", "asserted")
                         : TriState::no("", "asserted");
  return r;
}

RingPtr Ring::with_asserted_min_primes(std::vector<Ideal> primes) const {
  auto r = std::shared_ptr<Ring>(new Ring(*this));
  r->asserted_min_primes_ = std::move(primes);
  return r;
}

// ---------------------------------------------------------------- finiteness

std::optional<std::vector<Monomial>> Ring::staircase() const {
  if (backend_ == Backend::ZMod) return std::nullopt;
  return finite_staircase(jgb_, ord_, amb_->vars.size());
}

std::optional<RingElem> Ring::nilpotent_witness() const {
  if (!reduced_.is_no() || reduced_.provenance == "asserted")
    return std::nullopt;
  if (backend_ == Backend::ZMod) {
    long long wit = 1;
    for (auto& [p, e] : nfact_) {
      long long q = 1;
      for (int k = 0; k < (e + 1) / 2; ++k) q *= p;
      wit *= q;
    }
    return from_int(wit);
  }
  for (auto& g : jgb_) {
    if (g.terms().size() != 1) continue;
    const Monomial& m = g.terms()[0].m;
    bool sf = true;
    for (int e : m) sf &= e <= 1;
    if (!sf) {
      Monomial w(m.size(), 0);
      for (size_t i = 0; i < m.size(); ++i) w[i] = (m[i] + 1) / 2;
      RingElem x = from_poly(Poly::term(amb_, w, amb_->cone()));
      if (!x.is_zero() && (x * x).is_zero()) return x;
    }
  }
  return std::nullopt;
}

std::optional<unsigned long long> Ring::cardinality() const {
  if (backend_ == Backend::ZMod) return static_cast<unsigned long long>(n_);
  if (amb_->p == 0) return std::nullopt;
  auto sc = staircase();
  if (!sc) return std::nullopt;
  unsigned long long card = 1;
  for (size_t i = 0; i < sc->size(); ++i) {
    if (card > (1ULL << 62) / static_cast<unsigned long long>(amb_->p))
      return std::nullopt;
    card *= static_cast<unsigned long long>(amb_->p);
  }
  return card;
}

std::string Ring::str() const {
  if (backend_ == Backend::ZMod) return "Z/" + std::to_string(n_);
  std::ostringstream os;
  os << (amb_->p ? "GF(" + std::to_string(amb_->p) + ")" : "QQ") << "[";
  for (size_t i = 0; i < amb_->vars.size(); ++i)
    os << (i ? "," : "") << amb_->vars[i];
  os << "]";
  if (!jgb_.empty()) {
    os << "/(";
    for (size_t i = 0; i < jgb_.size(); ++i)
      os << (i ? ", " : "") << jgb_[i].str();
    os << ")";
  }
  return os.str();
}

}  // namespace rq

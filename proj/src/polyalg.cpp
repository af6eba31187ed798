#include "rq/polyalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rq {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

namespace {

int cmp_lex(const Monomial& u, const Monomial& v, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

// degrevlex restricted to a set of positions (all when mask empty/sel=true).
int cmp_drl_masked(const Monomial& u, const Monomial& v,
                   const std::vector<char>& mask, bool sel) {
  int du = 0, dv = 0;
  size_t n = u.size();
  for (size_t i = 0; i < n; ++i) {
    bool in = mask.empty() ? sel : (static_cast<bool>(mask[i]) == sel);
    if (!in) continue;
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du < dv ? -1 : 1;
  for (size_t i = n; i-- > 0;) {
    bool in = mask.empty() ? sel : (static_cast<bool>(mask[i]) == sel);
    if (!in) continue;
    if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;  // reversed
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  switch (kind) {
    case Kind::lex:
      return cmp_lex(u, v, 0, u.size());
    case Kind::degrevlex:
      return cmp_drl_masked(u, v, {}, true);
    case Kind::block: {
      int c = cmp_drl_masked(u, v, elim, true);
      if (c) return c;
      return cmp_drl_masked(u, v, elim, false);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind) {
    case Kind::lex:
      return "lex";
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::block:
      return "block";
  }
  return "?";
}

int Ambient::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

AmbientPtr make_ambient(long long p, std::vector<std::string> vars) {
  auto a = std::make_shared<Ambient>();
  a->p = p;
  a->vars = std::move(vars);
  return a;
}

namespace {
const MonomialOrder kCanon = MonomialOrder::degrevlex();
}

Poly Poly::from_terms(AmbientPtr amb, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return kCanon.compare(a.m, b.m) > 0;
  });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = out.back().c + t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  Poly p(std::move(amb));
  p.terms_ = std::move(out);
  return p;
}

Poly Poly::constant(AmbientPtr amb, Coeff c) {
  Monomial m(amb->vars.size(), 0);
  return term(std::move(amb), std::move(m), std::move(c));
}

Poly Poly::var(AmbientPtr amb, int idx, int exp) {
  Monomial m(amb->vars.size(), 0);
  m[idx] = exp;
  auto c = amb->cone();
  return term(std::move(amb), std::move(m), std::move(c));
}

Poly Poly::term(AmbientPtr amb, Monomial m, Coeff c) {
  Poly p(std::move(amb));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, total_degree(t.m));
  return d;
}

const Term& Poly::leading(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  const Term* best = &terms_[0];
  for (auto& t : terms_)
    if (ord.compare(t.m, best->m) > 0) best = &t;
  return *best;
}

void check_same_ambient(const Poly& a, const Poly& b) {
  if (!(*a.ambient() == *b.ambient()))
    throw AmbientError("polynomials live in different ambients");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_ambient(*this, o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanon.compare(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      merged.push_back(terms_[i++]);
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) merged.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  Poly r(amb_);
  r.terms_ = std::move(merged);
  return r;
}

Poly Poly::operator-() const {
  Poly r(amb_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Coeff& c) const {
  Poly r(amb_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({mono_mul(t.m, m), t.c * c});
  return r;
}

Poly Poly::scaled(const Coeff& c) const {
  Monomial m(amb_->vars.size(), 0);
  return mul_term(m, c);
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ambient(*this, o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (auto& t : terms_)
    for (auto& u : o.terms_) acc.push_back({mono_mul(t.m, u.m), t.c * u.c});
  return from_terms(amb_, std::move(acc));
}

Poly Poly::pow(unsigned e) const {
  Poly r = one(amb_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (!(*amb_ == *o.amb_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Poly Poly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(leading(ord).c.inverse());
}

Poly Poly::lift_to(const AmbientPtr& ext) const {
  size_t n = amb_->vars.size(), m = ext->vars.size();
  if (m < n || ext->p != amb_->p ||
      !std::equal(amb_->vars.begin(), amb_->vars.end(), ext->vars.begin()))
    throw AmbientError("lift_to: not a trailing extension");
  Poly r(ext);
  for (auto& t : terms_) {
    Monomial mm = t.m;
    mm.resize(m, 0);
    r.terms_.push_back({std::move(mm), t.c});
  }
  return r;
}

Poly Poly::restrict_to(const AmbientPtr& amb) const {
  size_t n = amb->vars.size();
  Poly r(amb);
  for (auto& t : terms_) {
    for (size_t i = n; i < t.m.size(); ++i)
      if (t.m[i] != 0)
        throw AmbientError("restrict_to: dropped variable occurs");
    Monomial mm(t.m.begin(), t.m.begin() + n);
    r.terms_.push_back({std::move(mm), t.c});
  }
  return Poly::from_terms(amb, std::move(r.terms_));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Coeff c = t.c;
    if (first) {
      if (c.is_negative()) {
        os << "-";
        c = -c;
      }
    } else {
      if (c.is_negative()) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    first = false;
    bool constant = total_degree(t.m) == 0;
    bool wrote = false;
    if (!c.is_one() || constant) {
      os << c.str();
      wrote = true;
    }
    for (size_t i = 0; i < t.m.size(); ++i) {
      if (t.m[i] == 0) continue;
      if (wrote) os << "*";
      os << amb_->vars[i];
      if (t.m[i] > 1) os << "^" << t.m[i];
      wrote = true;
    }
  }
  return os.str();
}

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors,
                      const MonomialOrder& ord) {
  for (auto& g : divisors) {
    check_same_ambient(f, g);
    if (g.is_zero()) throw std::logic_error("divide: zero divisor polynomial");
  }
  DivisionResult res;
  res.quotients.assign(divisors.size(), Poly::zero(f.ambient()));
  res.remainder = Poly::zero(f.ambient());
  Poly h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading(ord);
    bool reduced = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      const Term& gl = divisors[k].leading(ord);
      if (mono_divides(gl.m, lt.m)) {
        Monomial q = mono_div(lt.m, gl.m);
        Coeff qc = lt.c / gl.c;
        res.quotients[k] =
            res.quotients[k] + Poly::term(f.ambient(), q, qc);
        h = h - divisors[k].mul_term(q, qc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Poly t = Poly::term(f.ambient(), lt.m, lt.c);
      res.remainder = res.remainder + t;
      h = h - t;
    }
  }
  return res;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord) {
  if (basis.empty()) return f;
  return divide(f, basis, ord).remainder;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const Term& lf = f.leading(ord);
  const Term& lg = g.leading(ord);
  Monomial l = mono_lcm(lf.m, lg.m);
  return f.mul_term(mono_div(l, lf.m), lf.c.inverse()) -
         g.mul_term(mono_div(l, lg.m), lg.c.inverse());
}

namespace {

// Sort basis deterministically: ascending leading monomial under ord.
void sort_basis(std::vector<Poly>& g, const MonomialOrder& ord) {
  std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.leading(ord).m, b.leading(ord).m) < 0;
  });
}

std::vector<Poly> interreduce(std::vector<Poly> g, const MonomialOrder& ord) {
  // Minimize: drop elements whose leading term is divisible by another's.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      for (size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        if (mono_divides(g[j].leading(ord).m, g[i].leading(ord).m)) {
          g.erase(g.begin() + i);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  // Tail-reduce each against the rest.
  for (size_t i = 0; i < g.size(); ++i) {
    std::vector<Poly> rest;
    for (size_t j = 0; j < g.size(); ++j)
      if (j != i) rest.push_back(g[j]);
    if (!rest.empty()) g[i] = normal_form(g[i], rest, ord);
  }
  for (auto& p : g) p = p.monic(ord);
  sort_basis(g, ord);
  return g;
}

}  // namespace

std::vector<Poly> reduced_groebner(std::vector<Poly> gens,
                                   const MonomialOrder& ord) {
  std::vector<Poly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic(ord));
  if (g.empty()) return g;
  sort_basis(g, ord);

  struct Pair {
    size_t i, j;
    Monomial lcm;
    int deg;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.compare(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pending;
  auto push_pair = [&](size_t i, size_t j) {
    Monomial l = mono_lcm(g[i].leading(ord).m, g[j].leading(ord).m);
    pending.push_back({i, j, l, total_degree(l)});
  };
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

  std::set<std::pair<size_t, size_t>> open;
  for (auto& p : pending) open.insert({p.i, p.j});

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    open.erase({pr.i, pr.j});

    const Monomial& li = g[pr.i].leading(ord).m;
    const Monomial& lj = g[pr.j].leading(ord).m;
    // Coprime leading terms: S-polynomial reduces to zero.
    if (pr.lcm == mono_mul(li, lj)) continue;
    // Chain criterion: some k divides the lcm and both side pairs settled.
    bool skip = false;
    for (size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(g[k].leading(ord).m, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (!open.count({key1.first, key1.second}) &&
          !open.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Poly s = s_poly(g[pr.i], g[pr.j], ord);
    Poly r = normal_form(s, g, ord);
    if (!r.is_zero()) {
      g.push_back(r.monic(ord));
      size_t n = g.size() - 1;
      for (size_t i = 0; i < n; ++i) {
        push_pair(i, n);
        open.insert({i, n});
      }
    }
  }
  return interreduce(std::move(g), ord);
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens,
                            const std::vector<char>& drop,
                            const MonomialOrder& inner_hint) {
  (void)inner_hint;  // degrevlex inside both blocks
  if (gens.empty()) return {};
  bool any = false;
  for (char c : drop) any |= static_cast<bool>(c);
  MonomialOrder ord =
      any ? MonomialOrder::block(drop) : MonomialOrder::degrevlex();
  auto gb = reduced_groebner(gens, ord);
  std::vector<Poly> out;
  for (auto& p : gb) {
    bool free = true;
    for (auto& t : p.terms())
      for (size_t i = 0; i < t.m.size(); ++i)
        if (t.m[i] && i < drop.size() && drop[i]) free = false;
    if (free) out.push_back(p);
  }
  return out;
}

bool in_ideal(const Poly& f, const std::vector<Poly>& gb,
              const MonomialOrder& ord) {
  if (gb.empty()) return f.is_zero();
  return normal_form(f, gb, ord).is_zero();
}

namespace {

AmbientPtr tagged(const AmbientPtr& amb) {
  auto vars = amb->vars;
  vars.push_back("#tag");
  return make_ambient(amb->p, std::move(vars));
}

}  // namespace

std::vector<Poly> ideal_intersect(const std::vector<Poly>& A,
                                  const std::vector<Poly>& B,
                                  const MonomialOrder& ord) {
  if (A.empty() || B.empty()) return {};
  AmbientPtr amb = A[0].ambient();
  AmbientPtr ext = tagged(amb);
  int u = static_cast<int>(ext->vars.size()) - 1;
  Poly tu = Poly::var(ext, u);
  Poly one_minus_u = Poly::one(ext) - tu;
  std::vector<Poly> gens;
  for (auto& a : A) gens.push_back(tu * a.lift_to(ext));
  for (auto& b : B) gens.push_back(one_minus_u * b.lift_to(ext));
  std::vector<char> drop(ext->vars.size(), 0);
  drop[u] = 1;
  auto elim = eliminate(gens, drop, ord);
  std::vector<Poly> out;
  for (auto& p : elim) out.push_back(p.restrict_to(amb));
  return out;
}

std::optional<Poly> try_divide(const Poly& f, const Poly& g,
                               const MonomialOrder& ord) {
  if (f.is_zero()) return Poly::zero(f.ambient());
  auto d = divide(f, {g}, ord);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotients[0];
}

std::vector<Poly> ideal_colon(const std::vector<Poly>& A, const Poly& f,
                              const MonomialOrder& ord) {
  if (f.is_zero()) throw std::logic_error("colon by zero");
  auto inter = ideal_intersect(A, {f}, ord);
  std::vector<Poly> out;
  for (auto& p : inter) {
    auto q = try_divide(p, f, ord);
    if (!q)
      throw std::logic_error("colon: member of (f) not divisible by f");
    if (!q->is_zero()) out.push_back(*q);
  }
  return reduced_groebner(out, ord);
}

bool radical_member(const Poly& f, const std::vector<Poly>& J,
                    const MonomialOrder& ord) {
  if (f.is_zero()) return true;
  AmbientPtr ext = tagged(f.ambient());
  int u = static_cast<int>(ext->vars.size()) - 1;
  std::vector<Poly> gens;
  for (auto& j : J) gens.push_back(j.lift_to(ext));
  gens.push_back(Poly::one(ext) - Poly::var(ext, u) * f.lift_to(ext));
  auto gb = reduced_groebner(gens, MonomialOrder::degrevlex());
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

std::optional<Poly> poly_sqrt(const Poly& f) {
  if (f.is_zero()) return f;
  if (f.ambient()->p == 2) return std::nullopt;  // needs 1/2
  const MonomialOrder ord = MonomialOrder::degrevlex();
  const Term& lt = f.leading(ord);
  Monomial half = lt.m;
  for (auto& e : half) {
    if (e % 2) return std::nullopt;
    e /= 2;
  }
  auto c = lt.c.sqrt();
  if (!c) return std::nullopt;
  Poly s = Poly::term(f.ambient(), half, *c);
  Coeff two = f.ambient()->cint(2);
  size_t guard = 4 * f.terms().size() + 16;
  while (true) {
    Poly r = f - s * s;
    if (r.is_zero()) return s;
    if (guard-- == 0) return std::nullopt;
    const Term& rl = r.leading(ord);
    const Term& sl = s.leading(ord);
    if (!mono_divides(sl.m, rl.m)) return std::nullopt;
    Poly t = Poly::term(f.ambient(), mono_div(rl.m, sl.m),
                        rl.c / (two * sl.c));
    // next correction must be smaller than the current head
    if (ord.compare(t.leading(ord).m, sl.m) >= 0) return std::nullopt;
    s = s + t;
  }
}

std::optional<std::vector<Monomial>> finite_staircase(
    const std::vector<Poly>& gb, const MonomialOrder& ord, size_t nvars,
    unsigned long long cap) {
  std::vector<int> bound(nvars, -1);
  std::vector<Monomial> lts;
  for (auto& g : gb) {
    Monomial lt = g.leading(ord).m;
    lts.push_back(lt);
    int nz = 0, idx = -1;
    for (size_t i = 0; i < nvars; ++i)
      if (lt[i] > 0) {
        ++nz;
        idx = static_cast<int>(i);
      }
    if (nz == 1 && (bound[idx] < 0 || lt[idx] < bound[idx]))
      bound[idx] = lt[idx];
    if (nz == 0) return std::vector<Monomial>{};  // unit ideal
  }
  for (size_t i = 0; i < nvars; ++i)
    if (bound[i] < 0) return std::nullopt;  // infinite staircase
  unsigned long long box = 1;
  for (size_t i = 0; i < nvars; ++i) {
    box *= static_cast<unsigned long long>(bound[i]);
    if (box > cap) throw TooLarge("staircase enumeration too large");
  }
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  while (true) {
    bool standard = true;
    for (auto& lt : lts)
      if (mono_divides(lt, m)) standard = false;
    if (standard) out.push_back(m);
    size_t i = 0;
    while (i < nvars) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == nvars) break;
  }
  return out;
}

}  // namespace rq

#include "rq/finoracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rq {

namespace {

long long mulmod_n(long long x, long long y, long long n) {
  return (x % n) * (y % n) % n;
}

}  // namespace

FiniteModel FiniteModel::build(RabPtr rr, unsigned long long cap) {
  if (rr->base()->backend() != Ring::Backend::ZMod)
    throw TooLarge("finite model needs a Z/n base ring");
  FiniteModel M;
  M.ring_ = std::move(rr);
  M.n_ = M.ring_->base()->modulus();
  M.av_ = M.ring_->a().zval();
  M.bv_ = M.ring_->b().zval();
  M.d_ = M.ring_->ideal().zgen;
  long long cols = M.n_ / M.d_;
  unsigned long long total =
      static_cast<unsigned long long>(M.n_) * static_cast<unsigned long long>(cols);
  if (total > cap)
    throw TooLarge("model has " + std::to_string(total) +
                   " elements, cap is " + std::to_string(cap));
  M.el_.reserve(total);
  M.lookup_.assign(total, -1);
  for (long long r = 0; r < M.n_; ++r)
    for (long long k = 0; k < cols; ++k) {
      M.lookup_[r * cols + k] = static_cast<int>(M.el_.size());
      M.el_.emplace_back(r, k * M.d_);
    }
  M.zero_ = M.index(0, 0);
  M.one_ = M.index(1 % M.n_, 0);
  return M;
}

int FiniteModel::index(long long r, long long i) const {
  r %= n_;
  if (r < 0) r += n_;
  i %= n_;
  if (i < 0) i += n_;
  return lookup_[r * (n_ / d_) + i / d_];
}

int FiniteModel::add(int a, int b) const {
  return index(el_[a].first + el_[b].first, el_[a].second + el_[b].second);
}

int FiniteModel::neg(int a) const {
  return index(-el_[a].first, -el_[a].second);
}

int FiniteModel::mul(int a, int b) const {
  long long r = el_[a].first, i = el_[a].second;
  long long s = el_[b].first, j = el_[b].second;
  long long ij = mulmod_n(i, j, n_);
  long long rc = (mulmod_n(r, s, n_) - mulmod_n(bv_, ij, n_) % n_ + n_) % n_;
  long long ic = ((mulmod_n(r, j, n_) + mulmod_n(s, i, n_)) % n_ -
                  mulmod_n(av_, ij, n_) + n_) %
                 n_;
  return index(rc, ic);
}

int FiniteModel::pow(int a, unsigned long long e) const {
  int acc = one_, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

RabElem FiniteModel::elem(int a) const {
  const RingPtr& R = ring_->base();
  return ring_->elem(R->from_int(el_[a].first), R->from_int(el_[a].second));
}

std::string FiniteModel::str(int a) const {
  return std::to_string(el_[a].first) + " + (" +
         std::to_string(el_[a].second) + ")t";
}

std::vector<RingElem> enumerate_base_elements(const RingPtr& R,
                                              unsigned long long cap) {
  std::vector<RingElem> out;
  if (R->backend() == Ring::Backend::ZMod) {
    long long n = R->modulus();
    if ((unsigned long long)n > cap)
      throw TooLarge("base ring has " + std::to_string(n) + " elements");
    for (long long v = 0; v < n; ++v) out.push_back(R->from_int(v));
    return out;
  }
  const AmbientPtr& amb = R->ambient();
  if (amb->p == 0) throw TooLarge("base ring has characteristic zero");
  auto sc = R->staircase();
  if (!sc) throw TooLarge("base ring is infinite (no finite staircase)");
  unsigned long long total = 1;
  for (size_t k = 0; k < sc->size(); ++k) {
    total *= (unsigned long long)amb->p;
    if (total > cap)
      throw TooLarge("base ring exceeds cap of " + std::to_string(cap));
  }
  size_t nk = sc->size();
  std::vector<long long> cs(nk, 0);
  while (true) {
    Poly e = Poly::zero(amb);
    for (size_t i = 0; i < nk; ++i)
      if (cs[i]) e = e + Poly::term(amb, (*sc)[i], Coeff::mod(amb->p, cs[i]));
    out.push_back(R->from_poly(e));
    size_t i = 0;
    while (i < nk) {
      if (++cs[i] < amb->p) break;
      cs[i] = 0;
      ++i;
    }
    if (i == nk) break;
  }
  return out;
}

std::vector<RingElem> enumerate_ideal_elements(const Ideal& I,
                                               unsigned long long cap) {
  std::vector<RingElem> base = enumerate_base_elements(I.owner, cap);
  std::vector<RingElem> out;
  std::vector<std::string> keys;
  auto insert = [&](const RingElem& x) {
    std::string k = x.str();
    for (auto& e : keys)
      if (e == k) return false;
    keys.push_back(k);
    out.push_back(x);
    return true;
  };
  insert(I.owner->zero());
  for (auto& g : I.gens)
    for (auto& r : base) insert(r * g);
  // I is an R-submodule, so one more additive closure pass suffices per
  // growth round.
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i; j < sz; ++j)
        if (insert(out[i] + out[j])) grew = true;
    if (out.size() > cap) throw TooLarge("ideal model exceeds cap");
  }
  return out;
}

std::vector<int> nilradical_bf(const FiniteModel& M) {
  std::vector<int> out;
  for (int x = 0; x < (int)M.size(); ++x) {
    int y = x;
    for (size_t k = 1; k < M.size(); k <<= 1) y = M.mul(y, y);
    if (y == M.zero()) out.push_back(x);
  }
  return out;
}

std::optional<std::string> check_ring_axioms(const FiniteModel& M) {
  int n = (int)M.size();
  std::vector<int> mul((size_t)n * n), add((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mul[(size_t)x * n + y] = M.mul(x, y);
      add[(size_t)x * n + y] = M.add(x, y);
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (mul[(size_t)x * n + y] != mul[(size_t)y * n + x])
        return "commutativity fails at (" + M.str(x) + ", " + M.str(y) + ")";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = mul[(size_t)x * n + y];
      for (int z = 0; z < n; ++z) {
        if (mul[(size_t)xy * n + z] !=
            mul[(size_t)x * n + mul[(size_t)y * n + z]])
          return "associativity fails at (" + M.str(x) + ", " + M.str(y) +
                 ", " + M.str(z) + ")";
        if (mul[(size_t)x * n + add[(size_t)y * n + z]] !=
            add[(size_t)xy * n + mul[(size_t)x * n + z]])
          return "distributivity fails at (" + M.str(x) + ", " + M.str(y) +
                 ", " + M.str(z) + ")";
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_ev_alpha(const FiniteModel& M) {
  const RabPtr& rr = M.ring();
  if (!rr->has_global_roots())
    throw MissingRoots("check_ev_alpha needs roots attached in R[t]");
  long long n = rr->base()->modulus();
  long long al = rr->roots()->alpha.zval();
  auto ev = [&](int x) {
    return (M.r_of(x) + mulmod_n(al, M.i_of(x), n)) % n;
  };
  for (int x = 0; x < (int)M.size(); ++x)
    for (int y = x; y < (int)M.size(); ++y) {
      if (ev(M.mul(x, y)) != mulmod_n(ev(x), ev(y), n))
        return "ev_alpha not multiplicative at (" + M.str(x) + ", " +
               M.str(y) + ")";
      if (ev(M.add(x, y)) != (ev(x) + ev(y)) % n)
        return "ev_alpha not additive at (" + M.str(x) + ", " + M.str(y) +
               ")";
    }
  return std::nullopt;
}

size_t BfPrime::count() const {
  size_t c = 0;
  for (char m : member) c += m != 0;
  return c;
}

namespace {

/// Coset structure of M over an additive subgroup given as index list.
struct Cosets {
  std::vector<int> id;   // element -> coset
  std::vector<int> rep;  // coset -> representative element
};

Cosets cosets_of(const FiniteModel& M, const std::vector<int>& sub) {
  Cosets cs;
  cs.id.assign(M.size(), -1);
  for (int x = 0; x < (int)M.size(); ++x) {
    if (cs.id[x] != -1) continue;
    int c = (int)cs.rep.size();
    cs.rep.push_back(x);
    for (int s : sub) cs.id[M.add(x, s)] = c;
  }
  return cs;
}

/// Quotient-level primality: no zero divisors among nonzero cosets.
bool quotient_is_domain(const FiniteModel& M, const std::vector<char>& p) {
  std::vector<int> ideal_elems;
  for (int x = 0; x < (int)M.size(); ++x)
    if (p[x]) ideal_elems.push_back(x);
  if (ideal_elems.size() == M.size()) return false;  // not proper
  Cosets cs = cosets_of(M, ideal_elems);
  for (int c1 : cs.rep) {
    if (p[c1]) continue;
    for (int c2 : cs.rep) {
      if (p[c2]) continue;
      if (p[M.mul(c1, c2)]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<BfPrime> primes_bf(const FiniteModel& M) {
  std::vector<int> nil = nilradical_bf(M);
  std::vector<char> in_nil(M.size(), 0);
  for (int x : nil) in_nil[x] = 1;

  Cosets cs = cosets_of(M, nil);
  auto cmul = [&](int c1, int c2) {
    return cs.id[M.mul(cs.rep[c1], cs.rep[c2])];
  };
  int czero = cs.id[M.zero()];
  std::vector<int> idem;
  for (int c = 0; c < (int)cs.rep.size(); ++c)
    if (cmul(c, c) == c && c != czero) idem.push_back(c);
  std::vector<int> prim;
  for (int e : idem) {
    bool primitive = true;
    for (int f : idem) {
      int ef = cmul(e, f);
      if (ef != czero && ef != e) {
        primitive = false;
        break;
      }
    }
    if (primitive) prim.push_back(e);
  }

  std::vector<BfPrime> out;
  for (int e : prim) {
    // lift to an honest idempotent of M: u <- 3u^2 - 2u^3
    int u = cs.rep[e];
    for (int guard = 0; guard < 200 && M.mul(u, u) != u; ++guard) {
      int u2 = M.mul(u, u);
      int u3 = M.mul(u2, u);
      int t3 = M.add(u2, M.add(u2, u2));
      u = M.add(t3, M.neg(M.add(u3, u3)));
    }
    BfPrime p;
    p.idempotent = u;
    p.member.assign(M.size(), 0);
    for (int x = 0; x < (int)M.size(); ++x)
      p.member[x] = in_nil[M.mul(x, u)];
    if (quotient_is_domain(M, p.member)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> local_factor_bf(const FiniteModel& M, const BfPrime& p) {
  std::vector<char> seen(M.size(), 0);
  std::vector<int> out;
  for (int x = 0; x < (int)M.size(); ++x) {
    int y = M.mul(x, p.idempotent);
    if (!seen[y]) {
      seen[y] = 1;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_bf(const FiniteModel& M, const std::vector<char>& member) {
  bool proper = false;
  for (int x = 0; x < (int)M.size(); ++x)
    if (!member[x]) proper = true;
  if (!proper) return false;
  for (int x = 0; x < (int)M.size(); ++x) {
    if (member[x]) continue;
    for (int y = x; y < (int)M.size(); ++y) {
      if (member[y]) continue;
      if (member[M.mul(x, y)]) return false;
    }
  }
  return true;
}

SmallRing zmod_model(long long m) {
  SmallRing R;
  R.n = (int)m;
  R.add.resize(m * m);
  R.mul.resize(m * m);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j) {
      R.add[i * m + j] = (int)((i + j) % m);
      R.mul[i * m + j] = (int)(i * j % m);
    }
  R.zero = 0;
  R.one = (int)(1 % m);
  return R;
}

SmallRing subring_model(const FiniteModel& M, const std::vector<int>& elems,
                        int unit) {
  std::vector<int> pos(M.size(), -1);
  for (int k = 0; k < (int)elems.size(); ++k) pos[elems[k]] = k;
  SmallRing R;
  R.n = (int)elems.size();
  R.add.resize((size_t)R.n * R.n);
  R.mul.resize((size_t)R.n * R.n);
  for (int i = 0; i < R.n; ++i)
    for (int j = 0; j < R.n; ++j) {
      R.add[(size_t)i * R.n + j] = pos[M.add(elems[i], elems[j])];
      R.mul[(size_t)i * R.n + j] = pos[M.mul(elems[i], elems[j])];
    }
  R.zero = pos[M.zero()];
  R.one = pos[unit];
  return R;
}

namespace {

struct IsoSearch {
  const SmallRing& A;
  const SmallRing& B;
  std::vector<int> phi;   // A index -> B index, -1 undefined
  std::vector<char> hit;  // B index already used

  bool define(int a, int b) {
    if (phi[a] != -1) return phi[a] == b;
    if (hit[b]) return false;
    phi[a] = b;
    hit[b] = 1;
    return true;
  }

  /// Propagate op-closure of the defined part; false on contradiction.
  bool close() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < A.n; ++x) {
        if (phi[x] == -1) continue;
        for (int y = x; y < A.n; ++y) {
          if (phi[y] == -1) continue;
          int sa = A.add[(size_t)x * A.n + y];
          int sb = B.add[(size_t)phi[x] * B.n + phi[y]];
          if (phi[sa] == -1) changed = true;
          if (!define(sa, sb)) return false;
          int pa = A.mul[(size_t)x * A.n + y];
          int pb = B.mul[(size_t)phi[x] * B.n + phi[y]];
          if (phi[pa] == -1) changed = true;
          if (!define(pa, pb)) return false;
        }
      }
    }
    return true;
  }

  bool extend() {
    int g = -1;
    for (int x = 0; x < A.n; ++x)
      if (phi[x] == -1) {
        g = x;
        break;
      }
    if (g == -1) return true;  // total, consistent, injective
    for (int b = 0; b < B.n; ++b) {
      if (hit[b]) continue;
      auto phi0 = phi;
      auto hit0 = hit;
      if (define(g, b) && close() && extend()) return true;
      phi = std::move(phi0);
      hit = std::move(hit0);
    }
    return false;
  }
};

}  // namespace

bool rings_isomorphic(const SmallRing& A, const SmallRing& B, int cap) {
  if (A.n != B.n) return false;
  if (A.n > cap) throw TooLarge("isomorphism search capped at " +
                                std::to_string(cap) + " elements");
  IsoSearch s{A, B, std::vector<int>(A.n, -1), std::vector<char>(B.n, 0)};
  if (!s.define(A.zero, B.zero)) return false;
  if (!s.define(A.one, B.one)) return false;
  if (!s.close()) return false;
  return s.extend();
}

namespace {

/// Scan Z/n for a root of t^2+at+b and attach the exact factorization.
void try_attach_global_roots(const RabPtr& rr) {
  if (rr->has_global_roots()) return;
  const RingPtr& R = rr->base();
  long long n = R->modulus();
  long long a = rr->a().zval(), b = rr->b().zval();
  for (long long al = 0; al < n; ++al) {
    if ((mulmod_n(al, al, n) + mulmod_n(a, al, n) + b) % n == 0) {
      RootData rd;
      rd.alpha = R->from_int(al);
      rd.beta = -rr->a() - rd.alpha;
      rd.gamma = R->one();
      rd.p_corr = R->zero();
      rr->verify_and_attach(rd);
      return;
    }
  }
}

std::vector<char> membership_of(const FiniteModel& M,
                                const PrimeDescriptor& d) {
  std::vector<char> out(M.size(), 0);
  for (int x = 0; x < (int)M.size(); ++x) out[x] = d.contains(M.elem(x));
  return out;
}

int find_matching_bf_prime(const std::vector<BfPrime>& primes,
                           const std::vector<char>& member) {
  for (int k = 0; k < (int)primes.size(); ++k)
    if (primes[k].member == member) return k;
  return -1;
}

/// q^e with q^e exactly dividing n, and the local ideal size, for the base
/// prime (q) of Z/n with I = (d).
void local_base_sizes(const RingPtr& R, long long q, long long d,
                      unsigned long long* card_rp,
                      unsigned long long* card_ip) {
  int e = 0;
  long long n = R->modulus();
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  int vd = 0;
  long long dd = d;
  while (vd < e && dd % q == 0) {
    dd /= q;
    ++vd;
  }
  unsigned long long qe = 1;
  for (int k = 0; k < e; ++k) qe *= (unsigned long long)q;
  unsigned long long qi = 1;
  for (int k = 0; k < e - vd; ++k) qi *= (unsigned long long)q;
  *card_rp = qe;
  *card_ip = qi;
}

}  // namespace

namespace {

/// Emitted isomorphisms are re-verified on the model: size match,
/// injectivity, and + / * preservation (exhaustive on small models,
/// deterministic sample above 64 elements).
void verify_iso_map(const FiniteModel& M, const IsoMap& iso,
                    const std::string& which, unsigned long long cap) {
  FiniteModel T = FiniteModel::build(iso.target, cap);
  if (T.size() != M.size())
    throw OracleMismatch(which + " map target has " +
                         std::to_string(T.size()) + " elements, source has " +
                         std::to_string(M.size()));
  std::vector<int> img(M.size());
  std::vector<char> seen(T.size(), 0);
  for (int x = 0; x < (int)M.size(); ++x) {
    RabElem y = iso.apply(M.elem(x));
    img[x] = T.index(y.r().zval(), y.i().zval());
    if (seen[img[x]])
      throw OracleMismatch(which + " map is not injective at " + M.str(x));
    seen[img[x]] = 1;
  }
  auto check_pair = [&](int x, int y) {
    if (img[M.mul(x, y)] != T.mul(img[x], img[y]))
      throw OracleMismatch(which + " map breaks multiplication at (" +
                           M.str(x) + ", " + M.str(y) + ")");
    if (img[M.add(x, y)] != T.add(img[x], img[y]))
      throw OracleMismatch(which + " map breaks addition at (" + M.str(x) +
                           ", " + M.str(y) + ")");
  };
  if (M.size() <= 64) {
    for (int x = 0; x < (int)M.size(); ++x)
      for (int y = x; y < (int)M.size(); ++y) check_pair(x, y);
  } else {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < 2000; ++k) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      int x = (int)((state >> 20) % M.size());
      int y = (int)((state >> 40) % M.size());
      check_pair(x, y);
    }
  }
}

}  // namespace

CrosscheckReport crosscheck(const RabPtr& rr, unsigned long long cap) {
  CrosscheckReport rep;
  FiniteModel M = FiniteModel::build(rr, cap);
  rep.model_size = M.size();
  try_attach_global_roots(rr);

  // (b) reducedness
  std::vector<int> nil = nilradical_bf(M);
  rep.reduced_bf = nil.size() == 1;
  std::optional<RabElem> w;
  TriState red = is_reduced_rab(*rr, &w);
  rep.reduced_sym = red.str();
  if (red.is_yes() && !rep.reduced_bf)
    throw OracleMismatch("claimed reduced but " + M.str(nil[1]) +
                         " is nilpotent");
  if (red.is_no()) {
    if (rep.reduced_bf)
      throw OracleMismatch("claimed non-reduced but nilradical is zero");
    if (w) {
      int wi = M.index(w->r().zval(), w->i().zval());
      if (wi == M.zero())
        throw OracleMismatch("reducedness witness is zero");
      if (M.mul(wi, wi) != M.zero())
        throw OracleMismatch("reducedness witness " + M.str(wi) +
                             " does not square to zero");
    }
  }

  // (c) zero divisors vs is_domain_rab
  TriState dom = is_domain_rab(*rr);
  if (!dom.is_unknown()) {
    int zx = -1, zy = -1;
    for (int x = 1; x < (int)M.size() && zx < 0; ++x)
      for (int y = x; y < (int)M.size(); ++y)
        if (x != M.zero() && y != M.zero() && M.mul(x, y) == M.zero()) {
          zx = x;
          zy = y;
          break;
        }
    if (dom.is_yes() && zx >= 0)
      throw OracleMismatch("claimed domain but " + M.str(zx) + " * " +
                           M.str(zy) + " = 0");
    if (dom.is_no() && zx < 0)
      throw OracleMismatch("claimed non-domain but no zero divisors exist");
  }

  // (a) primes and local factors
  std::vector<BfPrime> bf = primes_bf(M);
  rep.primes_bf_count = bf.size();
  auto sym = minimal_primes_rab(*rr);
  if (!sym)
    throw OracleMismatch("symbolic minimal primes unavailable over Z/n");
  rep.primes_sym_count = sym->size();
  if (sym->size() != bf.size())
    throw OracleMismatch(
        "prime count mismatch: symbolic " + std::to_string(sym->size()) +
        " vs model " + std::to_string(bf.size()));

  std::vector<char> used(bf.size(), 0);
  long long d = rr->ideal().zgen;
  for (auto& pd : *sym) {
    std::vector<char> mem = membership_of(M, pd);
    int k = find_matching_bf_prime(bf, mem);
    if (k < 0)
      throw OracleMismatch("symbolic prime " + pd.str() +
                           " matches no model prime");
    if (used[k])
      throw OracleMismatch("two symbolic primes match one model prime");
    used[k] = 1;

    LocalizationReport lr = localization_class(*rr, pd.base_prime, pd.roots);
    if (lr.kase == LocalizationReport::Case::OpenQuestion) {
      ++rep.open_questions;
      continue;
    }
    unsigned long long card_rp = 0, card_ip = 0;
    local_base_sizes(rr->base(), pd.base_prime.zgen, d, &card_rp, &card_ip);
    unsigned long long predicted =
        lr.kase == LocalizationReport::Case::IsoBaseLocal ? card_rp
                                                          : card_rp * card_ip;
    size_t actual = local_factor_bf(M, bf[k]).size();
    if (actual != predicted)
      throw OracleMismatch("local factor over " + pd.base_prime.str() +
                           " has " + std::to_string(actual) + " elements, " +
                           lr.case_name() + " predicts " +
                           std::to_string(predicted));
  }

  // (d) recognition maps
  if (rr->has_global_roots()) {
    SpecialReport sp = recognize_special(*rr);
    if (sp.idealization_map)
      verify_iso_map(M, *sp.idealization_map, "idealization", cap);
    if (sp.duplication_map)
      verify_iso_map(M, *sp.duplication_map, "duplication", cap);
  }

  rep.detail = "model size " + std::to_string(M.size()) + ", " +
               std::to_string(bf.size()) + " primes agree";
  return rep;
}

std::vector<SweepItem> enumerate_sweep_items(const SweepSpec& spec) {
  std::vector<SweepItem> items;
  for (long long n = spec.n_lo; n <= spec.n_hi; ++n) {
    for (long long d = 2; d < n; ++d) {
      if (n % d) continue;
      if ((unsigned long long)n * (n / d) > spec.cap) continue;
      if (n <= spec.full_upto) {
        for (long long a = 0; a < n; ++a)
          for (long long b = 0; b < n; ++b) items.push_back({n, d, a, b});
      } else {
        std::mt19937 rng(spec.seed ^ (unsigned)(n * 1315423911u + d));
        std::uniform_int_distribution<long long> pick(0, n - 1);
        for (int k = 0; k < spec.random_pairs; ++k)
          items.push_back({n, d, pick(rng), pick(rng)});
      }
    }
  }
  return items;
}

namespace {

SweepOutcome run_item(const SweepItem& it, unsigned long long cap) {
  SweepOutcome out;
  out.item = it;
  try {
    RingPtr R = Ring::zmod(it.n);
    Ideal I = R->ideal({R->from_int(it.d)});
    RabPtr rr =
        RabRing::make(R, I, R->from_int(it.a), R->from_int(it.b), false);
    CrosscheckReport rep = crosscheck(rr, cap);
    out.ok = rep.ok;
    out.detail = rep.detail;
    out.open_questions = rep.open_questions;
  } catch (const Error& e) {
    out.ok = false;
    out.detail = e.what();
  }
  return out;
}

}  // namespace

std::vector<SweepOutcome> sweep_crosscheck(
    const SweepSpec& spec,
    const std::function<void(const SweepOutcome&)>& on_result) {
  std::vector<SweepItem> items = enumerate_sweep_items(spec);
  std::vector<SweepOutcome> results(items.size());
  if (spec.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long k = 0; k < (long long)items.size(); ++k) {
      results[k] = run_item(items[k], spec.cap);
      if (on_result) {
#ifdef _OPENMP
#pragma omp critical
#endif
        on_result(results[k]);
      }
    }
  } else {
    for (size_t k = 0; k < items.size(); ++k) {
      results[k] = run_item(items[k], spec.cap);
      if (on_result) on_result(results[k]);
    }
  }
  return results;
}

std::vector<LocqFinding> search_localization_question(const SweepSpec& spec) {
  std::vector<SweepItem> items = enumerate_sweep_items(spec);
  std::vector<std::vector<LocqFinding>> per_item(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (spec.parallel)
#endif
  for (long long k = 0; k < (long long)items.size(); ++k) {
    const SweepItem& it = items[k];
    try {
      RingPtr R = Ring::zmod(it.n);
      Ideal I = R->ideal({R->from_int(it.d)});
      RabPtr rr =
          RabRing::make(R, I, R->from_int(it.a), R->from_int(it.b), false);
      FiniteModel M = FiniteModel::build(rr, spec.cap);
      try_attach_global_roots(rr);
      auto sym = minimal_primes_rab(*rr);
      if (!sym) continue;
      std::vector<BfPrime> bf = primes_bf(M);
      std::vector<char> seen_base(it.n + 1, 0);
      for (auto& pd : *sym) {
        long long q = pd.base_prime.zgen;
        if (seen_base[q]) continue;
        LocalizationReport lr = localization_class(*rr, pd.base_prime, pd.roots);
        if (lr.kase != LocalizationReport::Case::OpenQuestion) continue;
        seen_base[q] = 1;
        LocqFinding f;
        f.item = it;
        f.prime = pd.base_prime.str();
        int m = find_matching_bf_prime(bf, membership_of(M, pd));
        if (m < 0) {
          f.notes = "no matching model prime";
          per_item[k].push_back(std::move(f));
          continue;
        }
        std::vector<int> loc = local_factor_bf(M, bf[m]);
        unsigned long long card_rp = 0, card_ip = 0;
        local_base_sizes(R, q, it.d, &card_rp, &card_ip);
        f.local_size = loc.size();
        f.base_local_size = card_rp;
        if (loc.size() > 64 || card_rp > 64) {
          f.notes = "local factor too large for isomorphism search";
        } else {
          SmallRing A = subring_model(M, loc, bf[m].idempotent);
          SmallRing B = zmod_model((long long)card_rp);
          f.resolved = true;
          f.iso_base_local = rings_isomorphic(A, B);
          f.notes = f.iso_base_local
                        ? "localization is isomorphic to the base local ring"
                        : "localization is NOT the base local ring";
        }
        per_item[k].push_back(std::move(f));
      }
    } catch (const Error&) {
      // skip instances the symbolic layer cannot set up
    }
  }
  std::vector<LocqFinding> out;
  for (auto& v : per_item)
    for (auto& f : v) out.push_back(std::move(f));
  return out;
}

}  // namespace rq

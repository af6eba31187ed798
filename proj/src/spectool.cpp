#include "rq/spectool.hpp"

#include <sstream>

namespace rq {

bool PrimeDescriptor::contains(const RabElem& x) const {
  const RingPtr& R = ring->base();
  switch (kind) {
    case Kind::IrreducibleFiber:
      return R->member(x.r(), base_prime) && R->member(x.i(), base_prime);
    case Kind::Root1:
      return R->member(roots->gamma * x.r() + roots->alpha * x.i(),
                       base_prime);
    case Kind::Root2:
      return R->member(roots->gamma * x.r() + roots->beta * x.i(),
                       base_prime);
  }
  return false;
}

std::string PrimeDescriptor::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::IrreducibleFiber:
      os << "q over " << base_prime.str() << " (irreducible fiber)";
      break;
    case Kind::Root1:
      os << "p1 over " << base_prime.str() << " (" << roots->str() << ")";
      break;
    case Kind::Root2:
      os << "p2 over " << base_prime.str() << " (" << roots->str() << ")";
      break;
  }
  return os.str();
}

std::vector<PrimeDescriptor> FiberResult::primes() const {
  if (!reducible) return {*q};
  if (merged) return {*p1};
  return {*p1, *p2};
}

std::string LocalizationReport::case_name() const {
  switch (kase) {
    case Case::IrreducibleIsoRabLocal:
      return "case1_irreducible_iso_rab_local";
    case Case::MergedIsoRabLocal:
      return "case2a_merged_iso_rab_local";
    case Case::IsoBaseLocal:
      return "case2b_iso_base_local";
    case Case::OpenQuestion:
      return "case_open_question";
  }
  return "?";
}

namespace {

void require_prime(const RingPtr& R, const Ideal& p) {
  TriState pr = R->is_prime(p);
  if (pr.is_no()) throw BadPrime("not a prime ideal: " + pr.witness);
  if (pr.is_unknown())
    throw BadPrime("primality of " + p.str() +
                   " undecided; assert it explicitly");
}

/// Build exact RootData from a residue root alift (class of alpha mod p):
/// beta := -a - alpha makes gamma*a = -(alpha+beta) exact with gamma = 1,
/// and the correction b - alpha*beta lands in p by construction.
RootData roots_from_alpha(const RabRing& rr, const Ideal& p, RingElem alpha) {
  RootData rd;
  rd.alpha = std::move(alpha);
  rd.beta = -rr.a() - rd.alpha;
  rd.gamma = rr.base()->one();
  rd.p_corr = rr.b() - rd.alpha * rd.beta;
  rd.modulus = p;
  return rd;
}

QuadFactor factor_zmod(const RabRing& rr, const Ideal& p) {
  const RingPtr& R = rr.base();
  long long q = p.zgen;  // prime (possibly n itself, for the zero ideal)
  long long a = rr.a().zval() % q;
  long long b = rr.b().zval() % q;
  QuadFactor out;
  long long root = -1;
  if (q == 2) {
    // t^2 + t + b: reducible iff b = 0; t^2 + b = (t + sqrt(b))^2 always
    if (a % 2 != 0) {
      if (b % 2 != 0) {
        out.kind = QuadFactor::Kind::Irreducible;
        return out;
      }
      root = 0;
    } else {
      root = b % 2;  // sqrt in F_2
      // root of t^2 + b is -sqrt(b); sign immaterial in char 2
    }
  } else {
    long long disc = ((a * a - 4 * b) % q + q) % q;
    auto s = sqrt_mod(disc, q);
    if (!s) {
      out.kind = QuadFactor::Kind::Irreducible;
      return out;
    }
    long long inv2 = powmod(2, q - 2, q);
    root = ((-a % q + q) + *s) % q * inv2 % q;
  }
  out.kind = QuadFactor::Kind::Roots;
  out.roots = roots_from_alpha(rr, p, R->from_int(root));
  return out;
}

QuadFactor factor_polyquotient(const RabRing& rr, const Ideal& p) {
  const RingPtr& R = rr.base();
  const auto& G2 = p.lifted_gb;  // defines R/p inside the polynomial ring
  const AmbientPtr& amb = R->ambient();
  QuadFactor out;

  auto nf2 = [&](const Poly& f) {
    return G2.empty() ? f : normal_form(f, G2, R->order());
  };

  // Finite residue field: enumerate candidate roots directly.
  if (amb->p > 0) {
    auto sc = finite_staircase(G2, R->order(), amb->vars.size(), 4096);
    if (sc) {
      unsigned long long card = 1;
      bool small = true;
      for (size_t i = 0; i < sc->size() && small; ++i) {
        card *= static_cast<unsigned long long>(amb->p);
        if (card > 4096) small = false;
      }
      if (small) {
        const Poly ap = rr.a().poly();
        const Poly bp = rr.b().poly();
        // iterate all residue elements as coefficient vectors on the staircase
        size_t k = sc->size();
        std::vector<long long> cs(k, 0);
        while (true) {
          Poly e = Poly::zero(amb);
          for (size_t i = 0; i < k; ++i)
            if (cs[i])
              e = e + Poly::term(amb, (*sc)[i], Coeff::mod(amb->p, cs[i]));
          if (nf2(e * e + ap * e + bp).is_zero()) {
            out.kind = QuadFactor::Kind::Roots;
            out.roots = roots_from_alpha(rr, p, R->from_poly(e));
            return out;
          }
          size_t i = 0;
          while (i < k) {
            if (++cs[i] < amb->p) break;
            cs[i] = 0;
            ++i;
          }
          if (i == k) break;
        }
        out.kind = QuadFactor::Kind::Irreducible;
        return out;
      }
    }
  }

  if (amb->p == 2) {
    out.kind = QuadFactor::Kind::Unknown;
    out.note = "characteristic 2 with non-finite residue";
    return out;
  }

  // Syntactic square root of the discriminant's canonical representative.
  Coeff four = amb->cint(4);
  Poly disc = nf2(rr.a().poly() * rr.a().poly() - rr.b().poly().scaled(four));
  auto s = poly_sqrt(disc);
  if (s) {
    Coeff inv2 = amb->cint(2).inverse();
    Poly alpha = (*s - rr.a().poly()).scaled(inv2);
    RootData rd = roots_from_alpha(rr, p, R->from_poly(alpha));
    if (!R->member(rd.p_corr, p)) {
      out.kind = QuadFactor::Kind::Unknown;
      out.note = "square root found but correction escapes the prime";
      return out;
    }
    out.kind = QuadFactor::Kind::Roots;
    out.roots = std::move(rd);
    return out;
  }
  // Failure is conclusive only when the residue ring is a polynomial ring
  // over the field (defining basis empty or generated by variables).
  bool vars_only = true;
  for (auto& g : G2)
    if (g.terms().size() != 1 || total_degree(g.terms()[0].m) != 1)
      vars_only = false;
  if (vars_only) {
    out.kind = QuadFactor::Kind::Irreducible;
    return out;
  }
  out.kind = QuadFactor::Kind::Unknown;
  out.note = "no syntactic square root; residue ring outside decided classes";
  return out;
}

}  // namespace

QuadFactor factor_quadratic_mod_prime(const RabRing& rr, const Ideal& p) {
  if (p.is_unit_ideal()) throw BadPrime("unit ideal is not prime");
  require_prime(rr.base(), p);
  return rr.base()->backend() == Ring::Backend::ZMod
             ? factor_zmod(rr, p)
             : factor_polyquotient(rr, p);
}

FiberResult fiber_over_prime(const RabRing& rr, const Ideal& p,
                             std::optional<RootData> roots) {
  const RingPtr& R = rr.base();
  require_prime(R, p);

  if (roots) {
    RootData rd = *roots;
    rd.modulus = p;
    std::string why;
    if (!RabRing::verify_factorization(rr, rd, &why))
      throw FactorizationMismatch(why);
    roots = rd;
  } else if (rr.has_global_roots()) {
    RootData rd = *rr.roots();
    rd.modulus = p;  // exact factorization serves every prime
    roots = rd;
  } else {
    QuadFactor qf = factor_quadratic_mod_prime(rr, p);
    if (qf.kind == QuadFactor::Kind::Unknown)
      throw NeedRoots("factorization undecidable over " + p.str() + " (" +
                      qf.note + "); supply RootData");
    if (qf.kind == QuadFactor::Kind::Roots) roots = qf.roots;
  }

  RabPtr self = rr.shared_from_this();
  FiberResult out;
  if (!roots) {
    out.reducible = false;
    out.q = PrimeDescriptor{PrimeDescriptor::Kind::IrreducibleFiber, self, p,
                            std::nullopt};
    return out;
  }
  out.reducible = true;
  RingElem diff = roots->alpha - roots->beta;
  out.merged = true;
  for (auto& g : rr.ideal().gens) {
    if (!R->member(diff * g, p)) {
      out.merged = false;
      out.merged_witness = "(alpha-beta)*" + g.str() + " = " +
                           (diff * g).str() + " not in " + p.str();
      break;
    }
  }
  if (out.merged) out.merged_witness = "(alpha-beta)I subset of " + p.str();
  out.p1 = PrimeDescriptor{PrimeDescriptor::Kind::Root1, self, p, roots};
  out.p2 = PrimeDescriptor{PrimeDescriptor::Kind::Root2, self, p, roots};
  return out;
}

std::optional<std::vector<PrimeDescriptor>> minimal_primes_rab(
    const RabRing& rr) {
  auto mp = rr.base()->minimal_primes();
  if (!mp) return std::nullopt;
  std::vector<PrimeDescriptor> out;
  for (auto& p : *mp) {
    FiberResult fr = fiber_over_prime(rr, p);
    for (auto& d : fr.primes()) out.push_back(d);
  }
  return out;
}

namespace {

/// Candidate lambdas: generators of I, their pairwise products, and (for
/// Z/n) the full multiple sweep of the principal generator.
std::vector<RingElem> lambda_candidates(const RabRing& rr,
                                        const SearchBounds& bounds) {
  const RingPtr& R = rr.base();
  std::vector<RingElem> out;
  for (auto& g : rr.ideal().gens) out.push_back(g);
  if (R->backend() == Ring::Backend::ZMod && !rr.ideal().gens.empty()) {
    long long d = rr.ideal().zgen;
    for (long long k = 2; k * d < R->modulus() &&
                          (int)out.size() < bounds.max_lambda_candidates;
         ++k)
      out.push_back(R->from_int(k * d));
  } else {
    size_t n = rr.ideal().gens.size();
    for (size_t i = 0; i < n && (int)out.size() < bounds.max_lambda_candidates;
         ++i)
      for (size_t j = i; j < n; ++j)
        out.push_back(rr.ideal().gens[i] * rr.ideal().gens[j]);
  }
  return out;
}

/// Root-representative shifts q in p to sweep (alpha+q, beta-q).
std::vector<RingElem> shift_candidates(const RingPtr& R, const Ideal& p,
                                       const SearchBounds& bounds) {
  std::vector<RingElem> out = {R->zero()};
  if (R->backend() == Ring::Backend::ZMod) {
    long long d = p.zgen;
    for (long long k = 1; k * d < R->modulus() &&
                          (int)out.size() < bounds.max_shift_candidates;
         ++k)
      out.push_back(R->from_int(k * d));
  } else {
    for (auto& g : p.gens) {
      out.push_back(g);
      out.push_back(-g);
      for (size_t v = 0; v < R->ambient()->vars.size(); ++v) {
        if ((int)out.size() >= bounds.max_shift_candidates) break;
        RingElem xv = R->from_poly(Poly::var(R->ambient(), (int)v));
        out.push_back(g * xv);
        out.push_back(-(g * xv));
      }
    }
  }
  return out;
}

bool kills_lambda_I(const RabRing& rr, const RingElem& p_corr,
                    const RingElem& lambda) {
  for (auto& g : rr.ideal().gens)
    if (!(p_corr * lambda * g).is_zero()) return false;
  return true;
}

}  // namespace

LocalizationReport localization_class(const RabRing& rr, const Ideal& p,
                                      std::optional<RootData> roots,
                                      const SearchBounds& bounds) {
  const RingPtr& R = rr.base();
  FiberResult fr = fiber_over_prime(rr, p, std::move(roots));
  LocalizationReport rep;
  if (!fr.reducible) {
    rep.kase = LocalizationReport::Case::IrreducibleIsoRabLocal;
    rep.notes = "residual quadratic irreducible";
    return rep;
  }
  if (fr.merged) {
    rep.kase = LocalizationReport::Case::MergedIsoRabLocal;
    rep.notes = fr.merged_witness;
    return rep;
  }
  const RootData& rd = *fr.p1->roots;
  RingElem diff = rd.alpha - rd.beta;
  auto lambdas = lambda_candidates(rr, bounds);
  std::optional<RingElem> lambda;
  for (auto& l : lambdas) {
    if (!R->member(diff * l, p)) {
      lambda = l;
      break;
    }
  }
  if (!lambda) {
    // unmerged guarantees a generator works; defensive fallback only
    rep.kase = LocalizationReport::Case::OpenQuestion;
    rep.notes = "no lambda with (alpha-beta)lambda outside p found";
    return rep;
  }
  rep.lambda = lambda;
  // Search a root choice whose correction kills lambda' * I.
  for (auto& q : shift_candidates(R, p, bounds)) {
    RingElem alpha = rd.alpha + q;
    RingElem beta = rd.beta - q;
    RingElem p_corr = rr.b() - alpha * beta;
    for (auto& l : lambdas) {
      if (R->member(diff * l, p)) continue;
      if (kills_lambda_I(rr, p_corr, l)) {
        rep.kase = LocalizationReport::Case::IsoBaseLocal;
        rep.lambda = l;
        rep.p_corr_ok = true;
        rep.notes = "roots (" + alpha.str() + ", " + beta.str() +
                    ") give correction " + p_corr.str() +
                    " with p*lambda*I = 0";
        return rep;
      }
    }
  }
  rep.kase = LocalizationReport::Case::OpenQuestion;
  rep.notes =
      "lambda exists but no root choice in the search bounds makes "
      "p*lambda*I vanish";
  return rep;
}

TriState is_domain_rab(const RabRing& rr) {
  const RingPtr& R = rr.base();
  TriState dom = R->domain_flag();
  if (dom.is_no())
    return TriState::no("base ring is not a domain: " + dom.witness);
  if (dom.is_unknown()) return TriState::unknown("base domain flag unknown");
  QuadFactor qf = factor_quadratic_mod_prime(rr, R->zero_ideal());
  if (qf.kind == QuadFactor::Kind::Irreducible)
    return TriState::yes("t^2+at+b irreducible over Q(R)");
  if (qf.kind == QuadFactor::Kind::Roots) {
    if (rr.ideal().gens.empty())
      return TriState::yes("I = (0), the ring is R itself");
    // i*alpha - i*gamma*t is a nonzero element of p1 over (0)
    const RingElem& i0 = rr.ideal().gens[0];
    RabElem w = rr.elem(i0 * qf.roots->alpha, -(i0 * qf.roots->gamma));
    return TriState::no("zero divisor " + w.str());
  }
  return TriState::unknown(qf.note);
}

TriState is_reduced_rab(const RabRing& rr,
                        std::optional<RabElem>* witness) {
  const RingPtr& R = rr.base();
  TriState red = R->reduced_flag();
  if (rr.has_global_roots()) {
    if (red.is_no()) {
      if (auto x = R->nilpotent_witness()) {
        RabElem w = rr.from_base(*x);
        if (witness) *witness = w;
        return TriState::no("nilpotent " + w.str() + " from the base ring");
      }
      return TriState::no("base ring not reduced: " + red.witness,
                          red.provenance);
    }
    if (red.is_unknown())
      return TriState::unknown("base reduced flag unknown");
    const RootData& rd = *rr.roots();
    RingElem diff = rd.alpha - rd.beta;
    Ideal k = R->intersect(rr.ideal(), R->annihilator(diff));
    if (k.is_zero_ideal())
      return TriState::yes("I cap Ann(alpha-beta) = (0)");
    const RingElem& i0 = k.gens[0];
    RabElem w = rr.elem(-(rd.beta * i0), i0);
    if (witness) *witness = w;
    return TriState::no("square-zero element " + w.str());
  }
  // Remark path: irreducible residual quadratic at every minimal prime.
  auto mp = R->minimal_primes();
  if (!mp)
    return TriState::unknown(
        "no R[t] roots attached and base minimal primes unknown");
  for (auto& p : *mp) {
    QuadFactor qf = factor_quadratic_mod_prime(rr, p);
    if (qf.kind != QuadFactor::Kind::Irreducible)
      return TriState::unknown(
          "residual quadratic not irreducible over every minimal prime; "
          "attach R[t] roots to decide");
  }
  if (red.is_no()) {
    if (auto x = R->nilpotent_witness()) {
      RabElem w = rr.from_base(*x);
      if (witness) *witness = w;
      return TriState::no("nilpotent " + w.str() + " from the base ring");
    }
  }
  return red;
}

SpecialReport recognize_special(const RabRing& rr) {
  if (!rr.has_global_roots())
    throw MissingRoots("recognize_special needs roots attached in R[t]");
  const RingPtr& R = rr.base();
  const RootData& rd = *rr.roots();
  RingElem alpha = rd.alpha;
  RingElem diff = rd.alpha - rd.beta;
  bool reduced = R->reduced_flag().is_yes();
  SpecialReport out;

  Ideal i2 = R->product(rr.ideal(), rr.ideal());
  bool in_ann_i2 = R->member(diff, R->annihilator(i2));
  if (in_ann_i2) {
    out.idealization = TriState::yes("alpha-beta in Ann(I^2)");
  } else if (reduced) {
    bool in_ann_i = R->member(diff, R->annihilator(rr.ideal()));
    out.idealization =
        in_ann_i ? TriState::yes("alpha-beta in Ann(I)")
                 : TriState::no("alpha-beta not in Ann(I), R reduced");
  } else {
    out.idealization =
        TriState::unknown("sufficient condition fails, R not reduced");
  }
  if (out.idealization.is_yes()) {
    IsoMap m;
    m.target = RabRing::idealization(R, rr.ideal());
    RabPtr tgt = m.target;
    m.apply = [tgt, alpha](const RabElem& x) {
      return tgt->elem(x.r() + x.i() * alpha, x.i());
    };
    m.desc = "(r, i) -> (r + i*alpha, i) into R x| I";
    out.idealization_map = std::move(m);
  }

  Ideal k = R->intersect(R->annihilator(diff), rr.ideal());
  if (k.is_zero_ideal()) {
    out.duplication = TriState::yes("Ann(alpha-beta) cap I = (0)");
    Ideal di = R->product(R->ideal({diff}), rr.ideal());
    IsoMap m;
    m.target = RabRing::make(R, di, -R->one(), R->zero());
    RabPtr tgt = m.target;
    m.apply = [tgt, alpha, diff](const RabElem& x) {
      return tgt->elem(x.r() + x.i() * alpha, -(diff * x.i()));
    };
    m.desc = "(r, i) -> (r + i*alpha, (beta-alpha)*i) into R((alpha-beta)I)_{-1,0}";
    out.duplication_map = std::move(m);
  } else if (reduced) {
    out.duplication = TriState::no("Ann(alpha-beta) cap I = " + k.str() +
                                   " != (0), R reduced");
  } else {
    out.duplication =
        TriState::unknown("Ann(alpha-beta) cap I != (0), R not reduced");
  }
  return out;
}

}  // namespace rq

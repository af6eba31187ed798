#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rq/cli.hpp"
#include "rq/spectool.hpp"

using namespace rq;

namespace {

RingPtr kxy_mod_xy(long long p) {
  auto amb = make_ambient(p, {"x", "y"});
  return Ring::quotient(p, {"x", "y"}, MonomialOrder::degrevlex(),
                        {parse_poly("x*y", amb)});
}

RingElem pe(const RingPtr& R, const std::string& s) {
  return R->from_poly(parse_poly(s, R->ambient()));
}

/// first worked example ring with a chosen ideal.
RabPtr worked_f2(const std::string& gen, bool attach = true) {
  RingPtr R = kxy_mod_xy(2);
  RabPtr A = RabRing::make(R, R->ideal({pe(R, gen)}), pe(R, "x"),
                           pe(R, "y^2"));
  if (attach) {
    RootData rd;
    rd.alpha = pe(R, "y + x");
    rd.beta = pe(R, "y");
    rd.gamma = R->one();
    rd.p_corr = R->zero();
    A->verify_and_attach(rd);
  }
  return A;
}

/// second worked example ring (F_3, r = 0).
RabPtr worked_f3(bool attach = true) {
  RingPtr R = kxy_mod_xy(3);
  RabPtr A = RabRing::make(R, R->ideal({pe(R, "x"), pe(R, "y")}),
                           R->zero(), pe(R, "-y^2"));
  if (attach) {
    RootData rd;
    rd.alpha = pe(R, "y");
    rd.beta = pe(R, "-y");
    rd.gamma = R->one();
    rd.p_corr = R->zero();
    A->verify_and_attach(rd);
  }
  return A;
}

}  // namespace

TEST_CASE("quadratic factorization over Z/n residue fields") {
  RingPtr Z6 = Ring::zmod(6);
  RabPtr B = RabRing::make(Z6, Z6->ideal({Z6->from_int(3)}), Z6->zero(),
                           Z6->from_int(-1));
  auto f2 = factor_quadratic_mod_prime(*B, Z6->ideal({Z6->from_int(2)}));
  REQUIRE(f2.kind == QuadFactor::Kind::Roots);
  // t^2 - 1 = (t-1)^2 over F_2: both roots congruent to 1
  CHECK(Z6->member(f2.roots->alpha - Z6->one(),
                   Z6->ideal({Z6->from_int(2)})));
  CHECK(Z6->member(f2.roots->beta - Z6->one(), Z6->ideal({Z6->from_int(2)})));

  auto f3 = factor_quadratic_mod_prime(*B, Z6->ideal({Z6->from_int(3)}));
  REQUIRE(f3.kind == QuadFactor::Kind::Roots);
  Ideal p3 = Z6->ideal({Z6->from_int(3)});
  // roots 1 and -1 mod 3, in either order
  bool fwd = Z6->member(f3.roots->alpha - Z6->one(), p3) &&
             Z6->member(f3.roots->beta + Z6->one(), p3);
  bool rev = Z6->member(f3.roots->alpha + Z6->one(), p3) &&
             Z6->member(f3.roots->beta - Z6->one(), p3);
  CHECK((fwd || rev));

  // t^2 + 1 irreducible mod 3
  RingPtr Z3 = Ring::zmod(6);
  RabPtr C = RabRing::make(Z3, Z3->ideal({Z3->from_int(2)}), Z3->zero(),
                           Z3->one());
  auto f = factor_quadratic_mod_prime(*C, Z3->ideal({Z3->from_int(3)}));
  CHECK(f.kind == QuadFactor::Kind::Irreducible);

  CHECK_THROWS_AS(
      factor_quadratic_mod_prime(*B, Z6->ideal({Z6->from_int(1)})), BadPrime);
}

TEST_CASE("quadratic factorization by syntactic square root") {
  // the F_3 worked example over (x): discriminant 4y^2 = (2y)^2
  RabPtr A = worked_f3(false);
  const RingPtr& R = A->base();
  auto f = factor_quadratic_mod_prime(*A, R->ideal({pe(R, "x")}));
  REQUIRE(f.kind == QuadFactor::Kind::Roots);
  Ideal px = R->ideal({pe(R, "x")});
  bool fwd = R->member(f.roots->alpha - pe(R, "y"), px) &&
             R->member(f.roots->beta - pe(R, "-y"), px);
  bool rev = R->member(f.roots->alpha - pe(R, "-y"), px) &&
             R->member(f.roots->beta - pe(R, "y"), px);
  CHECK((fwd || rev));
  CHECK(R->member(f.roots->p_corr, px));

  // t^2 - u over F_3[u]: no square root of u, polynomial ring => conclusive
  RingPtr Fu = Ring::quotient(3, {"u"}, MonomialOrder::degrevlex(), {});
  RabPtr D = RabRing::make(Fu, Fu->ideal({pe(Fu, "u")}), Fu->zero(),
                           pe(Fu, "-u"));
  auto g = factor_quadratic_mod_prime(*D, Fu->zero_ideal());
  CHECK(g.kind == QuadFactor::Kind::Irreducible);

  // char 2 with non-finite residue: undecided, not a negative claim
  RingPtr F2u = Ring::quotient(2, {"u"}, MonomialOrder::degrevlex(), {});
  RabPtr E = RabRing::make(F2u, F2u->ideal({pe(F2u, "u")}), F2u->zero(),
                           pe(F2u, "u"));
  auto h = factor_quadratic_mod_prime(*E, F2u->zero_ideal());
  CHECK(h.kind == QuadFactor::Kind::Unknown);
}

TEST_CASE("quadratic factorization over finite quotient residue fields") {
  // residue field at (v) is F_4 = F_2[u]/(u^2+u+1)
  auto amb = make_ambient(2, {"u", "v"});
  RingPtr R = Ring::quotient(
      2, {"u", "v"}, MonomialOrder::degrevlex(),
      {parse_poly("u^2 + u + 1", amb), parse_poly("v^2", amb)});
  Ideal pv = R->ideal({pe(R, "v")}).asserting_prime();

  // t^2 + t + 1 splits over F_4 with roots u and u+1
  RabPtr A = RabRing::make(R, pv, R->one(), R->one());
  auto f = factor_quadratic_mod_prime(*A, pv);
  REQUIRE(f.kind == QuadFactor::Kind::Roots);
  auto al = f.roots->alpha;
  CHECK(R->member(al * al + al + R->one(), pv));

  // t^2 + t + u has trace 1 in F_4, hence irreducible
  RabPtr B = RabRing::make(R, pv, R->one(), pe(R, "u"));
  auto g = factor_quadratic_mod_prime(*B, pv);
  CHECK(g.kind == QuadFactor::Kind::Irreducible);
}

TEST_CASE("fibers: the F_3 worked example") {
  RabPtr A = worked_f3();
  const RingPtr& R = A->base();
  Ideal px = R->ideal({pe(R, "x")});
  Ideal py = R->ideal({pe(R, "y")});

  FiberResult fx = fiber_over_prime(*A, px);
  CHECK(fx.reducible);
  CHECK(!fx.merged);
  CHECK(fx.primes().size() == 2);

  FiberResult fy = fiber_over_prime(*A, py);
  CHECK(fy.reducible);
  CHECK(fy.merged);
  CHECK(fy.primes().size() == 1);

  auto mp = minimal_primes_rab(*A);
  REQUIRE(mp.has_value());
  CHECK(mp->size() == 3);
}

TEST_CASE("fiber membership predicates behave like primes") {
  RabPtr A = worked_f3();
  const RingPtr& R = A->base();
  FiberResult fx = fiber_over_prime(*A, R->ideal({pe(R, "x")}));
  const PrimeDescriptor& p1 = *fx.p1;
  const PrimeDescriptor& p2 = *fx.p2;

  // distinct unmerged primes: a witness in exactly one of them
  bool differ = false;
  std::vector<std::string> rs = {"0", "1", "x", "y", "x + y", "2*y", "y^2"};
  std::vector<std::string> is = {"0", "x", "y", "2*x + y", "y^2", "x^2"};
  std::vector<RabElem> sample;
  for (auto& r : rs)
    for (auto& i : is) sample.push_back(A->elem(pe(R, r), pe(R, i)));
  for (auto& e : sample)
    if (p1.contains(e) != p2.contains(e)) differ = true;
  CHECK(differ);

  // the proof's witness -alpha*i + gamma*i*t lies in p1 only
  RingElem i0 = pe(R, "y");
  RabElem w = A->elem(-(fx.p1->roots->alpha * i0), fx.p1->roots->gamma * i0);
  CHECK(p1.contains(w));
  CHECK(!p2.contains(w));

  // closure under + and absorption on samples
  for (size_t k = 0; k + 1 < sample.size(); k += 2) {
    if (p1.contains(sample[k]) && p1.contains(sample[k + 1]))
      CHECK(p1.contains(sample[k] + sample[k + 1]));
    if (p1.contains(sample[k]))
      CHECK(p1.contains(sample[k] * sample[k + 1]));
  }
  // primality spot-check
  for (auto& e1 : sample)
    for (auto& e2 : sample)
      if (!p1.contains(e1) && !p1.contains(e2))
        CHECK(!p1.contains(e1 * e2));

  // lying over: i = 0 slice contracts to the base prime
  for (auto& r : rs) {
    RabElem e = A->from_base(pe(R, r));
    if (p1.contains(e))
      CHECK(R->member(pe(R, r), R->ideal({pe(R, "x")})));
  }
}

TEST_CASE("representative independence of root choice") {
  RabPtr A = worked_f3();
  const RingPtr& R = A->base();
  Ideal px = R->ideal({pe(R, "x")});
  FiberResult f0 = fiber_over_prime(*A, px);

  std::vector<std::string> shifts = {"x", "2*x", "x^2", "x + x^2", "2*x^2"};
  std::vector<RabElem> sample;
  for (auto& r : {"0", "1", "x", "y", "2*y", "x + y", "y^2"})
    for (auto& i : {"0", "x", "y", "x + 2*y", "y^2"})
      sample.push_back(A->elem(pe(R, r), pe(R, i)));

  for (auto& qs : shifts) {
    RootData shifted = *f0.p1->roots;
    RingElem q = pe(R, qs);
    shifted.alpha = shifted.alpha + q;
    shifted.beta = shifted.beta - q;
    shifted.p_corr = A->b() - shifted.alpha * shifted.beta;
    FiberResult f1 = fiber_over_prime(*A, px, shifted);
    CHECK(f1.reducible);
    CHECK(f1.merged == f0.merged);
    for (auto& e : sample) {
      CHECK(f0.p1->contains(e) == f1.p1->contains(e));
      CHECK(f0.p2->contains(e) == f1.p2->contains(e));
    }
  }
}

TEST_CASE("supplied roots are verified; undecidable factorization asks") {
  RingPtr F2u = Ring::quotient(2, {"u"}, MonomialOrder::degrevlex(), {});
  RabPtr E = RabRing::make(F2u, F2u->ideal({pe(F2u, "u")}), F2u->zero(),
                           pe(F2u, "u^2"));
  // char 2, no attached roots, syntactic path undecided over (0)... but here
  // b = u^2 has the obvious square root u
  RootData rd;
  rd.alpha = pe(F2u, "u");
  rd.beta = pe(F2u, "u");
  rd.gamma = F2u->one();
  rd.p_corr = F2u->zero();
  rd.modulus = F2u->zero_ideal();
  FiberResult fr = fiber_over_prime(*E, F2u->zero_ideal(), rd);
  CHECK(fr.reducible);
  CHECK(fr.merged);  // alpha = beta

  RootData bad = rd;
  bad.alpha = F2u->one();
  CHECK_THROWS_AS(fiber_over_prime(*E, F2u->zero_ideal(), bad),
                  FactorizationMismatch);

  RabPtr F = RabRing::make(F2u, F2u->ideal({pe(F2u, "u")}), F2u->zero(),
                           pe(F2u, "u"));
  CHECK_THROWS_AS(fiber_over_prime(*F, F2u->zero_ideal()), NeedRoots);
}

TEST_CASE("localization classes") {
  // case 1: irreducible residual quadratic
  RingPtr Z6 = Ring::zmod(6);
  RabPtr C = RabRing::make(Z6, Z6->ideal({Z6->from_int(2)}), Z6->zero(),
                           Z6->one());
  auto r1 = localization_class(*C, Z6->ideal({Z6->from_int(3)}));
  CHECK(r1.kase == LocalizationReport::Case::IrreducibleIsoRabLocal);

  // case 2a: Z/16, a=4, b=0 over (2): (alpha-beta)I = (8) subset (2)
  RingPtr Z16 = Ring::zmod(16);
  RabPtr A = RabRing::make(Z16, Z16->ideal({Z16->from_int(2)}),
                           Z16->from_int(4), Z16->zero());
  auto r2 = localization_class(*A, Z16->ideal({Z16->from_int(2)}));
  CHECK(r2.kase == LocalizationReport::Case::MergedIsoRabLocal);

  // case 2b: Z/15 over (5) with lambda = 3
  RingPtr Z15 = Ring::zmod(15);
  RabPtr B = RabRing::make(Z15, Z15->ideal({Z15->from_int(3)}), Z15->zero(),
                           Z15->from_int(-1));
  auto r3 = localization_class(*B, Z15->ideal({Z15->from_int(5)}));
  CHECK(r3.kase == LocalizationReport::Case::IsoBaseLocal);
  REQUIRE(r3.lambda.has_value());
  CHECK(r3.lambda->zval() % 3 == 0);
  CHECK(r3.p_corr_ok);
}

TEST_CASE("is_domain") {
  // F_3[u], I=(u), t^2 - u irreducible over F_3(u)
  RingPtr Fu = Ring::quotient(3, {"u"}, MonomialOrder::degrevlex(), {});
  RabPtr D = RabRing::make(Fu, Fu->ideal({pe(Fu, "u")}), Fu->zero(),
                           pe(Fu, "-u"));
  CHECK(is_domain_rab(*D).is_yes());

  // reducible case over a domain: witness zero divisor
  RabPtr D2 = RabRing::make(Fu, Fu->ideal({pe(Fu, "u")}), Fu->zero(),
                            pe(Fu, "-u^2"));
  auto t = is_domain_rab(*D2);
  CHECK(t.is_no());

  // base not a domain
  CHECK(is_domain_rab(*worked_f3()).is_no());
  RingPtr Z16 = Ring::zmod(16);
  RabPtr A = RabRing::make(Z16, Z16->ideal({Z16->from_int(2)}),
                           Z16->from_int(4), Z16->zero());
  CHECK(is_domain_rab(*A).is_no());
}

TEST_CASE("is_reduced: the worked examples") {
  std::optional<RabElem> w;
  auto ay = worked_f2("y");
  TriState ty = is_reduced_rab(*ay, &w);
  CHECK(ty.is_no());
  REQUIRE(w.has_value());
  CHECK(!w->is_zero());
  CHECK((*w * *w).is_zero());

  w.reset();
  TriState tx = is_reduced_rab(*worked_f2("x"), &w);
  CHECK(tx.is_yes());
  CHECK(!w.has_value());

  w.reset();
  TriState t2 = is_reduced_rab(*worked_f3(), &w);
  CHECK(t2.is_no());
  REQUIRE(w.has_value());
  CHECK(!w->is_zero());
  CHECK((*w * *w).is_zero());
}

TEST_CASE("is_reduced: remark path without attached roots") {
  // irreducible residual quadratic over every minimal prime of the base
  RingPtr Z6 = Ring::zmod(6);
  RabPtr C = RabRing::make(Z6, Z6->ideal({Z6->from_int(2)}), Z6->zero(),
                           Z6->one());
  // t^2+1 irreducible mod 3; mod 2 it is (t+1)^2 -> not all irreducible
  CHECK(is_reduced_rab(*C).is_unknown());

  RingPtr Z15 = Ring::zmod(15);
  RabPtr B = RabRing::make(Z15, Z15->ideal({Z15->from_int(3)}), Z15->zero(),
                           Z15->from_int(2));
  // t^2+2 irreducible mod 3 (roots? 0,1,4,...) and mod 5
  auto f3 = factor_quadratic_mod_prime(*B, Z15->ideal({Z15->from_int(3)}));
  auto f5 = factor_quadratic_mod_prime(*B, Z15->ideal({Z15->from_int(5)}));
  if (f3.kind == QuadFactor::Kind::Irreducible &&
      f5.kind == QuadFactor::Kind::Irreducible)
    CHECK(is_reduced_rab(*B).is_yes());
}

TEST_CASE("recognize_special: the worked examples") {
  auto ry = recognize_special(*worked_f2("y"));
  CHECK(ry.idealization.is_yes());
  CHECK(ry.duplication.is_no());
  REQUIRE(ry.idealization_map.has_value());

  auto rx = recognize_special(*worked_f2("x"));
  CHECK(rx.idealization.is_no());
  CHECK(rx.duplication.is_yes());
  REQUIRE(rx.duplication_map.has_value());
  // image ideal is (alpha-beta)I = (x^2)
  const RingPtr& R = rx.duplication_map->target->base();
  CHECK(rx.duplication_map->target->ideal().same_ideal(
      R->ideal({pe(R, "x^2")})));

  auto r2 = recognize_special(*worked_f3());
  CHECK(r2.idealization.is_no());
  CHECK(r2.duplication.is_no());

  CHECK_THROWS_AS(recognize_special(*worked_f2("y", false)), MissingRoots);
}

TEST_CASE("recognition maps are homomorphisms on samples") {
  auto ry = recognize_special(*worked_f2("y"));
  RabPtr A = worked_f2("y");
  const RingPtr& R = A->base();
  const IsoMap& m = *ry.idealization_map;
  std::vector<RabElem> sample;
  for (auto& r : {"0", "1", "x", "y", "x + y^2"})
    for (auto& i : {"0", "y", "y^2", "y + y^2"})
      sample.push_back(A->elem(pe(R, r), pe(R, i)));
  for (auto& e1 : sample)
    for (auto& e2 : sample) {
      CHECK(m.apply(e1 * e2) == m.apply(e1) * m.apply(e2));
      CHECK(m.apply(e1 + e2) == m.apply(e1) + m.apply(e2));
    }

  auto rx = recognize_special(*worked_f2("x"));
  RabPtr B = worked_f2("x");
  const IsoMap& d = *rx.duplication_map;
  std::vector<RabElem> bs;
  for (auto& r : {"0", "1", "y", "x", "y^2 + x"})
    for (auto& i : {"0", "x", "x^2", "x + x^2"})
      bs.push_back(B->elem(pe(R, r), pe(R, i)));
  for (auto& e1 : bs)
    for (auto& e2 : bs) {
      CHECK(d.apply(e1 * e2) == d.apply(e1) * d.apply(e2));
      CHECK(d.apply(e1 + e2) == d.apply(e1) + d.apply(e2));
    }
  // injectivity on samples
  for (auto& e : bs)
    if (d.apply(e).is_zero()) CHECK(e.is_zero());
}

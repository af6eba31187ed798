#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rq/cli.hpp"
#include "rq/reesfam.hpp"

using namespace rq;

namespace {

RingPtr f2_xy() {
  auto amb = make_ambient(2, {"x", "y"});
  return Ring::quotient(2, {"x", "y"}, MonomialOrder::degrevlex(),
                        {parse_poly("x*y", amb)});
}

RingElem pe(const RingPtr& R, const std::string& s) {
  return R->from_poly(parse_poly(s, R->ambient()));
}

}  // namespace

TEST_CASE("construction guards") {
  RingPtr Z16 = Ring::zmod(16);
  CHECK_THROWS_AS(
      RabRing::make(Z16, Z16->zero_ideal(), Z16->zero(), Z16->zero()),
      BadIdeal);
  CHECK_THROWS_AS(RabRing::make(Z16, Z16->ideal({Z16->from_int(3)}),
                                Z16->zero(), Z16->zero()),
                  BadIdeal);  // 3 is a unit mod 16

  RabPtr A = RabRing::make(Z16, Z16->ideal({Z16->from_int(2)}),
                           Z16->from_int(4), Z16->zero());
  CHECK_THROWS_AS(A->elem(Z16->one(), Z16->from_int(3)), BadIdeal);
  CHECK_NOTHROW(A->elem(Z16->one(), Z16->from_int(6)));
}

TEST_CASE("multiplication law") {
  RingPtr Z16 = Ring::zmod(16);
  RabPtr A = RabRing::make(Z16, Z16->ideal({Z16->from_int(2)}),
                           Z16->from_int(4), Z16->from_int(3));
  // (r+it)(s+jt) = rs - bij + (rj + si - aij)t
  auto x = A->elem(Z16->from_int(5), Z16->from_int(2));
  auto y = A->elem(Z16->from_int(7), Z16->from_int(6));
  auto z = x * y;
  CHECK(z.r().zval() == ((5 * 7 - 3 * 2 * 6) % 16 + 16) % 16);
  CHECK(z.i().zval() == ((5 * 6 + 7 * 2 - 4 * 2 * 6) % 16 + 16) % 16);

  CHECK(x * A->one() == x);
  CHECK((x * A->zero()).is_zero());
  CHECK(x + (-x) == A->zero());
  CHECK(x * y == y * x);
  CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("idealization and duplication members of the family") {
  RingPtr Z16 = Ring::zmod(16);
  Ideal I = Z16->ideal({Z16->from_int(2)});
  RabPtr ide = RabRing::idealization(Z16, I);
  CHECK(ide->a().is_zero());
  CHECK(ide->b().is_zero());
  // idealization: t-parts multiply to zero in the r-component
  auto u = ide->elem(Z16->zero(), Z16->from_int(2));
  CHECK((u * u).is_zero());

  RabPtr dup = RabRing::duplication(Z16, I);
  CHECK(dup->a().is_zero());
  CHECK(dup->b() == -Z16->one());
  auto v = dup->elem(Z16->zero(), Z16->from_int(2));
  CHECK((v * v).r().zval() == 4);  // -b * i * j = +4
}

TEST_CASE("factorization verification") {
  RingPtr R = f2_xy();
  Ideal I = R->ideal({pe(R, "y")});
  RabPtr A = RabRing::make(R, I, pe(R, "x"), pe(R, "y^2"));

  RootData good;
  good.alpha = pe(R, "y + x");
  good.beta = pe(R, "y");
  good.gamma = R->one();
  good.p_corr = R->zero();
  std::string why;
  CHECK(RabRing::verify_factorization(*A, good, &why));
  CHECK(!A->has_global_roots());
  A->verify_and_attach(good);
  CHECK(A->has_global_roots());

  RootData bad = good;
  bad.alpha = pe(R, "y");
  CHECK(!RabRing::verify_factorization(*A, bad, &why));
  CHECK(why == "gamma*a != -(alpha+beta)");
  CHECK_THROWS_AS(A->verify_and_attach(bad), FactorizationMismatch);

  RootData offzero = good;
  offzero.p_corr = pe(R, "x");
  CHECK(!RabRing::verify_factorization(*A, offzero, &why));

  // relative factorization: correction must land in the prime, gamma outside
  RingPtr Z15 = Ring::zmod(15);
  RabPtr B = RabRing::make(Z15, Z15->ideal({Z15->from_int(3)}), Z15->zero(),
                           Z15->from_int(-1));
  RootData rel;
  rel.alpha = Z15->from_int(2);
  rel.beta = Z15->from_int(13);
  rel.gamma = Z15->one();
  rel.p_corr = Z15->from_int(3);  // 2*13 = 26 = -1 + 27? b=14: 1*14 = 26+3=29=14
  rel.modulus = Z15->ideal({Z15->from_int(3)}).asserting_prime();
  CHECK(RabRing::verify_factorization(*B, rel, &why));
  RootData rel_bad;
  rel_bad.alpha = Z15->zero();
  rel_bad.beta = Z15->zero();
  rel_bad.gamma = Z15->from_int(3);  // 9*14 = 6 = 0*0 + 6, but 3 is in (3)
  rel_bad.p_corr = Z15->from_int(6);
  rel_bad.modulus = rel.modulus;
  CHECK(!RabRing::verify_factorization(*B, rel_bad, &why));
  CHECK(why == "gamma lies in the prime");
}

TEST_CASE("retraction ev_alpha") {
  RingPtr R = f2_xy();
  Ideal I = R->ideal({pe(R, "y")});
  RabPtr A = RabRing::make(R, I, pe(R, "x"), pe(R, "y^2"));
  CHECK_THROWS_AS(A->ev_alpha(A->one()), MissingRoots);

  RootData rd;
  rd.alpha = pe(R, "y + x");
  rd.beta = pe(R, "y");
  rd.gamma = R->one();
  rd.p_corr = R->zero();
  A->verify_and_attach(rd);

  auto e1 = A->elem(pe(R, "x"), pe(R, "y"));
  auto e2 = A->elem(pe(R, "y"), pe(R, "y^2"));
  CHECK(A->ev_alpha(e1 * e2) == A->ev_alpha(e1) * A->ev_alpha(e2));
  CHECK(A->ev_alpha(e1 + e2) == A->ev_alpha(e1) + A->ev_alpha(e2));
  CHECK(A->ev_alpha(A->one()) == R->one());
}

TEST_CASE("random ring axioms on a symbolic instance") {
  RingPtr R = f2_xy();
  Ideal I = R->ideal({pe(R, "x"), pe(R, "y")});
  RabPtr A = RabRing::make(R, I, pe(R, "x + y"), pe(R, "x^2"));

  auto sample = [&](unsigned long long s) {
    // small deterministic element soup
    static const char* rs[] = {"0", "1", "x", "y", "x + y", "x^2 + 1"};
    static const char* is[] = {"0", "x", "y", "x + y", "x^2", "y^2 + x"};
    return A->elem(pe(R, rs[s % 6]), pe(R, is[(s / 6) % 6]));
  };
  unsigned long long st = 12345;
  for (int k = 0; k < 1000; ++k) {
    st = st * 6364136223846793005ull + 1442695040888963407ull;
    auto a = sample(st >> 10), b = sample(st >> 20), c = sample(st >> 30);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("printing") {
  RingPtr Z16 = Ring::zmod(16);
  RabPtr A = RabRing::make(Z16, Z16->ideal({Z16->from_int(2)}),
                           Z16->from_int(4), Z16->zero());
  CHECK(A->str() == "Z/16((2))_{4,0}");
  CHECK(A->elem(Z16->from_int(3), Z16->from_int(2)).str() == "3 + (2)t");
}

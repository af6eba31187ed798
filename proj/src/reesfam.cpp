#include "rq/reesfam.hpp"

#include <sstream>

namespace rq {

std::string RootData::str() const {
  std::ostringstream os;
  os << "alpha=" << alpha.str() << ", beta=" << beta.str()
     << ", gamma=" << gamma.str();
  if (!p_corr.is_zero()) os << ", p=" << p_corr.str();
  if (modulus) os << " mod " << modulus->str();
  return os.str();
}

RabElem::RabElem(RabPtr owner, RingElem r, RingElem i)
    : owner_(std::move(owner)), r_(std::move(r)), i_(std::move(i)) {
  owner_->base()->check_same(r_.owner());
  owner_->base()->check_same(i_.owner());
  if (owner_->checks_membership() &&
      !owner_->base()->member(i_, owner_->ideal()))
    throw BadIdeal("t-component " + i_.str() + " is not in I");
}

namespace {
void check_owner(const RabElem& a, const RabElem& b) {
  if (!a.owner()->same(*b.owner()))
    throw AmbientError("elements of different R(I)_{a,b} rings");
}
}  // namespace

RabElem RabElem::operator+(const RabElem& o) const {
  check_owner(*this, o);
  return {owner_, r_ + o.r_, i_ + o.i_};
}

RabElem RabElem::operator-(const RabElem& o) const { return *this + (-o); }

RabElem RabElem::operator-() const { return {owner_, -r_, -i_}; }

RabElem RabElem::operator*(const RabElem& o) const {
  check_owner(*this, o);
  // (r+it)(s+jt) = rs - ijb + (rj + si - aij)t
  const RingElem& s = o.r_;
  const RingElem& j = o.i_;
  RingElem ij = i_ * j;
  return {owner_, r_ * s - owner_->b() * ij,
          r_ * j + s * i_ - owner_->a() * ij};
}

RabElem RabElem::pow(unsigned e) const {
  RabElem acc = owner_->one();
  RabElem b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

bool RabElem::operator==(const RabElem& o) const {
  return owner_->same(*o.owner_) && r_ == o.r_ && i_ == o.i_;
}

std::string RabElem::str() const {
  return r_.str() + " + (" + i_.str() + ")t";
}

RabPtr RabRing::make(RingPtr base, Ideal i, RingElem a, RingElem b,
                     bool check_membership) {
  base->check_same(a.owner());
  base->check_same(b.owner());
  if (!base->same(*i.owner)) throw AmbientError("ideal of a different ring");
  if (i.is_zero_ideal()) throw BadIdeal("I must be nonzero");
  if (!i.proper()) throw BadIdeal("I must be proper");
  auto rr = std::shared_ptr<RabRing>(new RabRing());
  rr->base_ = std::move(base);
  rr->ideal_ = std::move(i);
  rr->a_ = std::move(a);
  rr->b_ = std::move(b);
  rr->check_membership_ = check_membership;
  return rr;
}

RabPtr RabRing::idealization(RingPtr base, Ideal i) {
  RingElem z = base->zero();
  return make(std::move(base), std::move(i), z, z);
}

RabPtr RabRing::duplication(RingPtr base, Ideal i) {
  RingElem z = base->zero();
  RingElem m1 = -base->one();
  return make(std::move(base), std::move(i), z, m1);
}

RabElem RabRing::elem(RingElem r, RingElem i) const {
  return {shared_from_this(), std::move(r), std::move(i)};
}

RabElem RabRing::from_base(const RingElem& r) const {
  return elem(r, base_->zero());
}

RabElem RabRing::zero() const { return from_base(base_->zero()); }
RabElem RabRing::one() const { return from_base(base_->one()); }

bool RabRing::verify_factorization(const RabRing& rr, const RootData& roots,
                                   std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const RingElem& al = roots.alpha;
  const RingElem& be = roots.beta;
  const RingElem& ga = roots.gamma;
  if (ga * rr.a_ != -(al + be))
    return fail("gamma*a != -(alpha+beta)");
  if (ga * ga * rr.b_ != al * be + roots.p_corr)
    return fail("gamma^2*b != alpha*beta + p");
  if (!roots.modulus) {
    if (!roots.p_corr.is_zero())
      return fail("correction must be zero for a factorization in R[t]");
    if (!(ga == rr.base_->one()))
      return fail("gamma must be 1 for a factorization in R[t]");
  } else {
    if (!rr.base_->member(roots.p_corr, *roots.modulus))
      return fail("correction p is not in the prime");
    if (rr.base_->member(ga, *roots.modulus))
      return fail("gamma lies in the prime");
  }
  return true;
}

void RabRing::verify_and_attach(const RootData& roots) const {
  std::string why;
  if (!verify_factorization(*this, roots, &why))
    throw FactorizationMismatch(why);
  roots_ = roots;
}

RingElem RabRing::ev_alpha(const RabElem& x) const {
  if (!has_global_roots())
    throw MissingRoots("ev_alpha needs roots attached in R[t]");
  return x.r() + x.i() * roots_->alpha;
}

bool RabRing::same(const RabRing& o) const {
  return base_->same(*o.base_) && ideal_.same_ideal(o.ideal_) &&
         a_ == o.a_ && b_ == o.b_;
}

std::string RabRing::str() const {
  return base_->str() + "(" + ideal_.str() + ")_{" + a_.str() + "," +
         b_.str() + "}";
}

}  // namespace rq

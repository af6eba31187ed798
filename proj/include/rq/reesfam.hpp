#pragma once

#include <memory>
#include <optional>

#include "rq/ringcore.hpp"

namespace rq {

/// A factorization witness for t^2+at+b, either exact in R[t] (modulus
/// absent, correction zero) or relative to a prime p of R.
struct RootData {
  RingElem alpha, beta, gamma, p_corr;
  std::optional<Ideal> modulus;

  std::string str() const;
};

class RabRing;
using RabPtr = std::shared_ptr<const RabRing>;

/// Element r + it of R(I)_{a,b}, stored through the module decomposition
/// R + It; the i component lies in I.
class RabElem {
 public:
  RabElem() = default;
  RabElem(RabPtr owner, RingElem r, RingElem i);

  const RabPtr& owner() const { return owner_; }
  const RingElem& r() const { return r_; }
  const RingElem& i() const { return i_; }
  bool is_zero() const { return r_.is_zero() && i_.is_zero(); }

  RabElem operator+(const RabElem& o) const;
  RabElem operator-(const RabElem& o) const;
  RabElem operator*(const RabElem& o) const;
  RabElem operator-() const;
  RabElem pow(unsigned e) const;
  bool operator==(const RabElem& o) const;
  bool operator!=(const RabElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RabPtr owner_;
  RingElem r_, i_;
};

/// The ring R(I)_{a,b} = R[It] / (I^2 (t^2 + a t + b)).
class RabRing : public std::enable_shared_from_this<RabRing> {
 public:
  static RabPtr make(RingPtr base, Ideal i, RingElem a, RingElem b,
                     bool check_membership = true);
  static RabPtr idealization(RingPtr base, Ideal i);  // R(I)_{0,0}
  static RabPtr duplication(RingPtr base, Ideal i);   // R(I)_{0,-1}

  const RingPtr& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  const RingElem& a() const { return a_; }
  const RingElem& b() const { return b_; }
  bool checks_membership() const { return check_membership_; }
  const std::optional<RootData>& roots() const { return roots_; }
  /// Roots attached with modulus absent, i.e. a factorization in R[t].
  bool has_global_roots() const {
    return roots_ && !roots_->modulus;
  }

  RabElem elem(RingElem r, RingElem i) const;
  RabElem from_base(const RingElem& r) const;
  RabElem zero() const;
  RabElem one() const;

  /// Checks the RootData identities exactly and attaches on success.
  /// Throws FactorizationMismatch naming the failed identity.
  void verify_and_attach(const RootData& roots) const;
  static bool verify_factorization(const RabRing& rr, const RootData& roots,
                                   std::string* why = nullptr);

  /// Retraction R(I)_{a,b} -> R, s + jt |-> s + j*alpha; needs R[t] roots.
  RingElem ev_alpha(const RabElem& x) const;

  bool same(const RabRing& o) const;
  std::string str() const;

 private:
  RabRing() = default;
  RingPtr base_;
  Ideal ideal_;
  RingElem a_, b_;
  bool check_membership_ = true;
  mutable std::optional<RootData> roots_;  // one-time build-phase attachment
};

}  // namespace rq

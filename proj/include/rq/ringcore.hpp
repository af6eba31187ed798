#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rq/polyalg.hpp"

namespace rq {

struct TriState {
  enum class V { yes, no, unknown };
  V v = V::unknown;
  std::string witness;
  std::string provenance;  // "computed" | "asserted" | ""

  static TriState yes(std::string w = "", std::string prov = "computed") {
    return {V::yes, std::move(w), std::move(prov)};
  }
  static TriState no(std::string w = "", std::string prov = "computed") {
    return {V::no, std::move(w), std::move(prov)};
  }
  static TriState unknown(std::string w = "") {
    return {V::unknown, std::move(w), ""};
  }
  bool is_yes() const { return v == V::yes; }
  bool is_no() const { return v == V::no; }
  bool is_unknown() const { return v == V::unknown; }
  std::string str() const {
    return v == V::yes ? "yes" : v == V::no ? "no" : "unknown";
  }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Canonical residue representative: normal form mod J, or least
/// nonnegative residue mod n. Equality is representational equality.
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingPtr owner, Poly p) : owner_(std::move(owner)), poly_(std::move(p)) {}
  RingElem(RingPtr owner, long long z) : owner_(std::move(owner)), z_(z) {}

  const RingPtr& owner() const { return owner_; }
  const Poly& poly() const { return poly_; }
  long long zval() const { return z_; }
  bool is_zero() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem pow(unsigned e) const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingPtr owner_;
  Poly poly_;
  long long z_ = 0;
};

/// Finitely generated ideal, stored by canonical generators (reduced GB of
/// the lift, mapped down; single divisor of n for ZMod).
class Ideal {
 public:
  RingPtr owner;
  std::vector<RingElem> gens;    // canonical, nonzero
  std::vector<Poly> lifted_gb;   // PolyQuotient: reduced GB of J + lifts
  long long zgen = 0;            // ZMod: canonical generator; n for (0)
  bool asserted_prime = false;

  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  bool proper() const { return !is_unit_ideal(); }
  Ideal asserting_prime() const {
    Ideal c = *this;
    c.asserted_prime = true;
    return c;
  }
  bool same_ideal(const Ideal& o) const;
  std::string str() const;
};

/// A base ring R: polynomial quotient over QQ or F_p, or Z/n.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Backend { PolyQuotient, ZMod };

  static RingPtr quotient(long long p, std::vector<std::string> vars,
                          MonomialOrder ord, const std::vector<Poly>& jgens);
  static RingPtr zmod(long long n);

  Backend backend() const { return backend_; }
  const AmbientPtr& ambient() const { return amb_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Poly>& defining_gb() const { return jgb_; }
  long long modulus() const { return n_; }
  const std::vector<std::pair<long long, int>>& modulus_factors() const {
    return nfact_;
  }

  bool same(const Ring& o) const;
  void check_same(const RingPtr& o) const;

  // ---- elements ----
  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long long v) const;
  RingElem from_poly(const Poly& f) const;  // reduces mod J
  RingElem element_var(const std::string& name) const;

  // ---- ideal calculus ----
  Ideal ideal(const std::vector<RingElem>& gens) const;
  Ideal zero_ideal() const;
  Ideal sum(const Ideal& a, const Ideal& b) const;
  Ideal product(const Ideal& a, const Ideal& b) const;
  Ideal intersect(const Ideal& a, const Ideal& b) const;
  Ideal colon(const Ideal& a, const RingElem& f) const;
  Ideal colon(const Ideal& a, const Ideal& b) const;
  Ideal annihilator(const RingElem& x) const;
  Ideal annihilator(const Ideal& i) const;
  bool member(const RingElem& x, const Ideal& i) const;
  bool contains(const Ideal& a, const Ideal& b) const;  // b subset of a
  TriState radical_membership(const RingElem& f, const Ideal& j) const;

  // ---- structure ----
  TriState reduced_flag() const { return reduced_; }
  TriState domain_flag() const { return domain_; }
  TriState is_prime(const Ideal& p) const;
  std::optional<std::vector<Ideal>> minimal_primes() const;

  RingPtr with_asserted_flags(std::optional<bool> reduced,
                              std::optional<bool> domain) const;
  RingPtr with_asserted_min_primes(std::vector<Ideal> primes) const;

  // ---- finiteness ----
  /// Standard monomials under the defining GB, when the staircase is finite.
  std::optional<std::vector<Monomial>> staircase() const;
  /// A nonzero x with x^2 = 0, when the reduced flag is a computed "no".
  std::optional<RingElem> nilpotent_witness() const;
  std::optional<unsigned long long> cardinality() const;

  std::string str() const;

  /// Canonical residue characteristic of the residue field R/p when p has
  /// finite prime-field-like residue; used by spectool.
  Poly reduce(const Poly& f) const;  // normal form mod J (PolyQuotient)

  Ideal ideal_from_lifted(std::vector<Poly> polys) const;

 private:
  Ring() = default;
  Backend backend_ = Backend::ZMod;
  AmbientPtr amb_;
  MonomialOrder ord_ = MonomialOrder::degrevlex();
  std::vector<Poly> jgb_;
  long long n_ = 0;
  std::vector<std::pair<long long, int>> nfact_;
  TriState reduced_ = TriState::unknown();
  TriState domain_ = TriState::unknown();
  std::optional<std::vector<Ideal>> asserted_min_primes_;

  std::vector<Poly> lift_ideal(const Ideal& i) const;
  void compute_flags();
};

}  // namespace rq

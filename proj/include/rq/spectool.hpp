#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rq/reesfam.hpp"

namespace rq {

/// A prime of R(I)_{a,b} over a prime p of R, carried intensionally as a
/// membership predicate plus the witness data defining it.
struct PrimeDescriptor {
  enum class Kind { IrreducibleFiber, Root1, Root2 };
  Kind kind = Kind::IrreducibleFiber;
  RabPtr ring;
  Ideal base_prime;
  std::optional<RootData> roots;  // present for Root1/Root2

  bool contains(const RabElem& x) const;
  std::string str() const;
};

struct FiberResult {
  bool reducible = false;
  std::optional<PrimeDescriptor> q;        // irreducible case
  std::optional<PrimeDescriptor> p1, p2;   // reducible case
  bool merged = false;
  std::string merged_witness;

  /// The distinct primes over p (one when irreducible or merged).
  std::vector<PrimeDescriptor> primes() const;
};

struct QuadFactor {
  enum class Kind { Irreducible, Roots, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<RootData> roots;
  std::string note;
};

struct LocalizationReport {
  enum class Case {
    IrreducibleIsoRabLocal,  // (R(I)_{a,b})_q ~ R_p(I_p)_{a,b}
    MergedIsoRabLocal,       // merged pair, same local form
    IsoBaseLocal,            // (R(I)_{a,b})_{p_i} ~ R_p
    OpenQuestion
  };
  Case kase = Case::OpenQuestion;
  std::optional<RingElem> lambda;
  bool p_corr_ok = false;
  std::string notes;
  std::string case_name() const;
};

struct SearchBounds {
  int max_shift_candidates = 256;
  int max_lambda_candidates = 256;
};

struct IsoMap {
  RabPtr target;
  std::function<RabElem(const RabElem&)> apply;
  std::string desc;
};

struct SpecialReport {
  TriState idealization = TriState::unknown();
  TriState duplication = TriState::unknown();
  std::optional<IsoMap> idealization_map;
  std::optional<IsoMap> duplication_map;
};

/// Decide reducibility of t^2+at+b over Q(R/p) where the backend allows;
/// Unknown is never a negative claim outside the decided classes.
QuadFactor factor_quadratic_mod_prime(const RabRing& rr, const Ideal& p);

/// The primes of R(I)_{a,b} lying over p. Supplied roots are verified;
/// otherwise attached R[t] roots or the quadratic factorization are used.
FiberResult fiber_over_prime(const RabRing& rr, const Ideal& p,
                             std::optional<RootData> roots = {});

std::optional<std::vector<PrimeDescriptor>> minimal_primes_rab(
    const RabRing& rr);

LocalizationReport localization_class(const RabRing& rr, const Ideal& p,
                                      std::optional<RootData> roots = {},
                                      const SearchBounds& bounds = {});

TriState is_domain_rab(const RabRing& rr);

/// Witness (when no) is a nonzero square-zero element.
TriState is_reduced_rab(const RabRing& rr,
                        std::optional<RabElem>* witness = nullptr);

SpecialReport recognize_special(const RabRing& rr);

}  // namespace rq

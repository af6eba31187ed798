#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rq/spectool.hpp"

namespace rq {

/// Exhaustive table model of R(I)_{a,b} over a Z/n base. Elements are the
/// pairs (r, i) with i a multiple of the ideal generator; operations use the
/// defining multiplication law directly on residues.
class FiniteModel {
 public:
  static FiniteModel build(RabPtr rr, unsigned long long cap = 200000);

  const RabPtr& ring() const { return ring_; }
  size_t size() const { return el_.size(); }
  long long r_of(int a) const { return el_[a].first; }
  long long i_of(int a) const { return el_[a].second; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  int index(long long r, long long i) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int pow(int a, unsigned long long e) const;
  RabElem elem(int a) const;
  std::string str(int a) const;

 private:
  RabPtr ring_;
  long long n_ = 0, av_ = 0, bv_ = 0;
  std::vector<std::pair<long long, long long>> el_;
  std::vector<int> lookup_;  // dense (r, i/d) grid
  long long d_ = 0;
  int zero_ = 0, one_ = 0;
};

/// All elements of a finite base ring: Z/n, or a polynomial quotient over
/// F_p with a finite staircase.
std::vector<RingElem> enumerate_base_elements(const RingPtr& R,
                                              unsigned long long cap = 10000);

/// All elements of an ideal in a finite base ring, by closure of the
/// generators under addition and ring multiplication.
std::vector<RingElem> enumerate_ideal_elements(const Ideal& I,
                                               unsigned long long cap = 10000);

/// Indices of all nilpotent elements (always contains zero).
std::vector<int> nilradical_bf(const FiniteModel& M);

/// Exhaustive commutativity, associativity and distributivity check;
/// returns the first failing triple, or nullopt when clean.
std::optional<std::string> check_ring_axioms(const FiniteModel& M);

/// The retraction s + jt -> s + j*alpha respects + and * on all pairs;
/// needs roots attached in R[t]. Returns the first failing pair.
std::optional<std::string> check_ev_alpha(const FiniteModel& M);

/// A prime of the model, as a membership table plus the idempotent that
/// cuts out its local factor.
struct BfPrime {
  std::vector<char> member;     // size |M|
  int idempotent = 0;           // honest idempotent of M
  size_t count() const;
};

/// All primes of the finite (hence Artinian) model, via the primitive
/// idempotents of M modulo its nilradical. Each candidate is re-checked to
/// have a domain quotient before being returned.
std::vector<BfPrime> primes_bf(const FiniteModel& M);

/// Elements of the local factor M * e of a prime.
std::vector<int> local_factor_bf(const FiniteModel& M, const BfPrime& p);

/// Full quadratic-time primality check, for tests.
bool is_prime_bf(const FiniteModel& M, const std::vector<char>& member);

/// Abstract finite commutative ring given by operation tables.
struct SmallRing {
  int n = 0;
  std::vector<int> add, mul;  // n*n, row-major
  int zero = 0, one = 0;
};

SmallRing zmod_model(long long m);
SmallRing subring_model(const FiniteModel& M, const std::vector<int>& elems,
                        int unit);

/// Unital ring isomorphism search by generator backtracking; both rings
/// must have at most `cap` elements.
bool rings_isomorphic(const SmallRing& A, const SmallRing& B, int cap = 64);

struct CrosscheckReport {
  bool ok = true;
  std::string detail;            // first failure, or a summary
  size_t model_size = 0;
  size_t primes_bf_count = 0;
  size_t primes_sym_count = 0;
  bool reduced_bf = false;
  std::string reduced_sym;       // yes/no/unknown
  int open_questions = 0;        // localization cases left undecided
};

/// Compare the symbolic answers (reducedness, domain, primes, localization
/// cardinalities, recognition maps) against the brute-force model; throws
/// OracleMismatch naming the first disagreement. Attaches a global root of
/// t^2+at+b found by scanning Z/n, when one exists.
CrosscheckReport crosscheck(const RabPtr& rr, unsigned long long cap = 200000);

struct SweepItem {
  long long n = 0, d = 0, a = 0, b = 0;
};

struct SweepSpec {
  long long n_lo = 4, n_hi = 36;
  long long full_upto = 12;   // exhaustive (a,b) for n up to this
  int random_pairs = 200;     // sampled (a,b) pairs per (n,d) beyond it
  unsigned seed = 1;
  bool parallel = true;
  unsigned long long cap = 200000;
};

struct SweepOutcome {
  SweepItem item;
  bool ok = false;
  std::string detail;
  int open_questions = 0;
};

std::vector<SweepItem> enumerate_sweep_items(const SweepSpec& spec);

/// Run crosscheck over every item; OpenMP-parallel when spec.parallel, and
/// the serial path is the reference the tests compare against.
std::vector<SweepOutcome> sweep_crosscheck(
    const SweepSpec& spec,
    const std::function<void(const SweepOutcome&)>& on_result = {});

struct LocqFinding {
  SweepItem item;
  std::string prime;        // base prime the question arose over
  bool resolved = false;    // brute force reached a verdict
  bool iso_base_local = false;
  size_t local_size = 0, base_local_size = 0;
  std::string notes;
};

/// Hunt for instances where the symbolic localization class is undecided,
/// then answer each by exhaustive isomorphism search on the finite model.
std::vector<LocqFinding> search_localization_question(const SweepSpec& spec);

}  // namespace rq

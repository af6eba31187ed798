#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rq/coeff.hpp"
#include "rq/errors.hpp"

namespace rq {

/// Exponent vector; length equals the ambient variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, assumes b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  enum class Kind { lex, degrevlex, block };
  Kind kind = Kind::degrevlex;
  // block: true entries form the eliminated front block; degrevlex on the
  // block, then degrevlex on the rest.
  std::vector<char> elim;

  static MonomialOrder lex() { return {Kind::lex, {}}; }
  static MonomialOrder degrevlex() { return {Kind::degrevlex, {}}; }
  static MonomialOrder block(std::vector<char> mask) {
    return {Kind::block, std::move(mask)};
  }

  /// -1, 0, +1 as u <, =, > v.
  int compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) < 0;
  }
  std::string str() const;
};

/// Coefficient field plus named variables. Polynomials agree on ambient by
/// content, so independently built ambients interoperate.
struct Ambient {
  long long p = 0;  // 0 = QQ, else F_p
  std::vector<std::string> vars;

  bool operator==(const Ambient& o) const { return p == o.p && vars == o.vars; }
  int var_index(const std::string& name) const;  // -1 if absent
  Coeff czero() const { return p ? Coeff::mod(p, 0) : Coeff::rational(0); }
  Coeff cone() const { return p ? Coeff::mod(p, 1) : Coeff::rational(1); }
  Coeff cint(long long v) const {
    return p ? Coeff::mod(p, v) : Coeff::rational(v);
  }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(long long p, std::vector<std::string> vars);

struct Term {
  Monomial m;
  Coeff c;
};

/// Sparse multivariate polynomial; terms sorted descending under degrevlex,
/// no zero coefficients stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(AmbientPtr amb) : amb_(std::move(amb)) {}

  static Poly zero(AmbientPtr amb) { return Poly(std::move(amb)); }
  static Poly constant(AmbientPtr amb, Coeff c);
  static Poly one(AmbientPtr amb) {
    auto c = amb->cone();
    return constant(std::move(amb), c);
  }
  static Poly var(AmbientPtr amb, int idx, int exp = 1);
  static Poly term(AmbientPtr amb, Monomial m, Coeff c);

  const AmbientPtr& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_[0].m) == 0);
  }
  int degree() const;  // total degree; -1 for zero

  const Term& leading(const MonomialOrder& ord) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Coeff& c) const;
  Poly mul_term(const Monomial& m, const Coeff& c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly monic(const MonomialOrder& ord) const;

  /// Append a fresh zero-exponent slot for each variable of `ext` beyond
  /// this ambient; `ext` must extend the ambient by trailing variables.
  Poly lift_to(const AmbientPtr& ext) const;
  /// Inverse of lift_to; throws if any dropped variable occurs.
  Poly restrict_to(const AmbientPtr& amb) const;

  std::string str() const;

  /// Normalizing constructor used by the arithmetic kernels.
  static Poly from_terms(AmbientPtr amb, std::vector<Term> terms);

 private:
  AmbientPtr amb_;
  std::vector<Term> terms_;
};

void check_same_ambient(const Poly& a, const Poly& b);

struct DivisionResult {
  std::vector<Poly> quotients;  // one per divisor
  Poly remainder;
};

/// Multivariate division with full tail reduction; ties broken by the first
/// divisor (in the given order) whose leading term divides.
DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors,
                      const MonomialOrder& ord);

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord);

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord);

/// Unique reduced Groebner basis (Buchberger, normal pair selection,
/// coprime-lcm and chain criteria, then inter-reduction).
std::vector<Poly> reduced_groebner(std::vector<Poly> gens,
                                   const MonomialOrder& ord);

/// Generators of (gens) intersected with the subring on the variables
/// outside `drop` (block-order elimination).
std::vector<Poly> eliminate(const std::vector<Poly>& gens,
                            const std::vector<char>& drop,
                            const MonomialOrder& inner_hint);

bool in_ideal(const Poly& f, const std::vector<Poly>& gb,
              const MonomialOrder& ord);

/// Ideal intersection in the polynomial ring, via a tag variable.
std::vector<Poly> ideal_intersect(const std::vector<Poly>& A,
                                  const std::vector<Poly>& B,
                                  const MonomialOrder& ord);

/// (A : f), via (A cap (f)) / f.
std::vector<Poly> ideal_colon(const std::vector<Poly>& A, const Poly& f,
                              const MonomialOrder& ord);

/// Exact division, if f = q * g for a polynomial q.
std::optional<Poly> try_divide(const Poly& f, const Poly& g,
                               const MonomialOrder& ord);

/// f in radical(J)? Rabinowitsch trick with a fresh tag variable.
bool radical_member(const Poly& f, const std::vector<Poly>& J,
                    const MonomialOrder& ord);

/// Exact polynomial square root (characteristic != 2), if one exists.
std::optional<Poly> poly_sqrt(const Poly& f);

/// Standard monomials below the basis staircase, when finite (every
/// variable has a pure power among the leading terms).
std::optional<std::vector<Monomial>> finite_staircase(
    const std::vector<Poly>& gb, const MonomialOrder& ord, size_t nvars,
    unsigned long long cap = 2'000'000ULL);

}  // namespace rq

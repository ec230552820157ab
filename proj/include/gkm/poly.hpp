#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/exact.hpp"

// Graded multivariate polynomials over Q in k variables e1..ek, the model of
// H*(BT^k); cohomological degree 2d is represented by polynomial degree d.
// Integral polynomials are the ones with integer coefficients; operations
// that are contracts over Z check that predicate at the boundary.

namespace gkm {

using Exponents = std::vector<unsigned>;

int total_degree(const Exponents& e);

// Graded lexicographic, descending; fixes the canonical term order used for
// printing and for monomial coordinate systems.
struct GrlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// All exponent vectors in nvars variables of the given total degree, in
// GrlexDesc order.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat, GrlexDesc>& terms() const { return terms_; }
  Rat coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  // Homogeneous degree; nullopt for 0 and for inhomogeneous polynomials.
  std::optional<int> grade() const;
  bool is_integral() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const = default;

  // Canonical rendering, e.g. "3*e1^2*e2 - 1/2*e3"; "0" for zero.
  std::string to_string() const;

  // Substitutes values[i] for variable i; exact evaluation over Q.
  Rat eval(const std::vector<Rat>& values) const;

 private:
  int nvars_;
  std::map<Exponents, Rat, GrlexDesc> terms_;  // no zero coefficients stored
};

// Degree-one form in k variables; axial values live here.
struct LinearForm {
  std::vector<Rat> coeffs;

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool is_integral() const;
  Poly to_poly() const;
  bool operator==(const LinearForm& o) const = default;

  // lcm of coefficient denominators: the least positive integer r with
  // r * this integral.
  Int denominator_lcm() const;
  // this scaled by denominator_lcm(), as an integer vector.
  std::vector<Int> scaled_integral() const;
};

// True when a = c*b for a nonzero rational c (both nonzero).
bool parallel(const LinearForm& a, const LinearForm& b);

// Exact division of f by the nonzero linear form ell over Q; nullopt when
// ell does not divide f.
std::optional<Poly> divide_linear_rational(const LinearForm& ell, const Poly& f);

// Membership of f in the principal ideal (ell) of Z[e1..ek]: both inputs must
// be integral and ell nonzero; returns the integral quotient q with f = ell*q,
// or nullopt. Splits ell = g * ell0 with ell0 primitive, divides by ell0 over
// Q (integral by Gauss's lemma), then requires g to divide every quotient
// coefficient.
std::optional<Poly> divides_linear(const LinearForm& ell, const Poly& f);

// Row alpha = coefficients of (a*r+b*s)^(n-alpha) (c*r+d*s)^alpha in the
// ordered basis {r^n, r^(n-1)s, ..., s^n}; the matrix of the symmetric-power
// homomorphism GL2 -> GL_{n+1} on degree-n binary forms.
RatMatrix sym_power_matrix(int n, const RatMatrix& a);

}  // namespace gkm

#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "rho_forge/gaussian_rational.hpp"

namespace rho_forge {

/// Laurent polynomial in one variable z with exact Gaussian-rational coefficients,
/// i.e. an element of Q(i)[z, z^-1]. Zero coefficients are never stored, so two
/// polynomials are equal iff their coefficient maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(long c);                   // NOLINT(google-explicit-constructor)
  LaurentPoly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const int, GaussianRational>> terms);
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(int exponent, GaussianRational c = 1);
  static LaurentPoly z() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// A unit of the Laurent ring: a single nonzero term c*z^k.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool has_real_coefficients() const;

  // Exponent range; both undefined for the zero polynomial.
  int low_exponent() const { return terms_.begin()->first; }
  int high_exponent() const { return terms_.rbegin()->first; }
  /// high - low; the Euclidean function of the Laurent ring. -1 for zero.
  int span() const { return is_zero() ? -1 : high_exponent() - low_exponent(); }

  GaussianRational coeff(int exponent) const;
  const GaussianRational& leading_coeff() const { return terms_.rbegin()->second; }
  const GaussianRational& trailing_coeff() const { return terms_.begin()->second; }

  /// Multiplication by z^k.
  LaurentPoly shifted(int k) const;

  std::complex<double> operator()(std::complex<double> w) const;
  /// Value at z = e^{i theta}; each power is formed directly from its angle.
  std::complex<double> on_circle(double theta) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int exponent, const GaussianRational& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Group-ring involution on Q(i)[Z]: z -> z^-1 with conjugated coefficients.
LaurentPoly involute(const LaurentPoly& p);

/// Formal derivative d/dz (exponents may be negative).
LaurentPoly derivative(const LaurentPoly& p);

/// Associate of p with lowest exponent 0 and leading coefficient 1.
/// Zero maps to zero. Two polynomials are associates iff their normalizations agree.
LaurentPoly normalize_unit(const LaurentPoly& p);

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division in the Laurent ring: a = q*b + r with r = 0 or span(r) < span(b).
/// Throws std::domain_error when b is zero.
DivMod divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a/b; throws std::domain_error if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Whether b divides a in the Laurent ring (0 divides only 0).
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Normalized gcd (see normalize_unit). gcd(0, 0) = 0.
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

/// Product of the distinct irreducible factors of p, normalized.
LaurentPoly squarefree_part(const LaurentPoly& p);

}  // namespace rho_forge

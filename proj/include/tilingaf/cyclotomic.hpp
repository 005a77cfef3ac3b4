#pragma once

#include <string>
#include <vector>

#include "tilingaf/rational.hpp"

namespace tilingaf {

class FieldElement;

// The cyclotomic field Q(zeta_n) in the power basis 1, zeta, ..., zeta^{d-1}
// modulo the n-th cyclotomic polynomial (d = deg Phi_n).  zeta embeds as
// e^{2*pi*i/n}, so one element serves as both a scalar and a planar point.
class CyclotomicField {
 public:
  // Shared immutable instance per order.  Orders must be even and >= 4 so the
  // point group (powers of zeta and conjugation) lives inside the field.
  static const CyclotomicField& of(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }

  // Phi_n as monic integer coefficients c[0..d], c[d] = 1.
  const std::vector<Integer>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coeffs(std::vector<Rational> coeffs) const;
  // zeta^k for any integer k (reduced mod n).
  FieldElement zeta_power(long k) const;

  // Reduced representation of zeta^k, 0 <= k < n.
  const std::vector<Rational>& power_row(int k) const { return powers_[k]; }

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<Integer> modulus_;
  // zeta^k in the power basis for k = 0..n-1.
  std::vector<std::vector<Rational>> powers_;
  // x^{d+m} reduced, for m = 0..d-2 (multiplication folding table).
  std::vector<std::vector<Rational>> fold_;

  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() : field_(nullptr) {}

  const CyclotomicField& field() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all coefficients beyond the constant vanish
  const Rational& rational_part() const { return c_[0]; }
  // The exact rational value; throws if not rational.
  Rational to_rational() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  // Throws InputError on division by zero.
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement operator*(const Rational& q) const;
  FieldElement operator/(const Rational& q) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Complex conjugate (zeta -> zeta^{n-1}).
  FieldElement conj() const;
  // Element fixed by conjugation, i.e. real under the standard embedding.
  bool is_real() const;
  FieldElement inverse() const;
  FieldElement pow(long k) const;  // integer powers, negative allowed

  // Deterministic total order on coefficient vectors (not the real order).
  static int coeff_compare(const FieldElement& a, const FieldElement& b);

  std::string str() const;  // "c0 + c1*z + ..." for humans
  std::vector<std::string> coeff_strings() const;

 private:
  FieldElement(const CyclotomicField* f, std::vector<Rational> c)
      : field_(f), c_(std::move(c)) {}

  const CyclotomicField* field_;
  std::vector<Rational> c_;

  friend class CyclotomicField;
};

}  // namespace tilingaf

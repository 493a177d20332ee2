#pragma once

#include <vector>

#include "gradalg/rational.hpp"

namespace gradalg {

/* Coefficients of the n-th cyclotomic polynomial, little endian, monic,
   exact integers. */
std::vector<BigInt> cyclotomic_polynomial(int n);

int euler_phi(int n);

/* An element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1) modulo
   the n-th cyclotomic polynomial. Values are immutable; all operations are
   pure and safe for concurrent use. Arithmetic requires equal root orders;
   callers lift to a common order with embed() first. */
class CycloScalar {
 public:
  CycloScalar() : n_(1), coeffs_(1, Rational(0)) {}

  static CycloScalar zero(int n);
  static CycloScalar one(int n);
  static CycloScalar from_rational(int n, const Rational& q);
  /* zeta_n^k, any integer k */
  static CycloScalar root_of_unity(int n, long long k);

  int root_order() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return coeffs_[0]; }

  CycloScalar operator+(const CycloScalar& o) const;
  CycloScalar operator-(const CycloScalar& o) const;
  CycloScalar operator-() const;
  CycloScalar operator*(const CycloScalar& o) const;
  CycloScalar inverse() const;  // DivisionByZero on zero
  CycloScalar operator/(const CycloScalar& o) const { return *this * o.inverse(); }

  bool operator==(const CycloScalar& o) const;  // same root order required
  bool operator!=(const CycloScalar& o) const { return !(*this == o); }

  /* Lift into Q(zeta_m); n must divide m. zeta_n maps to zeta_m^(m/n). */
  CycloScalar embed(int m) const;

  std::string str() const;  // "q0 + q1*z + ..." with zero terms omitted

 private:
  CycloScalar(int n, std::vector<Rational> c) : n_(n), coeffs_(std::move(c)) {}
  int n_;
  std::vector<Rational> coeffs_;
};

/* Lift both to Q(zeta_lcm) and compare / combine. */
int lcm_int(int a, int b);
bool equal_lifted(const CycloScalar& a, const CycloScalar& b);
CycloScalar add_lifted(const CycloScalar& a, const CycloScalar& b);
CycloScalar mul_lifted(const CycloScalar& a, const CycloScalar& b);

}  // namespace gradalg

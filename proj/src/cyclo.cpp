#include "gradalg/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gradalg {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; p++) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

namespace {

/* quotient of exact division by a monic divisor; remainder must vanish */
std::vector<BigInt> divide_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> quot(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; k--) {
    BigInt c = num[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; i++) num[k + i] -= c * den[i];
  }
  for (const BigInt& c : num)
    if (c != 0) raise(ErrorKind::Internal, "inexact cyclotomic division");
  return quot;
}

std::map<int, std::vector<BigInt>> phi_cache;
std::mutex phi_mutex;

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) raise(ErrorKind::IndexOutOfRange, "cyclotomic index " + std::to_string(n));
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache.find(n);
  if (it != phi_cache.end()) return it->second;

  std::vector<BigInt> result;
  if (n == 1) {
    result = {-1, 1};  // x - 1
  } else {
    std::vector<BigInt> xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    for (int d = 1; d < n; d++) {
      if (n % d) continue;
      /* recurse without the lock: compute divisors iteratively instead */
      auto sub = phi_cache.find(d);
      std::vector<BigInt> phi_d;
      if (sub != phi_cache.end()) {
        phi_d = sub->second;
      } else {
        /* divisors are processed in increasing order, so all proper divisors
           of d are already cached; replicate the same product formula */
        std::vector<BigInt> xd(d + 1, 0);
        xd[0] = -1;
        xd[d] = 1;
        for (int e = 1; e < d; e++)
          if (d % e == 0) xd = divide_monic(std::move(xd), phi_cache.at(e));
        phi_d = std::move(xd);
        phi_cache[d] = phi_d;
      }
      xn = divide_monic(std::move(xn), phi_d);
    }
    result = std::move(xn);
  }
  phi_cache[n] = result;
  return result;
}

namespace {

/* reduce a rational polynomial modulo the monic Phi_n, in place */
void reduce_mod_phi(std::vector<Rational>& p, int n) {
  auto phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(p.size()) - 1; k >= deg; k--) {
    Rational c = p[k];
    if (c == 0) continue;
    p[k] = 0;
    for (int i = 0; i < deg; i++) p[k - deg + i] -= c * Rational(phi[i]);
  }
  p.resize(deg);
}

}  // namespace

CycloScalar CycloScalar::zero(int n) {
  return CycloScalar(n, std::vector<Rational>(euler_phi(n), Rational(0)));
}

CycloScalar CycloScalar::one(int n) { return from_rational(n, Rational(1)); }

CycloScalar CycloScalar::from_rational(int n, const Rational& q) {
  std::vector<Rational> c(euler_phi(n), Rational(0));
  c[0] = q;
  return CycloScalar(n, std::move(c));
}

CycloScalar CycloScalar::root_of_unity(int n, long long k) {
  int e = mod_nonneg(k, n);
  std::vector<Rational> p(e + 1, Rational(0));
  p[e] = 1;
  if (static_cast<int>(p.size()) > euler_phi(n))
    reduce_mod_phi(p, n);
  else
    p.resize(euler_phi(n), Rational(0));
  return CycloScalar(n, std::move(p));
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); i++)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
  if (n_ != o.n_) raise(ErrorKind::RootOrderMismatch, "add with different root orders");
  std::vector<Rational> c(coeffs_);
  for (size_t i = 0; i < c.size(); i++) c[i] += o.coeffs_[i];
  return CycloScalar(n_, std::move(c));
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const {
  if (n_ != o.n_) raise(ErrorKind::RootOrderMismatch, "subtract with different root orders");
  std::vector<Rational> c(coeffs_);
  for (size_t i = 0; i < c.size(); i++) c[i] -= o.coeffs_[i];
  return CycloScalar(n_, std::move(c));
}

CycloScalar CycloScalar::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return CycloScalar(n_, std::move(c));
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
  if (n_ != o.n_) raise(ErrorKind::RootOrderMismatch, "multiply with different root orders");
  const size_t d = coeffs_.size();
  std::vector<Rational> p(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; i++) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; j++) {
      if (o.coeffs_[j] == 0) continue;
      p[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_mod_phi(p, n_);
  return CycloScalar(n_, std::move(p));
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
  /* extended gcd of this and Phi_n over Q[x]; Phi_n has no root in common
     with a nonzero element, so the gcd is a nonzero constant */
  auto phi_int = cyclotomic_polynomial(n_);
  std::vector<Rational> r0(phi_int.size()), r1(coeffs_);
  for (size_t i = 0; i < phi_int.size(); i++) r0[i] = Rational(phi_int[i]);
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of *this

  auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };

  while (deg(r1) > 0) {
    /* divide r0 by r1 */
    std::vector<Rational> rem(r0), q(std::max<int>(deg(r0) - deg(r1) + 1, 1), Rational(0));
    for (int k = deg(rem); k >= deg(r1); k--) {
      if (rem[k] == 0) continue;
      Rational c = rem[k] / r1[deg(r1)];
      q[k - deg(r1)] = c;
      for (int i = 0; i <= deg(r1); i++) rem[k - deg(r1) + i] -= c * r1[i];
    }
    trim(rem);
    /* s_new = s0 - q*s1 */
    std::vector<Rational> s_new(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); i++) s_new[i] = s0[i];
    for (size_t i = 0; i < q.size(); i++) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); j++) s_new[i + j] -= q[i] * s1[j];
    }
    trim(s_new);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_new);
  }
  if (r1.empty()) raise(ErrorKind::Internal, "element shares a factor with the cyclotomic modulus");
  /* r1 is a nonzero constant: inverse = s1 / r1[0] */
  std::vector<Rational> inv(euler_phi(n_), Rational(0));
  for (size_t i = 0; i < s1.size(); i++) inv[i] = s1[i] / r1[0];
  reduce_mod_phi(inv, n_);
  return CycloScalar(n_, std::move(inv));
}

bool CycloScalar::operator==(const CycloScalar& o) const {
  if (n_ != o.n_) raise(ErrorKind::RootOrderMismatch, "compare with different root orders");
  return coeffs_ == o.coeffs_;
}

CycloScalar CycloScalar::embed(int m) const {
  if (m % n_ != 0)
    raise(ErrorKind::NotADivisor,
          std::to_string(n_) + " does not divide target order " + std::to_string(m));
  if (m == n_) return *this;
  const int step = m / n_;
  std::vector<Rational> p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); i++) p[i * step] = coeffs_[i];
  if (static_cast<int>(p.size()) > euler_phi(m))
    reduce_mod_phi(p, m);
  else
    p.resize(euler_phi(m), Rational(0));
  return CycloScalar(m, std::move(p));
}

std::string CycloScalar::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); i++) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeffs_[0].str();
    } else {
      if (coeffs_[i] != 1) out << coeffs_[i].str() << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

bool equal_lifted(const CycloScalar& a, const CycloScalar& b) {
  int m = lcm_int(a.root_order(), b.root_order());
  return a.embed(m) == b.embed(m);
}

CycloScalar add_lifted(const CycloScalar& a, const CycloScalar& b) {
  int m = lcm_int(a.root_order(), b.root_order());
  return a.embed(m) + b.embed(m);
}

CycloScalar mul_lifted(const CycloScalar& a, const CycloScalar& b) {
  int m = lcm_int(a.root_order(), b.root_order());
  return a.embed(m) * b.embed(m);
}

}  // namespace gradalg

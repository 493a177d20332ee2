#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <optional>
#include <vector>

#include "gradalg/cyclo.hpp"

using namespace gradalg;

namespace {

std::optional<ErrorKind> thrown_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return std::nullopt;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_CASE("cyclotomic polynomials, small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^n - 1") {
  for (int n = 1; n <= 24; n++) {
    std::vector<BigInt> prod = {1};
    for (int d = 1; d <= n; d++)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<BigInt> target(n + 1, 0);
    target[0] = -1;
    target[n] = 1;
    CHECK(prod == target);
  }
}

TEST_CASE("roots of unity have exact order") {
  for (int n = 1; n <= 12; n++) {
    CycloScalar z = CycloScalar::root_of_unity(n, 1);
    CycloScalar p = CycloScalar::one(n);
    for (int k = 1; k < n; k++) {
      p = p * z;
      CHECK(p != CycloScalar::one(n));
    }
    p = p * z;
    CHECK(p == CycloScalar::one(n));
  }
}

TEST_CASE("arithmetic reduces modulo the cyclotomic polynomial") {
  CycloScalar i = CycloScalar::root_of_unity(4, 1);
  CHECK(i * i == CycloScalar::from_rational(4, -1));
  CycloScalar m = CycloScalar::root_of_unity(2, 1);
  CHECK(m * m == CycloScalar::one(2));
  CHECK((i + (-i)).is_zero());
  CHECK(thrown_kind([&] { (void)(i + CycloScalar::root_of_unity(3, 1)); }) ==
        ErrorKind::RootOrderMismatch);
}

TEST_CASE("inverses") {
  CycloScalar i = CycloScalar::root_of_unity(4, 1);
  CHECK(i.inverse() == -i);
  CHECK(i * i.inverse() == CycloScalar::one(4));
  CycloScalar two = CycloScalar::from_rational(1, 2);
  CHECK(two.inverse().rational_part() == Rational(1, 2));
  CHECK(thrown_kind([] { CycloScalar::zero(1).inverse(); }) == ErrorKind::DivisionByZero);

  for (int n : {3, 4, 6, 8, 12})
    for (int k = 0; k < n; k++) {
      CycloScalar z = CycloScalar::root_of_unity(n, k);
      CHECK(z * z.inverse() == CycloScalar::one(n));
    }
}

TEST_CASE("embed is a ring map") {
  CycloScalar m = CycloScalar::root_of_unity(2, 1);
  CHECK(m.embed(4) == CycloScalar::from_rational(4, -1));
  CHECK(thrown_kind([&] { m.embed(3); }) == ErrorKind::NotADivisor);

  CycloScalar a = CycloScalar::root_of_unity(3, 1) + CycloScalar::from_rational(3, 2);
  CycloScalar b = CycloScalar::root_of_unity(3, 2) - CycloScalar::one(3);
  CHECK(a.embed(12) * b.embed(12) == (a * b).embed(12));
  CHECK(a.embed(12) + b.embed(12) == (a + b).embed(12));
  CHECK(!a.embed(12).is_zero());
}

TEST_CASE("field axioms on mixed-order scalars") {
  std::vector<CycloScalar> pool = {
      CycloScalar::from_rational(1, Rational(3, 7)),
      CycloScalar::root_of_unity(3, 1),
      CycloScalar::root_of_unity(4, 3),
      CycloScalar::root_of_unity(6, 5) + CycloScalar::one(6),
      CycloScalar::root_of_unity(8, 2) - CycloScalar::from_rational(8, Rational(1, 2)),
  };
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) {
        CycloScalar ab = mul_lifted(a, b);
        CycloScalar bc = mul_lifted(b, c);
        CHECK(equal_lifted(mul_lifted(ab, c), mul_lifted(a, bc)));
        CycloScalar lhs = mul_lifted(a, add_lifted(b, c));
        CycloScalar rhs = add_lifted(mul_lifted(a, b), mul_lifted(a, c));
        CHECK(equal_lifted(lhs, rhs));
        CHECK(equal_lifted(mul_lifted(a, b), mul_lifted(b, a)));
      }
}

TEST_CASE("rational detection and parsing") {
  CHECK(CycloScalar::from_rational(1, parse_rational("-5/3")).rational_part() == Rational(-5, 3));
  CHECK(CycloScalar::root_of_unity(4, 2).is_rational());
  CHECK(CycloScalar::root_of_unity(4, 2).rational_part() == Rational(-1));
  CHECK(!CycloScalar::root_of_unity(4, 1).is_rational());
  CHECK(thrown_kind([] { parse_rational("1/0"); }) == ErrorKind::DivisionByZero);
  CHECK(thrown_kind([] { parse_rational("x"); }) == ErrorKind::ParseError);
}

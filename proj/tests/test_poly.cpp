#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gradalg/poly.hpp"

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

Presentation trivial_pres(GroupPtr G, std::vector<int> helems, std::vector<int> tuple) {
  Subgroup H = Subgroup::make(G, std::move(helems));
  Cocycle c = Cocycle::trivial(H.as_group());
  return Presentation::make(std::move(G), std::move(H), std::move(c), std::move(tuple));
}

/* C2-graded F + F, both tuple entries at the identity: A_e is 2-dimensional
   and diagonal, A_g is zero */
Presentation diag2() { return trivial_pres(cyclic_group(2), {0}, {0, 0}); }

/* fine grading of F + F: tuple (e, g) */
Presentation fine_c2() { return trivial_pres(cyclic_group(2), {0}, {0, 1}); }

Presentation group_algebra(const GroupPtr& G) {
  std::vector<int> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  return trivial_pres(G, all, {G->identity()});
}

/* alpha(x, y) = (-1)^(x2*y1) on C2xC2 */
Presentation bilinear_v() {
  GroupPtr v = product_of_cyclics(2, 2);
  auto vec = [&](int g) {
    const std::string& l = v->label(g);
    return std::pair<int, int>{(l == "a" || l == "ab") ? 1 : 0, (l == "b" || l == "ab") ? 1 : 0};
  };
  std::vector<std::vector<int>> exps(4, std::vector<int>(4, 0));
  for (int x = 0; x < 4; x++)
    for (int y = 0; y < 4; y++) exps[x][y] = (vec(x).second * vec(y).first) % 2;
  Subgroup H = Subgroup::make(v, {0, 1, 2, 3});
  return Presentation::make(v, H, Cocycle::make(v, 2, exps), {0});
}

GradedVariable var(int id, int degree, VarTag tag = VarTag::Plain) { return {id, degree, tag}; }

GradedMonomial mono(std::vector<int> factors, const CycloScalar& c = CycloScalar::one(1)) {
  GradedMonomial m;
  m.coefficient = c;
  m.factors = std::move(factors);
  return m;
}

const CycloScalar minus_one = CycloScalar::from_rational(1, Rational(-1));

}  // namespace

TEST_CASE("construction rejects malformed input") {
  CHECK(thrown_kind([] {
          GradedPolynomial::make({var(0, 0), var(0, 1)}, {mono({0, 0})});
        }) == ErrorKind::ParseError);
  CHECK(thrown_kind([] { GradedPolynomial::make({var(0, 0)}, {mono({})}); }) ==
        ErrorKind::ParseError);
  CHECK(thrown_kind([] {
          GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 0})});
        }) == ErrorKind::ParseError);
  CHECK(thrown_kind([] { GradedPolynomial::make({var(0, 0)}, {mono({0, 1})}); }) ==
        ErrorKind::ParseError);

  const GradedPolynomial sub = GradedPolynomial::make({var(2, 0), var(3, 0)}, {mono({2, 3})});
  CHECK(thrown_kind([&] {
          GradedPolynomial::make({var(0, 0)}, {mono({0})}, {{1, sub}});
        }) == ErrorKind::ParseError);
  CHECK(thrown_kind([&] {
          GradedPolynomial::make({var(0, 0)}, {mono({0})}, {{0, sub}, {0, sub}});
        }) == ErrorKind::ParseError);
  /* leaf id reused by a sibling level */
  const GradedPolynomial clash = GradedPolynomial::make({var(1, 0), var(3, 0)}, {mono({1, 3})});
  CHECK(thrown_kind([&] {
          GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 1})}, {{0, clash}});
        }) == ErrorKind::ParseError);

  CHECK(thrown_kind([] {
          GradedPolynomial::make({var(0, 0)}, {mono({0})}, {}, {{0, 5}});
        }) == ErrorKind::ParseError);
  CHECK(thrown_kind([&] {
          GradedPolynomial::make({var(0, 0)}, {mono({0})}, {{0, sub}}, {{0}});
        }) == ErrorKind::ParseError);
  CHECK(thrown_kind([] {
          GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 1})}, {}, {{0, 1}, {1}});
        }) == ErrorKind::SetsNotDisjoint);
  CHECK(thrown_kind([] {
          GradedPolynomial::make({var(0, 0), var(1, 1)}, {mono({0, 1})}, {}, {{0, 1}});
        }) == ErrorKind::MixedDegreesInSet);
}

TEST_CASE("navigation across composition levels") {
  const GradedPolynomial sub = GradedPolynomial::make({var(2, 1), var(3, 1)}, {mono({2, 3})});
  const GradedPolynomial p =
      GradedPolynomial::make({var(1, 0), var(0, 0)}, {mono({0, 1})}, {{0, sub}});

  REQUIRE(p.find_variable(1) != nullptr);
  CHECK(p.find_variable(1)->degree == 0);
  CHECK(p.find_variable(7) == nullptr);
  CHECK(p.subpolynomial(0) != nullptr);
  CHECK(p.subpolynomial(1) == nullptr);

  CHECK(p.leaf_ids() == std::vector<int>{1, 2, 3});
  CHECK(p.leaf_degree(2) == 1);
  CHECK(p.leaf_degree(1) == 0);
  CHECK(thrown_kind([&] { p.leaf_degree(0); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrown_kind([&] { p.leaf_degree(9); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("homogeneous degree of monomial lists") {
  GroupPtr c2 = cyclic_group(2);
  const GradedPolynomial p =
      GradedPolynomial::make({var(0, 0), var(1, 1)}, {mono({0, 1}), mono({1, 0}, minus_one)});
  CHECK(homogeneous_degree(p, c2) == 1);

  GroupPtr s3 = symmetric_3();
  const int t12 = s3->index_of_label("(12)");
  const int t13 = s3->index_of_label("(13)");
  const GradedPolynomial q = GradedPolynomial::make({var(0, t12), var(1, t13)},
                                                    {mono({0, 1}), mono({1, 0}, minus_one)});
  CHECK(homogeneous_degree(q, s3) == std::nullopt);
}

TEST_CASE("degree remapping walks composition") {
  const GradedPolynomial sub = GradedPolynomial::make({var(2, 1), var(3, 0)}, {mono({2, 3})});
  const GradedPolynomial p =
      GradedPolynomial::make({var(0, 1), var(1, 0)}, {mono({0, 1})}, {{0, sub}});
  const GradedPolynomial r = remap_degrees(p, {{0, 5}, {1, 7}});
  CHECK(r.find_variable(0)->degree == 7);
  CHECK(r.find_variable(1)->degree == 5);
  CHECK(r.composition.front().second.find_variable(2)->degree == 7);
  CHECK(r.composition.front().second.find_variable(3)->degree == 5);
  CHECK(thrown_kind([&] { remap_degrees(p, {{0, 5}}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("alternation expansion") {
  const GradedPolynomial p =
      GradedPolynomial::make({var(1, 0), var(2, 0)}, {mono({1, 2})}, {}, {{1, 2}});
  const GradedPolynomial a = alternate(p);
  REQUIRE(a.monomials.size() == 2);
  CHECK(a.alternation_sets.empty());
  CHECK(a.monomials[0].factors == std::vector<int>{1, 2});
  CHECK(equal_lifted(a.monomials[0].coefficient, CycloScalar::one(1)));
  CHECK(a.monomials[1].factors == std::vector<int>{2, 1});
  CHECK(equal_lifted(a.monomials[1].coefficient, minus_one));

  CHECK(thrown_kind([&] { alternate(p, 1); }) == ErrorKind::BudgetExceeded);

  /* two sets multiply: (2!)(3!) copies of the single monomial */
  const GradedPolynomial q = GradedPolynomial::make(
      {var(0, 0), var(1, 0), var(2, 1), var(3, 1), var(4, 1)}, {mono({0, 2, 1, 3, 4})}, {},
      {{0, 1}, {2, 3, 4}});
  CHECK(alternate(q).monomials.size() == 12);
}

TEST_CASE("evaluation of a single variable") {
  const Presentation P = group_algebra(cyclic_group(2));
  const GradedPolynomial p = GradedPolynomial::make({var(0, 0)}, {mono({0})});
  const StdBasisElement b{0, 0, 0};
  CHECK(evaluate_basis(p, P, {{0, b}}) == AlgebraElement::basis(b));
  CHECK(evaluate(p, P, {{0, AlgebraElement::basis(b)}}) == AlgebraElement::basis(b));

  CHECK(thrown_kind([&] { evaluate_basis(p, P, {}); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrown_kind([&] { evaluate_basis(p, P, {{0, StdBasisElement{1, 0, 0}}}); }) ==
        ErrorKind::DegreeMismatch);
}

TEST_CASE("evaluation resolves composition innermost first") {
  const Presentation P = fine_c2();
  /* x0 stands for the product of two degree-g variables */
  const GradedPolynomial sub = GradedPolynomial::make({var(2, 1), var(3, 1)}, {mono({2, 3})});
  const GradedPolynomial p =
      GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 1})}, {{0, sub}});

  const BasisAssignment good{{1, {0, 0, 0}}, {2, {0, 0, 1}}, {3, {0, 1, 0}}};
  CHECK(evaluate_basis(p, P, good) == AlgebraElement::basis({0, 0, 0}));

  /* the inner product lands in degree e; declaring x0 of degree g must fail */
  const GradedPolynomial bad =
      GradedPolynomial::make({var(0, 1), var(1, 0)}, {mono({0, 1})}, {{0, sub}});
  CHECK(thrown_kind([&] { evaluate_basis(bad, P, good); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("symbolic alternation agrees with expanded monomials") {
  std::mt19937 rng(2026);
  std::vector<Presentation> samples{fine_c2(), diag2(), bilinear_v(),
                                    group_algebra(symmetric_3()),
                                    trivial_pres(symmetric_3(), {0, 1}, {2, 3})};
  for (const Presentation& P : samples) {
    const GroupPtr& G = P.ambient;
    for (int trial = 0; trial < 40; trial++) {
      const int n = 2 + static_cast<int>(rng() % 3);
      std::vector<GradedVariable> vars;
      std::vector<std::vector<StdBasisElement>> pools;
      for (int k = 0; k < n; k++) {
        const int d = static_cast<int>(rng() % G->order());
        vars.push_back(var(k, d));
        pools.push_back(basis_of_degree(P, d));
      }
      if (std::any_of(pools.begin(), pools.end(),
                      [](const auto& c) { return c.empty(); }))
        continue;
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::vector<GradedMonomial> monos{mono(order)};
      std::shuffle(order.begin(), order.end(), rng);
      monos.push_back(mono(order, minus_one));

      /* alternate two variables of equal degree when the draw allows it */
      std::vector<std::vector<int>> sets;
      for (int a = 0; a < n && sets.empty(); a++)
        for (int b = a + 1; b < n && sets.empty(); b++)
          if (vars[a].degree == vars[b].degree) sets.push_back({a, b});
      const GradedPolynomial p = GradedPolynomial::make(vars, monos, {}, sets);

      BasisAssignment assignment;
      for (int k = 0; k < n; k++) assignment[k] = pools[k][rng() % pools[k].size()];
      const AlgebraElement direct = evaluate_basis(p, P, assignment);
      CHECK(direct == evaluate_basis(alternate(p), P, assignment));
      std::map<int, AlgebraElement> lifted;
      for (const auto& [id, b] : assignment) lifted.emplace(id, AlgebraElement::basis(b));
      CHECK(direct == evaluate(p, P, lifted));
    }
  }
}

TEST_CASE("transposing an alternating pair negates the value") {
  const Presentation P = diag2();
  const GradedPolynomial p =
      GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 1})}, {}, {{0, 1}});
  const BasisAssignment ab{{0, {0, 0, 1}}, {1, {0, 1, 0}}};
  const BasisAssignment ba{{0, {0, 1, 0}}, {1, {0, 0, 1}}};
  const AlgebraElement lhs = evaluate_basis(p, P, ab);
  CHECK_FALSE(lhs.is_zero());
  CHECK(evaluate_basis(p, P, ba) == scale(minus_one, lhs));
}

TEST_CASE("identity scan covers the standard basis exactly once") {
  const Presentation D = diag2();
  const Presentation F2 = fine_c2();
  const GradedPolynomial comm = GradedPolynomial::make(
      {var(0, 0), var(1, 0)}, {mono({0, 1}), mono({1, 0}, minus_one)});

  /* the degree-e part of the fine grading is diagonal, so the commutator
     vanishes on all four of its assignments */
  IdentityVerdict v = is_identity(comm, F2);
  CHECK(v.kind == IdentityVerdict::Kind::Identity);
  CHECK(v.assignments_tried == 4);

  v = is_identity(comm, F2, 3);
  CHECK(v.kind == IdentityVerdict::Kind::Inconclusive);
  CHECK(v.assignments_tried == 3);
  CHECK(is_identity(comm, F2, 4).kind == IdentityVerdict::Kind::Identity);

  /* a variable of empty degree makes any polynomial vacuously an identity */
  const GradedPolynomial xg = GradedPolynomial::make({var(0, 1)}, {mono({0})});
  v = is_identity(xg, D);
  CHECK(v.kind == IdentityVerdict::Kind::Identity);
  CHECK(v.assignments_tried == 0);

  const GradedPolynomial xe = GradedPolynomial::make({var(0, 0)}, {mono({0})});
  v = is_identity(xe, D);
  CHECK(v.kind == IdentityVerdict::Kind::NonIdentity);
  CHECK(v.assignments_tried == 1);
  CHECK(v.witness.at(0) == StdBasisElement{0, 0, 0});

  /* one-dimensional components: a single assignment settles the group algebra */
  const Presentation F = group_algebra(cyclic_group(2));
  v = is_identity(comm, F);
  CHECK(v.kind == IdentityVerdict::Kind::Identity);
  CHECK(v.assignments_tried == 1);

  /* fine M_2 grading: the two off-diagonal units do not commute, found on
     the second of the four degree-g assignments */
  const GradedPolynomial comm_g = GradedPolynomial::make(
      {var(0, 1), var(1, 1)}, {mono({0, 1}), mono({1, 0}, minus_one)});
  v = is_identity(comm_g, fine_c2());
  CHECK(v.kind == IdentityVerdict::Kind::NonIdentity);
  CHECK(v.assignments_tried == 2);
  CHECK(v.witness.at(0) == StdBasisElement{0, 0, 1});
  CHECK(v.witness.at(1) == StdBasisElement{0, 1, 0});
}

TEST_CASE("identity scan walks composed leaves") {
  const Presentation P = fine_c2();
  /* (x2 x3) x1 with x2, x3 of degree g: the product of the two off-diagonal
     units in either order annihilates one diagonal unit */
  const GradedPolynomial sub = GradedPolynomial::make({var(2, 1), var(3, 1)}, {mono({2, 3})});
  const GradedPolynomial p =
      GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 1})}, {{0, sub}});
  const IdentityVerdict v = is_identity(p, P);
  CHECK(v.kind == IdentityVerdict::Kind::NonIdentity);
  /* leaves 1, 2, 3 each range over two candidates */
  CHECK(v.assignments_tried <= 8);
  CHECK_FALSE(evaluate_basis(p, P, v.witness).is_zero());
}

TEST_CASE("identity scan short-circuits oversized alternation sets") {
  const Presentation F2 = fine_c2();
  /* three alternating degree-e variables over a two-dimensional component:
     a value repeats in every assignment and the transpositions cancel */
  const GradedPolynomial p = GradedPolynomial::make(
      {var(0, 0), var(1, 0), var(2, 0)}, {mono({0, 1, 2})}, {}, {{0, 1, 2}});
  const IdentityVerdict v = is_identity(p, F2);
  CHECK(v.kind == IdentityVerdict::Kind::Identity);
  CHECK(v.assignments_tried == 0);

  /* a set that fits its component still goes through the scan */
  const GradedPolynomial q =
      GradedPolynomial::make({var(0, 0), var(1, 0)}, {mono({0, 1})}, {}, {{0, 1}});
  CHECK(is_identity(q, F2).kind == IdentityVerdict::Kind::Identity);
  CHECK(is_identity(q, F2).assignments_tried > 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "gradalg/group.hpp"

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

/* independent table builder: compose(a, b) applies b first */
template <size_t N>
std::vector<std::vector<int>> table_from_perms(const std::vector<std::array<int, N>>& perms) {
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) {
      std::array<int, N> c{};
      for (size_t x = 0; x < N; x++) c[x] = perms[i][perms[j][x]];
      for (int k = 0; k < m; k++)
        if (perms[k] == c) table[i][j] = k;
      REQUIRE(table[i][j] >= 0);
    }
  return table;
}

}  // namespace

TEST_CASE("table validation accepts groups and names the failure otherwise") {
  GroupPtr t = Group::make({{0}});
  CHECK(t->order() == 1);
  CHECK(t->identity() == 0);

  GroupPtr c2 = Group::make({{0, 1}, {1, 0}});
  CHECK(c2->identity() == 0);
  CHECK(c2->inv(0) == 0);
  CHECK(c2->inv(1) == 1);

  CHECK(thrown_kind([] { Group::make({{0, 1}, {0, 1}}); }) == ErrorKind::NotLatinSquare);

  /* Latin square with a left identity but no two-sided one */
  CHECK(thrown_kind([] { Group::make({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}); }) ==
        ErrorKind::NoIdentity);

  /* the smallest nonassociative loop */
  CHECK(thrown_kind([] {
          Group::make({{0, 1, 2, 3, 4},
                       {1, 0, 3, 4, 2},
                       {2, 3, 4, 0, 1},
                       {3, 4, 1, 2, 0},
                       {4, 2, 0, 1, 3}});
        }) == ErrorKind::NotAssociative);
}

TEST_CASE("symmetric_3 table equals independent permutation composition") {
  /* index order e,(12),(13),(23),(123),(132) on points 0,1,2 */
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  CHECK(symmetric_3()->table() == table_from_perms(perms));
  CHECK(symmetric_3()->label(4) == "(123)");
}

TEST_CASE("dihedral_4 table equals independent permutation composition") {
  std::array<int, 4> r = {1, 2, 3, 0};
  std::array<int, 4> s = {0, 3, 2, 1};
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> pw = {0, 1, 2, 3};
  for (int k = 0; k < 4; k++) {
    perms.push_back(pw);
    std::array<int, 4> nx{};
    for (int x = 0; x < 4; x++) nx[x] = r[pw[x]];
    pw = nx;
  }
  for (int k = 0; k < 4; k++) {
    std::array<int, 4> refl{};
    for (int x = 0; x < 4; x++) refl[x] = perms[k][s[x]];
    perms.push_back(refl);
  }
  CHECK(dihedral_4()->table() == table_from_perms(perms));
}

TEST_CASE("quaternion_8 satisfies the defining relations") {
  GroupPtr q = quaternion_8();
  auto idx = [&](const char* l) { return q->index_of_label(l); };
  const int i = idx("i"), j = idx("j"), k = idx("k"), m1 = idx("-1");
  CHECK(q->mul(i, i) == m1);
  CHECK(q->mul(j, j) == m1);
  CHECK(q->mul(k, k) == m1);
  CHECK(q->mul(i, j) == k);
  CHECK(q->mul(j, i) == idx("-k"));
  CHECK(q->element_order(m1) == 2);
  CHECK(q->element_order(i) == 4);
  CHECK(q->conj(j, i) == idx("-i"));
}

TEST_CASE("cyclic and product builders") {
  GroupPtr c4 = cyclic_group(4);
  CHECK(c4->inv(1) == 3);
  CHECK(c4->element_order(1) == 4);
  CHECK(c4->element_order(2) == 2);
  CHECK(c4->label(2) == "g^2");

  GroupPtr v = product_of_cyclics(2, 2);
  const int a = v->index_of_label("a"), b = v->index_of_label("b");
  CHECK(v->mul(a, b) == v->index_of_label("ab"));
  for (int g = 1; g < 4; g++) CHECK(v->element_order(g) == 2);
}

TEST_CASE("subgroup closure") {
  GroupPtr v = product_of_cyclics(2, 2);
  const int a = v->index_of_label("a");
  CHECK(subgroup_closure(v, {a}).elements() == std::vector<int>{0, a});
  CHECK(subgroup_closure(v, {}).elements() == std::vector<int>{0});

  GroupPtr s3 = symmetric_3();
  CHECK(subgroup_closure(s3, {1, 2}).size() == 6);
  CHECK(subgroup_closure(s3, {4}).elements() == std::vector<int>{0, 4, 5});
}

TEST_CASE("normalizer") {
  GroupPtr s3 = symmetric_3();
  Subgroup h = Subgroup::make(s3, {0, 1});
  CHECK(normalizer(s3, h).elements() == std::vector<int>{0, 1});
  Subgroup a3 = Subgroup::make(s3, {0, 4, 5});
  CHECK(normalizer(s3, a3).size() == 6);

  GroupPtr v = product_of_cyclics(2, 2);
  for (const Subgroup& h2 : all_subgroups(v)) CHECK(normalizer(v, h2).size() == 4);
}

TEST_CASE("conjugate subgroup") {
  GroupPtr s3 = symmetric_3();
  Subgroup h = Subgroup::make(s3, {0, 1});
  /* (13)(12)(13) = (23) */
  CHECK(conjugate_subgroup(h, 2).elements() == std::vector<int>{0, 3});
  CHECK(conjugate_subgroup(h, 0).elements() == h.elements());

  for (int g = 0; g < 6; g++)
    for (int g2 = 0; g2 < 6; g2++)
      CHECK(conjugate_subgroup(conjugate_subgroup(h, g), g2).elements() ==
            conjugate_subgroup(h, s3->mul(g2, g)).elements());
}

TEST_CASE("right cosets") {
  GroupPtr v = product_of_cyclics(2, 2);
  const int a = v->index_of_label("a");
  Cosets cs = right_cosets(v, Subgroup::make(v, {0, a}));
  REQUIRE(cs.cosets.size() == 2);
  CHECK(cs.cosets[0] == std::vector<int>{0, a});
  CHECK(cs.coset_of[v->index_of_label("b")] == 1);

  GroupPtr s3 = symmetric_3();
  Cosets single = right_cosets(s3, Subgroup::make(s3, {0}));
  CHECK(single.cosets.size() == 6);
  Cosets whole = right_cosets(s3, Subgroup::make(s3, {0, 1, 2, 3, 4, 5}));
  CHECK(whole.cosets.size() == 1);
}

TEST_CASE("subgroup lattices of the stock groups") {
  CHECK(all_subgroups(symmetric_3()).size() == 6);
  CHECK(all_subgroups(dihedral_4()).size() == 10);
  CHECK(all_subgroups(quaternion_8()).size() == 6);
  CHECK(all_subgroups(product_of_cyclics(2, 2)).size() == 5);

  for (const GroupPtr& g : {symmetric_3(), dihedral_4(), quaternion_8()})
    for (const Subgroup& h : all_subgroups(g)) {
      Cosets cs = right_cosets(g, h);
      CHECK(static_cast<int>(cs.cosets.size()) * h.size() == g->order());
      CHECK(normalizer(g, h).contains(0));
    }
}

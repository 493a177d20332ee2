#pragma once

#include <array>
#include <optional>

#include "gradalg/cyclo.hpp"
#include "gradalg/group.hpp"
#include "gradalg/snf.hpp"

namespace gradalg {

/* A 2-cocycle on a finite group H with values in the n-th roots of unity,
   stored as the exponent table exps[x][y] with alpha(x,y) = zeta_n^exps[x][y].
   Normalized: rows and columns of the identity are zero. The cocycle
   identity itself is checked by check_cocycle, not at construction. */
struct Cocycle {
  GroupPtr group;  // the domain re-indexed as a standalone group
  int n = 1;
  std::vector<std::vector<int>> exps;

  /* validates shape, entry range and normalization */
  static Cocycle make(GroupPtr group, int n, std::vector<std::vector<int>> exps);
  static Cocycle trivial(GroupPtr group, int n = 1);

  CycloScalar value(int x, int y) const { return CycloScalar::root_of_unity(n, exps[x][y]); }

  /* exponent table scaled into root order m; n must divide m */
  Cocycle lift(int m) const;
  /* divide out gcd(n, all exps): the minimal root order writing the same
     function into roots of unity */
  Cocycle normalized_form() const;
};

bool same_cocycle_function(const Cocycle& a, const Cocycle& b);  // compares normalized forms

Cocycle cocycle_add(const Cocycle& a, const Cocycle& b);  // lifts to lcm root order
Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b);

struct CocycleCheck {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};  // first violating triple when !ok
};
CocycleCheck check_cocycle(const Cocycle& c);

/* A normalized 1-cochain rho: H -> Z/n with rho(e) = 0. */
struct CochainWitness {
  GroupPtr group;
  int n = 1;
  std::vector<int> vals;

  static CochainWitness make(GroupPtr group, int n, std::vector<int> vals);
};

/* (d rho)(x,y) = rho(x) + rho(y) - rho(xy) mod n */
Cocycle coboundary(const CochainWitness& w);

/* The conjugate cocycle lives on gHg^-1 and satisfies
   (g.c)(g x g^-1, g y g^-1) = c(x, y). H embeds c's domain into the
   ambient group; the result carries the conjugated subgroup. */
struct ConjugatedCocycle {
  Subgroup subgroup;
  Cocycle cocycle;
};
ConjugatedCocycle conjugate_cocycle(const Cocycle& c, const Subgroup& H, int g);

/* Witness rho with b - a = d rho in exponents mod lcm(a.n, b.n), or nullopt.
   Solved exactly by Smith normal form over the integers. */
std::optional<CochainWitness> cohomologous(const Cocycle& a, const Cocycle& b);

/* Same question but allowing the witness values in a larger root-of-unity
   group, order lcm(a.n, b.n) * exponent(H). This captures equality of the
   cocycle classes over any field containing all roots of unity, which is
   the relation that graded identities can see. */
std::optional<CochainWitness> cohomologous_in_closure(const Cocycle& a, const Cocycle& b);

int group_exponent(const GroupPtr& G);

/* Representatives of cocycle classes with values in the M-th roots of unity,
   one per class of the closure relation; the trivial class comes first. */
std::vector<Cocycle> enumerate_cocycle_classes(const GroupPtr& H, int M);

}  // namespace gradalg

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gradalg/presentation.hpp"

namespace gradalg {

enum class VarTag { Plain, Designated, Frame, Bridge };

struct GradedVariable {
  int id = 0;
  int degree = 0;  // ambient group element
  VarTag tag = VarTag::Plain;
};

/* coefficient times the ordered product of the variables in factor order */
struct GradedMonomial {
  CycloScalar coefficient = CycloScalar::one(1);
  std::vector<int> factors;
};

/* Multilinear: every monomial uses every variable of its level exactly once.
   A variable may resolve to a sub-polynomial (composition node); assignments
   feed the leaves. alternation_sets are kept symbolic until alternate(). */
struct GradedPolynomial {
  std::vector<GradedVariable> variables;  // sorted by id
  std::vector<GradedMonomial> monomials;
  std::vector<std::pair<int, GradedPolynomial>> composition;  // id -> substituted polynomial
  std::vector<std::vector<int>> alternation_sets;  // same-degree leaf variables, disjoint
  bool degenerate = false;  // vacuous-product marker, see build_cocycle_separator

  static GradedPolynomial make(std::vector<GradedVariable> variables,
                               std::vector<GradedMonomial> monomials,
                               std::vector<std::pair<int, GradedPolynomial>> composition = {},
                               std::vector<std::vector<int>> alternation_sets = {});

  const GradedVariable* find_variable(int id) const;
  const GradedPolynomial* subpolynomial(int id) const;

  /* ids of assignable variables across all composition levels, ascending */
  std::vector<int> leaf_ids() const;
  /* declared degree of a leaf anywhere in the tree */
  int leaf_degree(int id) const;
};

/* product of the variables' declared degrees when all monomials agree */
std::optional<int> homogeneous_degree(const GradedPolynomial& p, const GroupPtr& G);

/* relabels every variable degree (including sub-polynomials) through the map */
GradedPolynomial remap_degrees(const GradedPolynomial& p, const std::map<int, int>& degree_map);

/* Expands the symbolic alternation sets into explicit signed monomials.
   The monomial count multiplies by the product of the set factorials. */
GradedPolynomial alternate(const GradedPolynomial& p, long long max_monomials = 20000);

AlgebraElement evaluate(const GradedPolynomial& p, const Presentation& P,
                        const std::map<int, AlgebraElement>& assignment);

/* the basis-element assignments the identity check and certificates use */
using BasisAssignment = std::map<int, StdBasisElement>;

AlgebraElement evaluate_basis(const GradedPolynomial& p, const Presentation& P,
                              const BasisAssignment& assignment);

struct IdentityVerdict {
  enum class Kind { Identity, NonIdentity, Inconclusive };
  Kind kind = Kind::Identity;
  BasisAssignment witness;  // NonIdentity only: first nonzero assignment
  long long assignments_tried = 0;
};

/* Exhaustive scan of standard-basis assignments for the leaves, lexicographic
   by variable id then basis order; multilinearity makes this complete.
   Returns Inconclusive once budget assignments have been evaluated. */
IdentityVerdict is_identity(const GradedPolynomial& p, const Presentation& P,
                            long long budget = 10'000'000);

}  // namespace gradalg

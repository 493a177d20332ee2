#pragma once

#include <map>
#include <optional>
#include <string>

#include "gradalg/cocycle.hpp"

namespace gradalg {

/* The triple (H, alpha, (p_1,...,p_r)) presenting the G-graded algebra
   F^alpha H (x) M_r(F); the standard basis element u_h (x) e_{i,j} is
   homogeneous of degree p_i^-1 h p_j. */
struct Presentation {
  GroupPtr ambient;
  Subgroup subgroup;  // H embedded in ambient
  Cocycle cocycle;    // on subgroup re-indexed standalone
  std::vector<int> tuple;  // ambient elements p_1..p_r

  static Presentation make(GroupPtr ambient, Subgroup subgroup, Cocycle cocycle,
                           std::vector<int> tuple);

  int matrix_size() const { return static_cast<int>(tuple.size()); }
  int dim() const { return subgroup.size() * matrix_size() * matrix_size(); }

  /* same ambient table, same H element set, same tuple, same cocycle
     function (exponent tables compared after normalization) */
  bool literally_equal(const Presentation& o) const;
};

/* u_h (x) e_{i,j}; h indexes the subgroup's abstract elements, i and j are
   0-based internally and rendered 1-based. */
struct StdBasisElement {
  int h = 0;
  int i = 0;
  int j = 0;
  auto operator<=>(const StdBasisElement&) const = default;
};

struct AlgebraElement {
  std::map<StdBasisElement, CycloScalar> terms;  // zero coefficients never stored

  static AlgebraElement zero() { return {}; }
  static AlgebraElement basis(const StdBasisElement& b, int root_order = 1);

  /* accumulate, lifting scalars to a common root order; drops zero results */
  void add_term(const StdBasisElement& b, const CycloScalar& c);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement& o) const;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const CycloScalar& c, const AlgebraElement& x);

int degree_of(const Presentation& P, const StdBasisElement& b);
AlgebraElement multiply(const Presentation& P, const AlgebraElement& x, const AlgebraElement& y);

/* one entry per ambient element, zeros included */
std::map<int, int> component_dimensions(const Presentation& P);

std::vector<StdBasisElement> standard_basis(const Presentation& P);
std::vector<StdBasisElement> basis_of_degree(const Presentation& P, int g);

struct Move {
  enum class Kind { Permute, CosetShift, Conjugate, CocycleReplace };
  Kind kind;
  std::vector<int> perm;  // Permute: new_tuple[k] = tuple[perm[k]]
  int index = -1;         // CosetShift: 0-based tuple position
  int shift = -1;         // CosetShift: ambient element of H, p_i -> shift * p_i
  int conjugator = -1;    // Conjugate: H -> gHg^-1, alpha -> g.alpha, p_i -> g*p_i
  std::optional<CochainWitness> rho;  // CocycleReplace: alpha -> alpha + d(rho)

  static Move permute(std::vector<int> perm);
  static Move coset_shift(int index, int shift);
  static Move conjugate(int g);
  static Move cocycle_replace(CochainWitness rho);
};

Presentation apply_move(const Presentation& P, const Move& m);

/* Decomposition of the N-graded part: i ~ j when p_i^-1 h p_j lies in N for
   some h in H. Each class spans an N-graded-simple block. */
struct Block {
  std::vector<int> indices;  // tuple positions, ascending
  Subgroup omega;            // g1^-1 H g1 intersect N at the leading index, in ambient
  int pages = 0;             // |omega|; the number of group-algebra layers
  std::vector<int> coset_tuple;  // n_1..n_k in ambient indices, n_j in N with p_j in H g1 n_j
  Presentation block_presentation;  // (omega, conjugated cocycle, coset tuple) over N standalone
};

struct BlockDecomposition {
  Subgroup N;
  std::vector<Block> blocks;  // ordered by leading tuple index
};

BlockDecomposition block_decomposition(const Presentation& P, const Subgroup& N);

/* Everything about a presentation that basic moves cannot change. The
   canonical fields make operator== a necessary condition for equivalence:
   cosets are keyed by minimal element, multisets sorted, the subgroup keyed
   by its lexicographically smallest conjugate, and per-block cocycle-class
   labels minimized over relabelings. */
struct InvariantReport {
  std::map<int, int> dims;
  std::vector<int> coset_multiplicities;  // sorted
  int h_order = 0;
  std::vector<int> h_conjugacy_key;
  /* one row per right-N(H)-coset block of tuple indices: the sorted
     (multiplicity, cocycle class) pairs of its H-cosets; rows sorted */
  std::vector<std::vector<std::pair<int, int>>> block_profile;

  bool operator==(const InvariantReport&) const = default;
};

InvariantReport invariant_report(const Presentation& P);

/* human-readable location of the first differing field, empty when equal */
std::string report_difference(const InvariantReport& a, const InvariantReport& b);

}  // namespace gradalg

#pragma once

#include <optional>

#include "gradalg/poly.hpp"

namespace gradalg {

/* mu(id)/mu(pi), where mu(sigma) is the cocycle scalar collected by the
   ordered product u_{h_sigma(1)} ... u_{h_sigma(s)}. Requires the two
   products to land on the same H-element. */
CycloScalar binomial_lambda(const Cocycle& c, const std::vector<int>& degrees,
                            const std::vector<int>& pi);

/* x_1...x_s - lambda x_pi(1)...x_pi(s); an identity of the twisted group
   algebra of c, variable degrees are c.group elements */
GradedPolynomial build_binomial(const Cocycle& c, const std::vector<int>& degrees,
                                const std::vector<int>& pi);

/* degrees/permutation data of a binomial whose lambda differs between two
   cocycles; searched over products of length 2..4 */
struct BinomialSpec {
  std::vector<int> degrees;
  std::vector<int> pi;
};
std::optional<BinomialSpec> find_separating_binomial(const Cocycle& alpha, const Cocycle& beta);

/* The interleaved double-alternating central polynomial on 2r^2 variables,
   x-ids 0..r^2-1 and y-ids r^2..2r^2-1, expanded to its r^2!^2 monomials.
   x_0 is designated of degree h; every other variable has degree e. */
GradedPolynomial regev(int r, int h, int e);

/* Product over beta_list of a binomial that is an identity of beta but not
   of alpha, variables disjoint; for r >= 2 every variable is replaced by a
   fresh regev via a composition node. Empty beta_list returns the degenerate
   single-variable x_e. */
GradedPolynomial build_cocycle_separator(const Cocycle& alpha,
                                         const std::vector<Cocycle>& beta_list, int r);

struct ProbeResult {
  GradedPolynomial polynomial;
  BasisAssignment witness;  // evaluates nonzero; frames pin every position
};

/* Z_{T,P} with frames and bridges: per T-block an ordered walk designating
   every block element exactly once (e-weight circuits first, then an
   Eulerian circuit of the remaining weights), alternated per block and
   weight. The witness realizes the defining walk. */
ProbeResult build_block_probe(const Presentation& P, const Subgroup& T);

/* Concatenation of Z_{g^-1Hg,P} over the distinct N(H)-cosets met by the
   tuple; with_regev inserts a composed cocycle separator after each segment
   whose leading block carries the whole conjugated subgroup. */
ProbeResult build_global_probe(const Presentation& P, bool with_regev);

}  // namespace gradalg

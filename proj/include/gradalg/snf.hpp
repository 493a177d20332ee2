#pragma once

#include <optional>
#include <vector>

#include "gradalg/rational.hpp"

namespace gradalg {

using IntMat = std::vector<std::vector<BigInt>>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& A, const IntMat& B);
BigInt determinant(const IntMat& A);  // exact, fraction-free elimination

/* U*M*V = S with S diagonal, nonnegative, each diagonal entry dividing the
   next, and U, V unimodular (determinant +-1). Exact big integers
   throughout. */
struct SNFResult {
  IntMat U, S, V;
};
SNFResult smith_normal_form(const IntMat& M);

/* Integer solution of A z = d, or nullopt when none exists. */
std::optional<std::vector<BigInt>> solve_linear_diophantine(const IntMat& A,
                                                            const std::vector<BigInt>& d);

/* Solution x of A x = d (mod M), entries in 0..M-1, or nullopt. */
std::optional<std::vector<int>> solve_linear_mod(const IntMat& A, const std::vector<BigInt>& d,
                                                 int M);

/* Generators of the solution group { x mod M : A x = 0 (mod M) }. The list
   may contain redundant generators. */
std::vector<std::vector<int>> kernel_generators_mod(const IntMat& A, int M);

}  // namespace gradalg

#include "gradalg/snf.hpp"

#include <algorithm>

namespace gradalg {

IntMat identity_matrix(int n) {
  IntMat I(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; i++) I[i][i] = 1;
  return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  const int r = static_cast<int>(A.size());
  const int k = static_cast<int>(B.size());
  const int c = static_cast<int>(B[0].size());
  IntMat C(r, std::vector<BigInt>(c, 0));
  for (int i = 0; i < r; i++)
    for (int t = 0; t < k; t++) {
      if (A[i][t] == 0) continue;
      for (int j = 0; j < c; j++) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

BigInt determinant(const IntMat& A) {
  /* Bareiss fraction-free elimination */
  const int n = static_cast<int>(A.size());
  IntMat M(A);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (M[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (M[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

namespace {

struct Worker {
  IntMat S, U, V;
  int rows, cols;

  void row_sub(int i, int t, const BigInt& q) {  // row i -= q * row t
    for (int j = 0; j < cols; j++) S[i][j] -= q * S[t][j];
    for (int j = 0; j < rows; j++) U[i][j] -= q * U[t][j];
  }
  void col_sub(int j, int t, const BigInt& q) {  // col j -= q * col t
    for (int i = 0; i < rows; i++) S[i][j] -= q * S[i][t];
    for (int i = 0; i < cols; i++) V[i][j] -= q * V[i][t];
  }
  void row_swap(int i, int t) {
    std::swap(S[i], S[t]);
    std::swap(U[i], U[t]);
  }
  void col_swap(int j, int t) {
    for (int i = 0; i < rows; i++) std::swap(S[i][j], S[i][t]);
    for (int i = 0; i < cols; i++) std::swap(V[i][j], V[i][t]);
  }
  void row_negate(int i) {
    for (int j = 0; j < cols; j++) S[i][j] = -S[i][j];
    for (int j = 0; j < rows; j++) U[i][j] = -U[i][j];
  }

  bool find_pivot(int t) {
    int bi = -1, bj = -1;
    BigInt best = 0;
    for (int i = t; i < rows; i++)
      for (int j = t; j < cols; j++) {
        if (S[i][j] == 0) continue;
        BigInt a = abs(S[i][j]);
        if (bi < 0 || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  void run() {
    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; t++) {
      if (!find_pivot(t)) break;
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (int i = t + 1; i < rows; i++) {
          while (S[i][t] != 0) {
            BigInt q = S[i][t] / S[t][t];
            row_sub(i, t, q);
            if (S[i][t] != 0) row_swap(i, t);  // remainder is strictly smaller
          }
        }
        for (int j = t + 1; j < cols; j++) {
          while (S[t][j] != 0) {
            BigInt q = S[t][j] / S[t][t];
            col_sub(j, t, q);
            if (S[t][j] != 0) col_swap(j, t);
          }
        }
        for (int i = t + 1; i < rows && !dirty; i++)
          if (S[i][t] != 0) dirty = true;
        if (dirty) continue;
        /* force the divisibility chain: any entry not divisible by the pivot
           is pulled into row t and the elimination repeats */
        for (int i = t + 1; i < rows && !dirty; i++)
          for (int j = t + 1; j < cols; j++)
            if (S[i][j] % S[t][t] != 0) {
              row_sub(t, i, BigInt(-1));  // row t += row i
              dirty = true;
              break;
            }
      }
      if (S[t][t] < 0) row_negate(t);
    }
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& M) {
  const int rows = static_cast<int>(M.size());
  if (rows == 0) raise(ErrorKind::IndexOutOfRange, "empty matrix");
  const int cols = static_cast<int>(M[0].size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != cols) raise(ErrorKind::IndexOutOfRange, "ragged matrix");

  Worker w;
  w.S = M;
  w.rows = rows;
  w.cols = cols;
  w.U = identity_matrix(rows);
  w.V = identity_matrix(cols);
  w.run();
  return SNFResult{std::move(w.U), std::move(w.S), std::move(w.V)};
}

std::optional<std::vector<BigInt>> solve_linear_diophantine(const IntMat& A,
                                                            const std::vector<BigInt>& d) {
  const int rows = static_cast<int>(A.size());
  const int cols = static_cast<int>(A[0].size());
  if (static_cast<int>(d.size()) != rows) raise(ErrorKind::IndexOutOfRange, "rhs length");
  SNFResult snf = smith_normal_form(A);

  /* A z = d  <=>  S w = U d with z = V w */
  std::vector<BigInt> ud(rows, 0);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < rows; j++) ud[i] += snf.U[i][j] * d[j];

  std::vector<BigInt> w(cols, 0);
  const int steps = std::min(rows, cols);
  for (int i = 0; i < rows; i++) {
    BigInt s = i < steps ? snf.S[i][i] : BigInt(0);
    if (s == 0) {
      if (ud[i] != 0) return std::nullopt;
    } else {
      if (ud[i] % s != 0) return std::nullopt;
      w[i] = ud[i] / s;
    }
  }
  std::vector<BigInt> z(cols, 0);
  for (int i = 0; i < cols; i++)
    for (int j = 0; j < cols; j++) z[i] += snf.V[i][j] * w[j];
  return z;
}

std::optional<std::vector<int>> solve_linear_mod(const IntMat& A, const std::vector<BigInt>& d,
                                                 int M) {
  const int rows = static_cast<int>(A.size());
  const int cols = static_cast<int>(A[0].size());
  IntMat aug(rows, std::vector<BigInt>(cols + rows, 0));
  for (int i = 0; i < rows; i++) {
    for (int j = 0; j < cols; j++) aug[i][j] = A[i][j];
    aug[i][cols + i] = M;
  }
  auto z = solve_linear_diophantine(aug, d);
  if (!z) return std::nullopt;
  std::vector<int> x(cols);
  for (int j = 0; j < cols; j++) {
    BigInt r = (*z)[j] % M;
    if (r < 0) r += M;
    x[j] = static_cast<int>(r);
  }
  return x;
}

std::vector<std::vector<int>> kernel_generators_mod(const IntMat& A, int M) {
  const int rows = static_cast<int>(A.size());
  const int cols = static_cast<int>(A[0].size());
  SNFResult snf = smith_normal_form(A);
  std::vector<std::vector<int>> gens;
  const int steps = std::min(rows, cols);
  for (int i = 0; i < cols; i++) {
    BigInt s = i < steps ? snf.S[i][i] : BigInt(0);
    BigInt g = gcd(s, BigInt(M));
    BigInt scale = M / g;
    std::vector<int> gen(cols);
    bool nonzero = false;
    for (int r = 0; r < cols; r++) {
      BigInt v = (snf.V[r][i] * scale) % M;
      if (v < 0) v += M;
      gen[r] = static_cast<int>(v);
      if (gen[r]) nonzero = true;
    }
    if (nonzero) gens.push_back(std::move(gen));
  }
  return gens;
}

}  // namespace gradalg

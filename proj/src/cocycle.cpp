#include "gradalg/cocycle.hpp"

#include <numeric>
#include <queue>
#include <set>

namespace gradalg {

Cocycle Cocycle::make(GroupPtr group, int n, std::vector<std::vector<int>> exps) {
  if (!group) raise(ErrorKind::Internal, "cocycle needs a group");
  if (n < 1) raise(ErrorKind::RootOrderMismatch, "root order must be >= 1");
  const int m = group->order();
  if (static_cast<int>(exps.size()) != m)
    raise(ErrorKind::IndexOutOfRange, "exponent table must be |H| x |H|");
  for (const auto& row : exps) {
    if (static_cast<int>(row.size()) != m)
      raise(ErrorKind::IndexOutOfRange, "exponent table must be |H| x |H|");
    for (int v : row)
      if (v < 0 || v >= n)
        raise(ErrorKind::RootOrderMismatch, "exponent entry outside 0..n-1");
  }
  const int e = group->identity();
  for (int x = 0; x < m; x++)
    if (exps[e][x] != 0 || exps[x][e] != 0)
      raise(ErrorKind::ParseError, "cocycle not normalized at the identity");
  Cocycle c;
  c.group = std::move(group);
  c.n = n;
  c.exps = std::move(exps);
  return c;
}

Cocycle Cocycle::trivial(GroupPtr group, int n) {
  const int m = group->order();
  return make(std::move(group), n, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
}

Cocycle Cocycle::lift(int m) const {
  if (m % n != 0) raise(ErrorKind::NotADivisor, "lift target is not a multiple of root order");
  const int scale = m / n;
  auto scaled = exps;
  for (auto& row : scaled)
    for (int& v : row) v *= scale;
  return make(group, m, std::move(scaled));
}

Cocycle Cocycle::normalized_form() const {
  int g = n;
  for (const auto& row : exps)
    for (int v : row) g = std::gcd(g, v);
  auto reduced = exps;
  for (auto& row : reduced)
    for (int& v : row) v /= g;
  return make(group, n / g, std::move(reduced));
}

bool same_cocycle_function(const Cocycle& a, const Cocycle& b) {
  if (!a.group->same_table(*b.group)) return false;
  Cocycle na = a.normalized_form(), nb = b.normalized_form();
  return na.n == nb.n && na.exps == nb.exps;
}

static void require_same_group(const Cocycle& a, const Cocycle& b) {
  if (!a.group->same_table(*b.group))
    raise(ErrorKind::GroupMismatch, "cocycles live on different groups");
}

Cocycle cocycle_add(const Cocycle& a, const Cocycle& b) {
  require_same_group(a, b);
  const int n = lcm_int(a.n, b.n);
  Cocycle la = a.lift(n), lb = b.lift(n);
  for (size_t x = 0; x < la.exps.size(); x++)
    for (size_t y = 0; y < la.exps.size(); y++)
      la.exps[x][y] = (la.exps[x][y] + lb.exps[x][y]) % n;
  return la;
}

Cocycle cocycle_sub(const Cocycle& a, const Cocycle& b) {
  require_same_group(a, b);
  const int n = lcm_int(a.n, b.n);
  Cocycle la = a.lift(n), lb = b.lift(n);
  for (size_t x = 0; x < la.exps.size(); x++)
    for (size_t y = 0; y < la.exps.size(); y++)
      la.exps[x][y] = mod_nonneg(la.exps[x][y] - lb.exps[x][y], n);
  return la;
}

CocycleCheck check_cocycle(const Cocycle& c) {
  const Group& G = *c.group;
  const int m = G.order();
  for (int x = 0; x < m; x++)
    for (int y = 0; y < m; y++)
      for (int z = 0; z < m; z++) {
        const int lhs = c.exps[x][y] + c.exps[G.mul(x, y)][z];
        const int rhs = c.exps[y][z] + c.exps[x][G.mul(y, z)];
        if ((lhs - rhs) % c.n != 0) return CocycleCheck{false, {x, y, z}};
      }
  return CocycleCheck{};
}

CochainWitness CochainWitness::make(GroupPtr group, int n, std::vector<int> vals) {
  if (!group) raise(ErrorKind::Internal, "cochain needs a group");
  if (n < 1) raise(ErrorKind::RootOrderMismatch, "root order must be >= 1");
  if (static_cast<int>(vals.size()) != group->order())
    raise(ErrorKind::IndexOutOfRange, "cochain value list must cover the group");
  for (int v : vals)
    if (v < 0 || v >= n) raise(ErrorKind::RootOrderMismatch, "cochain value outside 0..n-1");
  if (vals[group->identity()] != 0)
    raise(ErrorKind::ParseError, "cochain not normalized at the identity");
  CochainWitness w;
  w.group = std::move(group);
  w.n = n;
  w.vals = std::move(vals);
  return w;
}

Cocycle coboundary(const CochainWitness& w) {
  const Group& G = *w.group;
  const int m = G.order();
  std::vector<std::vector<int>> exps(m, std::vector<int>(m, 0));
  for (int x = 0; x < m; x++)
    for (int y = 0; y < m; y++)
      exps[x][y] = mod_nonneg(w.vals[x] + w.vals[y] - w.vals[G.mul(x, y)], w.n);
  return Cocycle::make(w.group, w.n, std::move(exps));
}

ConjugatedCocycle conjugate_cocycle(const Cocycle& c, const Subgroup& H, int g) {
  const GroupPtr& G = H.parent();
  if (g < 0 || g >= G->order()) raise(ErrorKind::IndexOutOfRange, "conjugator outside the group");
  GroupPtr Hgrp = H.as_group();
  if (!Hgrp->same_table(*c.group))
    raise(ErrorKind::EmbeddingMismatch, "cocycle group does not match the embedded subgroup");

  Subgroup K = conjugate_subgroup(H, g);
  const int m = K.size();
  const int ginv = G->inv(g);
  std::vector<std::vector<int>> exps(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; a++)
    for (int b = 0; b < m; b++) {
      const int x = H.position_of(G->conj(ginv, K.element(a)));
      const int y = H.position_of(G->conj(ginv, K.element(b)));
      exps[a][b] = c.exps[x][y];
    }
  Cocycle conj = Cocycle::make(K.as_group(), c.n, std::move(exps));
  return ConjugatedCocycle{std::move(K), std::move(conj)};
}

std::optional<CochainWitness> cohomologous(const Cocycle& a, const Cocycle& b) {
  require_same_group(a, b);
  const int n = lcm_int(a.n, b.n);
  const Cocycle la = a.lift(n), lb = b.lift(n);
  const Group& G = *a.group;
  const int m = G.order();
  const int e = G.identity();
  if (m == 1) return CochainWitness::make(a.group, n, {0});

  std::vector<int> col(m, -1);
  int nv = 0;
  for (int h = 0; h < m; h++)
    if (h != e) col[h] = nv++;

  /* delta rho (x,y) = rho(x) + rho(y) - rho(xy), one row per pair */
  IntMat mat(m * m, std::vector<BigInt>(nv, 0));
  std::vector<BigInt> rhs(m * m, 0);
  for (int x = 0; x < m; x++)
    for (int y = 0; y < m; y++) {
      const int row = x * m + y;
      if (col[x] >= 0) mat[row][col[x]] += 1;
      if (col[y] >= 0) mat[row][col[y]] += 1;
      const int xy = G.mul(x, y);
      if (col[xy] >= 0) mat[row][col[xy]] -= 1;
      rhs[row] = mod_nonneg(lb.exps[x][y] - la.exps[x][y], n);
    }

  auto sol = solve_linear_mod(mat, rhs, n);
  if (!sol) return std::nullopt;

  std::vector<int> vals(m, 0);
  for (int h = 0; h < m; h++)
    if (h != e) vals[h] = (*sol)[col[h]];
  CochainWitness w = CochainWitness::make(a.group, n, std::move(vals));

  const Cocycle check = cocycle_add(la, coboundary(w));
  if (check.exps != lb.exps) raise(ErrorKind::Internal, "cohomologous witness failed replay");
  return w;
}

std::optional<CochainWitness> cohomologous_in_closure(const Cocycle& a, const Cocycle& b) {
  require_same_group(a, b);
  /* If beta/alpha = delta rho with rho valued anywhere in F*, then rho^n is a
     homomorphism H -> F* (n kills beta/alpha), so rho takes values in the
     n*exp(H)-th roots of unity. Searching at that root order is complete. */
  const int M = lcm_int(a.n, b.n) * group_exponent(a.group);
  return cohomologous(a.lift(M), b.lift(M));
}

int group_exponent(const GroupPtr& G) {
  int e = 1;
  for (int g = 0; g < G->order(); g++) e = lcm_int(e, G->element_order(g));
  return e;
}

std::vector<Cocycle> enumerate_cocycle_classes(const GroupPtr& H, int M) {
  const int m = H->order();
  const int e = H->identity();
  if (m == 1) return {Cocycle::trivial(H, M)};

  std::vector<std::vector<int>> var(m, std::vector<int>(m, -1));
  int nv = 0;
  for (int x = 0; x < m; x++)
    for (int y = 0; y < m; y++)
      if (x != e && y != e) var[x][y] = nv++;

  /* cocycle identity rows over the free (non-identity) entries */
  IntMat mat;
  for (int x = 0; x < m; x++)
    for (int y = 0; y < m; y++)
      for (int z = 0; z < m; z++) {
        std::vector<BigInt> row(nv, 0);
        auto add = [&](int p, int q, int sign) {
          if (var[p][q] >= 0) row[var[p][q]] += sign;
        };
        add(x, y, 1);
        add(H->mul(x, y), z, 1);
        add(y, z, -1);
        add(x, H->mul(y, z), -1);
        bool nonzero = false;
        for (const auto& v : row)
          if (v != 0) nonzero = true;
        if (nonzero) mat.push_back(std::move(row));
      }

  /* an empty constraint set (C2) leaves every table a cocycle */
  std::vector<std::vector<int>> gens;
  if (mat.empty()) {
    for (int i = 0; i < nv; i++) {
      std::vector<int> g(nv, 0);
      g[i] = 1;
      gens.push_back(std::move(g));
    }
  } else {
    gens = kernel_generators_mod(mat, M);
  }

  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> work;
  const std::vector<int> zero(nv, 0);
  seen.insert(zero);
  work.push(zero);
  while (!work.empty()) {
    const std::vector<int> cur = work.front();
    work.pop();
    for (const auto& g : gens) {
      std::vector<int> nxt(nv);
      for (int i = 0; i < nv; i++) nxt[i] = (cur[i] + g[i]) % M;
      if (seen.insert(nxt).second) {
        if (seen.size() > 200000) raise(ErrorKind::BudgetExceeded, "cocycle group too large");
        work.push(nxt);
      }
    }
  }

  auto to_cocycle = [&](const std::vector<int>& state) {
    std::vector<std::vector<int>> exps(m, std::vector<int>(m, 0));
    for (int x = 0; x < m; x++)
      for (int y = 0; y < m; y++)
        if (var[x][y] >= 0) exps[x][y] = state[var[x][y]];
    return Cocycle::make(H, M, std::move(exps));
  };

  std::vector<Cocycle> reps;
  reps.push_back(to_cocycle(zero));
  for (const auto& state : seen) {
    if (state == zero) continue;
    Cocycle c = to_cocycle(state);
    bool fresh = true;
    for (const auto& r : reps)
      if (cohomologous_in_closure(r, c)) {
        fresh = false;
        break;
      }
    if (fresh) {
      reps.push_back(std::move(c));
      if (reps.size() > 64) raise(ErrorKind::BudgetExceeded, "too many cocycle classes");
    }
  }
  return reps;
}

}  // namespace gradalg

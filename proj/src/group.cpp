#include "gradalg/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace gradalg {

GroupPtr Group::make(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                     bool skip_assoc_check_above_64) {
  const int m = static_cast<int>(table.size());
  if (m == 0) raise(ErrorKind::NotLatinSquare, "empty table");
  for (int i = 0; i < m; i++) {
    if (static_cast<int>(table[i].size()) != m)
      raise(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < m; j++)
      if (table[i][j] < 0 || table[i][j] >= m)
        raise(ErrorKind::NotLatinSquare, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") = " + std::to_string(table[i][j]) + " out of range");
  }
  for (int i = 0; i < m; i++) {
    std::vector<bool> seen_row(m, false), seen_col(m, false);
    for (int j = 0; j < m; j++) {
      if (seen_row[table[i][j]])
        raise(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats " + std::to_string(table[i][j]));
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]])
        raise(ErrorKind::NotLatinSquare, "column " + std::to_string(i) + " repeats " + std::to_string(table[j][i]));
      seen_col[table[j][i]] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < m; e++) {
    bool ok = true;
    for (int a = 0; a < m && ok; a++) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) raise(ErrorKind::NoIdentity, "no two-sided identity");

  if (m <= 64 || !skip_assoc_check_above_64) {
    for (int a = 0; a < m; a++)
      for (int b = 0; b < m; b++)
        for (int c = 0; c < m; c++)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            raise(ErrorKind::NotAssociative, "witness (" + std::to_string(a) + "," + std::to_string(b) +
                                                 "," + std::to_string(c) + ")");
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = m;
  g->identity_ = identity;
  g->table_ = std::move(table);
  g->inverse_.assign(m, -1);
  for (int a = 0; a < m; a++)
    for (int b = 0; b < m; b++)
      if (g->table_[a][b] == identity) g->inverse_[a] = b;
  for (int a = 0; a < m; a++)
    if (g->inverse_[a] < 0 || g->table_[g->inverse_[a]][a] != identity)
      raise(ErrorKind::Internal, "inverse of " + std::to_string(a) + " missing");

  if (labels.empty()) {
    labels.resize(m);
    for (int a = 0; a < m; a++) labels[a] = "g" + std::to_string(a);
  }
  if (static_cast<int>(labels.size()) != m)
    raise(ErrorKind::ParseError, "label count does not match order");
  g->labels_ = std::move(labels);
  return g;
}

int Group::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    k++;
  }
  return k;
}

int Group::index_of_label(const std::string& s) const {
  for (int a = 0; a < order_; a++)
    if (labels_[a] == s) return a;
  return -1;
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<int> elements) {
  if (!parent) raise(ErrorKind::GroupMismatch, "subgroup without parent");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) raise(ErrorKind::IndexOutOfRange, "empty subgroup");
  const int m = parent->order();
  for (int x : elements)
    if (x < 0 || x >= m) raise(ErrorKind::IndexOutOfRange, "subgroup element " + std::to_string(x));

  Subgroup H;
  H.parent_ = std::move(parent);
  H.elements_ = std::move(elements);
  H.pos_.assign(m, -1);
  for (int k = 0; k < static_cast<int>(H.elements_.size()); k++) H.pos_[H.elements_[k]] = k;

  for (int x : H.elements_) {
    if (H.pos_[H.parent_->inv(x)] < 0)
      raise(ErrorKind::GroupMismatch, "not closed under inverse at " + std::to_string(x));
    for (int y : H.elements_)
      if (H.pos_[H.parent_->mul(x, y)] < 0)
        raise(ErrorKind::GroupMismatch,
              "not closed under product at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return H;
}

GroupPtr Subgroup::as_group() const {
  const int k = size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; i++) {
    labels[i] = parent_->label(elements_[i]);
    for (int j = 0; j < k; j++) table[i][j] = pos_[parent_->mul(elements_[i], elements_[j])];
  }
  return Group::make(std::move(table), std::move(labels));
}

Subgroup subgroup_closure(const GroupPtr& G, const std::vector<int>& seed) {
  std::set<int> members;
  std::queue<int> work;
  auto push = [&](int x) {
    if (members.insert(x).second) work.push(x);
  };
  push(G->identity());
  for (int s : seed) {
    if (s < 0 || s >= G->order()) raise(ErrorKind::IndexOutOfRange, "seed element " + std::to_string(s));
    push(s);
  }
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    push(G->inv(x));
    for (int y : members) {
      push(G->mul(x, y));
      push(G->mul(y, x));
    }
  }
  return Subgroup::make(G, std::vector<int>(members.begin(), members.end()));
}

Subgroup normalizer(const GroupPtr& G, const Subgroup& H) {
  std::vector<int> result;
  for (int g = 0; g < G->order(); g++) {
    bool ok = true;
    for (int h : H.elements())
      if (!H.contains(G->conj(g, h))) {
        ok = false;
        break;
      }
    if (ok) result.push_back(g);
  }
  return Subgroup::make(G, std::move(result));
}

Subgroup conjugate_subgroup(const Subgroup& H, int g) {
  const GroupPtr& G = H.parent();
  if (g < 0 || g >= G->order()) raise(ErrorKind::IndexOutOfRange, "conjugator " + std::to_string(g));
  std::vector<int> elems;
  elems.reserve(H.size());
  for (int h : H.elements()) elems.push_back(G->conj(g, h));
  return Subgroup::make(G, std::move(elems));
}

Cosets right_cosets(const GroupPtr& G, const Subgroup& H) {
  if (H.parent().get() != G.get() && !H.parent()->same_table(*G))
    raise(ErrorKind::GroupMismatch, "subgroup of a different group");
  const int m = G->order();
  Cosets out;
  out.coset_of.assign(m, -1);
  for (int g = 0; g < m; g++) {
    if (out.coset_of[g] >= 0) continue;  // minimal elements appear first
    std::vector<int> coset;
    for (int h : H.elements()) coset.push_back(G->mul(h, g));
    std::sort(coset.begin(), coset.end());
    int id = static_cast<int>(out.cosets.size());
    for (int x : coset) out.coset_of[x] = id;
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  const int m = G->order();
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](const Subgroup& H) {
    if (seen.insert(H.elements()).second) out.push_back(H);
  };
  add(Subgroup::make(G, {G->identity()}));
  for (int a = 0; a < m; a++) add(subgroup_closure(G, {a}));
  /* pairs of generators suffice for groups of order <= 8 */
  for (int a = 0; a < m; a++)
    for (int b = a + 1; b < m; b++) add(subgroup_closure(G, {a, b}));
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.elements() < y.elements();
  });
  return out;
}

namespace {

GroupPtr from_perms(const std::vector<std::vector<int>>& perms, std::vector<std::string> labels) {
  const int m = static_cast<int>(perms.size());
  auto compose = [&](int i, int j) {  // i after j
    std::vector<int> p(perms[i].size());
    for (size_t x = 0; x < p.size(); x++) p[x] = perms[i][perms[j][x]];
    for (int k = 0; k < m; k++)
      if (perms[k] == p) return k;
    raise(ErrorKind::Internal, "permutation set not closed");
  };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) table[i][j] = compose(i, j);
  return Group::make(std::move(table), std::move(labels));
}

}  // namespace

GroupPtr trivial_group() { return Group::make({{0}}, {"e"}); }

GroupPtr cyclic_group(int n) {
  if (n < 1) raise(ErrorKind::IndexOutOfRange, "cyclic group order " + std::to_string(n));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; i++) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; j++) table[i][j] = (i + j) % n;
  }
  return Group::make(std::move(table), std::move(labels));
}

GroupPtr product_of_cyclics(int m, int n) {
  const int N = m * n;
  auto idx = [&](int a, int b) { return a * n + b; };
  std::vector<std::vector<int>> table(N, std::vector<int>(N));
  std::vector<std::string> labels(N);
  for (int a = 0; a < m; a++)
    for (int b = 0; b < n; b++) {
      if (m == 2 && n == 2) {
        static const char* kl[4] = {"e", "b", "a", "ab"};
        labels[idx(a, b)] = kl[a * 2 + b];
      } else {
        labels[idx(a, b)] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      for (int c = 0; c < m; c++)
        for (int d = 0; d < n; d++) table[idx(a, b)][idx(c, d)] = idx((a + c) % m, (b + d) % n);
    }
  return Group::make(std::move(table), std::move(labels));
}

GroupPtr symmetric_3() {
  return from_perms(
      {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}},
      {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

GroupPtr dihedral_4() {
  /* r = rotation by one step of the square, s = a reflection; s r s = r^-1 */
  std::vector<std::vector<int>> perms;
  std::vector<int> r = {1, 2, 3, 0}, s = {0, 3, 2, 1};
  std::vector<int> cur = {0, 1, 2, 3};
  for (int i = 0; i < 4; i++) {
    perms.push_back(cur);
    std::vector<int> next(4);
    for (int x = 0; x < 4; x++) next[x] = r[cur[x]];
    cur = next;
  }
  for (int i = 0; i < 4; i++) {
    std::vector<int> refl(4);
    for (int x = 0; x < 4; x++) refl[x] = perms[i][s[x]];
    perms.push_back(refl);
  }
  return from_perms(perms, {"e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"});
}

GroupPtr quaternion_8() {
  /* indices: 1,-1,i,-i,j,-j,k,-k */
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  auto base_mul = [&](int a, int b) -> int {
    /* products of the positive units 1=0,i=2,j=4,k=6; returns signed index */
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) return 1;  // i*i = j*j = k*k = -1
    static const int prod[3][3] = {{-1, 6, 5}, {7, -1, 2}, {4, 3, -1}};
    return prod[a / 2 - 1][b / 2 - 1];
  };
  for (int a = 0; a < 8; a++)
    for (int b = 0; b < 8; b++) {
      int v = base_mul(a & ~1, b & ~1);
      int sign = (a & 1) ^ (b & 1);
      table[a][b] = sign ? neg(v) : v;
    }
  return Group::make(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace gradalg

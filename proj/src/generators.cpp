#include "gradalg/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace gradalg {

namespace {

int parity_of(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); i++)
    for (size_t j = i + 1; j < p.size(); j++)
      if (p[i] > p[j]) inv++;
  return inv % 2;
}

std::vector<std::vector<int>> all_perms(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/* accumulated cocycle exponent of u_{h_ord(0)} ... u_{h_ord(s-1)}, and the
   final group element through product_out */
long long ordered_exponent(const Cocycle& c, const std::vector<int>& degrees,
                           const std::vector<int>& ord, int* product_out) {
  long long e = 0;
  int acc = degrees[ord[0]];
  for (size_t k = 1; k < ord.size(); k++) {
    e += c.exps[acc][degrees[ord[k]]];
    acc = c.group->mul(acc, degrees[ord[k]]);
  }
  *product_out = acc;
  return e;
}

void check_binomial_inputs(const Cocycle& c, const std::vector<int>& degrees,
                           const std::vector<int>& pi) {
  const int s = static_cast<int>(degrees.size());
  if (s < 2) raise(ErrorKind::ParseError, "binomial needs at least two factors");
  for (int d : degrees)
    if (d < 0 || d >= c.group->order()) raise(ErrorKind::IndexOutOfRange, "degree out of range");
  if (static_cast<int>(pi.size()) != s)
    raise(ErrorKind::ParseError, "permutation length does not match the degrees");
  std::vector<int> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < s; k++)
    if (sorted[k] != k) raise(ErrorKind::ParseError, "pi is not a permutation");
}

}  // namespace

CycloScalar binomial_lambda(const Cocycle& c, const std::vector<int>& degrees,
                            const std::vector<int>& pi) {
  check_binomial_inputs(c, degrees, pi);
  std::vector<int> id(degrees.size());
  std::iota(id.begin(), id.end(), 0);
  int prod_id = 0, prod_pi = 0;
  const long long e_id = ordered_exponent(c, degrees, id, &prod_id);
  const long long e_pi = ordered_exponent(c, degrees, pi, &prod_pi);
  if (prod_id != prod_pi)
    raise(ErrorKind::ProductsDisagree, "the two factor orders multiply to different elements");
  return CycloScalar::root_of_unity(c.n, e_id - e_pi);
}

GradedPolynomial build_binomial(const Cocycle& c, const std::vector<int>& degrees,
                                const std::vector<int>& pi) {
  const CycloScalar lambda = binomial_lambda(c, degrees, pi);
  const int s = static_cast<int>(degrees.size());
  std::vector<GradedVariable> vars;
  for (int k = 0; k < s; k++) vars.push_back({k, degrees[k], VarTag::Plain});
  GradedMonomial straight;
  straight.factors.resize(s);
  std::iota(straight.factors.begin(), straight.factors.end(), 0);
  GradedMonomial permuted;
  permuted.coefficient = -lambda;
  permuted.factors = pi;
  return GradedPolynomial::make(std::move(vars), {std::move(straight), std::move(permuted)});
}

std::optional<BinomialSpec> find_separating_binomial(const Cocycle& alpha, const Cocycle& beta) {
  if (!beta.group->same_table(*alpha.group))
    raise(ErrorKind::GroupMismatch, "cocycles live on different groups");
  const GroupPtr& H = alpha.group;
  const int m = H->order();

  auto separates = [&](const std::vector<int>& degrees, const std::vector<int>& pi) {
    return !equal_lifted(binomial_lambda(alpha, degrees, pi), binomial_lambda(beta, degrees, pi));
  };

  for (int a = 0; a < m; a++)
    for (int b = 0; b < m; b++)
      if (H->mul(a, b) == H->mul(b, a) && separates({a, b}, {1, 0}))
        return BinomialSpec{{a, b}, {1, 0}};

  for (int s = 3; s <= 4; s++) {
    const std::vector<std::vector<int>> perms = all_perms(s);
    std::vector<int> degrees(s, 0);
    while (true) {
      int prod = H->identity();
      for (int d : degrees) prod = H->mul(prod, d);
      for (const std::vector<int>& pi : perms) {
        int prod_pi = H->identity();
        for (int k : pi) prod_pi = H->mul(prod_pi, degrees[k]);
        if (prod_pi != prod) continue;
        if (separates(degrees, pi)) return BinomialSpec{degrees, pi};
      }
      int k = s;
      while (k > 0 && ++degrees[k - 1] == m) degrees[--k] = 0;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

GradedPolynomial regev(int r, int h, int e) {
  if (r < 1) raise(ErrorKind::ParseError, "matrix size must be at least 1");
  if (r > 2) raise(ErrorKind::BudgetExceeded, "expansion has (r^2!)^2 monomials beyond r = 2");
  const int m = r * r;
  std::vector<GradedVariable> vars;
  for (int t = 0; t < m; t++)
    vars.push_back({t, t == 0 ? h : e, t == 0 ? VarTag::Designated : VarTag::Plain});
  for (int t = 0; t < m; t++) vars.push_back({m + t, e, VarTag::Plain});

  const std::vector<std::vector<int>> perms = all_perms(m);
  std::vector<GradedMonomial> monomials;
  for (const std::vector<int>& sigma : perms)
    for (const std::vector<int>& tau : perms) {
      GradedMonomial mono;
      const int sign = (parity_of(sigma) + parity_of(tau)) % 2;
      mono.coefficient = CycloScalar::from_rational(1, Rational(sign ? -1 : 1));
      mono.factors.reserve(2 * m);
      /* slot pattern x y^(m-1) x^(m-1) y; the strictly alternating pattern
         x y x y .. sums to zero on the 2x2 matrix units */
      mono.factors.push_back(sigma[0]);
      for (int t = 0; t + 1 < m; t++) mono.factors.push_back(m + tau[t]);
      for (int t = 1; t < m; t++) mono.factors.push_back(sigma[t]);
      mono.factors.push_back(m + tau[m - 1]);
      monomials.push_back(std::move(mono));
    }
  return GradedPolynomial::make(std::move(vars), std::move(monomials));
}

namespace {

GradedPolynomial shift_ids(const GradedPolynomial& p, int offset) {
  GradedPolynomial out = p;
  for (GradedVariable& v : out.variables) v.id += offset;
  for (GradedMonomial& m : out.monomials)
    for (int& f : m.factors) f += offset;
  for (auto& entry : out.composition) {
    entry.first += offset;
    entry.second = shift_ids(entry.second, offset);
  }
  for (std::vector<int>& s : out.alternation_sets)
    for (int& x : s) x += offset;
  return out;
}

int id_bound(const GradedPolynomial& p) {
  int b = 0;
  for (const GradedVariable& v : p.variables) b = std::max(b, v.id + 1);
  for (const auto& entry : p.composition) b = std::max(b, id_bound(entry.second));
  return b;
}

}  // namespace

GradedPolynomial build_cocycle_separator(const Cocycle& alpha,
                                         const std::vector<Cocycle>& beta_list, int r) {
  if (r < 1) raise(ErrorKind::ParseError, "matrix size must be at least 1");
  for (const Cocycle& beta : beta_list) {
    if (!beta.group->same_table(*alpha.group))
      raise(ErrorKind::GroupMismatch, "cocycles live on different groups");
    if (cohomologous_in_closure(alpha, beta))
      raise(ErrorKind::CocyclesCohomologous, "no binomial can tell cohomologous cocycles apart");
  }
  const int e = alpha.group->identity();

  if (beta_list.empty()) {
    GradedMonomial mono;
    mono.factors = {0};
    GradedPolynomial p =
        GradedPolynomial::make({{0, e, VarTag::Plain}}, {std::move(mono)});
    p.degenerate = true;
    return p;
  }

  std::vector<GradedVariable> vars;
  std::vector<GradedMonomial> monomials{GradedMonomial{}};
  int next_id = 0;
  for (const Cocycle& beta : beta_list) {
    std::optional<BinomialSpec> spec = find_separating_binomial(alpha, beta);
    if (!spec) raise(ErrorKind::BudgetExceeded, "no separating binomial of length at most 4");
    /* an identity of beta's twisted algebra, a nonidentity of alpha's */
    const GradedPolynomial part = shift_ids(build_binomial(beta, spec->degrees, spec->pi), next_id);
    next_id += static_cast<int>(part.variables.size());
    vars.insert(vars.end(), part.variables.begin(), part.variables.end());
    std::vector<GradedMonomial> expanded;
    for (const GradedMonomial& left : monomials)
      for (const GradedMonomial& right : part.monomials) {
        GradedMonomial mono;
        mono.coefficient = mul_lifted(left.coefficient, right.coefficient);
        mono.factors = left.factors;
        mono.factors.insert(mono.factors.end(), right.factors.begin(), right.factors.end());
        expanded.push_back(std::move(mono));
      }
    monomials = std::move(expanded);
  }

  std::vector<std::pair<int, GradedPolynomial>> composition;
  if (r >= 2)
    for (const GradedVariable& v : vars) {
      composition.emplace_back(v.id, shift_ids(regev(r, v.degree, e), next_id));
      next_id += 2 * r * r;
    }
  return GradedPolynomial::make(std::move(vars), std::move(monomials), std::move(composition));
}

namespace {

struct WalkItem {
  StdBasisElement b;
  VarTag tag;
};

struct LabeledEdge {
  int to = 0;
  int h = 0;
};

/* Deterministic Hierholzer over a labeled multidigraph; the caller
   guarantees balance and connectivity on the edge support. */
std::vector<std::array<int, 3>> euler_circuit(std::map<int, std::vector<LabeledEdge>> adj,
                                              int start, size_t edge_count) {
  for (auto& [v, lst] : adj)
    std::sort(lst.begin(), lst.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
      return a.to != b.to ? a.to < b.to : a.h < b.h;
    });
  std::map<int, size_t> used;
  std::vector<int> vstack{start};
  std::vector<std::array<int, 3>> estack, circuit;
  while (!vstack.empty()) {
    const int v = vstack.back();
    std::vector<LabeledEdge>& lst = adj[v];
    size_t& k = used[v];
    if (k < lst.size()) {
      vstack.push_back(lst[k].to);
      estack.push_back({v, lst[k].to, lst[k].h});
      k++;
    } else {
      vstack.pop_back();
      if (!estack.empty()) {
        circuit.push_back(estack.back());
        estack.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != edge_count)
    raise(ErrorKind::Internal, "element walk failed to cover its component");
  return circuit;
}

}  // namespace

ProbeResult build_block_probe(const Presentation& P, const Subgroup& T) {
  const GroupPtr& G = P.ambient;
  const Subgroup& H = P.subgroup;
  const BlockDecomposition dec = block_decomposition(P, T);
  const int e_amb = G->identity();
  const int e_pos = H.position_of(e_amb);
  const Cosets hc = right_cosets(G, H);

  std::vector<GradedVariable> vars;
  std::vector<int> factors;
  std::vector<std::vector<int>> sets;
  BasisAssignment witness;
  int next_id = 0;

  auto push_item = [&](const StdBasisElement& b, VarTag tag) {
    vars.push_back({next_id, degree_of(P, b), tag});
    factors.push_back(next_id);
    witness[next_id] = b;
    return next_id++;
  };

  int prev_end = -1;
  for (const Block& blk : dec.blocks) {
    std::map<int, std::vector<int>> by_coset;
    for (int i : blk.indices) by_coset[hc.coset_of[P.tuple[i]]].push_back(i);
    std::vector<std::vector<int>> groups;
    for (auto& [cid, idxs] : by_coset) groups.push_back(idxs);
    std::sort(groups.begin(), groups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });

    std::vector<WalkItem> walk;
    /* identity-weight circuits, one complete loop-digraph per H-coset */
    for (size_t gi = 0; gi < groups.size(); gi++) {
      if (gi > 0) {
        const int from = groups[gi - 1].front();
        const int to = groups[gi].front();
        int hsel = -1;
        for (int hp = 0; hp < H.size() && hsel < 0; hp++)
          if (T.contains(degree_of(P, {hp, from, to}))) hsel = hp;
        if (hsel < 0) raise(ErrorKind::Internal, "no connector between walk anchors");
        walk.push_back({{hsel, from, to}, VarTag::Bridge});
      }
      std::map<int, std::vector<LabeledEdge>> adj;
      for (int i : groups[gi])
        for (int j : groups[gi])
          adj[i].push_back({j, H.position_of(G->mul(P.tuple[i], G->inv(P.tuple[j])))});
      const size_t cnt = groups[gi].size() * groups[gi].size();
      for (const std::array<int, 3>& edge : euler_circuit(adj, groups[gi].front(), cnt))
        walk.push_back({{edge[2], edge[0], edge[1]}, VarTag::Designated});
    }
    /* everything else in one Eulerian circuit from the walk's current row */
    std::map<int, std::vector<LabeledEdge>> suffix;
    size_t suffix_count = 0;
    for (int i : blk.indices)
      for (int j : blk.indices)
        for (int hp = 0; hp < H.size(); hp++) {
          const int d = degree_of(P, {hp, i, j});
          if (d != e_amb && T.contains(d)) {
            suffix[i].push_back({j, hp});
            suffix_count++;
          }
        }
    if (suffix_count > 0) {
      const int anchor = groups.back().front();
      for (const std::array<int, 3>& edge : euler_circuit(suffix, anchor, suffix_count))
        walk.push_back({{edge[2], edge[0], edge[1]}, VarTag::Designated});
    }

    const int k = static_cast<int>(blk.indices.size());
    int designated = 0;
    for (const WalkItem& it : walk)
      if (it.tag == VarTag::Designated) designated++;
    if (designated != blk.pages * k * k)
      raise(ErrorKind::Internal, "walk does not designate the whole block");

    const int start = walk.front().b.i;
    if (prev_end >= 0) push_item({e_pos, prev_end, start}, VarTag::Bridge);
    push_item({e_pos, start, start}, VarTag::Frame);
    std::map<int, std::vector<int>> designated_by_weight;
    for (const WalkItem& it : walk) {
      const int id = push_item(it.b, it.tag);
      if (it.tag == VarTag::Designated) designated_by_weight[degree_of(P, it.b)].push_back(id);
      push_item({e_pos, it.b.j, it.b.j}, VarTag::Frame);
    }
    prev_end = walk.back().b.j;
    for (auto& [d, ids] : designated_by_weight) sets.push_back(std::move(ids));
  }

  AlgebraElement acc = AlgebraElement::basis(witness.at(factors.front()));
  for (size_t t = 1; t < factors.size(); t++)
    acc = multiply(P, acc, AlgebraElement::basis(witness.at(factors[t])));
  if (acc.is_zero()) raise(ErrorKind::Internal, "probe witness evaluated to zero");

  GradedMonomial mono;
  mono.factors = factors;
  GradedPolynomial poly =
      GradedPolynomial::make(std::move(vars), {std::move(mono)}, {}, std::move(sets));
  return {std::move(poly), std::move(witness)};
}

ProbeResult build_global_probe(const Presentation& P, bool with_regev) {
  const GroupPtr& G = P.ambient;
  const Subgroup& H = P.subgroup;
  const Subgroup NH = normalizer(G, H);
  const Cosets nc = right_cosets(G, NH);
  const int e_pos = H.position_of(G->identity());

  std::map<int, std::vector<int>> by_coset;
  for (int t = 0; t < P.matrix_size(); t++) by_coset[nc.coset_of[P.tuple[t]]].push_back(t);
  std::vector<std::vector<int>> bigs;
  for (auto& [cid, idxs] : by_coset) bigs.push_back(idxs);
  std::sort(bigs.begin(), bigs.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });

  std::vector<GradedVariable> vars;
  std::vector<int> factors;
  std::vector<std::pair<int, GradedPolynomial>> composition;
  std::vector<std::vector<int>> sets;
  BasisAssignment witness;
  std::map<int, AlgebraElement> node_values;
  int next_id = 0;

  auto push_item = [&](const StdBasisElement& b, VarTag tag) {
    vars.push_back({next_id, degree_of(P, b), tag});
    factors.push_back(next_id);
    witness[next_id] = b;
    return next_id++;
  };

  int prev_end = -1;
  for (const std::vector<int>& big : bigs) {
    const int i0 = big.front();
    const Subgroup T = conjugate_subgroup(H, G->inv(P.tuple[i0]));
    ProbeResult seg = build_block_probe(P, T);
    const std::vector<int>& seg_factors = seg.polynomial.monomials.front().factors;
    const int seg_start = seg.witness.at(seg_factors.front()).i;
    const int seg_end = seg.witness.at(seg_factors.back()).j;

    if (prev_end >= 0) push_item({e_pos, prev_end, seg_start}, VarTag::Bridge);
    const int offset = next_id;
    const GradedPolynomial sp = shift_ids(seg.polynomial, offset);
    vars.insert(vars.end(), sp.variables.begin(), sp.variables.end());
    const std::vector<int>& spf = sp.monomials.front().factors;
    factors.insert(factors.end(), spf.begin(), spf.end());
    sets.insert(sets.end(), sp.alternation_sets.begin(), sp.alternation_sets.end());
    for (const auto& [id, b] : seg.witness) witness[id + offset] = b;
    next_id = offset + static_cast<int>(sp.variables.size());
    prev_end = seg_end;

    if (!with_regev) continue;

    /* the T-block holding the leading index carries the whole of T */
    const BlockDecomposition dec = block_decomposition(P, T);
    const Block* lead = nullptr;
    for (const Block& b : dec.blocks)
      if (std::binary_search(b.indices.begin(), b.indices.end(), i0)) lead = &b;
    if (!lead || lead->pages != H.size())
      raise(ErrorKind::Internal, "leading block does not carry the conjugated subgroup");

    const Cocycle& alpha_b = lead->block_presentation.cocycle;
    const int M = lcm_int(group_exponent(alpha_b.group), alpha_b.n);
    std::vector<Cocycle> betas;
    for (const Cocycle& c : enumerate_cocycle_classes(alpha_b.group, M))
      if (!cohomologous_in_closure(alpha_b, c)) betas.push_back(c);
    if (betas.empty()) continue;

    const int kr = static_cast<int>(lead->indices.size());
    GradedPolynomial R = build_cocycle_separator(alpha_b, betas, kr);
    std::map<int, int> degree_map;
    for (int a = 0; a < lead->omega.size(); a++) degree_map[a] = lead->omega.element(a);
    R = remap_degrees(R, degree_map);

    /* witness: everything inside the leading block; regev leaves fill the
       block's matrix positions bijectively */
    const std::vector<int>& rows = lead->indices;
    auto block_elem = [&](int d, int i, int j) {
      const int h = G->mul(G->mul(P.tuple[i], d), G->inv(P.tuple[j]));
      const int hp = H.position_of(h);
      if (hp < 0) raise(ErrorKind::Internal, "weight escapes the leading block");
      return StdBasisElement{hp, i, j};
    };
    BasisAssignment r_witness;
    std::map<int, AlgebraElement> leaf_values;
    for (const GradedVariable& zv : R.variables) {
      if (const GradedPolynomial* sub = R.subpolynomial(zv.id)) {
        const std::vector<int> lv = sub->leaf_ids();
        const int m = kr * kr;
        if (static_cast<int>(lv.size()) != 2 * m)
          raise(ErrorKind::Internal, "unexpected composed leaf count");
        for (int t = 0; t < 2 * m; t++) {
          const int pos = t % m;
          const StdBasisElement b =
              block_elem(sub->leaf_degree(lv[t]), rows[pos / kr], rows[pos % kr]);
          r_witness[lv[t]] = b;
          leaf_values.emplace(lv[t], AlgebraElement::basis(b));
        }
      } else {
        const StdBasisElement b = block_elem(zv.degree, rows.front(), rows.front());
        r_witness[zv.id] = b;
        leaf_values.emplace(zv.id, AlgebraElement::basis(b));
      }
    }
    const AlgebraElement value = evaluate(R, P, leaf_values);
    int vrow = -1;
    for (int q : rows) {
      for (const auto& [b, c] : value.terms)
        if (b.i == q && b.j == q) vrow = q;
      if (vrow >= 0) break;
    }
    if (vrow < 0) raise(ErrorKind::Internal, "separator value has no diagonal part");
    const std::optional<int> rdeg = homogeneous_degree(R, G);
    if (!rdeg) raise(ErrorKind::Internal, "separator is not homogeneous");

    push_item({e_pos, prev_end, vrow}, VarTag::Bridge);
    push_item({e_pos, vrow, vrow}, VarTag::Frame);
    const int base = next_id;
    const int node_id = base + id_bound(R);
    R = shift_ids(R, base);
    for (const auto& [id, b] : r_witness) witness[id + base] = b;
    vars.push_back({node_id, *rdeg, VarTag::Plain});
    factors.push_back(node_id);
    composition.emplace_back(node_id, std::move(R));
    node_values[node_id] = value;
    next_id = node_id + 1;
    push_item({e_pos, vrow, vrow}, VarTag::Frame);
    prev_end = vrow;
  }

  AlgebraElement acc;
  for (size_t t = 0; t < factors.size(); t++) {
    const auto nv = node_values.find(factors[t]);
    const AlgebraElement val =
        nv != node_values.end() ? nv->second : AlgebraElement::basis(witness.at(factors[t]));
    acc = t == 0 ? val : multiply(P, acc, val);
  }
  if (acc.is_zero()) raise(ErrorKind::Internal, "probe witness evaluated to zero");

  GradedMonomial mono;
  mono.factors = factors;
  GradedPolynomial poly = GradedPolynomial::make(std::move(vars), {std::move(mono)},
                                                 std::move(composition), std::move(sets));
  return {std::move(poly), std::move(witness)};
}

}  // namespace gradalg

#include "gradalg/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gradalg {

Presentation Presentation::make(GroupPtr ambient, Subgroup subgroup, Cocycle cocycle,
                                std::vector<int> tuple) {
  if (!ambient) raise(ErrorKind::Internal, "presentation needs an ambient group");
  if (!subgroup.parent() || !subgroup.parent()->same_table(*ambient))
    raise(ErrorKind::GroupMismatch, "subgroup does not live in the ambient group");
  if (!cocycle.group->same_table(*subgroup.as_group()))
    raise(ErrorKind::EmbeddingMismatch, "cocycle group does not match the subgroup");
  CocycleCheck cc = check_cocycle(cocycle);
  if (!cc.ok) {
    std::ostringstream os;
    os << "cocycle identity fails at (" << cc.witness[0] << "," << cc.witness[1] << ","
       << cc.witness[2] << ")";
    raise(ErrorKind::ParseError, os.str());
  }
  if (tuple.empty()) raise(ErrorKind::ParseError, "tuple must be nonempty");
  for (int p : tuple)
    if (p < 0 || p >= ambient->order())
      raise(ErrorKind::IndexOutOfRange, "tuple entry outside the ambient group");
  Presentation P;
  P.ambient = std::move(ambient);
  P.subgroup = std::move(subgroup);
  P.cocycle = std::move(cocycle);
  P.tuple = std::move(tuple);
  return P;
}

bool Presentation::literally_equal(const Presentation& o) const {
  return ambient->same_table(*o.ambient) && subgroup.elements() == o.subgroup.elements() &&
         tuple == o.tuple && same_cocycle_function(cocycle, o.cocycle);
}

AlgebraElement AlgebraElement::basis(const StdBasisElement& b, int root_order) {
  AlgebraElement x;
  x.terms.emplace(b, CycloScalar::one(root_order));
  return x;
}

void AlgebraElement::add_term(const StdBasisElement& b, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(b);
  if (it == terms.end()) {
    terms.emplace(b, c);
    return;
  }
  CycloScalar sum = add_lifted(it->second, c);
  if (sum.is_zero())
    terms.erase(it);
  else
    it->second = std::move(sum);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (terms.size() != o.terms.size()) return false;
  auto jt = o.terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!equal_lifted(it->second, jt->second)) return false;
  }
  return true;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = x;
  for (const auto& [b, c] : y.terms) out.add_term(b, c);
  return out;
}

AlgebraElement scale(const CycloScalar& c, const AlgebraElement& x) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [b, v] : x.terms) out.add_term(b, mul_lifted(c, v));
  return out;
}

int degree_of(const Presentation& P, const StdBasisElement& b) {
  const int r = P.matrix_size();
  if (b.h < 0 || b.h >= P.subgroup.size() || b.i < 0 || b.i >= r || b.j < 0 || b.j >= r)
    raise(ErrorKind::IndexOutOfRange, "basis element outside the presentation");
  const Group& G = *P.ambient;
  const int h = P.subgroup.element(b.h);
  return G.mul(G.mul(G.inv(P.tuple[b.i]), h), P.tuple[b.j]);
}

AlgebraElement multiply(const Presentation& P, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  const Group& H = *P.cocycle.group;
  for (const auto& [bx, cx] : x.terms)
    for (const auto& [by, cy] : y.terms) {
      if (bx.j != by.i) continue;
      CycloScalar c = mul_lifted(mul_lifted(cx, cy), P.cocycle.value(bx.h, by.h));
      out.add_term(StdBasisElement{H.mul(bx.h, by.h), bx.i, by.j}, c);
    }
  return out;
}

std::map<int, int> component_dimensions(const Presentation& P) {
  std::map<int, int> dims;
  for (int g = 0; g < P.ambient->order(); g++) dims[g] = 0;
  for (const StdBasisElement& b : standard_basis(P)) dims[degree_of(P, b)]++;
  return dims;
}

std::vector<StdBasisElement> standard_basis(const Presentation& P) {
  std::vector<StdBasisElement> out;
  const int r = P.matrix_size();
  out.reserve(P.dim());
  for (int h = 0; h < P.subgroup.size(); h++)
    for (int i = 0; i < r; i++)
      for (int j = 0; j < r; j++) out.push_back(StdBasisElement{h, i, j});
  return out;
}

std::vector<StdBasisElement> basis_of_degree(const Presentation& P, int g) {
  std::vector<StdBasisElement> out;
  for (const StdBasisElement& b : standard_basis(P))
    if (degree_of(P, b) == g) out.push_back(b);
  return out;
}

Move Move::permute(std::vector<int> perm) {
  Move m;
  m.kind = Kind::Permute;
  m.perm = std::move(perm);
  return m;
}
Move Move::coset_shift(int index, int shift) {
  Move m;
  m.kind = Kind::CosetShift;
  m.index = index;
  m.shift = shift;
  return m;
}
Move Move::conjugate(int g) {
  Move m;
  m.kind = Kind::Conjugate;
  m.conjugator = g;
  return m;
}
Move Move::cocycle_replace(CochainWitness rho) {
  Move m;
  m.kind = Kind::CocycleReplace;
  m.rho = std::move(rho);
  return m;
}

Presentation apply_move(const Presentation& P, const Move& m) {
  const Group& G = *P.ambient;
  const int r = P.matrix_size();
  switch (m.kind) {
    case Move::Kind::Permute: {
      if (static_cast<int>(m.perm.size()) != r)
        raise(ErrorKind::InvalidMoveParameter, "permutation length differs from tuple length");
      std::vector<bool> hit(r, false);
      for (int v : m.perm) {
        if (v < 0 || v >= r || hit[v])
          raise(ErrorKind::InvalidMoveParameter, "not a permutation");
        hit[v] = true;
      }
      std::vector<int> t(r);
      for (int k = 0; k < r; k++) t[k] = P.tuple[m.perm[k]];
      return Presentation::make(P.ambient, P.subgroup, P.cocycle, std::move(t));
    }
    case Move::Kind::CosetShift: {
      if (m.index < 0 || m.index >= r)
        raise(ErrorKind::InvalidMoveParameter, "shift index outside the tuple");
      if (m.shift < 0 || m.shift >= G.order() || !P.subgroup.contains(m.shift))
        raise(ErrorKind::InvalidMoveParameter, "shift element must lie in H");
      std::vector<int> t = P.tuple;
      t[m.index] = G.mul(m.shift, t[m.index]);
      return Presentation::make(P.ambient, P.subgroup, P.cocycle, std::move(t));
    }
    case Move::Kind::Conjugate: {
      if (m.conjugator < 0 || m.conjugator >= G.order())
        raise(ErrorKind::InvalidMoveParameter, "conjugator outside the group");
      ConjugatedCocycle cc = conjugate_cocycle(P.cocycle, P.subgroup, m.conjugator);
      std::vector<int> t(r);
      for (int k = 0; k < r; k++) t[k] = G.mul(m.conjugator, P.tuple[k]);
      return Presentation::make(P.ambient, std::move(cc.subgroup), std::move(cc.cocycle),
                                std::move(t));
    }
    case Move::Kind::CocycleReplace: {
      if (!m.rho) raise(ErrorKind::InvalidMoveParameter, "missing replacement witness");
      if (!m.rho->group->same_table(*P.cocycle.group))
        raise(ErrorKind::InvalidMoveParameter, "witness group does not match H");
      return Presentation::make(P.ambient, P.subgroup, cocycle_add(P.cocycle, coboundary(*m.rho)),
                                P.tuple);
    }
  }
  raise(ErrorKind::Internal, "unreachable move kind");
}

BlockDecomposition block_decomposition(const Presentation& P, const Subgroup& N) {
  const Group& G = *P.ambient;
  if (!N.parent() || !N.parent()->same_table(G))
    raise(ErrorKind::GroupMismatch, "N does not live in the ambient group");
  const int r = P.matrix_size();

  auto related = [&](int i, int j) {
    for (int h = 0; h < P.subgroup.size(); h++) {
      const int x = G.mul(G.mul(G.inv(P.tuple[i]), P.subgroup.element(h)), P.tuple[j]);
      if (N.contains(x)) return true;
    }
    return false;
  };

  std::vector<int> cls(r, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < r; i++) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.push_back({i});
    cls[i] = id;
    for (int j = i + 1; j < r; j++)
      if (cls[j] < 0 && related(i, j)) {
        cls[j] = id;
        classes[id].push_back(j);
      }
  }

  BlockDecomposition out;
  out.N = N;
  GroupPtr Ngrp = N.as_group();
  for (const std::vector<int>& indices : classes) {
    Block blk;
    blk.indices = indices;
    const int g1 = P.tuple[indices[0]];
    const int g1i = G.inv(g1);

    std::vector<int> omega_elems;
    for (int h = 0; h < P.subgroup.size(); h++) {
      const int x = G.mul(G.mul(g1i, P.subgroup.element(h)), g1);
      if (N.contains(x)) omega_elems.push_back(x);
    }
    std::sort(omega_elems.begin(), omega_elems.end());
    blk.omega = Subgroup::make(P.ambient, omega_elems);
    blk.pages = blk.omega.size();

    /* |g_i^-1 H g_j intersect N| is constant across the class */
    for (int i : indices)
      for (int j : indices) {
        int count = 0;
        for (int h = 0; h < P.subgroup.size(); h++) {
          const int x = G.mul(G.mul(G.inv(P.tuple[i]), P.subgroup.element(h)), P.tuple[j]);
          if (N.contains(x)) count++;
        }
        if (count != blk.pages)
          raise(ErrorKind::Internal, "page count varies inside a block");
      }

    for (int j : indices) {
      int best = -1;
      for (int h = 0; h < P.subgroup.size(); h++) {
        const int x = G.mul(G.mul(g1i, P.subgroup.element(h)), P.tuple[j]);
        if (N.contains(x) && (best < 0 || x < best)) best = x;
      }
      if (best < 0) raise(ErrorKind::Internal, "related index without a coset witness");
      blk.coset_tuple.push_back(best);
    }

    /* block presentation over N: omega re-indexed, cocycle conjugated by
       g1^-1 then restricted, tuple in N coordinates */
    std::vector<int> om_pos;
    for (int x : blk.omega.elements()) om_pos.push_back(N.position_of(x));
    Subgroup omega_in_N = Subgroup::make(Ngrp, om_pos);

    ConjugatedCocycle conj = conjugate_cocycle(P.cocycle, P.subgroup, g1i);
    const int w = blk.omega.size();
    std::vector<std::vector<int>> exps(w, std::vector<int>(w, 0));
    for (int a = 0; a < w; a++)
      for (int b = 0; b < w; b++)
        exps[a][b] = conj.cocycle.exps[conj.subgroup.position_of(blk.omega.element(a))]
                                      [conj.subgroup.position_of(blk.omega.element(b))];
    Cocycle oc = Cocycle::make(omega_in_N.as_group(), P.cocycle.n, std::move(exps));

    std::vector<int> t;
    for (int x : blk.coset_tuple) t.push_back(N.position_of(x));
    blk.block_presentation = Presentation::make(Ngrp, std::move(omega_in_N), std::move(oc),
                                                std::move(t));
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

namespace {

/* label 0 is pinned to the trivial class; the others permute freely */
void relabelings(int c, std::vector<std::vector<int>>& out) {
  std::vector<int> p(c);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

}  // namespace

InvariantReport invariant_report(const Presentation& P) {
  const Group& G = *P.ambient;
  InvariantReport rep;
  rep.dims = component_dimensions(P);
  rep.h_order = P.subgroup.size();

  Cosets hc = right_cosets(P.ambient, P.subgroup);
  std::map<int, int> mult;
  for (int p : P.tuple) mult[hc.coset_of[p]]++;
  for (const auto& [coset, count] : mult) rep.coset_multiplicities.push_back(count);
  std::sort(rep.coset_multiplicities.begin(), rep.coset_multiplicities.end());

  rep.h_conjugacy_key = P.subgroup.elements();
  for (int g = 0; g < G.order(); g++) {
    std::vector<int> conj = conjugate_subgroup(P.subgroup, g).elements();
    if (conj < rep.h_conjugacy_key) rep.h_conjugacy_key = conj;
  }

  /* big blocks: tuple indices sharing a right N(H)-coset; per H-coset inside
     a block, the pair (multiplicity, class of the conjugated cocycle) */
  Subgroup NH = normalizer(P.ambient, P.subgroup);
  Cosets nc = right_cosets(P.ambient, NH);
  std::map<int, std::vector<int>> by_block;  // N(H)-coset id -> tuple indices
  for (int k = 0; k < P.matrix_size(); k++) by_block[nc.coset_of[P.tuple[k]]].push_back(k);

  /* seeding with the trivial cocycle anchors label 0 across reports, so two
     reports can disagree on whether a block carries a nontrivial twist */
  std::vector<Cocycle> class_reps{Cocycle::trivial(P.subgroup.as_group())};
  auto fingerprint = [&](const Cocycle& c) {
    for (size_t k = 0; k < class_reps.size(); k++)
      if (cohomologous_in_closure(class_reps[k], c)) return static_cast<int>(k);
    class_reps.push_back(c);
    return static_cast<int>(class_reps.size()) - 1;
  };

  std::vector<std::vector<std::pair<int, int>>> raw_rows;
  for (const auto& [ncoset, members] : by_block) {
    const int leader = P.tuple[members.front()];
    std::map<int, std::pair<int, int>> per_coset;  // H-coset id -> (count, class)
    for (int k : members) {
      const int sigma = G.mul(P.tuple[k], G.inv(leader));
      if (!NH.contains(sigma)) raise(ErrorKind::Internal, "block member leaves the normalizer");
      ConjugatedCocycle cc = conjugate_cocycle(P.cocycle, P.subgroup, G.inv(sigma));
      if (cc.subgroup.elements() != P.subgroup.elements())
        raise(ErrorKind::Internal, "normalizer conjugation moved H");
      const int cls = fingerprint(cc.cocycle);
      auto [it, fresh] = per_coset.emplace(hc.coset_of[P.tuple[k]], std::make_pair(0, cls));
      it->second.first++;
      if (!fresh && it->second.second != cls)
        raise(ErrorKind::Internal, "cocycle class differs inside an H-coset");
    }
    std::vector<std::pair<int, int>> row;
    for (const auto& [coset, pc] : per_coset) row.push_back(pc);
    std::sort(row.begin(), row.end());
    raw_rows.push_back(std::move(row));
  }

  const int c = static_cast<int>(class_reps.size());
  if (c > 8) raise(ErrorKind::BudgetExceeded, "too many cocycle classes in one report");
  std::vector<std::vector<int>> labelings;
  relabelings(c, labelings);
  bool first = true;
  for (const std::vector<int>& lab : labelings) {
    std::vector<std::vector<std::pair<int, int>>> prof;
    for (const auto& row : raw_rows) {
      std::vector<std::pair<int, int>> relabeled;
      for (const auto& [count, cls] : row) relabeled.push_back({count, lab[cls]});
      std::sort(relabeled.begin(), relabeled.end());
      prof.push_back(std::move(relabeled));
    }
    std::sort(prof.begin(), prof.end());
    if (first || prof < rep.block_profile) rep.block_profile = std::move(prof);
    first = false;
  }
  return rep;
}

std::string report_difference(const InvariantReport& a, const InvariantReport& b) {
  if (a.dims != b.dims) {
    for (const auto& [g, d] : a.dims) {
      auto it = b.dims.find(g);
      if (it == b.dims.end() || it->second != d) {
        std::ostringstream os;
        os << "component dimension at degree " << g << ": " << d << " vs "
           << (it == b.dims.end() ? 0 : it->second);
        return os.str();
      }
    }
    return "component dimensions";
  }
  if (a.h_order != b.h_order) {
    std::ostringstream os;
    os << "subgroup order: " << a.h_order << " vs " << b.h_order;
    return os.str();
  }
  if (a.coset_multiplicities != b.coset_multiplicities) return "right H-coset multiplicities";
  if (a.h_conjugacy_key != b.h_conjugacy_key) return "subgroup conjugacy class";
  if (a.block_profile != b.block_profile) return "block profile (H-coset multiplicities or cocycle classes)";
  return "";
}

}  // namespace gradalg

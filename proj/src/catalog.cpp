#include "gradalg/catalog.hpp"

namespace gradalg {

namespace {

Presentation plain(const GroupPtr& G, std::vector<int> elems, std::vector<int> tuple) {
  Subgroup H = Subgroup::make(G, std::move(elems));
  Cocycle c = Cocycle::trivial(H.as_group());
  return Presentation::make(G, H, std::move(c), std::move(tuple));
}

Presentation with_cocycle(const GroupPtr& G, std::vector<int> elems, Cocycle c,
                          std::vector<int> tuple) {
  Subgroup H = Subgroup::make(G, std::move(elems));
  return Presentation::make(G, H, std::move(c), std::move(tuple));
}

std::vector<int> full(const GroupPtr& G) {
  std::vector<int> e(G->order());
  for (int i = 0; i < G->order(); ++i) e[i] = i;
  return e;
}

/* alpha(x,y) = (-1)^(x_b * y_a) on C2xC2 with labels e,b,a,ab */
Cocycle bilinear_v(const GroupPtr& v_as_group) {
  std::vector<std::vector<int>> exps(4, std::vector<int>(4, 0));
  for (int x : {1, 3})
    for (int y : {2, 3}) exps[x][y] = 1;
  return Cocycle::make(v_as_group, 2, std::move(exps));
}

/* alpha(x,y) records the carry of x+y past 4; the Z/8 witness rho(x) = x
   straightens it, so the class dies in the closure */
Cocycle carry_c4(const GroupPtr& c4_as_group) {
  std::vector<std::vector<int>> exps(4, std::vector<int>(4, 0));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) exps[x][y] = (x + y >= 4) ? 1 : 0;
  return Cocycle::make(c4_as_group, 2, std::move(exps));
}

std::vector<CatalogEntry> build() {
  GroupPtr c2 = cyclic_group(2);
  GroupPtr c4 = cyclic_group(4);
  GroupPtr v = product_of_cyclics(2, 2);
  GroupPtr s3 = symmetric_3();
  GroupPtr d4 = dihedral_4();

  std::vector<CatalogEntry> cat;
  auto put = [&cat](std::string name, Presentation p) {
    cat.push_back({std::move(name), std::move(p)});
  };

  put("c2-scalar", plain(c2, {0}, {0}));
  put("c2-group-algebra", plain(c2, {0, 1}, {0}));
  put("c2-fine-m2", plain(c2, {0}, {0, 1}));
  put("c2-blind-m2", plain(c2, {0}, {0, 0}));
  put("c2-m2-group-algebra", plain(c2, {0, 1}, {0, 0}));
  put("c2-m2-shifted", plain(c2, {0, 1}, {0, 1}));  // coset shift from the previous one

  put("c4-group-algebra", plain(c4, full(c4), {0}));
  {
    Subgroup H = Subgroup::make(c4, full(c4));
    put("c4-carry", with_cocycle(c4, full(c4), carry_c4(H.as_group()), {0}));
  }
  put("c4-fine-m2", plain(c4, {0}, {0, 1}));
  put("c4-half-m2", plain(c4, {0, 2}, {0, 1}));

  put("v-scalar", plain(v, {0}, {0}));
  put("v-group-algebra", plain(v, full(v), {0}));
  {
    Subgroup H = Subgroup::make(v, full(v));
    Cocycle bil = bilinear_v(H.as_group());
    put("v-bilinear", with_cocycle(v, full(v), bil, {0}));
    CochainWitness rho = CochainWitness::make(H.as_group(), 2, {0, 1, 0, 0});
    put("v-bilinear-shifted", with_cocycle(v, full(v), cocycle_add(bil, coboundary(rho)), {0}));
    put("v-bilinear-m2", with_cocycle(v, full(v), bil, {0, 0}));
  }
  put("v-m2-group-algebra", plain(v, full(v), {0, 0}));
  put("v-left-pair", plain(v, {0, 2}, {0, 1}));   // H = {e,a}, tuple (e,b)
  put("v-right-pair", plain(v, {0, 1}, {0, 2}));  // H = {e,b}, tuple (e,a)
  put("v-fine-m2", plain(v, {0}, {0, 2}));

  put("s3-group-algebra", plain(s3, full(s3), {0}));
  put("s3-rotations", plain(s3, {0, 4, 5}, {0}));
  put("s3-transposition-m2", plain(s3, {0, 1}, {0, 4}));

  put("d4-group-algebra", plain(d4, full(d4), {0}));
  {
    Subgroup H = Subgroup::make(d4, full(d4));
    std::vector<Cocycle> classes = enumerate_cocycle_classes(H.as_group(), 2);
    put("d4-twisted", with_cocycle(d4, full(d4), classes.at(1), {0}));
  }
  put("d4-center-m2", plain(d4, {0, 2}, {0, 1}));
  put("d4-reflection", plain(d4, {0, 4}, {0}));

  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = build();
  return cat;
}

std::vector<PairOutcome> catalog_coherence(long long budget) {
  const std::vector<CatalogEntry>& cat = builtin_catalog();
  std::vector<PairOutcome> out;
  for (size_t x = 0; x < cat.size(); ++x) {
    for (size_t y = 0; y < cat.size(); ++y) {
      if (x == y) continue;
      const Presentation& A = cat[x].presentation;
      const Presentation& B = cat[y].presentation;
      if (!A.ambient->same_table(*B.ambient)) continue;
      PairOutcome row;
      row.a = cat[x].name;
      row.b = cat[y].name;
      std::optional<MoveSequence> eq = equivalent(A, B);
      if (eq) {
        row.equivalence_found = true;
        bool refused = false;  // separate must refuse the same pair
        try {
          separate(A, B, budget);
        } catch (const Error& e) {
          refused = e.kind == ErrorKind::PresentationsEquivalent;
        }
        row.certificate_verified = refused && verify_moves(*eq, B);
      } else {
        std::optional<SeparationCertificate> cert = separate(A, B, budget);
        if (cert) {
          row.separation_found = true;
          row.certificate_verified = verify_separation(*cert, A, B, budget);
        }
      }
      if (A.dim() + B.dim() <= 8) {
        row.bruteforce_ran = true;
        row.bruteforce_same = same_identities_bruteforce(A, B, 3, budget);
      }
      row.coherent = row.certificate_verified &&
                     (row.equivalence_found != row.separation_found) &&
                     (!row.bruteforce_ran || row.bruteforce_same == row.equivalence_found);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace gradalg

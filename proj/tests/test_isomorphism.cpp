#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gradalg/isomorphism.hpp"

using namespace gradalg;

namespace {

std::optional<ErrorKind> thrown_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return std::nullopt;
}

int by_label(const GroupPtr& g, const std::string& l) {
  const int k = g->index_of_label(l);
  REQUIRE(k >= 0);
  return k;
}

Presentation trivial_pres(GroupPtr G, std::vector<int> helems, std::vector<int> tuple) {
  Subgroup H = Subgroup::make(G, std::move(helems));
  Cocycle c = Cocycle::trivial(H.as_group());
  return Presentation::make(std::move(G), std::move(H), std::move(c), std::move(tuple));
}

Presentation twisted(const GroupPtr& G, const Cocycle& c, int r = 1) {
  std::vector<int> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup H = Subgroup::make(G, std::move(all));
  return Presentation::make(G, std::move(H), c, std::vector<int>(r, G->identity()));
}

Cocycle bilinear_on(const GroupPtr& v) {
  auto vec = [&](int g) {
    const std::string& l = v->label(g);
    return std::pair<int, int>{(l == "a" || l == "ab") ? 1 : 0, (l == "b" || l == "ab") ? 1 : 0};
  };
  std::vector<std::vector<int>> exps(4, std::vector<int>(4, 0));
  for (int x = 0; x < 4; x++)
    for (int y = 0; y < 4; y++) exps[x][y] = (vec(x).second * vec(y).first) % 2;
  return Cocycle::make(v, 2, exps);
}

Move random_move(const Presentation& P, std::mt19937& rng) {
  const Group& G = *P.ambient;
  const int r = P.matrix_size();
  switch (rng() % 4) {
    case 0: {
      std::vector<int> perm(r);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      return Move::permute(std::move(perm));
    }
    case 1: {
      const auto& h = P.subgroup.elements();
      return Move::coset_shift(static_cast<int>(rng() % r),
                               h[rng() % h.size()]);
    }
    case 2:
      return Move::conjugate(static_cast<int>(rng() % G.order()));
    default: {
      const GroupPtr hg = P.cocycle.group;
      const int n = P.cocycle.n;
      std::vector<int> vals(hg->order(), 0);
      for (size_t k = 0; k < vals.size(); k++)
        if (static_cast<int>(k) != hg->identity()) vals[k] = static_cast<int>(rng() % n);
      return Move::cocycle_replace(CochainWitness::make(hg, n, std::move(vals)));
    }
  }
}

}  // namespace

TEST_CASE("replay walks a sequence and verify_moves checks the landing") {
  const GroupPtr c2 = cyclic_group(2);
  const Presentation A = trivial_pres(c2, {0}, {0, 1});

  MoveSequence seq{A, {Move::permute({1, 0}), Move::coset_shift(0, 0)}};
  const Presentation end = replay(seq);
  CHECK(end.tuple == std::vector<int>{1, 0});
  CHECK(verify_moves(seq, end));

  const Presentation other = trivial_pres(c2, {0}, {0, 1});
  CHECK_FALSE(verify_moves(seq, other));

  /* malformed move: the shift must lie in the subgroup */
  MoveSequence bad{A, {Move::coset_shift(0, 1)}};
  CHECK(thrown_kind([&] { replay(bad); }) == ErrorKind::InvalidMoveParameter);
  CHECK_FALSE(verify_moves(bad, end));
}

TEST_CASE("inverted and composed sequences replay to the expected endpoints") {
  const GroupPtr s3 = symmetric_3();
  const Presentation A = trivial_pres(s3, {0, 1}, {0, 4});

  std::mt19937 rng(7);
  MoveSequence seq{A, {}};
  Presentation cur = A;
  for (int k = 0; k < 6; k++) {
    seq.moves.push_back(random_move(cur, rng));
    cur = apply_move(cur, seq.moves.back());
  }
  REQUIRE(verify_moves(seq, cur));

  const MoveSequence inv = inverted(seq);
  CHECK(inv.start.literally_equal(cur));
  CHECK(verify_moves(inv, A));

  const MoveSequence round = composed(seq, inv);
  CHECK(verify_moves(round, A));
  CHECK(round.moves.size() == 12);

  MoveSequence detached{trivial_pres(s3, {0}, {0}), {}};
  CHECK(thrown_kind([&] { composed(seq, detached); }) == ErrorKind::ParseError);
}

TEST_CASE("equivalent finds the identity sequence and plain permutations") {
  const GroupPtr c2 = cyclic_group(2);
  const Presentation A = trivial_pres(c2, {0}, {0, 1});

  const auto self = equivalent(A, A);
  REQUIRE(self.has_value());
  CHECK(self->moves.empty());
  CHECK(verify_moves(*self, A));

  const Presentation B = trivial_pres(c2, {0}, {1, 0});
  const auto seq = equivalent(A, B);
  REQUIRE(seq.has_value());
  REQUIRE(seq->moves.size() == 1);
  CHECK(seq->moves[0].kind == Move::Kind::Permute);
  CHECK(seq->moves[0].perm == std::vector<int>{1, 0});
  CHECK(verify_moves(*seq, B));

  /* different component dimensions, no sequence */
  const Presentation D = trivial_pres(c2, {0}, {0, 0});
  const Presentation F = trivial_pres(c2, {0}, {0, 1});
  CHECK_FALSE(equivalent(F, D).has_value());

  const Presentation over_c4 = trivial_pres(cyclic_group(4), {0}, {0});
  CHECK(thrown_kind([&] { (void)equivalent(A, over_c4); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("equivalent straightens a coboundary twist") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const Presentation A = twisted(v, bilinear_on(v), 1);

  const GroupPtr hg = A.cocycle.group;
  /* rho is not a homomorphism, so its coboundary moves the function */
  const CochainWitness rho = CochainWitness::make(hg, 2, {0, 1, 0, 0});
  const Presentation B = apply_move(A, Move::cocycle_replace(rho));
  REQUIRE_FALSE(same_cocycle_function(A.cocycle, B.cocycle));

  const auto seq = equivalent(A, B);
  REQUIRE(seq.has_value());
  REQUIRE(seq->moves.size() == 1);
  CHECK(seq->moves[0].kind == Move::Kind::CocycleReplace);
  CHECK(verify_moves(*seq, B));

  /* the same twist straightened from the other end */
  const auto back = equivalent(B, A);
  REQUIRE(back.has_value());
  CHECK(verify_moves(*back, A));
}

TEST_CASE("equivalent recovers a conjugation between subgroups") {
  const GroupPtr s3 = symmetric_3();
  const Presentation A = trivial_pres(s3, {0, 1}, {0, 1});
  const Presentation B = replay({A, {Move::conjugate(4), Move::coset_shift(1, 0)}});
  REQUIRE(B.subgroup.elements() != A.subgroup.elements());

  const auto seq = equivalent(A, B);
  REQUIRE(seq.has_value());
  CHECK(verify_moves(*seq, B));
  CHECK(std::any_of(seq->moves.begin(), seq->moves.end(),
                    [](const Move& m) { return m.kind == Move::Kind::Conjugate; }));
}

TEST_CASE("random move sequences always leave a recoverable trail") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const GroupPtr s3 = symmetric_3();
  const std::vector<Presentation> seeds = {
      twisted(v, bilinear_on(v), 2),
      trivial_pres(s3, {0, 1}, {0, 4, 5}),
      trivial_pres(cyclic_group(4), {0, 2}, {0, 1}),
  };

  std::mt19937 rng(20260816);
  for (const Presentation& A : seeds) {
    const InvariantReport base = invariant_report(A);
    for (int trial = 0; trial < 30; trial++) {
      MoveSequence seq{A, {}};
      Presentation cur = A;
      const int len = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < len; k++) {
        seq.moves.push_back(random_move(cur, rng));
        cur = apply_move(cur, seq.moves.back());
      }
      CAPTURE(trial);
      CHECK(invariant_report(cur) == base);
      const auto found = equivalent(A, cur);
      REQUIRE(found.has_value());
      CHECK(verify_moves(*found, cur));
    }
  }
}

TEST_CASE("separate certifies a component dimension mismatch") {
  const GroupPtr c2 = cyclic_group(2);
  const Presentation A = trivial_pres(c2, {0}, {0, 1});  // fine grading of M_2
  const Presentation B = trivial_pres(c2, {0}, {0, 0});  // all of M_2 in degree e

  const auto cert = separate(A, B);
  REQUIRE(cert.has_value());
  CHECK(cert->identity_side == SeparationCertificate::Side::A);
  CHECK(cert->verification_mode == SeparationCertificate::Mode::Exhaustive);
  CHECK_FALSE(evaluate_basis(cert->polynomial, B, cert->witness).is_zero());
  CHECK(is_identity(cert->polynomial, A).kind == IdentityVerdict::Kind::Identity);
  CHECK(verify_separation(*cert, A, B));

  /* same data the other way round */
  const auto flip = separate(B, A);
  REQUIRE(flip.has_value());
  CHECK(flip->identity_side == SeparationCertificate::Side::B);
  CHECK(verify_separation(*flip, B, A));
}

TEST_CASE("separate certifies a cocycle twist that no move can remove") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const Presentation A = twisted(v, bilinear_on(v), 1);
  const Presentation B = twisted(v, Cocycle::trivial(A.cocycle.group), 1);

  const auto cert = separate(A, B);
  REQUIRE(cert.has_value());
  CHECK(cert->identity_side == SeparationCertificate::Side::B);
  CHECK(cert->verification_mode == SeparationCertificate::Mode::Exhaustive);
  CHECK(cert->polynomial.variables.size() == 2);
  CHECK_FALSE(evaluate_basis(cert->polynomial, A, cert->witness).is_zero());
  CHECK(is_identity(cert->polynomial, B).kind == IdentityVerdict::Kind::Identity);
  CHECK(verify_separation(*cert, A, B));

  /* swapping the arguments swaps the side carrying the identity */
  const auto flip = separate(B, A);
  REQUIRE(flip.has_value());
  CHECK(flip->identity_side == SeparationCertificate::Side::B);
  CHECK_FALSE(evaluate_basis(flip->polynomial, B, flip->witness).is_zero());
  CHECK(is_identity(flip->polynomial, A).kind == IdentityVerdict::Kind::Identity);
  CHECK(verify_separation(*flip, B, A));
}

TEST_CASE("separate distinguishes non-conjugate subgroups with equal dimensions") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const int a = by_label(v, "a"), b = by_label(v, "b");
  const Presentation A = trivial_pres(v, {0, a}, {0, b});
  const Presentation B = trivial_pres(v, {0, b}, {0, a});

  REQUIRE(component_dimensions(A) == component_dimensions(B));
  const auto cert = separate(A, B);
  REQUIRE(cert.has_value());
  CHECK(verify_separation(*cert, A, B));

  const Presentation& ident = cert->identity_side == SeparationCertificate::Side::A ? A : B;
  const Presentation& other = cert->identity_side == SeparationCertificate::Side::A ? B : A;
  CHECK(is_identity(cert->polynomial, ident).kind == IdentityVerdict::Kind::Identity);
  CHECK_FALSE(evaluate_basis(cert->polynomial, other, cert->witness).is_zero());
}

TEST_CASE("separate refuses equivalent presentations and mismatched ambients") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const Presentation A = twisted(v, bilinear_on(v), 2);

  std::mt19937 rng(99);
  Presentation B = A;
  for (int k = 0; k < 4; k++) B = apply_move(B, random_move(B, rng));
  CHECK(thrown_kind([&] { (void)separate(A, B); }) == ErrorKind::PresentationsEquivalent);

  const Presentation C = trivial_pres(cyclic_group(2), {0}, {0});
  CHECK(thrown_kind([&] { (void)separate(A, C); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("verify_separation rejects corrupted certificates") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const Presentation A = twisted(v, bilinear_on(v), 1);
  const Presentation B = twisted(v, Cocycle::trivial(A.cocycle.group), 1);

  const auto cert = separate(A, B);
  REQUIRE(cert.has_value());
  REQUIRE(verify_separation(*cert, A, B));

  SeparationCertificate wrong_side = *cert;
  wrong_side.identity_side = SeparationCertificate::Side::A;
  CHECK_FALSE(verify_separation(wrong_side, A, B));

  SeparationCertificate empty_witness = *cert;
  empty_witness.witness.clear();
  CHECK_FALSE(verify_separation(empty_witness, A, B));

  /* a polynomial that is an identity of neither side fails the scan */
  SeparationCertificate not_identity = *cert;
  not_identity.polynomial = GradedPolynomial::make(
      {{0, cert->polynomial.variables[0].degree}},
      {{CycloScalar::one(1), {0}}});
  not_identity.witness = {{0, basis_of_degree(A, cert->polynomial.variables[0].degree)[0]}};
  CHECK_FALSE(verify_separation(not_identity, A, B));
}

TEST_CASE("separation certificates survive framing moves on either side") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const Presentation A0 = twisted(v, bilinear_on(v), 2);
  const Presentation B0 = twisted(v, Cocycle::trivial(A0.cocycle.group), 2);

  std::mt19937 rng(5);
  Presentation A = A0, B = B0;
  for (int k = 0; k < 3; k++) {
    A = apply_move(A, random_move(A, rng));
    B = apply_move(B, random_move(B, rng));
  }

  const auto cert = separate(A, B);
  REQUIRE(cert.has_value());
  CHECK(cert->identity_side == SeparationCertificate::Side::B);
  CHECK_FALSE(evaluate_basis(cert->polynomial, A, cert->witness).is_zero());
  CHECK(verify_separation(*cert, A, B));
}

TEST_CASE("brute force identity comparison agrees with the certificates") {
  const GroupPtr v = product_of_cyclics(2, 2);
  const Presentation bil = twisted(v, bilinear_on(v), 1);
  const Presentation triv = twisted(v, Cocycle::trivial(bil.cocycle.group), 1);

  CHECK(same_identities_bruteforce(bil, bil, 3));
  CHECK_FALSE(same_identities_bruteforce(bil, triv, 2));
  CHECK(same_identities_bruteforce(bil, triv, 1));  // degree one sees only dimensions

  /* moves never change the identities */
  std::mt19937 rng(11);
  Presentation moved = bil;
  for (int k = 0; k < 4; k++) moved = apply_move(moved, random_move(moved, rng));
  CHECK(same_identities_bruteforce(bil, moved, 3));

  /* one empty component: the single variable of that degree already separates */
  const GroupPtr c2 = cyclic_group(2);
  const Presentation fine = trivial_pres(c2, {0}, {0, 1});
  const Presentation diag = trivial_pres(c2, {0}, {0, 0});
  CHECK_FALSE(same_identities_bruteforce(fine, diag, 1));
  CHECK_FALSE(same_identities_bruteforce(fine, diag, 2));

  CHECK(thrown_kind([&] { (void)same_identities_bruteforce(bil, triv, 5); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(thrown_kind([&] { (void)same_identities_bruteforce(bil, triv, 3, 10); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(thrown_kind([&] { (void)same_identities_bruteforce(fine, trivial_pres(v, {0}, {0}), 2); }) ==
        ErrorKind::AmbientMismatch);
}

TEST_CASE("separate and brute force agree on every small pair") {
  const GroupPtr c2 = cyclic_group(2);
  const GroupPtr v = product_of_cyclics(2, 2);
  const int a = by_label(v, "a"), b = by_label(v, "b");

  const std::vector<Presentation> c2_members = {
      trivial_pres(c2, {0}, {0}),
      trivial_pres(c2, {0, 1}, {0}),
      trivial_pres(c2, {0}, {0, 1}),
      trivial_pres(c2, {0}, {0, 0}),
      trivial_pres(c2, {0, 1}, {0, 0}),
      trivial_pres(c2, {0, 1}, {0, 1}),
  };
  const std::vector<Presentation> v_members = {
      twisted(v, bilinear_on(v), 1),
      twisted(v, Cocycle::trivial(Subgroup::make(v, {0, 1, 2, 3}).as_group()), 1),
      trivial_pres(v, {0, a}, {0, b}),
      trivial_pres(v, {0, b}, {0, a}),
  };

  auto check_family = [&](const std::vector<Presentation>& fam) {
    for (size_t i = 0; i < fam.size(); i++)
      for (size_t j = 0; j < fam.size(); j++) {
        if (i == j) continue;
        CAPTURE(i);
        CAPTURE(j);
        bool equiv = false;
        std::optional<SeparationCertificate> cert;
        try {
          cert = separate(fam[i], fam[j]);
        } catch (const Error& e) {
          REQUIRE(e.kind == ErrorKind::PresentationsEquivalent);
          equiv = true;
        }
        if (equiv) {
          CHECK(equivalent(fam[i], fam[j]).has_value());
          CHECK(same_identities_bruteforce(fam[i], fam[j], 3));
        } else {
          REQUIRE(cert.has_value());
          CHECK(verify_separation(*cert, fam[i], fam[j]));
          CHECK_FALSE(equivalent(fam[i], fam[j]).has_value());
          CHECK_FALSE(same_identities_bruteforce(fam[i], fam[j], 3));
        }
      }
  };
  check_family(c2_members);
  check_family(v_members);
}

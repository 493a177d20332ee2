#pragma once

#include "gradalg/generators.hpp"

namespace gradalg {

/* A replayable equivalence certificate: applying the moves in order to
   start must land on the claimed target in the literal sense (same H
   element set, same tuple, same cocycle function). */
struct MoveSequence {
  Presentation start;
  std::vector<Move> moves;
};

Presentation replay(const MoveSequence& seq);

/* True iff the replay lands exactly on target. Malformed moves count as
   failure, not as an error. */
bool verify_moves(const MoveSequence& seq, const Presentation& target);

/* Inverse certificate: starts at replay(seq), undoes the moves. */
MoveSequence inverted(const MoveSequence& seq);

/* Concatenation; replay(a) must equal b.start literally. */
MoveSequence composed(const MoveSequence& a, const MoveSequence& b);

/* Decides equivalence of two presentations over the same ambient group by
   searching conjugators g with g H_A g^-1 = H_B, matching right-coset
   multisets of the tuples, and testing the cocycles for cohomology in the
   closure. Returns the verified move sequence for the smallest g, or
   nullopt. */
std::optional<MoveSequence> equivalent(const Presentation& A, const Presentation& B);

struct SeparationCertificate {
  enum class Side { A, B };
  enum class Mode { Exhaustive, WitnessOnly };

  GradedPolynomial polynomial;
  Side identity_side = Side::B;
  BasisAssignment witness;  // nonzero evaluation on the other side
  Mode verification_mode = Mode::Exhaustive;
};

/* Produces a polynomial separating two nonequivalent presentations by
   walking the invariant ladder: component dimensions, identity-coset
   configuration, subgroup-conjugate probes, then cocycle separators.
   nullopt means inconclusive within budget. Raises PresentationsEquivalent
   when the presentations are equivalent. */
std::optional<SeparationCertificate> separate(const Presentation& A, const Presentation& B,
                                              long long budget = 10'000'000);

/* Replays the certificate's claims: witness nonzero on the non-identity
   side and, in exhaustive mode, a full identity scan on the identity side. */
bool verify_separation(const SeparationCertificate& cert, const Presentation& A,
                       const Presentation& B, long long budget = 10'000'000);

/* Desk-scale oracle: compares the spaces of multilinear identity
   coefficient vectors of every degree-labeled monomial shape up to
   max_degree, by exact rank computations over the cyclotomics. */
bool same_identities_bruteforce(const Presentation& A, const Presentation& B, int max_degree,
                                long long budget = 10'000'000);

}  // namespace gradalg

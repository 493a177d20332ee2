#pragma once

#include <string>

#include "json.hpp"

#include "gradalg/isomorphism.hpp"

namespace gradalg {

/* Insertion-ordered so emitted files are stable under round-trips. */
using Json = nlohmann::ordered_json;

/* { "order": m, "table": [[...]], "labels": ["e", ...] } */
Json group_to_json(const GroupPtr& G);
GroupPtr group_from_json(const Json& j);

/* { "n": n, "coeffs": ["p/q", ...] }, little-endian power basis */
Json scalar_to_json(const CycloScalar& c);
CycloScalar scalar_from_json(const Json& j);

/* { "group": <group | {"parent","elements"} | "H">, "n": n, "exps": [[...]] }.
   The "H" form resolves against subgroup_group and is only accepted when a
   presentation supplies one. */
Json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const Json& j, const GroupPtr& subgroup_group = nullptr);

/* { "group": ..., "H": [ambient indices], "cocycle": {...}, "tuple": [...] };
   the nested cocycle is written with "group": "H". */
Json presentation_to_json(const Presentation& P);
Presentation presentation_from_json(const Json& j);

/* { "variables": [{"id","degree","tag"}...], "monomials":
   [{"coefficient","factors"}...], "composition": [{"id","polynomial"}...],
   "alternation_sets": [[...]...] }; empty sections are omitted. */
Json polynomial_to_json(const GradedPolynomial& p);
GradedPolynomial polynomial_from_json(const Json& j);

/* [ {"id", "h", "i", "j"}, ... ] ascending by id */
Json witness_to_json(const BasisAssignment& w);
BasisAssignment witness_from_json(const Json& j);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);

/* { "certificate": "moves", "start": <presentation>, "moves": [...] } */
Json move_sequence_to_json(const MoveSequence& seq);
MoveSequence move_sequence_from_json(const Json& j);

/* { "certificate": "separation", "identity_side": "A"|"B",
   "verification_mode": "exhaustive"|"witness_only", "polynomial": {...},
   "witness": [...] } */
Json separation_to_json(const SeparationCertificate& cert);
SeparationCertificate separation_from_json(const Json& j);

/* ParseError with file and byte offset on malformed JSON */
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gradalg

#pragma once

#include <string>
#include <vector>

#include "gradalg/isomorphism.hpp"

namespace gradalg {

struct CatalogEntry {
  std::string name;
  Presentation presentation;
};

/* fine, elementary, and mixed gradings over C2, C4, C2xC2, S3, D4,
   including equivalent pairs reachable only through a cocycle replacement
   and pairs separated at each rung of the ladder */
const std::vector<CatalogEntry>& builtin_catalog();

/* one row per ordered same-ambient pair of catalog members */
struct PairOutcome {
  std::string a, b;
  bool equivalence_found = false;
  bool separation_found = false;
  bool certificate_verified = false;
  bool bruteforce_ran = false;   // only when dim(A) + dim(B) <= 8
  bool bruteforce_same = false;  // meaningful when bruteforce_ran
  bool coherent = false;
};
std::vector<PairOutcome> catalog_coherence(long long budget = 10'000'000);

}  // namespace gradalg

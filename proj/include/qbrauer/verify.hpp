#pragma once

#include <vector>

#include "qbrauer/brauer_rep.hpp"
#include "qbrauer/params.hpp"

namespace qbrauer {

// The full identity suite for one parameter family at tensor degree k, in
// canonical order:
//   - the Brauer defining relations and the contraction / swap / transpose
//     identity families (verify_brauer_relations),
//   - idempotency of the pairing operator C_(k),
//   - the symmetrizer property: left/right products with generator images,
//   - product form vs sum form of the symmetrizer under rho,
//   - transpose duality of the degree-2 idempotent against the inverted
//     family,
//   - column- and row-space equivalence of im(1 - C_q) with the spans of
//     1 + P_q and Q_q,
//   - q-independence of the h-epsilon traces against the non-deformed
//     family,
//   - at r = 1 the degeneracy check that C_q is the zero operator.
// Every check is exact; witnesses are first nonzero entries where defined.
[[nodiscard]] std::vector<RelationCheck> verify_suite(const ParameterFamily& q, int k);

[[nodiscard]] inline bool all_pass(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace qbrauer

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbrauer/brauer.hpp"
#include "qbrauer/params.hpp"
#include "qbrauer/sparse_op.hpp"
#include "qbrauer/symrep.hpp"

namespace qbrauer {

// Deformed contraction operator
//   Q = sum_{i,j} eps_i eps_j q_i q_j^{-1} E_i^j (x) E_{-i}^{-j},
// supported on rows (i,-i) and columns (j,-j); Q^2 = 2r Q and
// P_q Q = Q P_q = -Q under the family constraints.
[[nodiscard]] SparseOp q_op(const ParameterFamily& q);

// Invertible antisymmetric form on V, entries indexed by symplectic labels.
// The canonical form Omega_{i,-i} = sign(i) recovers q_op of the
// non-deformed family.
class SymplecticForm {
 public:
  SymplecticForm(int r, std::vector<std::vector<Rational>> entries);
  static SymplecticForm canonical(int r);

  [[nodiscard]] int rank() const { return r_; }
  [[nodiscard]] const Rational& entry(int i, int j) const;          // Omega_ij
  [[nodiscard]] const Rational& inverse_entry(int i, int j) const;  // (Omega^{-1})_ij

 private:
  int r_;
  // Dense (2r)x(2r) storage in alphabet-digit order.
  std::vector<std::vector<Rational>> omega_, omega_inv_;
};

// Contraction operator of a general symplectic form:
// entry[row (i,j)][col (l,m)] = (Omega^{-1})_{ij} Omega_{ml}.
// Together with the plain permutation operator it represents the Brauer
// algebra at omega = -2r.
[[nodiscard]] SparseOp q_op_general(const SymplecticForm& form);

// Type-C idempotent C_q = (1 - P_q)/2 - Q_q/(2r).  Zero when r = 1.
[[nodiscard]] SparseOp c_idempotent(const ParameterFamily& q);

// Images of the generators sigma_a, eps_a on the k-th tensor power, the data
// defining a representation of B_k(omega).
struct GeneratorImages {
  Alphabet alpha;
  int k;
  Rational omega;
  std::vector<SparseOp> sig;  // sig[a-1] = image of sigma_a
  std::vector<SparseOp> eps;  // eps[a-1] = image of eps_a
};

// Images built from a two-site pair: sigma_a -> S^(a,a+1), eps_a -> E^(a,a+1).
[[nodiscard]] GeneratorImages images_from_two_site(const SparseOp& sigma2, const SparseOp& eps2,
                                                   int k, Rational omega);

// Images of the multi-parametric representation rho_q:
// sigma_a -> -P_q^(a,a+1), eps_a -> -Q_q^(a,a+1), omega = -2r.
[[nodiscard]] GeneratorImages images_of_family(const ParameterFamily& q, int k);

// Evaluate a formal element: words map to products of generator images.
[[nodiscard]] SparseOp rho(const GeneratorImages& images, const BrauerElement& elem);

// rho_q applied to elem; requires elem.omega() = -2r.
[[nodiscard]] SparseOp rho(const ParameterFamily& q, const BrauerElement& elem, int k);

// The k-th pairing A-operator C_{q,(k)} = rho_q(s_(k)): identity at k = 1,
// C_q at k = 2, the zero operator at k = r+1, undefined for k >= r+2 (the
// symmetrizer denominator 2b + omega - 4 vanishes at b = r+2).  Computed by
// mapping the product formula factor-by-factor to operators, never expanding
// the formal product.
[[nodiscard]] SparseOp pairing_type_c(const ParameterFamily& q, int k);

// Exact trace of rho_q(h_(k) eps_{12} eps_{34} ... eps_{2t-1,2t}); a rational
// independent of the sampled family.
[[nodiscard]] Rational trace_h_eps(const ParameterFamily& q, int k, int t);

// One verified identity: name, outcome, and the first nonzero entry of
// lhs - rhs on failure.
struct RelationCheck {
  std::string name;
  bool pass = false;
  int degree = 0;  // tensor degree the check ran at
  std::optional<SparseOp::Entry> witness;
};

// All fifteen defining relations of B_k(omega) on the given generator
// images: the involution/contraction/commutation family, the braid
// relation, and the length-three mixed families.
[[nodiscard]] std::vector<RelationCheck> verify_operator_relations(const GeneratorImages& images);

// The full relation report for rho_q at degree k: the defining relations
// plus the q-specific identity families (the degree-3 contraction
// identities and the swap/transpose dualities against the inverted family).
[[nodiscard]] std::vector<RelationCheck> verify_brauer_relations(const ParameterFamily& q, int k);

}  // namespace qbrauer

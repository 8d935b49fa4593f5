#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbrauer/multi_index.hpp"
#include "qbrauer/permutation.hpp"
#include "qbrauer/rational.hpp"

namespace qbrauer {

// Constrained multiplicative parameter family q = (q_ij, q_i) on the index
// set {-r..-1, 1..r}.  Constraints:
//   (reciprocity)   q_ij q_ji = 1,  q_ii = 1
//   (sign-flip)     q_{-i} = q_i^{-1},  q_{-i,j} = q_ij^{-1} q_j^2
// which leave r(r+1)/2 free parameters: q_1..q_r and q_ij for 1 <= i < j <= r.
class ParameterFamily {
 public:
  // Extends the free parameters to the full family; all constraints hold by
  // construction.  free_qij keyed by (i, j) with 1 <= i < j <= r, exactly
  // r(r-1)/2 entries.
  static ParameterFamily build(int r, const std::vector<Rational>& free_q,
                               const std::map<std::pair<int, int>, Rational>& free_qij);

  static ParameterFamily non_deformed(int r);

  // Deterministic pseudo-random family: free parameters num/den with
  // num, den in [1, 97].  Same seed, same family, on every platform.
  static ParameterFamily sample(int r, std::uint64_t seed);

  // Escape hatch for negative controls and permissive file loading ONLY:
  // installs the given values verbatim, constraints not enforced.
  // Missing entries are first derived as in build().
  static ParameterFamily unchecked_with_overrides(
      int r, const std::vector<Rational>& free_q,
      const std::map<std::pair<int, int>, Rational>& free_qij,
      const std::map<std::pair<int, int>, Rational>& overrides);

  [[nodiscard]] int rank() const { return r_; }
  [[nodiscard]] Alphabet alphabet() const { return Alphabet::symplectic(r_); }

  [[nodiscard]] const Rational& q(int i) const;
  [[nodiscard]] const Rational& q(int i, int j) const;

  // The inverted family q' with every q_i and q_ij replaced by its
  // reciprocal; closed under the constraints.
  [[nodiscard]] ParameterFamily inverted() const;

  // Names of violated constraints, empty when the family is valid:
  // "qpm" for reciprocity failures, "vecq" for sign-flip failures.
  [[nodiscard]] std::vector<std::string> violated_constraints() const;

  friend bool operator==(const ParameterFamily& a, const ParameterFamily& b) {
    return a.r_ == b.r_ && a.qi_ == b.qi_ && a.qij_ == b.qij_;
  }
  friend bool operator!=(const ParameterFamily& a, const ParameterFamily& b) { return !(a == b); }

 private:
  ParameterFamily(int r, std::map<int, Rational> qi, std::map<std::pair<int, int>, Rational> qij)
      : r_(r), qi_(std::move(qi)), qij_(std::move(qij)) {}
  static ParameterFamily derive(int r, const std::vector<Rational>& free_q,
                                const std::map<std::pair<int, int>, Rational>& free_qij);
  int r_;
  std::map<int, Rational> qi_;                    // all labels, both signs
  std::map<std::pair<int, int>, Rational> qij_;   // all ordered label pairs
};

// Unconstrained parameter matrix p_ij on plain labels {1..n} with
// p_ij p_ji = 1 and p_ii = 1; the type-A side of the pairing.
class TypeAParams {
 public:
  static TypeAParams build(int n, const std::map<std::pair<int, int>, Rational>& free_pij);
  static TypeAParams non_deformed(int n);
  static TypeAParams sample(int n, std::uint64_t seed);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] Alphabet alphabet() const { return Alphabet::plain(n_); }
  [[nodiscard]] const Rational& q(int i, int j) const;

  [[nodiscard]] TypeAParams inverted() const;

  friend bool operator==(const TypeAParams& a, const TypeAParams& b) {
    return a.n_ == b.n_ && a.pij_ == b.pij_;
  }

 private:
  TypeAParams(int n, std::map<std::pair<int, int>, Rational> pij)
      : n_(n), pij_(std::move(pij)) {}
  int n_;
  std::map<std::pair<int, int>, Rational> pij_;
};

// Anything exposing an alphabet and a parameter-matrix lookup q(i, j).
template <typename P>
concept ParameterMatrix = requires(const P& p, int i, int j) {
  { p.alphabet() } -> std::convertible_to<Alphabet>;
  { p.q(i, j) } -> std::convertible_to<Rational>;
};

// Multiplier mu_I(sigma) = prod q_{i_s i_t} over pairs s < t with
// sigma^{-1}(s) > sigma^{-1}(t).  Satisfies the cocycle rule
// mu_I(sigma tau) = mu_J(tau) mu_I(sigma) with J = (i_{sigma(1)},...).
template <ParameterMatrix P>
[[nodiscard]] Rational mu(const std::vector<int>& I, const Permutation& sigma, const P& params) {
  const int k = sigma.size();
  if (static_cast<int>(I.size()) != k) throw ShapeError("mu: index tuple length != permutation degree");
  const Permutation inv = sigma.inverse();
  Rational m(1);
  for (int s = 1; s <= k; ++s)
    for (int t = s + 1; t <= k; ++t)
      if (inv(s) > inv(t))
        m *= params.q(I[static_cast<std::size_t>(s - 1)], I[static_cast<std::size_t>(t - 1)]);
  return m;
}

}  // namespace qbrauer

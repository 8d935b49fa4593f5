#pragma once

#include <map>
#include <vector>

#include "qbrauer/permutation.hpp"
#include "qbrauer/rational.hpp"

namespace qbrauer {

// Word in the Brauer-algebra generators: letter +a stands for sigma_a,
// letter -a for eps_a (1 <= a <= k-1); the empty word is the unit.
using BrauerWord = std::vector<int>;

// Formal element of the Brauer algebra B_k(omega): a finite rational linear
// combination of words.  Arithmetic is purely formal (free product, no
// rewriting); identities are checked after applying a representation.
class BrauerElement {
 public:
  BrauerElement(int k, Rational omega) : k_(k), omega_(std::move(omega)) {
    if (k < 1) throw DomainError("BrauerElement: degree must be >= 1");
  }

  static BrauerElement one(int k, Rational omega);
  static BrauerElement word(BrauerWord w, int k, Rational omega);
  static BrauerElement sigma(int a, int k, Rational omega);
  static BrauerElement eps(int a, int k, Rational omega);

  [[nodiscard]] int degree() const { return k_; }
  [[nodiscard]] const Rational& omega() const { return omega_; }
  [[nodiscard]] const std::map<BrauerWord, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const BrauerWord& w, const Rational& c);

  BrauerElement& operator+=(const BrauerElement& o);
  BrauerElement& operator-=(const BrauerElement& o);
  BrauerElement& operator*=(const Rational& s);

  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
  friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
  friend BrauerElement operator*(BrauerElement a, const Rational& s) { return a *= s; }
  friend BrauerElement operator*(const Rational& s, BrauerElement a) { return a *= s; }
  // Free algebra product: bilinear word concatenation.
  friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);

  friend bool operator==(const BrauerElement& a, const BrauerElement& b);

 private:
  void check_compatible(const BrauerElement& o) const;
  int k_;
  Rational omega_;
  std::map<BrauerWord, Rational> terms_;
};

// tau_{a,b} = sigma_a sigma_{a+1} ... sigma_{b-1}  (tau_{a,a} = 1).
[[nodiscard]] BrauerWord tau_word(int a, int b);

// Conjugated generators sigma_ab = tau_{a,b-1} sigma_{b-1} tau_{a,b-1}^{-1}
// and eps_ab likewise, for 1 <= a < b <= k; both reduce to sigma_a / eps_a
// at b = a+1.  eps_ab is symmetric in (a, b); arguments may come unordered.
[[nodiscard]] BrauerElement sigma_ab(int a, int b, int k, const Rational& omega);
[[nodiscard]] BrauerElement eps_ab(int a, int b, int k, const Rational& omega);
[[nodiscard]] BrauerElement tau_ab(int a, int b, int k, const Rational& omega);

// Jucys-Murphy-type element y_b = sum_{a<b} (sigma_ab - eps_ab).
[[nodiscard]] BrauerElement y_element(int b, int k, const Rational& omega);

// Local idempotent v_a = (1 + sigma_a)/2 - eps_a/omega (omega != 0).
[[nodiscard]] BrauerElement v_element(int a, int k, const Rational& omega);

// Full symmetrization h_(k) = (1/k!) sum_{sigma in S_k} sigma, each
// permutation realized by a reduced adjacent-transposition word.
[[nodiscard]] BrauerElement h_element(int k, const Rational& omega);

// The word of a permutation as a Brauer element (all sigma letters).
[[nodiscard]] BrauerElement element_of_permutation(const Permutation& sigma, int k,
                                                   const Rational& omega);

// Symmetrizer by the product formula
//   s_(k) = (1/k!) prod_{b=2..k} (y_b + 1)(y_b + omega + b - 3) / (2b + omega - 4),
// undefined when some denominator 2b + omega - 4 vanishes, i.e. for
// omega in {0, -2, ..., 4-2k}.  Fully expanded formal element; practical
// for k <= 4 (the operator image should be computed factor-by-factor
// instead, see pairing_type_c).
[[nodiscard]] BrauerElement symmetrizer_product(int k, const Rational& omega);

// The same idempotent by the contraction-sum formula
//   s_(k) = h_(k) sum_{t=0..[k/2]} (-1)^t 2^{-t} binom(omega/2 + k - 2, t)^{-1}
//                  sum_{pairings} eps_{a1 b1} ... eps_{at bt},
// the inner sum over unordered sets of t pairwise-disjoint index pairs
// (the 1/t! of the ordered form cancels the orderings of the set).
[[nodiscard]] BrauerElement symmetrizer_sum(int k, const Rational& omega);

// Augmentation character: sigma_a -> 1, eps_a -> 0, extended
// multiplicatively over words and linearly.
[[nodiscard]] Rational augmentation(const BrauerElement& elem);

}  // namespace qbrauer

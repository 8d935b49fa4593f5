#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qbrauer/params.hpp"

namespace qbrauer {

// One homogeneous degree-2 relation: sum of coeff * g_a g_b over digit pairs
// (a, b) in the generator alphabet.
struct Relation {
  std::map<std::pair<int, int>, Rational> terms;

  [[nodiscard]] bool is_zero() const { return terms.empty(); }
  void add(int a, int b, const Rational& c);

  friend bool operator==(const Relation& x, const Relation& y) { return x.terms == y.terms; }
};

// Presentation of a quadratic algebra: generators indexed by an alphabet
// (digit order is the fixed total order -r < ... < -1 < 1 < ... < r) and a
// list of degree-2 relations.
struct RelationSet {
  Alphabet alpha;
  std::vector<Relation> relations;

  [[nodiscard]] int generators() const { return alpha.letters(); }

  friend bool operator==(const RelationSet& x, const RelationSet& y) {
    return x.alpha == y.alpha && x.relations == y.relations;
  }
};

// Presentation of the deformed Grassmann algebra with contraction:
// psi_i psi_j + q_ij psi_j psi_i for i <= j, plus the single relation
// sum_{i=1}^r q_i psi_i psi_{-i}.  With dual = true, the presentation of the
// dual algebra, whose relations carry inverted parameters; it coincides with
// the presentation of the inverted family.
[[nodiscard]] RelationSet relations_xi_c(const ParameterFamily& q, bool dual = false);

// The q-anticommutation relations alone (no contraction); the quotient has
// binomial dimensions C(letters, d).
template <ParameterMatrix P>
[[nodiscard]] RelationSet relations_xi_a(const P& params) {
  const Alphabet alpha = params.alphabet();
  RelationSet rs{alpha, {}};
  for (int da = 0; da < alpha.letters(); ++da)
    for (int db = da; db < alpha.letters(); ++db) {
      Relation rel;
      rel.add(da, db, Rational(1));
      rel.add(db, da, params.q(alpha.label(da), alpha.label(db)));
      rs.relations.push_back(std::move(rel));
    }
  return rs;
}

// Presentation of the polynomial-side algebra of the type-C idempotent, with
// the central combination lambda eliminated by substituting its definition:
// the mixed-pair rows x^i x^j = q_ji x^j x^i for j != -i, plus one
// contraction row.  Empty at r = 1, where the idempotent vanishes.
[[nodiscard]] RelationSet relations_x_c(const ParameterFamily& q);

// Default word cap for component_dim: QBRAUER_WORD_CAP or 200000.
[[nodiscard]] std::uint64_t word_cap_from_env();

// Dimension of the degree-d component of the quotient of the free algebra by
// the two-sided ideal generated by the relations: n^d minus the rank of
// span{u R v : |u| + |v| = d - 2}.  The independent oracle against the
// pairing-operator rank and the closed formula.
[[nodiscard]] std::uint64_t component_dim(const RelationSet& rels, int d,
                                          std::uint64_t word_cap = word_cap_from_env());

// Closed form (2r - 2k + 2)/k * C(2r+1, k-1) for k <= r+1, zero above.
// Always a non-negative integer; anything else is an internal error.
[[nodiscard]] std::uint64_t dim_formula(int r, int k);

// A monomial in normal form: coefficient times the strictly ascending word.
// Zero is represented by coefficient 0 and an empty word.
struct NormalMonomial {
  Rational coefficient;
  std::vector<int> word;  // labels, strictly ascending

  [[nodiscard]] bool is_zero() const { return coefficient.is_zero(); }

  friend bool operator==(const NormalMonomial& x, const NormalMonomial& y) {
    if (x.coefficient.is_zero() && y.coefficient.is_zero()) return true;
    return x.coefficient == y.coefficient && x.word == y.word;
  }
};

enum class GrassmannVariant { lower, upper };

// Rewrites a product of deformed Grassmann generators to its sorted form:
// zero on a repeated index, otherwise
//   psi_W = ((-1)^sigma / mu_I(sigma)) psi_I   (lower)
//   psi^W = (-1)^sigma mu_I(sigma) psi^I       (upper)
// where I = sort(W) and W_s = I_{sigma(s)}.
[[nodiscard]] NormalMonomial grassmann_normal_form(const std::vector<int>& word,
                                                   const ParameterFamily& q,
                                                   GrassmannVariant variant);

}  // namespace qbrauer

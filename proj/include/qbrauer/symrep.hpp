#pragma once

#include <vector>

#include "qbrauer/linalg.hpp"
#include "qbrauer/params.hpp"
#include "qbrauer/permutation.hpp"
#include "qbrauer/sparse_op.hpp"

namespace qbrauer {

enum class SignChoice { plus, minus };
enum class PairKind { S, A };

// Deformed permutation operator P = sum_{i,j} q_ij E_j^i (x) E_i^j:
// P e_{(i,j)} = q_ij e_{(j,i)}.  Involutive and braided for any parameter
// matrix with q_ij q_ji = 1.
template <ParameterMatrix P>
[[nodiscard]] SparseOp p_op(const P& params) {
  const Alphabet alpha = params.alphabet();
  SparseOp op(alpha, 2);
  const auto L = static_cast<std::uint64_t>(alpha.letters());
  for (int di = 0; di < alpha.letters(); ++di) {
    const int i = alpha.label(di);
    for (int dj = 0; dj < alpha.letters(); ++dj) {
      const int j = alpha.label(dj);
      // column (i,j) -> row (j,i) with coefficient q_ij
      op.set_entry(static_cast<std::uint64_t>(dj) * L + static_cast<std::uint64_t>(di),
                   static_cast<std::uint64_t>(di) * L + static_cast<std::uint64_t>(dj),
                   params.q(i, j));
    }
  }
  return op;
}

// Image of sigma under the representation s_a -> (+-)P^(a,a+1) on the k-th
// tensor power.  Decomposition-independent because P satisfies the braid
// relation and P^2 = 1.
template <ParameterMatrix P>
[[nodiscard]] SparseOp rho_perm(const Permutation& sigma, SignChoice sign, const P& params, int k) {
  if (sigma.size() != k) throw ShapeError("rho_perm: permutation degree != k");
  const Alphabet alpha = params.alphabet();
  SparseOp op = SparseOp::identity(alpha, k);
  const SparseOp p2 = p_op(params);
  for (int a : sigma.adjacent_word()) {
    SparseOp gen = embed_two_site(p2, a, a + 1, k);
    if (sign == SignChoice::minus) gen *= Rational(-1);
    op = op * gen;
  }
  return op;
}

// Type-A pairing operators: the image of the full symmetrization
// h_(k) = (1/k!) sum_sigma sigma under rho(+) (kind S) or rho(-) (kind A).
// Both are idempotents; rank of the A-operator is binom(dim, k), the
// dimension of the degree-k component of the q-Grassmann algebra.
template <ParameterMatrix P>
[[nodiscard]] SparseOp pairing_type_a(const P& params, int k, PairKind kind) {
  if (k < 1) throw DomainError("pairing_type_a: degree must be >= 1");
  const Alphabet alpha = params.alphabet();
  if (k == 1) return SparseOp::identity(alpha, 1);

  // Precompute the +-P images of the adjacent transpositions once.
  const SparseOp p2 = p_op(params);
  std::vector<SparseOp> gen;
  gen.reserve(static_cast<std::size_t>(k - 1));
  for (int a = 1; a < k; ++a) {
    SparseOp g = embed_two_site(p2, a, a + 1, k);
    if (kind == PairKind::A) g *= Rational(-1);
    gen.push_back(std::move(g));
  }

  SparseOp acc = SparseOp::zero(alpha, k);
  for_each_permutation(k, [&](const Permutation& sigma) {
    SparseOp img = SparseOp::identity(alpha, k);
    for (int a : sigma.adjacent_word()) img = img * gen[static_cast<std::size_t>(a - 1)];
    acc += img;
  });
  acc *= Rational(Int(1), factorial(static_cast<unsigned long>(k)));
  return acc;
}

// Closed form for the A-operator entry at a column tuple I with pairwise
// distinct entries and the row tuple (i_{sigma(1)},...,i_{sigma(k)}):
// (1/k!) (-1)^sigma mu_I(sigma).
template <ParameterMatrix P>
[[nodiscard]] Rational a_entry_closed_form(const std::vector<int>& I, const Permutation& sigma,
                                           const P& params) {
  const int k = sigma.size();
  if (static_cast<int>(I.size()) != k)
    throw ShapeError("a_entry_closed_form: tuple length != permutation degree");
  for (std::size_t s = 0; s < I.size(); ++s)
    for (std::size_t t = s + 1; t < I.size(); ++t)
      if (I[s] == I[t]) throw DomainError("a_entry_closed_form: indices must be pairwise distinct");
  Rational v = mu(I, sigma, params) * Rational(sigma.sign());
  return v / Rational(factorial(static_cast<unsigned long>(k)));
}

}  // namespace qbrauer

#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qbrauer/brauer_rep.hpp"
#include "qbrauer/params.hpp"
#include "qbrauer/sparse_op.hpp"

namespace qbrauer {

// Ring contract: a type R with nested R::Element and the operations below.
// All ring arithmetic in this module is expressed through it, so the same
// minor code path serves plain rationals and truncated quotient rings.
template <typename R>
concept Ring = requires(const R& ring, const typename R::Element& x,
                        const typename R::Element& y, const Rational& s) {
  typename R::Element;
  { ring.zero() } -> std::convertible_to<typename R::Element>;
  { ring.one() } -> std::convertible_to<typename R::Element>;
  { ring.add(x, y) } -> std::convertible_to<typename R::Element>;
  { ring.mul(x, y) } -> std::convertible_to<typename R::Element>;
  { ring.neg(x) } -> std::convertible_to<typename R::Element>;
  { ring.scale(s, x) } -> std::convertible_to<typename R::Element>;
  { ring.eq(x, y) } -> std::convertible_to<bool>;
};

// The rationals as a ring.
struct RationalRing {
  using Element = Rational;
  [[nodiscard]] Element zero() const { return Rational(0); }
  [[nodiscard]] Element one() const { return Rational(1); }
  [[nodiscard]] Element add(const Element& x, const Element& y) const { return x + y; }
  [[nodiscard]] Element mul(const Element& x, const Element& y) const { return x * y; }
  [[nodiscard]] Element neg(const Element& x) const { return -x; }
  [[nodiscard]] Element scale(const Rational& s, const Element& x) const { return s * x; }
  [[nodiscard]] bool eq(const Element& x, const Element& y) const { return x == y; }
};

// Dense matrix over a ring, rows indexed by row_alpha^row_degree and columns
// by col_alpha^col_degree in multi-index code order.
template <Ring R>
struct RingMatrix {
  Alphabet row_alpha;
  int row_degree;
  Alphabet col_alpha;
  int col_degree;
  std::vector<typename R::Element> e;  // row-major

  RingMatrix(const R& ring, Alphabet ra, int rd, Alphabet ca, int cd)
      : row_alpha(ra), row_degree(rd), col_alpha(ca), col_degree(cd) {
    const std::uint64_t total = power_dim(ra, rd) * power_dim(ca, cd);
    if (total > (1u << 24)) throw ResourceError("RingMatrix: too many entries");
    e.assign(total, ring.zero());
  }

  [[nodiscard]] std::uint64_t nrows() const { return power_dim(row_alpha, row_degree); }
  [[nodiscard]] std::uint64_t ncols() const { return power_dim(col_alpha, col_degree); }
  [[nodiscard]] typename R::Element& at(std::uint64_t row, std::uint64_t col) {
    return e[row * ncols() + col];
  }
  [[nodiscard]] const typename R::Element& at(std::uint64_t row, std::uint64_t col) const {
    return e[row * ncols() + col];
  }
};

template <Ring R>
[[nodiscard]] RingMatrix<R> identity_matrix(const R& ring, const Alphabet& alpha) {
  RingMatrix<R> m(ring, alpha, 1, alpha, 1);
  for (std::uint64_t i = 0; i < m.nrows(); ++i) m.at(i, i) = ring.one();
  return m;
}

// Two idempotents A on V x V and A~ on V~ x V~; idempotency is checked once
// here so downstream code can rely on it.
struct IdempotentPair {
  SparseOp a;
  SparseOp a_tilde;

  IdempotentPair(SparseOp a_, SparseOp a_tilde_) : a(std::move(a_)), a_tilde(std::move(a_tilde_)) {
    if (a.degree() != 2 || a_tilde.degree() != 2)
      throw ShapeError("IdempotentPair: both operators must have degree 2");
    if (!((a * a) - a).is_zero()) throw DomainError("IdempotentPair: A is not idempotent");
    if (!((a_tilde * a_tilde) - a_tilde).is_zero())
      throw DomainError("IdempotentPair: A~ is not idempotent");
  }
};

// Outcome of the Manin-matrix test A M^(1) M^(2) (1 - A~) = 0, with the first
// nonzero component (i, j, gamma, delta) in label form on failure.
struct ManinReport {
  bool pass = false;
  std::optional<std::tuple<int, int, int, int>> witness;
};

// Contract the row index of m with a scalar operator: (op . m)^I_B =
// sum_J op^I_J m^J_B.  Degrees must match.
template <Ring R>
[[nodiscard]] RingMatrix<R> scalar_times_matrix(const R& ring, const SparseOp& op,
                                                const RingMatrix<R>& m) {
  if (op.alphabet() != m.row_alpha || op.degree() != m.row_degree)
    throw ShapeError("scalar_times_matrix: operator shape does not match matrix rows");
  RingMatrix<R> out(ring, m.row_alpha, m.row_degree, m.col_alpha, m.col_degree);
  for (const auto& [row, cols] : op.rows())
    for (const auto& [mid, coef] : cols)
      for (std::uint64_t b = 0; b < m.ncols(); ++b)
        out.at(row, b) = ring.add(out.at(row, b), ring.scale(coef, m.at(mid, b)));
  return out;
}

// Contract the column index of m with a scalar operator: (m . op)^I_B =
// sum_A m^I_A op^A_B.
template <Ring R>
[[nodiscard]] RingMatrix<R> matrix_times_scalar(const R& ring, const RingMatrix<R>& m,
                                                const SparseOp& op) {
  if (op.alphabet() != m.col_alpha || op.degree() != m.col_degree)
    throw ShapeError("matrix_times_scalar: operator shape does not match matrix columns");
  RingMatrix<R> out(ring, m.row_alpha, m.row_degree, m.col_alpha, m.col_degree);
  for (const auto& [mid, cols] : op.rows())
    for (const auto& [b, coef] : cols)
      for (std::uint64_t i = 0; i < m.nrows(); ++i)
        out.at(i, b) = ring.add(out.at(i, b), ring.scale(coef, m.at(i, mid)));
  return out;
}

// The k-fold product M^(1) M^(2) ... M^(k) of a dim V x dim V~ matrix:
// entry (I, B) = M^{i_1}_{b_1} M^{i_2}_{b_2} ... M^{i_k}_{b_k}, the ring
// product taken in site order.
template <Ring R>
[[nodiscard]] RingMatrix<R> site_product(const R& ring, const RingMatrix<R>& m, int k) {
  if (m.row_degree != 1 || m.col_degree != 1)
    throw ShapeError("site_product: matrix must be indexed by single letters");
  if (k < 1) throw DomainError("site_product: k must be >= 1");
  const std::uint64_t nv = m.nrows(), nt = m.ncols();
  RingMatrix<R> out(ring, m.row_alpha, k, m.col_alpha, k);
  std::vector<std::uint64_t> iw(static_cast<std::size_t>(k), 0);
  std::vector<std::uint64_t> bw(static_cast<std::size_t>(k), 0);
  for (std::uint64_t row = 0; row < out.nrows(); ++row) {
    {
      std::uint64_t c = row;
      for (int p = k - 1; p >= 0; --p) { iw[static_cast<std::size_t>(p)] = c % nv; c /= nv; }
    }
    for (std::uint64_t col = 0; col < out.ncols(); ++col) {
      std::uint64_t c = col;
      for (int p = k - 1; p >= 0; --p) { bw[static_cast<std::size_t>(p)] = c % nt; c /= nt; }
      typename R::Element prod = m.at(iw[0], bw[0]);
      for (int p = 1; p < k; ++p)
        prod = ring.mul(prod, m.at(iw[static_cast<std::size_t>(p)], bw[static_cast<std::size_t>(p)]));
      out.at(row, col) = std::move(prod);
    }
  }
  return out;
}

// The Manin-matrix test: computes A M^(1) M^(2) (1 - A~) over the entry ring
// and reports the first nonzero component.
template <Ring R>
[[nodiscard]] ManinReport manin_check(const R& ring, const IdempotentPair& pair,
                                      const RingMatrix<R>& m) {
  if (m.row_degree != 1 || m.col_degree != 1 || m.row_alpha != pair.a.alphabet() ||
      m.col_alpha != pair.a_tilde.alphabet())
    throw ShapeError("manin_check: matrix shape does not match the idempotent pair");
  const SparseOp one_minus =
      SparseOp::identity(pair.a_tilde.alphabet(), 2) - pair.a_tilde;
  const RingMatrix<R> mm = site_product(ring, m, 2);
  const RingMatrix<R> t =
      scalar_times_matrix(ring, pair.a, matrix_times_scalar(ring, mm, one_minus));
  const typename R::Element z = ring.zero();
  for (std::uint64_t row = 0; row < t.nrows(); ++row)
    for (std::uint64_t col = 0; col < t.ncols(); ++col)
      if (!ring.eq(t.at(row, col), z)) {
        const auto ri = MultiIndex::decode(row, m.row_alpha, 2);
        const auto ci = MultiIndex::decode(col, m.col_alpha, 2);
        return {false, std::make_tuple(ri[0], ri[1], ci[0], ci[1])};
      }
  return {true, std::nullopt};
}

// k-th S-minors: M^(1) ... M^(k) S~_(k), with S~_(k) the k-th S-operator of
// the right idempotent (for A~ = A_p the operator pairing_type_a(p, k, S)).
template <Ring R>
[[nodiscard]] RingMatrix<R> minor_s(const R& ring, const RingMatrix<R>& m, const SparseOp& s_tilde) {
  return matrix_times_scalar(ring, site_product(ring, m, s_tilde.degree()), s_tilde);
}

// k-th A-minors: C_{q,(k)} M^(1) ... M^(k).  Builds the pairing operator
// internally so the k >= r+2 undefined error propagates uniformly; at
// k = r+1 the result is identically zero.
template <Ring R>
[[nodiscard]] RingMatrix<R> minor_a(const R& ring, const RingMatrix<R>& m,
                                    const ParameterFamily& q, int k) {
  return scalar_times_matrix(ring, pairing_type_c(q, k), site_product(ring, m, k));
}

// Degree-truncated quotient of the free algebra on g generators by the ideal
// generated by a set of degree-2 relation rows.  Elements are kept in a
// canonical reduced form, so equality is coordinate equality; multiplication
// beyond the truncation degree throws.
class TruncatedQuotientRing {
 public:
  // Sparse coordinates per degree: degree -> (word code -> coefficient);
  // word codes are mixed-radix over generators, position 0 most significant.
  struct Element {
    std::map<int, std::map<std::uint64_t, Rational>> comps;
  };

  using RelationRow = std::map<std::uint64_t, Rational>;  // degree-2 word coords

  TruncatedQuotientRing(int generators, int dmax, const std::vector<RelationRow>& relations,
                        std::uint64_t word_cap = 200000);

  [[nodiscard]] int generators() const { return g_; }
  [[nodiscard]] int max_degree() const { return dmax_; }

  [[nodiscard]] Element zero() const { return {}; }
  [[nodiscard]] Element one() const;
  [[nodiscard]] Element generator(int idx) const;
  [[nodiscard]] Element add(const Element& x, const Element& y) const;
  [[nodiscard]] Element mul(const Element& x, const Element& y) const;
  [[nodiscard]] Element neg(const Element& x) const;
  [[nodiscard]] Element scale(const Rational& s, const Element& x) const;
  [[nodiscard]] bool eq(const Element& x, const Element& y) const;

  // Canonical form: eliminates every pivot word of the per-degree relation
  // bases.  Idempotent; elements returned by the operations above are
  // already reduced.
  [[nodiscard]] Element reduce(const Element& x) const;

  // Dimension g^d minus the rank of the degree-d relation subspace.
  [[nodiscard]] std::uint64_t component_dimension(int d) const;

 private:
  void insert_row(int d, RelationRow row);

  int g_;
  int dmax_;
  std::vector<std::uint64_t> dims_;                     // g^d per degree
  // Per degree, row-echelon relation basis keyed by pivot word; each row has
  // leading coefficient 1 and no support on smaller words.
  std::vector<std::map<std::uint64_t, RelationRow>> basis_;
};

// The universal ring for an idempotent pair: one generator per matrix entry
// (generator id = row_digit * dim V~ + col_digit), with the degree-2
// components of A M^(1) M^(2) (1 - A~) for the generic matrix M as
// relations, padded by words up to dmax.  The generic matrix over this ring
// passes manin_check by construction.
[[nodiscard]] TruncatedQuotientRing universal_manin_ring(const IdempotentPair& pair, int dmax);

// The generic matrix m^i_alpha over its universal ring.
[[nodiscard]] RingMatrix<TruncatedQuotientRing> generic_matrix(const TruncatedQuotientRing& ring,
                                                               const IdempotentPair& pair);

// Symplectic transvection 1 + c v (J v)^T for the canonical form J, an exact
// symplectic matrix; v and c are drawn deterministically from the seed.
[[nodiscard]] RingMatrix<RationalRing> symplectic_elementary(int r, std::uint64_t seed);

}  // namespace qbrauer

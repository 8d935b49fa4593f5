#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qbrauer/multi_index.hpp"
#include "qbrauer/rational.hpp"

namespace qbrauer {

// Sparse exact-rational operator on the k-th tensor power of the space
// indexed by an Alphabet.  Rows and columns are multi-index codes
// (see MultiIndex::encode); absent entries are zero and zeros are never
// stored, so the representation of an operator is unique.
class SparseOp {
 public:
  using Row = std::map<std::uint64_t, Rational>;
  using Rows = std::map<std::uint64_t, Row>;

  SparseOp(const Alphabet& alpha, int k) : alpha_(alpha), k_(k) {
    if (k < 0) throw DomainError("SparseOp: negative degree");
    dim_ = power_dim(alpha, k);
  }

  static SparseOp zero(const Alphabet& alpha, int k) { return SparseOp(alpha, k); }
  static SparseOp identity(const Alphabet& alpha, int k);

  [[nodiscard]] const Alphabet& alphabet() const { return alpha_; }
  [[nodiscard]] int degree() const { return k_; }
  [[nodiscard]] std::uint64_t dim() const { return dim_; }
  [[nodiscard]] const Rows& rows() const { return rows_; }

  // Accumulate v into (row, col); drops the entry if the sum is zero.
  void add_entry(std::uint64_t row, std::uint64_t col, const Rational& v);
  void set_entry(std::uint64_t row, std::uint64_t col, const Rational& v);

  [[nodiscard]] Rational entry(std::uint64_t row, std::uint64_t col) const;
  [[nodiscard]] Rational entry(const MultiIndex& row, const MultiIndex& col) const;

  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] std::size_t nnz() const;

  // First nonzero entry in (row, col) order; nullopt on the zero operator.
  struct Entry {
    std::uint64_t row, col;
    Rational value;
  };
  [[nodiscard]] std::optional<Entry> first_entry() const;

  SparseOp& operator+=(const SparseOp& o);
  SparseOp& operator-=(const SparseOp& o);
  SparseOp& operator*=(const Rational& s);

  friend SparseOp operator+(SparseOp a, const SparseOp& b) { return a += b; }
  friend SparseOp operator-(SparseOp a, const SparseOp& b) { return a -= b; }
  friend SparseOp operator*(SparseOp a, const Rational& s) { return a *= s; }
  friend SparseOp operator*(const Rational& s, SparseOp a) { return a *= s; }
  friend SparseOp operator-(SparseOp a) { return a *= Rational(-1); }

  // Operator composition as matrix product.
  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);

  friend bool operator==(const SparseOp& a, const SparseOp& b);
  friend bool operator!=(const SparseOp& a, const SparseOp& b) { return !(a == b); }

  [[nodiscard]] SparseOp transpose() const;
  // Conjugation by the flip of the two tensor factors (degree 2 only):
  // entry((i,j),(l,m)) -> entry((j,i),(m,l)).
  [[nodiscard]] SparseOp swap_sites() const;
  [[nodiscard]] Rational trace() const;

 private:
  void check_same_shape(const SparseOp& o) const;

  Alphabet alpha_;
  int k_;
  std::uint64_t dim_;
  Rows rows_;
};

// Embeds a degree-2 operator T into degree k, acting on tensor positions
// a and b (1-based, a != b) and as the identity elsewhere.  T^(a,b) in
// superscript notation; positions may come in either order.
[[nodiscard]] SparseOp embed_two_site(const SparseOp& T, int a, int b, int k);

}  // namespace qbrauer

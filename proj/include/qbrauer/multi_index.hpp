#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbrauer/errors.hpp"

namespace qbrauer {

// Basis-label alphabet of a tensor factor.
//
// Symplectic alphabet of rank r: labels {-r,...,-1, 1,...,r} (never 0),
// totally ordered -r < ... < -1 < 1 < ... < r.  This indexes the defining
// 2r-dimensional space V.
//
// Plain alphabet of size n: labels {1,...,n} in natural order.  This indexes
// an auxiliary space with no symplectic structure.
class Alphabet {
 public:
  static Alphabet symplectic(int r) {
    if (r < 1) throw DomainError("Alphabet: rank must be >= 1");
    return Alphabet(true, r);
  }
  static Alphabet plain(int n) {
    if (n < 1) throw DomainError("Alphabet: size must be >= 1");
    return Alphabet(false, n);
  }

  [[nodiscard]] bool is_symplectic() const { return symplectic_; }
  // Rank r of the symplectic alphabet; throws on a plain alphabet.
  [[nodiscard]] int rank() const {
    if (!symplectic_) throw DomainError("Alphabet: plain alphabet has no rank");
    return param_;
  }
  // Number of letters: 2r or n.
  [[nodiscard]] int letters() const { return symplectic_ ? 2 * param_ : param_; }

  [[nodiscard]] bool valid(int label) const {
    if (symplectic_) return label != 0 && label >= -param_ && label <= param_;
    return label >= 1 && label <= param_;
  }

  // Monotone bijection label -> {0, ..., letters()-1} respecting the order.
  [[nodiscard]] int digit(int label) const {
    if (!valid(label)) throw DomainError("Alphabet: label " + std::to_string(label) + " out of range");
    if (symplectic_) return label < 0 ? label + param_ : label + param_ - 1;
    return label - 1;
  }
  [[nodiscard]] int label(int digit) const {
    if (digit < 0 || digit >= letters()) throw DomainError("Alphabet: digit out of range");
    if (symplectic_) return digit < param_ ? digit - param_ : digit - param_ + 1;
    return digit + 1;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symplectic_ == b.symplectic_ && a.param_ == b.param_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  Alphabet(bool s, int p) : symplectic_(s), param_(p) {}
  bool symplectic_;
  int param_;  // r or n
};

// Ordered k-tuple of basis labels, the row/column index of an operator on the
// k-th tensor power.  Encoded as a base-letters() integer with position 0 the
// most significant digit, so the integer order on codes is the lexicographic
// order on tuples.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {}

  [[nodiscard]] int size() const { return static_cast<int>(e_.size()); }
  [[nodiscard]] int operator[](int pos) const { return e_[static_cast<std::size_t>(pos)]; }
  [[nodiscard]] const std::vector<int>& entries() const { return e_; }

  [[nodiscard]] std::uint64_t encode(const Alphabet& a) const {
    std::uint64_t code = 0;
    for (int x : e_) code = code * static_cast<std::uint64_t>(a.letters()) +
                            static_cast<std::uint64_t>(a.digit(x));
    return code;
  }

  static MultiIndex decode(std::uint64_t code, const Alphabet& a, int k) {
    std::vector<int> e(static_cast<std::size_t>(k));
    const auto base = static_cast<std::uint64_t>(a.letters());
    for (int pos = k - 1; pos >= 0; --pos) {
      e[static_cast<std::size_t>(pos)] = a.label(static_cast<int>(code % base));
      code /= base;
    }
    if (code != 0) throw DomainError("MultiIndex: code out of range for degree");
    return MultiIndex(std::move(e));
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

 private:
  std::vector<int> e_;
};

// Dimension letters^k of the degree-k tensor power, guarded against overflow.
[[nodiscard]] inline std::uint64_t power_dim(const Alphabet& a, int k) {
  if (k < 0) throw DomainError("power_dim: negative degree");
  const auto base = static_cast<std::uint64_t>(a.letters());
  std::uint64_t d = 1;
  for (int i = 0; i < k; ++i) {
    if (d > (UINT64_MAX >> 1) / base)
      throw ResourceError("power_dim: tensor power dimension overflows");
    d *= base;
  }
  return d;
}

}  // namespace qbrauer

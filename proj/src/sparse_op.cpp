#include "qbrauer/sparse_op.hpp"

namespace qbrauer {

SparseOp SparseOp::identity(const Alphabet& alpha, int k) {
  SparseOp id(alpha, k);
  for (std::uint64_t i = 0; i < id.dim_; ++i) id.rows_[i][i] = Rational(1);
  return id;
}

void SparseOp::check_same_shape(const SparseOp& o) const {
  if (alpha_ != o.alpha_ || k_ != o.k_)
    throw ShapeError("SparseOp: operands act on different spaces");
}

void SparseOp::add_entry(std::uint64_t row, std::uint64_t col, const Rational& v) {
  if (v.is_zero()) return;
  if (row >= dim_ || col >= dim_) throw DomainError("SparseOp: index out of range");
  auto& r = rows_[row];
  auto it = r.find(col);
  if (it == r.end()) {
    r.emplace(col, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) {
    r.erase(it);
    if (r.empty()) rows_.erase(row);
  }
}

void SparseOp::set_entry(std::uint64_t row, std::uint64_t col, const Rational& v) {
  if (row >= dim_ || col >= dim_) throw DomainError("SparseOp: index out of range");
  if (v.is_zero()) {
    auto it = rows_.find(row);
    if (it != rows_.end()) {
      it->second.erase(col);
      if (it->second.empty()) rows_.erase(it);
    }
    return;
  }
  rows_[row][col] = v;
}

Rational SparseOp::entry(std::uint64_t row, std::uint64_t col) const {
  auto it = rows_.find(row);
  if (it == rows_.end()) return Rational(0);
  auto jt = it->second.find(col);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

Rational SparseOp::entry(const MultiIndex& row, const MultiIndex& col) const {
  if (row.size() != k_ || col.size() != k_)
    throw ShapeError("SparseOp: multi-index length does not match degree");
  return entry(row.encode(alpha_), col.encode(alpha_));
}

std::size_t SparseOp::nnz() const {
  std::size_t n = 0;
  for (const auto& [r, row] : rows_) n += row.size();
  return n;
}

std::optional<SparseOp::Entry> SparseOp::first_entry() const {
  if (rows_.empty()) return std::nullopt;
  const auto& [r, row] = *rows_.begin();
  const auto& [c, v] = *row.begin();
  return Entry{r, c, v};
}

SparseOp& SparseOp::operator+=(const SparseOp& o) {
  check_same_shape(o);
  for (const auto& [r, row] : o.rows_)
    for (const auto& [c, v] : row) add_entry(r, c, v);
  return *this;
}

SparseOp& SparseOp::operator-=(const SparseOp& o) {
  check_same_shape(o);
  for (const auto& [r, row] : o.rows_)
    for (const auto& [c, v] : row) add_entry(r, c, -v);
  return *this;
}

SparseOp& SparseOp::operator*=(const Rational& s) {
  if (s.is_zero()) {
    rows_.clear();
    return *this;
  }
  for (auto& [r, row] : rows_)
    for (auto& [c, v] : row) v *= s;
  return *this;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  a.check_same_shape(b);
  SparseOp out(a.alpha_, a.k_);
  for (const auto& [r, arow] : a.rows_) {
    SparseOp::Row acc;
    for (const auto& [m, av] : arow) {
      auto it = b.rows_.find(m);
      if (it == b.rows_.end()) continue;
      for (const auto& [c, bv] : it->second) {
        auto jt = acc.find(c);
        if (jt == acc.end())
          acc.emplace(c, av * bv);
        else
          jt->second += av * bv;
      }
    }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.rows_[r].emplace(c, std::move(v));
    if (out.rows_.count(r) && out.rows_[r].empty()) out.rows_.erase(r);
  }
  return out;
}

bool operator==(const SparseOp& a, const SparseOp& b) {
  a.check_same_shape(b);
  return a.rows_ == b.rows_;
}

SparseOp SparseOp::transpose() const {
  SparseOp out(alpha_, k_);
  for (const auto& [r, row] : rows_)
    for (const auto& [c, v] : row) out.rows_[c].emplace(r, v);
  return out;
}

SparseOp SparseOp::swap_sites() const {
  if (k_ != 2) throw ShapeError("SparseOp: swap_sites requires degree 2");
  const auto base = static_cast<std::uint64_t>(alpha_.letters());
  auto flip = [base](std::uint64_t code) {
    return (code % base) * base + code / base;
  };
  SparseOp out(alpha_, k_);
  for (const auto& [r, row] : rows_)
    for (const auto& [c, v] : row) out.rows_[flip(r)].emplace(flip(c), v);
  return out;
}

Rational SparseOp::trace() const {
  Rational t(0);
  for (const auto& [r, row] : rows_) {
    auto it = row.find(r);
    if (it != row.end()) t += it->second;
  }
  return t;
}

SparseOp embed_two_site(const SparseOp& T, int a, int b, int k) {
  if (T.degree() != 2) throw ShapeError("embed_two_site: operator must have degree 2");
  if (a == b || a < 1 || b < 1 || a > k || b > k)
    throw DomainError("embed_two_site: positions must be distinct and within 1..k");

  const Alphabet& alpha = T.alphabet();
  const auto L = static_cast<std::uint64_t>(alpha.letters());
  const std::uint64_t dim = power_dim(alpha, k);

  // Place value of each tensor position (position 0 most significant).
  std::vector<std::uint64_t> place(static_cast<std::size_t>(k), 1);
  for (int p = k - 2; p >= 0; --p)
    place[static_cast<std::size_t>(p)] = place[static_cast<std::size_t>(p + 1)] * L;
  const std::uint64_t pa = place[static_cast<std::size_t>(a - 1)];
  const std::uint64_t pb = place[static_cast<std::size_t>(b - 1)];

  // Enumerate fillers of the remaining k-2 positions once, as offsets.
  std::vector<int> rest;
  for (int p = 0; p < k; ++p)
    if (p != a - 1 && p != b - 1) rest.push_back(p);
  const int m = static_cast<int>(rest.size());
  std::uint64_t fillers = 1;
  for (int i = 0; i < m; ++i) fillers *= L;
  (void)dim;

  SparseOp out(alpha, k);
  for (const auto& [rcode, row] : T.rows()) {
    const std::uint64_t ri = rcode / L, rj = rcode % L;  // digits of the degree-2 row
    for (const auto& [ccode, v] : row) {
      const std::uint64_t ci = ccode / L, cj = ccode % L;
      const std::uint64_t row_base = ri * pa + rj * pb;
      const std::uint64_t col_base = ci * pa + cj * pb;
      for (std::uint64_t f = 0; f < fillers; ++f) {
        std::uint64_t off = 0;
        std::uint64_t t = f;
        for (int i = m - 1; i >= 0; --i) {
          off += (t % L) * place[static_cast<std::size_t>(rest[static_cast<std::size_t>(i)])];
          t /= L;
        }
        out.add_entry(row_base + off, col_base + off, v);
      }
    }
  }
  return out;
}

}  // namespace qbrauer

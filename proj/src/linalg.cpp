#include "qbrauer/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace qbrauer {

void SparseMatrix::add_row(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Rational>> merged;
  for (auto& [c, v] : entries) {
    if (c >= ncols) throw DomainError("SparseMatrix: column out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  rows.push_back(std::move(merged));
}

namespace {

constexpr std::size_t kDenseLimit = 128;

// Fraction-free integer elimination after clearing denominators row by row.
std::size_t dense_bareiss_rank(const SparseMatrix& m) {
  const std::size_t nr = m.rows.size(), nc = m.ncols;
  std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc, Int(0)));
  for (std::size_t i = 0; i < nr; ++i) {
    Int l(1);
    for (const auto& [c, v] : m.rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    for (const auto& [c, v] : m.rows[i]) a[i][c] = v.num() * (l / v.den());
  }

  std::size_t rank = 0;
  Int prev(1);
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    // Pivot with the fewest bits keeps intermediate growth down.
    std::size_t piv = nr;
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = rank; i < nr; ++i) {
      if (a[i][col] == 0) continue;
      const std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
      if (bits < best_bits) {
        best_bits = bits;
        piv = i;
      }
    }
    if (piv == nr) continue;
    std::swap(a[rank], a[piv]);
    // Every row below the pivot is transformed, even rows with a zero in the
    // pivot column: the one-step formula must stay uniform for the exact
    // divisions by the previous pivot to go through.
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        Int t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Sparse exact elimination.  Pivot choice: among active rows pick one with the
// fewest entries, then within it the column appearing in the fewest active
// rows (Markowitz-style), which keeps fill-in low on the operator matrices
// this library produces.
class SparseElimination {
 public:
  explicit SparseElimination(SparseMatrix m) : rows_(std::move(m.rows)), ncols_(m.ncols) {
    active_.assign(rows_.size(), true);
    col_count_.assign(ncols_, 0);
    col_rows_.assign(ncols_, {});
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [c, v] : rows_[i]) {
        ++col_count_[c];
        col_rows_[c].push_back(i);
      }
  }

  std::size_t run() {
    std::size_t rank = 0;
    for (;;) {
      const std::size_t p = pick_pivot_row();
      if (p == rows_.size()) break;
      const std::size_t c = pick_pivot_col(p);
      eliminate(p, c);
      ++rank;
    }
    return rank;
  }

 private:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  std::size_t pick_pivot_row() const {
    std::size_t best = rows_.size(), best_nnz = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i] || rows_[i].empty()) continue;
      if (rows_[i].size() < best_nnz) {
        best_nnz = rows_[i].size();
        best = i;
        if (best_nnz == 1) break;
      }
    }
    return best;
  }

  std::size_t pick_pivot_col(std::size_t p) const {
    std::size_t best = 0, best_count = std::numeric_limits<std::size_t>::max();
    for (const auto& [c, v] : rows_[p])
      if (col_count_[c] < best_count) {
        best_count = col_count_[c];
        best = c;
      }
    return best;
  }

  static const Rational* find(const Row& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
  }

  void account_remove(const Row& row) {
    for (const auto& [c, v] : row) --col_count_[c];
  }
  void account_add(std::size_t id, const Row& row) {
    for (const auto& [c, v] : row) {
      ++col_count_[c];
      col_rows_[c].push_back(id);
    }
  }

  void eliminate(std::size_t p, std::size_t c) {
    const Rational pivot = *find(rows_[p], c);
    auto candidates = std::move(col_rows_[c]);
    col_rows_[c].clear();
    for (std::size_t q : candidates) {
      if (q == p || !active_[q]) continue;
      const Rational* qc = find(rows_[q], c);
      if (qc == nullptr) continue;  // stale candidate
      const Rational factor = *qc / pivot;
      Row merged;
      merged.reserve(rows_[q].size() + rows_[p].size());
      auto itq = rows_[q].begin(), endq = rows_[q].end();
      auto itp = rows_[p].begin(), endp = rows_[p].end();
      while (itq != endq || itp != endp) {
        if (itp == endp || (itq != endq && itq->first < itp->first)) {
          merged.push_back(*itq++);
        } else if (itq == endq || itp->first < itq->first) {
          Rational v = -factor * itp->second;
          if (!v.is_zero()) merged.emplace_back(itp->first, std::move(v));
          ++itp;
        } else {
          Rational v = itq->second - factor * itp->second;
          if (!v.is_zero()) merged.emplace_back(itq->first, std::move(v));
          ++itq;
          ++itp;
        }
      }
      account_remove(rows_[q]);
      rows_[q] = std::move(merged);
      account_add(q, rows_[q]);
    }
    // Retire the pivot row: it no longer participates in pivot selection.
    account_remove(rows_[p]);
    active_[p] = false;
    rows_[p].clear();
    rows_[p].shrink_to_fit();
  }

  std::vector<Row> rows_;
  std::size_t ncols_;
  std::vector<bool> active_;
  std::vector<std::size_t> col_count_;
  std::vector<std::vector<std::size_t>> col_rows_;
};

}  // namespace

std::size_t exact_rank(SparseMatrix m) {
  if (m.rows.empty() || m.ncols == 0) return 0;
  if (m.rows.size() <= kDenseLimit && m.ncols <= kDenseLimit) return dense_bareiss_rank(m);
  return SparseElimination(std::move(m)).run();
}

namespace {

// Compresses operator columns to contiguous ids and lays out the rows.
SparseMatrix matrix_of_rows(const std::vector<const SparseOp*>& ops, bool transpose) {
  std::map<std::uint64_t, std::size_t> col_id;
  std::vector<std::vector<std::pair<std::uint64_t, Rational>>> raw;
  for (const SparseOp* op : ops) {
    const SparseOp t = transpose ? op->transpose() : *op;
    for (const auto& [r, row] : t.rows()) {
      auto& out = raw.emplace_back();
      for (const auto& [c, v] : row) {
        col_id.emplace(c, 0);
        out.emplace_back(c, v);
      }
    }
  }
  std::size_t next = 0;
  for (auto& [key, id] : col_id) id = next++;
  SparseMatrix m;
  m.ncols = next;
  for (auto& r : raw) {
    std::vector<std::pair<std::size_t, Rational>> row;
    row.reserve(r.size());
    for (auto& [c, v] : r) row.emplace_back(col_id[c], std::move(v));
    m.add_row(std::move(row));
  }
  return m;
}

}  // namespace

std::size_t rank(const SparseOp& op) {
  return exact_rank(matrix_of_rows({&op}, false));
}

bool colspace_contained(const SparseOp& a, const std::vector<SparseOp>& spanning) {
  std::vector<const SparseOp*> span_ops;
  for (const auto& b : spanning) {
    if (b.alphabet() != a.alphabet() || b.degree() != a.degree())
      throw ShapeError("colspace_contained: operators act on different spaces");
    span_ops.push_back(&b);
  }
  // Columns become rows under transposition; rank is invariant.
  const std::size_t rank_span = exact_rank(matrix_of_rows(span_ops, true));
  std::vector<const SparseOp*> all = span_ops;
  all.push_back(&a);
  const std::size_t rank_all = exact_rank(matrix_of_rows(all, true));
  return rank_all == rank_span;
}

}  // namespace qbrauer

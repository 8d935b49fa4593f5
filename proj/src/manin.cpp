#include "qbrauer/manin.hpp"

#include <string>

#include "qbrauer/rng.hpp"

namespace qbrauer {

TruncatedQuotientRing::TruncatedQuotientRing(int generators, int dmax,
                                             const std::vector<RelationRow>& relations,
                                             std::uint64_t word_cap)
    : g_(generators), dmax_(dmax) {
  if (g_ < 1) throw DomainError("TruncatedQuotientRing: need at least one generator");
  if (dmax_ < 2) throw DomainError("TruncatedQuotientRing: max degree must be >= 2");
  dims_.assign(static_cast<std::size_t>(dmax_) + 1, 1);
  for (int d = 1; d <= dmax_; ++d) {
    if (dims_[static_cast<std::size_t>(d - 1)] > word_cap / static_cast<std::uint64_t>(g_))
      throw ResourceError("TruncatedQuotientRing: " + std::to_string(g_) + "^" +
                          std::to_string(d) + " words exceed the cap " + std::to_string(word_cap));
    dims_[static_cast<std::size_t>(d)] = dims_[static_cast<std::size_t>(d - 1)] *
                                         static_cast<std::uint64_t>(g_);
  }
  basis_.assign(static_cast<std::size_t>(dmax_) + 1, {});

  for (const auto& row : relations) {
    for (const auto& [word, coef] : row) {
      (void)coef;
      if (word >= dims_[2]) throw DomainError("TruncatedQuotientRing: relation word out of range");
    }
    insert_row(2, row);
  }
  // Degree-d relation subspace: words padding the degree-(d-1) basis on
  // either side.  Left padding prepends a generator (shift by the place
  // value of position 0); right padding appends one.
  for (int d = 3; d <= dmax_; ++d) {
    const std::uint64_t left_place = dims_[static_cast<std::size_t>(d - 1)];
    for (const auto& [pivot, row] : basis_[static_cast<std::size_t>(d - 1)]) {
      (void)pivot;
      for (int a = 0; a < g_; ++a) {
        RelationRow padded;
        for (const auto& [word, coef] : row)
          padded.emplace(static_cast<std::uint64_t>(a) * left_place + word, coef);
        insert_row(d, std::move(padded));
        padded.clear();
        for (const auto& [word, coef] : row)
          padded.emplace(word * static_cast<std::uint64_t>(g_) + static_cast<std::uint64_t>(a),
                         coef);
        insert_row(d, std::move(padded));
      }
    }
  }
}

void TruncatedQuotientRing::insert_row(int d, RelationRow row) {
  auto& basis = basis_[static_cast<std::size_t>(d)];
  // Eliminate by ascending pivot; rows in the basis have no support below
  // their pivot, so one forward sweep suffices.
  while (!row.empty()) {
    const std::uint64_t lead = row.begin()->first;
    const auto it = basis.find(lead);
    if (it == basis.end()) break;
    const Rational factor = row.begin()->second;
    for (const auto& [word, coef] : it->second) {
      auto jt = row.find(word);
      if (jt == row.end()) {
        row.emplace(word, -(factor * coef));
      } else {
        jt->second -= factor * coef;
        if (jt->second.is_zero()) row.erase(jt);
      }
    }
  }
  if (row.empty()) return;
  const Rational lead = row.begin()->second;
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    for (auto& [word, coef] : row) coef *= inv;
  }
  basis.emplace(row.begin()->first, std::move(row));
}

TruncatedQuotientRing::Element TruncatedQuotientRing::one() const {
  Element e;
  e.comps[0].emplace(0, Rational(1));
  return e;
}

TruncatedQuotientRing::Element TruncatedQuotientRing::generator(int idx) const {
  if (idx < 0 || idx >= g_) throw DomainError("TruncatedQuotientRing: generator index out of range");
  Element e;
  e.comps[1].emplace(static_cast<std::uint64_t>(idx), Rational(1));
  return reduce(e);
}

TruncatedQuotientRing::Element TruncatedQuotientRing::add(const Element& x, const Element& y) const {
  Element out = x;
  for (const auto& [d, coords] : y.comps) {
    auto& dst = out.comps[d];
    for (const auto& [word, coef] : coords) {
      auto it = dst.find(word);
      if (it == dst.end()) {
        dst.emplace(word, coef);
      } else {
        it->second += coef;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
    if (dst.empty()) out.comps.erase(d);
  }
  return out;  // sums of reduced elements are reduced
}

TruncatedQuotientRing::Element TruncatedQuotientRing::mul(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [dx, cx] : x.comps)
    for (const auto& [dy, cy] : y.comps) {
      const int d = dx + dy;
      if (d > dmax_)
        throw TruncationError("TruncatedQuotientRing: product degree " + std::to_string(d) +
                              " exceeds truncation " + std::to_string(dmax_));
      auto& dst = out.comps[d];
      const std::uint64_t place = dims_[static_cast<std::size_t>(dy)];
      for (const auto& [wx, px] : cx)
        for (const auto& [wy, py] : cy) {
          const std::uint64_t w = wx * place + wy;
          auto it = dst.find(w);
          if (it == dst.end()) {
            dst.emplace(w, px * py);
          } else {
            it->second += px * py;
            if (it->second.is_zero()) dst.erase(it);
          }
        }
    }
  for (auto it = out.comps.begin(); it != out.comps.end();)
    it = it->second.empty() ? out.comps.erase(it) : std::next(it);
  return reduce(out);
}

TruncatedQuotientRing::Element TruncatedQuotientRing::neg(const Element& x) const {
  return scale(Rational(-1), x);
}

TruncatedQuotientRing::Element TruncatedQuotientRing::scale(const Rational& s, const Element& x) const {
  if (s.is_zero()) return {};
  Element out = x;
  for (auto& [d, coords] : out.comps) {
    (void)d;
    for (auto& [word, coef] : coords) {
      (void)word;
      coef *= s;
    }
  }
  return out;
}

bool TruncatedQuotientRing::eq(const Element& x, const Element& y) const {
  return x.comps == y.comps;
}

TruncatedQuotientRing::Element TruncatedQuotientRing::reduce(const Element& x) const {
  Element out;
  for (const auto& [d, coords] : x.comps) {
    if (d < 0 || d > dmax_) throw DomainError("TruncatedQuotientRing: component degree out of range");
    std::map<std::uint64_t, Rational> c = coords;
    const auto& basis = basis_[static_cast<std::size_t>(d)];
    if (!basis.empty()) {
      // Ascending scan: each elimination only adds support above the pivot.
      for (auto it = c.begin(); it != c.end();) {
        const auto bit = basis.find(it->first);
        if (bit == basis.end()) {
          ++it;
          continue;
        }
        const Rational factor = it->second;
        for (const auto& [word, coef] : bit->second) {
          auto jt = c.find(word);
          if (jt == c.end()) {
            c.emplace(word, -(factor * coef));
          } else {
            jt->second -= factor * coef;
            if (jt->second.is_zero()) c.erase(jt);
          }
        }
        it = c.upper_bound(bit->first);
      }
    }
    if (!c.empty()) out.comps.emplace(d, std::move(c));
  }
  return out;
}

std::uint64_t TruncatedQuotientRing::component_dimension(int d) const {
  if (d < 0 || d > dmax_) throw DomainError("TruncatedQuotientRing: degree out of range");
  return dims_[static_cast<std::size_t>(d)] - basis_[static_cast<std::size_t>(d)].size();
}

TruncatedQuotientRing universal_manin_ring(const IdempotentPair& pair, int dmax) {
  const std::uint64_t nv = static_cast<std::uint64_t>(pair.a.alphabet().letters());
  const std::uint64_t nt = static_cast<std::uint64_t>(pair.a_tilde.alphabet().letters());
  const std::uint64_t g = nv * nt;
  if (g > 4096) throw ResourceError("universal_manin_ring: too many generators");

  const SparseOp one_minus = SparseOp::identity(pair.a_tilde.alphabet(), 2) - pair.a_tilde;

  // Degree-2 components of A M^(1) M^(2) (1 - A~) for the generic matrix
  // M^l_al = m_{l,al}: the (i j | gamma delta) component is
  //   sum_{l m al be} A^{ij}_{lm} (1-A~)^{al be}_{gamma delta}
  //     m_{l,al} m_{m,be}
  // as a vector over degree-2 words (l*nt+al)*g + (m*nt+be).
  std::vector<TruncatedQuotientRing::RelationRow> rows;
  for (const auto& [arow, acols] : pair.a.rows()) {
    (void)arow;
    for (std::uint64_t tcol = 0; tcol < nt * nt; ++tcol) {
      TruncatedQuotientRing::RelationRow row;
      for (const auto& [lm, acoef] : acols) {
        const std::uint64_t l = lm / nv, m = lm % nv;
        for (const auto& [ab, tcols] : one_minus.rows()) {
          const auto it = tcols.find(tcol);
          if (it == tcols.end()) continue;
          const std::uint64_t al = ab / nt, be = ab % nt;
          const std::uint64_t word = (l * nt + al) * g + (m * nt + be);
          auto jt = row.find(word);
          if (jt == row.end()) {
            row.emplace(word, acoef * it->second);
          } else {
            jt->second += acoef * it->second;
            if (jt->second.is_zero()) row.erase(jt);
          }
        }
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return TruncatedQuotientRing(static_cast<int>(g), dmax, rows);
}

RingMatrix<TruncatedQuotientRing> generic_matrix(const TruncatedQuotientRing& ring,
                                                 const IdempotentPair& pair) {
  const std::uint64_t nt = static_cast<std::uint64_t>(pair.a_tilde.alphabet().letters());
  RingMatrix<TruncatedQuotientRing> m(ring, pair.a.alphabet(), 1, pair.a_tilde.alphabet(), 1);
  if (static_cast<std::uint64_t>(ring.generators()) != m.nrows() * m.ncols())
    throw ShapeError("generic_matrix: ring generator count does not match the pair");
  for (std::uint64_t i = 0; i < m.nrows(); ++i)
    for (std::uint64_t al = 0; al < m.ncols(); ++al)
      m.at(i, al) = ring.generator(static_cast<int>(i * nt + al));
  return m;
}

RingMatrix<RationalRing> symplectic_elementary(int r, std::uint64_t seed) {
  if (r < 1) throw DomainError("symplectic_elementary: rank must be >= 1");
  const Alphabet alpha = Alphabet::symplectic(r);
  const int n = alpha.letters();
  SplitMix64 rng{seed ^ 0xC0FFEE0000000003ull};
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(Rational(rng.small() % 5) - Rational(2));
  const Rational c = rng.rational();

  // w = J v for the canonical form J(e_i) = sign(i) e_{-i} in digit order.
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  for (int d = 0; d < n; ++d) {
    const int label = alpha.label(d);
    // J has entry sign(i) at (digit(i), digit(-i)), so (J v)_di = sign(i) v_{digit(-i)}.
    w[static_cast<std::size_t>(d)] =
        Rational(label > 0 ? 1 : -1) * v[static_cast<std::size_t>(alpha.digit(-label))];
  }

  RationalRing ring;
  RingMatrix<RationalRing> m = identity_matrix(ring, alpha);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)) +=
          c * v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
  return m;
}

}  // namespace qbrauer

#include "qbrauer/brauer_rep.hpp"

#include <utility>

namespace qbrauer {

namespace {

int sign_of(int i) { return i > 0 ? 1 : -1; }

}  // namespace

SparseOp q_op(const ParameterFamily& q) {
  const Alphabet alpha = q.alphabet();
  SparseOp op(alpha, 2);
  const auto L = static_cast<std::uint64_t>(alpha.letters());
  for (int di = 0; di < alpha.letters(); ++di) {
    const int i = alpha.label(di);
    for (int dj = 0; dj < alpha.letters(); ++dj) {
      const int j = alpha.label(dj);
      const Rational v = Rational(sign_of(i) * sign_of(j)) * q.q(i) * q.q(j).inverse();
      // row (i,-i), column (j,-j)
      const auto row = static_cast<std::uint64_t>(di) * L +
                       static_cast<std::uint64_t>(alpha.digit(-i));
      const auto col = static_cast<std::uint64_t>(dj) * L +
                       static_cast<std::uint64_t>(alpha.digit(-j));
      op.set_entry(row, col, v);
    }
  }
  return op;
}

SymplecticForm::SymplecticForm(int r, std::vector<std::vector<Rational>> entries) : r_(r) {
  if (r < 1) throw DomainError("SymplecticForm: rank must be >= 1");
  const std::size_t n = static_cast<std::size_t>(2 * r);
  if (entries.size() != n) throw ShapeError("SymplecticForm: matrix must be 2r x 2r");
  for (const auto& row : entries)
    if (row.size() != n) throw ShapeError("SymplecticForm: matrix must be 2r x 2r");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (entries[i][j] != -entries[j][i])
        throw DomainError("SymplecticForm: matrix must be antisymmetric");
  omega_ = std::move(entries);

  // Gauss-Jordan inversion; throws on a singular form.
  std::vector<std::vector<Rational>> a = omega_;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("SymplecticForm: matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= d;
      inv[col][j] *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  omega_inv_ = std::move(inv);
}

SymplecticForm SymplecticForm::canonical(int r) {
  const Alphabet alpha = Alphabet::symplectic(r);
  const std::size_t n = static_cast<std::size_t>(2 * r);
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n, Rational(0)));
  for (int i = -r; i <= r; ++i) {
    if (i == 0) continue;
    e[static_cast<std::size_t>(alpha.digit(i))][static_cast<std::size_t>(alpha.digit(-i))] =
        Rational(sign_of(i));
  }
  return SymplecticForm(r, std::move(e));
}

const Rational& SymplecticForm::entry(int i, int j) const {
  const Alphabet alpha = Alphabet::symplectic(r_);
  return omega_[static_cast<std::size_t>(alpha.digit(i))][static_cast<std::size_t>(alpha.digit(j))];
}

const Rational& SymplecticForm::inverse_entry(int i, int j) const {
  const Alphabet alpha = Alphabet::symplectic(r_);
  return omega_inv_[static_cast<std::size_t>(alpha.digit(i))]
                   [static_cast<std::size_t>(alpha.digit(j))];
}

SparseOp q_op_general(const SymplecticForm& form) {
  const int r = form.rank();
  const Alphabet alpha = Alphabet::symplectic(r);
  SparseOp op(alpha, 2);
  const auto L = static_cast<std::uint64_t>(alpha.letters());
  for (int di = 0; di < alpha.letters(); ++di)
    for (int dj = 0; dj < alpha.letters(); ++dj) {
      const Rational rowf = form.inverse_entry(alpha.label(di), alpha.label(dj));
      if (rowf.is_zero()) continue;
      for (int dl = 0; dl < alpha.letters(); ++dl)
        for (int dm = 0; dm < alpha.letters(); ++dm) {
          const Rational colf = form.entry(alpha.label(dm), alpha.label(dl));
          if (colf.is_zero()) continue;
          op.add_entry(static_cast<std::uint64_t>(di) * L + static_cast<std::uint64_t>(dj),
                       static_cast<std::uint64_t>(dl) * L + static_cast<std::uint64_t>(dm),
                       rowf * colf);
        }
    }
  return op;
}

SparseOp c_idempotent(const ParameterFamily& q) {
  const Alphabet alpha = q.alphabet();
  SparseOp c = SparseOp::identity(alpha, 2);
  c -= p_op(q);
  c *= Rational(1, 2);
  c -= q_op(q) * Rational(1, 2 * q.rank());
  return c;
}

GeneratorImages images_from_two_site(const SparseOp& sigma2, const SparseOp& eps2, int k,
                                     Rational omega) {
  if (sigma2.degree() != 2 || eps2.degree() != 2)
    throw ShapeError("images_from_two_site: generator images must have degree 2");
  if (sigma2.alphabet() != eps2.alphabet())
    throw ShapeError("images_from_two_site: alphabets differ");
  if (k < 1) throw DomainError("images_from_two_site: degree must be >= 1");
  GeneratorImages im{sigma2.alphabet(), k, std::move(omega), {}, {}};
  for (int a = 1; a < k; ++a) {
    im.sig.push_back(embed_two_site(sigma2, a, a + 1, k));
    im.eps.push_back(embed_two_site(eps2, a, a + 1, k));
  }
  return im;
}

GeneratorImages images_of_family(const ParameterFamily& q, int k) {
  return images_from_two_site(-p_op(q), -q_op(q), k, Rational(-2 * q.rank()));
}

SparseOp rho(const GeneratorImages& images, const BrauerElement& elem) {
  if (elem.degree() != images.k) throw ShapeError("rho: element degree != tensor degree");
  if (elem.omega() != images.omega)
    throw DomainError("rho: element omega does not match the representation parameter");
  SparseOp acc = SparseOp::zero(images.alpha, images.k);
  for (const auto& [w, c] : elem.terms()) {
    SparseOp img = SparseOp::identity(images.alpha, images.k);
    for (int letter : w)
      img = img * (letter > 0 ? images.sig[static_cast<std::size_t>(letter - 1)]
                              : images.eps[static_cast<std::size_t>(-letter - 1)]);
    acc += img * c;
  }
  return acc;
}

SparseOp rho(const ParameterFamily& q, const BrauerElement& elem, int k) {
  if (elem.omega() != Rational(-2 * q.rank()))
    throw DomainError("rho: representation requires omega = -2r");
  return rho(images_of_family(q, k), elem);
}

SparseOp pairing_type_c(const ParameterFamily& q, int k) {
  const int r = q.rank();
  if (k < 1) throw DomainError("pairing_type_c: degree must be >= 1");
  if (k == 1) return SparseOp::identity(q.alphabet(), 1);
  if (k >= r + 2)
    throw UndefinedError(
        "pairing_type_c: undefined for k >= r + 2 (symmetrizer denominator "
        "2b + omega - 4 vanishes at b = r + 2 for omega = -2r)");

  const Rational omega(-2 * r);
  const GeneratorImages images = images_of_family(q, k);
  const SparseOp id = SparseOp::identity(q.alphabet(), k);

  // Product formula mapped to operators factor by factor; the formal
  // expansion would have thousands of words already at k = 4.
  SparseOp op = id;
  for (int b = 2; b <= k; ++b) {
    const Rational den = Rational(2 * b - 4) + omega;
    // den != 0 is guaranteed by k <= r+1.
    const SparseOp yb = rho(images, y_element(b, k, omega));
    op = op * (yb + id);
    op = op * (yb + id * (omega + Rational(b - 3)));
    op *= den.inverse();
  }
  op *= Rational(Int(1), factorial(static_cast<unsigned long>(k)));
  return op;
}

Rational trace_h_eps(const ParameterFamily& q, int k, int t) {
  if (k < 1 || t < 0 || 2 * t > k) throw DomainError("trace_h_eps: requires 0 <= 2t <= k");
  const Rational omega(-2 * q.rank());
  BrauerElement elem = h_element(k, omega);
  for (int s = 1; s <= t; ++s) elem = elem * eps_ab(2 * s - 1, 2 * s, k, omega);
  return rho(q, elem, k).trace();
}

namespace {

RelationCheck make_check(std::string name, const SparseOp& lhs, const SparseOp& rhs) {
  RelationCheck c;
  c.name = std::move(name);
  c.degree = lhs.degree();
  const SparseOp diff = lhs - rhs;
  c.pass = diff.is_zero();
  if (!c.pass) c.witness = diff.first_entry();
  return c;
}

std::string g(const char* base, int a) { return std::string(base) + "_" + std::to_string(a); }

}  // namespace

std::vector<RelationCheck> verify_operator_relations(const GeneratorImages& im) {
  const int k = im.k;
  std::vector<RelationCheck> out;
  const SparseOp id = SparseOp::identity(im.alpha, k);

  for (int a = 1; a < k; ++a) {
    const SparseOp& S = im.sig[static_cast<std::size_t>(a - 1)];
    const SparseOp& E = im.eps[static_cast<std::size_t>(a - 1)];
    out.push_back(make_check(g("sigma", a) + "^2 = 1", S * S, id));
    out.push_back(make_check(g("eps", a) + "^2 = omega " + g("eps", a), E * E, E * im.omega));
    out.push_back(make_check(g("sigma", a) + " " + g("eps", a) + " = " + g("eps", a), S * E, E));
    out.push_back(make_check(g("eps", a) + " " + g("sigma", a) + " = " + g("eps", a), E * S, E));
  }

  for (int a = 1; a < k; ++a)
    for (int b = a + 2; b < k; ++b) {
      const SparseOp& Sa = im.sig[static_cast<std::size_t>(a - 1)];
      const SparseOp& Ea = im.eps[static_cast<std::size_t>(a - 1)];
      const SparseOp& Sb = im.sig[static_cast<std::size_t>(b - 1)];
      const SparseOp& Eb = im.eps[static_cast<std::size_t>(b - 1)];
      out.push_back(make_check(g("sigma", a) + " " + g("sigma", b) + " = " + g("sigma", b) + " " + g("sigma", a),
                               Sa * Sb, Sb * Sa));
      out.push_back(make_check(g("eps", a) + " " + g("eps", b) + " = " + g("eps", b) + " " + g("eps", a),
                               Ea * Eb, Eb * Ea));
      out.push_back(make_check(g("sigma", a) + " " + g("eps", b) + " = " + g("eps", b) + " " + g("sigma", a),
                               Sa * Eb, Eb * Sa));
    }

  for (int a = 1; a + 1 < k; ++a) {
    const SparseOp& Sa = im.sig[static_cast<std::size_t>(a - 1)];
    const SparseOp& Ea = im.eps[static_cast<std::size_t>(a - 1)];
    const SparseOp& Sb = im.sig[static_cast<std::size_t>(a)];
    const SparseOp& Eb = im.eps[static_cast<std::size_t>(a)];
    const std::string sa = g("sigma", a), sb = g("sigma", a + 1);
    const std::string ea = g("eps", a), eb = g("eps", a + 1);
    out.push_back(make_check(sa + " " + sb + " " + sa + " = " + sb + " " + sa + " " + sb,
                             Sa * Sb * Sa, Sb * Sa * Sb));
    out.push_back(make_check(ea + " " + eb + " " + ea + " = " + ea, Ea * Eb * Ea, Ea));
    out.push_back(make_check(eb + " " + ea + " " + eb + " = " + eb, Eb * Ea * Eb, Eb));
    out.push_back(make_check(sa + " " + eb + " " + ea + " = " + sb + " " + ea, Sa * Eb * Ea, Sb * Ea));
    out.push_back(make_check(eb + " " + ea + " " + sb + " = " + eb + " " + sa, Eb * Ea * Sb, Eb * Sa));
    out.push_back(make_check(ea + " " + eb + " " + sa + " = " + ea + " " + sb, Ea * Eb * Sa, Ea * Sb));
    out.push_back(make_check(sb + " " + ea + " " + eb + " = " + sa + " " + eb, Sb * Ea * Eb, Sa * Eb));
    out.push_back(make_check(sa + " " + eb + " " + sa + " = " + sb + " " + ea + " " + sb,
                             Sa * Eb * Sa, Sb * Ea * Sb));
  }
  return out;
}

std::vector<RelationCheck> verify_brauer_relations(const ParameterFamily& q, int k) {
  if (k < 2) throw DomainError("verify_brauer_relations: degree must be >= 2");
  std::vector<RelationCheck> out = verify_operator_relations(images_of_family(q, k));

  const SparseOp P = p_op(q);
  const SparseOp Q = q_op(q);

  // Degree-3 contraction identities, stated directly in P and Q.
  {
    const SparseOp Q12 = embed_two_site(Q, 1, 2, 3);
    const SparseOp Q23 = embed_two_site(Q, 2, 3, 3);
    const SparseOp P12 = embed_two_site(P, 1, 2, 3);
    const SparseOp P23 = embed_two_site(P, 2, 3, 3);
    out.push_back(make_check("Q^(12) Q^(23) Q^(12) = Q^(12)", Q12 * Q23 * Q12, Q12));
    out.push_back(make_check("P^(12) Q^(23) Q^(12) = -P^(23) Q^(12)", P12 * Q23 * Q12,
                             -(P23 * Q12)));
  }

  // Swap / transpose dualities against the inverted family.
  const ParameterFamily qi = q.inverted();
  const SparseOp Pi = p_op(qi);
  const SparseOp Qi = q_op(qi);
  out.push_back(make_check("P_q^(21) = P_{q^-1}", P.swap_sites(), Pi));
  out.push_back(make_check("Q_q^(21) = Q_{q^-1}", Q.swap_sites(), Qi));
  out.push_back(make_check("P_q^T = P_{q^-1}", P.transpose(), Pi));
  out.push_back(make_check("Q_q^T = Q_{q^-1}", Q.transpose(), Qi));

  return out;
}

}  // namespace qbrauer

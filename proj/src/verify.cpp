#include "qbrauer/verify.hpp"

#include <string>

#include "qbrauer/linalg.hpp"

namespace qbrauer {

namespace {

RelationCheck op_check(std::string name, const SparseOp& lhs, const SparseOp& rhs) {
  RelationCheck c;
  c.name = std::move(name);
  c.degree = lhs.degree();
  const SparseOp diff = lhs - rhs;
  c.pass = diff.is_zero();
  if (!c.pass) c.witness = diff.first_entry();
  return c;
}

RelationCheck flag_check(std::string name, bool pass, int degree) {
  RelationCheck c;
  c.name = std::move(name);
  c.pass = pass;
  c.degree = degree;
  return c;
}

}  // namespace

std::vector<RelationCheck> verify_suite(const ParameterFamily& q, int k) {
  if (k < 2) throw DomainError("verify_suite: degree must be >= 2");
  const int r = q.rank();
  const Rational omega(-2 * r);
  std::vector<RelationCheck> out = verify_brauer_relations(q, k);

  if (r == 1) out.push_back(flag_check("C_q = 0 at r = 1", c_idempotent(q).is_zero(), 2));

  const GeneratorImages im = images_of_family(q, k);

  // Pairing operator and the symmetrizer property.  For k beyond r+1 the
  // operator is undefined and those checks do not apply.
  if (k <= r + 1) {
    const SparseOp ck = pairing_type_c(q, k);
    out.push_back(op_check("C_(k)^2 = C_(k)", ck * ck, ck));
    for (int a = 1; a < k; ++a) {
      const SparseOp& S = im.sig[static_cast<std::size_t>(a - 1)];
      const SparseOp& E = im.eps[static_cast<std::size_t>(a - 1)];
      const SparseOp zero = SparseOp::zero(q.alphabet(), k);
      const std::string sa = "sigma_" + std::to_string(a), ea = "eps_" + std::to_string(a);
      out.push_back(op_check(sa + " C_(k) = C_(k)", S * ck, ck));
      out.push_back(op_check("C_(k) " + sa + " = C_(k)", ck * S, ck));
      out.push_back(op_check(ea + " C_(k) = 0", E * ck, zero));
      out.push_back(op_check("C_(k) " + ea + " = 0", ck * E, zero));
    }
    out.push_back(
        op_check("rho(product form) = rho(sum form)", ck, rho(im, symmetrizer_sum(k, omega))));
  }

  // Transpose duality of the degree-2 idempotent.
  out.push_back(op_check("C_q^T = C_{q^-1}", c_idempotent(q).transpose(),
                         c_idempotent(q.inverted())));

  // Space equivalences im(1 - C_q) = im(1 + P_q) + im(Q_q), both sides.
  {
    const SparseOp id2 = SparseOp::identity(q.alphabet(), 2);
    const SparseOp m = id2 - c_idempotent(q);
    const SparseOp p1 = id2 + p_op(q);
    const SparseOp qq = q_op(q);
    out.push_back(flag_check("colspace(1 - C_q) <= colspace(1 + P_q) + colspace(Q_q)",
                             colspace_contained(m, {p1, qq}), 2));
    out.push_back(flag_check("colspace(1 + P_q) and colspace(Q_q) <= colspace(1 - C_q)",
                             colspace_contained(p1, {m}) && colspace_contained(qq, {m}), 2));
    const SparseOp mt = m.transpose(), p1t = p1.transpose(), qqt = qq.transpose();
    out.push_back(flag_check("rowspace(1 - C_q) <= rowspace(1 + P_q) + rowspace(Q_q)",
                             colspace_contained(mt, {p1t, qqt}), 2));
    out.push_back(flag_check("rowspace(1 + P_q) and rowspace(Q_q) <= rowspace(1 - C_q)",
                             colspace_contained(p1t, {mt}) && colspace_contained(qqt, {mt}), 2));
  }

  // h-epsilon traces must not depend on the family.
  {
    const ParameterFamily base = ParameterFamily::non_deformed(r);
    for (int t = 0; 2 * t <= k; ++t) {
      const Rational got = trace_h_eps(q, k, t);
      const Rational want = trace_h_eps(base, k, t);
      out.push_back(flag_check(
          "trace_h_eps(k=" + std::to_string(k) + ",t=" + std::to_string(t) + ") is q-independent",
          got == want, k));
    }
  }

  return out;
}

}  // namespace qbrauer

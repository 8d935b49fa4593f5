#include "qbrauer/params.hpp"

#include "qbrauer/rng.hpp"

#include <cstdlib>

namespace qbrauer {

ParameterFamily ParameterFamily::derive(int r, const std::vector<Rational>& free_q,
                                        const std::map<std::pair<int, int>, Rational>& free_qij) {
  if (r < 1) throw DomainError("ParameterFamily: rank must be >= 1");
  if (static_cast<int>(free_q.size()) != r)
    throw DomainError("ParameterFamily: expected exactly r diagonal parameters");
  for (const auto& v : free_q)
    if (v.is_zero()) throw DomainError("ParameterFamily: parameters must be nonzero");
  if (static_cast<int>(free_qij.size()) != r * (r - 1) / 2)
    throw DomainError("ParameterFamily: expected exactly r(r-1)/2 pair parameters");
  for (const auto& [key, v] : free_qij) {
    const auto [i, j] = key;
    if (!(1 <= i && i < j && j <= r))
      throw DomainError("ParameterFamily: pair parameters must be keyed by 1 <= i < j <= r");
    if (v.is_zero()) throw DomainError("ParameterFamily: parameters must be nonzero");
  }

  std::map<int, Rational> qi;
  for (int i = 1; i <= r; ++i) {
    qi.emplace(i, free_q[static_cast<std::size_t>(i - 1)]);
    qi.emplace(-i, free_q[static_cast<std::size_t>(i - 1)].inverse());
  }

  // Positive-pair base values q_ab for 1 <= a, b <= r.
  auto base = [&](int a, int b) -> Rational {
    if (a == b) return Rational(1);
    if (a < b) return free_qij.at({a, b});
    return free_qij.at({b, a}).inverse();
  };

  // Extension to signed labels.  With a = |i|, b = |j|:
  //   q_{a,b}   = base
  //   q_{-a,b}  = q_ab^{-1} q_b^2
  //   q_{a,-b}  = q_ab^{-1} q_a^{-2}
  //   q_{-a,-b} = q_ab q_a^2 q_b^{-2}
  // (the last two follow from reciprocity applied to the sign-flip rule).
  std::map<std::pair<int, int>, Rational> qij;
  for (int i = -r; i <= r; ++i) {
    if (i == 0) continue;
    for (int j = -r; j <= r; ++j) {
      if (j == 0) continue;
      const int a = std::abs(i), b = std::abs(j);
      const Rational qab = base(a, b);
      const Rational& qa = qi.at(a);
      const Rational& qb = qi.at(b);
      Rational v;
      if (i > 0 && j > 0)
        v = qab;
      else if (i < 0 && j > 0)
        v = qab.inverse() * qb * qb;
      else if (i > 0 && j < 0)
        v = qab.inverse() * (qa * qa).inverse();
      else
        v = qab * qa * qa * (qb * qb).inverse();
      qij.emplace(std::make_pair(i, j), std::move(v));
    }
  }
  return ParameterFamily(r, std::move(qi), std::move(qij));
}

ParameterFamily ParameterFamily::build(int r, const std::vector<Rational>& free_q,
                                       const std::map<std::pair<int, int>, Rational>& free_qij) {
  return derive(r, free_q, free_qij);
}

ParameterFamily ParameterFamily::non_deformed(int r) {
  std::vector<Rational> ones(static_cast<std::size_t>(r), Rational(1));
  std::map<std::pair<int, int>, Rational> pair_ones;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) pair_ones.emplace(std::make_pair(i, j), Rational(1));
  return build(r, ones, pair_ones);
}

ParameterFamily ParameterFamily::sample(int r, std::uint64_t seed) {
  if (r < 1) throw DomainError("ParameterFamily: rank must be >= 1");
  // Domain-separate the stream from TypeAParams::sample.
  SplitMix64 rng{seed ^ 0xC0FFEE0000000001ull};
  std::vector<Rational> free_q;
  free_q.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) free_q.push_back(rng.rational());
  std::map<std::pair<int, int>, Rational> free_qij;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) free_qij.emplace(std::make_pair(i, j), rng.rational());
  return build(r, free_q, free_qij);
}

ParameterFamily ParameterFamily::unchecked_with_overrides(
    int r, const std::vector<Rational>& free_q,
    const std::map<std::pair<int, int>, Rational>& free_qij,
    const std::map<std::pair<int, int>, Rational>& overrides) {
  ParameterFamily f = derive(r, free_q, free_qij);
  for (const auto& [key, v] : overrides) {
    const auto [i, j] = key;
    if (i == 0 || j == 0 || std::abs(i) > r || std::abs(j) > r)
      throw DomainError("ParameterFamily: override index out of range");
    if (v.is_zero()) throw DomainError("ParameterFamily: parameters must be nonzero");
    f.qij_[key] = v;
  }
  return f;
}

const Rational& ParameterFamily::q(int i) const {
  auto it = qi_.find(i);
  if (it == qi_.end()) throw DomainError("ParameterFamily: index out of range");
  return it->second;
}

const Rational& ParameterFamily::q(int i, int j) const {
  auto it = qij_.find({i, j});
  if (it == qij_.end()) throw DomainError("ParameterFamily: index pair out of range");
  return it->second;
}

ParameterFamily ParameterFamily::inverted() const {
  std::map<int, Rational> qi;
  for (const auto& [i, v] : qi_) qi.emplace(i, v.inverse());
  std::map<std::pair<int, int>, Rational> qij;
  for (const auto& [key, v] : qij_) qij.emplace(key, v.inverse());
  return ParameterFamily(r_, std::move(qi), std::move(qij));
}

std::vector<std::string> ParameterFamily::violated_constraints() const {
  bool qpm = false, vecq = false;
  for (int i = -r_; i <= r_; ++i) {
    if (i == 0) continue;
    if (q(i, i) != Rational(1)) qpm = true;
    if (q(-i) * q(i) != Rational(1)) vecq = true;
    for (int j = -r_; j <= r_; ++j) {
      if (j == 0) continue;
      if (q(i, j) * q(j, i) != Rational(1)) qpm = true;
      if (q(-i, j) != q(i, j).inverse() * q(j) * q(j)) vecq = true;
    }
  }
  std::vector<std::string> out;
  if (qpm) out.emplace_back("qpm");
  if (vecq) out.emplace_back("vecq");
  return out;
}

TypeAParams TypeAParams::build(int n, const std::map<std::pair<int, int>, Rational>& free_pij) {
  if (n < 1) throw DomainError("TypeAParams: size must be >= 1");
  if (static_cast<int>(free_pij.size()) != n * (n - 1) / 2)
    throw DomainError("TypeAParams: expected exactly n(n-1)/2 pair parameters");
  std::map<std::pair<int, int>, Rational> pij;
  for (int i = 1; i <= n; ++i) pij.emplace(std::make_pair(i, i), Rational(1));
  for (const auto& [key, v] : free_pij) {
    const auto [i, j] = key;
    if (!(1 <= i && i < j && j <= n))
      throw DomainError("TypeAParams: pair parameters must be keyed by 1 <= i < j <= n");
    if (v.is_zero()) throw DomainError("TypeAParams: parameters must be nonzero");
    pij.emplace(std::make_pair(i, j), v);
    pij.emplace(std::make_pair(j, i), v.inverse());
  }
  return TypeAParams(n, std::move(pij));
}

TypeAParams TypeAParams::non_deformed(int n) {
  std::map<std::pair<int, int>, Rational> ones;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) ones.emplace(std::make_pair(i, j), Rational(1));
  return build(n, ones);
}

TypeAParams TypeAParams::sample(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("TypeAParams: size must be >= 1");
  SplitMix64 rng{seed ^ 0xC0FFEE0000000002ull};
  std::map<std::pair<int, int>, Rational> free_pij;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) free_pij.emplace(std::make_pair(i, j), rng.rational());
  return build(n, free_pij);
}

const Rational& TypeAParams::q(int i, int j) const {
  auto it = pij_.find({i, j});
  if (it == pij_.end()) throw DomainError("TypeAParams: label pair out of range");
  return it->second;
}

TypeAParams TypeAParams::inverted() const {
  std::map<std::pair<int, int>, Rational> pij;
  for (const auto& [key, v] : pij_) pij.emplace(key, v.inverse());
  return TypeAParams(n_, std::move(pij));
}

}  // namespace qbrauer

#include "qbrauer/brauer.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qbrauer {

BrauerElement BrauerElement::one(int k, Rational omega) {
  BrauerElement e(k, std::move(omega));
  e.add_term({}, Rational(1));
  return e;
}

BrauerElement BrauerElement::word(BrauerWord w, int k, Rational omega) {
  BrauerElement e(k, std::move(omega));
  for (int letter : w) {
    const int a = std::abs(letter);
    if (letter == 0 || a > k - 1) throw DomainError("BrauerElement: letter out of range");
  }
  e.add_term(w, Rational(1));
  return e;
}

BrauerElement BrauerElement::sigma(int a, int k, Rational omega) {
  if (a < 1 || a > k - 1) throw DomainError("BrauerElement: generator index out of range");
  return word({a}, k, std::move(omega));
}

BrauerElement BrauerElement::eps(int a, int k, Rational omega) {
  if (a < 1 || a > k - 1) throw DomainError("BrauerElement: generator index out of range");
  return word({-a}, k, std::move(omega));
}

void BrauerElement::add_term(const BrauerWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void BrauerElement::check_compatible(const BrauerElement& o) const {
  if (k_ != o.k_) throw ShapeError("BrauerElement: degree mismatch");
  if (omega_ != o.omega_) throw DomainError("BrauerElement: omega mismatch");
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

BrauerElement& BrauerElement::operator-=(const BrauerElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

BrauerElement& BrauerElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
  a.check_compatible(b);
  BrauerElement out(a.k_, a.omega_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      BrauerWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

bool operator==(const BrauerElement& a, const BrauerElement& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

BrauerWord tau_word(int a, int b) {
  if (a > b) throw DomainError("tau_word: requires a <= b");
  BrauerWord w;
  for (int s = a; s < b; ++s) w.push_back(s);
  return w;
}

namespace {

// tau_{a,b-1} g tau_{a,b-1}^{-1} as a word, g a single letter on strand b-1.
BrauerWord conjugated_word(int a, int b, int g_letter) {
  BrauerWord w = tau_word(a, b - 1);
  BrauerWord inv(w.rbegin(), w.rend());  // sigma letters are involutions
  BrauerWord out = w;
  out.push_back(g_letter);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

void order_and_validate(int& a, int& b, int k, const char* what) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > k || a == b) throw DomainError(std::string(what) + ": invalid strand pair");
}

}  // namespace

BrauerElement sigma_ab(int a, int b, int k, const Rational& omega) {
  order_and_validate(a, b, k, "sigma_ab");
  return BrauerElement::word(conjugated_word(a, b, b - 1), k, omega);
}

BrauerElement eps_ab(int a, int b, int k, const Rational& omega) {
  order_and_validate(a, b, k, "eps_ab");
  return BrauerElement::word(conjugated_word(a, b, -(b - 1)), k, omega);
}

BrauerElement tau_ab(int a, int b, int k, const Rational& omega) {
  if (a > b) throw DomainError("tau_ab: requires a <= b");
  if (a < 1 || b > k) throw DomainError("tau_ab: strand out of range");
  return BrauerElement::word(tau_word(a, b), k, omega);
}

BrauerElement y_element(int b, int k, const Rational& omega) {
  if (b < 2 || b > k) throw DomainError("y_element: requires 2 <= b <= k");
  BrauerElement y(k, omega);
  for (int a = 1; a < b; ++a) {
    y += sigma_ab(a, b, k, omega);
    y -= eps_ab(a, b, k, omega);
  }
  return y;
}

BrauerElement v_element(int a, int k, const Rational& omega) {
  if (omega.is_zero()) throw DomainError("v_element: omega must be nonzero");
  BrauerElement v = BrauerElement::one(k, omega);
  v += BrauerElement::sigma(a, k, omega);
  v *= Rational(1, 2);
  v -= BrauerElement::eps(a, k, omega) * omega.inverse();
  return v;
}

BrauerElement element_of_permutation(const Permutation& sigma, int k, const Rational& omega) {
  if (sigma.size() != k) throw ShapeError("element_of_permutation: degree mismatch");
  BrauerWord w;
  for (int a : sigma.adjacent_word()) w.push_back(a);
  return BrauerElement::word(std::move(w), k, omega);
}

BrauerElement h_element(int k, const Rational& omega) {
  BrauerElement h(k, omega);
  for_each_permutation(k, [&](const Permutation& sigma) {
    h += element_of_permutation(sigma, k, omega);
  });
  h *= Rational(Int(1), factorial(static_cast<unsigned long>(k)));
  return h;
}

BrauerElement symmetrizer_product(int k, const Rational& omega) {
  if (k < 1) throw DomainError("symmetrizer_product: degree must be >= 1");
  BrauerElement s = BrauerElement::one(k, omega);
  for (int b = 2; b <= k; ++b) {
    const Rational den = Rational(2 * b - 4) + omega;
    if (den.is_zero())
      throw UndefinedError("symmetrizer: denominator 2b + omega - 4 vanishes at b = " +
                           std::to_string(b));
    const BrauerElement y = y_element(b, k, omega);
    BrauerElement f1 = y + BrauerElement::one(k, omega);
    BrauerElement f2 = y + BrauerElement::one(k, omega) * (omega + Rational(b - 3));
    s = s * f1;
    s = s * f2;
    s *= den.inverse();
  }
  s *= Rational(Int(1), factorial(static_cast<unsigned long>(k)));
  return s;
}

namespace {

// Unordered sets of t pairwise-disjoint strand pairs within {1..k}.
void enumerate_pairings(int k, int t, int min_first, std::vector<std::pair<int, int>>& current,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (t == 0) {
    fn(current);
    return;
  }
  // Canonical order: first components strictly increasing across pairs, so
  // every unordered set of disjoint pairs is produced exactly once.  Unpaired
  // strands are allowed (t pairs need only 2t of the k strands).
  auto used = [&](int s) {
    for (const auto& [x, y] : current)
      if (x == s || y == s) return true;
    return false;
  };
  for (int first = min_first; first <= k; ++first) {
    if (used(first)) continue;
    for (int second = first + 1; second <= k; ++second) {
      if (used(second)) continue;
      current.emplace_back(first, second);
      enumerate_pairings(k, t - 1, first + 1, current, fn);
      current.pop_back();
    }
  }
}

}  // namespace

BrauerElement symmetrizer_sum(int k, const Rational& omega) {
  if (k < 1) throw DomainError("symmetrizer_sum: degree must be >= 1");
  const Rational half_omega = omega / Rational(2);
  BrauerElement total(k, omega);
  total += BrauerElement::one(k, omega);  // t = 0 term
  for (int t = 1; 2 * t <= k; ++t) {
    const Rational bin = gen_binom(half_omega + Rational(k - 2), static_cast<unsigned long>(t));
    if (bin.is_zero())
      throw UndefinedError("symmetrizer: generalized binomial binom(omega/2 + k - 2, " +
                           std::to_string(t) + ") vanishes");
    Rational coeff = Rational(t % 2 == 0 ? 1 : -1);
    coeff /= Rational(Int(Int(1) << t)) * Rational(factorial(static_cast<unsigned long>(t)));
    coeff /= bin;
    BrauerElement contractions(k, omega);
    std::vector<std::pair<int, int>> current;
    enumerate_pairings(k, t, 1, current, [&](const std::vector<std::pair<int, int>>& pairing) {
      BrauerElement prod = BrauerElement::one(k, omega);
      for (const auto& [a, b] : pairing) prod = prod * eps_ab(a, b, k, omega);
      contractions += prod;
    });
    total += contractions * coeff;
  }
  return h_element(k, omega) * total;
}

Rational augmentation(const BrauerElement& elem) {
  Rational v(0);
  for (const auto& [w, c] : elem.terms()) {
    const bool has_eps = std::any_of(w.begin(), w.end(), [](int l) { return l < 0; });
    if (!has_eps) v += c;
  }
  return v;
}

}  // namespace qbrauer

#include "qbrauer/quadalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qbrauer/linalg.hpp"

namespace qbrauer {

void Relation::add(int a, int b, const Rational& c) {
  const auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

RelationSet relations_xi_c(const ParameterFamily& q_in, bool dual) {
  const ParameterFamily q = dual ? q_in.inverted() : q_in;
  RelationSet rs = relations_xi_a(q);
  const Alphabet alpha = q.alphabet();
  Relation contraction;
  for (int i = 1; i <= q.rank(); ++i)
    contraction.add(alpha.digit(i), alpha.digit(-i), q.q(i));
  rs.relations.push_back(std::move(contraction));
  return rs;
}

RelationSet relations_x_c(const ParameterFamily& q) {
  const Alphabet alpha = q.alphabet();
  const int r = q.rank();
  RelationSet rs{alpha, {}};
  // Mixed pairs in label order i < j, skipping j = -i (those rows carry the
  // contraction term).
  for (int di = 0; di < alpha.letters(); ++di)
    for (int dj = di + 1; dj < alpha.letters(); ++dj) {
      const int i = alpha.label(di), j = alpha.label(dj);
      if (j == -i) continue;
      Relation rel;
      rel.add(di, dj, Rational(1));
      rel.add(dj, di, -q.q(j, i));
      rs.relations.push_back(std::move(rel));
    }
  // One contraction row with lambda substituted by its definition; the other
  // r - 1 substituted rows are proportional to it.  Cancels identically at
  // r = 1.
  Relation c;
  c.add(alpha.digit(1), alpha.digit(-1), Rational(1));
  c.add(alpha.digit(-1), alpha.digit(1), -(q.q(1) * q.q(1)));
  const Rational scale = q.q(1) / Rational(r);  // eps_1 q_1 / r
  for (int j = 1; j <= r; ++j) {
    c.add(alpha.digit(j), alpha.digit(-j), -(scale * q.q(j).inverse()));
    c.add(alpha.digit(-j), alpha.digit(j), scale * q.q(j));
  }
  if (!c.is_zero()) rs.relations.push_back(std::move(c));
  return rs;
}

std::uint64_t word_cap_from_env() {
  if (const char* v = std::getenv("QBRAUER_WORD_CAP")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    throw DomainError("QBRAUER_WORD_CAP must be a positive integer, got \"" + std::string(v) + "\"");
  }
  return 200000;
}

std::uint64_t component_dim(const RelationSet& rels, int d, std::uint64_t word_cap) {
  if (d < 1) throw DomainError("component_dim: degree must be >= 1");
  const auto n = static_cast<std::uint64_t>(rels.generators());
  std::uint64_t words = 1;
  for (int i = 0; i < d; ++i) {
    if (words > word_cap / n)
      throw ResourceError("component_dim: " + std::to_string(n) + "^" + std::to_string(d) +
                          " words exceed the cap " + std::to_string(word_cap) +
                          " (QBRAUER_WORD_CAP)");
    words *= n;
  }
  if (d == 1) return words;  // no degree-2 relation can act

  // Span of u R v over all relations R and all splits |u| + |v| = d - 2.
  // Words are column indices in the mixed-radix encoding with position 0
  // most significant.
  SparseMatrix m{words, {}};
  std::uint64_t left_dim = 1;                       // n^{|u|}
  for (int lu = 0; lu + 2 <= d; ++lu) {
    const int lv = d - 2 - lu;
    std::uint64_t right_dim = 1;
    for (int i = 0; i < lv; ++i) right_dim *= n;
    const std::uint64_t pair_place = right_dim;     // place value of position lu+1
    for (std::uint64_t u = 0; u < left_dim; ++u) {
      const std::uint64_t base = u * n * n * right_dim;
      for (std::uint64_t v = 0; v < right_dim; ++v) {
        for (const Relation& rel : rels.relations) {
          std::vector<std::pair<std::uint64_t, Rational>> row;
          row.reserve(rel.terms.size());
          for (const auto& [ab, coef] : rel.terms)
            row.emplace_back(base + static_cast<std::uint64_t>(ab.first) * n * pair_place +
                                 static_cast<std::uint64_t>(ab.second) * pair_place + v,
                             coef);
          m.add_row(std::move(row));
        }
      }
    }
    left_dim *= n;
  }
  return words - exact_rank(std::move(m));
}

std::uint64_t dim_formula(int r, int k) {
  if (r < 1 || k < 1) throw DomainError("dim_formula: requires r >= 1, k >= 1");
  if (k > r + 1) return 0;
  const Rational v = Rational(2 * r - 2 * k + 2, k) *
                     gen_binom(Rational(2 * r + 1), static_cast<unsigned long>(k - 1));
  if (v.sign() < 0 || v.den() != 1)
    throw std::logic_error("dim_formula: value " + v.str() + " is not a natural number");
  if (!v.num().fits_ulong_p())
    throw std::logic_error("dim_formula: value out of range");
  return v.num().get_ui();
}

NormalMonomial grassmann_normal_form(const std::vector<int>& word, const ParameterFamily& q,
                                     GrassmannVariant variant) {
  const Alphabet alpha = q.alphabet();
  for (int x : word)
    if (!alpha.valid(x)) throw DomainError("grassmann_normal_form: label out of range");
  {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return NormalMonomial{Rational(0), {}};
  }
  const int k = static_cast<int>(word.size());
  std::vector<int> target = word;
  std::sort(target.begin(), target.end());
  // sigma with word_s = target_{sigma(s)}
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    const auto it = std::lower_bound(target.begin(), target.end(), word[static_cast<std::size_t>(s)]);
    images[static_cast<std::size_t>(s)] = static_cast<int>(it - target.begin()) + 1;
  }
  const Permutation sigma = Permutation::from_images(images);
  const Rational m = mu(target, sigma, q);
  Rational coeff(sigma.sign());
  if (variant == GrassmannVariant::lower)
    coeff /= m;
  else
    coeff *= m;
  return NormalMonomial{coeff, std::move(target)};
}

}  // namespace qbrauer

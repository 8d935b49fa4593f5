#include <doctest.h>

#include <vector>

#include "qbrauer/linalg.hpp"
#include "qbrauer/symrep.hpp"

using namespace qbrauer;

namespace {

std::uint64_t code(const std::vector<int>& labels, const Alphabet& a) {
  return MultiIndex(labels).encode(a);
}

// binom(n, k) as a plain integer for rank expectations
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t v = 1;
  for (std::uint64_t t = 0; t < k; ++t) v = v * (n - t) / (t + 1);
  return v;
}

}  // namespace

TEST_CASE("deformed permutation operator layout and involution") {
  const ParameterFamily q = ParameterFamily::sample(2, 3);
  const Alphabet a = q.alphabet();
  const SparseOp p = p_op(q);

  // P e_{(i,j)} = q_ij e_{(j,i)}
  CHECK(p.entry(code({2, 1}, a), code({1, 2}, a)) == q.q(1, 2));
  CHECK(p.entry(code({-1, 2}, a), code({2, -1}, a)) == q.q(2, -1));
  CHECK(p.entry(code({1, 1}, a), code({1, 1}, a)) == Rational(1));
  CHECK(p.entry(code({1, 2}, a), code({1, 2}, a)).is_zero());

  CHECK(p * p == SparseOp::identity(a, 2));
  CHECK(p.nnz() == 16);

  // braid relation on three sites
  const SparseOp p12 = embed_two_site(p, 1, 2, 3);
  const SparseOp p23 = embed_two_site(p, 2, 3, 3);
  CHECK(p12 * p23 * p12 == p23 * p12 * p23);

  // the type-A operator obeys the same identities
  const TypeAParams ta = TypeAParams::sample(3, 3);
  const SparseOp pa = p_op(ta);
  CHECK(pa * pa == SparseOp::identity(ta.alphabet(), 2));
}

TEST_CASE("permutation representation is a homomorphism") {
  const TypeAParams ta = TypeAParams::sample(2, 9);
  const int k = 3;
  for_each_permutation(k, [&](const Permutation& s) {
    for_each_permutation(k, [&](const Permutation& t) {
      CHECK(rho_perm(s * t, SignChoice::plus, ta, k) ==
            rho_perm(s, SignChoice::plus, ta, k) * rho_perm(t, SignChoice::plus, ta, k));
    });
  });
  // minus variant: sign carried per adjacent letter
  const Permutation flip = Permutation::transposition(1, 2, 2);
  CHECK(rho_perm(flip, SignChoice::minus, ta, 2) == -p_op(ta));
}

TEST_CASE("type-A pairing operators are idempotents with binomial ranks") {
  const TypeAParams ta = TypeAParams::sample(4, 21);
  for (int k = 1; k <= 4; ++k) {
    const SparseOp s = pairing_type_a(ta, k, PairKind::S);
    const SparseOp anti = pairing_type_a(ta, k, PairKind::A);
    CHECK(s * s == s);
    CHECK(anti * anti == anti);
    CHECK(rank(anti) == binom(4, static_cast<std::uint64_t>(k)));
    CHECK(rank(s) == binom(4 + static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k)));
  }
  CHECK(rank(pairing_type_a(ta, 5, PairKind::A)) == 0);
  CHECK_THROWS_AS(static_cast<void>(pairing_type_a(ta, 0, PairKind::A)), DomainError);
}

TEST_CASE("A-operator entries match the closed form") {
  const ParameterFamily q = ParameterFamily::sample(2, 31);
  const Alphabet a = q.alphabet();
  const std::vector<int> all{-2, -1, 1, 2};

  for (int k : {2, 3}) {
    const SparseOp anti = pairing_type_a(q, k, PairKind::A);
    // every strictly ascending tuple I with distinct entries, every sigma
    std::vector<std::vector<int>> tuples;
    if (k == 2) {
      for (std::size_t x = 0; x < all.size(); ++x)
        for (std::size_t y = x + 1; y < all.size(); ++y) tuples.push_back({all[x], all[y]});
    } else {
      for (std::size_t x = 0; x < all.size(); ++x)
        for (std::size_t y = x + 1; y < all.size(); ++y)
          for (std::size_t z = y + 1; z < all.size(); ++z)
            tuples.push_back({all[x], all[y], all[z]});
    }
    for (const auto& I : tuples) {
      for_each_permutation(k, [&](const Permutation& sigma) {
        std::vector<int> row(I.size());
        for (int s = 1; s <= k; ++s)
          row[static_cast<std::size_t>(s - 1)] = I[static_cast<std::size_t>(sigma(s) - 1)];
        CHECK(anti.entry(code(row, a), code(I, a)) == a_entry_closed_form(I, sigma, q));
      });
    }
  }

  CHECK_THROWS_AS(static_cast<void>(a_entry_closed_form({1, 1}, Permutation::identity(2), q)),
                  DomainError);
}

TEST_CASE("closed form is normalized on the identity permutation") {
  const ParameterFamily q = ParameterFamily::sample(3, 8);
  CHECK(a_entry_closed_form({-3, 1, 2}, Permutation::identity(3), q) == Rational(1, 6));
  // a single inversion picks up the parameter and the sign
  const Permutation swap = Permutation::transposition(1, 2, 2);
  CHECK(a_entry_closed_form({1, 2}, swap, q) == Rational(-1, 2) * q.q(1, 2));
}

#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "qbrauer/brauer_rep.hpp"
#include "qbrauer/linalg.hpp"
#include "qbrauer/quadalg.hpp"

using namespace qbrauer;

namespace {

// independent oracle: bubble-sort a generator word to ascending order with
// the rewriting rule psi_x psi_y = -q_{xy} psi_y psi_x (x > y, from the
// defining relation with the roles inverted), zero on a repeated pair
NormalMonomial bubble_sort_lower(std::vector<int> w, const ParameterFamily& q) {
  Rational coeff(1);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1]) return {Rational(0), {}};
      if (w[p] > w[p + 1]) {
        coeff *= -q.q(w[p], w[p + 1]);
        std::swap(w[p], w[p + 1]);
        moved = true;
      }
    }
  }
  return {coeff, w};
}

// rank of the stacked row span of several relation lists, each row a vector
// over ordered generator pairs
std::size_t pair_span_rank(const std::vector<Relation>& rels, int n) {
  SparseMatrix m;
  m.ncols = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  for (const auto& rel : rels) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (const auto& [ab, c] : rel.terms)
      row.emplace_back(static_cast<std::size_t>(ab.first) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(ab.second),
                       c);
    m.add_row(std::move(row));
  }
  return exact_rank(m);
}

std::vector<Relation> op_rows_as_relations(const SparseOp& op) {
  const int n = op.alphabet().letters();
  std::vector<Relation> out;
  for (const auto& [row, cols] : op.rows()) {
    Relation rel;
    for (const auto& [col, c] : cols)
      rel.add(static_cast<int>(col) / n, static_cast<int>(col) % n, c);
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

TEST_CASE("anticommutation relations alone give binomial dimensions") {
  const TypeAParams p = TypeAParams::sample(4, 2);
  const RelationSet rels = relations_xi_a(p);
  CHECK(rels.generators() == 4);
  const std::vector<std::uint64_t> expected{4, 6, 4, 1, 0};
  for (int d = 1; d <= 5; ++d)
    CHECK(component_dim(rels, d) == expected[static_cast<std::size_t>(d - 1)]);
}

TEST_CASE("contraction relation cuts the dimensions down to the closed form") {
  for (int r : {2, 3}) {
    const ParameterFamily q = ParameterFamily::sample(r, 5);
    const RelationSet rels = relations_xi_c(q);
    CHECK(rels.relations.size() ==
          static_cast<std::size_t>((2 * r) * (2 * r + 1) / 2 + 1));
    for (int d = 1; d <= r + 1; ++d) CHECK(component_dim(rels, d) == dim_formula(r, d));
  }
}

TEST_CASE("dual presentation carries the inverted parameters") {
  const ParameterFamily q = ParameterFamily::sample(2, 7);
  CHECK(relations_xi_c(q, true) == relations_xi_c(q.inverted()));
  CHECK(relations_xi_c(q, true).relations != relations_xi_c(q).relations);
}

TEST_CASE("closed dimension formula") {
  const std::vector<std::uint64_t> r2{4, 5, 0, 0};
  for (int k = 1; k <= 4; ++k) CHECK(dim_formula(2, k) == r2[static_cast<std::size_t>(k - 1)]);
  const std::vector<std::uint64_t> r3{6, 14, 14, 0, 0};
  for (int k = 1; k <= 5; ++k) CHECK(dim_formula(3, k) == r3[static_cast<std::size_t>(k - 1)]);
  CHECK(dim_formula(4, 1) == 8);
  CHECK(dim_formula(4, 2) == 27);
  CHECK(dim_formula(4, 3) == 48);
  CHECK(dim_formula(4, 4) == 42);
  CHECK(dim_formula(4, 5) == 0);
  CHECK(dim_formula(1, 1) == 2);
  CHECK(dim_formula(1, 2) == 0);
}

TEST_CASE("rank agreement: relations, pairing operator, formula") {
  const ParameterFamily q = ParameterFamily::sample(2, 9);
  for (int k = 1; k <= 3; ++k) {
    const std::uint64_t want = dim_formula(2, k);
    CHECK(component_dim(relations_xi_c(q), k) == want);
    CHECK(static_cast<std::uint64_t>(rank(pairing_type_c(q, k))) == want);
  }
}

TEST_CASE("polynomial-side relations span the row space of the idempotent") {
  const ParameterFamily q = ParameterFamily::sample(2, 3);
  const RelationSet xc = relations_x_c(q);
  // mixed pairs: digit-ordered pairs (i, j), j != -i: C(4,2) - 2 = 4; plus one
  // contraction row
  CHECK(xc.relations.size() == 5);

  const auto c_rows = op_rows_as_relations(c_idempotent(q));
  const std::size_t rank_c = pair_span_rank(c_rows, 4);
  const std::size_t rank_x = pair_span_rank(xc.relations, 4);
  auto joined = xc.relations;
  joined.insert(joined.end(), c_rows.begin(), c_rows.end());
  const std::size_t rank_joined = pair_span_rank(joined, 4);
  CHECK(rank_x == rank_c);
  CHECK(rank_joined == rank_c);  // each span contains the other

  // the quotient dimensions agree with the Grassmann side
  CHECK(component_dim(xc, 2) == 11);
  CHECK(16 - rank_c == 11);

  CHECK(relations_x_c(ParameterFamily::sample(1, 3)).relations.empty());
}

TEST_CASE("word cap bounds the enumeration") {
  const ParameterFamily q = ParameterFamily::sample(2, 1);
  const RelationSet rels = relations_xi_c(q);
  CHECK_THROWS_AS(static_cast<void>(component_dim(rels, 4, 100)), ResourceError);
  CHECK(component_dim(rels, 2, 16) == 5);  // exactly at the cap is fine

  // environment override is picked up and validated
  setenv("QBRAUER_WORD_CAP", "123456", 1);
  CHECK(word_cap_from_env() == 123456);
  setenv("QBRAUER_WORD_CAP", "not a number", 1);
  CHECK_THROWS_AS(static_cast<void>(word_cap_from_env()), DomainError);
  unsetenv("QBRAUER_WORD_CAP");
  CHECK(word_cap_from_env() == 200000);
}

TEST_CASE("normal form agrees with the bubble-sort oracle") {
  const ParameterFamily q = ParameterFamily::sample(2, 15);
  const std::vector<int> letters{-2, -1, 1, 2};

  std::vector<std::vector<int>> words;
  for (int a : letters) {
    words.push_back({a});
    for (int b : letters) {
      words.push_back({a, b});
      for (int c : letters) {
        words.push_back({a, b, c});
        for (int d : letters) words.push_back({a, b, c, d});
      }
    }
  }
  for (const auto& w : words) {
    const NormalMonomial lower = grassmann_normal_form(w, q, GrassmannVariant::lower);
    const NormalMonomial oracle = bubble_sort_lower(w, q);
    CHECK(lower == oracle);

    const NormalMonomial upper = grassmann_normal_form(w, q, GrassmannVariant::upper);
    if (lower.is_zero()) {
      CHECK(upper.is_zero());
    } else {
      // lower carries sign/mu, upper carries sign*mu; the product is 1
      CHECK((lower.coefficient * upper.coefficient).is_one());
      CHECK(upper.word == lower.word);
    }
  }
}

TEST_CASE("normal form fixed points and the basic inversion") {
  const ParameterFamily q = ParameterFamily::sample(2, 8);
  const NormalMonomial sorted = grassmann_normal_form({-1, 1, 2}, q, GrassmannVariant::lower);
  CHECK(sorted.coefficient.is_one());
  CHECK(sorted.word == std::vector<int>{-1, 1, 2});

  const NormalMonomial swapped = grassmann_normal_form({2, 1}, q, GrassmannVariant::lower);
  CHECK(swapped.word == std::vector<int>{1, 2});
  CHECK(swapped.coefficient == -q.q(2, 1));

  CHECK(grassmann_normal_form({1, 1}, q, GrassmannVariant::lower).is_zero());
  CHECK(grassmann_normal_form({2, -2, 2}, q, GrassmannVariant::upper).is_zero());
  CHECK_THROWS_AS(static_cast<void>(grassmann_normal_form({0}, q, GrassmannVariant::lower)),
                  DomainError);
}

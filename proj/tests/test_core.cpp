#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qbrauer/linalg.hpp"
#include "qbrauer/multi_index.hpp"
#include "qbrauer/rational.hpp"
#include "qbrauer/rng.hpp"
#include "qbrauer/serialize.hpp"
#include "qbrauer/sparse_op.hpp"

using namespace qbrauer;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK(Rational(5, 7).inverse() == Rational(7, 5));
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(static_cast<void>(Rational(1, 0)), DomainError);
  CHECK_THROWS_AS(static_cast<void>(Rational(0).inverse()), DomainError);
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2).pow(10) == Rational(1024));
}

TEST_CASE("rational string round trip") {
  for (const auto& s : {"0", "1", "-1", "3/2", "-355/113", "97"}) {
    const Rational v = Rational::from_string(s);
    CHECK(v.str() == s);
    CHECK(Rational::from_string(v.str()) == v);
  }
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(static_cast<void>(Rational::from_string("")), DomainError);
  CHECK_THROWS_AS(static_cast<void>(Rational::from_string("1/")), DomainError);
  CHECK_THROWS_AS(static_cast<void>(Rational::from_string("a")), DomainError);
  CHECK_THROWS_AS(static_cast<void>(Rational::from_string("1/0")), DomainError);
}

TEST_CASE("generalized binomial and factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(gen_binom(Rational(5), 2) == Rational(10));
  // falling factorial over k!: (-3)(-4)/2 and (5/2)(3/2)(1/2)/6
  CHECK(gen_binom(Rational(-3), 2) == Rational(6));
  CHECK(gen_binom(Rational(5, 2), 3) == Rational(5, 16));
  CHECK(gen_binom(Rational(7), 0) == Rational(1));
  CHECK(gen_binom(Rational(2), 5) == Rational(0));
}

TEST_CASE("alphabet digit/label bijection") {
  const Alphabet sym = Alphabet::symplectic(3);
  CHECK(sym.letters() == 6);
  std::vector<int> order;
  for (int d = 0; d < sym.letters(); ++d) {
    order.push_back(sym.label(d));
    CHECK(sym.digit(sym.label(d)) == d);
  }
  CHECK(order == std::vector<int>{-3, -2, -1, 1, 2, 3});
  CHECK_THROWS_AS(static_cast<void>(sym.digit(0)), DomainError);
  CHECK_THROWS_AS(static_cast<void>(sym.digit(4)), DomainError);

  const Alphabet plain = Alphabet::plain(4);
  CHECK(plain.letters() == 4);
  CHECK(plain.label(0) == 1);
  CHECK(plain.digit(4) == 3);
  CHECK_THROWS_AS(static_cast<void>(plain.digit(0)), DomainError);
  CHECK_THROWS_AS(static_cast<void>(Alphabet::plain(0)), DomainError);
}

TEST_CASE("multi-index codes are lexicographic") {
  const Alphabet a = Alphabet::symplectic(2);
  std::uint64_t prev = 0;
  bool first = true;
  // enumerate all degree-3 tuples in lex label order and check monotone codes
  std::vector<std::vector<int>> tuples;
  for (int d1 = 0; d1 < 4; ++d1)
    for (int d2 = 0; d2 < 4; ++d2)
      for (int d3 = 0; d3 < 4; ++d3)
        tuples.push_back({a.label(d1), a.label(d2), a.label(d3)});
  for (const auto& t : tuples) {
    const MultiIndex mi(t);
    const std::uint64_t code = mi.encode(a);
    if (!first) CHECK(code == prev + 1);
    first = false;
    prev = code;
    CHECK(MultiIndex::decode(code, a, 3).entries() == t);
  }
  CHECK(power_dim(a, 3) == 64);
}

TEST_CASE("sparse operator algebra") {
  const Alphabet a = Alphabet::plain(3);
  const SparseOp id = SparseOp::identity(a, 2);
  CHECK(id.dim() == 9);
  CHECK(rank(id) == 9);
  CHECK(id.trace() == Rational(9));

  SparseOp x = SparseOp::zero(a, 2);
  x.add_entry(0, 1, Rational(2));
  x.add_entry(1, 0, Rational(1, 2));
  x.add_entry(4, 4, Rational(-1));
  CHECK(x.nnz() == 3);
  CHECK((x * id) == x);
  CHECK((id * x) == x);
  CHECK((x - x).is_zero());
  CHECK(x.transpose().transpose() == x);
  CHECK(x.entry(0, 1) == Rational(2));
  CHECK(x.entry(2, 7).is_zero());

  // entries cancel to zero and are dropped, keeping the form unique
  SparseOp y = x;
  y.add_entry(0, 1, Rational(-2));
  CHECK(y.nnz() == 2);
  CHECK(y.entry(0, 1).is_zero());

  const auto e = x.first_entry();
  REQUIRE(e.has_value());
  CHECK(e->row == 0);
  CHECK(e->col == 1);
  CHECK(e->value == Rational(2));

  CHECK((x * x).entry(0, 0) == Rational(1));
  CHECK((x + x) == x * Rational(2));
}

TEST_CASE("swap_sites conjugates by the tensor flip") {
  const Alphabet a = Alphabet::plain(2);
  SparseOp x = SparseOp::zero(a, 2);
  // entry at row (1,2) col (2,1)
  x.add_entry(MultiIndex({1, 2}).encode(a), MultiIndex({2, 1}).encode(a), Rational(7));
  const SparseOp s = x.swap_sites();
  CHECK(s.entry(MultiIndex({2, 1}).encode(a), MultiIndex({1, 2}).encode(a)) == Rational(7));
  CHECK(s.nnz() == 1);
  CHECK(s.swap_sites() == x);
}

TEST_CASE("two-site embedding against a brute-force tensor product") {
  const Alphabet a = Alphabet::symplectic(1);
  SparseOp t = SparseOp::zero(a, 2);
  SplitMix64 rng{31};
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 4; ++j)
      if (rng.next() % 2 == 0) t.add_entry(i, j, rng.rational());

  const SparseOp emb = embed_two_site(t, 1, 3, 3);
  // rows (x1,x2,x3), cols (y1,y2,y3): entry = T[(x1,x3),(y1,y3)] * [x2==y2]
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y) {
      const auto xi = MultiIndex::decode(x, a, 3).entries();
      const auto yi = MultiIndex::decode(y, a, 3).entries();
      const Rational want =
          xi[1] == yi[1] ? t.entry(MultiIndex({xi[0], xi[2]}).encode(a),
                                   MultiIndex({yi[0], yi[2]}).encode(a))
                         : Rational(0);
      CHECK(emb.entry(x, y) == want);
    }

  // embedding with swapped positions embeds the flipped operator
  CHECK(embed_two_site(t, 3, 1, 3) == embed_two_site(t.swap_sites(), 1, 3, 3));
  CHECK_THROWS_AS(static_cast<void>(embed_two_site(t, 2, 2, 3)), DomainError);
}

TEST_CASE("exact rank agrees between the dense and sparse paths") {
  // rank-3 matrix built from three outer products, then padded wide enough
  // to force the sparse elimination path
  SplitMix64 rng{5};
  const std::size_t rows = 9, inner = 3;
  std::vector<std::vector<Rational>> u(rows, std::vector<Rational>(inner));
  std::vector<std::vector<Rational>> v(inner, std::vector<Rational>(rows));
  for (auto& row : u)
    for (auto& x : row) x = rng.rational();
  for (auto& row : v)
    for (auto& x : row) x = rng.rational();

  auto build = [&](std::size_t ncols_total) {
    SparseMatrix m;
    m.ncols = ncols_total;
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t j = 0; j < rows; ++j) {
        Rational s(0);
        for (std::size_t t = 0; t < inner; ++t) s += u[i][t] * v[t][j];
        if (!s.is_zero()) entries.emplace_back(j, s);
      }
      m.add_row(std::move(entries));
    }
    return m;
  };

  CHECK(exact_rank(build(rows)) == inner);    // dense path (small)
  CHECK(exact_rank(build(200)) == inner);     // sparse path (wide, zero padding)
  CHECK(exact_rank(SparseMatrix{}) == 0);
}

TEST_CASE("duplicate columns merge when adding a row") {
  SparseMatrix m;
  m.ncols = 4;
  m.add_row({{2, Rational(1)}, {0, Rational(3)}, {2, Rational(-1)}});
  REQUIRE(m.rows.size() == 1);
  CHECK(m.rows[0].size() == 1);  // the column-2 pair cancelled
  CHECK(m.rows[0][0].first == 0);
  CHECK(exact_rank(m) == 1);
}

TEST_CASE("colspace containment") {
  const Alphabet a = Alphabet::plain(2);
  SparseOp x = SparseOp::zero(a, 1);
  x.add_entry(0, 0, Rational(1));
  SparseOp y = SparseOp::zero(a, 1);
  y.add_entry(1, 1, Rational(1));
  SparseOp both = x + y;
  CHECK(colspace_contained(x, {both}));
  CHECK(colspace_contained(both, {x, y}));
  CHECK_FALSE(colspace_contained(both, {x}));
}

TEST_CASE("sparse operator JSON round trip") {
  const Alphabet a = Alphabet::symplectic(2);
  SparseOp x = SparseOp::zero(a, 2);
  SplitMix64 rng{77};
  for (int n = 0; n < 30; ++n) x.add_entry(rng.next() % 16, rng.next() % 16, rng.rational());

  const auto j = sparse_op_to_json(x);
  CHECK(j.at("r") == 2);
  CHECK(j.at("k") == 2);
  const SparseOp back = sparse_op_from_json(j);
  CHECK(back == x);
  CHECK(sparse_op_to_json(back).dump() == j.dump());

  // plain alphabets serialize under "n"
  SparseOp p = SparseOp::identity(Alphabet::plain(3), 1);
  const auto jp = sparse_op_to_json(p);
  CHECK(jp.at("n") == 3);
  CHECK(sparse_op_from_json(jp) == p);
}

TEST_CASE("splitmix stream is platform-stable") {
  SplitMix64 rng{1};
  const std::uint64_t first = rng.next();
  CHECK(first == SplitMix64{1}.next());
  CHECK(first != SplitMix64{2}.next());
  SplitMix64 s{9};
  for (int n = 0; n < 100; ++n) {
    const long v = s.small();
    CHECK(v >= 1);
    CHECK(v <= 97);
  }
}

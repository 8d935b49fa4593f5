// Acceptance gate: the end-to-end checks this build must satisfy, one
// pass/fail line each.  Exact arithmetic throughout, so every comparison is
// equality; the only tolerances are the wall-clock budgets pinned below.
// argv[1] is the CLI binary, used by the determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qbrauer/linalg.hpp"
#include "qbrauer/manin.hpp"
#include "qbrauer/quadalg.hpp"
#include "qbrauer/rng.hpp"
#include "qbrauer/verify.hpp"

using namespace qbrauer;

namespace {

constexpr double kDimensionBudgetSeconds = 120.0;
constexpr double kRelationBudgetSeconds = 60.0;
constexpr double kSymmetrizerBudgetSeconds = 60.0;
constexpr double kDefaultBudgetSeconds = 120.0;

const std::vector<std::uint64_t> kSeeds{1, 2, 3, 4, 5};

std::string g_cli_path;

bool dimension_triple_agreement() {
  const std::vector<std::vector<std::uint64_t>> expected{{4, 5, 0}, {6, 14, 14, 0}};
  for (int r : {2, 3}) {
    const auto& want = expected[static_cast<std::size_t>(r - 2)];
    for (std::uint64_t seed : kSeeds) {
      const ParameterFamily q = ParameterFamily::sample(r, seed);
      const RelationSet rels = relations_xi_c(q);
      for (int k = 1; k <= r + 1; ++k) {
        const std::uint64_t formula = dim_formula(r, k);
        if (formula != want[static_cast<std::size_t>(k - 1)]) return false;
        if (rank(pairing_type_c(q, k)) != formula) return false;
        if (component_dim(rels, k) != formula) return false;
      }
    }
  }
  return true;
}

bool defining_relations_hold() {
  for (int r : {1, 2, 3})
    for (int k : {2, 3, 4})
      for (std::uint64_t seed : kSeeds)
        if (!all_pass(verify_brauer_relations(ParameterFamily::sample(r, seed), k))) return false;
  return true;
}

bool symmetrizer_forms_agree() {
  // The product-form image is pairing_type_c, which maps the factors to
  // operators one by one; expanding the formal product first gives the same
  // image (rho is multiplicative) but the flat word list grows too fast past
  // k = 3, so the expanded cross-check stays at the small sizes.
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}};
  for (const auto& [r, k] : cases)
    for (std::uint64_t seed : {kSeeds[0], kSeeds[1]}) {
      const ParameterFamily q = ParameterFamily::sample(r, seed);
      const Rational w(-2 * r);
      const SparseOp product_image = pairing_type_c(q, k);
      if (product_image != rho(q, symmetrizer_sum(k, w), k)) return false;
      if (k <= 3 && product_image != rho(q, symmetrizer_product(k, w), k)) return false;
    }
  return true;
}

bool trace_closed_form_holds() {
  for (int r : {2, 3}) {
    const Rational w(-2 * r);
    for (std::uint64_t seed : kSeeds) {
      const ParameterFamily q = ParameterFamily::sample(r, seed);
      for (int k = 1; k <= r + 1; ++k) {
        const Rational closed = Rational(k % 2 == 0 ? 1 : -1) * (w + Rational(2 * k - 2)) *
                                (w + Rational(k - 2)).inverse() *
                                gen_binom(w + Rational(k - 2), static_cast<unsigned long>(k));
        if (pairing_type_c(q, k).trace() != closed) return false;
      }
    }
  }
  return true;
}

bool pairing_vanishes_past_rank() {
  RationalRing rr;
  for (int r : {1, 2, 3})
    for (std::uint64_t seed : kSeeds) {
      const ParameterFamily q = ParameterFamily::sample(r, seed);
      if (!pairing_type_c(q, r + 1).is_zero()) return false;
      const auto minors = minor_a(rr, identity_matrix(rr, q.alphabet()), q, r + 1);
      for (std::uint64_t i = 0; i < minors.nrows(); ++i)
        for (std::uint64_t j = 0; j < minors.ncols(); ++j)
          if (!minors.at(i, j).is_zero()) return false;
    }
  return true;
}

bool symmetrized_traces_family_independent() {
  for (int r : {2, 3})
    for (int k = 1; k <= 4; ++k)
      for (int t = 0; 2 * t <= k; ++t) {
        const Rational base = trace_h_eps(ParameterFamily::sample(r, kSeeds[0]), k, t);
        for (std::size_t s = 1; s < kSeeds.size(); ++s)
          if (trace_h_eps(ParameterFamily::sample(r, kSeeds[s]), k, t) != base) return false;
      }
  return true;
}

bool a_entries_match_closed_form() {
  const ParameterFamily q = ParameterFamily::sample(2, 1);
  const Alphabet a = q.alphabet();
  const std::vector<int> letters{-2, -1, 1, 2};
  for (int k : {2, 3}) {
    const SparseOp anti = pairing_type_a(q, k, PairKind::A);
    // every tuple with pairwise distinct entries, in every order
    std::vector<std::vector<int>> tuples;
    for (int x : letters)
      for (int y : letters) {
        if (y == x) continue;
        if (k == 2) {
          tuples.push_back({x, y});
          continue;
        }
        for (int z : letters)
          if (z != x && z != y) tuples.push_back({x, y, z});
      }
    for (const auto& I : tuples) {
      bool ok = true;
      for_each_permutation(k, [&](const Permutation& sigma) {
        std::vector<int> row(I.size());
        for (int s = 1; s <= k; ++s)
          row[static_cast<std::size_t>(s - 1)] = I[static_cast<std::size_t>(sigma(s) - 1)];
        if (anti.entry(MultiIndex(row).encode(a), MultiIndex(I).encode(a)) !=
            a_entry_closed_form(I, sigma, q))
          ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool column_space_decomposition_holds() {
  for (int r : {2, 3})
    for (std::uint64_t seed : kSeeds) {
      const ParameterFamily q = ParameterFamily::sample(r, seed);
      const SparseOp one = SparseOp::identity(q.alphabet(), 2);
      const SparseOp c = c_idempotent(q);
      const SparseOp p = p_op(q);
      const SparseOp Q = q_op(q);
      if (!colspace_contained(one - c, {one + p, Q})) return false;
      if (!colspace_contained(one + p, {one - c})) return false;
      if (!colspace_contained(Q, {one - c})) return false;
      const SparseOp ct = (one - c).transpose();
      if (!colspace_contained(ct, {(one + p).transpose(), Q.transpose()})) return false;
      if (!colspace_contained((one + p).transpose(), {ct})) return false;
      if (!colspace_contained(Q.transpose(), {ct})) return false;
    }
  return true;
}

bool universal_ring_and_manin_fixtures() {
  RationalRing rr;

  // classical 2x2 type-A pair: the universal quotient loses exactly the
  // cross-commutator relations in degree 2
  const TypeAParams p2 = TypeAParams::non_deformed(2);
  const SparseOp anti2 = (SparseOp::identity(p2.alphabet(), 2) - p_op(p2)) * Rational(1, 2);
  const IdempotentPair classical(anti2, anti2);
  const TruncatedQuotientRing classical_ring = universal_manin_ring(classical, 2);
  if (classical_ring.component_dimension(2) != 13) return false;
  if (!manin_check(classical_ring, classical, generic_matrix(classical_ring, classical)).pass)
    return false;

  // identity and symplectic transvections at the non-deformed point
  const ParameterFamily q1 = ParameterFamily::non_deformed(2);
  const IdempotentPair cc1(c_idempotent(q1), c_idempotent(q1));
  if (!manin_check(rr, cc1, identity_matrix(rr, q1.alphabet())).pass) return false;
  for (std::uint64_t seed : {1ull, 2ull, 3ull})
    if (!manin_check(rr, cc1, symplectic_elementary(2, seed)).pass) return false;

  // universal fixture for the deformed pair
  const ParameterFamily q = ParameterFamily::sample(2, 1);
  const TypeAParams p4 = TypeAParams::sample(4, 1);
  const SparseOp anti4 = (SparseOp::identity(p4.alphabet(), 2) - p_op(p4)) * Rational(1, 2);
  const IdempotentPair deformed(c_idempotent(q), anti4);
  const TruncatedQuotientRing universal = universal_manin_ring(deformed, 2);
  if (!manin_check(universal, deformed, generic_matrix(universal, deformed)).pass) return false;

  // negative controls: a random matrix, and a transvection moved off the
  // non-deformed point; both must fail and name an offending component
  const IdempotentPair ccq(c_idempotent(q), c_idempotent(q));
  RingMatrix<RationalRing> random_m(rr, q.alphabet(), 1, q.alphabet(), 1);
  SplitMix64 rng{99};
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 4; ++j) random_m.at(i, j) = rng.rational();
  const ManinReport bad1 = manin_check(rr, ccq, random_m);
  if (bad1.pass || !bad1.witness.has_value()) return false;
  const ManinReport bad2 = manin_check(rr, ccq, symplectic_elementary(2, 1));
  if (bad2.pass || !bad2.witness.has_value()) return false;

  return true;
}

bool verify_reports_are_deterministic() {
  if (g_cli_path.empty()) {
    std::cerr << "acceptance: missing CLI binary path argument\n";
    return false;
  }
  const std::string out1 = "/tmp/qbrauer_accept_run1.json";
  const std::string out2 = "/tmp/qbrauer_accept_run2.json";
  const std::string args = " verify --r 2 --k 3 --seeds 8,7,8 --output ";
  if (std::system((g_cli_path + args + out1).c_str()) != 0) return false;
  if (std::system((g_cli_path + args + out2).c_str()) != 0) return false;

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  return !a.empty() && a == b;
}

struct Criterion {
  std::string description;
  double budget_seconds;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  const std::vector<Criterion> criteria{
      {"pairing rank = relation quotient dimension = closed formula, r in {2,3}, 5 families",
       kDimensionBudgetSeconds, dimension_triple_agreement},
      {"all defining relations and duality identities hold under the representation",
       kRelationBudgetSeconds, defining_relations_hold},
      {"product and contraction-sum symmetrizer forms have the same image",
       kSymmetrizerBudgetSeconds, symmetrizer_forms_agree},
      {"pairing operator trace matches the closed form", kDefaultBudgetSeconds,
       trace_closed_form_holds},
      {"pairing operator and identity A-minors vanish at k = r+1", kDefaultBudgetSeconds,
       pairing_vanishes_past_rank},
      {"symmetrized contraction traces are family independent", kDefaultBudgetSeconds,
       symmetrized_traces_family_independent},
      {"A-operator entries match the closed form exhaustively", kDefaultBudgetSeconds,
       a_entries_match_closed_form},
      {"column and row space decomposition of the idempotent complement", kDefaultBudgetSeconds,
       column_space_decomposition_holds},
      {"universal Manin ring dimensions and positive/negative fixtures", kDefaultBudgetSeconds,
       universal_ring_and_manin_fixtures},
      {"verification reports are byte-identical across runs", kDefaultBudgetSeconds,
       verify_reports_are_deterministic},
  };

  bool all_ok = true;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto& c = criteria[n];
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cout << "criterion " << n + 1 << " threw: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) ok = false;
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %zu: %s (%.1fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", n + 1,
                c.description.c_str(), elapsed, c.budget_seconds);
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}

// qbrauer: exact verification and computation CLI for the multi-parametric
// Brauer-algebra representation, its pairing operators, quadratic-algebra
// dimensions, and Manin-matrix minors.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or resource error.
// All randomness flows through --seeds; identical invocations produce
// byte-identical output.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbrauer/linalg.hpp"
#include "qbrauer/manin.hpp"
#include "qbrauer/quadalg.hpp"
#include "qbrauer/serialize.hpp"
#include "qbrauer/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qbrauer;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxRank = 4;  // dims resource bound

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  out << content;
}

std::vector<std::uint64_t> canonical_seeds(std::vector<std::uint64_t> seeds) {
  if (seeds.empty()) seeds.push_back(1);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

ordered_json multi_index_json(std::uint64_t code, const Alphabet& alpha, int k) {
  ordered_json a = ordered_json::array();
  const MultiIndex mi = MultiIndex::decode(code, alpha, k);
  for (int v : mi.entries()) a.push_back(v);
  return a;
}

ordered_json check_json(const RelationCheck& c, const Alphabet& alpha) {
  ordered_json j;
  j["relation"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  if (c.witness) {
    ordered_json w;
    w["row"] = multi_index_json(c.witness->row, alpha, c.degree);
    w["col"] = multi_index_json(c.witness->col, alpha, c.degree);
    w["value"] = c.witness->value.str();
    j["witness"] = std::move(w);
  }
  return j;
}

// Ring-element serialization for universal minors: canonical-form terms as
// (generator-index tuple, coefficient) pairs, sorted by degree then word.
ordered_json element_json(const TruncatedQuotientRing& ring,
                          const TruncatedQuotientRing::Element& e) {
  ordered_json terms = ordered_json::array();
  const auto g = static_cast<std::uint64_t>(ring.generators());
  for (const auto& [d, coords] : e.comps)
    for (const auto& [word, coef] : coords) {
      ordered_json gens = ordered_json::array();
      std::uint64_t c = word;
      std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
      for (int p = d - 1; p >= 0; --p) {
        digits[static_cast<std::size_t>(p)] = c % g;
        c /= g;
      }
      for (std::uint64_t x : digits) gens.push_back(x);
      terms.push_back(ordered_json::array({std::move(gens), coef.str()}));
    }
  return terms;
}

// ---------------------------------------------------------------- dims ----

struct DimsConfig {
  int r = 2;
  int kmax = 0;  // 0: default r+1
  std::vector<std::uint64_t> seeds;
  std::string params_file;
  std::string format = "csv";
  std::string output;
};

int cmd_dims(const DimsConfig& cfg) {
  std::vector<ParameterFamily> families;
  int r = cfg.r;
  if (!cfg.params_file.empty()) {
    families.push_back(load_params_strict(cfg.params_file));
    r = families.front().rank();
  } else {
    for (std::uint64_t s : canonical_seeds(cfg.seeds)) families.push_back(ParameterFamily::sample(r, s));
  }
  const int kmax = cfg.kmax == 0 ? r + 1 : cfg.kmax;
  if (r > kMaxRank)
    throw ResourceError("dims: rank " + std::to_string(r) + " exceeds the resource bound r <= " +
                        std::to_string(kMaxRank));
  if (kmax > r + 1)
    throw ResourceError("dims: kmax " + std::to_string(kmax) +
                        " exceeds the bound k <= r + 1 (the pairing operator is undefined above)");

  struct Row {
    int k;
    std::uint64_t formula, rank_pairing, quotient_dim;
    bool agree;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (int k = 1; k <= kmax; ++k) {
    const std::uint64_t formula = dim_formula(r, k);
    std::uint64_t rank_pairing = 0, quotient_dim = 0;
    bool agree = true, first = true;
    for (const auto& q : families) {
      const auto rp = static_cast<std::uint64_t>(rank(pairing_type_c(q, k)));
      const std::uint64_t qd = component_dim(relations_xi_c(q), k);
      if (first) {
        rank_pairing = rp;
        quotient_dim = qd;
        first = false;
      } else if (rp != rank_pairing || qd != quotient_dim) {
        agree = false;
      }
    }
    agree = agree && rank_pairing == formula && quotient_dim == formula;
    all_agree = all_agree && agree;
    rows.push_back({k, formula, rank_pairing, quotient_dim, agree});
  }

  std::string out;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "r,k,formula,rank_pairing,quotient_dim,agree\n";
    for (const auto& row : rows)
      os << r << "," << row.k << "," << row.formula << "," << row.rank_pairing << ","
         << row.quotient_dim << "," << (row.agree ? "true" : "false") << "\n";
    out = os.str();
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json o;
      o["r"] = r;
      o["k"] = row.k;
      o["formula"] = row.formula;
      o["rank_pairing"] = row.rank_pairing;
      o["quotient_dim"] = row.quotient_dim;
      o["agree"] = row.agree;
      j.push_back(std::move(o));
    }
    out = j.dump(1) + "\n";
  }
  write_output(cfg.output, out);
  return all_agree ? 0 : kExitFail;
}

// -------------------------------------------------------------- verify ----

struct VerifyConfig {
  int r = 2;
  int k = 2;
  std::vector<std::uint64_t> seeds;
  std::string params_file;
  std::string format = "json";
  std::string output;
};

int cmd_verify(const VerifyConfig& cfg) {
  ordered_json report;
  report["command"] = "verify";
  ordered_json cells = ordered_json::array();
  bool pass = true;

  struct Cell {
    ordered_json header;
    ParameterFamily family;
    std::vector<RelationCheck> pre;  // parameter-constraint checks
  };
  std::vector<Cell> work;

  if (!cfg.params_file.empty()) {
    const LoadedParams loaded = load_params_permissive(cfg.params_file);
    ordered_json h;
    h["params_file"] = cfg.params_file;
    std::vector<RelationCheck> pre;
    for (const auto& name : loaded.violations) {
      RelationCheck c;
      c.name = "params constraint " + name;
      c.pass = false;
      c.degree = 2;
      pre.push_back(std::move(c));
    }
    work.push_back({std::move(h), loaded.family, std::move(pre)});
  } else {
    for (std::uint64_t s : canonical_seeds(cfg.seeds)) {
      ordered_json h;
      h["seed"] = s;
      work.push_back({std::move(h), ParameterFamily::sample(cfg.r, s), {}});
    }
  }

  const int r = work.front().family.rank();
  report["r"] = r;
  report["k"] = cfg.k;

  std::ostringstream csv;
  csv << "cell,relation,status\n";
  for (auto& cell : work) {
    std::vector<RelationCheck> checks = std::move(cell.pre);
    auto suite = verify_suite(cell.family, cfg.k);
    checks.insert(checks.end(), std::make_move_iterator(suite.begin()),
                  std::make_move_iterator(suite.end()));
    ordered_json cj = cell.header;
    ordered_json arr = ordered_json::array();
    const std::string cell_name =
        cell.header.contains("seed") ? std::to_string(cell.header["seed"].get<std::uint64_t>())
                                     : cell.header["params_file"].get<std::string>();
    for (const auto& c : checks) {
      pass = pass && c.pass;
      arr.push_back(check_json(c, cell.family.alphabet()));
      csv << cell_name << "," << c.name << "," << (c.pass ? "pass" : "fail") << "\n";
    }
    cj["checks"] = std::move(arr);
    cells.push_back(std::move(cj));
  }
  report["cells"] = std::move(cells);
  report["pass"] = pass;

  write_output(cfg.output, cfg.format == "csv" ? csv.str() : report.dump(1) + "\n");
  return pass ? 0 : kExitFail;
}

// -------------------------------------------------------------- minors ----

struct MinorsConfig {
  int r = 2;
  int k = 2;
  std::string kind;  // identity | central_scalar | symplectic_elementary | universal
  std::string type;  // S | A
  int ptilde_dim = 0;  // 0: default 2r
  std::vector<std::uint64_t> seeds;
  std::string params_file;
  std::string output;
};

// Rational-entry minor matrix to JSON entries, zeros skipped.
ordered_json rational_entries(const RingMatrix<RationalRing>& m) {
  ordered_json entries = ordered_json::array();
  for (std::uint64_t i = 0; i < m.nrows(); ++i)
    for (std::uint64_t j = 0; j < m.ncols(); ++j) {
      const Rational& v = m.at(i, j);
      if (v.is_zero()) continue;
      entries.push_back(ordered_json::array({multi_index_json(i, m.row_alpha, m.row_degree),
                                             multi_index_json(j, m.col_alpha, m.col_degree),
                                             v.str()}));
    }
  return entries;
}

ordered_json ring_entries(const TruncatedQuotientRing& ring,
                          const RingMatrix<TruncatedQuotientRing>& m) {
  ordered_json entries = ordered_json::array();
  for (std::uint64_t i = 0; i < m.nrows(); ++i)
    for (std::uint64_t j = 0; j < m.ncols(); ++j) {
      const auto& v = m.at(i, j);
      if (v.comps.empty()) continue;
      entries.push_back(ordered_json::array({multi_index_json(i, m.row_alpha, m.row_degree),
                                             multi_index_json(j, m.col_alpha, m.col_degree),
                                             element_json(ring, v)}));
    }
  return entries;
}

int cmd_minors(const MinorsConfig& cfg) {
  const auto seeds = canonical_seeds(cfg.seeds);
  const std::uint64_t seed = seeds.front();
  const int r = cfg.r;
  const int nt = cfg.ptilde_dim == 0 ? 2 * r : cfg.ptilde_dim;
  const bool want_s = cfg.type == "S";

  // S-minors contract the columns with the S-operator of the right
  // idempotent, which only exists for a type-A right side.
  if (want_s && cfg.kind != "universal")
    throw DomainError("minors: S-minors need a type-A right idempotent; use --kind universal");

  ParameterFamily q = cfg.kind == "symplectic_elementary"
                          ? ParameterFamily::non_deformed(r)
                          : (cfg.params_file.empty() ? ParameterFamily::sample(r, seed)
                                                     : load_params_strict(cfg.params_file));
  if (q.rank() != r) throw DomainError("minors: params file rank does not match --r");

  ordered_json j;
  j["command"] = "minors";
  j["kind"] = cfg.kind;
  j["type"] = cfg.type;
  j["r"] = r;
  j["k"] = cfg.k;
  j["ptilde_dim"] = nt;
  j["seed"] = seed;

  const Alphabet va = q.alphabet();
  RationalRing rr;

  if (cfg.kind == "universal") {
    const TypeAParams ptilde = TypeAParams::sample(nt, seed);
    const SparseOp a_tilde =
        (SparseOp::identity(ptilde.alphabet(), 2) - p_op(ptilde)) * Rational(1, 2);
    const IdempotentPair pair(c_idempotent(q), a_tilde);
    const TruncatedQuotientRing ring = universal_manin_ring(pair, std::max(cfg.k, 2));
    const auto m = generic_matrix(ring, pair);
    j["manin_check"] = manin_check(ring, pair, m).pass;
    const auto minors = want_s ? minor_s(ring, m, pairing_type_a(ptilde, cfg.k, PairKind::S))
                               : minor_a(ring, m, q, cfg.k);
    j["entries"] = ring_entries(ring, minors);
  } else if (cfg.kind == "central_scalar") {
    TruncatedQuotientRing ring(1, std::max(cfg.k, 2), {});
    RingMatrix<TruncatedQuotientRing> m(ring, va, 1, va, 1);
    for (std::uint64_t i = 0; i < m.nrows(); ++i) m.at(i, i) = ring.generator(0);
    const IdempotentPair pair(c_idempotent(q), c_idempotent(q));
    j["manin_check"] = manin_check(ring, pair, m).pass;
    j["entries"] = ring_entries(ring, minor_a(ring, m, q, cfg.k));
  } else if (cfg.kind == "identity" || cfg.kind == "symplectic_elementary") {
    const RingMatrix<RationalRing> m =
        cfg.kind == "identity" ? identity_matrix(rr, va) : symplectic_elementary(r, seed);
    const IdempotentPair pair(c_idempotent(q), c_idempotent(q));
    j["manin_check"] = manin_check(rr, pair, m).pass;
    j["entries"] = rational_entries(minor_a(rr, m, q, cfg.k));
  } else {
    throw DomainError("minors: unknown kind \"" + cfg.kind + "\"");
  }

  write_output(cfg.output, j.dump(1) + "\n");
  return 0;
}

// -------------------------------------------------------------- sample ----

int cmd_sample(int r, const std::vector<std::uint64_t>& seeds_in, const std::string& output) {
  const auto seeds = canonical_seeds(seeds_in);
  std::string out;
  if (seeds.size() == 1) {
    out = params_to_json(ParameterFamily::sample(r, seeds.front())).dump(1) + "\n";
  } else {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t s : seeds) {
      ordered_json o;
      o["seed"] = s;
      o["params"] = params_to_json(ParameterFamily::sample(r, s));
      arr.push_back(std::move(o));
    }
    out = arr.dump(1) + "\n";
  }
  write_output(output, out);
  return 0;
}

// -------------------------------------------------------------- export ----

int cmd_export(const std::string& op, int r, int k, const std::vector<std::uint64_t>& seeds_in,
               const std::string& params_file, const std::string& output) {
  ParameterFamily q = params_file.empty()
                          ? ParameterFamily::sample(r, canonical_seeds(seeds_in).front())
                          : load_params_strict(params_file);
  SparseOp result = SparseOp::zero(q.alphabet(), 0);
  if (op == "P")
    result = p_op(q);
  else if (op == "Q")
    result = q_op(q);
  else if (op == "C")
    result = c_idempotent(q);
  else if (op == "pairing")
    result = pairing_type_c(q, k);
  else
    throw DomainError("export: unknown operator \"" + op + "\"");
  write_output(output, sparse_op_to_json(result).dump(1) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Brauer-algebra representation and Manin-minor toolkit"};
  app.require_subcommand(1);

  DimsConfig dims;
  auto* dims_cmd = app.add_subcommand("dims", "dimension table: formula vs pairing rank vs quotient");
  dims_cmd->add_option("--r", dims.r, "symplectic rank")->required();
  dims_cmd->add_option("--kmax", dims.kmax, "largest degree (default r+1)");
  dims_cmd->add_option("--seeds", dims.seeds, "parameter family seeds")->delimiter(',');
  dims_cmd->add_option("--params", dims.params_file, "parameter family file (overrides seeds)");
  dims_cmd->add_option("--format", dims.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  dims_cmd->add_option("--output", dims.output, "output path (default stdout)");

  VerifyConfig ver;
  auto* verify_cmd = app.add_subcommand("verify", "run the exact identity suite");
  verify_cmd->add_option("--r", ver.r, "symplectic rank");
  verify_cmd->add_option("--k", ver.k, "tensor degree")->required();
  verify_cmd->add_option("--seeds", ver.seeds, "parameter family seeds")->delimiter(',');
  verify_cmd->add_option("--params", ver.params_file, "parameter family file (overrides seeds)");
  verify_cmd->add_option("--format", ver.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--output", ver.output, "output path (default stdout)");

  MinorsConfig mn;
  auto* minors_cmd = app.add_subcommand("minors", "compute S- or A-minors of an example matrix");
  minors_cmd->add_option("--r", mn.r, "symplectic rank")->required();
  minors_cmd->add_option("--k", mn.k, "minor degree")->required();
  minors_cmd->add_option("--type", mn.type, "S or A")->required()->check(CLI::IsMember({"S", "A"}));
  minors_cmd
      ->add_option("--kind", mn.kind,
                   "identity, central_scalar, symplectic_elementary, or universal")
      ->required()
      ->check(CLI::IsMember({"identity", "central_scalar", "symplectic_elementary", "universal"}));
  minors_cmd->add_option("--ptilde-dim", mn.ptilde_dim, "column-space dimension (default 2r)");
  minors_cmd->add_option("--seeds", mn.seeds, "seeds (first one used)")->delimiter(',');
  minors_cmd->add_option("--params", mn.params_file, "parameter family file");
  minors_cmd->add_option("--output", mn.output, "output path (default stdout)");

  int sample_r = 2;
  std::vector<std::uint64_t> sample_seeds;
  std::string sample_output;
  auto* sample_cmd = app.add_subcommand("sample", "emit sampled parameter families as JSON");
  sample_cmd->add_option("--r", sample_r, "symplectic rank")->required();
  sample_cmd->add_option("--seeds", sample_seeds, "seeds")->delimiter(',');
  sample_cmd->add_option("--output", sample_output, "output path (default stdout)");

  std::string export_op;
  int export_r = 2, export_k = 2;
  std::vector<std::uint64_t> export_seeds;
  std::string export_params, export_output;
  auto* export_cmd = app.add_subcommand("export", "serialize an operator");
  export_cmd->add_option("--op", export_op, "P, Q, C, or pairing")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "C", "pairing"}));
  export_cmd->add_option("--r", export_r, "symplectic rank")->required();
  export_cmd->add_option("--k", export_k, "degree for the pairing operator");
  export_cmd->add_option("--seeds", export_seeds, "seeds (first one used)")->delimiter(',');
  export_cmd->add_option("--params", export_params, "parameter family file");
  export_cmd->add_option("--output", export_output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (dims_cmd->parsed()) return cmd_dims(dims);
    if (verify_cmd->parsed()) return cmd_verify(ver);
    if (minors_cmd->parsed()) return cmd_minors(mn);
    if (sample_cmd->parsed()) return cmd_sample(sample_r, sample_seeds, sample_output);
    if (export_cmd->parsed())
      return cmd_export(export_op, export_r, export_k, export_seeds, export_params, export_output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

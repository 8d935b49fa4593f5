#include "qbrauer/serialize.hpp"

#include <fstream>
#include <utility>

namespace qbrauer {

namespace {

nlohmann::ordered_json tuple_json(const MultiIndex& mi) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int v : mi.entries()) a.push_back(v);
  return a;
}

MultiIndex tuple_from_json(const nlohmann::json& a, int k) {
  if (!a.is_array() || static_cast<int>(a.size()) != k)
    throw DomainError("sparse_op_from_json: multi-index must be an array of length k");
  std::vector<int> entries;
  entries.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw DomainError("sparse_op_from_json: non-integer index");
    entries.push_back(v.get<int>());
  }
  return MultiIndex(std::move(entries));
}

Rational rational_from_json(const nlohmann::json& v, const char* where) {
  if (!v.is_string()) throw DomainError(std::string(where) + ": rationals must be strings");
  return Rational::from_string(v.get<std::string>());
}

}  // namespace

nlohmann::ordered_json sparse_op_to_json(const SparseOp& op) {
  const Alphabet& alpha = op.alphabet();
  nlohmann::ordered_json j;
  if (alpha.is_symplectic())
    j["r"] = alpha.letters() / 2;
  else
    j["n"] = alpha.letters();
  j["k"] = op.degree();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  // Row-major map iteration is already lexicographic in (row, col): the
  // encoding puts position 0 in the most significant digit.
  for (const auto& [row, cols] : op.rows())
    for (const auto& [col, v] : cols) {
      nlohmann::ordered_json e = nlohmann::ordered_json::array();
      e.push_back(tuple_json(MultiIndex::decode(row, alpha, op.degree())));
      e.push_back(tuple_json(MultiIndex::decode(col, alpha, op.degree())));
      e.push_back(v.str());
      entries.push_back(std::move(e));
    }
  j["entries"] = std::move(entries);
  return j;
}

SparseOp sparse_op_from_json(const nlohmann::json& j) {
  Alphabet alpha = Alphabet::plain(1);
  if (j.contains("r"))
    alpha = Alphabet::symplectic(j.at("r").get<int>());
  else if (j.contains("n"))
    alpha = Alphabet::plain(j.at("n").get<int>());
  else
    throw DomainError("sparse_op_from_json: missing alphabet key \"r\" or \"n\"");
  const int k = j.at("k").get<int>();
  SparseOp op(alpha, k);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw DomainError("sparse_op_from_json: entry must be [row, col, value]");
    const MultiIndex row = tuple_from_json(e[0], k);
    const MultiIndex col = tuple_from_json(e[1], k);
    op.add_entry(row.encode(alpha), col.encode(alpha),
                 rational_from_json(e[2], "sparse_op_from_json"));
  }
  return op;
}

namespace {

struct ParsedParamsFile {
  int r = 0;
  std::vector<Rational> free_q;
  std::map<std::pair<int, int>, Rational> free_qij;
  std::map<std::pair<int, int>, Rational> extra;  // keys outside 1 <= i < j <= r
};

std::pair<int, int> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
    throw DomainError("params: qij key must look like \"i,j\", got \"" + key + "\"");
  std::size_t pos1 = 0, pos2 = 0;
  int i = 0, j = 0;
  try {
    i = std::stoi(key.substr(0, comma), &pos1);
    j = std::stoi(key.substr(comma + 1), &pos2);
  } catch (const std::exception&) {
    throw DomainError("params: qij key must look like \"i,j\", got \"" + key + "\"");
  }
  if (pos1 != comma || pos2 != key.size() - comma - 1 || i == 0 || j == 0)
    throw DomainError("params: qij key must be a pair of nonzero integers, got \"" + key + "\"");
  return {i, j};
}

ParsedParamsFile parse_params(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("params: top level must be a JSON object");
  ParsedParamsFile p;
  p.r = j.at("r").get<int>();
  if (p.r < 1) throw DomainError("params: r must be >= 1");
  const auto& qarr = j.at("q");
  if (!qarr.is_array() || static_cast<int>(qarr.size()) != p.r)
    throw DomainError("params: \"q\" must list exactly r values q_1..q_r");
  for (const auto& v : qarr) p.free_q.push_back(rational_from_json(v, "params"));
  if (j.contains("qij")) {
    if (!j.at("qij").is_object()) throw DomainError("params: \"qij\" must be an object");
    for (const auto& [key, val] : j.at("qij").items()) {
      const auto [i, jj] = parse_pair_key(key);
      const Rational v = rational_from_json(val, "params");
      if (v.is_zero()) throw DomainError("params: parameter \"" + key + "\" must be nonzero");
      if (1 <= i && i < jj && jj <= p.r)
        p.free_qij[{i, jj}] = v;
      else if (-p.r <= i && i <= p.r && -p.r <= jj && jj <= p.r)
        p.extra[{i, jj}] = v;
      else
        throw DomainError("params: qij key \"" + key + "\" is out of range for r");
    }
  }
  for (const auto& v : p.free_q)
    if (v.is_zero()) throw DomainError("params: q values must be nonzero");
  if (static_cast<int>(p.free_qij.size()) != p.r * (p.r - 1) / 2)
    throw DomainError("params: \"qij\" must contain every pair 1 <= i < j <= r");
  return p;
}

}  // namespace

ParameterFamily params_from_json_strict(const nlohmann::json& j) {
  const ParsedParamsFile p = parse_params(j);
  if (!p.extra.empty()) {
    const auto& [i, jj] = p.extra.begin()->first;
    throw DomainError("params: key \"" + std::to_string(i) + "," + std::to_string(jj) +
                      "\" overrides a derived value; only pairs 1 <= i < j <= r are allowed");
  }
  return ParameterFamily::build(p.r, p.free_q, p.free_qij);
}

LoadedParams params_from_json_permissive(const nlohmann::json& j) {
  const ParsedParamsFile p = parse_params(j);
  ParameterFamily fam = ParameterFamily::unchecked_with_overrides(p.r, p.free_q, p.free_qij, p.extra);
  return {fam, fam.violated_constraints()};
}

nlohmann::ordered_json params_to_json(const ParameterFamily& q) {
  nlohmann::ordered_json j;
  j["r"] = q.rank();
  nlohmann::ordered_json qa = nlohmann::ordered_json::array();
  for (int i = 1; i <= q.rank(); ++i) qa.push_back(q.q(i).str());
  j["q"] = std::move(qa);
  nlohmann::ordered_json qij = nlohmann::ordered_json::object();
  for (int i = 1; i <= q.rank(); ++i)
    for (int jj = i + 1; jj <= q.rank(); ++jj)
      qij[std::to_string(i) + "," + std::to_string(jj)] = q.q(i, jj).str();
  j["qij"] = std::move(qij);
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

ParameterFamily load_params_strict(const std::string& path) {
  return params_from_json_strict(read_json_file(path));
}

LoadedParams load_params_permissive(const std::string& path) {
  return params_from_json_permissive(read_json_file(path));
}

}  // namespace qbrauer

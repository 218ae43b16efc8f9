#include "qmatroids/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qm::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer())
    throw Error(Errc::ParseError, std::string("key '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::uint32_t> int_list(const json& j, const char* what) {
  if (!j.is_array())
    throw Error(Errc::ParseError, std::string(what) + " must be an array of integers");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw Error(Errc::ParseError, std::string(what) + " entries must be non-negative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

json field_to_json(const Field& F) {
  return json{{"m", F->m()}, {"modulus", F->modulus()}, {"p", F->p()}};
}

Field field_from_json(const json& j) {
  auto p = need_int(j, "p");
  auto m = need_int(j, "m");
  if (p < 2 || m < 1) throw Error(Errc::ParseError, "field parameters out of range");
  auto modulus = int_list(need(j, "modulus"), "modulus");
  return FieldSpec::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m),
                         std::move(modulus));
}

json matrix_to_json(const linalg::Mat& M) {
  json rows = json::array();
  for (const auto& r : M) rows.push_back(r);
  return rows;
}

linalg::Mat matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "matrix must be an array of rows");
  linalg::Mat M;
  M.reserve(j.size());
  for (const auto& row : j) M.push_back(int_list(row, "matrix row"));
  return M;
}

json subspace_to_json(const Subspace& s) {
  return json{{"n", s.ambient()}, {"q", s.q()}, {"rref", matrix_to_json(s.rows())}};
}

Subspace subspace_from_json(const json& j) {
  auto q = need_int(j, "q");
  auto n = need_int(j, "n");
  if (q < 2 || n < 0) throw Error(Errc::ParseError, "subspace parameters out of range");
  return Subspace::span(static_cast<std::uint64_t>(q), static_cast<int>(n),
                        matrix_from_json(need(j, "rref")));
}

json qmatroid_to_json(const QMatroid& M) {
  json ranks = json::array();
  const auto& lat = M.lattice();
  for (int id = 0; id < lat.count(); ++id)
    ranks.push_back(
        json{{"r", M.rank_by_id(id)}, {"rref", matrix_to_json(lat.at(id).rows())}});
  return json{{"n", M.n()}, {"q", M.q()}, {"ranks", ranks}};
}

QMatroid qmatroid_from_json(const json& j) {
  auto q = need_int(j, "q");
  auto n = need_int(j, "n");
  if (q < 2 || n < 0) throw Error(Errc::ParseError, "q-matroid parameters out of range");
  const json& ranks = need(j, "ranks");
  if (!ranks.is_array()) throw Error(Errc::ParseError, "'ranks' must be an array");
  std::vector<std::pair<Subspace, int>> entries;
  entries.reserve(ranks.size());
  for (const auto& e : ranks) {
    auto r = need_int(e, "r");
    if (r < 0) throw Error(Errc::ParseError, "rank values must be non-negative");
    entries.emplace_back(Subspace::span(static_cast<std::uint64_t>(q), static_cast<int>(n),
                                        matrix_from_json(need(e, "rref"))),
                         static_cast<int>(r));
  }
  return QMatroid::from_entries(static_cast<std::uint64_t>(q), static_cast<int>(n), entries);
}

json family_to_json(const FamilyFile& fam) {
  auto sorted = fam.members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  json subs = json::array();
  for (const auto& s : sorted) subs.push_back(matrix_to_json(s.rows()));
  return json{{"n", fam.n}, {"q", fam.q}, {"subspaces", subs}};
}

FamilyFile family_from_json(const json& j) {
  FamilyFile fam;
  auto q = need_int(j, "q");
  auto n = need_int(j, "n");
  if (q < 2 || n < 0) throw Error(Errc::ParseError, "family parameters out of range");
  fam.q = static_cast<std::uint64_t>(q);
  fam.n = static_cast<int>(n);
  const json& subs = need(j, "subspaces");
  if (!subs.is_array()) throw Error(Errc::ParseError, "'subspaces' must be an array");
  for (const auto& s : subs)
    fam.members.push_back(Subspace::span(fam.q, fam.n, matrix_from_json(s)));
  return fam;
}

json code_to_json(const RankMetricCode& C) {
  const auto& L = C.ext_field();
  auto coeffs_of = [&](FVal v) {
    auto c = L->coeffs(v);
    c.resize(L->m(), 0);
    return c;
  };
  json G = json::array();
  for (const auto& row : C.generator()) {
    json r = json::array();
    for (FVal v : row) r.push_back(coeffs_of(v));
    G.push_back(r);
  }
  json basis = json::array();
  for (FVal v : C.expansion_basis()) basis.push_back(coeffs_of(v));
  return json{{"G", G},
              {"K", field_to_json(C.base_field())},
              {"L", field_to_json(C.ext_field())},
              {"basis", basis},
              {"n", C.n()}};
}

RankMetricCode code_from_json(const json& j) {
  Field K = field_from_json(need(j, "K"));
  Field L = field_from_json(need(j, "L"));
  auto n = need_int(j, "n");
  if (n < 0) throw Error(Errc::ParseError, "code length out of range");
  const json& Gj = need(j, "G");
  if (!Gj.is_array()) throw Error(Errc::ParseError, "'G' must be an array of rows");
  linalg::Mat G;
  for (const auto& rowj : Gj) {
    if (!rowj.is_array()) throw Error(Errc::ParseError, "generator rows must be arrays");
    std::vector<FVal> row;
    for (const auto& elem : rowj)
      row.push_back(L->from_coeffs(int_list(elem, "generator entry")));
    G.push_back(std::move(row));
  }
  std::vector<FVal> basis;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array()) throw Error(Errc::ParseError, "'basis' must be an array");
    for (const auto& elem : *it) basis.push_back(L->from_coeffs(int_list(elem, "basis entry")));
  }
  return RankMetricCode(std::move(K), std::move(L), static_cast<int>(n), std::move(G),
                        std::move(basis));
}

json report_to_json(const AxiomReport& rep) {
  json wits = json::array();
  for (const auto& tuple : rep.witnesses) {
    json t = json::array();
    for (const auto& s : tuple) t.push_back(subspace_to_json(s));
    wits.push_back(t);
  }
  return json{{"axiom", rep.axiom},
              {"holds", rep.holds},
              {"violation_count", rep.violation_count},
              {"witnesses", wits}};
}

json reports_to_json(const std::vector<AxiomReport>& reps) {
  json out = json::array();
  for (const auto& r : reps) out.push_back(report_to_json(r));
  return out;
}

json rank_poly_to_json(const RankPolynomial& P) {
  json out = json::array();
  for (const auto& [ij, c] : P.terms())
    out.push_back(json{{"c", c}, {"i", ij.first}, {"j", ij.second}});
  return out;
}

json minor_duality_to_json(const MinorDualityReport& rep) {
  json dr = rep.dual_restrict_witness ? matrix_to_json(*rep.dual_restrict_witness)
                                      : json(nullptr);
  json cd = rep.contract_dual_witness ? matrix_to_json(*rep.contract_dual_witness)
                                      : json(nullptr);
  return json{{"contract_dual_witness", cd},
              {"dual_restrict_witness", dr},
              {"holds", rep.holds}};
}

std::vector<FVal> parse_vector(const std::string& text, std::uint64_t q, int n) {
  std::vector<FVal> v;
  if (text.find('.') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::ParseError, "bad coordinate '" + part + "'");
      v.push_back(static_cast<FVal>(std::stoul(part)));
    }
  } else {
    if (q > 10)
      throw Error(Errc::ParseError,
                  "digit-string vectors need q <= 10; use '.'-separated values");
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw Error(Errc::ParseError, std::string("bad coordinate '") + ch + "'");
      v.push_back(static_cast<FVal>(ch - '0'));
    }
  }
  if (static_cast<int>(v.size()) != n)
    throw Error(Errc::ParseError, "vector has " + std::to_string(v.size()) +
                                      " coordinates, expected " + std::to_string(n));
  for (FVal x : v)
    if (x >= q) throw Error(Errc::ParseError, "coordinate value out of range for GF(q)");
  return v;
}

Subspace parse_subspace(const std::string& text, std::uint64_t q, int n) {
  linalg::Mat rows;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) rows.push_back(parse_vector(part, q, n));
  return Subspace::span(q, n, rows);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON in '" + path + "'");
  return j;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qm::io

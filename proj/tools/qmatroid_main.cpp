#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qmatroids/constructions.hpp"
#include "qmatroids/json_io.hpp"
#include "qmatroids/qmatroid.hpp"
#include "qmatroids/rankmetric.hpp"

namespace {

using qm::io::json;

struct Caps {
  int bits = qm::kDefaultPointCapBits;

  /// Brute-force budget for codeword enumeration and GL searches: at least
  /// 2^20, raised when --cap asks for more.
  [[nodiscard]] std::uint64_t brute() const {
    std::uint64_t hi = bits >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
    return std::max(std::uint64_t{1} << 20, hi);
  }
};

void emit(const std::string& path, const json& j) {
  std::string text = qm::io::render(j);
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qm::Error(qm::Errc::ParseError, "cannot write '" + path + "'");
    out << text;
  }
}

qm::QMatroid load_matroid(const std::string& path) {
  return qm::io::qmatroid_from_json(qm::io::load_json_file(path));
}

qm::RankMetricCode load_code(const std::string& path) {
  return qm::io::code_from_json(qm::io::load_json_file(path));
}

void describe(const std::vector<qm::AxiomReport>& reps) {
  for (const auto& r : reps) {
    std::cerr << r.axiom << ": " << (r.holds ? "PASS" : "FAIL");
    if (!r.holds) {
      std::cerr << " (" << r.violation_count
                << (r.violation_count == 1 ? " violation" : " violations");
      if (!r.witnesses.empty() && !r.witnesses.front().empty()) {
        std::cerr << "; witness:";
        for (const auto& s : r.witnesses.front()) std::cerr << ' ' << s.to_string();
      }
      std::cerr << ')';
    }
    std::cerr << '\n';
  }
}

std::vector<qm::AxiomReport> run_suite(const std::string& name, const qm::QMatroid& M,
                                       const Caps& caps) {
  if (name == "rank") return qm::check_rank_axioms(M);
  if (name == "indep")
    return qm::check_independence_axioms(M.independents(), M.q(), M.n());
  if (name == "bases") return qm::check_basis_axioms(M.bases(), M.q(), M.n());
  if (name == "circuits") return qm::check_circuit_axioms(M.circuits(), M.q(), M.n());
  if (name == "closure") return qm::check_closure_axioms(M);
  if (name == "lemmas") return qm::lemma_suite(M);
  if (name == "duality") return qm::duality_suite(M, caps.brute());
  throw qm::Error(qm::Errc::BadParams, "unknown suite '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-matroid toolkit: construct, transform, and verify q-matroids "
               "and rank-metric codes"};
  app.require_subcommand(1);

  Caps caps;
  app.add_option("--cap", caps.bits,
                 "log2 budget for enumeration and brute-force searches")
      ->capture_default_str();

  int rc = 0;

  // uniform
  int u_k = 0, u_n = 0;
  std::uint64_t u_q = 2;
  std::string u_out;
  auto* c_uniform = app.add_subcommand("uniform", "uniform q-matroid U_{k,n}(q)");
  c_uniform->add_option("-k", u_k, "rank")->required();
  c_uniform->add_option("-n", u_n, "ambient dimension")->required();
  c_uniform->add_option("-q", u_q, "field size")->required();
  c_uniform->add_option("-o,--out", u_out, "output file (default stdout)");
  c_uniform->callback([&] { emit(u_out, qm::io::qmatroid_to_json(qm::uniform(u_k, u_n, u_q, caps.bits))); });

  // from-code
  std::string fc_in, fc_out;
  auto* c_from_code = app.add_subcommand("from-code", "q-matroid of a rank-metric code");
  c_from_code->add_option("code", fc_in, "code JSON file")->required();
  c_from_code->add_option("-o,--out", fc_out, "output file (default stdout)");
  c_from_code->callback([&] {
    emit(fc_out, qm::io::qmatroid_to_json(qm::matroid_of_code(load_code(fc_in), caps.bits)));
  });

  // from-family
  std::string ff_in, ff_out, ff_as = "independents";
  auto* c_from_family =
      app.add_subcommand("from-family", "q-matroid from an independence or basis family");
  c_from_family->add_option("family", ff_in, "family JSON file")->required();
  c_from_family->add_option("--as", ff_as, "interpret the family as")
      ->check(CLI::IsMember({"independents", "bases"}))
      ->capture_default_str();
  c_from_family->add_option("-o,--out", ff_out, "output file (default stdout)");
  c_from_family->callback([&] {
    auto fam = qm::io::family_from_json(qm::io::load_json_file(ff_in));
    qm::QMatroid M = ff_as == "bases" ? qm::from_bases(fam.members, fam.q, fam.n)
                                      : qm::from_independents(fam.members, fam.q, fam.n);
    emit(ff_out, qm::io::qmatroid_to_json(M));
  });

  // dual
  std::string d_in, d_out;
  auto* c_dual = app.add_subcommand("dual", "dual q-matroid");
  c_dual->add_option("matroid", d_in, "q-matroid JSON file")->required();
  c_dual->add_option("-o,--out", d_out, "output file (default stdout)");
  c_dual->callback([&] { emit(d_out, qm::io::qmatroid_to_json(qm::dual(load_matroid(d_in)))); });

  // restrict
  std::string r_in, r_out, r_e, r_H;
  auto* c_restrict = app.add_subcommand("restrict", "restriction to a hyperplane");
  c_restrict->add_option("matroid", r_in, "q-matroid JSON file")->required();
  auto* r_eopt = c_restrict->add_option("-e", r_e, "line e: restrict to e-perp");
  auto* r_hopt =
      c_restrict->add_option("-H,--hyperplane", r_H, "explicit hyperplane generators");
  r_eopt->excludes(r_hopt);
  c_restrict->add_option("-o,--out", r_out, "output file (default stdout)");
  c_restrict->callback([&] {
    qm::QMatroid M = load_matroid(r_in);
    qm::Subspace H = qm::Subspace::zero(M.q(), M.n());
    if (!r_e.empty())
      H = qm::Subspace::span(M.q(), M.n(), {qm::io::parse_vector(r_e, M.q(), M.n())}).perp();
    else if (!r_H.empty())
      H = qm::io::parse_subspace(r_H, M.q(), M.n());
    else
      throw qm::Error(qm::Errc::BadParams, "restrict needs -e or -H");
    emit(r_out, qm::io::qmatroid_to_json(qm::restrict_to(M, H)));
  });

  // contract
  std::string ct_in, ct_out, ct_e;
  auto* c_contract = app.add_subcommand("contract", "contraction by a line");
  c_contract->add_option("matroid", ct_in, "q-matroid JSON file")->required();
  c_contract->add_option("-e", ct_e, "line generator, e.g. 0001")->required();
  c_contract->add_option("-o,--out", ct_out, "output file (default stdout)");
  c_contract->callback([&] {
    qm::QMatroid M = load_matroid(ct_in);
    auto e = qm::Subspace::span(M.q(), M.n(), {qm::io::parse_vector(ct_e, M.q(), M.n())});
    emit(ct_out, qm::io::qmatroid_to_json(qm::contract(M, e)));
  });

  // truncate
  std::string t_in, t_out;
  auto* c_truncate = app.add_subcommand("truncate", "truncation");
  c_truncate->add_option("matroid", t_in, "q-matroid JSON file")->required();
  c_truncate->add_option("-o,--out", t_out, "output file (default stdout)");
  c_truncate->callback(
      [&] { emit(t_out, qm::io::qmatroid_to_json(qm::truncate(load_matroid(t_in)))); });

  // check
  std::string ck_in, ck_out;
  std::vector<std::string> ck_suites;
  bool ck_indep = false, ck_bases = false, ck_circ = false;
  auto* c_check = app.add_subcommand("check", "run axiom suites, exit 0 iff all pass");
  c_check->add_option("file", ck_in, "q-matroid or family JSON file")->required();
  c_check->add_option("--suites", ck_suites,
                      "subset of rank,indep,bases,circuits,closure,lemmas,duality")
      ->delimiter(',');
  auto* f_i = c_check->add_flag("--as-independents", ck_indep,
                                "treat input as an independence family");
  auto* f_b = c_check->add_flag("--as-bases", ck_bases, "treat input as a basis family");
  auto* f_c = c_check->add_flag("--as-circuits", ck_circ, "treat input as a circuit family");
  f_i->excludes(f_b)->excludes(f_c);
  f_b->excludes(f_c);
  c_check->add_option("-o,--out", ck_out, "also write the JSON report to a file");
  c_check->callback([&] {
    std::vector<qm::AxiomReport> reps;
    if (ck_indep || ck_bases || ck_circ) {
      auto fam = qm::io::family_from_json(qm::io::load_json_file(ck_in));
      if (ck_indep) reps = qm::check_independence_axioms(fam.members, fam.q, fam.n);
      if (ck_bases) reps = qm::check_basis_axioms(fam.members, fam.q, fam.n);
      if (ck_circ) reps = qm::check_circuit_axioms(fam.members, fam.q, fam.n);
    } else {
      qm::QMatroid M = load_matroid(ck_in);
      std::vector<std::string> suites = ck_suites;
      if (suites.empty())
        suites = {"rank", "indep", "bases", "circuits", "closure", "lemmas", "duality"};
      for (const auto& s : suites) {
        auto part = run_suite(s, M, caps);
        reps.insert(reps.end(), part.begin(), part.end());
      }
    }
    describe(reps);
    emit(ck_out, qm::io::reports_to_json(reps));
    if (!qm::all_hold(reps)) rc = 1;
  });

  // invariants
  std::string iv_in, iv_out;
  auto* c_inv = app.add_subcommand("invariants", "rank, family counts, rank polynomial");
  c_inv->add_option("matroid", iv_in, "q-matroid JSON file")->required();
  c_inv->add_option("-o,--out", iv_out, "output file (default stdout)");
  c_inv->callback([&] {
    qm::QMatroid M = load_matroid(iv_in);
    auto P = M.rank_polynomial();
    json j{{"bases", M.bases().size()},
           {"circuits", M.circuits().size()},
           {"flats", M.flats().size()},
           {"independents", M.independents().size()},
           {"isthmuses", M.isthmuses().size()},
           {"loops", M.loops().size()},
           {"n", M.n()},
           {"q", M.q()},
           {"rank", M.rank()},
           {"rank_polynomial", P.to_string()},
           {"rank_polynomial_terms", qm::io::rank_poly_to_json(P)}};
    emit(iv_out, j);
  });

  // iso
  std::string is_a, is_b;
  auto* c_iso = app.add_subcommand("iso", "GL(n,q) isomorphism test; exit 1 when none");
  c_iso->add_option("first", is_a, "q-matroid JSON file")->required();
  c_iso->add_option("second", is_b, "q-matroid JSON file")->required();
  c_iso->callback([&] {
    auto w = qm::isomorphism(load_matroid(is_a), load_matroid(is_b), caps.brute());
    json j{{"isomorphic", w.has_value()},
           {"witness", w ? qm::io::matrix_to_json(*w) : json(nullptr)}};
    emit("", j);
    if (!w) rc = 1;
  });

  // rank-poly
  std::string rp_in, rp_out;
  auto* c_rp = app.add_subcommand("rank-poly", "rank generating polynomial");
  c_rp->add_option("matroid", rp_in, "q-matroid JSON file")->required();
  c_rp->add_option("-o,--out", rp_out, "output file (default stdout)");
  c_rp->callback([&] {
    qm::QMatroid M = load_matroid(rp_in);
    emit(rp_out, qm::io::rank_poly_to_json(M.rank_polynomial()));
  });

  // gabidulin
  std::uint64_t g_q = 2;
  int g_m = 0, g_n = 0, g_k = 0;
  std::vector<std::uint32_t> g_points;
  std::string g_out;
  auto* c_gab = app.add_subcommand("gabidulin", "Gabidulin code over GF(q^m)");
  c_gab->add_option("-q", g_q, "base field size (prime)")->required();
  c_gab->add_option("-m", g_m, "extension degree")->required();
  c_gab->add_option("-n", g_n, "length")->required();
  c_gab->add_option("-k", g_k, "dimension")->required();
  c_gab->add_option("--points", g_points, "evaluation points as packed values over L")
      ->delimiter(',');
  c_gab->add_option("-o,--out", g_out, "output file (default stdout)");
  c_gab->callback([&] {
    std::vector<qm::FVal> pts(g_points.begin(), g_points.end());
    emit(g_out, qm::io::code_to_json(qm::gabidulin(g_q, g_m, g_n, g_k, pts)));
  });

  // code-dual
  std::string cd_in, cd_out;
  auto* c_cd = app.add_subcommand("code-dual", "dual rank-metric code");
  c_cd->add_option("code", cd_in, "code JSON file")->required();
  c_cd->add_option("-o,--out", cd_out, "output file (default stdout)");
  c_cd->callback([&] { emit(cd_out, qm::io::code_to_json(load_code(cd_in).dual())); });

  // code-distance
  std::string cdist_in, cdist_out;
  auto* c_cdist = app.add_subcommand("code-distance", "minimum rank distance (brute force)");
  c_cdist->add_option("code", cdist_in, "code JSON file")->required();
  c_cdist->add_option("-o,--out", cdist_out, "output file (default stdout)");
  c_cdist->callback([&] {
    auto C = load_code(cdist_in);
    json j{{"d", C.min_rank_distance(caps.brute())},
           {"k", C.k()},
           {"m", C.m()},
           {"n", C.n()},
           {"q", C.base_field()->size()}};
    emit(cdist_out, j);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qm::AxiomViolationError& e) {
    describe(e.reports);
    std::cout << qm::io::render(qm::io::reports_to_json(e.reports));
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const qm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

#include "qmatroids/constructions.hpp"

#include <algorithm>
#include <set>

namespace qm {

QMatroid uniform(int k, int n, std::uint64_t q, int cap_bits) {
  if (n < 0 || k < 0 || k > n)
    throw Error(Errc::BadParams, "uniform requires 0 <= k <= n");
  auto lat = SubspaceLattice::get(q, n, cap_bits);
  std::vector<int> ranks(lat->count());
  for (int id = 0; id < lat->count(); ++id)
    ranks[id] = std::min(lat->dim(id), k);
  return QMatroid(lat, std::move(ranks));
}

QMatroid rank_from_family_unchecked(const std::vector<Subspace>& family, std::uint64_t q,
                                    int n) {
  auto lat = SubspaceLattice::get(q, n);
  std::set<std::size_t> members;
  for (const auto& s : family) members.insert(lat->id_of(s));
  std::vector<int> ranks(lat->count(), 0);
  for (int id = 0; id < lat->count(); ++id) {
    int best = 0;
    for (std::size_t m : members)
      if (lat->leq(m, id)) best = std::max(best, lat->dim(m));
    ranks[id] = best;
  }
  return QMatroid(lat, std::move(ranks));
}

QMatroid from_independents(const std::vector<Subspace>& family, std::uint64_t q, int n) {
  auto reports = check_independence_axioms(family, q, n);
  if (!all_hold(reports)) throw AxiomViolationError(std::move(reports));
  return rank_from_family_unchecked(family, q, n);
}

QMatroid from_bases(const std::vector<Subspace>& family, std::uint64_t q, int n) {
  auto reports = check_basis_axioms(family, q, n);
  if (!all_hold(reports)) throw AxiomViolationError(std::move(reports));
  auto lat = SubspaceLattice::get(q, n);
  std::set<std::size_t> basis_ids;
  for (const auto& b : family) basis_ids.insert(lat->id_of(b));
  std::vector<Subspace> closed;
  for (int id = 0; id < lat->count(); ++id) {
    bool below = false;
    for (std::size_t b : basis_ids)
      if (lat->leq(id, b)) {
        below = true;
        break;
      }
    if (below) closed.push_back(lat->at(id));
  }
  return from_independents(closed, q, n);
}

QMatroid dual(const QMatroid& M) {
  auto lat = M.lattice_ptr();
  int r = M.rank();
  std::vector<int> ranks(lat->count());
  for (int id = 0; id < lat->count(); ++id)
    ranks[id] = lat->dim(id) - r + M.rank_by_id(lat->perp_id(id));
  return QMatroid(lat, std::move(ranks));
}

QMatroid restrict_to(const QMatroid& M, const Subspace& H) {
  int n = M.n();
  if (H.q() != M.q() || H.ambient() != n)
    throw Error(Errc::AmbientMismatch, "restriction hyperplane lives in a different space");
  if (H.dim() != n - 1)
    throw Error(Errc::NotHyperplane, "restriction requires a codimension-1 subspace");
  const auto& lat = M.lattice();
  std::size_t hid = lat.id_of(H);
  bool has_basis = false;
  for (std::size_t b : M.basis_ids())
    if (lat.leq(b, hid)) {
      has_basis = true;
      break;
    }
  if (!has_basis)
    throw Error(Errc::NoBasisContained, "hyperplane contains no basis of the q-matroid");
  auto sub = SubspaceLattice::get(M.q(), n - 1);
  const auto& h = H.rows();
  std::vector<int> ranks(sub->count());
  for (int id = 0; id < sub->count(); ++id) {
    auto img = linalg::matmul(sub->at(id).rows(), h, *H.field());
    ranks[id] = M.rank_of(Subspace::span(M.q(), n, img));
  }
  return QMatroid(sub, std::move(ranks));
}

QMatroid contract(const QMatroid& M, const Subspace& e) {
  int n = M.n();
  if (e.q() != M.q() || e.ambient() != n)
    throw Error(Errc::AmbientMismatch, "contraction line lives in a different space");
  if (e.dim() != 1)
    throw Error(Errc::DimensionMismatch, "contraction requires a 1-dimensional subspace");
  if (M.rank_of(e) == 0) throw Error(Errc::LoopContraction, "cannot contract a loop");
  QuotientMap pi(e);
  auto sub = SubspaceLattice::get(M.q(), n - 1);
  std::vector<int> ranks(sub->count());
  for (int id = 0; id < sub->count(); ++id)
    ranks[id] = M.rank_of(pi.pull(sub->at(id))) - 1;
  return QMatroid(sub, std::move(ranks));
}

QMatroid truncate(const QMatroid& M) {
  if (M.rank() == 0) throw Error(Errc::RankZero, "cannot truncate a rank-0 q-matroid");
  auto lat = M.lattice_ptr();
  int cap = M.rank() - 1;
  std::vector<int> ranks(lat->count());
  for (int id = 0; id < lat->count(); ++id)
    ranks[id] = std::min(M.rank_by_id(id), cap);
  return QMatroid(lat, std::move(ranks));
}

namespace {

void fail(AxiomReport& rep, std::vector<Subspace> witness) {
  if (rep.holds) {
    rep.witnesses.push_back(std::move(witness));
    rep.holds = false;
  }
  ++rep.violation_count;
}

}  // namespace

MinorDualityReport check_restriction_contraction_duality(const QMatroid& M, const Subspace& e,
                                                         std::uint64_t gl_cap) {
  if (e.q() != M.q() || e.ambient() != M.n())
    throw Error(Errc::AmbientMismatch, "element lives in a different space");
  if (e.dim() != 1)
    throw Error(Errc::DimensionMismatch, "duality check requires a 1-dimensional element");
  if (M.rank_of(e) == 0)
    throw Error(Errc::BadParams, "duality check requires e to not be a loop");
  for (const auto& i : M.isthmuses())
    if (i == e) throw Error(Errc::BadParams, "duality check requires e to not be an isthmus");
  QMatroid Ms = dual(M);
  Subspace eperp = e.perp();
  MinorDualityReport rep;
  rep.dual_restrict_witness = isomorphism(contract(Ms, e), dual(restrict_to(M, eperp)), gl_cap);
  rep.contract_dual_witness = isomorphism(dual(contract(M, e)), restrict_to(Ms, eperp), gl_cap);
  rep.holds = rep.dual_restrict_witness.has_value() && rep.contract_dual_witness.has_value();
  return rep;
}

std::vector<AxiomReport> duality_suite(const QMatroid& M, std::uint64_t gl_cap) {
  QMatroid Ms = dual(M);
  AxiomReport invo{"dual-involution"};
  AxiomReport drank{"dual-rank"};
  AxiomReport dbases{"dual-bases"};
  AxiomReport dli{"dual-loops-isthmuses"};
  AxiomReport minor{"minor-duality"};

  if (!(dual(Ms) == M)) fail(invo, {});
  if (Ms.rank() != M.n() - M.rank()) fail(drank, {});

  std::set<Subspace> expected;
  for (const auto& b : M.bases()) expected.insert(b.perp());
  std::set<Subspace> got;
  for (const auto& b : Ms.bases()) got.insert(b);
  for (const auto& b : expected)
    if (!got.count(b)) fail(dbases, {b});
  for (const auto& b : got)
    if (!expected.count(b)) fail(dbases, {b});

  auto as_set = [](const std::vector<Subspace>& v) {
    return std::set<Subspace>(v.begin(), v.end());
  };
  if (as_set(M.loops()) != as_set(Ms.isthmuses()) ||
      as_set(M.isthmuses()) != as_set(Ms.loops()))
    fail(dli, {});

  std::set<Subspace> isth;
  for (const auto& i : M.isthmuses()) isth.insert(i);
  for (auto id : M.lattice().line_ids()) {
    const Subspace& e = M.lattice().at(id);
    if (M.rank_by_id(id) == 0 || isth.count(e)) continue;
    if (!check_restriction_contraction_duality(M, e, gl_cap).holds) fail(minor, {e});
  }

  return {invo, drank, dbases, dli, minor};
}

}  // namespace qm

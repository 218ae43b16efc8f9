#include "qmatroids/rankmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qm {

RankMetricCode::RankMetricCode(Field K, Field L, int n, linalg::Mat G,
                               std::vector<FVal> expansion_basis)
    : K_(std::move(K)),
      L_(std::move(L)),
      n_(n),
      k_(static_cast<int>(G.size())),
      G_(std::move(G)) {
  if (!K_ || !L_) throw Error(Errc::BadParams, "code fields must be non-null");
  if (K_->m() != 1)
    throw Error(Errc::BadParams, "base field of a rank-metric code must be prime");
  if (L_->p() != K_->p())
    throw Error(Errc::FieldMismatch, "extension field has a different characteristic");
  if (n_ < 0) throw Error(Errc::BadParams, "code length must be non-negative");
  for (const auto& row : G_) {
    if (static_cast<int>(row.size()) != n_)
      throw Error(Errc::LengthMismatch, "generator row length differs from n");
    for (FVal v : row) L_->check_value(v);
  }
  G_rref_ = linalg::rref(G_, *L_);
  if (static_cast<int>(G_rref_.size()) != k_)
    throw Error(Errc::BadParams, "generator rows must be independent over L");

  const int m = this->m();
  if (expansion_basis.empty()) {
    FVal a = L_->m() >= 2 ? L_->generator() : 1;
    FVal cur = 1;
    for (int i = 0; i < m; ++i) {
      expansion_basis.push_back(cur);
      cur = L_->mul(cur, a);
    }
  }
  if (static_cast<int>(expansion_basis.size()) != m)
    throw Error(Errc::NotABasis, "expansion basis must have m elements");
  linalg::Mat B(m);
  for (int i = 0; i < m; ++i) {
    L_->check_value(expansion_basis[i]);
    auto c = L_->coeffs(expansion_basis[i]);
    B[i].assign(c.begin(), c.end());
  }
  if (linalg::rank_of(B, *K_) != m)
    throw Error(Errc::NotABasis, "expansion basis elements are dependent over K");
  linalg::Mat aug(m, std::vector<FVal>(2 * m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = B[i][j];
    aug[i][m + i] = 1;
  }
  linalg::rref_in_place(aug, *K_);
  basis_inv_.assign(m, std::vector<FVal>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) basis_inv_[i][j] = aug[i][m + j];
  basis_ = std::move(expansion_basis);
}

RankMetricCode RankMetricCode::with_expansion_basis(std::vector<FVal> basis) const {
  return RankMetricCode(K_, L_, n_, G_, std::move(basis));
}

bool RankMetricCode::is_codeword(const std::vector<FVal>& c) const {
  if (static_cast<int>(c.size()) != n_)
    throw Error(Errc::LengthMismatch, "vector length differs from n");
  for (FVal v : c) L_->check_value(v);
  return linalg::in_row_space(G_rref_, c, *L_);
}

std::vector<std::vector<FVal>> RankMetricCode::codewords(std::uint64_t cap) const {
  std::uint64_t total = 1;
  const std::uint64_t qL = L_->size();
  for (int i = 0; i < k_; ++i) {
    if (total > cap / qL) throw Error(Errc::CapExceeded, "codeword enumeration exceeds cap");
    total *= qL;
  }
  std::vector<std::vector<FVal>> out;
  out.reserve(total);
  if (k_ == 0) {
    out.emplace_back(n_, 0);
    return out;
  }
  std::vector<FVal> u(k_, 0);
  while (true) {
    out.push_back(linalg::vec_mat(u, G_, *L_));
    int i = 0;
    while (i < k_ && ++u[i] == qL) u[i++] = 0;
    if (i == k_) break;
  }
  return out;
}

linalg::Mat RankMetricCode::expand(const std::vector<FVal>& c) const {
  if (!is_codeword(c)) throw Error(Errc::NotACodeword, "vector is not in the code");
  const int m = this->m();
  linalg::Mat M(m, std::vector<FVal>(n_, 0));
  for (int j = 0; j < n_; ++j) {
    auto co = L_->coeffs(c[j]);
    std::vector<FVal> row(co.begin(), co.end());
    auto u = linalg::vec_mat(row, basis_inv_, *K_);
    for (int i = 0; i < m; ++i) M[i][j] = u[i];
  }
  return M;
}

Subspace RankMetricCode::rank_support(const std::vector<FVal>& c) const {
  return Subspace::span(K_->size(), n_, expand(c));
}

int RankMetricCode::rank_weight(const std::vector<FVal>& c) const {
  return linalg::rank_of(expand(c), *K_);
}

int RankMetricCode::min_rank_distance(std::uint64_t cap) const {
  if (k_ == 0)
    throw Error(Errc::BadParams, "minimum distance of the zero code is undefined");
  int best = n_ + 1;
  for (const auto& c : codewords(cap)) {
    if (std::all_of(c.begin(), c.end(), [](FVal v) { return v == 0; })) continue;
    best = std::min(best, rank_weight(c));
  }
  return best;
}

RankMetricCode RankMetricCode::dual() const {
  auto H = linalg::kernel(G_, n_, *L_);
  return RankMetricCode(K_, L_, n_, std::move(H), basis_);
}

linalg::Mat RankMetricCode::transfer_matrix(const Subspace& J) const {
  if (J.q() != K_->size() || J.ambient() != n_)
    throw Error(Errc::AmbientMismatch, "support subspace must live in K^n");
  return linalg::matmul(G_, linalg::transpose(J.rows(), n_), *L_);
}

linalg::Mat RankMetricCode::subcode_basis(const Subspace& J) const {
  auto A = transfer_matrix(J);
  auto U = linalg::kernel(linalg::transpose(A, J.dim()), k_, *L_);
  return linalg::rref(linalg::matmul(U, G_, *L_), *L_);
}

linalg::Mat RankMetricCode::subcode_basis_by_support(const Subspace& J,
                                                     std::uint64_t cap) const {
  Subspace Jp = J.perp();
  linalg::Mat kept;
  for (const auto& c : codewords(cap))
    if (Jp.contains(rank_support(c))) kept.push_back(c);
  return linalg::rref(std::move(kept), *L_);
}

int RankMetricCode::l_of(const Subspace& J) const {
  auto A = transfer_matrix(J);
  int l = static_cast<int>(linalg::kernel(linalg::transpose(A, J.dim()), k_, *L_).size());
  if (l + linalg::rank_of(A, *L_) != k_)
    throw std::logic_error("rank-nullity failed for C(J)");
  return l;
}

int RankMetricCode::r_of(const Subspace& J) const { return k_ - l_of(J); }

RankMetricCode gabidulin(std::uint64_t q, int m, int n, int k,
                         const std::vector<FVal>& points) {
  Field K = FieldSpec::of_size(q);
  if (K->m() != 1) throw Error(Errc::BadParams, "Gabidulin base field must be prime");
  if (!(m >= n && n >= k && k >= 1))
    throw Error(Errc::BadParams, "gabidulin requires m >= n >= k >= 1");
  std::uint64_t qm = 1;
  for (int i = 0; i < m; ++i) {
    qm *= q;
    if (qm > (std::uint64_t{1} << 16))
      throw Error(Errc::CapExceeded, "extension field size exceeds 2^16");
  }
  Field L = FieldSpec::of_size(qm);
  std::vector<FVal> pts = points;
  if (pts.empty()) {
    FVal a = L->m() >= 2 ? L->generator() : 1;
    FVal cur = 1;
    for (int j = 0; j < n; ++j) {
      pts.push_back(cur);
      cur = L->mul(cur, a);
    }
  }
  if (static_cast<int>(pts.size()) != n)
    throw Error(Errc::LengthMismatch, "need exactly n evaluation points");
  linalg::Mat P(n);
  for (int j = 0; j < n; ++j) {
    L->check_value(pts[j]);
    auto c = L->coeffs(pts[j]);
    P[j].assign(c.begin(), c.end());
  }
  if (linalg::rank_of(P, *K) != n)
    throw Error(Errc::PointsDependent, "evaluation points are dependent over the base field");
  linalg::Mat G(k, std::vector<FVal>(n, 0));
  G[0] = pts;
  for (int i = 1; i < k; ++i)
    for (int j = 0; j < n; ++j) G[i][j] = L->pow(G[i - 1][j], q);
  return RankMetricCode(K, L, n, std::move(G));
}

QMatroid matroid_of_code(const RankMetricCode& C, int cap_bits) {
  auto lat = SubspaceLattice::get(C.base_field()->size(), C.n(), cap_bits);
  std::vector<int> ranks(lat->count());
  for (int id = 0; id < lat->count(); ++id) ranks[id] = C.r_of(lat->at(id));
  return QMatroid(lat, std::move(ranks));
}

std::vector<AxiomReport> check_code_support_lemmas(const RankMetricCode& C,
                                                   std::uint64_t cap) {
  auto lat = SubspaceLattice::get(C.base_field()->size(), C.n());
  const int n = C.n();
  const int k = C.k();
  const int d = k >= 1 ? C.min_rank_distance(cap) : n + 1;
  RankMetricCode D = C.dual();
  const int ddual = D.k() >= 1 ? D.min_rank_distance(cap) : n + 1;

  AxiomReport pj{"pJ"};
  AxiomReport lj{"lJ5"};
  auto fail = [](AxiomReport& rep, std::vector<Subspace> witness) {
    if (rep.holds) {
      rep.witnesses.push_back(std::move(witness));
      rep.holds = false;
    }
    ++rep.violation_count;
  };

  for (int t = 0; t <= n; ++t) {
    bool all_full = true;
    std::optional<Subspace> offender;
    for (std::size_t id : lat->of_dim(t)) {
      const Subspace& J = lat->at(id);
      int r = C.r_of(J);
      int l = C.l_of(J);
      if (r != t) {
        all_full = false;
        if (!offender) offender = J;
      }
      if (t < ddual && l != k - t) fail(lj, {J});
      if (t > n - d && l != 0) fail(lj, {J});
    }
    if (all_full != (t < ddual)) {
      if (offender)
        fail(pj, {*offender});
      else
        fail(pj, {});
    }
  }
  return {pj, lj};
}

}  // namespace qm

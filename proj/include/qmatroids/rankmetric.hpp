#pragma once

#include <cstdint>
#include <vector>

#include "qmatroids/qmatroid.hpp"

namespace qm {

inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 20;

/// An L-linear code C <= L^n with L = GF(q^m) viewed in the rank metric over
/// its prime subfield K = GF(q). Codewords expand to m x n matrices over K
/// through a fixed K-basis of L (polynomial basis 1, a, .., a^(m-1) unless
/// another one is supplied) and the rank support of c is the row space of
/// that expansion.
class RankMetricCode {
 public:
  /// G holds k generator rows of length n over L; rows must be L-independent.
  /// n is explicit so that k = 0 codes (duals of full codes) stay well-formed.
  RankMetricCode(Field K, Field L, int n, linalg::Mat G,
                 std::vector<FVal> expansion_basis = {});

  [[nodiscard]] const Field& base_field() const { return K_; }
  [[nodiscard]] const Field& ext_field() const { return L_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int m() const { return static_cast<int>(L_->m()); }
  [[nodiscard]] const linalg::Mat& generator() const { return G_; }
  [[nodiscard]] const linalg::Mat& generator_rref() const { return G_rref_; }
  [[nodiscard]] const std::vector<FVal>& expansion_basis() const { return basis_; }

  /// Same code, different expansion basis; rank supports are basis-dependent
  /// but their dimensions are not.
  [[nodiscard]] RankMetricCode with_expansion_basis(std::vector<FVal> basis) const;

  [[nodiscard]] bool is_codeword(const std::vector<FVal>& c) const;

  /// All q^(mk) codewords in message-odometer order (first message symbol
  /// cycling fastest); guarded by cap.
  [[nodiscard]] std::vector<std::vector<FVal>> codewords(
      std::uint64_t cap = kDefaultCodewordCap) const;

  /// m x n matrix over K: column j lists the coordinates of c_j in the
  /// expansion basis.
  [[nodiscard]] linalg::Mat expand(const std::vector<FVal>& c) const;
  [[nodiscard]] Subspace rank_support(const std::vector<FVal>& c) const;
  [[nodiscard]] int rank_weight(const std::vector<FVal>& c) const;

  /// Brute-force minimum over all nonzero codewords; requires k >= 1.
  [[nodiscard]] int min_rank_distance(std::uint64_t cap = kDefaultCodewordCap) const;

  /// Dual under the standard L-bilinear dot product on L^n.
  [[nodiscard]] RankMetricCode dual() const;

  /// C(J) = {c in C : c . y = 0 for every y in J} for a K-subspace J of K^n,
  /// computed from the kernel of u -> u (G Y^T); returns an rref L-basis.
  [[nodiscard]] linalg::Mat subcode_basis(const Subspace& J) const;

  /// Slow oracle for subcode_basis: enumerates codewords and keeps those with
  /// rank support inside J-perp.
  [[nodiscard]] linalg::Mat subcode_basis_by_support(
      const Subspace& J, std::uint64_t cap = kDefaultCodewordCap) const;

  [[nodiscard]] int l_of(const Subspace& J) const;  // dim_L C(J)
  [[nodiscard]] int r_of(const Subspace& J) const;  // k - l(J) = rank_L(G Y^T)

 private:
  linalg::Mat transfer_matrix(const Subspace& J) const;

  Field K_;
  Field L_;
  int n_;
  int k_;
  linalg::Mat G_;
  linalg::Mat G_rref_;
  std::vector<FVal> basis_;
  linalg::Mat basis_inv_;  // m x m over K, right-multiplies coefficient rows
};

/// Gabidulin code: G_{ij} = p_j^(q^i) for K-independent evaluation points
/// p_0..p_{n-1} in L = GF(q^m) (defaults 1, a, .., a^(n-1)); q prime,
/// m >= n >= k >= 1. MRD: d_R = n - k + 1.
[[nodiscard]] RankMetricCode gabidulin(std::uint64_t q, int m, int n, int k,
                                       const std::vector<FVal>& points = {});

/// q-matroid of the code: r(J) = r(J) of the code, on the lattice of
/// K-subspaces of K^n.
[[nodiscard]] QMatroid matroid_of_code(const RankMetricCode& C,
                                       int cap_bits = kDefaultPointCapBits);

/// Verifies, over every subspace J of K^n:
///  - "pJ":  for each 0 <= t <= n, [every dim-t J has r(J) = t] iff
///           t < d_R(C-dual);
///  - "lJ5": l(J) = k - dim J whenever dim J < d_R(C-dual), and l(J) = 0
///           whenever dim J > n - d_R(C).
/// A pJ violation that is a statement about t alone (no single offending
/// subspace) is recorded as one empty witness tuple.
[[nodiscard]] std::vector<AxiomReport> check_code_support_lemmas(
    const RankMetricCode& C, std::uint64_t cap = kDefaultCodewordCap);

}  // namespace qm

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmatroids/space.hpp"

namespace qm {

/// Outcome of one axiom check. When the axiom fails, witnesses holds the
/// first violating tuple found in (dim, key) iteration order and
/// violation_count the total number of violations; a witness always
/// re-checks as a genuine violation when replayed against its inputs.
struct AxiomReport {
  AxiomReport() = default;
  explicit AxiomReport(std::string id) : axiom(std::move(id)) {}

  std::string axiom;
  bool holds = true;
  std::vector<std::vector<Subspace>> witnesses;
  std::size_t violation_count = 0;
};

[[nodiscard]] bool all_hold(const std::vector<AxiomReport>& reports);

/// Raised when a constructor is handed a family that fails its axiom suite;
/// carries the full report so callers can surface the witnesses.
class AxiomViolationError : public Error {
 public:
  explicit AxiomViolationError(std::vector<AxiomReport> reports);
  std::vector<AxiomReport> reports;
};

/// Rank generating polynomial: the coefficient of X^i Y^j counts subspaces A
/// with r(E) - r(A) = i and dim A - r(A) = j.
class RankPolynomial {
 public:
  using Terms = std::map<std::pair<int, int>, long long>;

  RankPolynomial() = default;
  explicit RankPolynomial(Terms terms);

  [[nodiscard]] long long coeff(int i, int j) const;
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] long long total_mass() const;
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] bool operator==(const RankPolynomial& o) const { return terms_ == o.terms_; }
  [[nodiscard]] bool operator!=(const RankPolynomial& o) const { return !(*this == o); }

 private:
  Terms terms_;  // only nonzero coefficients
};

/// A q-matroid (E, r) with E = K^n, represented by the complete rank table
/// over the subspace lattice of E, indexed in (dim, key) order.
///
/// Construction enforces only completeness and non-negative entries; the
/// rank axioms themselves are the job of check_rank_axioms, so deliberately
/// broken tables (counterexamples) can be represented and examined.
class QMatroid {
 public:
  QMatroid(std::shared_ptr<const SubspaceLattice> lattice, std::vector<int> ranks);

  /// Builds from explicit (subspace, rank) entries; every subspace of K^n
  /// must appear exactly once (ParseError otherwise).
  [[nodiscard]] static QMatroid from_entries(std::uint64_t q, int n,
                                             const std::vector<std::pair<Subspace, int>>& entries,
                                             int cap_bits = kDefaultPointCapBits);

  [[nodiscard]] std::uint64_t q() const { return lattice_->q(); }
  [[nodiscard]] int n() const { return lattice_->n(); }
  [[nodiscard]] const SubspaceLattice& lattice() const { return *lattice_; }
  [[nodiscard]] std::shared_ptr<const SubspaceLattice> lattice_ptr() const { return lattice_; }

  [[nodiscard]] int rank() const { return ranks_.back(); }
  [[nodiscard]] int rank_by_id(int id) const { return ranks_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] int rank_of(const Subspace& A) const { return rank_by_id(lattice_->id_of(A)); }
  [[nodiscard]] const std::vector<int>& table() const { return ranks_; }

  [[nodiscard]] std::vector<Subspace> independents() const;
  [[nodiscard]] std::vector<Subspace> bases() const;
  /// Minimal dependent subspaces; minimality is checked on codimension-1
  /// subspaces of each candidate, which suffices because dependence is
  /// upward closed.
  [[nodiscard]] std::vector<Subspace> circuits() const;
  [[nodiscard]] std::vector<Subspace> loops() const;
  /// 1-dimensional e contained in B-perp for no basis B.
  [[nodiscard]] std::vector<Subspace> isthmuses() const;
  [[nodiscard]] std::vector<Subspace> flats() const;

  /// Subspace spanned by all 1-dimensional x with r(A + x) = r(A).
  [[nodiscard]] Subspace closure(const Subspace& A) const;
  [[nodiscard]] int closure_id(int id) const;

  [[nodiscard]] RankPolynomial rank_polynomial() const;

  [[nodiscard]] std::vector<int> independent_ids() const;
  [[nodiscard]] std::vector<int> basis_ids() const;

  [[nodiscard]] bool operator==(const QMatroid& o) const {
    return q() == o.q() && n() == o.n() && ranks_ == o.ranks_;
  }
  [[nodiscard]] bool operator!=(const QMatroid& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const SubspaceLattice> lattice_;
  std::vector<int> ranks_;
};

/// Rank axioms (r1) boundedness, (r2) monotonicity, (r3) submodularity.
[[nodiscard]] std::vector<AxiomReport> check_rank_axioms(const QMatroid& M);

/// Independence axioms (I1) nonempty, (I2) downward closed, (I3)
/// augmentation, (I4) maximal members behave submodularly, plus the primed
/// forms (I1') and (I3'). The family may be arbitrary; it is deduplicated
/// and canonicalized first. A divergence between the primed and unprimed
/// conjunctions would be a checker bug and raises std::logic_error.
[[nodiscard]] std::vector<AxiomReport> check_independence_axioms(const std::vector<Subspace>& family,
                                                                 std::uint64_t q, int n);

/// Basis axioms (B1), (B2) incomparability, (B2') equidimensionality, (B3)
/// exchange, (B4) maximal intersections, plus the observed consequence that
/// every exchange witness y lies outside B1 (reported as "B3-remark").
[[nodiscard]] std::vector<AxiomReport> check_basis_axioms(const std::vector<Subspace>& family,
                                                          std::uint64_t q, int n);

/// Circuit axioms (C1), (C2), (C3). Verifier only: circuits are not known
/// to determine a q-matroid, so there is no from-circuits constructor.
[[nodiscard]] std::vector<AxiomReport> check_circuit_axioms(const std::vector<Subspace>& family,
                                                            std::uint64_t q, int n);

/// Closure axioms (cl1) extensivity, (cl2) monotonicity, (cl3) idempotence,
/// (cl4) exchange, evaluated on the closure operator derived from the rank
/// table. Verifier only, as for circuits.
[[nodiscard]] std::vector<AxiomReport> check_closure_axioms(const QMatroid& M);

/// Derived facts checked as properties: unit rank increase, spans of loops
/// have rank zero, and the two local-to-global rank propositions.
[[nodiscard]] std::vector<AxiomReport> lemma_suite(const QMatroid& M);

inline constexpr std::uint64_t kDefaultGlCap = 1u << 20;

/// |GL(n, q)|, saturating at 2^64 - 1.
[[nodiscard]] std::uint64_t gl_order(std::uint64_t q, int n);

/// Image of A under the row-vector action v -> v * P.
[[nodiscard]] Subspace apply_map(const linalg::Mat& P, const Subspace& A);

/// A rank-preserving GL(n, q) map from a to b, if one exists. Screens on
/// per-dimension rank distributions, then searches GL exhaustively in a
/// deterministic order. CapExceeded when |GL(n, q)| exceeds gl_cap.
[[nodiscard]] std::optional<linalg::Mat> isomorphism(const QMatroid& a, const QMatroid& b,
                                                     std::uint64_t gl_cap = kDefaultGlCap);

}  // namespace qm

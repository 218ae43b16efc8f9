#pragma once

#include "qmatroids/qmatroid.hpp"

namespace qm {

/// Uniform q-matroid U_{k,n}(q): r(A) = min(dim A, k).
[[nodiscard]] QMatroid uniform(int k, int n, std::uint64_t q, int cap_bits = kDefaultPointCapBits);

/// Rank table induced by an arbitrary family: r(A) = max dim of a member
/// inside A (0 when none). No axioms are checked; this is the tool for
/// examining counterexample families.
[[nodiscard]] QMatroid rank_from_family_unchecked(const std::vector<Subspace>& family,
                                                  std::uint64_t q, int n);

/// Constructor from an independence family; validates the (I) axioms first
/// and raises AxiomViolationError carrying the reports on failure.
[[nodiscard]] QMatroid from_independents(const std::vector<Subspace>& family, std::uint64_t q,
                                         int n);

/// Constructor from a basis family; validates the (B) axioms, closes the
/// family downward and delegates to from_independents.
[[nodiscard]] QMatroid from_bases(const std::vector<Subspace>& family, std::uint64_t q, int n);

/// Dual q-matroid: r*(A) = dim A - r(M) + r(A-perp), with the perp of the
/// standard dot product.
[[nodiscard]] QMatroid dual(const QMatroid& M);

/// Restriction M|_H to a hyperplane H that contains at least one basis,
/// re-coordinatized onto K^(n-1) through the RREF basis rows of H.
[[nodiscard]] QMatroid restrict_to(const QMatroid& M, const Subspace& H);

/// Contraction M/e by a non-loop 1-dimensional e, realized on K^(n-1)
/// through the canonical QuotientMap: r_{M/e}(A) = r_M(pull(A)) - 1.
[[nodiscard]] QMatroid contract(const QMatroid& M, const Subspace& e);

/// Truncation: r_tau(A) = min(r(A), r(M) - 1); requires r(M) >= 1.
[[nodiscard]] QMatroid truncate(const QMatroid& M);

/// Result of checking M*/e = (M|_{e-perp})* and (M/e)* = M*|_{e-perp}.
/// The minors live on differently re-coordinatized copies of K^(n-1), so
/// the identities are verified up to GL-isomorphism; the witness maps are
/// carried in the report.
struct MinorDualityReport {
  bool holds = false;
  std::optional<linalg::Mat> dual_restrict_witness;
  std::optional<linalg::Mat> contract_dual_witness;
};

/// Requires e to be neither a loop nor an isthmus of M, so all four minors
/// involved are defined.
[[nodiscard]] MinorDualityReport check_restriction_contraction_duality(
    const QMatroid& M, const Subspace& e, std::uint64_t gl_cap = kDefaultGlCap);

/// Duality identities of M, one report each:
///  - "dual-involution":       (M*)* = M as tables;
///  - "dual-rank":             r(M*) = n - r(M);
///  - "dual-bases":            bases(M*) = { B-perp : B basis of M };
///  - "dual-loops-isthmuses":  loops(M) = isthmuses(M*) and vice versa;
///  - "minor-duality":         restriction/contraction duality for every
///                             admissible e (neither loop nor isthmus).
/// Identity-level failures with no single offending subspace are recorded
/// as one empty witness tuple.
[[nodiscard]] std::vector<AxiomReport> duality_suite(const QMatroid& M,
                                                     std::uint64_t gl_cap = kDefaultGlCap);

}  // namespace qm

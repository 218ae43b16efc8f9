#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qmatroids/linalg.hpp"

namespace qm {

/// Default enumeration cap: lattices are enumerable while q^n <= 2^16.
inline constexpr int kDefaultPointCapBits = 16;

/// A subspace of K^n for K = GF(q), held in canonical form: the unique
/// reduced-row-echelon basis with strictly increasing pivot columns and no
/// zero rows. The zero subspace has an empty basis. Two subspaces are equal
/// iff (q, n) and the canonical rows agree, so Subspace works as a map key.
///
/// The ambient field is always the canonical GF(q) from FieldSpec::of_size.
class Subspace {
 public:
  /// The zero subspace of K^n.
  Subspace(std::uint64_t q, int n);

  /// Row space of the given vectors (any spanning set; canonicalized here).
  /// Entries must lie in [0, q) (FieldMismatch) and every vector must have
  /// length n (DimensionMismatch).
  static Subspace span(std::uint64_t q, int n, const linalg::Mat& vectors);

  static Subspace zero(std::uint64_t q, int n) { return Subspace(q, n); }
  static Subspace full(std::uint64_t q, int n);

  [[nodiscard]] std::uint64_t q() const { return field_->size(); }
  [[nodiscard]] int ambient() const { return n_; }
  [[nodiscard]] int dim() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] const linalg::Mat& rows() const { return rows_; }
  [[nodiscard]] const Field& field() const { return field_; }

  /// Whether other <= this (same ambient required).
  [[nodiscard]] bool contains(const Subspace& other) const;
  [[nodiscard]] bool contains_vector(const std::vector<FVal>& v) const;

  /// Orthogonal complement under the standard dot product.
  [[nodiscard]] Subspace perp() const;

  /// The (q^dim - 1)/(q - 1) one-dimensional subspaces of this subspace,
  /// sorted by canonical key.
  [[nodiscard]] std::vector<Subspace> lines() const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  [[nodiscard]] bool operator==(const Subspace& o) const {
    return n_ == o.n_ && field_->size() == o.field_->size() && rows_ == o.rows_;
  }
  [[nodiscard]] bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Total order by (q, n, dim, key); key is the row-major serialization of
  /// the canonical rows. This is the order used everywhere subspaces are
  /// listed or serialized.
  [[nodiscard]] bool operator<(const Subspace& o) const;

  [[nodiscard]] std::string to_string() const;

 private:
  Subspace(Field field, int n, linalg::Mat rref_rows);

  friend std::vector<Subspace> enumerate_subspaces(std::uint64_t, int, int, int);

  Field field_;
  int n_;
  linalg::Mat rows_;
};

[[nodiscard]] Subspace sum(const Subspace& a, const Subspace& b);
[[nodiscard]] Subspace intersect(const Subspace& a, const Subspace& b);

/// All subspaces of K^n, or only those of the given dimension, ordered by
/// (dim, key). dim = -1 means every dimension. CapExceeded once q^n exceeds
/// 2^cap_bits.
[[nodiscard]] std::vector<Subspace> enumerate_subspaces(std::uint64_t q, int n, int dim = -1,
                                                        int cap_bits = kDefaultPointCapBits);

/// The canonical projection E -> E/e for a 1-dimensional e, realized on
/// coordinates: with g the RREF generator of e and j its pivot column, a
/// vector maps to v - v_j * g with coordinate j dropped. push is defined on
/// subspaces containing e; pull is its inverse from subspaces of K^(n-1).
class QuotientMap {
 public:
  QuotientMap(const Subspace& e);

  [[nodiscard]] const Subspace& line() const { return e_; }
  [[nodiscard]] int pivot() const { return pivot_; }

  /// Image of B >= e in K^(n-1); KernelNotContained when e is not inside B.
  [[nodiscard]] Subspace push(const Subspace& B) const;

  /// Preimage of a subspace of K^(n-1); always contains e.
  [[nodiscard]] Subspace pull(const Subspace& A) const;

 private:
  Subspace e_;
  std::vector<FVal> g_;
  int pivot_;
};

/// A complement-style companion of e inside A >= e: A ∩ e-perp. Returns the
/// intersection when its dimension is dim A - 1; throws
/// SelfOrthogonalDegenerate when the dimension fails to drop (which can
/// happen when e <= e-perp, e.g. self-orthogonal lines over GF(2)).
[[nodiscard]] Subspace phi_complement(const Subspace& e, const Subspace& A);

/// The full lattice of subspaces of K^n, enumerated once and shared. Ids
/// follow the (dim, key) order, so id 0 is the zero subspace and the last id
/// is the full space. Immutable after construction; safe for concurrent
/// reads.
///
/// Pairwise join/meet are computed per call (they are cheap); the boolean
/// containment matrix and the contained-subspace/contained-line lists are
/// precomputed for lattices of at most kPairTableLimit subspaces, which
/// covers every axiom-suite workload.
class SubspaceLattice {
 public:
  static constexpr int kPairTableLimit = 5000;

  static std::shared_ptr<const SubspaceLattice> get(std::uint64_t q, int n,
                                                    int cap_bits = kDefaultPointCapBits);

  [[nodiscard]] std::uint64_t q() const { return q_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int count() const { return static_cast<int>(spaces_.size()); }
  [[nodiscard]] const Subspace& at(int id) const { return spaces_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] int id_of(const Subspace& s) const;
  [[nodiscard]] int dim(int id) const { return at(id).dim(); }
  [[nodiscard]] int zero_id() const { return 0; }
  [[nodiscard]] int full_id() const { return count() - 1; }
  [[nodiscard]] const std::vector<int>& of_dim(int d) const;
  [[nodiscard]] const std::vector<int>& line_ids() const { return line_ids_; }

  [[nodiscard]] int sum_id(int a, int b) const;
  [[nodiscard]] int meet_id(int a, int b) const;
  [[nodiscard]] int perp_id(int id) const { return perp_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] bool leq(int a, int b) const;

  /// Ids contained in id (all dimensions, ascending); needs the pair tables.
  [[nodiscard]] const std::vector<int>& subs_of(int id) const;
  /// Line ids contained in id; needs the pair tables.
  [[nodiscard]] const std::vector<int>& lines_in(int id) const;

 private:
  SubspaceLattice(std::uint64_t q, int n, int cap_bits);

  [[nodiscard]] bool mask_leq(int a, int b) const;
  void require_tables() const;

  std::uint64_t q_;
  int n_;
  std::vector<Subspace> spaces_;
  std::map<linalg::Mat, int> id_by_rows_;
  std::vector<std::vector<std::uint64_t>> masks_;
  std::map<std::vector<std::uint64_t>, int> id_by_mask_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> line_ids_;
  std::vector<int> perp_;
  bool has_tables_ = false;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> subs_of_;
  std::vector<std::vector<int>> lines_in_;
};

}  // namespace qm

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qmatroids/errors.hpp"

namespace qm {

/// Packed element value of a finite field GF(p^m). The polynomial-basis
/// coordinates (c_0, ..., c_{m-1}) are stored as the integer
/// c_0 + c_1*p + ... + c_{m-1}*p^{m-1}, so values range over [0, p^m).
using FVal = std::uint32_t;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Exact arithmetic in GF(p^m), represented as GF(p)[x] modulo an explicit
/// monic irreducible polynomial. The modulus is part of the spec: two specs
/// agree only if (p, m, modulus) all agree. Element values are packed FVals.
///
/// Scope cap: p^m <= 2^16. Fields of size <= 256 precompute full
/// multiplication/inverse tables; larger ones compute on the fly.
class FieldSpec {
 public:
  /// Builds GF(p^m) from a monic modulus of degree m, coefficients listed
  /// low degree first (length m+1). For m == 1 the modulus must be x,
  /// i.e. {0, 1}. Coefficients are reduced mod p before validation.
  static Field make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  /// GF(p) with the conventional modulus x.
  static Field prime_field(std::uint32_t p);

  /// The canonical field of size q = p^e: prime fields directly, extension
  /// fields with the lexicographically least irreducible modulus (ordered by
  /// the packed value of the non-leading coefficients). Results are cached
  /// and shared, so subspace canonical forms agree across the library.
  static Field of_size(std::uint64_t q);

  [[nodiscard]] std::uint32_t p() const { return p_; }
  [[nodiscard]] std::uint32_t m() const { return m_; }
  [[nodiscard]] std::uint32_t size() const { return q_; }
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  [[nodiscard]] bool same_as(const FieldSpec& other) const;

  [[nodiscard]] FVal add(FVal a, FVal b) const;
  [[nodiscard]] FVal sub(FVal a, FVal b) const;
  [[nodiscard]] FVal neg(FVal a) const;
  [[nodiscard]] FVal mul(FVal a, FVal b) const;
  [[nodiscard]] FVal inv(FVal a) const;
  [[nodiscard]] FVal div(FVal a, FVal b) const;
  [[nodiscard]] FVal pow(FVal a, std::uint64_t e) const;

  /// Packs polynomial-basis coordinates (low degree first, length <= m,
  /// entries reduced mod p) into an element value.
  [[nodiscard]] FVal from_coeffs(const std::vector<std::uint32_t>& c) const;
  [[nodiscard]] std::vector<std::uint32_t> coeffs(FVal v) const;

  /// The class of x, conventionally written a. Requires m >= 2.
  [[nodiscard]] FVal generator() const;

  /// Human form, e.g. "0", "1", "a", "a+1", "a^2+a".
  [[nodiscard]] std::string to_string(FVal v) const;

  void check_value(FVal v) const;

 private:
  FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  [[nodiscard]] FVal mul_direct(FVal a, FVal b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FVal> pow_p_;       // p^0 .. p^m
  std::vector<FVal> x_reduced_;   // x^(m+i) mod f, packed, i = 0 .. m-2
  std::vector<FVal> mul_tab_;     // q*q when q <= 256, else empty
  std::vector<FVal> inv_tab_;     // q entries when q <= 256, else empty
};

/// A field element bound to its spec. Mixed-spec arithmetic raises
/// SpecMismatch; there are no implicit embeddings between fields.
class FieldElem {
 public:
  FieldElem(Field field, FVal value);
  static FieldElem zero(const Field& field) { return FieldElem(field, 0); }
  static FieldElem one(const Field& field);
  static FieldElem from_coeffs(const Field& field, const std::vector<std::uint32_t>& c);

  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] FVal value() const { return value_; }
  [[nodiscard]] std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  [[nodiscard]] bool is_zero() const { return value_ == 0; }

  [[nodiscard]] FieldElem operator+(const FieldElem& o) const;
  [[nodiscard]] FieldElem operator-(const FieldElem& o) const;
  [[nodiscard]] FieldElem operator*(const FieldElem& o) const;
  [[nodiscard]] FieldElem operator/(const FieldElem& o) const;
  [[nodiscard]] FieldElem operator-() const;
  [[nodiscard]] FieldElem inverse() const;
  [[nodiscard]] FieldElem pow(std::uint64_t e) const;

  [[nodiscard]] bool operator==(const FieldElem& o) const;
  [[nodiscard]] bool operator!=(const FieldElem& o) const { return !(*this == o); }

  [[nodiscard]] std::string to_string() const { return field_->to_string(value_); }

 private:
  Field field_;
  FVal value_;
};

/// Coordinates of x in the given K-basis of L, where K = GF(p) is the prime
/// subfield of L. The basis must consist of m elements of L that are
/// K-linearly independent (NotABasis otherwise). Returned residues satisfy
/// x = sum coords[i] * basis[i].
[[nodiscard]] std::vector<std::uint32_t> expand_to_base(const FieldElem& x,
                                                        const std::vector<FieldElem>& basis);

}  // namespace qm

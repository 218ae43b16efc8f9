#include "qmatroids/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qmatroids/linalg.hpp"

namespace qm {

namespace {

constexpr std::uint64_t kFieldSizeCap = 1u << 16;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Dense polynomials over GF(p), coefficients low degree first.
using Poly = std::vector<std::uint32_t>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

std::uint32_t mod_inv_prime(std::uint32_t a, std::uint32_t p) {
  // p is small; exhaustive search keeps this dependency-free.
  for (std::uint32_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw Error(Errc::DivisionByZero, "no inverse mod p");
}

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  int db = poly_deg(b);
  std::uint32_t lead_inv = mod_inv_prime(b[static_cast<std::size_t>(db)], p);
  for (int i = poly_deg(a); i >= db; --i) {
    std::uint32_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::uint32_t f = c * lead_inv % p;
    for (int j = 0; j <= db; ++j) {
      std::uint32_t& ai = a[static_cast<std::size_t>(i - db + j)];
      ai = (ai + p * f - f * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  int m = poly_deg(f);
  if (m < 1) return false;
  // Trial division by every monic polynomial of degree 1 .. m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = t;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_deg(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m_; ++i) q *= p_;
  q_ = static_cast<std::uint32_t>(q);

  pow_p_.resize(m_ + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  // x^m mod f = -(f_0 + f_1 x + ... + f_{m-1} x^{m-1}), then one shift per
  // higher power. Packed values; used to fold the high half of products.
  if (m_ >= 2) {
    x_reduced_.resize(m_ - 1);
    std::vector<std::uint32_t> cur(m_);
    for (std::uint32_t i = 0; i < m_; ++i) cur[i] = (p_ - modulus_[i] % p_) % p_;
    auto pack = [&](const std::vector<std::uint32_t>& c) {
      FVal v = 0;
      for (std::uint32_t i = 0; i < m_; ++i) v += c[i] * pow_p_[i];
      return v;
    };
    x_reduced_[0] = pack(cur);
    for (std::uint32_t i = 1; i + 1 < m_; ++i) {
      // Multiply cur by x: shift up, fold the overflow digit through x^m.
      std::uint32_t top = cur[m_ - 1];
      for (std::uint32_t j = m_ - 1; j >= 1; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top != 0) {
        FVal fold = x_reduced_[0];
        for (std::uint32_t j = 0; j < m_; ++j) {
          std::uint32_t d = fold / pow_p_[j] % p_;
          cur[j] = (cur[j] + top * d) % p_;
        }
      }
      x_reduced_[i] = pack(cur);
    }
  }

  if (q_ <= 256) {
    mul_tab_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (FVal a = 0; a < q_; ++a) {
      for (FVal b = a; b < q_; ++b) {
        FVal r = mul_direct(a, b);
        mul_tab_[static_cast<std::size_t>(a) * q_ + b] = r;
        mul_tab_[static_cast<std::size_t>(b) * q_ + a] = r;
      }
    }
    inv_tab_.assign(q_, 0);
    for (FVal a = 1; a < q_; ++a) {
      for (FVal b = 1; b < q_; ++b) {
        if (mul_tab_[static_cast<std::size_t>(a) * q_ + b] == 1) {
          inv_tab_[a] = b;
          break;
        }
      }
    }
  }
}

Field FieldSpec::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p));
  if (m < 1) throw Error(Errc::BadParams, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kFieldSizeCap) throw Error(Errc::CapExceeded, "p^m exceeds 2^16");
  }
  if (modulus.size() != static_cast<std::size_t>(m) + 1) {
    throw Error(Errc::DegreeMismatch, "modulus must list m+1 coefficients, low degree first");
  }
  for (auto& c : modulus) c %= p;
  if (modulus[m] != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic");
  if (m == 1) {
    if (modulus[0] != 0) {
      throw Error(Errc::DegreeMismatch, "prime fields use the modulus x");
    }
  } else if (!poly_irreducible(modulus, p)) {
    throw Error(Errc::NotIrreducible, "modulus is reducible over GF(p)");
  }
  return Field(new FieldSpec(p, m, std::move(modulus)));
}

Field FieldSpec::prime_field(std::uint32_t p) { return make(p, 1, {0, 1}); }

Field FieldSpec::of_size(std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::uint64_t, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  if (q < 2 || q > kFieldSizeCap) throw Error(Errc::BadParams, "field size out of scope");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t m = 0;
  std::uint64_t t = q;
  while (t > 1) {
    if (t % p != 0) throw Error(Errc::BadParams, std::to_string(q) + " is not a prime power");
    t /= p;
    ++m;
  }

  Field f;
  if (m == 1) {
    f = prime_field(p);
  } else {
    // Least irreducible monic modulus, ordering the low coefficients as a
    // packed base-p value. Deterministic, so canonical forms are stable.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t tt = 0; tt < count && !f; ++tt) {
      std::vector<std::uint32_t> mod(m + 1, 0);
      std::uint64_t v = tt;
      for (std::uint32_t i = 0; i < m; ++i) {
        mod[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      mod[m] = 1;
      if (poly_irreducible(mod, p)) f = Field(new FieldSpec(p, m, std::move(mod)));
    }
  }
  cache[q] = f;
  return f;
}

bool FieldSpec::same_as(const FieldSpec& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

void FieldSpec::check_value(FVal v) const {
  if (v >= q_) throw Error(Errc::BadParams, "element value out of range for the field");
}

FVal FieldSpec::add(FVal a, FVal b) const {
  if (p_ == 2) return a ^ b;
  FVal r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (a / pow_p_[i] % p_ + b / pow_p_[i] % p_) % p_ * pow_p_[i];
  }
  return r;
}

FVal FieldSpec::neg(FVal a) const {
  if (p_ == 2) return a;
  FVal r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (p_ - a / pow_p_[i] % p_) % p_ * pow_p_[i];
  }
  return r;
}

FVal FieldSpec::sub(FVal a, FVal b) const { return add(a, neg(b)); }

FVal FieldSpec::mul_direct(FVal a, FVal b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<FVal>(static_cast<std::uint64_t>(a) * b % p_);
  // Schoolbook convolution of the digit vectors, high part folded through
  // the precomputed reductions of x^m .. x^(2m-2).
  std::vector<std::uint32_t> t(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t ai = a / pow_p_[i] % p_;
    if (ai == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      std::uint32_t bj = b / pow_p_[j] % p_;
      t[i + j] = (t[i + j] + ai * bj) % p_;
    }
  }
  FVal r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) r += t[i] % p_ * pow_p_[i];
  for (std::uint32_t i = m_; i < 2 * m_ - 1; ++i) {
    std::uint32_t c = t[i];
    if (c == 0) continue;
    FVal red = x_reduced_[i - m_];
    FVal scaled = 0;
    for (std::uint32_t j = 0; j < m_; ++j) {
      scaled += red / pow_p_[j] % p_ * c % p_ * pow_p_[j];
    }
    r = add(r, scaled);
  }
  return r;
}

FVal FieldSpec::mul(FVal a, FVal b) const {
  if (!mul_tab_.empty()) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
  return mul_direct(a, b);
}

FVal FieldSpec::pow(FVal a, std::uint64_t e) const {
  FVal r = 1;
  FVal base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FVal FieldSpec::inv(FVal a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!inv_tab_.empty()) return inv_tab_[a];
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

FVal FieldSpec::div(FVal a, FVal b) const { return mul(a, inv(b)); }

FVal FieldSpec::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > m_) throw Error(Errc::DegreeMismatch, "too many coefficients for the field");
  FVal v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += c[i] % p_ * pow_p_[i];
  return v;
}

std::vector<std::uint32_t> FieldSpec::coeffs(FVal v) const {
  check_value(v);
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) c[i] = v / pow_p_[i] % p_;
  return c;
}

FVal FieldSpec::generator() const {
  if (m_ < 2) throw Error(Errc::BadParams, "prime fields have no polynomial generator");
  return pow_p_[1];
}

std::string FieldSpec::to_string(FVal v) const {
  check_value(v);
  if (v == 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
    std::uint32_t c = v / pow_p_[static_cast<std::size_t>(i)] % p_;
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || c > 1) out << c;
    if (i >= 1 && c > 1) out << "*";
    if (i == 1) out << "a";
    if (i >= 2) out << "a^" << i;
  }
  return out.str();
}

FieldElem::FieldElem(Field field, FVal value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(Errc::BadParams, "element needs a field spec");
  field_->check_value(value_);
}

FieldElem FieldElem::one(const Field& field) { return FieldElem(field, 1); }

FieldElem FieldElem::from_coeffs(const Field& field, const std::vector<std::uint32_t>& c) {
  if (!field) throw Error(Errc::BadParams, "element needs a field spec");
  return FieldElem(field, field->from_coeffs(c));
}

namespace {
void require_same_spec(const FieldElem& a, const FieldElem& b) {
  if (a.field().get() == b.field().get()) return;
  if (!a.field()->same_as(*b.field())) {
    throw Error(Errc::SpecMismatch, "operands belong to different field specs");
  }
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_spec(*this, o);
  return FieldElem(field_, field_->add(value_, o.value_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same_spec(*this, o);
  return FieldElem(field_, field_->sub(value_, o.value_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_spec(*this, o);
  return FieldElem(field_, field_->mul(value_, o.value_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same_spec(*this, o);
  return FieldElem(field_, field_->div(value_, o.value_));
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, field_->neg(value_)); }

FieldElem FieldElem::inverse() const { return FieldElem(field_, field_->inv(value_)); }

FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(field_, field_->pow(value_, e)); }

bool FieldElem::operator==(const FieldElem& o) const {
  return field_->same_as(*o.field()) && value_ == o.value_;
}

std::vector<std::uint32_t> expand_to_base(const FieldElem& x, const std::vector<FieldElem>& basis) {
  const Field& L = x.field();
  std::uint32_t m = L->m();
  if (basis.size() != m) {
    throw Error(Errc::DegreeMismatch, "basis must have m elements");
  }
  for (const auto& b : basis) {
    if (!b.field()->same_as(*L)) {
      throw Error(Errc::SpecMismatch, "basis elements must live in the same field as x");
    }
  }
  Field K = FieldSpec::prime_field(L->p());
  linalg::Mat B(m);
  for (std::uint32_t i = 0; i < m; ++i) B[i] = basis[i].coeffs();
  if (linalg::rank_of(B, *K) != static_cast<int>(m)) {
    throw Error(Errc::NotABasis, "given elements are K-linearly dependent");
  }
  auto sol = linalg::solve_left(B, x.coeffs(), static_cast<int>(m), *K);
  return *sol;
}

}  // namespace qm

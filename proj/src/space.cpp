#include "qmatroids/space.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace qm {

namespace {

void check_cap(std::uint64_t q, int n, int cap_bits) {
  long double points = 1;
  for (int i = 0; i < n; ++i) points *= static_cast<long double>(q);
  long double limit = 1;
  for (int i = 0; i < cap_bits; ++i) limit *= 2;
  if (points > limit) {
    throw Error(Errc::CapExceeded, "q^n exceeds 2^" + std::to_string(cap_bits));
  }
}

// All canonical RREF bases of k-dimensional subspaces of K^n: one matrix per
// choice of pivot columns and free entries.
std::vector<linalg::Mat> rref_bases_of_dim(std::uint64_t q, int n, int k) {
  std::vector<linalg::Mat> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < k; ++i) {
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c) {
        if (!is_piv[static_cast<std::size_t>(c)]) cells.emplace_back(i, c);
      }
    }
    std::vector<FVal> vals(cells.size(), 0);
    while (true) {
      linalg::Mat M(static_cast<std::size_t>(k), std::vector<FVal>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < k; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t t = 0; t < cells.size(); ++t) {
        M[static_cast<std::size_t>(cells[t].first)][static_cast<std::size_t>(cells[t].second)] = vals[t];
      }
      out.push_back(std::move(M));
      std::size_t idx = 0;
      while (idx < vals.size() && ++vals[idx] == q) vals[idx++] = 0;
      if (idx == vals.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

Subspace::Subspace(std::uint64_t q, int n) : field_(FieldSpec::of_size(q)), n_(n) {
  if (n < 0) throw Error(Errc::BadParams, "ambient dimension must be >= 0");
}

Subspace::Subspace(Field field, int n, linalg::Mat rref_rows)
    : field_(std::move(field)), n_(n), rows_(std::move(rref_rows)) {}

Subspace Subspace::span(std::uint64_t q, int n, const linalg::Mat& vectors) {
  Subspace s(q, n);
  linalg::Mat rows = vectors;
  for (const auto& v : rows) {
    if (static_cast<int>(v.size()) != n) {
      throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    }
    for (FVal x : v) {
      if (x >= q) throw Error(Errc::FieldMismatch, "entry not reduced into GF(q)");
    }
  }
  linalg::rref_in_place(rows, *s.field_);
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::full(std::uint64_t q, int n) {
  linalg::Mat rows(static_cast<std::size_t>(n), std::vector<FVal>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  Subspace s(q, n);
  s.rows_ = std::move(rows);
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || other.q() != q()) {
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambients");
  }
  for (const auto& v : other.rows_) {
    if (!linalg::in_row_space(rows_, v, *field_)) return false;
  }
  return true;
}

bool Subspace::contains_vector(const std::vector<FVal>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
  }
  return linalg::in_row_space(rows_, v, *field_);
}

Subspace Subspace::perp() const {
  return Subspace(field_, n_, linalg::kernel(rows_, n_, *field_));
}

std::vector<Subspace> Subspace::lines() const {
  std::vector<Subspace> out;
  int d = dim();
  const FieldSpec& F = *field_;
  // Exactly one coefficient tuple per line: first nonzero coefficient 1.
  for (int f = 0; f < d; ++f) {
    std::vector<FVal> c(static_cast<std::size_t>(d), 0);
    c[static_cast<std::size_t>(f)] = 1;
    std::size_t tail = static_cast<std::size_t>(d - f - 1);
    std::vector<FVal> t(tail, 0);
    while (true) {
      for (std::size_t i = 0; i < tail; ++i) c[static_cast<std::size_t>(f) + 1 + i] = t[i];
      std::vector<FVal> v(static_cast<std::size_t>(n_), 0);
      for (int i = f; i < d; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n_; ++j) {
          v[static_cast<std::size_t>(j)] = F.add(
              v[static_cast<std::size_t>(j)],
              F.mul(c[static_cast<std::size_t>(i)], rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
      }
      out.push_back(Subspace(field_, n_, {v}));
      std::size_t idx = 0;
      while (idx < tail && ++t[idx] == q()) t[idx++] = 0;
      if (idx == tail) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_ || a.q() != b.q()) {
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambients");
  }
  linalg::Mat rows = a.rows_;
  rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
  linalg::rref_in_place(rows, *a.field_);
  return Subspace(a.field_, a.n_, std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_ || a.q() != b.q()) {
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambients");
  }
  return sum(a.perp(), b.perp()).perp();
}

bool Subspace::operator<(const Subspace& o) const {
  if (q() != o.q()) return q() < o.q();
  if (n_ != o.n_) return n_ < o.n_;
  if (dim() != o.dim()) return dim() < o.dim();
  return rows_ < o.rows_;
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "<0>";
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out << ",";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (q() > 10 && j > 0) out << ".";
      out << rows_[i][j];
    }
  }
  out << ">";
  return out.str();
}

std::vector<Subspace> enumerate_subspaces(std::uint64_t q, int n, int dim, int cap_bits) {
  if (n < 0) throw Error(Errc::BadParams, "ambient dimension must be >= 0");
  if (dim < -1 || dim > n) throw Error(Errc::BadParams, "dimension filter out of range");
  check_cap(q, n, cap_bits);
  Field field = FieldSpec::of_size(q);
  std::vector<Subspace> out;
  int lo = dim < 0 ? 0 : dim;
  int hi = dim < 0 ? n : dim;
  for (int k = lo; k <= hi; ++k) {
    auto mats = rref_bases_of_dim(q, n, k);
    std::sort(mats.begin(), mats.end());
    for (auto& M : mats) out.push_back(Subspace(field, n, std::move(M)));
  }
  return out;
}

QuotientMap::QuotientMap(const Subspace& e) : e_(e) {
  if (e.dim() != 1) {
    throw Error(Errc::DimensionMismatch, "quotients are taken by 1-dimensional subspaces");
  }
  g_ = e.rows()[0];
  pivot_ = 0;
  while (g_[static_cast<std::size_t>(pivot_)] == 0) ++pivot_;
}

Subspace QuotientMap::push(const Subspace& B) const {
  if (B.ambient() != e_.ambient() || B.q() != e_.q()) {
    throw Error(Errc::AmbientMismatch, "subspace lives in a different ambient");
  }
  if (!B.contains(e_)) {
    throw Error(Errc::KernelNotContained, "push requires the kernel line inside the subspace");
  }
  const FieldSpec& F = *e_.field();
  linalg::Mat rows;
  for (auto v : B.rows()) {
    FVal f = v[static_cast<std::size_t>(pivot_)];
    if (f != 0) {
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, g_[j]));
    }
    v.erase(v.begin() + pivot_);
    rows.push_back(std::move(v));
  }
  return Subspace::span(e_.q(), e_.ambient() - 1, rows);
}

Subspace QuotientMap::pull(const Subspace& A) const {
  if (A.ambient() != e_.ambient() - 1 || A.q() != e_.q()) {
    throw Error(Errc::AmbientMismatch, "subspace does not live in the quotient ambient");
  }
  linalg::Mat rows{g_};
  for (auto u : A.rows()) {
    u.insert(u.begin() + pivot_, 0);
    rows.push_back(std::move(u));
  }
  return Subspace::span(e_.q(), e_.ambient(), rows);
}

Subspace phi_complement(const Subspace& e, const Subspace& A) {
  if (e.dim() != 1) {
    throw Error(Errc::DimensionMismatch, "phi_complement expects a 1-dimensional e");
  }
  if (!A.contains(e)) {
    throw Error(Errc::BadParams, "phi_complement expects e inside A");
  }
  Subspace F = intersect(A, e.perp());
  if (F.dim() != A.dim() - 1) {
    throw Error(Errc::SelfOrthogonalDegenerate,
                "A lies inside e-perp, so the dimension does not drop");
  }
  return F;
}

SubspaceLattice::SubspaceLattice(std::uint64_t q, int n, int cap_bits) : q_(q), n_(n) {
  spaces_ = enumerate_subspaces(q, n, -1, cap_bits);
  int N = count();
  for (int i = 0; i < N; ++i) id_by_rows_[spaces_[static_cast<std::size_t>(i)].rows()] = i;

  std::uint64_t points = 1;
  for (int i = 0; i < n_; ++i) points *= q_;
  std::size_t words = static_cast<std::size_t>((points + 63) / 64);
  masks_.assign(static_cast<std::size_t>(N), {});
  const FieldSpec& F = *FieldSpec::of_size(q_);
  for (int id = 0; id < N; ++id) {
    const auto& rows = spaces_[static_cast<std::size_t>(id)].rows();
    int d = static_cast<int>(rows.size());
    std::vector<std::uint64_t> mask(words, 0);
    std::vector<FVal> c(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<FVal> v(static_cast<std::size_t>(n_), 0);
      for (int i = 0; i < d; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n_; ++j) {
          v[static_cast<std::size_t>(j)] = F.add(
              v[static_cast<std::size_t>(j)],
              F.mul(c[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
      }
      std::uint64_t idx = 0;
      for (int j = n_ - 1; j >= 0; --j) idx = idx * q_ + v[static_cast<std::size_t>(j)];
      mask[idx / 64] |= std::uint64_t{1} << (idx % 64);
      std::size_t t = 0;
      while (t < c.size() && ++c[t] == q_) c[t++] = 0;
      if (t == c.size()) break;
    }
    masks_[static_cast<std::size_t>(id)] = mask;
    id_by_mask_[mask] = id;
  }

  by_dim_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (int id = 0; id < N; ++id) by_dim_[static_cast<std::size_t>(dim(id))].push_back(id);
  line_ids_ = by_dim_.size() > 1 ? by_dim_[1] : std::vector<int>{};

  perp_.resize(static_cast<std::size_t>(N));
  for (int id = 0; id < N; ++id) {
    perp_[static_cast<std::size_t>(id)] = id_by_rows_.at(spaces_[static_cast<std::size_t>(id)].perp().rows());
  }

  if (N <= kPairTableLimit) {
    has_tables_ = true;
    leq_.assign(static_cast<std::size_t>(N), std::vector<bool>(static_cast<std::size_t>(N), false));
    subs_of_.assign(static_cast<std::size_t>(N), {});
    lines_in_.assign(static_cast<std::size_t>(N), {});
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        if (mask_leq(a, b)) {
          leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
          subs_of_[static_cast<std::size_t>(b)].push_back(a);
          if (dim(a) == 1) lines_in_[static_cast<std::size_t>(b)].push_back(a);
        }
      }
    }
  }
}

std::shared_ptr<const SubspaceLattice> SubspaceLattice::get(std::uint64_t q, int n, int cap_bits) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const SubspaceLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const SubspaceLattice> lat(new SubspaceLattice(q, n, cap_bits));
  cache[key] = lat;
  return lat;
}

int SubspaceLattice::id_of(const Subspace& s) const {
  if (s.ambient() != n_ || s.q() != q_) {
    throw Error(Errc::AmbientMismatch, "subspace belongs to a different lattice");
  }
  return id_by_rows_.at(s.rows());
}

const std::vector<int>& SubspaceLattice::of_dim(int d) const {
  if (d < 0 || d > n_) throw Error(Errc::BadParams, "dimension out of range");
  return by_dim_[static_cast<std::size_t>(d)];
}

int SubspaceLattice::sum_id(int a, int b) const {
  linalg::Mat rows = at(a).rows();
  const auto& rb = at(b).rows();
  rows.insert(rows.end(), rb.begin(), rb.end());
  linalg::rref_in_place(rows, *at(a).field());
  return id_by_rows_.at(rows);
}

int SubspaceLattice::meet_id(int a, int b) const {
  const auto& ma = masks_[static_cast<std::size_t>(a)];
  const auto& mb = masks_[static_cast<std::size_t>(b)];
  std::vector<std::uint64_t> mi(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) mi[i] = ma[i] & mb[i];
  return id_by_mask_.at(mi);
}

bool SubspaceLattice::mask_leq(int a, int b) const {
  const auto& ma = masks_[static_cast<std::size_t>(a)];
  const auto& mb = masks_[static_cast<std::size_t>(b)];
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (ma[i] & ~mb[i]) return false;
  }
  return true;
}

bool SubspaceLattice::leq(int a, int b) const {
  if (has_tables_) return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  return mask_leq(a, b);
}

void SubspaceLattice::require_tables() const {
  if (!has_tables_) {
    throw Error(Errc::CapExceeded, "lattice too large for the axiom-suite tables");
  }
}

const std::vector<int>& SubspaceLattice::subs_of(int id) const {
  require_tables();
  return subs_of_[static_cast<std::size_t>(id)];
}

const std::vector<int>& SubspaceLattice::lines_in(int id) const {
  require_tables();
  return lines_in_[static_cast<std::size_t>(id)];
}

}  // namespace qm

#include "qmatroids/qmatroid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qm {

bool all_hold(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.holds; });
}

namespace {

std::string failing_summary(const std::vector<AxiomReport>& reports) {
  std::string msg = "family fails";
  for (const auto& r : reports) {
    if (!r.holds) msg += " (" + r.axiom + ")";
  }
  return msg;
}

void record(AxiomReport& rep, std::vector<Subspace> witness) {
  if (rep.holds) {
    rep.holds = false;
    rep.witnesses.push_back(std::move(witness));
  }
  ++rep.violation_count;
}

}  // namespace

AxiomViolationError::AxiomViolationError(std::vector<AxiomReport> rs)
    : Error(Errc::AxiomViolation, failing_summary(rs)), reports(std::move(rs)) {}

RankPolynomial::RankPolynomial(Terms terms) {
  for (auto& [k, c] : terms) {
    if (c != 0) terms_[k] = c;
  }
}

long long RankPolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

long long RankPolynomial::total_mass() const {
  long long t = 0;
  for (const auto& [k, c] : terms_) t += c;
  return t;
}

std::string RankPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, int>> keys;
  for (const auto& [k, c] : terms_) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, j] : keys) {
    long long c = terms_.at({i, j});
    if (!first) out << " + ";
    first = false;
    if (c != 1 || (i == 0 && j == 0)) out << c;
    if (c != 1 && (i > 0 || j > 0)) out << "*";
    if (i == 1) out << "X";
    if (i > 1) out << "X^" << i;
    if (i > 0 && j > 0) out << "*";
    if (j == 1) out << "Y";
    if (j > 1) out << "Y^" << j;
  }
  return out.str();
}

QMatroid::QMatroid(std::shared_ptr<const SubspaceLattice> lattice, std::vector<int> ranks)
    : lattice_(std::move(lattice)), ranks_(std::move(ranks)) {
  if (!lattice_) throw Error(Errc::BadParams, "missing lattice");
  if (static_cast<int>(ranks_.size()) != lattice_->count()) {
    throw Error(Errc::ParseError, "rank table must cover the whole subspace lattice");
  }
  for (int r : ranks_) {
    if (r < 0) throw Error(Errc::ParseError, "rank values must be non-negative");
  }
}

QMatroid QMatroid::from_entries(std::uint64_t q, int n,
                                const std::vector<std::pair<Subspace, int>>& entries,
                                int cap_bits) {
  auto lat = SubspaceLattice::get(q, n, cap_bits);
  std::vector<int> ranks(static_cast<std::size_t>(lat->count()), -1);
  for (const auto& [s, r] : entries) {
    int id = lat->id_of(s);
    if (ranks[static_cast<std::size_t>(id)] != -1) {
      throw Error(Errc::ParseError, "duplicate rank entry for " + s.to_string());
    }
    if (r < 0) throw Error(Errc::ParseError, "rank values must be non-negative");
    ranks[static_cast<std::size_t>(id)] = r;
  }
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] == -1) {
      throw Error(Errc::ParseError,
                  "rank table incomplete, missing " + lat->at(static_cast<int>(i)).to_string());
    }
  }
  return QMatroid(lat, std::move(ranks));
}

std::vector<int> QMatroid::independent_ids() const {
  std::vector<int> out;
  for (int id = 0; id < lattice_->count(); ++id) {
    if (rank_by_id(id) == lattice_->dim(id)) out.push_back(id);
  }
  return out;
}

std::vector<int> QMatroid::basis_ids() const {
  std::vector<int> out;
  int r = rank();
  for (int id : lattice_->of_dim(std::min(r, n()))) {
    if (lattice_->dim(id) == r && rank_by_id(id) == r) out.push_back(id);
  }
  return out;
}

namespace {
std::vector<Subspace> to_spaces(const SubspaceLattice& lat, const std::vector<int>& ids) {
  std::vector<Subspace> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(lat.at(id));
  return out;
}
}  // namespace

std::vector<Subspace> QMatroid::independents() const {
  return to_spaces(*lattice_, independent_ids());
}

std::vector<Subspace> QMatroid::bases() const { return to_spaces(*lattice_, basis_ids()); }

std::vector<Subspace> QMatroid::circuits() const {
  std::vector<int> out;
  for (int id = 0; id < lattice_->count(); ++id) {
    int d = lattice_->dim(id);
    if (rank_by_id(id) >= d) continue;
    bool minimal = true;
    for (int a : lattice_->subs_of(id)) {
      if (lattice_->dim(a) != d - 1) continue;
      if (rank_by_id(a) != d - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(id);
  }
  return to_spaces(*lattice_, out);
}

std::vector<Subspace> QMatroid::loops() const {
  std::vector<int> out;
  for (int id : lattice_->line_ids()) {
    if (rank_by_id(id) == 0) out.push_back(id);
  }
  return to_spaces(*lattice_, out);
}

std::vector<Subspace> QMatroid::isthmuses() const {
  std::vector<int> basis_perps;
  for (int b : basis_ids()) basis_perps.push_back(lattice_->perp_id(b));
  std::vector<int> out;
  for (int e : lattice_->line_ids()) {
    bool inside_some = false;
    for (int pb : basis_perps) {
      if (lattice_->leq(e, pb)) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) out.push_back(e);
  }
  return to_spaces(*lattice_, out);
}

int QMatroid::closure_id(int id) const {
  linalg::Mat rows = lattice_->at(id).rows();
  int r = rank_by_id(id);
  for (int x : lattice_->line_ids()) {
    if (rank_by_id(lattice_->sum_id(id, x)) == r) {
      rows.push_back(lattice_->at(x).rows()[0]);
    }
  }
  return lattice_->id_of(Subspace::span(q(), n(), rows));
}

Subspace QMatroid::closure(const Subspace& A) const {
  return lattice_->at(closure_id(lattice_->id_of(A)));
}

std::vector<Subspace> QMatroid::flats() const {
  std::vector<int> out;
  for (int id = 0; id < lattice_->count(); ++id) {
    if (closure_id(id) == id) out.push_back(id);
  }
  return to_spaces(*lattice_, out);
}

RankPolynomial QMatroid::rank_polynomial() const {
  RankPolynomial::Terms terms;
  int rE = rank();
  for (int id = 0; id < lattice_->count(); ++id) {
    ++terms[{rE - rank_by_id(id), lattice_->dim(id) - rank_by_id(id)}];
  }
  return RankPolynomial(std::move(terms));
}

std::vector<AxiomReport> check_rank_axioms(const QMatroid& M) {
  const auto& lat = M.lattice();
  int N = lat.count();
  AxiomReport r1{"r1"}, r2{"r2"}, r3{"r3"};
  for (int a = 0; a < N; ++a) {
    int r = M.rank_by_id(a);
    if (r < 0 || r > lat.dim(a)) record(r1, {lat.at(a)});
  }
  for (int b = 0; b < N; ++b) {
    for (int a : lat.subs_of(b)) {
      if (M.rank_by_id(a) > M.rank_by_id(b)) record(r2, {lat.at(a), lat.at(b)});
    }
  }
  for (int a = 0; a < N; ++a) {
    for (int b = a; b < N; ++b) {
      int lhs = M.rank_by_id(lat.sum_id(a, b)) + M.rank_by_id(lat.meet_id(a, b));
      if (lhs > M.rank_by_id(a) + M.rank_by_id(b)) record(r3, {lat.at(a), lat.at(b)});
    }
  }
  return {r1, r2, r3};
}

namespace {

struct FamilyContext {
  std::shared_ptr<const SubspaceLattice> lat;
  std::vector<char> member;
  std::vector<int> ids;  // ascending
};

FamilyContext load_family(const std::vector<Subspace>& family, std::uint64_t q, int n) {
  FamilyContext ctx;
  ctx.lat = SubspaceLattice::get(q, n);
  ctx.member.assign(static_cast<std::size_t>(ctx.lat->count()), 0);
  for (const auto& s : family) {
    int id = ctx.lat->id_of(s);
    if (!ctx.member[static_cast<std::size_t>(id)]) {
      ctx.member[static_cast<std::size_t>(id)] = 1;
      ctx.ids.push_back(id);
    }
  }
  std::sort(ctx.ids.begin(), ctx.ids.end());
  return ctx;
}

/// Members contained in id and maximal by inclusion among those.
std::vector<std::vector<int>> maximal_members(const FamilyContext& ctx) {
  const auto& lat = *ctx.lat;
  int N = lat.count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(N));
  for (int A = 0; A < N; ++A) {
    std::vector<int> inside;
    for (int m : ctx.ids) {
      if (lat.leq(m, A)) inside.push_back(m);
    }
    for (int m : inside) {
      bool maximal = true;
      for (int m2 : inside) {
        if (m2 != m && lat.leq(m, m2)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out[static_cast<std::size_t>(A)].push_back(m);
    }
  }
  return out;
}

}  // namespace

std::vector<AxiomReport> check_independence_axioms(const std::vector<Subspace>& family,
                                                   std::uint64_t q, int n) {
  FamilyContext ctx = load_family(family, q, n);
  const auto& lat = *ctx.lat;
  int N = lat.count();
  AxiomReport i1{"I1"}, i1p{"I1'"}, i2{"I2"}, i3{"I3"}, i3p{"I3'"}, i4{"I4"};

  if (ctx.ids.empty()) record(i1, {});
  if (ctx.ids.empty() || !ctx.member[static_cast<std::size_t>(lat.zero_id())]) {
    record(i1p, {lat.at(lat.zero_id())});
  }

  for (int J : ctx.ids) {
    for (int a : lat.subs_of(J)) {
      if (!ctx.member[static_cast<std::size_t>(a)]) record(i2, {lat.at(a), lat.at(J)});
    }
  }

  for (int I : ctx.ids) {
    for (int J : ctx.ids) {
      if (lat.dim(I) >= lat.dim(J)) continue;
      bool augmentable = false;
      for (int x : lat.lines_in(J)) {
        if (lat.leq(x, I)) continue;
        if (ctx.member[static_cast<std::size_t>(lat.sum_id(I, x))]) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable) {
        record(i3, {lat.at(I), lat.at(J)});
        if (lat.dim(J) == lat.dim(I) + 1) record(i3p, {lat.at(I), lat.at(J)});
      } else if (lat.dim(J) == lat.dim(I) + 1) {
        // (I3') is (I3) restricted to one-step pairs; nothing extra to do.
      }
    }
  }

  auto max_in = maximal_members(ctx);
  for (int A = 0; A < N; ++A) {
    for (int B = 0; B < N; ++B) {
      int S = lat.sum_id(A, B);
      const auto& maxS = max_in[static_cast<std::size_t>(S)];
      for (int I : max_in[static_cast<std::size_t>(A)]) {
        for (int J : max_in[static_cast<std::size_t>(B)]) {
          int IJ = lat.sum_id(I, J);
          bool ok = false;
          for (int K : maxS) {
            if (lat.leq(K, IJ)) {
              ok = true;
              break;
            }
          }
          if (!ok) record(i4, {lat.at(A), lat.at(B), lat.at(I), lat.at(J)});
        }
      }
    }
  }

  bool unprimed = i1.holds && i2.holds && i3.holds;
  bool primed = i1p.holds && i2.holds && i3p.holds;
  if (unprimed != primed) {
    throw std::logic_error("primed and unprimed independence forms diverged");
  }
  return {i1, i1p, i2, i3, i3p, i4};
}

std::vector<AxiomReport> check_basis_axioms(const std::vector<Subspace>& family, std::uint64_t q,
                                            int n) {
  FamilyContext ctx = load_family(family, q, n);
  const auto& lat = *ctx.lat;
  int N = lat.count();
  AxiomReport b1{"B1"}, b2{"B2"}, b2p{"B2'"}, b3{"B3"}, b3r{"B3-remark"}, b4{"B4"};

  if (ctx.ids.empty()) record(b1, {});

  for (int x : ctx.ids) {
    for (int y : ctx.ids) {
      if (x != y && lat.leq(x, y)) record(b2, {lat.at(x), lat.at(y)});
    }
  }
  for (std::size_t i = 1; i < ctx.ids.size(); ++i) {
    if (lat.dim(ctx.ids[i]) != lat.dim(ctx.ids[0])) {
      record(b2p, {lat.at(ctx.ids[0]), lat.at(ctx.ids[i])});
    }
  }

  for (int B1 : ctx.ids) {
    for (int B2 : ctx.ids) {
      int inter = lat.meet_id(B1, B2);
      for (int A : lat.subs_of(B1)) {
        if (lat.dim(A) != lat.dim(B1) - 1 || !lat.leq(inter, A)) continue;
        bool found = false;
        for (int y : lat.lines_in(B2)) {
          if (!ctx.member[static_cast<std::size_t>(lat.sum_id(A, y))]) continue;
          found = true;
          if (lat.leq(y, B1)) record(b3r, {lat.at(B1), lat.at(B2), lat.at(A), lat.at(y)});
        }
        if (!found) record(b3, {lat.at(B1), lat.at(B2), lat.at(A)});
      }
    }
  }

  // Maximal intersections of members with each subspace.
  std::vector<std::vector<int>> max_int(static_cast<std::size_t>(N));
  for (int X = 0; X < N; ++X) {
    std::vector<int> meets;
    for (int b : ctx.ids) meets.push_back(lat.meet_id(b, X));
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
    for (int m : meets) {
      bool maximal = true;
      for (int m2 : meets) {
        if (m2 != m && lat.leq(m, m2)) {
          maximal = false;
          break;
        }
      }
      if (maximal) max_int[static_cast<std::size_t>(X)].push_back(m);
    }
  }
  for (int A = 0; A < N; ++A) {
    for (int B = 0; B < N; ++B) {
      int S = lat.sum_id(A, B);
      const auto& maxS = max_int[static_cast<std::size_t>(S)];
      for (int I : max_int[static_cast<std::size_t>(A)]) {
        for (int J : max_int[static_cast<std::size_t>(B)]) {
          int IJ = lat.sum_id(I, J);
          bool ok = false;
          for (int K : maxS) {
            if (lat.leq(K, IJ)) {
              ok = true;
              break;
            }
          }
          if (!ok) record(b4, {lat.at(A), lat.at(B), lat.at(I), lat.at(J)});
        }
      }
    }
  }

  return {b1, b2, b2p, b3, b3r, b4};
}

std::vector<AxiomReport> check_circuit_axioms(const std::vector<Subspace>& family, std::uint64_t q,
                                              int n) {
  FamilyContext ctx = load_family(family, q, n);
  const auto& lat = *ctx.lat;
  AxiomReport c1{"C1"}, c2{"C2"}, c3{"C3"};

  if (!ctx.ids.empty() && ctx.member[static_cast<std::size_t>(lat.zero_id())]) {
    record(c1, {lat.at(lat.zero_id())});
  }

  for (int x : ctx.ids) {
    for (int y : ctx.ids) {
      if (x != y && lat.leq(x, y)) record(c2, {lat.at(x), lat.at(y)});
    }
  }

  for (std::size_t i = 0; i < ctx.ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ctx.ids.size(); ++j) {
      int ca = ctx.ids[i], cb = ctx.ids[j];
      int inter = lat.meet_id(ca, cb);
      int s = lat.sum_id(ca, cb);
      for (int x : lat.lines_in(inter)) {
        bool found = false;
        for (int c3id : ctx.ids) {
          if (lat.leq(c3id, s) && !lat.leq(x, c3id)) {
            found = true;
            break;
          }
        }
        if (!found) record(c3, {lat.at(ca), lat.at(cb), lat.at(x)});
      }
    }
  }

  return {c1, c2, c3};
}

std::vector<AxiomReport> check_closure_axioms(const QMatroid& M) {
  const auto& lat = M.lattice();
  int N = lat.count();
  std::vector<int> cl(static_cast<std::size_t>(N));
  for (int id = 0; id < N; ++id) cl[static_cast<std::size_t>(id)] = M.closure_id(id);

  AxiomReport c1{"cl1"}, c2{"cl2"}, c3{"cl3"}, c4{"cl4"};
  for (int a = 0; a < N; ++a) {
    if (!lat.leq(a, cl[static_cast<std::size_t>(a)])) record(c1, {lat.at(a)});
  }
  for (int b = 0; b < N; ++b) {
    for (int a : lat.subs_of(b)) {
      if (!lat.leq(cl[static_cast<std::size_t>(a)], cl[static_cast<std::size_t>(b)])) {
        record(c2, {lat.at(a), lat.at(b)});
      }
    }
  }
  for (int a = 0; a < N; ++a) {
    if (cl[static_cast<std::size_t>(cl[static_cast<std::size_t>(a)])] != cl[static_cast<std::size_t>(a)]) {
      record(c3, {lat.at(a)});
    }
  }
  for (int a = 0; a < N; ++a) {
    int cla = cl[static_cast<std::size_t>(a)];
    for (int x : lat.line_ids()) {
      int clax = cl[static_cast<std::size_t>(lat.sum_id(a, x))];
      for (int y : lat.line_ids()) {
        if (!lat.leq(y, clax) || lat.leq(y, cla)) continue;
        int clay = cl[static_cast<std::size_t>(lat.sum_id(a, y))];
        if (!lat.leq(x, clay)) record(c4, {lat.at(a), lat.at(x), lat.at(y)});
      }
    }
  }
  return {c1, c2, c3, c4};
}

std::vector<AxiomReport> lemma_suite(const QMatroid& M) {
  const auto& lat = M.lattice();
  int N = lat.count();
  AxiomReport unit{"unit-rank-increase"}, loopsum{"loopsum"}, p1{"p-rank1"}, p2{"p-rank2"};

  for (int a = 0; a < N; ++a) {
    for (int x : lat.line_ids()) {
      if (M.rank_by_id(lat.sum_id(a, x)) > M.rank_by_id(a) + 1) {
        record(unit, {lat.at(a), lat.at(x)});
      }
    }
  }

  std::vector<int> loop_ids;
  for (int x : lat.line_ids()) {
    if (M.rank_by_id(x) == 0) loop_ids.push_back(x);
  }
  for (int x : loop_ids) {
    for (int y : loop_ids) {
      if (M.rank_by_id(lat.sum_id(x, y)) != 0) record(loopsum, {lat.at(x), lat.at(y)});
    }
  }

  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      bool hypothesis = true;
      for (int x : lat.lines_in(b)) {
        if (lat.leq(x, a)) continue;
        if (M.rank_by_id(lat.sum_id(a, x)) != M.rank_by_id(a)) {
          hypothesis = false;
          break;
        }
      }
      if (hypothesis && M.rank_by_id(lat.sum_id(a, b)) != M.rank_by_id(a)) {
        record(p1, {lat.at(a), lat.at(b)});
      }
    }
  }

  for (int a = 0; a < N; ++a) {
    int ra = M.rank_by_id(a);
    std::vector<int> keep;
    for (int x : lat.line_ids()) {
      if (M.rank_by_id(lat.sum_id(a, x)) == ra) keep.push_back(x);
    }
    for (int x : keep) {
      int ax = lat.sum_id(a, x);
      for (int y : keep) {
        if (M.rank_by_id(lat.sum_id(ax, y)) != ra) record(p2, {lat.at(a), lat.at(x), lat.at(y)});
      }
    }
  }

  return {unit, loopsum, p1, p2};
}

std::uint64_t gl_order(std::uint64_t q, int n) {
  unsigned __int128 qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  unsigned __int128 ord = 1;
  unsigned __int128 qi = 1;
  for (int i = 0; i < n; ++i) {
    ord *= (qn - qi);
    qi *= q;
    if (ord > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(ord);
}

Subspace apply_map(const linalg::Mat& P, const Subspace& A) {
  return Subspace::span(A.q(), A.ambient(), linalg::matmul(A.rows(), P, *A.field()));
}

namespace {

std::vector<std::vector<int>> rank_distribution(const QMatroid& M) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(M.n()) + 1);
  for (int id = 0; id < M.lattice().count(); ++id) {
    out[static_cast<std::size_t>(M.lattice().dim(id))].push_back(M.rank_by_id(id));
  }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

std::optional<linalg::Mat> isomorphism(const QMatroid& a, const QMatroid& b,
                                       std::uint64_t gl_cap) {
  if (a.q() != b.q() || a.n() != b.n()) return std::nullopt;
  int n = a.n();
  std::uint64_t q = a.q();
  const FieldSpec& F = *FieldSpec::of_size(q);

  linalg::Mat identity(static_cast<std::size_t>(n), std::vector<FVal>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  if (a.table() == b.table()) return identity;

  if (rank_distribution(a) != rank_distribution(b)) return std::nullopt;

  if (gl_order(q, n) > gl_cap) {
    throw Error(Errc::CapExceeded, "GL(n, q) too large for exhaustive search");
  }

  const auto& lat = a.lattice();
  int N = lat.count();
  std::uint64_t points = 1;
  for (int i = 0; i < n; ++i) points *= q;

  auto decode = [&](std::uint64_t t) {
    std::vector<FVal> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      v[static_cast<std::size_t>(j)] = static_cast<FVal>(t % q);
      t /= q;
    }
    return v;
  };

  auto check = [&](const linalg::Mat& P) {
    for (int id = 1; id < N; ++id) {
      Subspace img = apply_map(P, lat.at(id));
      if (b.rank_of(img) != a.rank_by_id(id)) return false;
    }
    return true;
  };

  linalg::Mat P;
  std::vector<linalg::Mat> partial(static_cast<std::size_t>(n) + 1);
  std::optional<linalg::Mat> found;
  std::function<bool(int)> rec = [&](int depth) {
    if (depth == n) {
      if (check(P)) {
        found = P;
        return true;
      }
      return false;
    }
    for (std::uint64_t t = 1; t < points; ++t) {
      std::vector<FVal> v = decode(t);
      if (linalg::in_row_space(partial[static_cast<std::size_t>(depth)], v, F)) continue;
      P.push_back(v);
      partial[static_cast<std::size_t>(depth) + 1] = partial[static_cast<std::size_t>(depth)];
      partial[static_cast<std::size_t>(depth) + 1].push_back(v);
      linalg::rref_in_place(partial[static_cast<std::size_t>(depth) + 1], F);
      if (rec(depth + 1)) return true;
      P.pop_back();
    }
    return false;
  };
  rec(0);
  return found;
}

}  // namespace qm

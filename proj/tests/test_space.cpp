#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qmatroids/space.hpp"

using qm::Errc;
using qm::Error;
using qm::FVal;
using qm::QuotientMap;
using qm::Subspace;
using qm::SubspaceLattice;

namespace {

// Gaussian binomial [n choose k]_q computed from the product formula — the
// independent oracle for enumeration counts.
long long qbin(int n, int k, long long q) {
  if (k < 0 || k > n) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long long qn = 1, qk = 1;
    for (int j = 0; j < n - i; ++j) qn *= q;
    for (int j = 0; j < k - i; ++j) qk *= q;
    num *= qn - 1;
    den *= qk - 1;
  }
  return num / den;
}

// All vectors of a subspace, by running an odometer over row combinations.
std::set<std::vector<FVal>> all_vectors(const Subspace& s) {
  const auto& F = *s.field();
  std::set<std::vector<FVal>> out;
  std::vector<FVal> coef(s.rows().size(), 0);
  while (true) {
    std::vector<FVal> v(s.ambient(), 0);
    for (std::size_t i = 0; i < coef.size(); ++i)
      for (int j = 0; j < s.ambient(); ++j)
        v[j] = F.add(v[j], F.mul(coef[i], s.rows()[i][j]));
    out.insert(v);
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == F.size()) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return out;
}

Subspace sp(std::uint64_t q, int n, const std::vector<std::vector<FVal>>& rows) {
  return Subspace::span(q, n, rows);
}

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("enumeration counts match the Gaussian binomial") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 2}, {5, 2}}) {
      auto all = qm::enumerate_subspaces(q, n);
      std::map<int, long long> by_dim;
      for (const auto& s : all) ++by_dim[s.dim()];
      long long total = 0;
      for (int k = 0; k <= n; ++k) {
        CHECK(by_dim[k] == qbin(n, k, static_cast<long long>(q)));
        total += qbin(n, k, static_cast<long long>(q));
      }
      CHECK(static_cast<long long>(all.size()) == total);
    }
    CHECK(qm::enumerate_subspaces(2, 4).size() == 67);
    CHECK(qm::enumerate_subspaces(3, 4).size() == 212);
    CHECK(qm::enumerate_subspaces(3, 3, 1).size() == 13);
  }

  TEST_CASE("enumerated representatives are canonical, unique, and sorted") {
    auto all = qm::enumerate_subspaces(3, 3);
    std::set<Subspace> seen;
    for (const auto& s : all) {
      CHECK(qm::linalg::rref(s.rows(), *s.field()) == s.rows());
      CHECK(seen.insert(s).second);
    }
    CHECK(std::is_sorted(all.begin(), all.end()));
  }

  TEST_CASE("span canonicalizes generating sets") {
    auto a = sp(2, 4, {{1, 0, 0, 1}, {0, 1, 1, 0}});
    auto b = sp(2, 4, {{1, 1, 1, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.to_string() == "<1001,0110>");
    CHECK(Subspace::zero(2, 4).to_string() == "<0>");
    CHECK(sp(13, 2, {{1, 12}}).to_string() == "<1.12>");
  }

  TEST_CASE("span validates entries and lengths") {
    try {
      (void)sp(2, 3, {{0, 1, 2}});
      FAIL("expected FieldMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FieldMismatch);
    }
    try {
      (void)sp(2, 3, {{0, 1}});
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DimensionMismatch);
    }
  }

  TEST_CASE("intersection worked example") {
    auto a = sp(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
    auto b = sp(2, 4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
    CHECK(intersect(a, b) == sp(2, 4, {{1, 1, 1, 0}}));
    CHECK(sum(a, b) == sp(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  }

  TEST_CASE("lattice identities hold exhaustively over F_2^3 and F_3^2") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}}) {
      auto all = qm::enumerate_subspaces(q, n);
      for (const auto& a : all) {
        CHECK(a.perp().perp() == a);
        CHECK(a.perp().dim() == n - a.dim());
        for (const auto& b : all) {
          auto s = sum(a, b), m = intersect(a, b);
          CHECK(s.dim() + m.dim() == a.dim() + b.dim());
          CHECK(s.contains(a));
          CHECK(a.contains(m));
          CHECK(intersect(a, b).perp() == sum(a.perp(), b.perp()));
          CHECK(sum(a, b).perp() == intersect(a.perp(), b.perp()));
          CHECK((a.contains(b) == (sum(a, b) == a)));
        }
      }
    }
  }

  TEST_CASE("containment agrees with vector-level membership") {
    auto all = qm::enumerate_subspaces(3, 3);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto va = all_vectors(a), vb = all_vectors(b);
        bool inc = std::includes(va.begin(), va.end(), vb.begin(), vb.end());
        CHECK(a.contains(b) == inc);
      }
    CHECK(sp(2, 4, {{1, 0, 0, 1}}).contains_vector({1, 0, 0, 1}));
    CHECK_FALSE(sp(2, 4, {{1, 0, 0, 1}}).contains_vector({1, 0, 0, 0}));
  }

  TEST_CASE("lines enumerate the 1-dimensional subspaces") {
    CHECK(Subspace::full(2, 3).lines().size() == 7);
    CHECK(Subspace::full(3, 2).lines().size() == 4);
    auto plane = sp(2, 4, {{1, 0, 0, 1}, {0, 1, 1, 0}});
    auto lines = plane.lines();
    CHECK(lines.size() == 3);
    for (const auto& l : lines) {
      CHECK(l.dim() == 1);
      CHECK(plane.contains(l));
    }
    CHECK(Subspace::zero(2, 3).lines().empty());
  }

  TEST_CASE("ambients do not mix") {
    try {
      (void)sp(2, 3, {{1, 0, 0}}).contains(sp(2, 4, {{1, 0, 0, 0}}));
      FAIL("expected AmbientMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::AmbientMismatch);
    }
  }

  TEST_CASE("quotient by a line round-trips") {
    for (auto evec : std::vector<std::vector<FVal>>{{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 1, 0, 1}}) {
      auto e = sp(2, 4, {evec});
      QuotientMap pi(e);
      CHECK(pi.line() == e);
      // every subspace of K^3 pulls back to a space containing e, one dim up
      int above = 0;
      for (const auto& A : qm::enumerate_subspaces(2, 3)) {
        auto B = pi.pull(A);
        CHECK(B.dim() == A.dim() + 1);
        CHECK(B.contains(e));
        CHECK(pi.push(B) == A);
      }
      // and every subspace above e pushes down and pulls back unchanged
      for (const auto& B : qm::enumerate_subspaces(2, 4)) {
        if (!B.contains(e)) continue;
        ++above;
        CHECK(pi.pull(pi.push(B)) == B);
      }
      CHECK(above == 16);
    }
  }

  TEST_CASE("quotient rejects spaces not containing the line") {
    auto e = sp(2, 4, {{0, 0, 0, 1}});
    QuotientMap pi(e);
    try {
      (void)pi.push(sp(2, 4, {{1, 0, 0, 0}}));
      FAIL("expected KernelNotContained");
    } catch (const Error& e2) {
      CHECK(e2.code() == Errc::KernelNotContained);
    }
    CHECK_THROWS_AS(QuotientMap(sp(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})), Error);
  }

  TEST_CASE("complement map drops one dimension against e-perp") {
    auto e = sp(2, 4, {{1, 0, 0, 0}});
    auto A = sp(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(qm::phi_complement(e, A) == sp(2, 4, {{0, 1, 0, 0}}));
    // a self-orthogonal line degenerates on spaces inside e-perp
    auto f = sp(2, 4, {{1, 1, 0, 0}});
    try {
      (void)qm::phi_complement(f, f);
      FAIL("expected SelfOrthogonalDegenerate");
    } catch (const Error& e2) {
      CHECK(e2.code() == Errc::SelfOrthogonalDegenerate);
    }
  }

  TEST_CASE("lattice ids, meets, joins, and perps agree with direct operations") {
    auto lat = SubspaceLattice::get(2, 4);
    REQUIRE(lat->count() == 67);
    CHECK(SubspaceLattice::get(2, 4).get() == lat.get());
    CHECK(lat->dim(lat->zero_id()) == 0);
    CHECK(lat->dim(lat->full_id()) == 4);
    CHECK(lat->of_dim(2).size() == 35);
    CHECK(lat->line_ids().size() == 15);
    for (int id = 0; id < lat->count(); ++id) {
      CHECK(lat->id_of(lat->at(id)) == static_cast<std::size_t>(id));
      CHECK(lat->at(lat->perp_id(id)) == lat->at(id).perp());
    }
    for (int a = 0; a < lat->count(); ++a)
      for (int b = 0; b < lat->count(); ++b) {
        CHECK(lat->at(lat->sum_id(a, b)) == sum(lat->at(a), lat->at(b)));
        CHECK(lat->at(lat->meet_id(a, b)) == intersect(lat->at(a), lat->at(b)));
        CHECK(lat->leq(a, b) == lat->at(b).contains(lat->at(a)));
      }
  }

  TEST_CASE("lattice pair tables count substructures") {
    auto lat = SubspaceLattice::get(2, 4);
    CHECK(lat->subs_of(lat->full_id()).size() == 67);
    CHECK(lat->lines_in(lat->full_id()).size() == 15);
    CHECK(lat->subs_of(lat->zero_id()).size() == 1);
    auto plane = lat->id_of(sp(2, 4, {{1, 0, 0, 1}, {0, 1, 1, 0}}));
    CHECK(lat->subs_of(plane).size() == 5);  // 0, three lines, itself
    CHECK(lat->lines_in(plane).size() == 3);
  }

  TEST_CASE("caps bound enumeration and pair tables") {
    try {
      (void)qm::enumerate_subspaces(2, 20);
      FAIL("expected CapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CapExceeded);
    }
    // F_8^4 has 5917 subspaces: enumerable, but beyond the pair-table limit
    auto big = SubspaceLattice::get(8, 4);
    CHECK(big->count() == 5917);
    auto l0 = big->line_ids().front();
    CHECK(big->leq(l0, big->full_id()));
    CHECK(big->dim(big->sum_id(l0, big->line_ids().back())) == 2);
    try {
      (void)big->subs_of(big->full_id());
      FAIL("expected CapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CapExceeded);
    }
  }

  TEST_CASE("degenerate ambients work") {
    CHECK(qm::enumerate_subspaces(2, 0).size() == 1);
    CHECK(Subspace::zero(2, 0) == Subspace::full(2, 0));
    auto lat = SubspaceLattice::get(3, 0);
    CHECK(lat->count() == 1);
    CHECK(lat->zero_id() == lat->full_id());
  }
}

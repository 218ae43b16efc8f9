#include <doctest.h>

#include <algorithm>

#include "qmatroids/constructions.hpp"

using qm::AxiomViolationError;
using qm::Errc;
using qm::Error;
using qm::FVal;
using qm::QMatroid;
using qm::Subspace;

namespace {

Subspace sp(std::uint64_t q, int n, const std::vector<std::vector<FVal>>& rows) {
  return Subspace::span(q, n, rows);
}

std::vector<Subspace> example_family() {
  std::vector<Subspace> fam;
  auto loop = sp(2, 4, {{0, 0, 0, 1}});
  for (const auto& s : qm::enumerate_subspaces(2, 4))
    if (s.dim() <= 2 && !s.contains(loop)) fam.push_back(s);
  return fam;
}

QMatroid example_matroid() { return qm::from_independents(example_family(), 2, 4); }

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("uniform rejects out-of-range parameters") {
    CHECK_THROWS_AS((void)qm::uniform(5, 4, 2), Error);
    CHECK_THROWS_AS((void)qm::uniform(-1, 4, 2), Error);
    try {
      (void)qm::uniform(3, 2, 2);
      FAIL("expected BadParams");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadParams);
    }
    CHECK(qm::uniform(0, 0, 2).rank() == 0);
    CHECK(qm::uniform(0, 2, 2).loops().size() == 3);  // every line of F_2^2
    CHECK(qm::uniform(2, 2, 2).isthmuses().size() == 3);
  }

  TEST_CASE("family constructors reproduce their source families") {
    auto fam = example_family();
    QMatroid M = qm::from_independents(fam, 2, 4);
    auto indep = M.independents();
    CHECK(std::is_sorted(indep.begin(), indep.end()));
    std::sort(fam.begin(), fam.end());
    CHECK(indep == fam);

    QMatroid M2 = qm::from_bases(M.bases(), 2, 4);
    CHECK(M2 == M);

    QMatroid U = qm::uniform(2, 4, 2);
    CHECK(qm::from_independents(U.independents(), 2, 4) == U);
    CHECK(qm::from_bases(U.bases(), 2, 4) == U);
  }

  TEST_CASE("invalid families raise with the failing reports attached") {
    try {
      (void)qm::from_independents({}, 2, 3);
      FAIL("expected AxiomViolationError");
    } catch (const AxiomViolationError& e) {
      CHECK(e.code() == Errc::AxiomViolation);
      bool i1_failed = false;
      for (const auto& r : e.reports) i1_failed = i1_failed || (r.axiom == "I1" && !r.holds);
      CHECK(i1_failed);
    }
    std::vector<Subspace> nested = {sp(2, 3, {{1, 0, 0}}),
                                    sp(2, 3, {{1, 0, 0}, {0, 1, 0}})};
    try {
      (void)qm::from_bases(nested, 2, 3);
      FAIL("expected AxiomViolationError");
    } catch (const AxiomViolationError& e) {
      bool b2_failed = false;
      for (const auto& r : e.reports) b2_failed = b2_failed || (r.axiom == "B2" && !r.holds);
      CHECK(b2_failed);
    }
  }

  TEST_CASE("unchecked rank induction uses the largest member inside") {
    QMatroid R = qm::rank_from_family_unchecked({sp(2, 3, {{1, 0, 0}})}, 2, 3);
    CHECK(R.rank_of(Subspace::zero(2, 3)) == 0);
    CHECK(R.rank_of(sp(2, 3, {{1, 0, 0}})) == 1);
    CHECK(R.rank_of(sp(2, 3, {{0, 1, 0}})) == 0);
    CHECK(R.rank() == 1);
  }

  TEST_CASE("dual of uniform is uniform") {
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(qm::dual(qm::uniform(k, n, 2)) == qm::uniform(n - k, n, 2));
    CHECK(qm::dual(qm::uniform(1, 3, 3)) == qm::uniform(2, 3, 3));
  }

  TEST_CASE("dual rank values follow the defining formula") {
    QMatroid M = example_matroid();
    QMatroid Ms = qm::dual(M);
    const auto& lat = M.lattice();
    for (int id = 0; id < lat.count(); ++id)
      CHECK(Ms.rank_by_id(id) ==
            lat.dim(id) - M.rank() + M.rank_by_id(static_cast<int>(lat.perp_id(id))));
    CHECK(qm::dual(Ms) == M);
    CHECK(Ms.rank() == M.n() - M.rank());
    // the loop of M turns into an isthmus of M*
    CHECK(Ms.isthmuses() == std::vector<Subspace>{sp(2, 4, {{0, 0, 0, 1}})});
    CHECK(Ms.loops().empty());
  }

  TEST_CASE("restriction to hyperplanes of a uniform matroid is uniform") {
    for (std::uint64_t q : {2ull, 3ull})
      for (int k = 0; k <= 2; ++k) {
        QMatroid U = qm::uniform(k, 3, q);
        for (const auto& H : qm::enumerate_subspaces(q, 3, 2))
          CHECK(qm::restrict_to(U, H) == qm::uniform(k, 2, q));
      }
  }

  TEST_CASE("restriction demands a hyperplane containing a basis") {
    QMatroid U = qm::uniform(2, 4, 2);
    try {
      (void)qm::restrict_to(U, sp(2, 4, {{1, 0, 0, 0}}));
      FAIL("expected NotHyperplane");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotHyperplane);
    }
    QMatroid full = qm::uniform(3, 3, 2);
    try {
      (void)qm::restrict_to(full, sp(2, 3, {{1, 0, 0}, {0, 1, 0}}));
      FAIL("expected NoBasisContained");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoBasisContained);
    }
  }

  TEST_CASE("restriction of the running example to the loop-perp is free") {
    QMatroid M = example_matroid();
    auto H = sp(2, 4, {{0, 0, 0, 1}}).perp();
    CHECK(qm::restrict_to(M, H) == qm::uniform(2, 3, 2));
  }

  TEST_CASE("contraction of a uniform matroid is uniform") {
    for (std::uint64_t q : {2ull, 3ull})
      for (int k = 1; k <= 3; ++k) {
        QMatroid U = qm::uniform(k, 3, q);
        for (const auto& e : qm::enumerate_subspaces(q, 3, 1))
          CHECK(qm::contract(U, e) == qm::uniform(k - 1, 2, q));
      }
  }

  TEST_CASE("contraction rejects loops") {
    QMatroid M = example_matroid();
    try {
      (void)qm::contract(M, sp(2, 4, {{0, 0, 0, 1}}));
      FAIL("expected LoopContraction");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LoopContraction);
    }
    CHECK_THROWS_AS((void)qm::contract(qm::uniform(0, 3, 2), sp(2, 3, {{1, 0, 0}})), Error);
    CHECK_THROWS_AS((void)qm::contract(M, sp(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})), Error);
  }

  TEST_CASE("contraction of the running example stays a q-matroid") {
    QMatroid M = example_matroid();
    QMatroid C = qm::contract(M, sp(2, 4, {{1, 0, 0, 0}}));
    CHECK(C.n() == 3);
    CHECK(C.rank() == 1);
    for (const auto& r : qm::check_rank_axioms(C)) CHECK(r.holds);
  }

  TEST_CASE("truncation lowers the rank by one everywhere") {
    for (int k = 1; k <= 4; ++k)
      CHECK(qm::truncate(qm::uniform(k, 4, 2)) == qm::uniform(k - 1, 4, 2));
    QMatroid M = example_matroid();
    QMatroid T = qm::truncate(M);
    const auto& lat = M.lattice();
    for (int id = 0; id < lat.count(); ++id)
      CHECK(T.rank_by_id(id) == std::min(M.rank_by_id(id), M.rank() - 1));
    try {
      (void)qm::truncate(qm::uniform(0, 3, 2));
      FAIL("expected RankZero");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::RankZero);
    }
  }

  TEST_CASE("restriction/contraction duality holds with replayable witnesses") {
    QMatroid M = example_matroid();
    auto e = sp(2, 4, {{1, 0, 0, 0}});
    auto rep = qm::check_restriction_contraction_duality(M, e);
    CHECK(rep.holds);
    REQUIRE(rep.dual_restrict_witness.has_value());
    REQUIRE(rep.contract_dual_witness.has_value());

    QMatroid lhs1 = qm::contract(qm::dual(M), e);
    QMatroid rhs1 = qm::dual(qm::restrict_to(M, e.perp()));
    const auto& lat = lhs1.lattice();
    for (int id = 0; id < lat.count(); ++id)
      CHECK(rhs1.rank_of(qm::apply_map(*rep.dual_restrict_witness, lat.at(id))) ==
            lhs1.rank_by_id(id));

    QMatroid lhs2 = qm::dual(qm::contract(M, e));
    QMatroid rhs2 = qm::restrict_to(qm::dual(M), e.perp());
    for (int id = 0; id < lat.count(); ++id)
      CHECK(rhs2.rank_of(qm::apply_map(*rep.contract_dual_witness, lat.at(id))) ==
            lhs2.rank_by_id(id));
  }

  TEST_CASE("duality check rejects loops and isthmuses") {
    QMatroid M = example_matroid();
    try {
      (void)qm::check_restriction_contraction_duality(M, sp(2, 4, {{0, 0, 0, 1}}));
      FAIL("expected BadParams for a loop");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadParams);
    }
    QMatroid Ms = qm::dual(M);  // has <0001> as an isthmus
    try {
      (void)qm::check_restriction_contraction_duality(Ms, sp(2, 4, {{0, 0, 0, 1}}));
      FAIL("expected BadParams for an isthmus");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadParams);
    }
  }

  TEST_CASE("the full duality suite passes on healthy fixtures") {
    for (const auto& M : {qm::uniform(2, 4, 2), qm::uniform(0, 2, 2), qm::uniform(2, 2, 2),
                          qm::uniform(1, 2, 3), example_matroid()}) {
      auto reps = qm::duality_suite(M);
      for (const auto& r : reps) {
        CAPTURE(r.axiom);
        CHECK(r.holds);
      }
    }
  }
}

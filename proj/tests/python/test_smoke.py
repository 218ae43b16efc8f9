import pytest

import qmatroids as qmx


def test_uniform_profile():
    M = qmx.uniform(2, 4, 2)
    assert M.rank == 2
    assert M.n == 4
    assert M.q == 2
    assert len(M.independents()) == 51
    assert len(M.bases()) == 35
    assert len(M.circuits()) == 15
    assert M.rank_polynomial() == "X^2 + 15*X + 35 + 15*Y + Y^2"


def test_axiom_suites_pass():
    M = qmx.uniform(1, 3, 2)
    for report in qmx.check_rank_axioms(M) + qmx.lemma_suite(M) + qmx.duality_suite(M):
        assert report["holds"], report


def test_counterexample_family_fails_i4():
    top = qmx.Subspace.span(2, 4, [[1, 0, 0, 1], [0, 1, 1, 0]])
    family = [s for s in qmx.enumerate_subspaces(2, 4) if top.contains(s)]
    by_axiom = {r["axiom"]: r for r in qmx.check_independence_axioms(family, 2, 4)}
    assert by_axiom["I1"]["holds"]
    assert by_axiom["I2"]["holds"]
    assert by_axiom["I3"]["holds"]
    assert not by_axiom["I4"]["holds"]
    with pytest.raises(qmx.AxiomViolationError):
        qmx.from_independents(family, 2, 4)


def test_dual_and_minors():
    M = qmx.uniform(2, 4, 2)
    assert qmx.dual(qmx.dual(M)) == M
    e = qmx.Subspace.span(2, 4, [[0, 0, 0, 1]])
    assert qmx.restrict_to(M, e.perp()) == qmx.uniform(2, 3, 2)
    assert qmx.contract(M, e) == qmx.uniform(1, 3, 2)
    assert qmx.truncate(M) == qmx.uniform(1, 4, 2)


def test_gabidulin_is_mrd():
    C = qmx.gabidulin(2, 4, 4, 2)
    assert C.min_rank_distance() == 3
    assert C.dual().min_rank_distance() == 3
    assert qmx.matroid_of_code(C) == qmx.uniform(2, 4, 2)
    for report in qmx.check_code_support_lemmas(C):
        assert report["holds"], report


def test_json_round_trip():
    M = qmx.uniform(1, 2, 3)
    assert qmx.matroid_from_json(M.to_json()) == M
    C = qmx.gabidulin(2, 3, 3, 1)
    assert qmx.code_from_json(C.to_json()).generator() == C.generator()


def test_errors_surface_as_exceptions():
    with pytest.raises(qmx.Error):
        qmx.uniform(3, 2, 2)
    with pytest.raises(qmx.Error):
        qmx.gabidulin(6, 2, 2, 1)

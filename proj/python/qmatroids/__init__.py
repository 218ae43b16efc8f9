"""q-matroids over GF(q): construction, axiom verification, and rank-metric codes."""

from ._core import (
    AxiomViolationError,
    Error,
    QMatroid,
    RankMetricCode,
    Subspace,
    check_basis_axioms,
    check_circuit_axioms,
    check_closure_axioms,
    check_code_support_lemmas,
    check_independence_axioms,
    check_rank_axioms,
    code_from_json,
    contract,
    dual,
    duality_suite,
    enumerate_subspaces,
    from_bases,
    from_independents,
    gabidulin,
    intersect,
    isomorphism,
    lemma_suite,
    matroid_from_json,
    matroid_of_code,
    restrict_to,
    sum,
    truncate,
    uniform,
)

__all__ = [
    "AxiomViolationError",
    "Error",
    "QMatroid",
    "RankMetricCode",
    "Subspace",
    "check_basis_axioms",
    "check_circuit_axioms",
    "check_closure_axioms",
    "check_code_support_lemmas",
    "check_independence_axioms",
    "check_rank_axioms",
    "code_from_json",
    "contract",
    "dual",
    "duality_suite",
    "enumerate_subspaces",
    "from_bases",
    "from_independents",
    "gabidulin",
    "intersect",
    "isomorphism",
    "lemma_suite",
    "matroid_from_json",
    "matroid_of_code",
    "restrict_to",
    "sum",
    "truncate",
    "uniform",
]

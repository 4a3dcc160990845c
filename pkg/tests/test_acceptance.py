"""Acceptance suite: one test per replication criterion, all exact.

Each test prints a single PASS/FAIL line with its runtime; the whole module is
also runnable through `grasym replicate --pretty`.  Expected values are exact
(zero tolerance); the hunt counts are regression values frozen at the first
verified run.
"""

import time

from grasym.replicate import CRITERIA

_REGISTRY = dict(CRITERIA)


def _run(name):
    fn = _REGISTRY[name]
    start = time.time()
    passed, details = fn()
    elapsed = time.time() - start
    print(f"{'PASS' if passed else 'FAIL'}  {name}  ({elapsed:.2f}s)  {details}")
    assert passed, f"{name}: {details}"


def test_criterion_division_commutator_dimension():
    _run("division-commutator-dimension")


def test_criterion_matrix_commutator_dimension():
    _run("matrix-commutator-dimension")


def test_criterion_scalar_extension_commutators():
    _run("scalar-extension-commutators")


def test_criterion_char0_division_graded_symmetric():
    _run("char0-division-graded-symmetric")


def test_criterion_modular_group_algebra_symmetric():
    _run("modular-group-algebra-symmetric")


def test_criterion_cyclic_skew_group_algebra():
    _run("cyclic-skew-group-algebra")


def test_criterion_good_matrix_trace_certificates():
    _run("good-matrix-trace-certificates")


def test_criterion_semisimple_direct_products():
    _run("semisimple-direct-products")


def test_criterion_sweedler_center_not_frobenius():
    _run("sweedler-center-not-frobenius")


def test_criterion_division_trivial_extension_center():
    _run("division-trivial-extension-center")


def test_criterion_crossed_product_center_symmetric():
    _run("crossed-product-center-symmetric")


def test_criterion_averaging_and_lifting():
    _run("averaging-and-lifting")


def test_criterion_decision_matches_enumeration():
    _run("decision-matches-enumeration")


def test_criterion_hunt_char2_regression():
    _run("hunt-char2-regression")


def test_every_criterion_is_covered():
    tested = {name for name in _REGISTRY}
    assert len(tested) == 14

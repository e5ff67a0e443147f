"""Smoke tests for the compiled rank2ca module."""

import pytest

rank2ca = pytest.importorskip("rank2ca")


def test_parse_canonical():
    assert rank2ca.parse_canonical("(x2+1)/x1") == "(x2 + 1)/x1"
    assert rank2ca.parse_canonical("x1 - x1") == "0"


def test_clusters_period():
    out = rank2ca.clusters(1, 1)
    assert out["period"] == 10
    assert len(out["clusters"]) == 10
    assert out["clusters"][0] == ("x1", "x2")
    assert rank2ca.clusters(2, 2, max_steps=30)["period"] is None


def test_walk_and_maction_agree_with_theory():
    assert rank2ca.walk(1, 1, "1")[-1] == ("(x2 + 1)/x1", "x2")
    assert rank2ca.maction(1, 1, "12") == (
        "(x1 + x2 + 1)/(x1*x2)",
        "(x1 + 1)/x2",
    )
    assert rank2ca.mutation_maction_equivalent(1, 2, 4)


def test_invariants():
    t = "(x1^2 + x2^2 + 1)/(x1*x2)"
    assert rank2ca.verify_invariant(t, 2, 2)
    assert not rank2ca.verify_invariant("x1", 1, 1)
    built = rank2ca.construct_invariant(1, 1, "X1", "power_sum", 1, "1/2")
    assert built == "(x1^2*x2 + x1^2 + x1*x2^2 + 2*x1 + x2^2 + 2*x2 + 1)/(x1*x2)"
    basis = rank2ca.search_invariants(2, 2, 1, 1)
    assert len(basis) == 1 and basis[0]["expr"] == t
    assert rank2ca.search_invariants(2, 3, 2, 2) == []


def test_dvectors():
    table = rank2ca.dvectors(2, 2, 4)
    assert table[4] == ((3, 2), (4, 3))
    closed = rank2ca.dvectors_closed_form(2, 2, 2)
    assert closed["even"] == ((3, 2), (4, 3))
    assert rank2ca.classify(2, 3) == "non_affine"


def test_diophantine():
    out = rank2ca.dio_solve(preset="g2", bound=100)
    assert len(out["solutions"]) == 8
    assert out["complete_within_bound"] is True
    assert rank2ca.dio_certify(preset="a2", bound=200)
    custom = rank2ca.dio_solve(
        expr="(x1^2 + x2^2 + 1)/(x1*x2)", m=2, n=2, a=1, b=1, bound=13
    )
    pairs = {tuple(s["pair"]) for s in custom["solutions"]}
    assert pairs == {(1, 1), (1, 2), (2, 1), (2, 5), (5, 2), (5, 13), (13, 5)}


def test_imr():
    assert rank2ca.check_imr([[0, 2, -2], [-2, 0, 2], [2, -2, 0]], 8)
    assert not rank2ca.check_imr([[0, 1, 0], [-1, 0, 1], [0, -1, 0]], 4)


def test_errors_surface_as_domain_errors():
    with pytest.raises(rank2ca.DomainError):
        rank2ca.parse_canonical("x1 +* x2")
    with pytest.raises(rank2ca.DomainError):
        rank2ca.verify_invariant("3/2", 1, 1)


def test_decomposition():
    assert rank2ca.decompose_a1a1("x1 + 2/x1 + x2 + 2/x2") == "X1 + X2"
    assert rank2ca.decompose_half("x1^2 + 4/x1^2") == "X^2 - 4"

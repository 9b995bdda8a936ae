import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from loorkit import (
    ExclusivityGraph,
    OrthRep,
    RepFormatError,
    bbc21,
    certify_operator,
    gram_from_rep,
    kcbs,
    lovasz_theta,
    parse_rep,
    rep_from_gram,
    rep_value,
    serialize_rep,
    verify_rep,
    weight_objective,
)
from util import random_complex_rep, random_unitary

SQRT5 = float(np.sqrt(5.0))


def feasibility(x, g):
    """(trace deviation, worst edge entry, most negative eigenvalue)."""
    tr = abs(float(np.trace(x).real) - 1.0)
    edge = max((abs(x[i, j]) for i, j in g.edges), default=0.0)
    lam = float(np.linalg.eigvalsh(x)[0])
    return tr, edge, lam


def test_rep_value_kcbs():
    inst = kcbs()
    assert rep_value(inst.real_rep, inst.graph) == pytest.approx(SQRT5, abs=1e-12)
    overlaps = np.abs(inst.real_rep.vectors @ inst.real_rep.handle) ** 2
    assert_allclose(overlaps, np.full(5, 1.0 / np.sqrt(5.0)), atol=1e-12)


def test_rep_value_bbc_complex():
    inst = bbc21()
    assert rep_value(inst.complex_rep, inst.graph) == pytest.approx(29.0, abs=1e-12)


def test_rep_value_orthogonal_handle_is_zero():
    g = ExclusivityGraph(n=2, weights=np.ones(2), edges=())
    rep = OrthRep("real", 3, np.array([0.0, 0.0, 1.0]),
                  np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]))
    assert rep_value(rep, g) == 0.0


def test_rep_value_rejects_misaligned_sizes():
    inst = kcbs()
    g = ExclusivityGraph(n=4, weights=np.ones(4), edges=())
    with pytest.raises(ValueError, match="vertices"):
        rep_value(inst.real_rep, g)


def test_verify_bbc_real_reference():
    inst = bbc21()
    report = verify_rep(inst.real_rep, inst.graph, tol=1e-10, target=29.0)
    assert report.passed
    assert report.max_edge_residual <= 1e-12
    assert report.value == pytest.approx(29.0, abs=1e-12)


def test_verify_kcbs_reference():
    inst = kcbs()
    assert verify_rep(inst.real_rep, inst.graph, tol=1e-10, target=SQRT5).passed


def test_verify_sign_flip_still_passes():
    inst = kcbs()
    vectors = inst.real_rep.vectors.copy()
    vectors[2] = -vectors[2]
    flipped = OrthRep("real", 3, inst.real_rep.handle, vectors)
    report = verify_rep(flipped, inst.graph, tol=1e-10, target=SQRT5)
    assert report.passed


def test_verify_reports_failures_without_raising():
    inst = kcbs()
    report = verify_rep(inst.real_rep, inst.graph, tol=1e-10, target=3.0)
    assert not report.passed
    assert report.value == pytest.approx(SQRT5, abs=1e-12)


def test_report_value_consistent_with_overlaps():
    inst = bbc21()
    report = verify_rep(inst.real_rep, inst.graph)
    recomputed = float(np.dot(inst.graph.weights, report.per_vertex_overlap))
    assert abs(report.value - recomputed) <= 1e-12


def test_gram_from_rep_kcbs_attains_sqrt5():
    inst = kcbs()
    x = gram_from_rep(inst.real_rep, inst.graph)
    w = weight_objective(inst.graph)
    tr, edge, lam = feasibility(x, inst.graph)
    assert float(np.sum(w * x)) == pytest.approx(SQRT5, abs=1e-10)
    assert tr <= 1e-10 and edge <= 1e-10 and lam >= -1e-10


def test_gram_from_rep_single_vertex():
    g = ExclusivityGraph(n=1, weights=np.ones(1), edges=())
    rep = OrthRep("real", 2, np.array([1.0, 0.0]), np.array([[1.0, 0.0]]))
    assert_allclose(gram_from_rep(rep, g), [[1.0]], atol=1e-14)


def test_gram_from_rep_bbc_complex_attains_29():
    inst = bbc21()
    x = gram_from_rep(inst.complex_rep, inst.graph)
    w = weight_objective(inst.graph)
    tr, edge, lam = feasibility(x, inst.graph)
    assert float(np.sum(w * x).real) == pytest.approx(29.0, abs=1e-9)
    assert tr <= 1e-10 and edge <= 1e-10 and lam >= -1e-10


def test_gram_from_rep_rejects_degenerate():
    g = ExclusivityGraph(n=1, weights=np.ones(1), edges=())
    rep = OrthRep("real", 2, np.array([0.0, 1.0]), np.array([[1.0, 0.0]]))
    with pytest.raises(ValueError, match="degenerate"):
        gram_from_rep(rep, g)


def test_rep_from_gram_pentagon_optimum():
    inst = kcbs()
    sol = lovasz_theta(inst.graph)
    # independent rank oracle: three eigenvalues of the optimum stand
    # clear of the 1e-7-relative cutoff, the rest sit at solver noise
    eigenvalues = np.linalg.eigvalsh(sol.X)
    assert int(np.sum(eigenvalues > 1e-7 * eigenvalues[-1])) == 3
    rep = rep_from_gram(sol.X, inst.graph)
    assert rep.dim == 3
    assert abs(rep_value(rep, inst.graph) - SQRT5) <= 1e-5
    assert verify_rep(rep, inst.graph, tol=1e-6).passed


def test_rep_from_gram_bbc_optimum():
    inst = bbc21()
    sol = lovasz_theta(inst.graph)
    rep = rep_from_gram(sol.X, inst.graph)
    assert abs(rep_value(rep, inst.graph) - 29.0) <= 1e-3
    assert verify_rep(rep, inst.graph, tol=1e-6).passed


def test_rep_from_gram_identity_over_n():
    g = ExclusivityGraph(n=3, weights=np.ones(3), edges=())
    rep = rep_from_gram(np.eye(3) / 3.0, g)
    assert rep.dim == 3
    overlaps = np.abs(rep.vectors @ rep.handle) ** 2
    assert_allclose(overlaps, np.full(3, 1.0 / 3.0), atol=1e-12)
    assert rep_value(rep, g) == pytest.approx(1.0, abs=1e-12)


def test_rep_from_gram_degenerate_vertex_gets_fresh_axis():
    g = ExclusivityGraph(n=2, weights=np.ones(2), edges=())
    rep = rep_from_gram(np.diag([1.0, 0.0]), g)
    assert rep.dim == 2
    assert_allclose(np.linalg.norm(rep.vectors, axis=1), [1.0, 1.0], atol=1e-12)
    assert abs(rep.vectors[1] @ rep.handle) <= 1e-12
    assert abs(rep.vectors[0] @ rep.vectors[1]) <= 1e-12


def test_rep_from_gram_rejects_infeasible():
    g = kcbs().graph
    with pytest.raises(ValueError, match="not feasible"):
        rep_from_gram(np.eye(5), g)  # trace 5


def test_rep_from_gram_no_handle_error():
    g = ExclusivityGraph(n=2, weights=np.ones(2), edges=())
    x = np.array([[0.5, -0.5], [-0.5, 0.5]])
    with pytest.raises(ValueError, match="handle"):
        rep_from_gram(x, g)


def test_certify_operator_bbc_real_spectrum():
    inst = bbc21()
    operator, spectrum, sic = certify_operator(inst.real_rep, inst.graph)
    off_diag = operator - np.diag(np.diag(operator))
    assert np.max(np.abs(off_diag)) <= 1e-12
    assert_allclose(spectrum, [39 / 4, 12.0, 17.0, 77 / 4, 29.0], atol=1e-10)
    assert not sic


def test_certify_operator_bbc_complex_is_flat():
    inst = bbc21()
    operator, spectrum, sic = certify_operator(inst.complex_rep, inst.graph)
    assert np.max(np.abs(operator - 29.0 * np.eye(3))) <= 1e-12
    assert sic
    assert_allclose(spectrum, [29.0, 29.0, 29.0], atol=1e-12)


def test_certify_operator_single_vertex():
    g = ExclusivityGraph(n=1, weights=np.ones(1), edges=())
    rep = OrthRep("real", 3, np.array([1.0, 0.0, 0.0]), np.array([[0.0, 1.0, 0.0]]))
    operator, spectrum, sic = certify_operator(rep, g)
    assert_allclose(spectrum, [0.0, 0.0, 1.0], atol=1e-14)
    assert not sic

    g1 = ExclusivityGraph(n=1, weights=np.ones(1), edges=())
    rep1 = OrthRep("real", 1, np.array([1.0]), np.array([[1.0]]))
    assert certify_operator(rep1, g1)[2]


def test_rep_value_unitary_invariance_200_trials():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(200):
        d = int(rng.integers(2, 6))
        n = int(rng.integers(1, 7))
        rep, g = random_complex_rep(rng, d, n)
        base = rep_value(rep, g)
        u = random_unitary(rng, d)
        rotated = OrthRep("complex", d, u @ rep.handle, rep.vectors @ u.T)
        worst = max(worst, abs(rep_value(rotated, g) - base))
    assert worst <= 1e-10


def test_operator_top_eigenvalue_dominates_rep_value():
    rng = np.random.default_rng(12)
    for _ in range(30):
        rep, g = random_complex_rep(rng, int(rng.integers(2, 5)), int(rng.integers(1, 8)))
        _, spectrum, _ = certify_operator(rep, g)
        assert spectrum[-1] >= rep_value(rep, g) - 1e-10
    # at the stored optima the handle is a top eigenvector, so equality holds
    for inst in (kcbs(), bbc21()):
        rep = inst.real_rep
        _, spectrum, _ = certify_operator(rep, inst.graph)
        assert spectrum[-1] == pytest.approx(rep_value(rep, inst.graph), abs=1e-10)


def test_rep_json_roundtrip_real_and_complex():
    for rep in (kcbs().real_rep, bbc21().complex_rep):
        back = parse_rep(serialize_rep(rep))
        assert back.field == rep.field and back.dim == rep.dim
        assert np.array_equal(back.handle, rep.handle)
        assert np.array_equal(back.vectors, rep.vectors)


def test_rep_json_complex_scalars_are_pairs():
    doc = json.loads(serialize_rep(bbc21().complex_rep))
    assert doc["handle"][0] == [1.0, 0.0]
    assert isinstance(doc["vectors"][3][2], list)


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ('{"field": "real", "dim": 1, "handle": [1.0]}', "vectors"),
        ('{"field": "odd", "dim": 1, "handle": [1.0], "vectors": []}', "field"),
        ('{"field": "real", "dim": 2, "handle": [1.0], "vectors": []}', "handle"),
        ('{"field": "complex", "dim": 1, "handle": [1.0], "vectors": []}', "re, im"),
        ('{"field": "real", "dim": 1, "handle": [2.0], "vectors": []}', "unit"),
        ('{"field": "real", "dim": 1, "handle": [1.0], "vectors": [], "x": 0}', "unknown"),
        ("[1, 2]", "object"),
    ],
)
def test_rep_parse_errors(doc, fragment):
    with pytest.raises(RepFormatError, match=fragment):
        parse_rep(doc)


def test_orthrep_validates_norms():
    with pytest.raises(ValueError, match="unit"):
        OrthRep("real", 2, np.array([1.0, 1.0]), np.zeros((0, 2)))

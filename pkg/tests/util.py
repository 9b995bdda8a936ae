"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import math

import numpy as np

from loorkit import ExclusivityGraph, OrthRep, orthogonality_graph


def random_graph(rng, n_max=10, p=0.4, dyadic_weights=True) -> ExclusivityGraph:
    """Random graph with dyadic-rational weights (k/8, exact float sums)."""
    n = int(rng.integers(1, n_max + 1))
    if dyadic_weights:
        weights = rng.integers(1, 81, size=n) / 8.0
    else:
        weights = rng.uniform(0.1, 10.0, size=n)
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    )
    return ExclusivityGraph(n=n, weights=weights, edges=edges)


def random_unitary(rng, d: int, complex_field=True) -> np.ndarray:
    """Haar-ish random unitary (or orthogonal) via sign-fixed QR."""
    z = rng.standard_normal((d, d))
    if complex_field:
        z = z + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_complex_rep(rng, d: int, n: int) -> tuple[OrthRep, ExclusivityGraph]:
    """Random edge-orthogonal complex rep on the graph its vectors induce.

    Vectors are drawn as columns of random unitaries, so each frame is a
    clique of exact orthogonalities and cross-frame pairs are generically
    far from orthogonal; the graph is derived from the vectors themselves.
    """
    columns: list[np.ndarray] = []
    while len(columns) < n:
        u = random_unitary(rng, d)
        columns.extend(u[:, k] for k in range(d))
    vectors = np.array(columns[:n])
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    handle = z / np.linalg.norm(z)
    graph = orthogonality_graph(vectors, tol=1e-9)
    return OrthRep("complex", d, handle, vectors), graph


def brute_force_independence(g: ExclusivityGraph) -> tuple[float, tuple[int, ...]]:
    """Exhaustive 2^n maximum-weight independent set (value, lex-min witness)."""
    n = g.n
    w = [float(x) for x in g.weights]
    adj = g.adjacency_bitsets()
    best = -math.inf
    best_sets: list[tuple[int, ...]] = []
    for mask in range(1 << n):
        members = [v for v in range(n) if (mask >> v) & 1]
        if any(mask & adj[v] for v in members):
            continue
        total = math.fsum(w[v] for v in members)
        if total > best:
            best = total
            best_sets = [tuple(members)]
        elif total == best:
            best_sets.append(tuple(members))
    return best, min(best_sets)


def edge_residual(rep: OrthRep, g: ExclusivityGraph) -> float:
    """Largest |<v_i|v_j>| over the graph's edges."""
    ei, ej = g.edge_arrays()
    if ei.size == 0:
        return 0.0
    inner = np.einsum("ij,ij->i", rep.vectors[ei].conj(), rep.vectors[ej])
    return float(np.max(np.abs(inner)))


def odd_cycle(n: int) -> ExclusivityGraph:
    return ExclusivityGraph(
        n=n, weights=np.ones(n), edges=tuple((i, (i + 1) % n) for i in range(n))
    )


def odd_cycle_theta(n: int) -> float:
    """Closed-form optimum for an odd cycle, evaluated independently."""
    c = math.cos(math.pi / n)
    return n * c / (1.0 + c)

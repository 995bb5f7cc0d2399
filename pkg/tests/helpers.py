"""Shared test data and oracles.

The two hand-worked matrices (a 6x6 and a 12x12 3-cyclic example) appear
throughout the suite; their block products, spectra, and zero-chain
lengths are known exactly.  The brute-force partition oracle enumerates
every residue labelling, independent of the potential/gcd method used by
the library.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from hcyclic import CyclicPartition, Digraph, assemble_blocks


def six_matrix() -> np.ndarray:
    """3-cyclic matrix with classes {1}, {2,3,4}, {5,6} and B_1 = [4]."""
    a = np.zeros((6, 6), dtype=complex)
    a[0, 1] = a[0, 2] = a[0, 3] = 1
    a[1, 4] = 1
    a[2, 5] = 1
    a[3, 4] = a[3, 5] = 1
    a[4, 0] = 1
    a[5, 0] = 1
    return a


SIX_PARTITION = CyclicPartition(3, ((1,), (2, 3, 4), (5, 6)))


def twelve_matrix() -> np.ndarray:
    """3-cyclic matrix with 4+4+4 classes, all-ones top block, and a
    rank-deficient middle block; zero Jordan structure {3, 2, 2, 1, 1}."""
    a12 = np.ones((4, 4))
    a23 = np.array(
        [[1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]], dtype=float
    )
    a31 = np.eye(4)
    return assemble_blocks([a12, a23, a31])


TWELVE_PARTITION = CyclicPartition(
    3, (tuple(range(1, 5)), tuple(range(5, 9)), tuple(range(9, 13)))
)


def bipartite_ones_matrix() -> np.ndarray:
    """Singular bipartite matrix with equal class sizes (converse witness)."""
    return np.array(
        [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]], dtype=complex
    )


BIPARTITE_PARTITION = CyclicPartition(2, ((1, 2), (3, 4)))


def unit_disk(shape, rng) -> np.ndarray:
    """Complex samples uniform on the unit disk."""
    radius = np.sqrt(rng.uniform(0.0, 1.0, shape))
    angle = rng.uniform(0.0, 2 * np.pi, shape)
    return radius * np.exp(1j * angle)


def consecutive_partition(sizes) -> CyclicPartition:
    classes = []
    start = 1
    for s in sizes:
        classes.append(tuple(range(start, start + s)))
        start += s
    return CyclicPartition(len(sizes), tuple(classes))


def random_block_cycle(rng, h=None, max_size=5, equal_sizes=False, nonsingular=False):
    """Random consecutive h-cyclic matrix; returns (matrix, partition).

    With ``nonsingular`` the class sizes are forced equal and instances
    are redrawn (rank judged by SVD, independent of the library) until
    the full matrix is invertible.
    """
    if h is None:
        h = int(rng.integers(2, 7))
    while True:
        if equal_sizes or nonsingular:
            m = int(rng.integers(1, max_size + 1))
            sizes = [m] * h
        else:
            sizes = [int(rng.integers(1, max_size + 1)) for _ in range(h)]
        blocks = [
            unit_disk((sizes[i], sizes[(i + 1) % h]), rng) for i in range(h)
        ]
        a = assemble_blocks(blocks)
        if not nonsingular or np.linalg.matrix_rank(a) == a.shape[0]:
            return a, consecutive_partition(sizes)


@lru_cache(maxsize=None)
def _all_labellings(n: int, h: int) -> np.ndarray:
    return np.array(list(itertools.product(range(h), repeat=n)), dtype=np.int8)


def brute_force_partition_exists(g: Digraph, h: int) -> bool:
    """Exhaustive oracle: does any h-class labelling with nonempty classes
    send every arc from class c to class c+1 mod h?"""
    n = g.n
    if h > n:
        return False
    labels = _all_labellings(n, h)
    ok = np.ones(labels.shape[0], dtype=bool)
    for i, j in g.sorted_arcs:
        ok &= labels[:, j - 1] == (labels[:, i - 1] + 1) % h
    for c in range(h):
        ok &= (labels == c).any(axis=1)
    return bool(ok.any())


def random_digraph(rng, n=None, density=0.25) -> Digraph:
    if n is None:
        n = int(rng.integers(1, 7))
    arcs = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if rng.uniform() < density
    )
    return Digraph(n=n, arcs=arcs)


def greedy_match(predicted, actual) -> float:
    """Greedily pair each predicted value with the nearest unused actual
    value; returns the largest pairing distance."""
    assert len(predicted) == len(actual)
    remaining = list(actual)
    worst = 0.0
    for z in predicted:
        dists = [abs(z - w) for w in remaining]
        best = int(np.argmin(dists))
        worst = max(worst, dists[best])
        remaining.pop(best)
    return worst


def precise_eigenvalues(a, dps=60) -> list[complex]:
    """Direct eigenvalues at high working precision.

    Double precision smears a defective zero of Jordan depth p to about
    eps**(1/p) (1e-5 for p = 3), so comparisons at 1e-6 need the direct
    multiset computed with enough digits to be meaningful.
    """
    import mpmath as mp

    n = a.shape[0]
    with mp.workdps(dps):
        m = mp.matrix(
            [[mp.mpc(a[i, j].real, a[i, j].imag) for j in range(n)] for i in range(n)]
        )
        return [complex(z) for z in mp.eig(m, left=False, right=False)]


def assert_spectra_match(predicted, a, tol) -> None:
    """Assert the predicted multiset matches the direct eigenvalues of
    ``a`` under greedy matching, upgrading the direct computation to high
    precision when double precision alone cannot resolve the tolerance."""
    actual = list(np.linalg.eigvals(a))
    if greedy_match(predicted, actual) <= tol:
        return
    assert greedy_match(predicted, precise_eigenvalues(a)) <= tol

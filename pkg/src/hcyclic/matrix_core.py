"""Dense complex-matrix primitives shared by the rest of the package.

Everything operates on plain numpy arrays of ``complex128``.  Index sets
for submatrix extraction are 1-based, matching the vertex and class
numbering used by the digraph and block-cycle modules.

Rank and kernel computations use Gaussian elimination with partial
pivoting and an absolute pivot threshold scaled by the matrix magnitude.
The kernel basis is returned in reduced-echelon "free variable" form, so
for matrices with simple rational structure the basis vectors have the
exact rational entries one would compute by hand, not an orthonormalized
recombination of them.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-9

__all__ = [
    "DEFAULT_TOL",
    "NumericalError",
    "as_complex_matrix",
    "as_complex_vector",
    "norm_inf",
    "hadamard",
    "jordan_block",
    "submatrix",
    "matrix_rank",
    "null_space",
    "matrix_to_json",
    "matrix_from_json",
]


class NumericalError(RuntimeError):
    """A computation violated a tolerance contract that only inconsistent
    input or numerical breakdown can explain."""


def as_complex_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-D complex array, rejecting NaN/Inf entries."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"matrix dimensions must be positive, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def as_complex_vector(x) -> np.ndarray:
    """Coerce ``x`` to a 1-D complex array, rejecting NaN/Inf entries."""
    vec = np.asarray(x, dtype=complex).reshape(-1)
    if vec.size < 1:
        raise ValueError("vector must be nonempty")
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector entries must be finite")
    return vec


def norm_inf(a) -> float:
    """Infinity norm: max absolute row sum for matrices, max modulus for vectors."""
    arr = np.asarray(a)
    if arr.ndim <= 1:
        return float(np.max(np.abs(arr))) if arr.size else 0.0
    return float(np.max(np.sum(np.abs(arr), axis=1)))


def hadamard(a, b) -> np.ndarray:
    """Entrywise product of two matrices of identical shape."""
    am = as_complex_matrix(a)
    bm = as_complex_matrix(b)
    if am.shape != bm.shape:
        raise ValueError(f"shape mismatch for Hadamard product: {am.shape} vs {bm.shape}")
    return am * bm


def jordan_block(n: int, lam: complex) -> np.ndarray:
    """The n-by-n upper Jordan block: ``lam`` on the diagonal, ones on the
    superdiagonal, zeros elsewhere."""
    if n < 1:
        raise ValueError(f"Jordan block order must be >= 1, got {n}")
    out = np.zeros((n, n), dtype=complex)
    np.fill_diagonal(out, complex(lam))
    for i in range(n - 1):
        out[i, i + 1] = 1.0
    return out


def _as_index_list(idx, n: int, what: str) -> list[int]:
    # Sets carry no order; sort them so extraction is deterministic.
    if isinstance(idx, (set, frozenset)):
        idx = sorted(idx)
    out = [int(i) for i in idx]
    if not out:
        raise ValueError(f"{what} index set must be nonempty")
    for i in out:
        if not 1 <= i <= n:
            raise ValueError(f"{what} index {i} out of range 1..{n}")
    return out


def submatrix(a, rows, cols) -> np.ndarray:
    """Extract the submatrix with 1-based row set ``rows`` and column set
    ``cols``, preserving the order in which indices are given."""
    am = as_complex_matrix(a)
    r = _as_index_list(rows, am.shape[0], "row")
    c = _as_index_list(cols, am.shape[1], "column")
    r0 = np.asarray(r, dtype=int) - 1
    c0 = np.asarray(c, dtype=int) - 1
    return am[np.ix_(r0, c0)]


def _rref(a: np.ndarray, thr: float) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with partial pivoting.

    Pivots whose modulus is <= ``thr`` are treated as zero.  Returns the
    reduced matrix and the list of pivot column indices (0-based).
    """
    r = np.array(a, dtype=complex)
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        p = row + int(np.argmax(np.abs(r[row:, col])))
        if abs(r[p, col]) <= thr:
            continue
        if p != row:
            r[[row, p]] = r[[p, row]]
        r[row] = r[row] / r[row, col]
        r[row, col] = 1.0
        for other in range(m):
            if other != row and r[other, col] != 0:
                r[other] = r[other] - r[other, col] * r[row]
                r[other, col] = 0.0
        pivots.append(col)
        row += 1
    return r, pivots


def _pivot_threshold(a: np.ndarray, tol: float) -> float:
    return tol * max(1.0, norm_inf(a))


def matrix_rank(a, tol: float = DEFAULT_TOL) -> int:
    """Numerical rank from row reduction with pivot threshold
    ``tol * max(1, norm_inf(a))``."""
    am = as_complex_matrix(a)
    _, pivots = _rref(am, _pivot_threshold(am, tol))
    return len(pivots)


def null_space(a, tol: float = DEFAULT_TOL) -> tuple[int, list[np.ndarray]]:
    """Numerical rank and kernel basis of ``a``.

    Args:
        a: matrix, square or rectangular.
        tol: zero threshold for pivots, scaled by the matrix magnitude.

    Returns:
        ``(rank, basis)`` where ``basis`` is a list of linearly independent
        vectors spanning the kernel, one per free column of the reduced
        echelon form.  Each basis vector has 1 in its free position and
        the negated echelon entries in the pivot positions, so
        ``rank + len(basis) == a.shape[1]`` always holds and the vectors
        keep whatever rational structure the input had.
    """
    am = as_complex_matrix(a)
    rref, pivots = _rref(am, _pivot_threshold(am, tol))
    n = am.shape[1]
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = np.zeros(n, dtype=complex)
        v[f] = 1.0
        for i, p in enumerate(pivots):
            v[p] = -rref[i, f]
        basis.append(v)
    return len(pivots), basis


def matrix_to_json(a) -> dict:
    """Serialize to ``{"rows": n, "cols": m, "data": [[re, im], ...]}`` with
    row-major ``data``."""
    am = as_complex_matrix(a)
    rows, cols = am.shape
    flat = am.reshape(-1)
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj) -> np.ndarray:
    """Parse the matrix JSON schema produced by :func:`matrix_to_json`."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        data = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ValueError(f"matrix data must hold {rows * cols} [re, im] pairs")
    out = np.empty(rows * cols, dtype=complex)
    for idx, entry in enumerate(data):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError(f"matrix entry {idx} is not an [re, im] pair")
        out[idx] = complex(float(entry[0]), float(entry[1]))
    return as_complex_matrix(out.reshape(rows, cols))

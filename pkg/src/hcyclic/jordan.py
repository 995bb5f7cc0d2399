"""Jordan chains of h-cyclic matrices.

Chain conventions
-----------------
A right chain (x_1, ..., x_p) at eigenvalue lam satisfies

    A x_1 = lam x_1,    A x_j = lam x_j + x_{j-1}   (1 < j <= p).

A left chain (y_1, ..., y_p) uses the transposed recursion in the order
of the rows of S^{-1} in a similarity S J S^{-1}:

    y_p^T A = lam y_p^T,    y_j^T A = lam y_j^T + y_{j+1}^T   (j < p),

so y_p is the left eigenvector and y_1 the deepest generalized vector.
Transposes are plain transposes without conjugation throughout.

Rotation
--------
For an h-cyclic matrix, scaling class block i of chain vector j by
(w^k)^((i-j) mod h) (right chains; (j-i) mod h for left chains) turns a
chain at lam into a chain at lam*w^k, where w = exp(2*pi*i/h).  The
converse synthesis implemented by :func:`reconstruct_from_chains` builds
an h-cyclic matrix out of chain families with exactly that symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circulant import omega_pow
from .cyclic_blocks import BlockCycle, _cycle_blocks, partial_product
from .digraph import CyclicPartition, is_h_cyclic
from .matrix_core import (
    DEFAULT_TOL,
    NumericalError,
    as_complex_matrix,
    as_complex_vector,
    jordan_block,
    hadamard,
    matrix_rank,
    norm_inf,
    null_space,
)

__all__ = [
    "JordanChain",
    "ZeroChainReport",
    "ZeroChainSummary",
    "WeyrCharacteristic",
    "verify_chain",
    "rotate_right_chain",
    "rotate_left_chain",
    "embed_null_vector",
    "zero_chain_from_null_vector",
    "zero_chains_all",
    "weyr_zero",
    "reconstruct_from_chains",
    "chain_to_json",
    "chain_from_json",
]


@dataclass(frozen=True)
class JordanChain:
    """Eigenvalue plus ordered chain vectors, right- or left-oriented."""

    eigenvalue: complex
    orientation: str
    vectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.orientation not in ("right", "left"):
            raise ValueError(f"orientation must be 'right' or 'left', got {self.orientation!r}")
        if not self.vectors:
            raise ValueError("a Jordan chain needs at least one vector")
        vecs = tuple(as_complex_vector(v).copy() for v in self.vectors)
        order = vecs[0].size
        for v in vecs:
            if v.size != order:
                raise ValueError("all chain vectors must have the same length")
            v.flags.writeable = False
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "eigenvalue", complex(self.eigenvalue))

    @property
    def length(self) -> int:
        return len(self.vectors)

    @property
    def order(self) -> int:
        return self.vectors[0].size


def verify_chain(a, chain: JordanChain, tol: float = DEFAULT_TOL) -> bool:
    """Check the chain recursion, linear independence, and the power form
    of the chain against matrix ``a``.

    Right chains must satisfy A x_j = lam x_j + x_{j-1} and the redundant
    closed form x_k = (A - lam I)^(p-k) x_p; left chains the transposed
    versions.  Residuals are measured against
    ``tol * max(1, ||A||_inf) * max(1, max_j ||x_j||_inf)``.
    """
    am = as_complex_matrix(a)
    if am.shape[0] != am.shape[1]:
        raise ValueError(f"matrix must be square, got {am.shape}")
    if chain.order != am.shape[0]:
        raise ValueError(
            f"chain vectors have length {chain.order} but matrix has order {am.shape[0]}"
        )
    lam = chain.eigenvalue
    vecs = chain.vectors
    p = chain.length
    op = am if chain.orientation == "right" else am.T
    scale = max(1.0, norm_inf(am)) * max(1.0, max(norm_inf(v) for v in vecs))
    thr = tol * scale

    # Recursion: right chains couple to the previous vector, left chains
    # (rows of S^{-1}) to the next one.
    for j in range(p):
        if chain.orientation == "right":
            coupled = vecs[j - 1] if j > 0 else 0.0
        else:
            coupled = vecs[j + 1] if j < p - 1 else 0.0
        resid = norm_inf(op @ vecs[j] - lam * vecs[j] - coupled)
        if resid > thr:
            return False

    if matrix_rank(np.column_stack(vecs), tol) != p:
        return False

    # Redundant power form, iterated with the shifted matrix.
    shifted = op - lam * np.eye(am.shape[0])
    grow = max(1.0, norm_inf(am) + abs(lam))
    if chain.orientation == "right":
        z = vecs[p - 1]
        for k in range(p, 0, -1):
            step_thr = tol * grow ** (p - k) * max(1.0, norm_inf(vecs[p - 1]))
            if norm_inf(z - vecs[k - 1]) > step_thr:
                return False
            z = shifted @ z
    else:
        z = vecs[0]
        for j in range(1, p + 1):
            step_thr = tol * grow ** (j - 1) * max(1.0, norm_inf(vecs[0]))
            if norm_inf(z - vecs[j - 1]) > step_thr:
                return False
            z = shifted @ z
    return True


def _rotation_scales(part: CyclicPartition, k: int, j: int, transposed: bool) -> np.ndarray:
    scales = np.empty(part.n, dtype=complex)
    for i, cls in enumerate(part.classes, start=1):
        e = part.exponent(j, i) if transposed else part.exponent(i, j)
        value = omega_pow(part.h, k, e)
        for v in cls:
            scales[v - 1] = value
    return scales


def rotate_right_chain(chain: JordanChain, part: CyclicPartition, k: int) -> JordanChain:
    """Right chain at lam*w^k obtained by scaling class block i of chain
    vector j by (w^k)^((i-j) mod h)."""
    if chain.orientation != "right":
        raise ValueError("rotate_right_chain needs a right-oriented chain")
    if chain.order != part.n:
        raise ValueError("chain vector length does not match the partition")
    vectors = tuple(
        vec * _rotation_scales(part, k, j, transposed=False)
        for j, vec in enumerate(chain.vectors, start=1)
    )
    return JordanChain(
        eigenvalue=chain.eigenvalue * omega_pow(part.h, k, 1),
        orientation="right",
        vectors=vectors,
    )


def rotate_left_chain(chain: JordanChain, part: CyclicPartition, k: int) -> JordanChain:
    """Left chain at lam*w^k; block i of vector j scales by (w^k)^((j-i) mod h)."""
    if chain.orientation != "left":
        raise ValueError("rotate_left_chain needs a left-oriented chain")
    if chain.order != part.n:
        raise ValueError("chain vector length does not match the partition")
    vectors = tuple(
        vec * _rotation_scales(part, k, j, transposed=True)
        for j, vec in enumerate(chain.vectors, start=1)
    )
    return JordanChain(
        eigenvalue=chain.eigenvalue * omega_pow(part.h, k, 1),
        orientation="left",
        vectors=vectors,
    )


def embed_null_vector(x, i: int, part: CyclicPartition) -> np.ndarray:
    """Scatter a class-i coordinate vector into a full vector that is zero
    on every other class."""
    xv = as_complex_vector(x)
    if not 1 <= i <= part.h:
        raise ValueError(f"class index {i} out of range 1..{part.h}")
    members = part.classes[i - 1]
    if xv.size != len(members):
        raise ValueError(
            f"vector has length {xv.size} but class {i} has {len(members)} vertices"
        )
    out = np.zeros(part.n, dtype=complex)
    for pos, v in enumerate(members):
        out[v - 1] = xv[pos]
    return out


@dataclass(frozen=True)
class ZeroChainReport:
    """One zero-eigenvalue chain grown from a kernel vector of a cycle product."""

    class_index: int
    seed: np.ndarray
    length: int
    chain: JordanChain

    def __post_init__(self):
        seed = as_complex_vector(self.seed).copy()
        seed.flags.writeable = False
        object.__setattr__(self, "seed", seed)


def zero_chain_from_null_vector(
    a,
    part: CyclicPartition,
    i: int,
    x,
    tol: float = DEFAULT_TOL,
) -> ZeroChainReport:
    """Zero-eigenvalue Jordan chain grown from x in the kernel of B_i.

    Embeds x into class i, then applies the matrix until the vector dies;
    the minimal p <= h with A^p v = 0 is the chain length, and the chain
    is (A^{p-1} v, ..., A v, v).  The partial products check the same
    minimality on the block level: B_ip x = 0 while B_iq x != 0 for q < p.
    """
    am = as_complex_matrix(a)
    if not is_h_cyclic(am, part, tol):
        raise ValueError("matrix is not h-cyclic for the given partition")
    xv = as_complex_vector(x)
    if norm_inf(xv) == 0.0:
        raise ValueError("seed vector must be nonzero")
    bc = _cycle_blocks(am, part)
    b_i = partial_product(bc, i, part.h)
    kernel_thr = tol * max(1.0, norm_inf(b_i)) * max(1.0, norm_inf(xv))
    if norm_inf(b_i @ xv) > kernel_thr:
        raise ValueError(f"seed vector is not in the kernel of cycle product B_{i}")

    v = embed_null_vector(xv, i, part)
    na = max(1.0, norm_inf(am))
    nx = max(1.0, norm_inf(xv))
    powers = [v]
    p = 0
    for q in range(1, part.h + 1):
        w = am @ powers[-1]
        if norm_inf(w) <= tol * na**q * nx:
            p = q
            break
        powers.append(w)
    if p == 0:
        raise NumericalError(
            f"A^q v stayed nonzero for all q <= h; kernel membership of the seed "
            f"is numerically inconsistent (class {i})"
        )

    # Block-level minimality must agree with the full-matrix iteration.
    for q in range(1, p + 1):
        piece = partial_product(bc, i, q) @ xv
        small = norm_inf(piece) <= tol * na**q * nx
        if small != (q == p):
            raise NumericalError(
                f"partial product B_i{q} disagrees with the power iteration at class {i}"
            )

    chain = JordanChain(eigenvalue=0j, orientation="right", vectors=tuple(reversed(powers)))
    if not verify_chain(am, chain, tol):
        raise NumericalError(f"constructed zero chain fails verification (class {i})")
    return ZeroChainReport(class_index=i, seed=xv, length=p, chain=chain)


@dataclass(frozen=True)
class WeyrCharacteristic:
    """Weights w_k = nullity(A^k) - nullity(A^(k-1)) until stationary.

    The conjugate partition of the (weakly decreasing) weights is the
    multiset of singular Jordan block sizes.
    """

    weights: tuple[int, ...]

    def conjugate(self) -> tuple[int, ...]:
        """Singular Jordan block sizes, largest first."""
        if not self.weights:
            return ()
        return tuple(
            sum(1 for w in self.weights if w >= j) for j in range(1, self.weights[0] + 1)
        )


def weyr_zero(a, tol: float = DEFAULT_TOL) -> WeyrCharacteristic:
    """Weyr characteristic of ``a`` at the eigenvalue zero (empty for a
    nonsingular matrix)."""
    am = as_complex_matrix(a)
    if am.shape[0] != am.shape[1]:
        raise ValueError(f"matrix must be square, got {am.shape}")
    n = am.shape[0]
    weights: list[int] = []
    prev_nullity = 0
    power = np.eye(n, dtype=complex)
    for _ in range(n):
        power = power @ am
        nullity = n - matrix_rank(power, tol)
        w = nullity - prev_nullity
        if w <= 0:
            break
        weights.append(w)
        prev_nullity = nullity
        if nullity == n:
            break
    return WeyrCharacteristic(weights=tuple(weights))


@dataclass(frozen=True)
class ZeroChainSummary:
    """Zero chains grown from every kernel basis vector of every singular
    cycle product, plus the Weyr characteristic as ground truth.

    Chains from different classes can describe the same Jordan blocks, so
    ``cross_class_redundancy`` flags when more than one class contributed;
    the conjugate of ``weyr`` is the authoritative block-size multiset.
    """

    reports: tuple[ZeroChainReport, ...]
    weyr: WeyrCharacteristic
    cross_class_redundancy: bool

    @property
    def zero_block_sizes(self) -> tuple[int, ...]:
        return self.weyr.conjugate()

    def by_class(self) -> dict[int, list[ZeroChainReport]]:
        out: dict[int, list[ZeroChainReport]] = {}
        for rep in self.reports:
            out.setdefault(rep.class_index, []).append(rep)
        return out

    def lengths_by_class(self) -> dict[int, list[int]]:
        return {i: [r.length for r in reps] for i, reps in self.by_class().items()}


def zero_chains_all(a, part: CyclicPartition, tol: float = DEFAULT_TOL) -> ZeroChainSummary:
    """Zero chains for each class whose cycle product is singular, one per
    kernel basis vector, in class order."""
    am = as_complex_matrix(a)
    if not is_h_cyclic(am, part, tol):
        raise ValueError("matrix is not h-cyclic for the given partition")
    bc = _cycle_blocks(am, part)
    reports: list[ZeroChainReport] = []
    classes_hit = set()
    for i in range(1, part.h + 1):
        b_i = partial_product(bc, i, part.h)
        _, basis = null_space(b_i, tol)
        for vec in basis:
            reports.append(zero_chain_from_null_vector(am, part, i, vec, tol))
            classes_hit.add(i)
    return ZeroChainSummary(
        reports=tuple(reports),
        weyr=weyr_zero(am, tol),
        cross_class_redundancy=len(classes_hit) > 1,
    )


def _block_mask(part: CyclicPartition) -> np.ndarray:
    # Blockwise cyclic-shift mask: entry (u, v) is 1 exactly when the class
    # of v follows the class of u around the cycle (for h = 1 that is the
    # all-ones matrix and the synthesis degenerates to plain S J S^{-1}).
    labels = np.array([part.class_of(v) for v in range(1, part.n + 1)])
    target = np.array([part.alpha(c) for c in labels])
    return (labels[None, :] == target[:, None]).astype(complex)


def reconstruct_from_chains(
    right_chains,
    left_chains,
    spectrum,
    part: CyclicPartition,
    tol: float = DEFAULT_TOL,
) -> np.ndarray:
    """Assemble the h-cyclic matrix determined by rotation-symmetric chains.

    Args:
        right_chains: one base right chain per base eigenvalue.
        left_chains: the matching base left chains (rows of the inverse
            similarity, in S J S^{-1} order).
        spectrum: list of ``(eigenvalue, chain_length)`` pairs, one per
            base eigenvalue; the full spectrum is the union of the
            root-of-unity orbits of these.
        part: target partition; h and the class blocks drive the rotations.
        tol: residual threshold for the biorthogonality hypothesis.

    The rotated families of the supplied chains must assemble into a
    similarity (all rotated left rows against all rotated right columns
    multiply to the identity); otherwise the symmetry hypotheses fail and
    a ValueError is raised.  The result is built blockwise, so it is
    exactly h-cyclic, and is cross-checked against the direct similarity
    product S J S^{-1}.
    """
    specs = [(complex(lam), int(p)) for lam, p in spectrum]
    rights = list(right_chains)
    lefts = list(left_chains)
    if not (len(specs) == len(rights) == len(lefts)):
        raise ValueError("spectrum, right_chains, and left_chains must align one-to-one")
    if not specs:
        raise ValueError("need at least one base eigenvalue")
    h = part.h
    n = part.n
    for (lam, p), rc, lc in zip(specs, rights, lefts):
        if p < 1:
            raise ValueError(f"chain length must be positive, got {p}")
        if rc.orientation != "right" or lc.orientation != "left":
            raise ValueError("chain orientations must be (right, left) per eigenvalue")
        if rc.length != p or lc.length != p:
            raise ValueError(f"chains for eigenvalue {lam} must both have length {p}")
        if rc.order != n or lc.order != n:
            raise ValueError("chain vectors must match the partition order")
    total = h * sum(p for _, p in specs)
    if total != n:
        raise ValueError(
            f"rotated chain system has {total} vectors but the matrix order is {n}"
        )

    columns: list[np.ndarray] = []
    rows: list[np.ndarray] = []
    jordan_blocks: list[np.ndarray] = []
    for (lam, p), rc, lc in zip(specs, rights, lefts):
        for k in range(h):
            columns.extend(rotate_right_chain(rc, part, k).vectors)
            rows.extend(rotate_left_chain(lc, part, k).vectors)
            jordan_blocks.append(jordan_block(p, lam * omega_pow(h, k, 1)))
    s = np.column_stack(columns)
    y = np.vstack(rows)
    gram = y @ s
    resid = float(np.max(np.abs(gram - np.eye(n))))
    scale = max(1.0, norm_inf(y) * norm_inf(s))
    if resid > tol * scale:
        raise ValueError(
            f"rotated chain families are not biorthonormal (residual {resid:.3e}); "
            "the rotation-symmetry hypotheses do not hold"
        )

    mask = _block_mask(part)
    out = np.zeros((n, n), dtype=complex)
    for (lam, p), rc, lc in zip(specs, rights, lefts):
        eigen_part = np.zeros((n, n), dtype=complex)
        for j in range(p):
            eigen_part += np.outer(rc.vectors[j], lc.vectors[j])
        coupling_part = np.zeros((n, n), dtype=complex)
        for j in range(p - 1):
            coupling_part += np.outer(rc.vectors[j], lc.vectors[j + 1])
        out += hadamard(lam * h * eigen_part + h * coupling_part, mask)

    j_full = np.zeros((n, n), dtype=complex)
    pos = 0
    for blk in jordan_blocks:
        m = blk.shape[0]
        j_full[pos:pos + m, pos:pos + m] = blk
        pos += m
    direct = s @ j_full @ y
    direct_resid = float(np.max(np.abs(out - direct)))
    direct_scale = max(1.0, norm_inf(s) * norm_inf(j_full) * norm_inf(y))
    if direct_resid > tol * direct_scale:
        raise NumericalError(
            f"blockwise synthesis deviates from S J S^-1 by {direct_resid:.3e}"
        )
    if not is_h_cyclic(out, part, tol):
        raise NumericalError("reconstructed matrix failed the h-cyclicity check")
    return out


def chain_to_json(chain: JordanChain) -> dict:
    """Serialize to ``{"eigenvalue": [re, im], "orientation": ..., "vectors":
    [[[re, im], ...], ...]}``."""
    return {
        "eigenvalue": [chain.eigenvalue.real, chain.eigenvalue.imag],
        "orientation": chain.orientation,
        "vectors": [
            [[float(z.real), float(z.imag)] for z in vec] for vec in chain.vectors
        ],
    }


def chain_from_json(obj) -> JordanChain:
    """Parse the chain JSON schema produced by :func:`chain_to_json`."""
    if not isinstance(obj, dict):
        raise ValueError("chain JSON must be an object")
    try:
        ev = obj["eigenvalue"]
        orientation = obj["orientation"]
        vectors = obj["vectors"]
    except KeyError as exc:
        raise ValueError(f"malformed chain JSON: missing {exc}") from exc
    if not isinstance(ev, (list, tuple)) or len(ev) != 2:
        raise ValueError("chain eigenvalue must be an [re, im] pair")
    if not isinstance(vectors, list) or not vectors:
        raise ValueError("chain vectors must be a nonempty list")
    parsed = []
    for vec in vectors:
        if not isinstance(vec, list):
            raise ValueError("each chain vector must be a list of [re, im] pairs")
        parsed.append(
            np.array([complex(float(z[0]), float(z[1])) for z in vec], dtype=complex)
        )
    return JordanChain(
        eigenvalue=complex(float(ev[0]), float(ev[1])),
        orientation=str(orientation),
        vectors=tuple(parsed),
    )

"""Dense symmetric eigensolver and quotient-matrix machinery.

The eigensolver is a cyclic-sweep Jacobi rotation scheme over the full
symmetric matrix; it converges once the off-diagonal Frobenius norm drops
below tol * (1 + on-diagonal norm). That keeps solver error around three
orders of magnitude below the 1e-9 comparison slack used elsewhere. The
sweep loop is JIT-compiled when numba is importable and falls back to the
same pure-Python code otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graphs import Graph, as_vertex_set

__all__ = [
    "DEFAULT_TOL",
    "Spectrum",
    "sym_matrix",
    "adjacency_matrix",
    "eigenvalues_sym",
    "lambda_k",
    "validate_partition",
    "quotient_matrix",
    "is_equitable",
    "quotient_eigs_2x2",
]

DEFAULT_TOL = 1e-12
_MAX_SWEEPS = 100

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _jacobi_sweeps(a, tol, max_sweeps):
    """Diagonalize symmetric a in place by cyclic Jacobi sweeps.

    Returns the number of sweeps used, or -1 if the off-diagonal mass never
    fell below tol * (1 + diagonal norm).
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        ondiag = 0.0
        for i in range(n):
            ondiag += a[i, i] * a[i, i]
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        if math.sqrt(off) <= tol * (1.0 + math.sqrt(ondiag)):
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[p, i] = a[i, p]
                    a[i, q] = s * aip + c * aiq
                    a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    off = 0.0
    ondiag = 0.0
    for i in range(n):
        ondiag += a[i, i] * a[i, i]
        for j in range(i + 1, n):
            off += 2.0 * a[i, j] * a[i, j]
    if math.sqrt(off) <= tol * (1.0 + math.sqrt(ondiag)):
        return max_sweeps
    return -1


if _HAVE_NUMBA:
    _jacobi_sweeps = njit(cache=True)(_jacobi_sweeps)


@dataclass(frozen=True)
class Spectrum:
    """All real eigenvalues in nonincreasing order plus the solver tolerance."""

    values: tuple
    tol: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def to_json_dict(self) -> dict:
        return {"values": list(self.values), "tol": self.tol}


def sym_matrix(entries) -> np.ndarray:
    """Build a float matrix that is symmetric to exact representational equality.

    The upper triangle (including the diagonal) is mirrored onto the lower.
    """
    a = np.array(entries, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return np.triu(a) + np.triu(a, 1).T


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def eigenvalues_sym(m, tol: float = DEFAULT_TOL) -> Spectrum:
    """All eigenvalues of a symmetric matrix, sorted nonincreasing.

    Deterministic for identical input: fixed sweep order, no randomness.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix must have order >= 1")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be exactly symmetric; see sym_matrix()")
    sweeps = _jacobi_sweeps(a, float(tol), _MAX_SWEEPS)
    if sweeps < 0:
        raise ArithmeticError(
            f"Jacobi iteration did not converge in {_MAX_SWEEPS} sweeps (order {a.shape[0]})"
        )
    values = np.sort(np.diag(a))[::-1]
    return Spectrum(values=tuple(float(x) for x in values), tol=float(tol))


def lambda_k(g: Graph, k: int, tol: float = DEFAULT_TOL) -> float:
    """k-th largest adjacency eigenvalue (1-indexed)."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in [1, {g.n}], got {k}")
    return eigenvalues_sym(adjacency_matrix(g), tol).values[k - 1]


# ---------------------------------------------------------------------------
# vertex partitions


def validate_partition(g: Graph, blocks: Iterable) -> tuple:
    """Normalize blocks to sorted tuples; require disjoint nonempty coverage of V."""
    norm = []
    total = 0
    seen = set()
    for block in blocks:
        b = as_vertex_set(block, g.n)
        if not b:
            raise ValueError("partition blocks must be nonempty")
        if seen.intersection(b):
            raise ValueError("partition blocks must be disjoint")
        seen.update(b)
        total += len(b)
        norm.append(b)
    if total != g.n:
        raise ValueError(f"partition covers {total} of {g.n} vertices")
    return tuple(norm)


def quotient_matrix(g: Graph, blocks: Iterable) -> np.ndarray:
    """Block-averaged neighbor counts: entry (i, j) is the mean number of
    neighbors in block j over the vertices of block i."""
    parts = validate_partition(g, blocks)
    s = len(parts)
    block_of = [0] * g.n
    for i, part in enumerate(parts):
        for v in part:
            block_of[v] = i
    sums = np.zeros((s, s), dtype=np.float64)
    for u, v in g.edges:
        bu, bv = block_of[u], block_of[v]
        sums[bu, bv] += 1.0
        sums[bv, bu] += 1.0
    sizes = np.array([len(part) for part in parts], dtype=np.float64)
    return sums / sizes[:, None]


def is_equitable(g: Graph, blocks: Iterable) -> bool:
    """True iff within each block every vertex has the same (integer) number
    of neighbors in every block."""
    parts = validate_partition(g, blocks)
    block_of = [0] * g.n
    for i, part in enumerate(parts):
        for v in part:
            block_of[v] = i
    s = len(parts)
    for part in parts:
        ref = None
        for v in part:
            counts = [0] * s
            for w in g.adj[v]:
                counts[block_of[w]] += 1
            if ref is None:
                ref = counts
            elif counts != ref:
                return False
    return True


def quotient_eigs_2x2(q) -> tuple:
    """Both roots of the characteristic polynomial of a 2x2 matrix, larger first.

    Uses the closed-form quadratic; exact up to floating rounding.
    """
    a = np.array(q, dtype=np.float64)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    disc = (a[0, 0] - a[1, 1]) ** 2 + 4.0 * a[0, 1] * a[1, 0]
    if disc < 0.0:
        raise ValueError(f"complex eigenvalues (discriminant {disc})")
    root = math.sqrt(disc)
    tr = a[0, 0] + a[1, 1]
    return ((tr + root) / 2.0, (tr - root) / 2.0)

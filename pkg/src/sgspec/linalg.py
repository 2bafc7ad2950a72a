"""Spectra and multiplicities of signed adjacency matrices.

Two independent routes are provided: a Jacobi eigensolver followed by gap
clustering for arbitrary real eigenvalues, and fraction-free integer
elimination for the exact multiplicity of a rational eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .core import SignedGraph, induced_subgraph

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100


class NotSymmetric(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def adjacency(g: SignedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = a[v, u] = s
    return a


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending
    residual: float
    sweeps: int = 0

    def __len__(self):
        return len(self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues, dtype=float)


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair of range(m) once (m even)."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p = [players[i] for i in range(m // 2)]
        q = [players[m - 1 - i] for i in range(m // 2)]
        lo = np.minimum(p, q)
        hi = np.maximum(p, q)
        rounds.append((lo, hi))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _max_offdiag(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    off = np.abs(a - np.diag(np.diag(a)))
    return float(off.max())


def eigen_symmetric(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Rotations are scheduled in round-robin order so that each round applies
    n/2 disjoint plane rotations at once.  Iteration stops when the largest
    off-diagonal magnitude is at most ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NotSymmetric("matrix is not symmetric")
    n = a.shape[0]
    if n == 0:
        return Spectrum((), 0.0)

    # odd orders get a padding row/column of zeros that no rotation ever touches
    size = n + (n % 2)
    work = np.zeros((size, size))
    work[:n, :n] = a
    rounds = _round_robin(size) if size > 1 else []

    residual = _max_offdiag(work)
    sweeps = 0
    while residual > tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (residual {residual:.3e})"
            )
        for p, q in rounds:
            apq = work[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            app = work[p, p]
            aqq = work[q, q]
            safe = np.where(active, apq, 1.0)
            with np.errstate(over="ignore", divide="ignore"):
                tau = (aqq - app) / (2.0 * safe)
                t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            rp = work[p, :].copy()
            rq = work[q, :]
            work[p, :] = c[:, None] * rp - s[:, None] * rq
            work[q, :] = s[:, None] * rp + c[:, None] * rq
            cp = work[:, p].copy()
            cq = work[:, q]
            work[:, p] = cp * c - cq * s
            work[:, q] = cp * s + cq * c
            work[p, q] = 0.0
            work[q, p] = 0.0
        sweeps += 1
        residual = _max_offdiag(work)

    vals = np.sort(np.diag(work)[:n])[::-1]
    return Spectrum(tuple(float(x) for x in vals), residual, sweeps)


def graph_spectrum(g: SignedGraph, tol: float = JACOBI_TOL) -> Spectrum:
    return eigen_symmetric(adjacency(g), tol)


# -- clustering --------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityCluster:
    value: float
    multiplicity: int
    members: tuple[int, ...]


def cluster_tolerance(g: SignedGraph) -> float:
    return 1e-8 * max(1, g.max_degree())


def cluster(spec: Union[Spectrum, Sequence[float]], cluster_tol: float) -> list[MultiplicityCluster]:
    """Group a descending eigenvalue list wherever consecutive gaps exceed ``cluster_tol``."""
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    vals = spec.eigenvalues if isinstance(spec, Spectrum) else tuple(spec)
    groups: list[list[int]] = []
    for i, x in enumerate(vals):
        if groups and vals[i - 1] - x <= cluster_tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return [
        MultiplicityCluster(sum(vals[i] for i in grp) / len(grp), len(grp), tuple(grp))
        for grp in groups
    ]


# -- exact ranks -------------------------------------------------------------


def bareiss_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact.  Python integers keep this overflow-free.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        p = pr[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            for k in range(col + 1, ncols):
                row[k] = (p * row[k] - f * pr[k]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def as_fraction(lam: Union[int, Fraction, str]) -> Fraction:
    return Fraction(lam)


def multiplicity_exact(g: SignedGraph, lam: Union[int, Fraction, str]) -> int:
    """n - rank(lam*I - A), computed as the rank of p*I - q*A over the integers."""
    lam = as_fraction(lam)
    p, q = lam.numerator, lam.denominator
    a = adjacency(g)
    rows = [
        [(p if i == j else 0) - q * int(a[i, j]) for j in range(g.n)]
        for i in range(g.n)
    ]
    return g.n - bareiss_rank(rows)


def rank_exact(g: SignedGraph) -> int:
    return bareiss_rank(adjacency(g).tolist())


# -- interlacing -------------------------------------------------------------


@dataclass(frozen=True)
class InterlaceResult:
    ok: bool
    margin: float  # smallest slack over all inequalities; negative on failure


def interlace_check(g: SignedGraph, subset: Iterable[int], tol: float = 1e-9) -> InterlaceResult:
    sub = induced_subgraph(g, subset)
    lam = graph_spectrum(g).eigenvalues
    mu = graph_spectrum(sub).eigenvalues
    n, m = len(lam), len(mu)
    margin = float("inf")
    for j in range(m):
        margin = min(margin, lam[j] - mu[j], mu[j] - lam[n - m + j])
    return InterlaceResult(margin >= -tol, margin)

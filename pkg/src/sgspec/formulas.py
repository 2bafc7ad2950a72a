"""Closed-form spectra for signed cycles, paths, complete and complete bipartite graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass

FORMULA_TOL = 1e-10


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    balanced: bool
    values: tuple[float, ...]  # descending
    indices: tuple[int, ...]  # generating j for each value


def _cycle_value(n: int, balanced: bool, j: int) -> float:
    if balanced:
        return 2.0 * math.cos(2.0 * math.pi * j / n)
    return 2.0 * math.cos((2 * j + 1) * math.pi / n)


def cycle_spectrum(n: int, balanced: bool) -> CycleSpectrum:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    pairs = sorted(((_cycle_value(n, balanced, j), j) for j in range(n)), key=lambda t: (-t[0], t[1]))
    return CycleSpectrum(n, balanced, tuple(v for v, _ in pairs), tuple(j for _, j in pairs))


def path_spectrum(n: int) -> list[float]:
    """Spectrum of any signed path on n vertices (all signings are switching equivalent)."""
    if n < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {n}")
    return sorted((2.0 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1)), reverse=True)


def complete_spectrum(n: int) -> list[float]:
    """Spectrum of the balanced K_n; negate for the antibalanced one."""
    if n < 2:
        raise ValueError("complete graph spectrum needs n >= 2")
    return [float(n - 1)] + [-1.0] * (n - 1)


def complete_bipartite_spectrum(n1: int, n2: int) -> list[float]:
    if n1 < 1 or n2 < 1:
        raise ValueError("both parts need at least one vertex")
    r = math.sqrt(n1 * n2)
    return [r] + [0.0] * (n1 + n2 - 2) + [-r]


def cycle_simple_eigenvalues(n: int, balanced: bool) -> list[float]:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    if balanced:
        return [2.0, -2.0] if n % 2 == 0 else [2.0]
    return [-2.0] if n % 2 == 1 else []


def cycle_double_eigenvalues(n: int, balanced: bool) -> list[float]:
    """Eigenvalues of multiplicity two, listed by increasing index j."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    if balanced:
        js = range(1, (n + 1) // 2)  # j = 1 .. ceil(n/2) - 1
    else:
        js = range(0, n // 2)  # j = 0 .. ceil((n-1)/2) - 1
    return [_cycle_value(n, balanced, j) for j in js]

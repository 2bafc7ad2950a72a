import math

import numpy as np
import pytest

from sgspec.core import cycle_graph, path_graph
from sgspec.formulas import (
    complete_bipartite_spectrum,
    complete_spectrum,
    cycle_double_eigenvalues,
    cycle_simple_eigenvalues,
    cycle_spectrum,
    path_spectrum,
)
from sgspec.linalg import adjacency, graph_spectrum

R2, R3 = math.sqrt(2), math.sqrt(3)


def eigvalsh_desc(g):
    return np.sort(np.linalg.eigvalsh(adjacency(g).astype(float)))[::-1]


@pytest.mark.parametrize(
    "n, balanced, expected",
    [
        (4, True, [2, 0, 0, -2]),
        (3, False, [1, 1, -2]),
        (6, False, [R3, R3, 0, 0, -R3, -R3]),
    ],
)
def test_cycle_spectrum_examples(n, balanced, expected):
    assert np.allclose(cycle_spectrum(n, balanced).values, expected, atol=1e-12)


def test_cycle_spectrum_indices():
    cs = cycle_spectrum(6, True)
    for j, v in zip(cs.indices, cs.values):
        assert v == pytest.approx(2 * math.cos(2 * math.pi * j / 6))
    assert sorted(cs.indices) == list(range(6))


@pytest.mark.parametrize("n", range(3, 25))
@pytest.mark.parametrize("balanced", [True, False])
def test_cycle_spectrum_vs_numpy(n, balanced):
    vals = cycle_spectrum(n, balanced).values
    assert all(-2 - 1e-12 <= v <= 2 + 1e-12 for v in vals)
    assert np.max(np.abs(np.array(vals) - eigvalsh_desc(cycle_graph(n, balanced)))) < 1e-10


def test_cycle_spectrum_rejects_short():
    with pytest.raises(ValueError):
        cycle_spectrum(2, True)


@pytest.mark.parametrize("n, balanced", [(n, b) for n in range(3, 13) for b in (True, False)])
def test_cycle_symmetry(n, balanced):
    if balanced:
        lam = [2 * math.cos(2 * math.pi * j / n) for j in range(n)]
        assert all(abs(lam[j] - lam[(n - j) % n]) < 1e-12 for j in range(n))
    else:
        lam = [2 * math.cos((2 * j + 1) * math.pi / n) for j in range(n)]
        assert all(abs(lam[j] - lam[n - 1 - j]) < 1e-12 for j in range(n))


def test_path_spectrum():
    assert path_spectrum(1) == pytest.approx([0], abs=1e-15)
    assert path_spectrum(2) == pytest.approx([1, -1])
    assert path_spectrum(3) == pytest.approx([R2, 0, -R2], abs=1e-12)
    with pytest.raises(ValueError):
        path_spectrum(0)


@pytest.mark.parametrize("signs", [(1, 1, 1, 1), (-1, 1, -1, 1), (-1, -1, -1, -1), (1, -1, -1, 1)])
def test_path_spectrum_signature_independent(signs):
    g = path_graph(5, signs)
    assert np.allclose(graph_spectrum(g).eigenvalues, path_spectrum(5), atol=1e-10)


def test_complete_spectra():
    assert complete_spectrum(5) == [4, -1, -1, -1, -1]
    assert complete_bipartite_spectrum(2, 3) == pytest.approx([math.sqrt(6), 0, 0, 0, -math.sqrt(6)])
    assert complete_bipartite_spectrum(1, 1) == pytest.approx([1, -1])


def test_simple_eigenvalues():
    assert cycle_simple_eigenvalues(6, True) == [2, -2]
    assert cycle_simple_eigenvalues(5, True) == [2]
    assert cycle_simple_eigenvalues(5, False) == [-2]
    assert cycle_simple_eigenvalues(4, False) == []


def test_double_eigenvalues():
    assert cycle_double_eigenvalues(3, False) == pytest.approx([1])
    assert cycle_double_eigenvalues(4, True) == pytest.approx([0], abs=1e-15)
    assert cycle_double_eigenvalues(5, True) == pytest.approx(
        [2 * math.cos(2 * math.pi / 5), 2 * math.cos(4 * math.pi / 5)]
    )
    assert cycle_double_eigenvalues(6, True) == pytest.approx([1, -1])
    assert cycle_double_eigenvalues(3, True) == pytest.approx([-1])


@pytest.mark.parametrize("n", range(3, 30))
@pytest.mark.parametrize("balanced", [True, False])
def test_simple_and_double_partition_spectrum(n, balanced):
    simple = cycle_simple_eigenvalues(n, balanced)
    double = cycle_double_eigenvalues(n, balanced)
    assert len(simple) + 2 * len(double) == n
    assert all(abs(a - b) > 1e-9 for a in simple for b in double)
    rebuilt = sorted(simple + double + double, reverse=True)
    assert np.allclose(rebuilt, cycle_spectrum(n, balanced).values, atol=1e-12)

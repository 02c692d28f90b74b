"""Jacobi eigensolver and spectral quantities of the blends.

The solver is cross-checked against numpy's eigensolver on random
symmetric matrices, and against values derived independently: the
spectral radius of the reciprocal-distance matrix of the 3-path is the
largest root of x^3 - 2.25x - 1, isolated by bisection and frozen here.
"""

import numpy as np
import pytest

from hararyspec import (
    build_bundle,
    complete,
    cycle,
    eigenvalue_multiplicity,
    is_transmission_regular,
    path,
    pendant_counts,
    perron_vector,
    rd_alpha,
    rd_alpha_energy,
    rd_alpha_spectrum,
    reciprocal_transmissions,
    spectral_radius,
    star,
    sym_eigen,
)

from conftest import ALPHA_GRID, assert_spectra_close

P3_RHO = 1.6861406616345072  # bisection on the cubic, 200 halvings


def test_diagonal_matrix_sorted():
    spec = sym_eigen(np.diag([3.0, 1.0, 2.0]))
    assert np.array_equal(spec.values, [3.0, 2.0, 1.0])


def test_complete_graph_rd_spectrum():
    spec = sym_eigen(build_bundle(complete(4)).rd)
    assert_spectra_close(spec.values, [3.0, -1.0, -1.0, -1.0], tol=1e-12)


def test_p3_rho_matches_cubic_root():
    assert spectral_radius(path(3), 0.0) == pytest.approx(P3_RHO, abs=1e-12)


def test_random_matrices_match_numpy():
    rng = np.random.default_rng(3)
    for _ in range(40):
        n = int(rng.integers(1, 35))
        m = rng.normal(size=(n, n))
        m = m + m.T
        spec = sym_eigen(m, want_vectors=True)
        ref = np.linalg.eigvalsh(m)[::-1]
        scale = max(1.0, float(np.abs(m).max()))
        assert np.abs(spec.values - ref).max() <= 1e-10 * scale
        # residual and orthonormality of the returned vectors
        assert np.abs(m @ spec.vectors - spec.vectors * spec.values).max() <= 1e-8 * scale
        gram = spec.vectors.T @ spec.vectors
        assert np.abs(gram - np.eye(n)).max() <= 1e-10


def test_trace_identity(catalog):
    for entry in catalog.up_to(5, start=2):
        for alpha in ALPHA_GRID:
            values = entry.eigenvalues(alpha)
            trace = alpha * entry.bundle.transmissions.sum()
            n = entry.bundle.n
            scale = max(1.0, float(np.abs(rd_alpha(entry.bundle, alpha)).max()))
            assert abs(values.sum() - trace) <= 1e-9 * n * scale


def test_descending_order(catalog):
    for entry in catalog.up_to(5, start=2):
        for alpha in (0.0, 0.5, 1.0):
            values = entry.eigenvalues(alpha)
            assert np.all(np.diff(values) <= 1e-15)


def test_asymmetric_input_rejected():
    with pytest.raises(ValueError, match="symmetric"):
        sym_eigen(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ValueError, match="square"):
        sym_eigen(np.zeros((2, 3)))


def test_spectral_radius_examples():
    for alpha in ALPHA_GRID:
        assert spectral_radius(cycle(4), alpha) == pytest.approx(2.5, abs=1e-12)
    assert spectral_radius(complete(4), 0.0) == pytest.approx(3.0, abs=1e-12)


def test_perron_vector_positive_and_normalized(catalog):
    for entry in catalog.up_to(5, start=2):
        for alpha in (0.0, 0.5, 0.75):
            vec = perron_vector(entry.graph, alpha)
            assert np.all(vec > 0)
            assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError, match="alpha < 1"):
        perron_vector(path(3), 1.0)


def test_energy_complete_graph():
    assert rd_alpha_energy(complete(4), 0.0) == pytest.approx(6.0, abs=1e-12)
    assert rd_alpha_energy(complete(4), 0.5) == pytest.approx(3.0, abs=1e-12)


def test_energy_at_alpha_one_is_transmission_deviation(catalog):
    for entry in catalog.up_to(5, start=2):
        g = entry.graph
        tr = reciprocal_transmissions(g)
        expected = float(np.abs(tr - tr.mean()).sum())
        assert rd_alpha_energy(g, 1.0) == pytest.approx(expected, abs=1e-9)
        if is_transmission_regular(g):
            assert rd_alpha_energy(g, 1.0) <= 1e-9


def test_weyl_sandwich_blend_between_rd_shifts(catalog):
    # blend(alpha) = RD + alpha*RL, so every eigenvalue moves by at most
    # alpha*extreme eigenvalues of RL
    for entry in catalog.up_to(6, start=2):
        rl_vals = sym_eigen(entry.bundle.rl).values
        rd_vals = entry.eigenvalues(0.0)
        for alpha in (0.25, 0.5, 0.75):
            blend = entry.eigenvalues(alpha)
            lo = rd_vals + alpha * rl_vals[-1]
            hi = rd_vals + alpha * rl_vals[0]
            assert np.all(blend >= lo - 1e-9)
            assert np.all(blend <= hi + 1e-9)


def test_eigenvalue_transmission_sandwich(catalog):
    # lambda_k(RD) <= lambda_k(blend) <= k-th largest transmission
    for entry in catalog.up_to(6, start=2):
        rd_vals = entry.eigenvalues(0.0)
        tr_sorted = np.sort(entry.bundle.transmissions)[::-1]
        for alpha in ALPHA_GRID:
            blend = entry.eigenvalues(alpha)
            assert np.all(blend >= rd_vals - 1e-9)
            assert np.all(blend <= tr_sorted + 1e-9)


def test_monotone_in_alpha(catalog):
    grid = ALPHA_GRID
    for entry in catalog.up_to(5, start=2):
        regular = is_transmission_regular(entry.graph)
        for lo_a, hi_a in zip(grid, grid[1:]):
            lo_vals = entry.eigenvalues(lo_a)
            hi_vals = entry.eigenvalues(hi_a)
            assert np.all(hi_vals >= lo_vals - 1e-9)
            if regular:
                assert hi_vals[0] == pytest.approx(lo_vals[0], abs=1e-9)
            else:
                assert hi_vals[0] > lo_vals[0] + 1e-10


def test_pendant_multiplicity_rule():
    for g in (path(3), path(5), star(4), star(6)):
        p, q = pendant_counts(g)
        values = rd_alpha_spectrum(g, 0.0).values
        assert eigenvalue_multiplicity(values, -0.5, tol=1e-8) >= p - q


def test_multiplicity_counting():
    values = np.array([2.0, 1.0 + 5e-8, 1.0, 1.0 - 5e-8, -0.5])
    assert eigenvalue_multiplicity(values, 1.0, tol=1e-7) == 3
    assert eigenvalue_multiplicity(values, -0.5, tol=1e-7) == 1
    assert eigenvalue_multiplicity(values, 0.0, tol=1e-7) == 0

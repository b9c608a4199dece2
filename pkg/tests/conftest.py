"""Shared fixtures and the independent quadrature oracle for inner products."""

import numpy as np
import pytest

from ingham import catalog
from ingham.lattice import mat_float


def ambient_l(spec):
    """L as floats (transpose of the stored adjoint)."""
    return np.array(mat_float(spec.l_star)).T


def quadrature_inner_product(spec, config, p, q):
    """Numerically integrate e^{i(lambda_p - lambda_q, x)} over the domain.

    Independent of the closed-form path: works in ambient coordinates,
    parameterizes each parallelogram cell and hands the oscillatory real and
    imaginary parts to scipy's adaptive 2-D quadrature.
    """
    from scipy.integrate import dblquad

    l = ambient_l(spec)
    linv = np.linalg.inv(l)
    lst = l.T
    up = np.array([float(c) for c in spec.us[p.j]]) + np.asarray(p.m, dtype=float)
    uq = np.array([float(c) for c in spec.us[q.j]]) + np.asarray(q.m, dtype=float)
    delta = lst @ (up - uq)
    e1 = linv @ np.array([2 * np.pi, 0.0])
    e2 = linv @ np.array([0.0, 2 * np.pi])
    jac = abs(e1[0] * e2[1] - e1[1] * e2[0])
    total = 0.0j
    for n in config.ns:
        v0 = linv @ (2 * np.pi * np.asarray(n, dtype=float))
        re, _ = dblquad(
            lambda s, t: np.cos(delta @ (v0 + s * e1 + t * e2)), 0, 1, 0, 1,
            epsabs=1e-9, epsrel=1e-9,
        )
        im, _ = dblquad(
            lambda s, t: np.sin(delta @ (v0 + s * e1 + t * e2)), 0, 1, 0, 1,
            epsabs=1e-9, epsrel=1e-9,
        )
        total += jac * (re + 1j * im)
    return total


@pytest.fixture(scope="session")
def catalog_entries():
    """All fixed catalog entries plus one two-square instance."""
    out = {}
    for name in catalog.names():
        out[name] = (
            catalog.get(name, r=1, R=3) if name == "two_square" else catalog.get(name)
        )
    return out

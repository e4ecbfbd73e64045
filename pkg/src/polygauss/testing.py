"""Random instance generators shared by the test suite and the demos."""

import numpy as np

from .core import GaussPoly, GaussTerm
from .linalg import LinearMap, SpdForm
from .polynomial import Polynomial


def random_orthogonal(rng, dim):
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    return q * np.sign(np.diag(r))


def random_spd_form(rng, dim, eig_range=(0.3, 3.0)):
    """SPD form with eigenvalues log-uniform in eig_range."""
    lo, hi = eig_range
    eigs = np.exp(rng.uniform(np.log(lo), np.log(hi), size=dim))
    v = random_orthogonal(rng, dim)
    return SpdForm(v @ np.diag(eigs) @ v.T)


def random_polynomial(rng, dim, max_degree=2, n_monomials=3, scale=1.0):
    coeffs = {}
    for _ in range(n_monomials):
        alpha = tuple(int(k) for k in rng.integers(0, max_degree + 1, size=dim))
        if sum(alpha) > max_degree:
            alpha = tuple(0 for _ in range(dim))
        coeffs[alpha] = coeffs.get(alpha, 0j) + scale * complex(
            rng.normal(), rng.normal()
        )
    poly = Polynomial(dim, coeffs)
    if not poly:
        poly = Polynomial.constant(dim, 1.0)
    return poly


def random_shift(rng, dim, scale=1.0):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    norm = np.linalg.norm(v)
    return v * (scale * rng.uniform(0.2, 1.0) / norm)


def random_gauss_poly(
    rng,
    dim,
    n_terms=2,
    max_degree=2,
    shift_scale=1.0,
    eig_range=(0.3, 3.0),
):
    terms = []
    for _ in range(n_terms):
        terms.append(
            GaussTerm(
                random_polynomial(rng, dim, max_degree),
                random_spd_form(rng, dim, eig_range),
                random_shift(rng, dim, shift_scale),
            )
        )
    return GaussPoly(dim, terms).canonical()


def random_invertible_map(rng, dim, sv_range=(0.5, 2.0)):
    """Well-conditioned map built from random rotations and singular values."""
    u = random_orthogonal(rng, dim)
    v = random_orthogonal(rng, dim)
    sv = rng.uniform(*sv_range, size=dim)
    return LinearMap(u @ np.diag(sv) @ v.T)


def random_points(rng, count, dim, scale=1.0, complex_parts=False):
    pts = scale * rng.normal(size=(count, dim))
    if complex_parts:
        pts = pts + 1j * scale * rng.normal(size=(count, dim))
    return pts

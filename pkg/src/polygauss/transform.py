"""Closed-form Fourier analysis on the polynomial-Gaussian class.

Convention:  F f (xi) = integral of f(x) exp(-2 pi i x . xi) dx.  With the
storage convention of :mod:`polygauss.core` the standard Gaussian
exp(-pi x . x) is its own transform, a bare exponential transforms to

    det(Q)^(-1/2) * exp(b . Q^(-1) b / (4 pi))
        * exp(-pi xi . Q^(-1) xi - i (Q^(-1) b) . xi),

and each monomial factor x^alpha becomes (-2 pi i)^(-|alpha|) times the
corresponding mixed partial of that transformed exponential.  Everything
downstream (inversion, convolution, integrals, inner products) reduces to
these term rules.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import multiindex as mi
from .core import GaussPoly, GaussTerm, coefficient_distance
from .errors import DimensionMismatch
from .linalg import LinearMap
from .polynomial import Polynomial


def _transform_bare_exponential(dim, quad, shift):
    """Transform of exp(-pi x.Qx + b.x) as a single-term function."""
    qinv = quad.inverse()
    const = quad.det ** -0.5 * cmath.exp(complex(shift @ qinv.entries @ shift) / (4.0 * math.pi))
    new_shift = -1j * (qinv.entries @ shift)
    term = GaussTerm(Polynomial.constant(dim, const), qinv, new_shift)
    return GaussPoly(dim, (term,))


def _transform_term(dim, term):
    base = _transform_bare_exponential(dim, term.quad, term.shift)
    # Walk multi-indices in graded order so each derivative of the base
    # Gaussian is one step from an already-computed parent.
    derivs = {mi.zero(dim): base}
    top = term.poly.degree()
    for alpha in mi.indices_up_to(dim, top):
        if sum(alpha) == 0:
            continue
        axis = next(j for j, e in enumerate(alpha) if e)
        parent = alpha[:axis] + (alpha[axis] - 1,) + alpha[axis + 1:]
        derivs[alpha] = derivs[parent]._differentiate_once(axis)
    pieces = []
    for alpha, c in term.poly.coeffs.items():
        scale = c * (1j / (2.0 * math.pi)) ** mi.degree(alpha)
        pieces.extend((scale * derivs[alpha]).terms)
    return pieces


def fourier_transform(f):
    """The transform of f, exact in closed form, in canonical shape."""
    out = []
    for term in f.terms:
        out.extend(_transform_term(f.dim, term))
    return GaussPoly(f.dim, out).canonical()


def inverse_transform(g):
    """The inverse transform, realized as argument negation of the forward one."""
    return fourier_transform(g).compose_linear(LinearMap(-np.eye(g.dim)))


def integral(f):
    """integral of f over R^n, i.e. the transform evaluated at 0."""
    return fourier_transform(f).evaluate(np.zeros(f.dim))


def inner_product(f, g):
    """The L2 pairing: integral of f times conj(g)."""
    if f.dim != g.dim:
        raise DimensionMismatch("function dimensions differ")
    return integral(f * g.conjugate())


def convolve(f, g):
    """Convolution via the spectral product of the two transforms."""
    if f.dim != g.dim:
        raise DimensionMismatch("function dimensions differ")
    return inverse_transform(fourier_transform(f) * fourier_transform(g))


@dataclass(frozen=True)
class RuleCheckReport:
    """Max canonical-coefficient discrepancy for each transform rule."""

    derivative: float
    translation: float
    modulation: float
    change_of_variables: float

    def max_residual(self):
        return max(
            self.derivative, self.translation, self.modulation, self.change_of_variables
        )

    def as_dict(self):
        return {
            "derivative": self.derivative,
            "translation": self.translation,
            "modulation": self.modulation,
            "change_of_variables": self.change_of_variables,
        }


def transform_rules_check(f, alpha, a, b, mapping):
    """Check the four interaction rules symbolically on a concrete instance.

    Each rule is evaluated on both sides and the canonical coefficient
    distance is reported:

      derivative:          F(d^alpha f)     vs (2 pi i)^|alpha| xi^alpha Ff
      translation:         F(f(. - a))      vs exp(-2 pi i xi.a) Ff
      modulation:          F(f exp(-2pi i x.b)) vs Ff(. + b)
      change of variables: F(f o T)         vs |det T|^(-1) Ff o inv(T^t)
    """
    if not isinstance(mapping, LinearMap):
        mapping = LinearMap(mapping)
    fhat = fourier_transform(f)

    lhs = fourier_transform(f.differentiate(alpha))
    rhs = ((2j * math.pi) ** mi.degree(tuple(alpha))) * fhat.monomial_times(alpha)
    d_res = coefficient_distance(lhs, rhs)

    t_res = coefficient_distance(fourier_transform(f.translate(a)), fhat.modulate(a))

    b_arr = np.asarray(b, dtype=complex)
    m_res = coefficient_distance(fourier_transform(f.modulate(b)), fhat.translate(-b_arr))

    lhs = fourier_transform(f.compose_linear(mapping))
    rhs = (1.0 / abs(mapping.det)) * fhat.compose_linear(mapping.inverse_transpose())
    c_res = coefficient_distance(lhs, rhs)

    return RuleCheckReport(d_res, t_res, m_res, c_res)

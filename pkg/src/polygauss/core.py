"""Finite sums of polynomial-times-Gaussian terms and their exact algebra.

A term denotes the function

    x  |->  p(x) * exp(-pi * (x . Q x) + b . x)

with p a complex polynomial, Q symmetric positive definite and b a complex
vector; the dot is the bilinear sum (no conjugation), so evaluating at a
complex argument gives the holomorphic extension directly.  Sums of such
terms are closed under addition, products, conjugation, translation,
modulation, differentiation, monomial multiplication and invertible linear
substitution, and every operation here returns a canonical form: terms
with matching (Q, b) keys merged, negligible coefficients dropped.

With this storage convention the standard Gaussian exp(-pi * x . x) has
Q = identity and b = 0, which keeps the Fourier-transform bookkeeping in
:mod:`polygauss.transform` free of stray pi factors.
"""

import cmath
import math

import numpy as np

from . import multiindex as mi
from .errors import DimensionMismatch, SingularMap
from .linalg import LinearMap, SpdForm
from .polynomial import Polynomial

# Two term keys are "the same" when every entry agrees to this mix of
# absolute and relative tolerance; coefficients below COEFF_DROP_REL of a
# term's largest are discarded after each operation.
MERGE_ABS_TOL = 1e-12
MERGE_REL_TOL = 1e-12
COEFF_DROP_REL = 1e-12


def _as_complex_vector(v, dim):
    arr = np.asarray(v, dtype=complex)
    if arr.shape == ():
        arr = arr.reshape(1)
    if arr.shape != (dim,):
        raise DimensionMismatch(f"vector has shape {arr.shape}, expected ({dim},)")
    out = np.array(arr, dtype=complex)
    out.setflags(write=False)
    return out


def _entries_close(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    tol = MERGE_ABS_TOL + MERGE_REL_TOL * np.maximum(np.abs(a), np.abs(b))
    return bool(np.all(np.abs(a - b) <= tol))


class GaussTerm:
    """One canonical building block: polynomial, SPD form, complex shift."""

    __slots__ = ("poly", "quad", "shift")

    def __init__(self, poly, quad, shift):
        if not isinstance(poly, Polynomial):
            raise TypeError("poly must be a Polynomial")
        if not isinstance(quad, SpdForm):
            raise TypeError("quad must be an SpdForm")
        if poly.dim != quad.dim:
            raise DimensionMismatch("polynomial and quadratic form dimensions differ")
        self.poly = poly
        self.quad = quad
        self.shift = _as_complex_vector(shift, quad.dim)

    @property
    def dim(self):
        return self.quad.dim

    def __repr__(self):
        return f"GaussTerm(dim={self.dim}, poly_terms={len(self.poly.coeffs)})"

    def key_matches(self, other):
        """Whether (quad, shift) agree within the merge tolerance."""
        return _entries_close(self.quad.entries, other.quad.entries) and _entries_close(
            self.shift, other.shift
        )

    def _sort_key(self):
        return (
            tuple(self.quad.entries.ravel()),
            tuple(self.shift.real),
            tuple(self.shift.imag),
        )

    def coefficient_mass(self):
        return sum(abs(c) for c in self.poly.coeffs.values())


class GaussPoly:
    """A finite sum of Gaussian terms on R^n; the empty sum is the zero function."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=()):
        self.dim = int(dim)
        if self.dim < 1:
            raise ValueError("dimension must be a positive integer")
        terms = tuple(terms)
        for t in terms:
            if not isinstance(t, GaussTerm):
                raise TypeError("terms must be GaussTerm instances")
            if t.dim != self.dim:
                raise DimensionMismatch("term dimension does not match function dimension")
        self.terms = terms

    # ----- constructors -------------------------------------------------

    @classmethod
    def from_term(cls, poly, quad, shift=None):
        quad = quad if isinstance(quad, SpdForm) else SpdForm(quad)
        shift = np.zeros(quad.dim, dtype=complex) if shift is None else shift
        poly = poly if isinstance(poly, Polynomial) else Polynomial.constant(quad.dim, poly)
        return cls(quad.dim, (GaussTerm(poly, quad, shift),)).canonical()

    @classmethod
    def gaussian(cls, quad, shift=None, coeff=1.0):
        """coeff * exp(-pi x.Qx + b.x) as a one-term function."""
        quad = quad if isinstance(quad, SpdForm) else SpdForm(quad)
        return cls.from_term(Polynomial.constant(quad.dim, coeff), quad, shift)

    @classmethod
    def standard(cls, dim):
        """The self-dual unit exp(-pi x.x)."""
        return cls.gaussian(SpdForm.identity(dim))

    @classmethod
    def zero(cls, dim):
        return cls(dim, ())

    # ----- basics --------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"GaussPoly(dim={self.dim}, terms={len(self.terms)})"

    def canonical(self):
        """Merge terms with matching (quad, shift) keys and drop dust.

        Evaluation is unchanged up to roundoff at the scale of the
        function.  Terms come out sorted by their raw key entries so
        identical inputs always produce identical output.
        """
        groups = []  # [quad, shift, poly]
        for t in self.terms:
            poly = t.poly.drop_small(COEFF_DROP_REL)
            if not poly:
                continue
            for g in groups:
                if _entries_close(g[0].entries, t.quad.entries) and _entries_close(g[1], t.shift):
                    g[2] = g[2] + poly
                    break
            else:
                groups.append([t.quad, t.shift, poly])
        out = []
        for quad, shift, poly in groups:
            poly = poly.drop_small(COEFF_DROP_REL)
            if poly:
                out.append(GaussTerm(poly, quad, shift))
        out.sort(key=GaussTerm._sort_key)
        return GaussPoly(self.dim, out)

    # ----- evaluation ----------------------------------------------------

    def evaluate_many(self, points):
        """Evaluate at an (m, n) array of real or complex points."""
        pts = np.asarray(points, dtype=complex)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise DimensionMismatch(f"points must have shape (m, {self.dim})")
        out = np.zeros(pts.shape[0], dtype=complex)
        for t in self.terms:
            expo = -math.pi * np.einsum("ij,jk,ik->i", pts, t.quad.entries, pts) + pts @ t.shift
            out += t.poly.evaluate_many(pts) * np.exp(expo)
        return out

    def evaluate(self, point):
        """Value at one point; complex arguments give the holomorphic extension."""
        arr = np.asarray(point, dtype=complex)
        if arr.shape == ():
            arr = arr.reshape(1)
        if arr.shape != (self.dim,):
            raise DimensionMismatch(f"point has shape {arr.shape}, expected ({self.dim},)")
        return complex(self.evaluate_many(arr[None, :])[0])

    # ----- linear structure ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch("function dimensions differ")
        return GaussPoly(self.dim, self.terms + other.terms).canonical()

    def __neg__(self):
        return GaussPoly(
            self.dim, tuple(GaussTerm(-t.poly, t.quad, t.shift) for t in self.terms)
        )

    def __sub__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GaussPoly):
            if other.dim != self.dim:
                raise DimensionMismatch("function dimensions differ")
            out = []
            for a in self.terms:
                for b in other.terms:
                    out.append(
                        GaussTerm(a.poly * b.poly, a.quad + b.quad, a.shift + b.shift)
                    )
            return GaussPoly(self.dim, out).canonical()
        scalar = complex(other)
        return GaussPoly(
            self.dim, tuple(GaussTerm(t.poly * scalar, t.quad, t.shift) for t in self.terms)
        ).canonical()

    def __rmul__(self, other):
        return self.__mul__(other)

    # ----- the term calculus ----------------------------------------------

    def conjugate(self):
        """Complex conjugate as a function on R^n.

        Coefficients and shift are conjugated; the quadratic form is real
        and stays put.  The identity conj(f)(x) = conj(f(x)) holds for
        real x only.
        """
        return GaussPoly(
            self.dim,
            tuple(
                GaussTerm(t.poly.conjugate(), t.quad, np.conj(t.shift)) for t in self.terms
            ),
        ).canonical()

    def translate(self, a):
        """The shifted function x |-> f(x - a); a may be complex.

        Completing the square moves the whole effect into the polynomial
        and the linear shift: quad is unchanged, shift gains 2*pi*Q*a, and
        the constant exp(-pi a.Qa - b.a) folds into the coefficients.
        """
        a = _as_complex_vector(a, self.dim)
        out = []
        for t in self.terms:
            qa = t.quad.entries @ a
            const = cmath.exp(-math.pi * complex(a @ qa) - complex(t.shift @ a))
            poly = t.poly.substitute_affine(None, -a) * const
            out.append(GaussTerm(poly, t.quad, t.shift + 2.0 * math.pi * qa))
        return GaussPoly(self.dim, out).canonical()

    def modulate(self, b):
        """Multiply by the character exp(-2 pi i x . b)."""
        b = _as_complex_vector(b, self.dim)
        delta = -2j * math.pi * b
        return GaussPoly(
            self.dim,
            tuple(GaussTerm(t.poly, t.quad, t.shift + delta) for t in self.terms),
        ).canonical()

    def _differentiate_once(self, axis):
        out = []
        for t in self.terms:
            # d/dx_j of the exponent is the degree-1 polynomial b_j - 2 pi (Qx)_j.
            mult = {mi.zero(self.dim): complex(t.shift[axis])}
            row = t.quad.entries[axis]
            for k in range(self.dim):
                if row[k] != 0.0:
                    key = mi.unit(self.dim, k)
                    mult[key] = mult.get(key, 0j) - 2.0 * math.pi * row[k]
            new_poly = t.poly.differentiate(axis) + t.poly * Polynomial(self.dim, mult)
            out.append(GaussTerm(new_poly, t.quad, t.shift))
        return GaussPoly(self.dim, out).canonical()

    def differentiate(self, alpha):
        """Mixed partial derivative of multi-index order alpha."""
        alpha = mi.validate(alpha, self.dim)
        result = self
        for axis, reps in enumerate(alpha):
            for _ in range(reps):
                result = result._differentiate_once(axis)
        return result if result is not self else self.canonical()

    def monomial_times(self, alpha):
        """Multiply by the monomial x^alpha."""
        alpha = mi.validate(alpha, self.dim)
        return GaussPoly(
            self.dim,
            tuple(GaussTerm(t.poly.monomial_times(alpha), t.quad, t.shift) for t in self.terms),
        ).canonical()

    def compose_linear(self, mapping):
        """The composition x |-> f(T x) for an invertible real map T."""
        if not isinstance(mapping, LinearMap):
            mapping = LinearMap(mapping)
        if mapping.dim != self.dim:
            raise DimensionMismatch("map dimension does not match function dimension")
        if not mapping.is_invertible():
            raise SingularMap("composition requires an invertible map")
        T = mapping.entries
        out = []
        for t in self.terms:
            poly = t.poly.substitute_affine(T, None)
            quad = SpdForm(T.T @ t.quad.entries @ T)
            out.append(GaussTerm(poly, quad, T.T @ t.shift))
        return GaussPoly(self.dim, out).canonical()


def coefficient_distance(f, g):
    """How far apart two functions are, coefficient by coefficient.

    Both inputs are put in canonical form; terms are matched by their
    (quad, shift) keys within the merge tolerance.  The distance is the
    largest absolute coefficient difference over matched terms plus the
    total coefficient mass of any unmatched terms, so 0 means identical
    canonical forms.
    """
    if f.dim != g.dim:
        raise DimensionMismatch("function dimensions differ")
    fc = f.canonical()
    gc = g.canonical()
    taken = [False] * len(gc.terms)
    worst = 0.0
    unmatched = 0.0
    for t in fc.terms:
        hit = None
        for j, u in enumerate(gc.terms):
            if not taken[j] and t.key_matches(u):
                hit = j
                break
        if hit is None:
            unmatched += t.coefficient_mass()
            continue
        taken[hit] = True
        u = gc.terms[hit]
        for alpha in set(t.poly.coeffs) | set(u.poly.coeffs):
            diff = abs(t.poly.coeffs.get(alpha, 0j) - u.poly.coeffs.get(alpha, 0j))
            if diff > worst:
                worst = diff
    for j, u in enumerate(gc.terms):
        if not taken[j]:
            unmatched += u.coefficient_mass()
    return worst + unmatched

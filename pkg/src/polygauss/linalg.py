"""Dense real linear algebra: SPD quadratic forms and changes of variables.

Positive-definiteness is certified by a successful Cholesky factorization
with all pivots above a relative floor; the factor is cached and reused
for determinants and inverses (two triangular solves per column), so no
eigendecomposition is ever needed.
"""

import numpy as np
from scipy.linalg import solve_triangular

from .errors import DimensionMismatch, SingularMap, SpdError

PIVOT_REL_TOL = 1e-12
SINGULAR_REL_TOL = 1e-12


def _freeze(a):
    a.setflags(write=False)
    return a


class SpdForm:
    """A symmetric positive-definite quadratic form on R^n.

    Parameters
    ----------
    entries : array_like
        n-by-n real matrix.  Must be symmetric to within 1e-12 relative;
        the stored copy is symmetrized exactly.

    Raises
    ------
    SpdError
        If the matrix is not square, not symmetric, or any Cholesky pivot
        falls below ``PIVOT_REL_TOL`` times the largest diagonal entry.
    """

    __slots__ = ("dim", "entries", "chol", "det", "_inverse")

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise SpdError(f"quadratic form must be a square matrix, got shape {a.shape}")
        scale = np.max(np.abs(a)) if a.size else 0.0
        if scale == 0.0:
            raise SpdError("quadratic form is identically zero")
        if np.max(np.abs(a - a.T)) > 1e-12 * scale:
            raise SpdError("quadratic form matrix is not symmetric")
        a = (a + a.T) / 2.0 + 0.0  # exact symmetry, no negative zeros
        try:
            L = np.linalg.cholesky(a)
        except np.linalg.LinAlgError:
            raise SpdError("matrix is not positive definite") from None
        pivots = np.diag(L) ** 2
        if np.min(pivots) <= PIVOT_REL_TOL * np.max(np.diag(a)):
            raise SpdError("matrix is numerically semidefinite (pivot below tolerance)")
        self.dim = a.shape[0]
        self.entries = _freeze(a)
        self.chol = _freeze(L)
        self.det = float(np.prod(np.diag(L)) ** 2)
        self._inverse = None

    def __repr__(self):
        return f"SpdForm(dim={self.dim}, det={self.det:.6g})"

    def inverse(self):
        """The inverse form, computed from the cached Cholesky factor."""
        if self._inverse is None:
            eye = np.eye(self.dim)
            y = solve_triangular(self.chol, eye, lower=True)
            inv = solve_triangular(self.chol.T, y, lower=False)
            self._inverse = SpdForm((inv + inv.T) / 2.0)
        return self._inverse

    def apply(self, v):
        """Matrix-vector product; accepts complex vectors."""
        return self.entries @ np.asarray(v)

    def bilinear(self, x, y=None):
        """The bilinear value x . A y (no conjugation), defaulting y = x."""
        x = np.asarray(x)
        y = x if y is None else np.asarray(y)
        return complex(x @ self.entries @ y)

    def eigen_lower_bound(self):
        """A positive lower bound on the smallest eigenvalue.

        Derived from the factorization: det(A) divided by an upper bound
        on the product of the remaining eigenvalues.  Conservative but
        cheap, and safe to use for quadrature tail estimates.
        """
        if self.dim == 1:
            return float(self.entries[0, 0])
        lam_max = self.dim * float(np.max(np.abs(self.entries)))
        return self.det / lam_max ** (self.dim - 1)

    def __add__(self, other):
        if not isinstance(other, SpdForm):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch("quadratic form dimensions differ")
        return SpdForm(self.entries + other.entries)

    def scaled(self, factor):
        if factor <= 0:
            raise SpdError("scale factor must be positive")
        return SpdForm(factor * self.entries)

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim))


class LinearMap:
    """A real linear map on R^n with cached determinant and companions."""

    __slots__ = ("dim", "entries", "det", "_inverse", "_transpose")

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DimensionMismatch(f"linear map must be a square matrix, got shape {a.shape}")
        self.dim = a.shape[0]
        self.entries = _freeze(a)
        self.det = float(np.linalg.det(a))
        self._inverse = None
        self._transpose = None

    def __repr__(self):
        return f"LinearMap(dim={self.dim}, det={self.det:.6g})"

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim))

    def is_invertible(self):
        scale = float(np.max(np.abs(self.entries)))
        if scale == 0.0:
            return False
        return abs(self.det) >= SINGULAR_REL_TOL * scale ** self.dim

    def inverse(self):
        if not self.is_invertible():
            raise SingularMap("linear map is singular at working precision")
        if self._inverse is None:
            self._inverse = LinearMap(np.linalg.inv(self.entries))
        return self._inverse

    def transpose(self):
        if self._transpose is None:
            self._transpose = LinearMap(self.entries.T)
        return self._transpose

    def inverse_transpose(self):
        """The frequency-side companion map, inv(transpose)."""
        return self.inverse().transpose()

    def apply(self, v):
        return self.entries @ np.asarray(v)

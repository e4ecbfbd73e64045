import numpy as np
import pytest

from polygauss import LinearMap, SingularMap, SpdError, SpdForm
from polygauss.testing import random_spd_form


def test_spd_rejects_asymmetric():
    with pytest.raises(SpdError):
        SpdForm([[1.0, 0.5], [0.0, 1.0]])


def test_spd_rejects_indefinite():
    with pytest.raises(SpdError):
        SpdForm([[1.0, 0.0], [0.0, -1.0]])
    with pytest.raises(SpdError):
        SpdForm([[-1.0]])


def test_spd_rejects_semidefinite_pivot():
    with pytest.raises(SpdError):
        SpdForm([[1.0, 1.0], [1.0, 1.0]])


def test_det_matches_factor_diagonal(rng):
    for _ in range(20):
        q = random_spd_form(rng, 3, eig_range=(0.2, 20.0))
        ref = np.linalg.det(q.entries)
        assert q.det == pytest.approx(ref, rel=1e-12)
        assert q.det == pytest.approx(np.prod(np.diag(q.chol)) ** 2, rel=1e-12)


def test_inverse_from_factorization(rng):
    q = random_spd_form(rng, 3, eig_range=(0.5, 5.0))
    inv = q.inverse()
    assert np.allclose(q.entries @ inv.entries, np.eye(3), atol=1e-12)
    assert q.inverse() is inv  # cached


def test_eigen_lower_bound_is_a_lower_bound(rng):
    for dim in (1, 2, 3):
        for _ in range(20):
            q = random_spd_form(rng, dim, eig_range=(0.1, 50.0))
            lam_min = float(np.linalg.eigvalsh(q.entries)[0])
            bound = q.eigen_lower_bound()
            assert 0.0 < bound <= lam_min * (1 + 1e-12)


def test_spd_addition():
    a = SpdForm([[2.0, 0.0], [0.0, 1.0]])
    b = SpdForm(np.eye(2))
    assert np.allclose((a + b).entries, [[3.0, 0.0], [0.0, 2.0]])


def test_bilinear_is_unconjugated():
    q = SpdForm([[1.0]])
    assert q.bilinear(np.array([1j])) == pytest.approx(-1.0)


def test_linear_map_transpose_identity(rng):
    # T(v).w == v.T^t(w) on random vectors
    t = LinearMap(rng.normal(size=(3, 3)))
    for _ in range(10):
        v = rng.normal(size=3)
        w = rng.normal(size=3)
        assert t.apply(v) @ w == pytest.approx(v @ t.transpose().apply(w), rel=1e-12, abs=1e-12)


def test_singular_map_detected():
    t = LinearMap([[1.0, 2.0], [2.0, 4.0]])
    assert not t.is_invertible()
    with pytest.raises(SingularMap):
        t.inverse()
    assert not LinearMap(np.zeros((2, 2))).is_invertible()


def test_inverse_transpose():
    t = LinearMap([[2.0, 1.0], [0.0, 1.0]])
    tilde = t.inverse_transpose()
    assert np.allclose(tilde.entries, np.linalg.inv(t.entries).T)

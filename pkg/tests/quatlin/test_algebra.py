"""Tests for quaternion arithmetic and the complexification of H^2."""

import numpy as np
import pytest

from src.common.exceptions import QuaternionError
from src.quatlin import Quaternion, QMat2, QVec2, apply_j, complexify, decomplexify, embed_qmat, qmul
from src.quatlin import algebra


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(7)


class TestQuaternion:
    """Tests for scalar quaternion products."""

    def test_i_times_j(self):
        """i*j equals k."""
        assert qmul(Quaternion(x=1.0), Quaternion(y=1.0)) == Quaternion(z=1.0)

    def test_j_times_i(self):
        """j*i equals -k."""
        assert qmul(Quaternion(y=1.0), Quaternion(x=1.0)) == Quaternion(z=-1.0)

    def test_inverse(self):
        """q * q^-1 is one for q = 1 + 2i - j."""
        q = Quaternion(1.0, 2.0, -1.0, 0.0)
        product = (q * q.inverse()).as_array()
        np.testing.assert_allclose(product, [1.0, 0.0, 0.0, 0.0], atol=1e-15)
        assert abs(q.norm() * q.inverse().norm() - 1.0) < 1e-12

    def test_zero_inverse_raises(self):
        """Inverting zero raises QuaternionError."""
        with pytest.raises(QuaternionError):
            Quaternion().inverse()

    def test_associativity(self, rng):
        """Random triples associate to machine precision."""
        a, b, c = rng.normal(size=(3, 100, 4))
        left = algebra.hamilton(algebra.hamilton(a, b), c)
        right = algebra.hamilton(a, algebra.hamilton(b, c))
        np.testing.assert_allclose(left, right, atol=1e-12)

    def test_pair_roundtrip(self):
        """alpha + j beta splitting matches the component layout."""
        q = Quaternion.from_pair(1 + 2j, 3 - 4j)
        assert q == Quaternion(1.0, 2.0, 3.0, 4.0)
        assert q.pair() == (1 + 2j, 3 - 4j)


class TestModule:
    """Tests for H^2 vectors and 2x2 matrices."""

    def test_right_action(self, rng):
        """(v p) q equals v (p q)."""
        v = QVec2.from_array(rng.normal(size=(2, 4)))
        p = Quaternion.from_array(rng.normal(size=4))
        q = Quaternion.from_array(rng.normal(size=4))
        np.testing.assert_allclose(v.scale(p).scale(q).as_array(), v.scale(p * q).as_array(), atol=1e-12)

    def test_matrix_action(self, rng):
        """(MN)v equals M(Nv)."""
        m = QMat2.from_array(rng.normal(size=(2, 2, 4)))
        n = QMat2.from_array(rng.normal(size=(2, 2, 4)))
        v = QVec2.from_array(rng.normal(size=(2, 4)))
        np.testing.assert_allclose((m @ n @ v).as_array(), (m @ (n @ v)).as_array(), atol=1e-12)

    def test_chart_conjugate_matches_products(self, rng):
        """chart_conjugate equals T x T^-1 with T = [[1, f], [0, 1]]."""
        f = rng.normal(size=4)
        x = rng.normal(size=(2, 2, 4))
        zero = np.zeros(4)
        t = algebra.qmat(algebra.ONE, f, zero, algebra.ONE)
        t_inv = algebra.qmat(algebra.ONE, -f, zero, algebra.ONE)
        expected = algebra.qmat_mul(algebra.qmat_mul(t, x), t_inv)
        np.testing.assert_allclose(algebra.chart_conjugate(f, x), expected, atol=1e-12)


class TestComplexification:
    """Tests for complexify, embed_qmat and apply_j."""

    def test_complexify_example(self):
        """(1 + 2j, i) maps to (1, 2, i, 0)."""
        v = QVec2(Quaternion(1.0, 0.0, 2.0, 0.0), Quaternion(x=1.0))
        np.testing.assert_allclose(complexify(v), [1.0, 2.0, 1j, 0.0])

    def test_complexify_j(self):
        """(j, 0) maps to (0, 1, 0, 0)."""
        v = QVec2(Quaternion(y=1.0), Quaternion())
        np.testing.assert_allclose(complexify(v), [0.0, 1.0, 0.0, 0.0])

    def test_complex_linearity(self, rng):
        """Right multiplication by i becomes multiplication by i."""
        v = rng.normal(size=(10, 2, 4))
        vi = algebra.qvec_scale(v, algebra.I)
        np.testing.assert_allclose(complexify(vi), 1j * complexify(v), atol=1e-15)

    def test_roundtrip(self, rng):
        """decomplexify inverts complexify."""
        v = rng.normal(size=(10, 2, 4))
        np.testing.assert_allclose(decomplexify(complexify(v)), v, atol=1e-15)

    def test_identity_embedding(self):
        """The identity embeds as the 4x4 identity."""
        np.testing.assert_allclose(embed_qmat(QMat2.identity()), np.eye(4))

    def test_diag_j_embedding(self):
        """diag(j, j) embeds as [[0, -1], [1, 0]] blocks."""
        j, zero = Quaternion(y=1.0), Quaternion()
        expected = np.kron(np.eye(2), np.array([[0.0, -1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(embed_qmat(QMat2(j, zero, zero, j)), expected)

    def test_embedding_homomorphism(self, rng):
        """embed(M) embed(N) equals embed(MN)."""
        m = rng.normal(size=(20, 2, 2, 4))
        n = rng.normal(size=(20, 2, 2, 4))
        np.testing.assert_allclose(
            embed_qmat(m) @ embed_qmat(n), embed_qmat(algebra.qmat_mul(m, n)), atol=1e-12
        )

    def test_embedding_matches_action(self, rng):
        """embed(M) acting on complexify(v) equals complexify(Mv)."""
        m = rng.normal(size=(20, 2, 2, 4))
        v = rng.normal(size=(20, 2, 4))
        lhs = np.einsum("...ij,...j->...i", embed_qmat(m), complexify(v))
        np.testing.assert_allclose(lhs, complexify(algebra.qmat_apply(m, v)), atol=1e-12)

    def test_apply_j_example(self):
        """(1, 0, 0, 0) maps to (0, 1, 0, 0)."""
        np.testing.assert_allclose(apply_j(np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)), [0, 1, 0, 0])

    def test_apply_j_squared(self, rng):
        """apply_j twice is minus the identity."""
        z = rng.normal(size=(10, 4)) + 1j * rng.normal(size=(10, 4))
        np.testing.assert_allclose(apply_j(apply_j(z)), -z, atol=1e-15)

    def test_apply_j_matches_right_multiplication(self, rng):
        """apply_j realizes v -> v j."""
        v = rng.normal(size=(10, 2, 4))
        np.testing.assert_allclose(
            apply_j(complexify(v)), complexify(algebra.qvec_scale(v, algebra.J)), atol=1e-14
        )

    def test_apply_j_commutes_with_embedding(self, rng):
        """Right multiplication by j commutes with quaternionic matrices."""
        m = rng.normal(size=(10, 2, 2, 4))
        z = rng.normal(size=(10, 4)) + 1j * rng.normal(size=(10, 4))
        em = embed_qmat(m)
        lhs = apply_j(np.einsum("...ij,...j->...i", em, z))
        rhs = np.einsum("...ij,...j->...i", em, apply_j(z))
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_unit_diagonal_is_unitary(self, rng):
        """Unit diagonal quaternionic matrices embed as unitary matrices."""
        a = rng.normal(size=4)
        b = rng.normal(size=4)
        zero = np.zeros(4)
        m = algebra.qmat(a / np.linalg.norm(a), zero, zero, b / np.linalg.norm(b))
        u = embed_qmat(m)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-10)

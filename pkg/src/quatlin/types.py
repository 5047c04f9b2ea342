"""Value types for single quaternions, H^2 vectors and 2x2 quaternionic matrices.

Grids of these live in plain numpy arrays (see ``algebra``); the classes
here are the scalar API and convert to and from those arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra

CVec4 = np.ndarray  # shape (..., 4), complex
CMat4 = np.ndarray  # shape (..., 4, 4), complex


@dataclass(frozen=True)
class Quaternion:
    """w + xi + yj + zk."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, q: np.ndarray) -> Quaternion:
        w, x, y, z = (float(c) for c in np.asarray(q, dtype=float))
        return cls(w, x, y, z)

    @classmethod
    def from_pair(cls, alpha: complex, beta: complex = 0.0) -> Quaternion:
        """alpha + j beta."""
        return cls.from_array(algebra.from_pair(np.asarray(alpha), beta))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def conj(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return float(algebra.qnorm(self.as_array()))

    def inverse(self) -> Quaternion:
        return Quaternion.from_array(algebra.qinv(self.as_array()))

    def pair(self) -> tuple[complex, complex]:
        alpha, beta = algebra.to_pair(self.as_array())
        return complex(alpha), complex(beta)

    def __mul__(self, other: Quaternion | float) -> Quaternion:
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return Quaternion.from_array(self.as_array() * float(other))

    def __rmul__(self, other: float) -> Quaternion:
        return Quaternion.from_array(self.as_array() * float(other))

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion.from_array(self.as_array() + other.as_array())

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion.from_array(self.as_array() - other.as_array())

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)


@dataclass(frozen=True)
class QVec2:
    """Column vector (a, b) of the right quaternionic module H^2."""

    a: Quaternion
    b: Quaternion

    @classmethod
    def from_array(cls, v: np.ndarray) -> QVec2:
        v = np.asarray(v, dtype=float)
        return cls(Quaternion.from_array(v[0]), Quaternion.from_array(v[1]))

    def as_array(self) -> np.ndarray:
        return algebra.qvec(self.a.as_array(), self.b.as_array())

    def scale(self, q: Quaternion) -> QVec2:
        """Right scalar multiplication v * q."""
        return QVec2(self.a * q, self.b * q)


@dataclass(frozen=True)
class QMat2:
    """2x2 quaternionic matrix acting on QVec2 by left multiplication."""

    m11: Quaternion
    m12: Quaternion
    m21: Quaternion
    m22: Quaternion

    @classmethod
    def identity(cls) -> QMat2:
        one, zero = Quaternion(1.0), Quaternion()
        return cls(one, zero, zero, one)

    @classmethod
    def from_array(cls, m: np.ndarray) -> QMat2:
        m = np.asarray(m, dtype=float)
        return cls(*(Quaternion.from_array(m[r, c]) for r in range(2) for c in range(2)))

    def as_array(self) -> np.ndarray:
        return algebra.qmat(*(q.as_array() for q in (self.m11, self.m12, self.m21, self.m22)))

    def __matmul__(self, other: QMat2 | QVec2) -> QMat2 | QVec2:
        if isinstance(other, QVec2):
            return QVec2.from_array(algebra.qmat_apply(self.as_array(), other.as_array()))
        return QMat2.from_array(algebra.qmat_mul(self.as_array(), other.as_array()))


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a*b."""
    return Quaternion.from_array(algebra.hamilton(a.as_array(), b.as_array()))


def complexify(v: QVec2 | np.ndarray) -> CVec4:
    """(a, b) in H^2 to (alpha_a, beta_a, alpha_b, beta_b) in C^4."""
    array = v.as_array() if isinstance(v, QVec2) else v
    return algebra.complexify(array)


def decomplexify(z: CVec4) -> np.ndarray:
    """C^4 back to H^2 arrays."""
    return algebra.decomplexify(z)


def embed_qmat(m: QMat2 | np.ndarray) -> CMat4:
    """Left multiplication by m as a complex 4x4 matrix."""
    array = m.as_array() if isinstance(m, QMat2) else m
    return algebra.embed_qmat(array)


def apply_j(z: CVec4) -> CVec4:
    """Right multiplication by j on C^4."""
    return algebra.apply_j(z)

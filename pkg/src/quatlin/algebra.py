"""Vectorized quaternion algebra on numpy arrays.

Array conventions (trailing axes):

* quaternion ``(..., 4)`` real, components ``(w, x, y, z)`` of ``w + xi + yj + zk``
* vector of the right module H^2 ``(..., 2, 4)``
* 2x2 quaternionic matrix ``(..., 2, 2, 4)`` acting by left multiplication
* complexified vector ``(..., 4)`` complex and matrix ``(..., 4, 4)`` complex

Every quaternion is split as ``q = alpha + j beta`` with alpha, beta in
span{1, i}; then ``alpha = w + i x`` and ``beta = y - i z``.
"""

import numpy as np

from src.common.exceptions import QuaternionError

ONE = np.array([1.0, 0.0, 0.0, 0.0])
I = np.array([0.0, 1.0, 0.0, 0.0])  # noqa: E741
J = np.array([0.0, 0.0, 1.0, 0.0])
K = np.array([0.0, 0.0, 0.0, 1.0])

# right multiplication by j on one complexified slot: (alpha, beta) -> (-conj beta, conj alpha)
_J_BLOCK = np.array([[0.0, -1.0], [1.0, 0.0]])
J_MATRIX = np.kron(np.eye(2), _J_BLOCK)


def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of broadcastable quaternion arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def qconj(q: np.ndarray) -> np.ndarray:
    """Quaternionic conjugate."""
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def qnorm2(q: np.ndarray) -> np.ndarray:
    """Squared norm."""
    return np.sum(np.asarray(q, dtype=float) ** 2, axis=-1)


def qnorm(q: np.ndarray) -> np.ndarray:
    """Euclidean norm."""
    return np.sqrt(qnorm2(q))


def qinv(q: np.ndarray) -> np.ndarray:
    """Inverse; raises on exact zeros (callers mask degenerate points first)."""
    n2 = qnorm2(q)
    if np.any(n2 == 0.0):
        raise QuaternionError("Cannot invert the zero quaternion", {"zeros": int(np.sum(n2 == 0.0))})
    return qconj(q) / n2[..., None]


def qreal(q: np.ndarray) -> np.ndarray:
    """Real part."""
    return np.asarray(q, dtype=float)[..., 0]


def qimag(q: np.ndarray) -> np.ndarray:
    """Imaginary part as a 3-vector in the (i, j, k) basis."""
    return np.asarray(q, dtype=float)[..., 1:]


def from_imag(v: np.ndarray) -> np.ndarray:
    """Imaginary quaternion from a 3-vector."""
    v = np.asarray(v, dtype=float)
    return np.concatenate([np.zeros(v.shape[:-1] + (1,)), v], axis=-1)


def from_scalar(r: np.ndarray) -> np.ndarray:
    """Real quaternion array from a real array."""
    r = np.asarray(r, dtype=float)
    out = np.zeros(r.shape + (4,))
    out[..., 0] = r
    return out


def to_pair(q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split q = alpha + j beta into complex arrays (alpha, beta)."""
    q = np.asarray(q, dtype=float)
    alpha = q[..., 0] + 1j * q[..., 1]
    beta = q[..., 2] - 1j * q[..., 3]
    return alpha, beta


def from_pair(alpha: np.ndarray, beta: np.ndarray | complex = 0.0) -> np.ndarray:
    """Quaternion alpha + j beta from complex arrays."""
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.broadcast_to(np.asarray(beta, dtype=complex), alpha.shape)
    return np.stack([alpha.real, alpha.imag, beta.real, -beta.imag], axis=-1)


def quat_block(q: np.ndarray) -> np.ndarray:
    """2x2 complex matrix of left multiplication by q on (alpha, beta)."""
    alpha, beta = to_pair(q)
    return np.stack(
        [
            np.stack([alpha, -np.conj(beta)], axis=-1),
            np.stack([beta, np.conj(alpha)], axis=-1),
        ],
        axis=-2,
    )


def qvec(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Stack two quaternion arrays into an H^2 vector array."""
    a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    return np.stack([a, b], axis=-2)


def qmat(a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> np.ndarray:
    """2x2 quaternionic matrix array [[a, b], [c, d]]."""
    a, b, c, d = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (a, b, c, d)))
    return np.stack([np.stack([a, b], axis=-2), np.stack([c, d], axis=-2)], axis=-3)


def qmat_identity(shape: tuple[int, ...] = ()) -> np.ndarray:
    """Identity matrices of the given batch shape."""
    one = np.broadcast_to(ONE, shape + (4,))
    zero = np.zeros(shape + (4,))
    return qmat(one, zero, zero, one)


def qmat_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Product of 2x2 quaternionic matrix arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    rows = []
    for r in range(2):
        cols = []
        for c in range(2):
            cols.append(hamilton(x[..., r, 0, :], y[..., 0, c, :]) + hamilton(x[..., r, 1, :], y[..., 1, c, :]))
        rows.append(np.stack(cols, axis=-2))
    return np.stack(rows, axis=-3)


def qmat_apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Left action of a 2x2 quaternionic matrix on an H^2 vector."""
    m = np.asarray(m, dtype=float)
    v = np.asarray(v, dtype=float)
    return qvec(
        hamilton(m[..., 0, 0, :], v[..., 0, :]) + hamilton(m[..., 0, 1, :], v[..., 1, :]),
        hamilton(m[..., 1, 0, :], v[..., 0, :]) + hamilton(m[..., 1, 1, :], v[..., 1, :]),
    )


def qvec_scale(v: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Right scalar action v * q."""
    v = np.asarray(v, dtype=float)
    q = np.asarray(q, dtype=float)
    return qvec(hamilton(v[..., 0, :], q), hamilton(v[..., 1, :], q))


def qmat_scale_left(q: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Entrywise left multiplication q * m."""
    q = np.asarray(q, dtype=float)[..., None, None, :]
    return hamilton(q, m)


def qmat_norm(m: np.ndarray) -> np.ndarray:
    """Frobenius norm of quaternionic matrices over the trailing three axes."""
    return np.sqrt(np.sum(np.asarray(m, dtype=float) ** 2, axis=(-3, -2, -1)))


def quarter_real_trace(m: np.ndarray) -> np.ndarray:
    """One quarter of the real trace of the R-linear map, i.e. Re(m11 + m22)."""
    m = np.asarray(m, dtype=float)
    return m[..., 0, 0, 0] + m[..., 1, 1, 0]


def chart_conjugate(f: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Ad([[1, f], [0, 1]]) applied to x, entry by entry.

    With T = [[1, f], [0, 1]] and x = [[a, b], [c, d]] the result is
    [[a + fc, b + fd - (a + fc) f], [c, d - cf]].
    """
    x = np.asarray(x, dtype=float)
    a, b = x[..., 0, 0, :], x[..., 0, 1, :]
    c, d = x[..., 1, 0, :], x[..., 1, 1, :]
    top_left = a + hamilton(f, c)
    top_right = b + hamilton(f, d) - hamilton(top_left, f)
    return qmat(top_left, top_right, c, d - hamilton(c, f))


def complexify(v: np.ndarray) -> np.ndarray:
    """H^2 vectors to C^4: each slot q = alpha + j beta contributes (alpha, beta)."""
    alpha, beta = to_pair(v)
    return np.stack([alpha[..., 0], beta[..., 0], alpha[..., 1], beta[..., 1]], axis=-1)


def decomplexify(z: np.ndarray) -> np.ndarray:
    """Inverse of complexify."""
    z = np.asarray(z, dtype=complex)
    return qvec(from_pair(z[..., 0], z[..., 1]), from_pair(z[..., 2], z[..., 3]))


def embed_qmat(m: np.ndarray) -> np.ndarray:
    """Complex 4x4 matrix of a quaternionic 2x2 matrix acting on complexified vectors."""
    blocks = quat_block(m)  # (..., 2, 2, 2, 2): row slot, col slot, block row, block col
    out = np.moveaxis(blocks, -2, -3)  # (..., row slot, block row, col slot, block col)
    return out.reshape(out.shape[:-4] + (4, 4))


def apply_j(z: np.ndarray) -> np.ndarray:
    """Right multiplication by j on complexified vectors (antilinear)."""
    z = np.asarray(z, dtype=complex)
    return np.conj(z) @ J_MATRIX.T


def conjugate_by_j(m: np.ndarray) -> np.ndarray:
    """The operator j^-1 m j on C^4 for complex matrices m (C conj(m) C^-1)."""
    m = np.asarray(m, dtype=complex)
    return J_MATRIX @ np.conj(m) @ J_MATRIX.T


def exp_i(theta: np.ndarray) -> np.ndarray:
    """Quaternion array e^{i theta}."""
    theta = np.asarray(theta, dtype=float)
    return from_pair(np.exp(1j * theta))


def j_exp_i(theta: np.ndarray) -> np.ndarray:
    """Quaternion array j e^{i theta}."""
    theta = np.asarray(theta, dtype=float)
    return from_pair(np.zeros_like(theta, dtype=complex), np.exp(1j * theta))

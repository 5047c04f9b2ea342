"""Trigonometric interpolation and spectral differentiation on periodic grids."""

import numpy as np

from .lattice import TorusLattice


def _wavenumbers(n: int) -> np.ndarray:
    return np.fft.fftfreq(n, d=1.0 / n)


def periodic_derivative(values: np.ndarray, axis: int, period: float = 1.0) -> np.ndarray:
    """Spectral derivative along one periodic axis sampled at n uniform points.

    The Nyquist mode of an even grid is dropped, which keeps the derivative
    of real data real.
    """
    values = np.asarray(values)
    n = values.shape[axis]
    k = _wavenumbers(n)
    multiplier = 2j * np.pi * k / period
    if n % 2 == 0:
        multiplier[n // 2] = 0.0
    shape = [1] * values.ndim
    shape[axis] = n
    derivative = np.fft.ifft(np.fft.fft(values, axis=axis) * multiplier.reshape(shape), axis=axis)
    return derivative.real if np.isrealobj(values) else derivative


def lattice_gradient(values: np.ndarray, lattice: TorusLattice) -> tuple[np.ndarray, np.ndarray]:
    """(d/dx, d/dy) of a field sampled on the lattice grid (axes 0 and 1 are s and t)."""
    ds = periodic_derivative(values, axis=0)
    dt = periodic_derivative(values, axis=1)
    inv = np.linalg.inv(lattice.basis)
    return inv[0, 0] * ds + inv[0, 1] * dt, inv[1, 0] * ds + inv[1, 1] * dt


def resample_axis(values: np.ndarray, m: int, axis: int = 0, shift: float = 0.0) -> np.ndarray:
    """Trigonometric resampling of a periodic axis from n to m points.

    The output samples sit at (j + shift) / m of the period; an even-grid
    Nyquist mode is split evenly between the two aliases.
    """
    values = np.asarray(values)
    n = values.shape[axis]
    coeffs = np.moveaxis(np.fft.fft(values, axis=axis), axis, 0)
    out = np.zeros((m,) + coeffs.shape[1:], dtype=complex)
    keep = min(n, m)
    half = (keep - 1) // 2
    out[: half + 1] = coeffs[: half + 1]
    if half:
        out[-half:] = coeffs[-half:]
    if keep % 2 == 0:
        nyquist = keep // 2
        if n == m:
            out[nyquist] = coeffs[nyquist]
        elif m > n:
            out[nyquist] = 0.5 * coeffs[nyquist]
            out[m - nyquist] = 0.5 * coeffs[nyquist]
        else:
            out[nyquist] = coeffs[nyquist] + coeffs[n - nyquist]
    if shift:
        k = _wavenumbers(m)
        phase = np.exp(2j * np.pi * k * shift / m)
        if m % 2 == 0:
            phase[m // 2] = np.cos(np.pi * shift)
        out *= phase.reshape((m,) + (1,) * (out.ndim - 1))
    result = np.moveaxis(np.fft.ifft(out, axis=0) * (m / n), 0, axis)
    return result.real if np.isrealobj(values) else result


def resample_grid(values: np.ndarray, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> np.ndarray:
    """Resample a doubly periodic field to an n1 x n2 grid shifted by offset steps."""
    out = resample_axis(values, n1, axis=0, shift=offset[0])
    return resample_axis(out, n2, axis=1, shift=offset[1])


def fourier_evaluate(values: np.ndarray, s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Evaluate the trigonometric interpolant of a grid field at arbitrary (s, t)."""
    values = np.asarray(values)
    n1, n2 = values.shape[:2]
    coeffs = np.fft.fft2(values, axes=(0, 1)) / (n1 * n2)
    s = np.atleast_1d(np.asarray(s, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    e1 = _basis(s, n1)
    e2 = _basis(t, n2)
    result = np.einsum("pk,pl,kl...->p...", e1, e2, coeffs)
    return result.real if np.isrealobj(values) else result


def _basis(x: np.ndarray, n: int) -> np.ndarray:
    k = _wavenumbers(n)
    basis = np.exp(2j * np.pi * np.outer(x, k))
    if n % 2 == 0:
        basis[:, n // 2] = np.cos(np.pi * n * x)
    return basis

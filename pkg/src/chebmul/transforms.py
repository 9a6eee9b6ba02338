"""Power-of-two FFT, real-input DFT, DCT-I and the reversed-spectrum trick.

All transforms are radix-2 and vectorised over numpy arrays.  Twiddle
tables are cached per size.  Every entry point takes an optional
:class:`~chebmul.poly.OpCount`; when given, the real floating point
operations performed by the vectorised kernels are added to it (a complex
product is 4 muls + 2 adds, a complex sum 2 adds).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .poly import OpCount

__all__ = [
    "Spectrum",
    "is_power_of_two",
    "next_power_of_two",
    "fft",
    "ifft",
    "real_dft",
    "inverse_real_dft",
    "dct1",
    "spectrum_of_reversed",
]


class TransformSizeError(ValueError):
    pass


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def next_power_of_two(n: int) -> int:
    return 1 if n <= 1 else 1 << (n - 1).bit_length()


def _check_size(n: int) -> None:
    if not is_power_of_two(n):
        raise TransformSizeError(f"transform size must be a power of two, got {n}")


def _tally(ops: OpCount | None, muls: int = 0, adds: int = 0) -> None:
    if ops is not None:
        ops.muls += muls
        ops.adds += adds


@dataclass(frozen=True)
class Spectrum:
    """DFT values of a length-``size`` input.

    ``values`` holds either all ``size`` bins or, for a real input, the
    ``size//2 + 1`` non-redundant bins of the hermitian half-spectrum.
    """

    values: np.ndarray
    size: int

    @property
    def is_half(self) -> bool:
        return len(self.values) == self.size // 2 + 1 and self.size > 1

    def full(self) -> np.ndarray:
        """All ``size`` bins, rebuilding the upper half from hermitian symmetry."""
        if not self.is_half:
            return self.values
        upper = np.conj(self.values[1:self.size - self.size // 2][::-1])
        return np.concatenate([self.values, upper])


@lru_cache(maxsize=None)
def _twiddles(n: int) -> np.ndarray:
    """exp(-2i*pi*k/n) for k = 0..n/2, each entry computed directly."""
    k = np.arange(n // 2 + 1)
    tw = np.exp(-2j * np.pi * k / n)
    tw.setflags(write=False)
    return tw


@lru_cache(maxsize=None)
def _bitrev(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    rev.setflags(write=False)
    return rev


def _fft_core(x: np.ndarray, ops: OpCount | None) -> np.ndarray:
    n = len(x)
    y = x[_bitrev(n)]
    tw_all = _twiddles(n)
    h = 1
    while h < n:
        y = y.reshape(-1, 2 * h)
        top = y[:, :h]
        bot = y[:, h:]
        if h > 1:
            bot = bot * tw_all[: n // 2 : n // (2 * h)]
            _tally(ops, muls=4 * (n // 2), adds=2 * (n // 2))
        y = np.concatenate([top + bot, top - bot], axis=1)
        _tally(ops, adds=2 * n)
        h *= 2
    return y.reshape(n)


def fft(x, ops: OpCount | None = None) -> Spectrum:
    """Complex DFT ``X[k] = sum_j x[j] * exp(-2i*pi*j*k/N)``."""
    x = np.asarray(x, dtype=complex)
    _check_size(len(x))
    return Spectrum(_fft_core(x, ops), len(x))


def ifft(s: Spectrum | np.ndarray, ops: OpCount | None = None) -> np.ndarray:
    """Inverse of :func:`fft`, including the 1/N scaling."""
    values = s.full() if isinstance(s, Spectrum) else np.asarray(s, dtype=complex)
    n = len(values)
    _check_size(n)
    out = np.conj(_fft_core(np.conj(values), ops)) / n
    _tally(ops, muls=2 * n)
    return out


def real_dft(x, ops: OpCount | None = None) -> Spectrum:
    """Half-spectrum of a real input through one complex FFT of half the size.

    Even and odd samples are packed as real and imaginary parts, transformed
    together, then separated with the hermitian symmetry of each part.
    """
    x = np.asarray(x, dtype=float)
    n = len(x)
    _check_size(n)
    if n == 1:
        return Spectrum(x.astype(complex), 1)
    if n == 2:
        _tally(ops, adds=2)
        return Spectrum(np.array([x[0] + x[1], x[0] - x[1]], dtype=complex), 2)
    m = n // 2
    z = _fft_core(x[0::2] + 1j * x[1::2], ops)
    zk = np.append(z, z[0])              # Z[k], k = 0..m
    zc = np.conj(zk[::-1])               # conj(Z[m-k])
    even = zk + zc                       # 2 * DFT of even samples
    odd = (zk - zc) * _twiddles(n)[: m + 1]  # 2i * W^k * DFT of odd samples
    out = 0.5 * (even - 1j * odd)
    _tally(ops, muls=6 * (m + 1), adds=8 * (m + 1))
    return Spectrum(out, n)


def inverse_real_dft(s: Spectrum, ops: OpCount | None = None) -> np.ndarray:
    """Real sequence whose half-spectrum is ``s``; scales by 1/N."""
    n = s.size
    _check_size(n)
    if n == 1:
        return np.real(s.values[:1]).astype(float)
    if not s.is_half:
        raise TransformSizeError("inverse_real_dft expects a half-spectrum")
    if n == 2:
        x0, x1 = s.values.real
        _tally(ops, muls=2, adds=2)
        return np.array([x0 + x1, x0 - x1]) / 2
    m = n // 2
    xk = s.values[:m]
    xc = np.conj(s.values[1:][::-1])     # conj(X[m-k]), k = 0..m-1
    even = xk + xc
    odd = (xk - xc) * np.conj(_twiddles(n)[:m])
    z = np.conj(_fft_core(np.conj(even + 1j * odd), ops))
    out = np.empty(n)
    out[0::2] = z.real
    out[1::2] = z.imag
    out /= n
    _tally(ops, muls=4 * m + n, adds=8 * m)
    return out


def dct1(x, ops: OpCount | None = None) -> np.ndarray:
    """DCT-I with both endpoints halved.

    ``F[k] = x0/2 + sum_{j=1}^{N-1} x[j] cos(pi*j*k/N) + (-1)^k xN/2`` for an
    input of length N+1.  Evaluated as a real DFT of size 2N on the even
    extension of ``x``; applying it twice gives ``(N/2) * x``.
    """
    x = np.asarray(x, dtype=float)
    n = len(x) - 1
    _check_size(n)
    ext = np.concatenate([x, x[-2:0:-1]])
    y = real_dft(ext, ops).values
    _tally(ops, muls=n + 1)
    return 0.5 * y.real


def spectrum_of_reversed(s: Spectrum, d: int, ops: OpCount | None = None) -> Spectrum:
    """Spectrum of ``x^d * b(1/x)`` from the spectrum of a real ``b`` of degree <= d.

    Uses ``r(w^k) = w_d^k * b(w^(N-k))`` with ``w_d = w^d``.  For a half-spectrum
    ``b(w^(N-k))`` is the conjugate of ``b(w^k)``; for a full spectrum the bins
    are permuted.  The powers of ``w_d`` come from a running product, so the
    cost is linear but rounding in ``w_d`` accumulates with ``k``.
    """
    n = s.size
    if not 0 <= d < n:
        raise TransformSizeError(f"degree {d} does not fit a size-{n} spectrum")
    if s.is_half:
        mirrored = np.conj(s.values)
    else:
        mirrored = s.values[(-np.arange(n)) % n]
    count = len(mirrored)
    powers = _running_powers(np.exp(-2j * np.pi * d / n), count)
    _tally(ops, muls=4 * max(count - 2, 0), adds=2 * max(count - 2, 0))
    out = powers * mirrored
    _tally(ops, muls=4 * count, adds=2 * count)
    return Spectrum(out, n)


def _running_powers(w: complex, count: int) -> np.ndarray:
    # w**k for k < count by repeated multiplication (a cumulative product)
    steps = np.full(count, w, dtype=complex)
    steps[0] = 1.0
    return np.cumprod(steps)

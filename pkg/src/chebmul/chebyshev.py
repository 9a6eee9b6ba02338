"""Products of polynomials given in Chebyshev basis.

Inputs and outputs use the halved-constant convention of :mod:`chebmul.poly`.
All functions require operands of equal length ``n`` and return ``2n-1``
coefficients as a list.

* :func:`mul_direct` evaluates the classical quadratic formula.
* :func:`pm_chebyshev` reduces the product to two monomial-basis products
  computed by any multiplier with the ``mul(a, b) -> list`` signature.
* :func:`pm_dft` and :func:`pm_dft_accurate` specialise that reduction to
  real FFTs and share the forward transforms between the two products.
* :func:`mul_dct` goes through DCT-I values at Chebyshev points.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .monomial import mul_schoolbook
from .poly import OpCount, check_same_length, reverse, zero_like
from .transforms import (
    Spectrum,
    dct1,
    inverse_real_dft,
    next_power_of_two,
    real_dft,
    spectrum_of_reversed,
)

__all__ = ["mul_direct", "pm_chebyshev", "pm_dft", "pm_dft_accurate", "mul_dct"]

MonomialMul = Callable[[Sequence, Sequence], list]


def mul_direct(a: Sequence, b: Sequence) -> list:
    """Quadratic Chebyshev product.

    Each pairwise product ``a[i]*b[j]`` is formed once.  For ``i < j`` the
    symmetric sum ``a[i]*b[j] + a[j]*b[i]`` feeds both ``c[i+j]`` and, when
    ``i >= 1``, ``c[j-i]``; the diagonal terms ``a[i]*b[i]`` feed ``c[2i]`` and
    ``c[0]``.  ``c[0]`` takes ``a[0]*b[0]/2`` so that only the other
    coefficients need a final halving.  Operation count: ``n^2+2n-1``
    multiplications and ``(n-1)(3n-2)/2`` additions.
    """
    n = check_same_length(a, b)
    a, b = list(a), list(b)
    acc = [None] * (2 * n - 1)

    def put(k, v):
        acc[k] = v if acc[k] is None else acc[k] + v

    for i in range(n):
        ai, bi = a[i], b[i]
        diag = ai * bi
        if i == 0:
            acc[0] = diag / 2
        else:
            put(2 * i, diag)
            put(0, diag)
        for j in range(i + 1, n):
            s = ai * b[j] + a[j] * bi
            put(i + j, s)
            if i:
                put(j - i, s)

    out = [acc[0]]
    out.extend(v / 2 for v in acc[1:])
    return out


def pm_chebyshev(
    a: Sequence,
    b: Sequence,
    mul: MonomialMul = mul_schoolbook,
    zero_constant: bool = True,
) -> list:
    """Chebyshev product from two monomial products.

    The coefficient vectors are read as monomial polynomials; ``f = a*b`` and
    ``g = a*reverse(b)``.  With ``zero_constant`` (the default) the constant
    coefficients of both operands of ``g`` are set to zero first, giving

        c[0] = f[0]/2 + g[d]
        c[k] = (f[k] + g[d-k] + g[d+k]) / 2     1 <= k <= d-1
        c[k] = f[k]/2                           d <= k <= 2d

    Without it the ``a[0]``, ``b[0]`` cross terms are subtracted explicitly,
    which costs ``4n-4`` multiplications and ``4n-6`` additions on top of the
    two products instead of ``2n-1`` and ``2n-3``.
    """
    n = check_same_length(a, b)
    d = n - 1
    a, b = list(a), list(b)
    f = mul(a, b)
    if zero_constant:
        ga = [zero_like(a[0])] + a[1:]
        gb = [zero_like(b[0])] + b[1:]
    else:
        ga, gb = a, b
    g = mul(ga, reverse(gb))

    c = [None] * (2 * n - 1)
    if d >= 1:
        if zero_constant:
            c[0] = f[0] / 2 + g[d]
        else:
            c[0] = f[0] / 2 + g[d] - a[0] * b[0]
    for k in range(1, d):
        s = f[k] + g[d - k] + g[d + k]
        if not zero_constant:
            s = s - a[0] * b[k] - a[k] * b[0]
        c[k] = s / 2
    for k in range(d, 2 * d + 1):
        c[k] = f[k] / 2
    return c


def _transform_size(n: int) -> int:
    return max(2, next_power_of_two(2 * n - 1))


def _padded(p: Sequence, size: int) -> np.ndarray:
    out = np.zeros(size)
    out[: len(p)] = np.asarray(p, dtype=float)
    return out


def _recombine(f: np.ndarray, g: np.ndarray, d: int) -> list:
    c = 0.5 * f[: 2 * d + 1]
    if d >= 1:
        c[0] += g[d]
        c[1:d] += 0.5 * (g[d - 1:0:-1] + g[d + 1:2 * d])
    return c.tolist()


def _pm_spectral(a, b, accurate: bool, ops: OpCount | None) -> list:
    n = check_same_length(a, b)
    d = n - 1
    size = _transform_size(n)
    pa, pb = _padded(a, size), _padded(b, size)
    fa = real_dft(pa, ops)
    fb = real_dft(pb, ops)
    # zeroing a constant coefficient subtracts it from every bin
    ga = fa.values - pa[0]
    if accurate:
        rb = np.zeros(size)
        rb[:d] = pb[d:0:-1]
        gr = real_dft(rb, ops).values
    else:
        gr = spectrum_of_reversed(Spectrum(fb.values - pb[0], size), d, ops).values
    bins = len(fa.values)
    if ops is not None:
        ops.adds += (1 if accurate else 2) * bins
        ops.muls += 2 * 4 * bins
        ops.adds += 2 * 2 * bins
    f = inverse_real_dft(Spectrum(fa.values * fb.values, size), ops)
    g = inverse_real_dft(Spectrum(ga * gr, size), ops)
    if ops is not None:
        ops.muls += 2 * d + 1
        ops.adds += max(2 * d - 1, 0)
    return _recombine(f, g, d)


def pm_dft(a: Sequence, b: Sequence, ops: OpCount | None = None) -> list:
    """Reduction over real FFTs with two forward transforms instead of three.

    The spectrum of the reversed operand is derived from the spectrum of ``b``
    by conjugation and a twiddle multiplication.  Faster than
    :func:`pm_dft_accurate` but the twiddle powers lose accuracy as the size
    grows.
    """
    return _pm_spectral(a, b, accurate=False, ops=ops)


def pm_dft_accurate(a: Sequence, b: Sequence, ops: OpCount | None = None) -> list:
    """Like :func:`pm_dft` but transforms the reversed operand directly."""
    return _pm_spectral(a, b, accurate=True, ops=ops)


def mul_dct(a: Sequence, b: Sequence, ops: OpCount | None = None) -> list:
    """Product through DCT-I values at the points ``cos(pi*j/N)``.

    ``N`` is the smallest power of two above the product degree ``2n-2``.
    Both inputs are zero-padded to ``N+1`` samples; the halved endpoint of
    the DCT-I matches the halved constant coefficient.
    """
    n = check_same_length(a, b)
    size = next_power_of_two(2 * n - 1)
    va = dct1(_padded(a, size + 1), ops)
    vb = dct1(_padded(b, size + 1), ops)
    c = dct1(va * vb, ops) * (2.0 / size)
    if ops is not None:
        ops.muls += 2 * (size + 1)
    out, tail = c[: 2 * n - 1], c[2 * n - 1:]
    scale = max(1.0, float(np.max(np.abs(out))))
    if tail.size and np.max(np.abs(tail)) > 1e-10 * scale:
        raise ArithmeticError("DCT product left a non-negligible tail beyond degree 2n-2")
    return out.tolist()

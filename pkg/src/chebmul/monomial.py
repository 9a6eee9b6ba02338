"""Monomial-basis multiplication: schoolbook, Karatsuba and real FFT.

The first two work over any scalar ring (floats, fractions, counted values);
``mul_fft`` is float only.  Every entry point takes two coefficient
sequences of equal length ``n`` and returns the ``2n-1`` product
coefficients as a list.
"""

from __future__ import annotations

import operator
from functools import reduce
from typing import Sequence

import numpy as np

from .poly import OpCount, check_same_length
from .transforms import inverse_real_dft, next_power_of_two, real_dft, Spectrum

__all__ = ["mul_schoolbook", "mul_karatsuba", "mul_fft"]


def mul_schoolbook(a: Sequence, b: Sequence) -> list:
    """Quadratic product; exactly n^2 multiplications and (n-1)^2 additions."""
    n = check_same_length(a, b)
    a, b = list(a), list(b)
    return _schoolbook(a, b, n)


def _schoolbook(a: list, b: list, n: int) -> list:
    rb = b[::-1]
    out = []
    for k in range(2 * n - 1):
        lo = max(0, k - n + 1)
        hi = min(k, n - 1)
        # a[lo..hi] paired with b[k-lo..k-hi]
        terms = map(operator.mul, a[lo:hi + 1], rb[n - 1 - k + lo:n - k + hi])
        out.append(reduce(operator.add, terms))
    return out


def mul_karatsuba(a: Sequence, b: Sequence, threshold: int = 1) -> list:
    """Recursive Karatsuba product.

    Operands are split at ``m = ceil(n/2)``; with ``lo``/``hi`` halves the
    three recursive products are ``p0 = lo_a*lo_b``, ``p2 = hi_a*hi_b`` and
    ``p1 = (lo_a+hi_a)(lo_b+hi_b)``, combined as
    ``p0 + x^m (p1 - p0 - p2) + x^2m p2``.  Sizes ``n <= threshold`` fall
    back to the schoolbook method.  For ``n = 2^k`` and ``threshold = 1`` this
    costs ``3^k`` multiplications and ``6*3^k - 8n + 2`` additions.
    """
    n = check_same_length(a, b)
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    return _karatsuba(list(a), list(b), n, threshold)


def _karatsuba(a: list, b: list, n: int, threshold: int) -> list:
    if n <= threshold:
        return _schoolbook(a, b, n)
    m = (n + 1) // 2
    h = n - m
    a_lo, a_hi = a[:m], a[m:]
    b_lo, b_hi = b[:m], b[m:]
    p0 = _karatsuba(a_lo, b_lo, m, threshold)
    p2 = _karatsuba(a_hi, b_hi, h, threshold)
    sa = [x + y for x, y in zip(a_lo, a_hi)] + a_lo[h:]
    sb = [x + y for x, y in zip(b_lo, b_hi)] + b_lo[h:]
    mid = _karatsuba(sa, sb, m, threshold)
    mid = [x - y for x, y in zip(mid, p0)]
    mid = [x - y for x, y in zip(mid, p2)] + mid[len(p2):]

    out = p0 + [None] + p2  # p0 fills [0, 2m-2], p2 starts at 2m
    for i, v in enumerate(mid, start=m):
        out[i] = v if out[i] is None else out[i] + v
    return out


def mul_fft(a: Sequence, b: Sequence, ops: OpCount | None = None) -> list:
    """Float product through real DFTs of size ``N >= 2n-1`` (at least 2).

    Only the ``N/2+1`` non-redundant bins are multiplied; the inverse
    transform carries the 1/N scaling.
    """
    n = check_same_length(a, b)
    size = max(2, next_power_of_two(2 * n - 1))
    fa = real_dft(_padded(a, size), ops)
    fb = real_dft(_padded(b, size), ops)
    prod = fa.values * fb.values
    if ops is not None:
        ops.muls += 4 * len(prod)
        ops.adds += 2 * len(prod)
    c = inverse_real_dft(Spectrum(prod, size), ops)
    return c[: 2 * n - 1].tolist()


def _padded(p: Sequence, size: int) -> np.ndarray:
    out = np.zeros(size)
    out[: len(p)] = np.asarray(p, dtype=float)
    return out

"""Monomial products computed with a Chebyshev multiplier.

The upper half of a Chebyshev product (degrees ``d..2d``) is half the plain
convolution of the coefficient vectors, whatever the basis.  Running the
Chebyshev multiplier once on the operands and once on their reversals
therefore yields every coefficient of the monomial product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .chebyshev import mul_direct
from .poly import check_same_length, reverse

__all__ = ["mono_mul_via_cheb"]


def mono_mul_via_cheb(
    a: Sequence,
    b: Sequence,
    mul_cheb: Callable[[Sequence, Sequence], list] = mul_direct,
) -> list:
    """Monomial product of ``a`` and ``b`` from two Chebyshev products.

    With ``f = mul_cheb(a, b)`` and ``g = mul_cheb(reverse(a), reverse(b))``:
    ``c[k] = 2 f[k]`` for ``k >= d`` and ``c[k] = 2 g[2d-k]`` for ``k < d``.
    Both give ``c[d]``; over exact rings they are checked to agree.
    """
    n = check_same_length(a, b)
    d = n - 1
    f = mul_cheb(list(a), list(b))
    g = mul_cheb(reverse(a), reverse(b))
    if _is_exact(f[d]) and f[d] != g[d]:
        raise ArithmeticError(
            f"middle coefficient mismatch: {f[d]} from the operands, {g[d]} from their reversals"
        )
    low = [2 * g[2 * d - k] for k in range(d)]
    high = [2 * f[k] for k in range(d, 2 * d + 1)]
    return low + high


def _is_exact(x) -> bool:
    return isinstance(x, (Fraction, int))

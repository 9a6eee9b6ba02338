"""Multiplication of polynomials in Chebyshev basis.

Chebyshev coefficient vectors ``[a0, ..., ad]`` denote
``a0/2 + a1*T1(x) + ... + ad*Td(x)``.
"""

from .chebyshev import mul_dct, mul_direct, pm_chebyshev, pm_dft, pm_dft_accurate
from .equivalence import mono_mul_via_cheb
from .monomial import mul_fft, mul_karatsuba, mul_schoolbook
from .poly import (
    ChebPoly,
    Counted,
    MonoPoly,
    OpCount,
    cheb_to_mono,
    counting,
    exact_cheb_product,
    mono_to_cheb,
    pad_to_common,
    relative_error,
    reverse,
)

__version__ = "0.1.0"

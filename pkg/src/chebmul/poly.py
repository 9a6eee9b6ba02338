"""Polynomial containers, scalar rings and exact oracles.

Chebyshev coefficient vectors use the halved-constant convention throughout
the package: ``[a0, a1, ..., ad]`` stands for

    a(x) = a0/2 + a1*T1(x) + ... + ad*Td(x)

so ``a0`` stores twice the constant term.  Monomial vectors are plain
ascending-degree coefficient lists.  The conversion helpers below are the
only place where the convention is translated.

Algorithms elsewhere are written against duck-typed scalars that support
``+``, ``-``, ``*`` and ``/ 2``.  Three rings are used in practice: Python
floats, :class:`fractions.Fraction` (exact, reduced form) and
:class:`Counted`, a float wrapper that tallies every operation into an
:class:`OpCount` owned by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "ChebPoly",
    "MonoPoly",
    "OpCount",
    "Counted",
    "counting",
    "uncount",
    "zero_like",
    "pad_to_common",
    "check_same_length",
    "reverse",
    "to_fractions",
    "cheb_to_mono",
    "mono_to_cheb",
    "cheb_eval",
    "mono_eval",
    "exact_cheb_product",
    "exact_mono_product",
    "relative_error",
]


@dataclass(frozen=True)
class ChebPoly:
    """Coefficients in Chebyshev basis, ``coeffs[0]`` is twice the constant term."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")

    basis = "chebyshev"

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class MonoPoly:
    """Coefficients in monomial basis, ascending degree."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")

    basis = "monomial"

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1


# -- counting ring ------------------------------------------------------------


@dataclass
class OpCount:
    """Tally of scalar multiplications and additions.

    Subtraction counts as an addition, negation is free and multiplying by a
    constant (including halving and doubling) counts as one multiplication.
    """

    muls: int = 0
    adds: int = 0

    @property
    def total(self) -> int:
        return self.muls + self.adds

    def weighted(self, mul_weight: float) -> float:
        return mul_weight * self.muls + self.adds


def _raw(x):
    return x.value if isinstance(x, Counted) else x


class Counted:
    """A scalar that records each arithmetic operation in ``ops``."""

    __slots__ = ("value", "ops")

    def __init__(self, value, ops: OpCount):
        self.value = value
        self.ops = ops

    def zero(self) -> "Counted":
        return Counted(0 * self.value, self.ops)

    def __add__(self, other):
        self.ops.adds += 1
        return Counted(self.value + _raw(other), self.ops)

    def __radd__(self, other):
        self.ops.adds += 1
        return Counted(_raw(other) + self.value, self.ops)

    def __sub__(self, other):
        self.ops.adds += 1
        return Counted(self.value - _raw(other), self.ops)

    def __rsub__(self, other):
        self.ops.adds += 1
        return Counted(_raw(other) - self.value, self.ops)

    def __mul__(self, other):
        self.ops.muls += 1
        return Counted(self.value * _raw(other), self.ops)

    def __rmul__(self, other):
        self.ops.muls += 1
        return Counted(_raw(other) * self.value, self.ops)

    def __truediv__(self, other):
        self.ops.muls += 1
        return Counted(self.value / _raw(other), self.ops)

    def __neg__(self):
        return Counted(-self.value, self.ops)

    def __eq__(self, other):
        return self.value == _raw(other)

    __hash__ = None

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"Counted({self.value!r})"


def counting(values: Iterable, ops: OpCount) -> list:
    """Wrap ``values`` so that arithmetic on them is tallied into ``ops``."""
    return [Counted(v, ops) for v in values]


def uncount(values: Iterable) -> list:
    return [_raw(v) for v in values]


def zero_like(x):
    """Additive identity of the ring ``x`` lives in, obtained without arithmetic."""
    zero = getattr(x, "zero", None)
    if callable(zero):
        return zero()
    return type(x)(0)


# -- small helpers ------------------------------------------------------------


def check_same_length(a: Sequence, b: Sequence) -> int:
    n = len(a)
    if n != len(b):
        raise ValueError(
            f"operands must have equal length, got {n} and {len(b)}; "
            "use pad_to_common() to zero-pad the shorter one"
        )
    if n < 1:
        raise ValueError("operands must have at least one coefficient")
    return n


def pad_to_common(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Zero-pad the shorter operand so both have the same length.

    Trailing zeros do not change the polynomial in either basis.
    """
    a, b = list(a), list(b)
    n = max(len(a), len(b))
    if a:
        a += [zero_like(a[0])] * (n - len(a))
    if b:
        b += [zero_like(b[0])] * (n - len(b))
    return a, b


def reverse(p: Sequence) -> list:
    """Coefficients of ``x^d * p(1/x)``."""
    if len(p) < 1:
        raise ValueError("empty polynomial")
    return list(p)[::-1]


def to_fractions(p: Iterable) -> list[Fraction]:
    """Exact rational copy; binary floats convert without rounding."""
    return [v if isinstance(v, Fraction) else Fraction(v) for v in p]


# -- basis conversions (quadratic, used as oracles) ---------------------------


def cheb_to_mono(p: Sequence) -> list:
    """Monomial coefficients of a halved-convention Chebyshev series."""
    n = len(p)
    if n < 1:
        raise ValueError("empty polynomial")
    out = [p[0] / 2] + [zero_like(p[0])] * (n - 1)
    t_prev, t_cur = [1], [0, 1]  # T0, T1 as integer monomial vectors
    for k in range(1, n):
        for i, t in enumerate(t_cur):
            if t:
                out[i] = out[i] + p[k] * t
        t_prev, t_cur = t_cur, _next_cheb(t_prev, t_cur)
    return out


def _next_cheb(t_prev: list[int], t_cur: list[int]) -> list[int]:
    # T_{k+1} = 2x T_k - T_{k-1}
    nxt = [0] + [2 * t for t in t_cur]
    for i, t in enumerate(t_prev):
        nxt[i] -= t
    return nxt


def mono_to_cheb(p: Sequence) -> list:
    """Inverse of :func:`cheb_to_mono`; exact over rationals."""
    n = len(p)
    if n < 1:
        raise ValueError("empty polynomial")
    # x^k as true Chebyshev coefficients, via x*T_j = (T_{j+1} + T_{j-1})/2
    power = [Fraction(1)]
    true = [p[0] * power[0]] + [zero_like(p[0])] * (n - 1)
    for k in range(1, n):
        nxt = [Fraction(0)] * (k + 1)
        for j, c in enumerate(power):
            if not c:
                continue
            if j == 0:
                nxt[1] += c
            else:
                nxt[j + 1] += c / 2
                nxt[j - 1] += c / 2
        power = nxt
        for j, c in enumerate(power):
            if c:
                true[j] = true[j] + p[k] * _coerce(c, p[k])
    true[0] = true[0] * 2
    return true


def _coerce(c: Fraction, like):
    # keep float inputs in floats; the binary fractions here are exact
    if isinstance(like, Fraction) or isinstance(like, int):
        return c
    return float(c)


def cheb_eval(p: Sequence, x):
    """Evaluate a halved-convention Chebyshev series at ``x`` with Clenshaw's recurrence."""
    b1 = b2 = zero_like(p[0])
    for c in reversed(p[1:]):
        b1, b2 = 2 * x * b1 - b2 + c, b1
    return x * b1 - b2 + p[0] / 2


def mono_eval(p: Sequence, x):
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * x + c
    return acc


# -- exact products -----------------------------------------------------------


def _pack(values: list[int], width: int) -> int:
    nbytes = width // 8
    pos = b"".join(max(v, 0).to_bytes(nbytes, "little") for v in values)
    neg = b"".join(max(-v, 0).to_bytes(nbytes, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _int_convolve(x: list[int], y: list[int]) -> list[int]:
    """Exact integer convolution by Kronecker substitution.

    Each operand is packed into one big integer with ``width``-bit digits
    wide enough that no output digit overflows, so a single big-int product
    carries the whole convolution.
    """
    m = len(x) + len(y) - 1
    bound = max(map(abs, x)) * max(map(abs, y)) * min(len(x), len(y))
    width = -(-(bound.bit_length() + 2) // 8) * 8
    prod = _pack(x, width) * _pack(y, width)
    # bias every digit by 2^(width-1) so the packed value is non-negative
    half = 1 << (width - 1)
    bias = int.from_bytes(half.to_bytes(width // 8, "little") * m, "little")
    raw = (prod + bias).to_bytes(m * width // 8 + 1, "little")
    nbytes = width // 8
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(m)
    ]


def _as_scaled_ints(p: list[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(v.denominator for v in p))
    return [v.numerator * (den // v.denominator) for v in p], den


def exact_mono_product(a: Sequence, b: Sequence) -> list[Fraction]:
    """Exact monomial product of rational (or binary float) coefficients."""
    fa, fb = to_fractions(a), to_fractions(b)
    ia, da = _as_scaled_ints(fa)
    ib, db = _as_scaled_ints(fb)
    if not any(ia) or not any(ib):
        return [Fraction(0)] * (len(a) + len(b) - 1)
    return [Fraction(c, da * db) for c in _int_convolve(ia, ib)]


def exact_cheb_product(a: Sequence, b: Sequence) -> list[Fraction]:
    """Exact Chebyshev-basis product over the rationals, length ``2n-1``.

    Applies ``Ti*Tj = (T_{i+j} + T_{|i-j|})/2`` to every coefficient pair.
    The pair sums are the convolution and the cross-correlation of the true
    coefficient vectors, both obtained exactly with integer arithmetic.
    """
    n = check_same_length(a, b)
    d = n - 1
    fa, fb = to_fractions(a), to_fractions(b)
    fa[0] /= 2
    fb[0] /= 2
    ia, da = _as_scaled_ints(fa)
    ib, db = _as_scaled_ints(fb)
    scale = da * db
    if not any(ia) or not any(ib):
        return [Fraction(0)] * (2 * n - 1)
    conv = _int_convolve(ia, ib)
    corr = _int_convolve(ia, ib[::-1])  # corr[d + m] = sum_{i-j=m} ia[i]*ib[j]
    out = [Fraction(conv[0] + corr[d], scale)]
    for m in range(1, 2 * n - 1):
        s = conv[m]
        if m <= d:
            s += corr[d + m] + corr[d - m]
        out.append(Fraction(s, 2 * scale))
    return out


def relative_error(approx: Sequence, exact: Sequence) -> float:
    """``||exact - approx||_2 / ||exact||_2`` with exact rational accumulation.

    Float coefficients are converted exactly; only the final square root is
    rounded.  Raises ``ZeroDivisionError`` when ``exact`` is identically zero.
    """
    if len(approx) != len(exact):
        raise ValueError("length mismatch")
    ex = [v.as_integer_ratio() for v in to_fractions(exact)]
    ap = [Fraction(float(v)).as_integer_ratio() if not isinstance(v, Fraction)
          else v.as_integer_ratio() for v in approx]
    den = math.lcm(*(q for _, q in ex), *(q for _, q in ap))
    norm = 0
    err = 0
    for (pe, qe), (pa, qa) in zip(ex, ap):
        e = pe * (den // qe)
        norm += e * e
        diff = pa * (den // qa) - e
        err += diff * diff
    if norm == 0:
        raise ZeroDivisionError("exact product is identically zero")
    return math.sqrt(err / norm)

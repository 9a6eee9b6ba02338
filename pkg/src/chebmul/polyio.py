"""Plain-text polynomial files.

::

    basis chebyshev
    n 3
    1.0000000000000000e+00
    2.0000000000000000e+00
    -5.0000000000000000e-01

Coefficients are written with 17 significant digits so doubles round-trip
bit for bit.
"""

from __future__ import annotations

import os
from typing import Union

from .poly import ChebPoly, MonoPoly

__all__ = [
    "PolyFileError",
    "UnknownBasisError",
    "HeaderError",
    "CoefficientError",
    "CountMismatchError",
    "read_poly",
    "write_poly",
    "parse_poly",
    "format_poly",
]

Poly = Union[ChebPoly, MonoPoly]
_BASES = {"chebyshev": ChebPoly, "monomial": MonoPoly}


class PolyFileError(ValueError):
    pass


class UnknownBasisError(PolyFileError):
    pass


class HeaderError(PolyFileError):
    pass


class CoefficientError(PolyFileError):
    pass


class CountMismatchError(PolyFileError):
    pass


def parse_poly(text: str) -> Poly:
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if len(lines) < 2:
        raise HeaderError("expected a 'basis' line and an 'n' line")

    key, _, basis = lines[0].partition(" ")
    if key != "basis" or not basis.strip():
        raise HeaderError(f"line 1: expected 'basis <name>', got {lines[0]!r}")
    basis = basis.strip()
    if basis not in _BASES:
        raise UnknownBasisError(f"unknown basis {basis!r}; expected chebyshev or monomial")

    key, _, count = lines[1].partition(" ")
    try:
        if key != "n":
            raise ValueError
        n = int(count)
    except ValueError:
        raise HeaderError(f"line 2: expected 'n <count>', got {lines[1]!r}") from None
    if n < 1:
        raise HeaderError(f"line 2: count must be >= 1, got {n}")

    body = lines[2:]
    if len(body) != n:
        raise CountMismatchError(f"header announces {n} coefficients, found {len(body)}")
    coeffs = []
    for lineno, tok in enumerate(body, start=3):
        try:
            coeffs.append(float(tok))
        except ValueError:
            raise CoefficientError(f"line {lineno}: cannot parse coefficient {tok!r}") from None
    return _BASES[basis](coeffs)


def format_poly(poly: Poly) -> str:
    lines = [f"basis {poly.basis}", f"n {len(poly)}"]
    lines.extend(f"{float(c):.16e}" for c in poly)
    return "\n".join(lines) + "\n"


def read_poly(path: Union[str, os.PathLike]) -> Poly:
    with open(path) as fh:
        return parse_poly(fh.read())


def write_poly(path: Union[str, os.PathLike], poly: Poly) -> None:
    with open(path, "w") as fh:
        fh.write(format_poly(poly))

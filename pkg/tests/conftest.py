import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

# (criterion, passed, detail) lines printed at the end of the session
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_LINES, key=lambda r: r[0]):
        status = "PASS" if ok is True else ("WARN" if ok == "warn" else "FAIL")
        terminalreporter.write_line(f"[{status}] criterion {number}: {detail}")


@pytest.fixture
def report():
    def _report(number, ok, detail):
        ok = ok if ok == "warn" else bool(ok)
        ACCEPTANCE_LINES.append((number, ok, detail))
        print(f"criterion {number}: {'PASS' if ok is True else ok} {detail}")
    return _report


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_fractions(rnd: random.Random, n: int, den: int = 16, span: int = 50) -> list[Fraction]:
    return [Fraction(rnd.randint(-span * den, span * den), rnd.randint(1, den)) for _ in range(n)]


# -- independent oracles ---------------------------------------------------------


def brute_dft(x):
    n = len(x)
    return [sum(x[j] * cmath.exp(-2j * math.pi * j * k / n) for j in range(n)) for k in range(n)]


def brute_dct1(x):
    n = len(x) - 1
    out = []
    for k in range(n + 1):
        s = x[0] / 2 + (-1) ** k * x[n] / 2
        s += sum(x[j] * math.cos(math.pi * j * k / n) for j in range(1, n))
        out.append(s)
    return out


def pairwise_cheb_product(a, b):
    """Exact product from Ti*Tj = (T_{i+j} + T_{|i-j|})/2, one pair at a time."""
    ta = [Fraction(a[0]) / 2] + [Fraction(v) for v in a[1:]]
    tb = [Fraction(b[0]) / 2] + [Fraction(v) for v in b[1:]]
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(ta):
        for j, y in enumerate(tb):
            out[i + j] += x * y / 2
            out[abs(i - j)] += x * y / 2
    out[0] *= 2
    return out


def naive_convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out

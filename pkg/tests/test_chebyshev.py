import random
from fractions import Fraction
from functools import partial

import numpy as np
import pytest

from chebmul.chebyshev import mul_dct, mul_direct, pm_chebyshev, pm_dft, pm_dft_accurate
from chebmul.monomial import mul_fft, mul_karatsuba, mul_schoolbook
from chebmul.poly import (
    OpCount,
    cheb_to_mono,
    counting,
    exact_cheb_product,
    mono_to_cheb,
    relative_error,
)

from conftest import pairwise_cheb_product, random_fractions

FLOAT_METHODS = {
    "direct": mul_direct,
    "pm-schoolbook": pm_chebyshev,
    "pm-karatsuba": partial(pm_chebyshev, mul=mul_karatsuba),
    "pm-fft": partial(pm_chebyshev, mul=mul_fft),
    "pm-dft": pm_dft,
    "pm-dft-accurate": pm_dft_accurate,
    "dct": mul_dct,
}


@pytest.mark.parametrize("name", FLOAT_METHODS)
@pytest.mark.parametrize("a, b, expected", [
    ([1.0, 2.0], [3.0, 4.0], [9.5, 5.0, 4.0]),
    ([0.0, 1.0], [0.0, 1.0], [1.0, 0.0, 0.5]),
    ([2.0], [2.0], [2.0]),
    ([2.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 1.0, 0.0, 0.0]),
])
def test_examples(name, a, b, expected):
    got = FLOAT_METHODS[name](a, b)
    np.testing.assert_allclose(got, expected, atol=1e-13)


def test_dct_hand_example():
    # (1 + 2 T1) (3 + 4 T1) = 3 + 10 T1 + 8 T1^2 = 7 + 10 T1 + 4 T2
    out = mul_dct([2.0, 2.0], [6.0, 4.0])
    np.testing.assert_allclose(out, [14.0, 10.0, 4.0], atol=1e-13)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 8, 33, 64])
def test_direct_counts(n):
    ops = OpCount()
    mul_direct(counting(range(1, n + 1), ops), counting(range(n), ops))
    assert ops.muls == n * n + 2 * n - 1
    assert ops.adds == (n - 1) * (3 * n - 2) // 2


def test_direct_counts_small():
    ops = OpCount()
    mul_direct(counting([1.0, 2.0], ops), counting([3.0, 4.0], ops))
    assert (ops.muls, ops.adds) == (7, 2)


@pytest.mark.parametrize("n", [1, 2, 4, 8, 16, 64])
def test_pm_schoolbook_counts(n):
    ops = OpCount()
    pm_chebyshev(counting(range(1, n + 1), ops), counting(range(n), ops))
    assert ops.muls == 2 * n * n + 2 * n - 1
    assert ops.adds == 2 * (n - 1) ** 2 + max(2 * n - 3, 0)


def test_pm_counts_at_four():
    ops = OpCount()
    pm_chebyshev(counting([1.0, 2, 3, 4], ops), counting([5.0, 6, 7, 8], ops))
    assert (ops.muls, ops.adds) == (39, 23)


@pytest.mark.parametrize("n", [2, 4, 8, 32])
def test_untricked_costs_more(n):
    ops = OpCount()
    pm_chebyshev(counting(range(1, n + 1), ops), counting(range(2, n + 2), ops), zero_constant=False)
    assert ops.muls == 2 * n * n + 4 * n - 4
    assert ops.adds == 2 * (n - 1) ** 2 + 4 * n - 6


def test_untricked_agrees_exactly():
    rnd = random.Random(2)
    for n in (1, 2, 5, 17):
        a, b = random_fractions(rnd, n), random_fractions(rnd, n)
        assert pm_chebyshev(a, b, zero_constant=False) == pm_chebyshev(a, b) == mul_direct(a, b)


def test_pm_calls_multiplier_twice():
    calls = []

    def spy(x, y):
        calls.append((list(x), list(y)))
        return mul_schoolbook(x, y)

    pm_chebyshev([1, 2, 3], [4, 5, 6], mul=spy)
    assert len(calls) == 2
    assert calls[0] == ([1, 2, 3], [4, 5, 6])
    assert calls[1] == ([0, 2, 3], [6, 5, 0])


@pytest.mark.parametrize("n", [1, 2, 3, 8, 31, 128])
def test_exact_rational_agreement(n):
    rnd = random.Random(100 + n)
    a, b = random_fractions(rnd, n), random_fractions(rnd, n)
    expected = pairwise_cheb_product(a, b)
    assert mul_direct(a, b) == expected
    assert pm_chebyshev(a, b) == expected
    assert pm_chebyshev(a, b, mul=mul_karatsuba) == expected
    assert exact_cheb_product(a, b) == expected


@pytest.mark.parametrize("n", [1, 2, 16, 64])
def test_conversion_consistency(n):
    rnd = random.Random(n)
    a, b = random_fractions(rnd, n), random_fractions(rnd, n)
    via_mono = mono_to_cheb(mul_schoolbook(cheb_to_mono(a), cheb_to_mono(b)))
    assert mul_direct(a, b) == via_mono


@pytest.mark.parametrize("name", FLOAT_METHODS)
@pytest.mark.parametrize("n", [1, 2, 5, 16, 100])
def test_output_length_and_accuracy(name, n, rng):
    a, b = rng.uniform(-50, 50, n).tolist(), rng.uniform(-50, 50, n).tolist()
    out = FLOAT_METHODS[name](a, b)
    assert isinstance(out, list) and len(out) == 2 * n - 1
    assert relative_error(out, exact_cheb_product(a, b)) < 1e-11


def test_methods_agree_pairwise(rng):
    for n in (3, 64, 257):
        a, b = rng.uniform(-1, 1, n).tolist(), rng.uniform(-1, 1, n).tolist()
        results = {k: np.array(f(a, b)) for k, f in FLOAT_METHODS.items()}
        ref = results.pop("direct")
        for name, r in results.items():
            assert np.linalg.norm(r - ref) <= 1e-10 * np.linalg.norm(ref), name


def test_spectral_flops_quasilinear(rng):
    for fn in (pm_dft, pm_dft_accurate, mul_dct):
        for n in (64, 1024):
            ops = OpCount()
            fn(rng.normal(size=n).tolist(), rng.normal(size=n).tolist(), ops)
            assert 0 < ops.total <= 120 * n * np.log2(2 * n)


def test_pm_dft_shares_forward_transforms(rng):
    a, b = rng.normal(size=512).tolist(), rng.normal(size=512).tolist()
    cheap, full = OpCount(), OpCount()
    pm_dft(a, b, cheap)
    pm_dft_accurate(a, b, full)
    assert cheap.total < full.total


def test_rejects_unequal_lengths():
    for fn in FLOAT_METHODS.values():
        with pytest.raises(ValueError):
            fn([1.0, 2.0], [1.0])


def test_fraction_output_is_exact_type():
    out = mul_direct([Fraction(1), Fraction(1, 3)], [Fraction(2), Fraction(0)])
    assert all(isinstance(c, Fraction) for c in out)
    assert out == [Fraction(1), Fraction(1, 3), 0]  # b is the constant 1

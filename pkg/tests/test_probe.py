"""
Tests for padic_kwapien.probe module.
"""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from padic_kwapien.errors import CapExceededError, InvalidInputError, ResolutionError, SupportError
from padic_kwapien.norms import EuclideanNorm, LqNorm
from padic_kwapien.padic import PadicRational
from padic_kwapien.probe import (
    PadicDigits,
    classical_rademacher,
    digit_cylinders,
    integrate_sign_product,
    khinchin_deviation,
    khinchin_expectation,
    monna,
    monna_measure_check,
    rademacher,
    rademacher_expectation,
    rademacher_fairness_sum,
    rademacher_haar_mean,
    rademacher_independence_check,
    sign_patterns,
)


def test_padic_digits():
    t = PadicDigits.from_int(3, 14, 3)
    assert t.digits == (2, 1, 1)
    assert t.value == 14
    assert t.to_padic() == PadicRational.of(3, 14)
    assert PadicDigits.from_int(2, -1, 3).digits == (1, 1, 1)
    assert PadicDigits.from_padic(PadicRational.of(5, 7), 2).digits == (2, 1)
    with pytest.raises(SupportError):
        PadicDigits.from_padic(PadicRational.of(5, 1, 1), 2)
    with pytest.raises(InvalidInputError):
        PadicDigits(2, (0, 2))


def test_monna():
    assert monna(PadicDigits(3, (0, 0, 0))) == 0
    assert monna(PadicDigits(3, (1, 1))) == Fraction(4, 9)
    assert monna(PadicDigits(2, (1,))) == Fraction(1, 2)


def test_monna_is_injective_on_cylinders():
    for p, depth in ((2, 4), (3, 3), (5, 2)):
        images = [monna(t) for t in digit_cylinders(p, depth)]
        assert len(set(images)) == p**depth
        assert all((x * p**depth).denominator == 1 for x in images)


def test_monna_measure_check():
    report = monna_measure_check(2, 3, (0,))
    assert report.padic_measure == report.lebesgue_measure == Fraction(1, 2)
    assert report.agrees
    report = monna_measure_check(3, 3, (1, 2))
    assert report.padic_measure == report.lebesgue_measure == Fraction(1, 9)
    assert report.interval == (Fraction(5, 9), Fraction(6, 9))
    data = report.to_dict()
    assert data["padic_measure"] == "1/9"
    assert data["agrees"] is True


def test_monna_measure_random_cylinders():
    rng = np.random.default_rng(0)
    for _ in range(100):
        p = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(0, 5))
        pattern = tuple(int(t) for t in rng.integers(0, p, size=n))
        report = monna_measure_check(p, n + 1, pattern)
        assert report.agrees
        assert report.padic_measure == Fraction(1, p**n)


def test_monna_measure_check_errors():
    with pytest.raises(InvalidInputError):
        monna_measure_check(2, 1, (0, 1))
    with pytest.raises(CapExceededError):
        monna_measure_check(2, 40, ())


def test_classical_rademacher():
    assert classical_rademacher(1, Fraction(1, 4)) == 1
    assert classical_rademacher(1, Fraction(1, 2)) == -1
    assert classical_rademacher(2, Fraction(1, 4)) == -1
    assert classical_rademacher(3, Fraction(1, 8)) == -1


def test_rademacher():
    assert rademacher(1, PadicDigits(2, (0, 1, 1))) == 1
    assert rademacher(1, PadicDigits(2, (1, 0, 0))) == -1
    assert rademacher(2, PadicDigits(3, (0, 0))) == 1
    with pytest.raises(InvalidInputError):
        rademacher(0, PadicDigits(2, (0,)))


def test_integrate_sign_product():
    assert integrate_sign_product([], Fraction(0), Fraction(1, 3)) == Fraction(1, 3)
    assert integrate_sign_product([1], Fraction(0), Fraction(1, 2)) == Fraction(1, 2)
    assert integrate_sign_product([1], Fraction(1, 4), Fraction(3, 4)) == 0
    assert integrate_sign_product([2], Fraction(0), Fraction(1, 3)) == Fraction(1, 6)


def test_rademacher_independence():
    for indices in ({1}, {1, 2}, {1, 2, 3}, {2, 3}):
        assert rademacher_independence_check(indices, 2, 3) == 0
    assert rademacher_independence_check(set(), 2, 3) == 1
    assert rademacher_independence_check({1, 3}, 3, 2) == 0
    with pytest.raises(ResolutionError):
        rademacher_independence_check({1, 2, 3}, 2, 2)


def test_rademacher_fairness_sum():
    for i in (1, 2, 3):
        assert rademacher_fairness_sum(i, 2, 3) == 0
        assert rademacher_fairness_sum(i, 2, 5) == 0
    with pytest.raises(ResolutionError):
        rademacher_fairness_sum(1, 3, 4)
    with pytest.raises(ResolutionError):
        rademacher_fairness_sum(4, 2, 3)


def test_rademacher_haar_mean():
    for p, D in ((3, 2), (3, 4), (5, 3), (2, 3)):
        for i in (1, 2, 3):
            assert rademacher_haar_mean(i, p, D) == 0


def test_sign_patterns():
    signs = sign_patterns(3, 0, 4)
    assert signs.tolist() == [[1, 1, 1], [1, -1, 1], [1, 1, -1], [1, -1, -1]]
    full = sign_patterns(2, 0, 4, leading_plus=False)
    assert sorted(map(tuple, full.tolist())) == sorted(itertools.product((1, -1), repeat=2))


def test_khinchin_l1_pair():
    report = khinchin_expectation([[1, 0], [0, 1]], LqNorm(1, 2))
    assert report.expectation == 4
    assert report.sum_sq == 2
    assert report.ratio == 2
    assert report.lower_ratio == report.upper_ratio == 2


def test_khinchin_single_vector():
    report = khinchin_expectation([[3, 4j]], EuclideanNorm(2))
    assert report.expectation == pytest.approx(25)
    assert report.n == 1


def test_khinchin_hilbert_case():
    rng = np.random.default_rng(1)
    for n in (1, 2, 5, 12):
        xs = rng.standard_normal((n, 3)) + 1j * rng.standard_normal((n, 3))
        report = khinchin_expectation(xs, EuclideanNorm(3))
        assert report.expectation == pytest.approx(report.sum_sq, rel=1e-12)


def test_khinchin_workers_do_not_change_result():
    rng = np.random.default_rng(2)
    xs = rng.standard_normal((14, 2))
    norm = LqNorm(1.5, 2)
    assert khinchin_expectation(xs, norm, workers=1) == khinchin_expectation(xs, norm, workers=4)


def test_khinchin_matches_rademacher_realization():
    rng = np.random.default_rng(3)
    xs = rng.standard_normal((6, 2)) + 1j * rng.standard_normal((6, 2))
    norm = LqNorm(math.inf, 2)
    assert rademacher_expectation(xs, norm) == pytest.approx(
        khinchin_expectation(xs, norm).expectation, rel=1e-12
    )


def test_khinchin_errors():
    with pytest.raises(CapExceededError):
        khinchin_expectation(np.ones((21, 1)), LqNorm(1, 1))
    with pytest.raises(InvalidInputError):
        khinchin_expectation(np.zeros((0, 2)), LqNorm(1, 2))
    with pytest.raises(InvalidInputError):
        khinchin_expectation(np.zeros((2, 2)), LqNorm(1, 2))


def test_khinchin_deviation():
    deviation, witness = khinchin_deviation(EuclideanNorm(2), 4, 5, seed=0)
    assert deviation < 1e-12
    deviation, witness = khinchin_deviation(LqNorm(1, 2), 3, 20, seed=0)
    assert deviation > 0
    assert witness.shape == (3, 2)

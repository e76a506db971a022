"""
Property-based tests for the exact arithmetic and the transform identities.
"""

import math

import numpy as np
import pytest

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

from padic_kwapien.fourier import fourier, fourier_inverse, max_deviation  # noqa: E402
from padic_kwapien.kwapien import WitnessFamily, q_functional, q_functional_via_fourier  # noqa: E402
from padic_kwapien.norms import EuclideanNorm, LqNorm  # noqa: E402
from padic_kwapien.padic import (  # noqa: E402
    Ball,
    PadicRational,
    ball_contains,
    character,
    padic_frac,
    padic_valuation,
    phase_to_complex,
)
from padic_kwapien.probe import monna_measure_check  # noqa: E402
from padic_kwapien.stepfn import StepFunction, bochner_norm_sq, refine  # noqa: E402

primes = st.sampled_from([2, 3, 5])


@st.composite
def padic_rationals(draw, p=None):
    p = p or draw(primes)
    return PadicRational.of(p, draw(st.integers(-10**6, 10**6)), draw(st.integers(0, 8)))


@st.composite
def step_functions(draw):
    p = draw(primes)
    M = draw(st.integers(-2, 3))
    L = draw(st.integers(max(-M, -2), 6 - M))
    dim = draw(st.integers(1, 4))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    size = p ** (M + L)
    values = rng.standard_normal((size, dim)) + 1j * rng.standard_normal((size, dim))
    return StepFunction(p, M, L, values)


@given(st.data())
def test_arithmetic_matches_fractions(data):
    p = data.draw(primes)
    x = data.draw(padic_rationals(p))
    y = data.draw(padic_rationals(p))
    assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
    assert (x * y).to_fraction() == x.to_fraction() * y.to_fraction()
    assert PadicRational.from_fraction(p, x.to_fraction()) == x


@given(padic_rationals())
def test_fractional_part_leaves_an_integer(x):
    phase = padic_frac(x)
    rest = x - PadicRational.from_fraction(x.p, phase.to_fraction())
    assert padic_valuation(rest) >= 0
    assert 0 <= phase.to_fraction() < 1


@st.composite
def balls(draw, p):
    return Ball(p, draw(padic_rationals(p)), draw(st.integers(-4, 4)))


@given(st.data())
def test_character_is_additive(data):
    p = data.draw(primes)
    x = data.draw(padic_rationals(p))
    y = data.draw(padic_rationals(p))
    assert character(x + y) == character(x) + character(y)
    product = phase_to_complex(character(x)) * phase_to_complex(character(y))
    assert abs(phase_to_complex(character(x + y)) - product) < 1e-12


@settings(max_examples=200)
@given(st.data())
def test_balls_are_nested_or_disjoint(data):
    p = data.draw(primes)
    small, large = sorted([data.draw(balls(p)), data.draw(balls(p))], key=lambda b: b.radius_exp)
    offsets = data.draw(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
    points = [small.center + PadicRational.of(p, n, small.radius_exp) for n in offsets]
    inside = [ball_contains(large, z) for z in points]
    assert all(inside) == ball_contains(large, small.center)
    assert all(inside) or not any(inside)
    if not ball_contains(large, small.center):
        assert not ball_contains(small, large.center)
    for z in points:
        assert Ball(p, z, small.radius_exp).same_ball(small)


@settings(max_examples=200, deadline=None)
@given(step_functions())
def test_plancherel(f):
    norm = EuclideanNorm(f.dim)
    expected = bochner_norm_sq(f, norm)
    assert bochner_norm_sq(fourier(f), norm) == pytest.approx(expected, rel=1e-12)


@settings(max_examples=200, deadline=None)
@given(step_functions())
def test_inversion(f):
    scale = float(np.max(np.abs(f.values)))
    assert max_deviation(fourier_inverse(fourier(f)), f) <= 1e-12 * scale


@settings(max_examples=30, deadline=None)
@given(step_functions(), st.integers(0, 2), st.integers(0, 2))
def test_norm_is_refinement_invariant(f, dM, dL):
    if (f.size_exp + dM + dL) > 6:
        return
    norm = LqNorm(1, f.dim)
    g = refine(f, f.support_exp + dM, f.level_exp + dL)
    assert bochner_norm_sq(g, norm) == pytest.approx(bochner_norm_sq(f, norm), rel=1e-12)


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from([(2, 1), (3, 1), (2, 2)]),
    st.sampled_from([1, 1.5, 2, 3, math.inf]),
    st.integers(0, 2**32 - 1),
)
def test_q_functional_paths_agree(grid, q, seed):
    p, N = grid
    rng = np.random.default_rng(seed)
    xs = rng.standard_normal((p ** (2 * N), 2)) + 1j * rng.standard_normal((p ** (2 * N), 2))
    w = WitnessFamily(p, N, xs)
    norm = LqNorm(q, 2)
    assert q_functional_via_fourier(w, norm) == pytest.approx(q_functional(w, norm), rel=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_monna_preserves_measure(data):
    p = data.draw(primes)
    pattern = data.draw(st.lists(st.integers(0, p - 1), max_size=4))
    report = monna_measure_check(p, len(pattern) + 1, pattern)
    assert report.agrees

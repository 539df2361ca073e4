"""
Copyright (c) 2026 Proton AG

This file is part of Proton Stubborn Cert.

Proton Stubborn Cert is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Proton Stubborn Cert is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Proton Stubborn Cert.  If not, see <https://www.gnu.org/licenses/>.
"""
from fractions import Fraction
import random

import pytest

from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.sturm import (
    cauchy_bound, descartes_bound, isolate_real_roots, refine_interval, sign_variations,
    sturm_count
)


@pytest.mark.parametrize("values, expected", [
    ([1, 0, -1, 2], 2),
    ([1, 1, 1], 0),
    ([0, 0, 0], 0),
    ([-1, 3, -3, 1], 3),
])
def test_sign_variations_skip_zeros(values, expected):
    assert sign_variations(values) == expected


def test_descartes_bound():
    # (t - 1)(t - 2)(t + 3) = t^3 - 7t + 6
    assert descartes_bound(UPoly([6, -7, 0, 1])) == 2


def test_sturm_counts_distinct_real_roots():
    assert sturm_count(UPoly([-2, 0, 1])) == 2
    assert sturm_count(UPoly([1, 0, 1])) == 0
    assert sturm_count(UPoly([1, -2, 1])) == 1


def test_sturm_count_on_half_open_interval():
    poly = UPoly([0, -1, 0, 1])

    assert sturm_count(poly, 0, 2) == 1
    assert sturm_count(poly, -1, 0) == 1
    assert sturm_count(poly, Fraction(-1, 2), Fraction(1, 2)) == 1


def test_cauchy_bound_contains_roots():
    assert cauchy_bound(UPoly([-6, 1, 1])) == 8


def test_isolating_intervals_are_sorted_and_disjoint():
    roots = [-1, 0, 1]
    intervals = isolate_real_roots(UPoly([0, -1, 0, 1]))

    assert len(intervals) == 3
    for (low, high), root in zip(intervals, roots):
        assert low <= root <= high
    for (_, high), (low, _) in zip(intervals, intervals[1:]):
        assert high <= low


def test_isolation_of_irrational_roots():
    intervals = isolate_real_roots(UPoly([-2, 0, 1]))

    assert len(intervals) == 2
    low, high = intervals[1]
    assert low * low < 2 < high * high


def test_refine_interval_narrows_to_width():
    low, high = refine_interval(UPoly([-2, 0, 1]), (Fraction(1), Fraction(2)), Fraction(1, 1000))

    assert high - low < Fraction(1, 1000)
    assert low * low < 2 < high * high


def test_constant_polynomial_has_no_roots():
    assert isolate_real_roots(UPoly([5])) == []
    assert sturm_count(UPoly([5])) == 0


def _random_factored(rng: random.Random):
    """Product of rational linear factors and a quadratic without real roots."""
    roots = {Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(rng.randint(0, 4))}
    poly = UPoly([rng.choice([-3, -1, 2, 5])])
    multiplicities = {}
    for root in roots:
        multiplicities[root] = rng.randint(1, 3)
        poly = poly * UPoly([-root, 1]) ** multiplicities[root]
    if rng.random() < 0.5:
        poly = poly * UPoly([rng.randint(1, 9), rng.randint(-1, 1), 1])
    return poly, multiplicities


@pytest.mark.parametrize("seed", range(5))
def test_sturm_count_on_random_factored_polynomials(seed):
    rng = random.Random(seed)
    for _ in range(100):
        poly, multiplicities = _random_factored(rng)
        lower = rng.randint(-25, 0) + Fraction(1, 1009)
        upper = rng.randint(0, 25) + Fraction(1, 1009)

        assert sturm_count(poly) == len(multiplicities)
        assert sturm_count(poly, lower, upper) == sum(
            1 for root in multiplicities if lower < root <= upper
        )


@pytest.mark.parametrize("seed", range(5))
def test_isolation_of_random_squarefree_polynomials(seed):
    rng = random.Random(seed)
    for _ in range(100):
        poly, multiplicities = _random_factored(rng)
        roots = sorted(multiplicities)
        intervals = isolate_real_roots(poly.squarefree_part())

        assert len(intervals) == len(roots)
        for (low, high), root in zip(intervals, roots):
            assert low <= root <= high


@pytest.mark.parametrize("seed", range(5))
def test_descartes_bound_has_the_parity_of_the_positive_roots(seed):
    rng = random.Random(seed)
    for _ in range(100):
        poly, multiplicities = _random_factored(rng)
        positive = sum(k for root, k in multiplicities.items() if root > 0)
        if poly(0) == 0:
            poly = poly // UPoly.monomial(poly.trailing_order())

        assert descartes_bound(poly) >= positive
        assert (descartes_bound(poly) - positive) % 2 == 0

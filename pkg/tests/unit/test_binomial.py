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

from proton.stubborn.exceptions import PreconditionError
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.sturm import sturm_count
from proton.stubborn.sos.binomial import (
    binary_form, binomial_combine, gram_from_squares, truncated_binomial
)
from proton.stubborn.sos.certificates import SosCertificate
from proton.stubborn.sos.engine import SOS, is_sos


@pytest.fixture
def xyz():
    return MPoly.gens(3)


def test_truncated_binomial():
    assert truncated_binomial(5, 1) == UPoly([1, 5, 10])
    assert truncated_binomial(3, 0) == UPoly([1])


def test_binary_form_is_the_homogenization():
    a, b = MPoly.gens(2)

    assert binary_form(5, 1) == b ** 2 + 5 * a * b + 10 * a ** 2


@pytest.mark.parametrize("ell, r", [(2, 1), (4, 2), (3, -1)])
def test_truncation_needs_ell_above_2r(ell, r):
    with pytest.raises(PreconditionError):
        truncated_binomial(ell, r)


def test_gram_from_squares(xyz):
    x, y, _ = xyz
    squares = [(Fraction(1), x + y), (Fraction(2), y)]

    certificate = gram_from_squares((x + y) ** 2 + 2 * y ** 2, squares)

    assert certificate.verify()
    assert len(certificate.basis) == 2


def test_combine_first_powers(xyz):
    x, y, _ = xyz
    first = SosCertificate(target=x ** 2, basis=[x], gram=[[Fraction(1)]])
    second = SosCertificate(target=y ** 2, basis=[y], gram=[[Fraction(1)]])

    combined = binomial_combine(x ** 2, 1, first, y ** 2, 1, second)

    assert combined.target == x ** 2 + y ** 2
    assert combined.verify()


def test_combine_third_and_first_powers(xyz):
    x, y, _ = xyz
    cube = SosCertificate(target=x ** 6, basis=[x ** 3], gram=[[Fraction(1)]])
    single = SosCertificate(target=y ** 2, basis=[y], gram=[[Fraction(1)]])

    combined = binomial_combine(x ** 2, 3, cube, y ** 2, 1, single)

    assert combined.target == (x ** 2 + y ** 2) ** 3
    assert combined.verify()


def test_even_exponent_is_rejected(xyz):
    x, y, _ = xyz
    square = SosCertificate(target=x ** 4, basis=[x ** 2], gram=[[Fraction(1)]])
    single = SosCertificate(target=y ** 2, basis=[y], gram=[[Fraction(1)]])

    with pytest.raises(PreconditionError):
        binomial_combine(x ** 2, 2, square, y ** 2, 1, single)


def test_certificate_for_another_form_is_rejected(xyz):
    x, y, _ = xyz
    wrong = SosCertificate(target=y ** 2, basis=[y], gram=[[Fraction(1)]])

    with pytest.raises(PreconditionError):
        binomial_combine(x ** 2, 1, wrong, y ** 2, 1, wrong)


def test_missing_certificate_is_rejected(xyz):
    x, y, _ = xyz
    single = SosCertificate(target=y ** 2, basis=[y], gram=[[Fraction(1)]])

    with pytest.raises(PreconditionError):
        binomial_combine(x ** 2, 1, None, y ** 2, 1, single)


def test_combine_with_a_certificate_found_on_a_face(xyz):
    x, y, z = xyz
    first = (x - y) ** 2 + z ** 2
    cube = is_sos(first ** 3)
    single = SosCertificate(target=x ** 2, basis=[x], gram=[[Fraction(1)]])

    assert cube.verdict == SOS
    combined = binomial_combine(first, 3, cube.certificate, x ** 2, 1, single)

    assert combined.target == (first + x ** 2) ** 3
    assert combined.verify()


@pytest.mark.parametrize("ell", range(1, 21))
def test_truncated_binomials_have_no_real_roots(ell):
    for r in range((ell + 1) // 2):
        truncation = truncated_binomial(ell, r)

        assert truncation.degree == 2 * r
        assert sturm_count(truncation) == 0
        assert truncation(0) == 1


@pytest.mark.slow
@pytest.mark.parametrize("ell", range(3, 21))
def test_binary_truncations_are_sums_of_squares(ell):
    for r in range(1, (ell + 1) // 2):
        outcome = is_sos(binary_form(ell, r))

        assert outcome.verdict == SOS
        assert outcome.certificate.verify()


@pytest.mark.parametrize("seed", range(4))
def test_combine_random_squares_of_lines(seed, xyz):
    rng = random.Random(seed)
    x, y, z = xyz
    first_line, second_line = (
        rng.randint(1, 5) * x + rng.randint(-5, 5) * y + rng.randint(-5, 5) * z,
        rng.randint(-5, 5) * x + rng.randint(1, 5) * y + rng.randint(-5, 5) * z,
    )
    k1, k2 = rng.choice([1, 3]), rng.choice([1, 3])
    f1, f2 = first_line ** 2, second_line ** 2
    cert1 = gram_from_squares(f1 ** k1, [(Fraction(1), first_line ** k1)])
    cert2 = gram_from_squares(f2 ** k2, [(Fraction(1), second_line ** k2)])

    combined = binomial_combine(f1, k1, cert1, f2, k2, cert2)

    assert combined.target == (f1 + f2) ** (k1 + k2 - 1)
    assert combined.verify()

"""
Sturm sequences, Descartes bounds and real root isolation.


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
import logging
from fractions import Fraction
from math import ceil
from typing import List, Sequence, Tuple

from proton.stubborn.poly.field import FieldElem, base_precision, interval_precision
from proton.stubborn.poly.upoly import UPoly

logger = logging.getLogger(__name__)

Interval = Tuple[Fraction, Fraction]


def _sign(value) -> int:
    if isinstance(value, FieldElem):
        return value.sign()
    return (value > 0) - (value < 0)


def sign_variations(values: Sequence) -> int:
    """Number of strict sign changes, zeros skipped."""
    variations, previous = 0, 0
    for value in values:
        sign = _sign(value)
        if sign == 0:
            continue
        if previous and sign != previous:
            variations += 1
        previous = sign
    return variations


def descartes_bound(poly: UPoly) -> int:
    """Upper bound for the positive roots counted with multiplicity."""
    return sign_variations(poly.coeffs)


def sturm_sequence(poly: UPoly) -> List[UPoly]:
    """f, f', -rem(...)... with every member rescaled by a positive factor."""
    sequence = [poly.primitive(), poly.derivative().primitive()]
    while not sequence[-1].is_zero():
        remainder = -(sequence[-2] % sequence[-1])
        if remainder.is_zero():
            break
        sequence.append(remainder.primitive())
    return [p for p in sequence if not p.is_zero()]


def _variations_at(sequence: List[UPoly], point) -> int:
    return sign_variations([p.sign_at(point) for p in sequence])


def _variations_at_infinity(sequence: List[UPoly], direction: int) -> int:
    return sign_variations([p.sign_at_infinity(direction) for p in sequence])


def sturm_count(poly: UPoly, lower=None, upper=None, sequence=None) -> int:
    """Distinct real roots in (lower, upper]; None stands for an infinite end."""
    if poly.degree <= 0:
        return 0
    sequence = sequence or sturm_sequence(poly)
    low = (_variations_at_infinity(sequence, -1) if lower is None
           else _variations_at(sequence, lower))
    high = (_variations_at_infinity(sequence, 1) if upper is None
            else _variations_at(sequence, upper))
    return low - high


def cauchy_bound(poly: UPoly) -> Fraction:
    """A rational B with every root strictly inside (-B, B)."""
    if poly.is_rational():
        values = poly.to_fractions()
        lead = abs(values[-1])
        return 2 + max((abs(v) / lead for v in values[:-1]), default=Fraction(0))
    with interval_precision(base_precision()):
        lead = abs(poly.lc.interval())
        ratios = [abs(c.interval()) / lead for c in poly.coeffs[:-1]]
        largest = max((float(r.b) for r in ratios), default=0.0)
    return Fraction(ceil(largest) + 2)


def _tighten(poly: UPoly, sequence: List[UPoly], low: Fraction, high: Fraction) -> Interval:
    """Shrinks an interval holding one root in (low, high] until no endpoint is a root."""
    if poly.sign_at(high) == 0:
        return high, high
    while poly.sign_at(low) == 0:
        middle = (low + high) / 2
        if poly.sign_at(middle) == 0:
            return middle, middle
        if sturm_count(poly, low, middle, sequence) == 1:
            high = middle
        else:
            low = middle
    return low, high


def isolate_real_roots(poly: UPoly) -> List[Interval]:
    """Sorted disjoint isolating intervals of the real roots of a squarefree polynomial.

    An interval (a, b) with a < b holds exactly one root and sign changes at
    its endpoints; a degenerate interval (a, a) is an exact rational root."""
    if poly.degree <= 0:
        return []
    sequence = sturm_sequence(poly)
    bound = cauchy_bound(poly)
    pending = [(-bound, bound, sturm_count(poly, -bound, bound, sequence))]
    found: List[Interval] = []
    while pending:
        low, high, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            found.append(_tighten(poly, sequence, low, high))
            continue
        middle = (low + high) / 2
        left = sturm_count(poly, low, middle, sequence)
        pending.append((low, middle, left))
        pending.append((middle, high, count - left))
    found.sort()
    logger.debug(f"Isolated {len(found)} real roots of a degree {poly.degree} polynomial")
    return found


def refine_interval(poly: UPoly, interval: Interval, width: Fraction) -> Interval:
    """Bisects an isolating interval until it is narrower than ``width``."""
    low, high = interval
    if low == high:
        return interval
    low_sign = poly.sign_at(low)
    while high - low >= width:
        middle = (low + high) / 2
        sign = poly.sign_at(middle)
        if sign == 0:
            return middle, middle
        if sign == low_sign:
            low = middle
        else:
            high = middle
    return low, high

"""
Exact real scalars: rationals and elements of towers of real square roots.


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

A tower is a tuple of radicands. Radicand ``i`` is itself a FieldElem living
over the first ``i`` levels and is certified positive, and level ``i`` adjoins
its positive square root. An element stores its coordinates over the
multiplicative basis of the tower: basis index ``b`` is the product of the
generators whose bit is set in ``b``, so the top generator owns the upper half
of the coordinate vector.
"""
import logging
import threading
from contextlib import contextmanager
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Dict, List, Optional, Tuple

from mpmath import iv

from proton.stubborn.exceptions import NegativeRadicand, UnresolvedBox

logger = logging.getLogger(__name__)

Coords = Tuple[Fraction, ...]

_PRECISION_LOCK = threading.RLock()
_JOIN_LOCK = threading.RLock()
_JOIN_CACHE: Dict[tuple, tuple] = {}
_GENERATOR_INTERVALS: Dict[tuple, list] = {}

# Starting working precision of interval sign checks and how often it may double.
_PRECISION = {"bits": 64, "doublings": 10}


def configure_precision(bits: int, doublings: int):
    """Sets the precision interval sign checks start from and their doubling budget."""
    if bits < 53 or doublings < 0:
        raise ValueError("Interval precision starts at 53 bits with a nonnegative budget")
    _PRECISION.update(bits=int(bits), doublings=int(doublings))


def base_precision() -> int:
    return _PRECISION["bits"]


@contextmanager
def interval_precision(bits: int):
    """Runs the body with the interval context at the given working precision.

    mpmath keeps the interval precision as global state, so the context holds
    a process-wide re-entrant lock for its whole duration."""
    with _PRECISION_LOCK:
        saved = iv.prec
        iv.prec = max(int(bits), 53)
        try:
            yield iv
        finally:
            iv.prec = saved


def fraction_interval(value: Fraction):
    """Encloses a rational number in an interval at the current precision."""
    return iv.mpf(value.numerator) / iv.mpf(value.denominator)


def _tower_key(tower: tuple) -> tuple:
    return tuple((_tower_key(radicand.tower), radicand.coords) for radicand in tower)


def _pad(coords: Coords, size: int) -> Coords:
    if len(coords) == size:
        return coords
    return coords + (Fraction(0),) * (size - len(coords))


def _add(u: Coords, v: Coords) -> Coords:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Coords, v: Coords) -> Coords:
    return tuple(a - b for a, b in zip(u, v))


def _scale(u: Coords, c: Fraction) -> Coords:
    return tuple(a * c for a in u)


def _is_zero(u: Coords) -> bool:
    return not any(u)


def _mul(tower: tuple, u: Coords, v: Coords) -> Coords:
    if not tower:
        return (u[0] * v[0],)
    half = len(u) // 2
    prefix = tower[:-1]
    a, b, c, d = u[:half], u[half:], v[:half], v[half:]
    b_zero, d_zero = _is_zero(b), _is_zero(d)
    ac = _mul(prefix, a, c)
    if b_zero and d_zero:
        return ac + (Fraction(0),) * half
    if b_zero:
        return ac + _mul(prefix, a, d)
    if d_zero:
        return ac + _mul(prefix, b, c)
    radicand = _pad(tower[-1].coords, half)
    bd = _mul(prefix, _mul(prefix, b, d), radicand)
    cross = _add(_mul(prefix, a, d), _mul(prefix, b, c))
    return _add(ac, bd) + cross


def _inverse(tower: tuple, u: Coords) -> Coords:
    if not tower:
        return (1 / u[0],)
    half = len(u) // 2
    prefix = tower[:-1]
    a, b = u[:half], u[half:]
    if _is_zero(b):
        return _inverse(prefix, a) + (Fraction(0),) * half
    radicand = _pad(tower[-1].coords, half)
    norm = _sub(_mul(prefix, a, a), _mul(prefix, radicand, _mul(prefix, b, b)))
    norm_inverse = _inverse(prefix, norm)
    return _mul(prefix, a, norm_inverse) + tuple(-x for x in _mul(prefix, b, norm_inverse))


def _trim(tower: tuple, coords: Coords) -> Tuple[tuple, Coords]:
    while tower:
        half = len(coords) // 2
        if not _is_zero(coords[half:]):
            break
        tower, coords = tower[:-1], coords[:half]
    return tower, coords


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    numerator, denominator = isqrt(value.numerator), isqrt(value.denominator)
    if numerator * numerator == value.numerator and denominator * denominator == value.denominator:
        return Fraction(numerator, denominator)
    return None


def _generator_intervals(tower: tuple) -> list:
    key = (_tower_key(tower), iv.prec)
    cached = _GENERATOR_INTERVALS.get(key)
    if cached is not None:
        return cached
    generators = []
    for level, radicand in enumerate(tower):
        value = _coords_interval(tower[:level], _pad(radicand.coords, 1 << level), generators)
        generators.append(iv.sqrt(value))
    if len(_GENERATOR_INTERVALS) > 4096:
        _GENERATOR_INTERVALS.clear()
    _GENERATOR_INTERVALS[key] = generators
    return generators


def _coords_interval(tower: tuple, coords: Coords, generators: list):
    if not tower:
        return fraction_interval(coords[0])
    half = len(coords) // 2
    lower = _coords_interval(tower[:-1], coords[:half], generators)
    if _is_zero(coords[half:]):
        return lower
    upper = _coords_interval(tower[:-1], coords[half:], generators)
    return lower + upper * generators[len(tower) - 1]


def _sign(tower: tuple, coords: Coords) -> int:
    if _is_zero(coords):
        return 0
    if not tower:
        return 1 if coords[0] > 0 else -1
    bits = _PRECISION["bits"]
    while bits <= _PRECISION["bits"] << _PRECISION["doublings"]:
        with interval_precision(bits):
            value = _coords_interval(tower, coords, _generator_intervals(tower))
            if value.a > 0:
                return 1
            if value.b < 0:
                return -1
        bits *= 2
    raise UnresolvedBox("Sign of a nonzero tower element could not be certified.")


def _sqrt_in(tower: tuple, u: Coords) -> Optional[Coords]:
    """Positive square root of ``u`` inside the field of ``tower``, if any."""
    if _is_zero(u):
        return u
    if not tower:
        root = _rational_sqrt(u[0])
        return None if root is None else (root,)
    if _sign(tower, u) < 0:
        return None

    half = len(u) // 2
    prefix = tower[:-1]
    zeros = (Fraction(0),) * half
    radicand = _pad(tower[-1].coords, half)
    a, b = u[:half], u[half:]

    if _is_zero(b):
        root = _sqrt_in(prefix, a)
        if root is not None:
            return root + zeros
        root = _sqrt_in(prefix, _mul(prefix, a, _inverse(prefix, radicand)))
        if root is not None:
            return zeros + root
        return None

    norm = _sub(_mul(prefix, a, a), _mul(prefix, radicand, _mul(prefix, b, b)))
    norm_root = _sqrt_in(prefix, norm)
    if norm_root is None:
        return None
    for candidate in (_add(a, norm_root), _sub(a, norm_root)):
        p = _sqrt_in(prefix, _scale(candidate, Fraction(1, 2)))
        if p is None or _is_zero(p):
            continue
        q = _mul(prefix, _scale(b, Fraction(1, 2)), _inverse(prefix, p))
        root = p + q
        if _mul(tower, root, root) != u:
            continue
        if _sign(tower, root) < 0:
            root = tuple(-x for x in root)
        return root
    return None


def _embed(coords: Coords, images: List[Coords], size: int, tower: tuple) -> Coords:
    """Evaluates ``coords`` with generator ``i`` replaced by ``images[i]``."""
    if not images:
        return _pad(coords, size)
    half = len(coords) // 2
    lower = _embed(coords[:half], images[:-1], size, tower)
    if _is_zero(coords[half:]):
        return lower
    upper = _embed(coords[half:], images[:-1], size, tower)
    return _add(lower, _mul(tower, upper, images[-1]))


def _join(first: tuple, second: tuple) -> Tuple[tuple, List[Coords]]:
    """Smallest tower extending ``first`` that contains ``second``.

    Returns the tower and the images of the generators of ``second``."""
    key = (_tower_key(first), _tower_key(second))
    with _JOIN_LOCK:
        cached = _JOIN_CACHE.get(key)
    if cached is not None:
        return cached

    result = first
    images: List[Coords] = []
    for level, radicand in enumerate(second):
        size = 1 << len(result)
        lifted_images = [_pad(image, size) for image in images]
        embedded = _embed(_pad(radicand.coords, 1 << level), lifted_images, size, result)
        root = _sqrt_in(result, embedded)
        if root is None:
            result_tower, radicand_coords = _trim(result, embedded)
            result = result + (FieldElem._make(result_tower, radicand_coords),)
            generator = [Fraction(0)] * (2 * size)
            generator[size] = Fraction(1)
            images.append(tuple(generator))
        else:
            images.append(root)

    joined = (result, images)
    with _JOIN_LOCK:
        if len(_JOIN_CACHE) > 4096:
            _JOIN_CACHE.clear()
        _JOIN_CACHE[key] = joined
    return joined


def _is_prefix(shorter: tuple, longer: tuple) -> bool:
    return len(shorter) <= len(longer) and _tower_key(longer[:len(shorter)]) == _tower_key(shorter)


def _common(x: "FieldElem", y: "FieldElem") -> Tuple[tuple, Coords, Coords]:
    if _is_prefix(x.tower, y.tower):
        size = len(y.coords)
        return y.tower, _pad(x.coords, size), y.coords
    if _is_prefix(y.tower, x.tower):
        size = len(x.coords)
        return x.tower, x.coords, _pad(y.coords, size)
    tower, images = _join(x.tower, y.tower)
    size = 1 << len(tower)
    images = [_pad(image, size) for image in images]
    return tower, _pad(x.coords, size), _embed(y.coords, images, size, tower)


class FieldElem:
    """Exact real number: a rational or an element of a square-root tower."""
    __slots__ = ("tower", "coords")

    def __init__(self, value=0):
        if isinstance(value, FieldElem):
            self.tower, self.coords = value.tower, value.coords
            return
        if isinstance(value, str):
            value = Fraction(value)
        if not isinstance(value, Rational):
            raise TypeError(f"Cannot build an exact scalar from {type(value).__name__}")
        self.tower = ()
        self.coords = (Fraction(value),)

    @classmethod
    def _make(cls, tower: tuple, coords: Coords) -> "FieldElem":
        tower, coords = _trim(tower, coords)
        element = cls.__new__(cls)
        element.tower = tower
        element.coords = coords
        return element

    @staticmethod
    def coerce(value) -> "FieldElem":
        """Returns ``value`` as a FieldElem."""
        return value if isinstance(value, FieldElem) else FieldElem(value)

    @property
    def depth(self) -> int:
        """Number of square roots in the tower of this element."""
        return len(self.tower)

    def is_rational(self) -> bool:
        """True when the element lives in the rationals."""
        return not self.tower

    def to_fraction(self) -> Fraction:
        """Returns the rational value, or raises if the element is irrational."""
        if self.tower:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def is_zero(self) -> bool:
        """True iff the element is exactly zero."""
        return _is_zero(self.coords)

    def sign(self) -> int:
        """Exact sign, certified by interval refinement for irrational elements."""
        return _sign(self.tower, self.coords)

    def interval(self):
        """Encloses the element at the current interval precision.

        Call it inside ``interval_precision`` to control the working precision."""
        with _PRECISION_LOCK:
            if not self.tower:
                return fraction_interval(self.coords[0])
            return _coords_interval(self.tower, self.coords, _generator_intervals(self.tower))

    def __float__(self) -> float:
        if not self.tower:
            return float(self.coords[0])
        with interval_precision(80):
            value = self.interval()
            return float(value.mid)

    def __add__(self, other):
        if not isinstance(other, (FieldElem, Rational)):
            return NotImplemented
        other = FieldElem.coerce(other)
        if not other.tower:
            coords = (self.coords[0] + other.coords[0],) + self.coords[1:]
            return FieldElem._make(self.tower, coords)
        tower, u, v = _common(self, other)
        return FieldElem._make(tower, _add(u, v))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (FieldElem, Rational)):
            return NotImplemented
        return self + (-FieldElem.coerce(other))

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (FieldElem, Rational)):
            return NotImplemented
        other = FieldElem.coerce(other)
        if not other.tower:
            return FieldElem._make(self.tower, _scale(self.coords, other.coords[0]))
        if not self.tower:
            return FieldElem._make(other.tower, _scale(other.coords, self.coords[0]))
        tower, u, v = _common(self, other)
        return FieldElem._make(tower, _mul(tower, u, v))

    __rmul__ = __mul__

    def exact_div(self, other) -> "FieldElem":
        return self / other

    def inverse(self) -> "FieldElem":
        """Multiplicative inverse."""
        if self.is_zero():
            raise ZeroDivisionError("FieldElem division by zero")
        return FieldElem._make(self.tower, _inverse(self.tower, self.coords))

    def __truediv__(self, other):
        if not isinstance(other, (FieldElem, Rational)):
            return NotImplemented
        other = FieldElem.coerce(other)
        if not other.tower:
            if other.coords[0] == 0:
                raise ZeroDivisionError("FieldElem division by zero")
            return FieldElem._make(self.tower, _scale(self.coords, 1 / other.coords[0]))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) / self

    def __neg__(self):
        return FieldElem._make(self.tower, tuple(-x for x in self.coords))

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = FieldElem(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (FieldElem, Rational)):
            return NotImplemented
        other = FieldElem.coerce(other)
        if not self.tower and not other.tower:
            return self.coords[0] == other.coords[0]
        return (self - other).is_zero()

    def __hash__(self):
        # The rational coordinate is Tr(x)/[K:Q], independent of the tower used.
        return hash(self.coords[0])

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        return format_scalar(self)


def generator(tower: tuple, level: int) -> FieldElem:
    """Returns the square root adjoined at ``level`` of ``tower``."""
    coords = [Fraction(0)] * (1 << (level + 1))
    coords[1 << level] = Fraction(1)
    return FieldElem._make(tower[:level + 1], tuple(coords))


def sqrt(value) -> FieldElem:
    """Positive square root, adjoined to the tower when not already present."""
    value = FieldElem.coerce(value)
    sign = value.sign()
    if sign < 0:
        raise NegativeRadicand(f"sqrt of negative number {value}")
    if sign == 0:
        return FieldElem(0)
    root = _sqrt_in(value.tower, value.coords)
    if root is not None:
        return FieldElem._make(value.tower, root)
    tower = value.tower + (value,)
    logger.debug(f"Adjoining sqrt({value}) at tower depth {len(tower)}")
    return generator(tower, len(tower) - 1)


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: FieldElem) -> str:
    """Prints the element in the expression grammar accepted by the parser."""
    if value.is_rational():
        return _format_rational(value.coords[0])

    terms = []
    for index, coefficient in enumerate(value.coords):
        if coefficient == 0:
            continue
        roots = [
            f"sqrt({format_scalar(value.tower[level])})"
            for level in range(len(value.tower)) if index >> level & 1
        ]
        magnitude = abs(coefficient)
        factors = ([] if magnitude == 1 and roots else [_format_rational(magnitude)]) + roots
        terms.append(("-" if coefficient < 0 else "+", "*".join(factors)))

    text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for operator, body in terms[1:]:
        text += f"{operator}{body}"
    return text

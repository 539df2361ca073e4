"""
Exceptions raised by the stubbornness deciders.


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


class StubbornError(Exception):
    """Base class for every error raised by this package."""


class ParseError(StubbornError, SyntaxError):
    """The polynomial expression does not follow the grammar."""
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.msg = message
        self.offset = offset


class PreconditionError(StubbornError):
    """The input violates a documented precondition."""


class NegativeRadicand(PreconditionError):
    """A square root was taken of a number certified to be negative."""


class UnsupportedCoefficients(PreconditionError):
    """The operation needs rational coefficients but got tower elements."""


class ZeroPolynomial(PreconditionError):
    """The polynomial is identically zero."""


class ChartMismatch(PreconditionError):
    """Homogenization target degree is below the current degree."""


class CommonComponent(PreconditionError):
    """Two plane curves share a component."""


class PositiveDimensional(PreconditionError):
    """The zero set expected to be finite contains a curve."""


class NonIsolatedZero(PreconditionError):
    """The germ vanishes along a curve through the point."""


class SingularCurve(PreconditionError):
    """The Weierstrass cubic has vanishing discriminant."""


class NotTangent(PreconditionError):
    """Gradients are not proportional at an intersection point."""


class NotTotallyReal(PreconditionError):
    """A real-irreducible component of the curve has no smooth real point."""


class ComputationError(StubbornError):
    """An internal budget or numerical limit was reached."""


class SeparationFailure(ComputationError):
    """No coordinate change separating the points was found."""


class RecursionBudget(ComputationError):
    """The blow-up recursion exceeded its depth budget."""


class NumericalStall(ComputationError):
    """The semidefinite solver did not converge."""


class UnresolvedBox(ComputationError):
    """A decision could not be made at the available box precision."""


class IdentityMismatch(ComputationError):
    """An exact identity that must hold did not."""

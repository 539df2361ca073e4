"""
Sums of squares certificates for powers of sums, from the truncated binomial identity.


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


With ℓ = k₁ + k₂ − 1 the binomial expansion splits as

    (a + b)^ℓ = b^k₂ · B(ℓ, k₁ − 1)(a, b) + a^k₁ · B(ℓ, k₂ − 1)(b, a)

where B(ℓ, 2r)(a, b) = Σ_{i ≤ 2r} C(ℓ, i)·a^i·b^(2r − i) is a positive definite
binary form whenever ℓ > 2r. Any rational sum of squares of B composes with
the certificates of F₁^k₁ and F₂^k₂ into one for (F₁ + F₂)^ℓ.
"""
import logging
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from proton.stubborn.config import SolverConfig
from proton.stubborn.exceptions import IdentityMismatch, NumericalStall, PreconditionError
from proton.stubborn.poly.mpoly import MPoly, grlex_key
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.sos.certificates import SosCertificate
from proton.stubborn.sos.engine import is_sos

logger = logging.getLogger(__name__)

Square = Tuple[Fraction, MPoly]


def _check_range(ell: int, r: int):
    if r < 0 or ell <= 2 * r:
        raise PreconditionError(f"Truncated binomials need l > 2r >= 0, got l={ell}, r={r}")


def truncated_binomial(ell: int, r: int) -> UPoly:
    """b(ℓ, 2r)(t) = Σ_{i ≤ 2r} C(ℓ, i)·t^i."""
    _check_range(ell, r)
    return UPoly([comb(ell, i) for i in range(2 * r + 1)])


def binary_form(ell: int, r: int) -> MPoly:
    """Homogenization B(ℓ, 2r)(a, b) of the truncated binomial."""
    _check_range(ell, r)
    return MPoly(2, {(i, 2 * r - i): comb(ell, i) for i in range(2 * r + 1)})


def _binary_squares(ell: int, r: int, config: SolverConfig) -> List[Square]:
    if r == 0:
        return [(Fraction(1), MPoly.constant(2, 1))]
    outcome = is_sos(binary_form(ell, r), config)
    if not outcome.is_sos:
        raise NumericalStall(f"No rational sum of squares found for B({ell}, {2 * r})")
    return outcome.certificate.squares()


def _check_certificate(form: MPoly, k: int, certificate: SosCertificate, name: str):
    if k < 1 or k % 2 == 0:
        raise PreconditionError(f"{name}: the exponent must be a positive odd integer")
    if not isinstance(certificate, SosCertificate):
        raise PreconditionError(f"{name}: no sum of squares certificate given")
    if certificate.ideal is not None or certificate.target != form ** k:
        raise PreconditionError(f"{name}: the certificate does not certify F^{k}")


def _compose_half(outer: SosCertificate, binary: List[Square],
                  first: MPoly, second: MPoly) -> List[Square]:
    """Squares of outer_target · B(first, second)."""
    squares = []
    for weight, g in outer.squares():
        for binary_weight, q in binary:
            squares.append((weight * binary_weight, g * q.compose([first, second])))
    return squares


def gram_from_squares(target: MPoly, squares: List[Square]) -> SosCertificate:
    """Assembles Σ w·p² as a Gram matrix over the monomials that occur in the p's."""
    support = set()
    for _, poly in squares:
        support.update(poly.terms)
    monomials = sorted(support, key=grlex_key, reverse=True)
    position = {m: i for i, m in enumerate(monomials)}
    size = len(monomials)
    gram = [[Fraction(0)] * size for _ in range(size)]
    for weight, poly in squares:
        entries = [(position[m], c.to_fraction()) for m, c in poly.terms.items()]
        for i, a in entries:
            for j, b in entries:
                gram[i][j] += weight * a * b
    basis = [MPoly.monomial(target.nvars, m) for m in monomials]
    return SosCertificate(target=target, basis=basis, gram=gram)


def binomial_combine(f1: MPoly, k1: int, cert1: SosCertificate,
                     f2: MPoly, k2: int, cert2: SosCertificate,
                     config: Optional[SolverConfig] = None) -> SosCertificate:
    """Certificate for (F₁ + F₂)^(k₁ + k₂ − 1) from certificates of F₁^k₁ and F₂^k₂."""
    config = config or SolverConfig()
    _check_certificate(f1, k1, cert1, "F1")
    _check_certificate(f2, k2, cert2, "F2")
    ell = k1 + k2 - 1

    squares = _compose_half(cert2, _binary_squares(ell, (k1 - 1) // 2, config), f1, f2)
    squares += _compose_half(cert1, _binary_squares(ell, (k2 - 1) // 2, config), f2, f1)
    certificate = gram_from_squares((f1 + f2) ** ell, squares)
    if not certificate.verify():
        raise IdentityMismatch(f"Combined certificate does not reconstruct (F1 + F2)^{ell}")
    logger.info(f"Combined certificate for (F1 + F2)^{ell} over {len(certificate.basis)} monomials")
    return certificate

"""Cyclotomic divisibility tests for integer Laurent polynomials.

For an odd prime ell, the cyclotomic polynomial Phi_ell(z) = 1 + z + ... +
z^(ell-1) and its variants Phi_ell(z^2) and Phi_ell(-z) divide a Laurent
polynomial f exactly when certain residue-class coefficient sums of f agree.
Those criteria are linear scans over the span; exact long division is kept as
an independent audit route, and the two must always agree.  Divisibility by
Phi_ell means equidistribution of the underlying counts over residue classes
mod ell, which is how partition congruences surface at the polynomial level.
"""

from __future__ import annotations

import dataclasses

from .laurent import LaurentPoly

VARIANTS = ("standard", "squared", "negated")


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial quotient does not exist."""


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclasses.dataclass(frozen=True)
class Modulus:
    """A cyclotomic divisor choice: Phi_ell of z, z^2 or -z."""

    ell: int
    variant: str = "standard"

    def __post_init__(self):
        if not _is_odd_prime(self.ell):
            raise ValueError(f"ell must be an odd prime, got {self.ell}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")


def phi(modulus: Modulus | int, variant: str = "standard") -> LaurentPoly:
    """The chosen cyclotomic polynomial as a LaurentPoly.

    >>> str(phi(3))
    '1*z^0 + 1*z^1 + 1*z^2'
    >>> str(phi(3, "negated"))
    '1*z^0 - 1*z^1 + 1*z^2'
    """
    if isinstance(modulus, int):
        modulus = Modulus(modulus, variant)
    ell = modulus.ell
    if modulus.variant == "standard":
        return LaurentPoly(0, (1,) * ell)
    if modulus.variant == "squared":
        return LaurentPoly(0, (1,) * ell).substitute_power(2)
    return LaurentPoly(0, tuple((-1) ** i for i in range(ell)))


def hat_sum(f: LaurentPoly, r: int, m: int) -> int:
    """Sum of the coefficients of f at exponents congruent to r mod m."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    r %= m
    total = 0
    for i, c in enumerate(f.coeffs):
        if (f.lo + i) % m == r:
            total += c
    return total


def _hat_sums(f: LaurentPoly, m: int) -> list[int]:
    sums = [0] * m
    for i, c in enumerate(f.coeffs):
        sums[(f.lo + i) % m] += c
    return sums


def divides_standard(f: LaurentPoly, ell: int) -> bool:
    """Whether Phi_ell(z) divides f, by the residue-sum criterion.

    Phi_ell | f iff all ell residue-class sums of f mod ell are equal.
    """
    Modulus(ell)
    sums = _hat_sums(f, ell)
    return all(s == sums[ell - 1] for s in sums)


def divides_negated(f: LaurentPoly, ell: int) -> bool:
    """Whether Phi_ell(-z) divides f, by the residue-sum criterion.

    Phi_ell(-z) | f iff the alternating differences
    (-1)^r * (hat(f, r, 2*ell) - hat(f, r + ell, 2*ell)) agree for all r.
    """
    Modulus(ell)
    sums = _hat_sums(f, 2 * ell)
    target = sums[ell - 1] - sums[2 * ell - 1]
    for r in range(ell - 1):
        d = sums[r] - sums[r + ell]
        if r % 2 == 1:
            d = -d
        if d != target:
            return False
    return True


def exact_quotient(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """The Laurent polynomial q with q*g == f, if one exists over Z.

    Schoolbook long division from the top exponent; raises NotDivisible when
    the remainder is nonzero or a leading-coefficient division fails.  This is
    the audit route for the residue-sum criteria and works for any nonzero g.

    >>> exact_quotient(phi(5).shift(-2), phi(5))
    LaurentPoly('1*z^-2')
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero()
    glen = len(g.coeffs)
    qlen = len(f.coeffs) - glen + 1
    if qlen <= 0:
        raise NotDivisible(f"span of {f!r} is shorter than span of {g!r}")
    num = list(f.coeffs)
    glead = g.coeffs[-1]
    q = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = num[i + glen - 1]
        if c == 0:
            continue
        if c % glead != 0:
            raise NotDivisible("leading coefficient does not divide exactly")
        qi = c // glead
        q[i] = qi
        for j, gj in enumerate(g.coeffs):
            num[i + j] -= qi * gj
    if any(num):
        raise NotDivisible("nonzero remainder")
    return LaurentPoly(f.lo - g.lo, q)


def divides_by_division(f: LaurentPoly, g: LaurentPoly) -> bool:
    """Exact-division form of the divisibility test (audit route)."""
    try:
        exact_quotient(f, g)
    except NotDivisible:
        return False
    return True


def check_unimodal_quotient(f: LaurentPoly, ell: int) -> bool:
    """Check one instance of the symmetric-unimodal quotient law.

    If f is symmetric, unimodal and divisible by Phi_ell, then f / Phi_ell
    has non-negative coefficients.  Returns True when the implication holds
    for this f (vacuously true when the hypotheses fail).
    """
    if not (f.is_symmetric() and f.is_unimodal() and divides_standard(f, ell)):
        return True
    return exact_quotient(f, phi(ell)).is_nonnegative()

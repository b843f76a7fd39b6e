"""Dense Laurent polynomials over the integers.

Partition statistics at a fixed size (how many partitions of n have rank m,
or crank m) form finitely supported integer sequences indexed by m in Z.  We
model them as Laurent polynomials in a formal variable z: the coefficient of
z^m is the count at m.  The representation is dense over the support span,
which keeps the structural predicates (symmetry, unimodality) and the
cyclotomic divisibility tests straight index arithmetic.

Values are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Mapping


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class LaurentPoly:
    """A Laurent polynomial sum(coeffs[i] * z^(lo+i)).

    Normalized so that coeffs is empty (the zero polynomial, with lo == 0)
    or starts and ends with a nonzero coefficient.

    >>> f = LaurentPoly(-1, (1, 0, 2))
    >>> f.lo, f.hi
    (-1, 1)
    >>> str(f)
    '1*z^-1 + 2*z^1'
    >>> f + LaurentPoly.monomial(1, -2)
    LaurentPoly('1*z^-1')
    """

    lo: int
    coeffs: tuple[int, ...]

    def __init__(self, lo: int = 0, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            self.lo = 0
            self.coeffs = ()
        else:
            self.lo = lo + start
            self.coeffs = tuple(cs[start:end])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(0, ())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, (1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls(exponent, (coefficient,))

    @classmethod
    def from_coeff_map(cls, mapping: Mapping[int, int]) -> LaurentPoly:
        nonzero = {e: c for e, c in mapping.items() if c != 0}
        if not nonzero:
            return cls.zero()
        lo = min(nonzero)
        hi = max(nonzero)
        cs = [0] * (hi - lo + 1)
        for e, c in nonzero.items():
            cs[e - lo] = c
        return cls(lo, cs)

    # -- basic structure ----------------------------------------------------

    @property
    def hi(self) -> int:
        """Largest exponent in the span (lo - 1 for the zero polynomial)."""
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, m: int) -> int:
        """Coefficient of z^m (zero outside the span)."""
        i = m - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff_map(self) -> dict[int, int]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def value_at_one(self) -> int:
        """Evaluate at z = 1, i.e. the sum of all coefficients."""
        return sum(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        cs = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            cs[self.lo - lo + i] += c
        for i, c in enumerate(other.coeffs):
            cs[other.lo - lo + i] += c
        return LaurentPoly(lo, cs)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly(0, (other,)) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly(self.lo, tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        a, b = self.coeffs, other.coeffs
        cs = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                cs[i + j] += ai * bj
        return LaurentPoly(self.lo + other.lo, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by z^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.lo + k, self.coeffs)

    def substitute_power(self, t: int) -> LaurentPoly:
        """Substitute z -> z^t for an integer t >= 1.

        >>> LaurentPoly(-1, (1, 1, 1)).substitute_power(2)
        LaurentPoly('1*z^-2 + 1*z^0 + 1*z^2')
        """
        if t < 1:
            raise ValueError("substitution power must be >= 1")
        if self.is_zero() or t == 1:
            return self
        cs = [0] * ((len(self.coeffs) - 1) * t + 1)
        for i, c in enumerate(self.coeffs):
            cs[i * t] = c
        return LaurentPoly(self.lo * t, cs)

    # -- predicates ----------------------------------------------------------

    def is_symmetric(self) -> bool:
        """True iff the coefficient of z^m equals that of z^-m for all m."""
        if self.is_zero():
            return True
        if self.lo != -self.hi:
            return False
        cs = self.coeffs
        return all(cs[i] == cs[len(cs) - 1 - i] for i in range(len(cs) // 2 + 1))

    def is_unimodal(self) -> bool:
        """True iff the coefficient sequence rises then falls.

        The full integer line is considered: coefficients beyond the span are
        zero, and interior zeros count.  Constant and monotone sequences are
        unimodal; any strict dip (for example 1,0,1) is not.

        >>> LaurentPoly(-2, (1, 1, 1, 1, 1)).is_unimodal()
        True
        >>> LaurentPoly(-2, (1, 0, 1, 0, 1)).is_unimodal()
        False
        """
        seq = (0,) + self.coeffs + (0,)
        i = 0
        while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
            i += 1
        while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
            i += 1
        return i == len(seq) - 1

    def is_nonnegative(self) -> bool:
        """True iff every coefficient is >= 0."""
        return all(c >= 0 for c in self.coeffs)

    # -- text and JSON forms --------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.lo + i
            if not parts:
                parts.append(f"{c}*z^{e}")
            elif c > 0:
                parts.append(f"+ {c}*z^{e}")
            else:
                parts.append(f"- {-c}*z^{e}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    _TERM = re.compile(
        r"\s*(?P<sign>[+-]?)\s*(?:"
        r"(?P<coeff>\d+)\s*\*?\s*z\^(?P<exp>-?\d+)"
        r"|(?P<conly>\d+)"
        r"|z\^(?P<eonly>-?\d+)"
        r"|z"
        r")\s*"
    )

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        """Parse the textual form produced by str().

        Accepts terms like ``3*z^-2``, ``z^4``, ``z`` and bare integers,
        joined by explicit signs.

        >>> LaurentPoly.from_text("1*z^-1 + 2*z^1") == LaurentPoly(-1, (1, 0, 2))
        True
        """
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        acc: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial text at position {pos}: {s!r}")
            sign = -1 if m.group("sign") == "-" else 1
            if not first and m.group("sign") == "":
                raise ValueError(f"missing sign between terms in {s!r}")
            if m.group("coeff") is not None:
                c, e = int(m.group("coeff")), int(m.group("exp"))
            elif m.group("conly") is not None:
                c, e = int(m.group("conly")), 0
            elif m.group("eonly") is not None:
                c, e = 1, int(m.group("eonly"))
            else:
                c, e = 1, 1
            acc[e] = acc.get(e, 0) + sign * c
            pos = m.end()
            first = False
        return cls.from_coeff_map(acc)

    def to_json_dict(self) -> dict:
        """JSON form: ``{"lo": int, "coeffs": [decimal strings]}``.

        Coefficients travel as strings so arbitrarily large values survive
        JSON readers that parse numbers into doubles.
        """
        return {"lo": self.lo, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> LaurentPoly:
        return cls(int(data["lo"]), tuple(int(c) for c in data["coeffs"]))

"""Exact arithmetic in Q and in the cyclotomic extension Q(q), q = e^{2*i*pi/3}.

Every coefficient in this package lives in Q(q).  The minimal polynomial
q^2 + q + 1 = 0 makes {1, q} a basis, so an element is stored as an exact
pair (re_part, q_part) of rationals meaning re_part + q_part * q.  All
operations are exact; equality-to-zero is the core query of the whole
package and must never go through floats.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

__all__ = ["Rational", "Cyclo", "Q", "ONE", "ZERO", "parse_cyclo"]

# Arbitrary-precision exact rationals; stored reduced with positive
# denominator (Fraction guarantees both).
Rational = Fraction


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} into an exact rational")


class Cyclo:
    """An exact element re + im_q * q of Q(q) with q^2 = -1 - q."""

    __slots__ = ("re", "im_q")

    def __init__(self, re=0, im_q=0):
        self.re = _as_rational(re)
        self.im_q = _as_rational(im_q)

    # -- ring structure -------------------------------------------------

    def __add__(self, other) -> "Cyclo":
        other = _coerce(other)
        return Cyclo(self.re + other.re, self.im_q + other.im_q)

    __radd__ = __add__

    def __sub__(self, other) -> "Cyclo":
        other = _coerce(other)
        return Cyclo(self.re - other.re, self.im_q - other.im_q)

    def __rsub__(self, other) -> "Cyclo":
        return _coerce(other) - self

    def __neg__(self) -> "Cyclo":
        return Cyclo(-self.re, -self.im_q)

    def __mul__(self, other) -> "Cyclo":
        other = _coerce(other)
        a, b = self.re, self.im_q
        c, d = other.re, other.im_q
        # (a + b q)(c + d q) = ac + (ad + bc) q + bd q^2,  q^2 = -1 - q
        bd = b * d
        return Cyclo(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclo":
        other = _coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(q)")
        return self * other.conj() * Cyclo(Fraction(1, 1) / n)

    def __rtruediv__(self, other) -> "Cyclo":
        return _coerce(other) / self

    def __pow__(self, k: int) -> "Cyclo":
        if k < 0:
            return ONE / self ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- involution and predicates --------------------------------------

    def conj(self) -> "Cyclo":
        """Complex conjugation, q -> q^2 = -1 - q."""
        return Cyclo(self.re - self.im_q, -self.im_q)

    def norm(self) -> Fraction:
        """self * conj(self), always a nonnegative rational."""
        a, b = self.re, self.im_q
        return a * a - a * b + b * b

    def is_real(self) -> bool:
        return self.im_q == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im_q == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Cyclo)):
            other = _coerce(other)
            return self.re == other.re and self.im_q == other.im_q
        return NotImplemented

    def __hash__(self):
        if self.im_q == 0:
            return hash(self.re)
        return hash((self.re, self.im_q))

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if self.im_q == 0:
            return str(self.re)
        if self.re == 0:
            if self.im_q == 1:
                return "q"
            if self.im_q == -1:
                return "-q"
            return f"{self.im_q}*q"
        sign = "+" if self.im_q > 0 else "-"
        mag = abs(self.im_q)
        qpart = "q" if mag == 1 else f"{mag}*q"
        return f"{self.re} {sign} {qpart}"

    def __repr__(self) -> str:
        return f"Cyclo({self.re!r}, {self.im_q!r})"


def _coerce(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    return Cyclo(_as_rational(x))


ZERO = Cyclo(0)
ONE = Cyclo(1)
Q = Cyclo(0, 1)  # the primitive cube root of unity

_TERM_RE = _re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<q1>q))?
          | (?P<q2>q)
        )\s*""",
    _re.VERBOSE,
)


def parse_cyclo(text: str) -> Cyclo:
    """Parse the textual rendering "a + b*q" (either part optional)."""
    pos = 0
    out = ZERO
    seen = False
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad Q(q) literal {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("sign") == "" and seen:
            raise ValueError(f"missing sign between terms in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("q1") or m.group("q2"):
            out = out + Cyclo(0, sign * coef)
        else:
            out = out + Cyclo(sign * coef)
        pos = m.end()
        seen = True
    if not seen:
        raise ValueError(f"empty Q(q) literal {text!r}")
    return out

"""Exact scalars: arbitrary-precision rationals and cyclotomic fields.

The rational type is the stdlib ``fractions.Fraction`` (always reduced,
positive denominator, structural equality).  Cyclotomic numbers are residues
modulo the r-th cyclotomic polynomial, so every element has a unique
coefficient vector of length phi(r) and equality is structural.  No floating
point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = Fraction


class OrderMismatchError(ValueError):
    """Arithmetic between cyclotomic numbers of different orders."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense, lowest degree first)


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list:
    """Exact division of integer polynomials; den must be monic here."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for d in range(len(num) - len(den), -1, -1):
        c = num[d + len(den) - 1]
        q[d] = c
        if c:
            for j, dj in enumerate(den):
                num[d + j] -= c * dj
    assert not any(num), "polynomial division left a remainder"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients of the r-th cyclotomic polynomial, lowest degree first.

    Computed by dividing x^r - 1 by the cyclotomic polynomials of the proper
    divisors of r.  Degree is Euler's phi(r).
    """
    if r < 1:
        raise ValueError(f"order must be >= 1, got {r}")
    if r == 1:
        return (-1, 1)
    num = [0] * (r + 1)
    num[0], num[r] = -1, 1
    den = [1]
    for d in range(1, r):
        if r % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divexact(num, den))


def euler_phi(r: int) -> int:
    return len(cyclotomic_polynomial(r)) - 1


@lru_cache(maxsize=None)
def _power_table(r: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^d reduced mod the r-th cyclotomic polynomial, d = 0 .. max(r-1, 2*phi-2)."""
    phi = euler_phi(r)
    modulus = cyclotomic_polynomial(r)
    # x^phi = -(lower-order terms); modulus is monic
    top = [Fraction(-c) for c in modulus[:phi]]
    table = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(max(r, 2 * phi - 1)):
        table.append(tuple(cur))
        lead = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if lead:
            nxt = [a + lead * t for a, t in zip(nxt, top)]
        cur = nxt
    return tuple(table)


class CyclotomicNumber:
    """Element of the r-th cyclotomic field, canonical mod the minimal polynomial.

    ``coeffs`` has length phi(r): the element is sum(coeffs[i] * zeta^i) where
    zeta is the distinguished primitive r-th root of unity.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable) -> None:
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        phi = euler_phi(order)
        raw = [Fraction(c) for c in coeffs]
        if len(raw) > phi:
            table = _power_table(order)
            reduced = [Fraction(0)] * phi
            for d, c in enumerate(raw):
                if c:
                    for i, t in enumerate(table[d]):
                        reduced[i] += c * t
            raw = reduced
        else:
            raw = raw + [Fraction(0)] * (phi - len(raw))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(raw))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicNumber":
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls(order, [1])

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        raise TypeError(f"cannot combine CyclotomicNumber with {type(other).__name__}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return CyclotomicNumber(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        conv = [Fraction(0)] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        table = _power_table(self.order)
        out = [Fraction(0)] * len(a)
        for d, c in enumerate(conv):
            if c:
                for i, t in enumerate(table[d]):
                    out[i] += c * t
        return CyclotomicNumber(self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("division by zero")
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = modulus, _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        assert r1, "cyclotomic polynomial is irreducible; gcd must be a unit"
        inv_lead = 1 / r1[0]
        return CyclotomicNumber(self.order, [c * inv_lead for c in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self.inverse() if exponent < 0 else self
        e = abs(exponent)
        acc = CyclotomicNumber.one(self.order)
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- predicates ----------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == CyclotomicNumber.from_rational(self.order, other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational value: {self}")
        return self.coeffs[0]

    # -- presentation ----------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                term = str(c)
            elif c == 1:
                term = mon
            elif c == -1:
                term = f"-{mon}"
            else:
                term = f"{c}*{mon}"
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CyclotomicNumber(order={self.order}, {self})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


# fraction-polynomial helpers for the inverse


def _frac_poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _frac_poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _frac_poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    if len(num) < len(den):
        return [], _trim(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for d in range(len(num) - len(den), -1, -1):
        c = num[d + len(den) - 1] * inv_lead
        q[d] = c
        if c:
            for j, dj in enumerate(den):
                num[d + j] -= c * dj
    return _trim(q), _trim(num)


def zeta_pow(r: int, k: int) -> CyclotomicNumber:
    """zeta_r^k for the distinguished primitive r-th root of unity zeta_r."""
    if r < 1:
        raise ValueError(f"order must be >= 1, got {r}")
    k %= r
    phi = euler_phi(r)
    if k < phi:
        coeffs = [Fraction(0)] * phi
        coeffs[k] = Fraction(1)
        return CyclotomicNumber(r, coeffs)
    return CyclotomicNumber(r, _power_table(r)[k])


def q_pow(r: int, m: int) -> CyclotomicNumber:
    """m-th power of q = zeta_r^{-1}, the clockwise primitive root."""
    return zeta_pow(r, -m)

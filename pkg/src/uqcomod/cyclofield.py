"""Exact arithmetic in cyclotomic fields Q(q) = Q[t]/(Phi_N(t)).

The generator q is the class of t, a primitive N-th root of unity.  Elements
are reduced coefficient vectors of length phi(N) over Q, so equality is
coefficientwise and every operation is exact.  Field elements are immutable;
the only mutable state in this module is memoisation.

Order 1 is allowed (Phi_1 = t - 1, the field is plain Q); the odd-order
convention for quantum-group work is enforced by the callers that need it.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_Q0 = Fraction(0)
_Q1 = Fraction(1)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n // 2 + 1) if n % d == 0]
    out.append(n)
    return out


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; the division is exact by construction
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    assert all(c == 0 for c in num), "inexact cyclotomic division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n(t), ascending degree, as integers.

    Computed by the division recursion Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d.
    """
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _int_poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


_TERM_RE = re.compile(
    r"^(?:(?P<rat>-?\d+(?:/\d+)?)(?:\*(?P<qa>q(?:\^(?P<ea>-?\d+))?))?"
    r"|(?P<sign>-?)(?P<qb>q(?:\^(?P<eb>-?\d+))?))$"
)


class CyclotomicField:
    """Q[t]/(Phi_N(t)) with exact Fraction coefficients."""

    __slots__ = ("order", "modulus", "degree", "_red", "_qpow", "zero", "one")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("field order must be >= 1")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        # reduction rows: _red[m] = coefficients of t^(degree+m) mod Phi_N
        self._red: list[tuple[Fraction, ...]] = []
        self._build_reductions()
        self.zero = CyclotomicNumber(self, (_Q0,) * self.degree)
        self.one = self.from_rational(_Q1)
        self._qpow: dict[int, CyclotomicNumber] = {}

    def _build_reductions(self) -> None:
        d = self.degree
        # t^d = -(lower part of modulus); modulus is monic
        row = [-Fraction(c) for c in self.modulus[:d]]
        self._red.append(tuple(row))
        # each next power: shift and reduce the overflow coefficient;
        # enough rows for both products of reduced elements and raw
        # q-powers up to t^(order-1) (the degree can be much smaller
        # than the order, e.g. phi(6) = 2)
        for _ in range(max(d, self.order) - 1):
            top = row[-1]
            row = [_Q0] + row[:-1]
            if top:
                base = self._red[0]
                row = [row[i] + top * base[i] for i in range(d)]
            self._red.append(tuple(row))

    # -- constructors ---------------------------------------------------

    def element(self, coeffs) -> "CyclotomicNumber":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            cs = self._reduce(cs)
        cs.extend([_Q0] * (self.degree - len(cs)))
        return CyclotomicNumber(self, tuple(cs))

    def from_rational(self, c) -> "CyclotomicNumber":
        return CyclotomicNumber(
            self, (Fraction(c),) + (_Q0,) * (self.degree - 1)
        )

    def q_power(self, k: int) -> "CyclotomicNumber":
        """q^k with the exponent normalised into [0, N)."""
        k %= self.order
        got = self._qpow.get(k)
        if got is None:
            got = self.element([0] * k + [1])
            self._qpow[k] = got
        return got

    @property
    def q(self) -> "CyclotomicNumber":
        return self.q_power(1)

    def _reduce(self, cs: list[Fraction]) -> list[Fraction]:
        d = self.degree
        out = list(cs[:d])
        out.extend([_Q0] * (d - len(out)))
        for m in range(d, len(cs)):
            c = cs[m]
            if c:
                row = self._red[m - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return out

    # -- parsing --------------------------------------------------------

    def parse(self, text: str) -> "CyclotomicNumber":
        """Inverse of str(): accepts e.g. "1/2 - 3*q + q^2"."""
        s = text.strip()
        if not s:
            raise ValueError("empty cyclotomic literal")
        s = s.replace("-", "+-").replace(" ", "")
        parts = [p for p in s.split("+") if p]
        coeffs = [_Q0] * max(self.degree, self.order)
        for part in parts:
            m = _TERM_RE.match(part)
            if m is None:
                raise ValueError(f"bad term {part!r} in cyclotomic literal {text!r}")
            if m.group("rat") is not None:
                c = Fraction(m.group("rat"))
                if m.group("qa") is not None:
                    e = int(m.group("ea") or 1)
                else:
                    e = 0
            else:
                c = Fraction(-1 if m.group("sign") == "-" else 1)
                e = int(m.group("eb") or 1)
            e %= self.order
            if e >= len(coeffs):
                coeffs.extend([_Q0] * (e + 1 - len(coeffs)))
            coeffs[e] += c
        return self.element(coeffs)

    # -- misc -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("CyclotomicField", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"


@lru_cache(maxsize=None)
def field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


class CyclotomicNumber:
    """An element of a CyclotomicField; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: CyclotomicField, coeffs: tuple):
        self.field = fld
        self.coeffs = coeffs

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field.order != self.field.order:
                raise ValueError("mixing elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_rational(self) -> Fraction:
        if any(c != 0 for c in self.coeffs[1:]):
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(
            self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = self.field.degree
        conv = [_Q0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        if d == 1:
            return CyclotomicNumber(self.field, (conv[0],))
        out = conv[:d]
        red = self.field._red
        for m in range(d, 2 * d - 1):
            c = conv[m]
            if c:
                row = red[m - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        # extended Euclid in Q[t] against the (irreducible) modulus
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = _poly_trim(list(self.coeffs))
        s0 = [_Q0]
        s1 = [_Q1]
        while True:
            assert r1, "modulus not coprime to element"
            if len(r1) == 1:
                inv = 1 / r1[0]
                return self.field.element([c * inv for c in s1])
            q_, r_ = _poly_divmod(r0, r1)
            s_ = _poly_sub(s0, _poly_mul_frac(q_, s1))
            r0, r1 = r1, _poly_trim(r_)
            s0, s1 = s1, s_

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = self.field.one
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    # -- canonical serialization --------------------------------------------

    def __str__(self):
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                v = "q" if e == 1 else f"q^{e}"
                body = v if mag == 1 else f"{mag}*{v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<{self} in Q(q_{self.field.order})>"


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [_Q0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = c / lead
            quot[i - dd] = f
            for j in range(dd + 1):
                num[i - dd + j] -= f * den[j]
    return quot, num[:dd]


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_Q0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [_Q0] * (n - len(a))
    b = b + [_Q0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------

_BINOM_MEMO: dict = {}


def q_int(m: int, lam: CyclotomicNumber) -> CyclotomicNumber:
    """(m)_lam = 1 + lam + ... + lam^(m-1); (0)_lam = 0."""
    if m < 0:
        raise ValueError("q_int needs m >= 0")
    out = lam.field.zero
    p = lam.field.one
    for _ in range(m):
        out = out + p
        p = p * lam
    return out


def q_factorial(m: int, lam: CyclotomicNumber) -> CyclotomicNumber:
    """(m)_lam! = (1)_lam (2)_lam ... (m)_lam; (0)_lam! = 1."""
    if m < 0:
        raise ValueError("q_factorial needs m >= 0")
    out = lam.field.one
    for i in range(1, m + 1):
        out = out * q_int(i, lam)
    return out


def q_binomial(m: int, r: int, lam: CyclotomicNumber) -> CyclotomicNumber:
    """Gaussian binomial via the Pascal recursion.

    binom(m,r) = binom(m-1,r-1) + lam^r * binom(m-1,r).  The recursion stays
    well defined when q-integers vanish, which a factorial quotient does not.
    """
    if m < 0 or r < 0:
        raise ValueError("q_binomial needs m, r >= 0")
    if r > m:
        raise ValueError("q_binomial needs r <= m")
    if r == 0 or r == m:
        return lam.field.one
    key = (m, r, lam)
    got = _BINOM_MEMO.get(key)
    if got is None:
        got = q_binomial(m - 1, r - 1, lam) + lam ** r * q_binomial(m - 1, r, lam)
        _BINOM_MEMO[key] = got
    return got

"""Exact arithmetic in the cyclotomic field Q(lambda), lambda = exp(2*pi*i/n).

Elements are polynomials in lambda with rational coefficients, kept fully
reduced modulo the n-th cyclotomic polynomial Phi_n.  Since Phi_n is
irreducible over Q the quotient is a field, so division never meets a zero
divisor.  No floating point is used anywhere.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

Coeffs = tuple[Fraction, ...]


def _trim(coeffs: Sequence[Fraction]) -> Coeffs:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Coeffs:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder in Q[x]; b must be nonzero."""
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(_trim(a))
    quo = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b):
        factor = rem[-1] / lead
        shift = len(rem) - len(b)
        quo[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] -= factor * cb
        rem = list(_trim(rem))
        if not rem:
            break
    return _trim(quo), _trim(rem)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Coeffs:
    """Phi_n as a dense coefficient tuple (constant term first).

    Computed once per n by dividing x^n - 1 by Phi_d for every proper
    divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    poly: Coeffs = _trim([Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)])
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem
    return poly


def phi_degree(n: int) -> int:
    """Euler phi of n, i.e. deg Phi_n."""
    return len(cyclotomic_polynomial(n)) - 1


class CycloNum:
    """An element of Q(lambda) with lambda a primitive n-th root of unity.

    Immutable; coefficient vector always has length exactly deg Phi_n.
    Mixing values with different n raises ValueError, including in equality
    tests.  Plain ints and Fractions coerce to constants.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable[Fraction | int] = ()):
        if n < 1:
            raise ValueError("n must be a positive integer")
        cs = [Fraction(c) for c in coeffs]
        phi = cyclotomic_polynomial(n)
        deg = len(phi) - 1
        if len(cs) > deg:
            _, cs_red = _poly_divmod(cs, phi)
            cs = list(cs_red)
        cs += [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("CycloNum is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int) -> "CycloNum":
        return CycloNum(n)

    @staticmethod
    def one(n: int) -> "CycloNum":
        return CycloNum(n, (1,))

    @staticmethod
    def rational(n: int, value) -> "CycloNum":
        return CycloNum(n, (Fraction(value),))

    # -- coercion helpers ---------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.n != self.n:
                raise ValueError(
                    f"cannot mix Q(lambda_{self.n}) and Q(lambda_{other.n}) values"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.n, other)
        return NotImplemented

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        """The value as a rational number; error if lambda actually occurs."""
        if any(c != 0 for c in self.coeffs[1:]):
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    # -- field arithmetic ----------------------------------------------

    def __add__(self, other) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.n, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.n, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(lambda)")
        phi = cyclotomic_polynomial(self.n)
        r0, r1 = _trim(self.coeffs), phi
        s0, s1 = (Fraction(1),), ()
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            qs1 = _poly_mul(q, s1)
            s0, s1 = s1, _trim(
                [a - b for a, b in zip_longest(s0, qs1, fillvalue=Fraction(0))]
            )
        # r0 is a nonzero constant gcd (Phi_n irreducible)
        g = r0[0]
        return CycloNum(self.n, tuple(c / g for c in s0))

    def __truediv__(self, other) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "CycloNum":
        if k < 0:
            return self.inverse() ** (-k)
        acc = CycloNum.one(self.n)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- presentation / serialization -----------------------------------

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "L" if i == 1 else f"L^{i}"
                sign = "-" if c < 0 else ("+" if parts else "")
                parts.append(f"{sign}{mag}{var}")
        return "".join(parts)

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "CycloNum":
        return CycloNum(int(data["n"]), [Fraction(c) for c in data["coeffs"]])


def root_power(n: int, k: int) -> CycloNum:
    """lambda^k in Q(lambda_n), reduced mod Phi_n; periodic in k with period n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    k %= n
    return CycloNum(n, (Fraction(0),) * k + (Fraction(1),))

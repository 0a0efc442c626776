"""Dense univariate polynomial arithmetic over F_p.

Coefficients are stored constant-term first as canonical residues in [0, p).
The zero polynomial is the empty coefficient tuple and reports degree -1, a
stand-in for "minus infinity" that compares below every true degree.

The underscore-prefixed module functions work on raw coefficient lists and
are shared with the Jacobian group law, where object overhead would dominate;
the Polynomial class is a thin immutable wrapper over the same routines.
"""

from __future__ import annotations

from typing import Iterable

from .field import FieldElement

try:
    from gmpy2 import invert as _gmpy_invert

    def _inv(x: int, p: int) -> int:
        return int(_gmpy_invert(x, p))
except ImportError:  # pragma: no cover

    def _inv(x: int, p: int) -> int:
        return pow(x, -1, p)


# --- raw coefficient-list routines (lists of ints, constant term first) ---


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = a[:] + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _neg(a: list[int], p: int) -> list[int]:
    return [(-x) % p for x in a]


def _scale(a: list[int], k: int, p: int) -> list[int]:
    k %= p
    if k == 0:
        return []
    return _trim([x * k % p for x in a])


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a[:]
    rem = a[:]
    inv_lead = 1 if b[-1] == 1 else _inv(b[-1], p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] * inv_lead % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(rem[:db])


def _mod(a: list[int], b: list[int], p: int) -> list[int]:
    return _divmod(a, b, p)[1]


def _exact_div(a: list[int], b: list[int], p: int) -> list[int]:
    q, r = _divmod(a, b, p)
    if r:
        raise ValueError("polynomial division was expected to be exact")
    return q


def _monic(a: list[int], p: int) -> list[int]:
    if not a:
        raise ZeroDivisionError("the zero polynomial cannot be made monic")
    if a[-1] == 1:
        return a[:]
    return _scale(a, _inv(a[-1], p), p)


def _xgcd(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Extended Euclid on coefficient lists: returns monic d, s, t with s*a + t*b = d."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    if not r0:
        raise ValueError("gcd of two zero polynomials is undefined")
    inv = 1 if r0[-1] == 1 else _inv(r0[-1], p)
    return _scale(r0, inv, p), _scale(s0, inv, p), _scale(t0, inv, p)


def _eval(a: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _derivative(a: list[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


# --- public wrapper ---


class Polynomial:
    """Immutable dense polynomial over F_p.

    Construct from any iterable of ints or FieldElements, constant term
    first; coefficients are reduced mod p and trailing zeros are trimmed.
    """

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Iterable[int | FieldElement], p: int):
        raw = [int(c) % p for c in coeffs]
        while raw and raw[-1] == 0:
            raw.pop()
        self.coeffs = tuple(raw)
        self.p = p

    @classmethod
    def _wrap(cls, coeffs: list[int], p: int) -> Polynomial:
        # Internal: coeffs already canonical and trimmed.
        self = object.__new__(cls)
        self.coeffs = tuple(coeffs)
        self.p = p
        return self

    @classmethod
    def zero(cls, p: int) -> Polynomial:
        return cls._wrap([], p)

    @classmethod
    def one(cls, p: int) -> Polynomial:
        return cls._wrap([1], p)

    @classmethod
    def x(cls, p: int) -> Polynomial:
        return cls._wrap([0, 1], p)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElement(self.coeffs[-1], self.p)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        """Coefficient of x^i as a canonical int (0 beyond the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Polynomial) -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return Polynomial._wrap(_add(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return Polynomial._wrap(_sub(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap(_neg(list(self.coeffs), self.p), self.p)

    def __mul__(self, other: Polynomial | FieldElement | int) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return Polynomial._wrap(_mul(list(self.coeffs), list(other.coeffs), self.p), self.p)
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return Polynomial._wrap(_scale(list(self.coeffs), other.value, self.p), self.p)
        if isinstance(other, int):
            return Polynomial._wrap(_scale(list(self.coeffs), other, self.p), self.p)
        return NotImplemented

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        q, r = _divmod(list(self.coeffs), list(other.coeffs), self.p)
        return Polynomial._wrap(q, self.p), Polynomial._wrap(r, self.p)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __call__(self, x: int | FieldElement) -> int | FieldElement:
        """Horner evaluation.  Returns the same type it was given."""
        if isinstance(x, FieldElement):
            if x.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {x.p}")
            return FieldElement(_eval(list(self.coeffs), x.value, self.p), self.p)
        return _eval(list(self.coeffs), x % self.p, self.p)

    def monic(self) -> Polynomial:
        """Scalar-normalize to leading coefficient 1 (error on zero)."""
        return Polynomial._wrap(_monic(list(self.coeffs), self.p), self.p)

    def derivative(self) -> Polynomial:
        """Formal derivative."""
        return Polynomial._wrap(_derivative(list(self.coeffs), self.p), self.p)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.p))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)}, p={self.p})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(parts)


def xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Extended gcd: (d, s, t) with d = gcd(a, b) monic and s*a + t*b = d.

    Raises ValueError if both inputs are zero.  gcd(a, 0) is monic(a) with
    s the inverse of a's leading coefficient.
    """
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    d, s, t = _xgcd(list(a.coeffs), list(b.coeffs), a.p)
    return (
        Polynomial._wrap(d, a.p),
        Polynomial._wrap(s, a.p),
        Polynomial._wrap(t, a.p),
    )

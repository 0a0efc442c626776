"""Prime-field arithmetic: canonical residues modulo an odd prime p.

Every element carries its modulus, so values from different fields can never
be combined by accident.  Plain Python integers are used throughout, which
keeps one exact code path for toy moduli (p = 7) and demo-sized moduli
(p > 2**64).

The module-level functions ``legendre_symbol`` and ``sqrt_mod`` operate on
raw integers; they are the hot path for curve point enumeration and for
embedding byte blocks into group elements.
"""

from __future__ import annotations


def legendre_symbol(a: int, p: int) -> int:
    """Return 0 if a = 0 (mod p), +1 if a is a nonzero square, -1 otherwise.

    p must be an odd prime (not checked here; curve validation owns that).
    """
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a modulo an odd prime p, or None for a non-residue.

    Deterministic: of the two roots {y, p - y} the numerically smaller one is
    returned.  For p = 3 (mod 4) the a^((p+1)/4) shortcut applies; otherwise
    Tonelli-Shanks.
    """
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        return None
    if p % 4 == 3:
        y = pow(a, (p + 1) // 4, p)
        return min(y, p - y)
    # Tonelli-Shanks.  Write p - 1 = q * 2^s with q odd, then walk the
    # 2-Sylow subgroup down to the root.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    y = pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        y = y * b % p
    return min(y, p - y)


class FieldElement:
    """An element of F_p, stored as the canonical representative in [0, p).

    Supports +, -, *, /, ** and unary negation.  Mixed operations with plain
    ints coerce the int into the same field.  Operations between elements of
    different fields raise ValueError.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    @classmethod
    def zero(cls, p: int) -> FieldElement:
        return cls(0, p)

    @classmethod
    def one(cls, p: int) -> FieldElement:
        return cls(1, p)

    def _coerce(self, other: object) -> int | None:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value - v, self.p)

    def __rsub__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(v - self.value, self.p)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.p)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * FieldElement(v, self.p).inverse()

    def __rtruediv__(self, other: FieldElement | int) -> FieldElement:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(v, self.p) * self.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        """a**e mod p.  By convention a**0 = 1, including 0**0."""
        return FieldElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> FieldElement:
        """Multiplicative inverse (extended Euclid, via pow(x, -1, p))."""
        if self.value == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def sqrt(self) -> FieldElement | None:
        """Canonical square root, or None if self is a non-residue."""
        y = sqrt_mod(self.value, self.p)
        return None if y is None else FieldElement(y, self.p)

    def legendre(self) -> int:
        return legendre_symbol(self.value, self.p)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value} mod {self.p})"

    def __str__(self) -> str:
        return str(self.value)

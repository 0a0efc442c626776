"""Hyperelliptic curves y^2 + h(x) y = f(x) over F_p and their Jacobians.

A curve of genus g has f monic of degree 2g + 1 and deg h <= g, with a single
point at infinity.  Group elements are reduced divisors in Mumford form
(u, v): u monic, deg v < deg u <= g, and u | v^2 + v h - f.  The identity is
(1, 0).

Addition is Cantor's algorithm.  Composition resolves

    d = gcd(u1, u2, v1 + v2 + h) = e1 u1 + e2 u2 + e3 (v1 + v2 + h)

and sets u = u1 u2 / d^2 and v = (e1 u1 v2 + e2 u2 v1 + e3 (v1 v2 + f)) / d
reduced mod u.  Reduction then iterates u <- monic((f - v h - v^2) / u),
v <- (-h - v) mod u until deg u <= g.  Only odd characteristic is supported;
nonsingularity is checked as squarefreeness of F = f + h^2/4.

Explicit divisors (formal point sums) are provided as a conversion target
for inspection and small-field testing; Mumford pairs are the computational
representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement, legendre_symbol, sqrt_mod
from .poly import (
    Polynomial,
    _add,
    _divmod,
    _eval,
    _exact_div,
    _mod,
    _monic,
    _mul,
    _neg,
    _sub,
    _trim,
    _xgcd,
)


class CurveError(ValueError):
    """A curve or domain parameter set violates its invariants."""


# --- curve parameters ---


@dataclass(frozen=True)
class CurveParams:
    """The curve C: y^2 + h(x) y = f(x) over F_p, of genus >= 1."""

    p: int
    genus: int
    f: Polynomial
    h: Polynomial


def validate_curve(curve: CurveParams) -> None:
    """Check all curve invariants; raise CurveError on the first violation.

    Requires: p an odd prime >= 3, genus >= 1, f monic of degree exactly
    2g + 1, deg h <= g, and the curve nonsingular (F = f + h^2/4 squarefree,
    which is the right criterion in odd characteristic).
    """
    p, g, f, h = curve.p, curve.genus, curve.f, curve.h
    if p < 3 or p % 2 == 0:
        raise CurveError(f"field characteristic must be an odd prime >= 3, got {p}")
    if g < 1:
        raise CurveError(f"genus must be >= 1, got {g}")
    if f.p != p or h.p != p:
        raise CurveError("f and h must be defined over F_p")
    if f.degree != 2 * g + 1:
        raise CurveError(f"f must have degree 2g+1 = {2 * g + 1}, got {f.degree}")
    if not f.is_monic():
        raise CurveError("f must be monic")
    if h.degree > g:
        raise CurveError(f"h must have degree <= g = {g}, got {h.degree}")
    inv4 = pow(4, -1, p)
    hh = _mul(list(h.coeffs), list(h.coeffs), p)
    big_f = _add(list(f.coeffs), [c * inv4 % p for c in hh], p)
    d, _, _ = _xgcd(big_f, _derivative_raw(big_f, p), p)
    if len(d) != 1:
        raise CurveError("curve is singular: f + h^2/4 is not squarefree")


def _derivative_raw(a: list[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


# --- points ---


@dataclass(frozen=True)
class AffinePoint:
    """An affine point (x, y), coordinates as canonical residues in [0, p)."""

    x: int
    y: int

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


class _PointAtInfinity:
    """The unique point at infinity; a singleton, its own opposite."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _PointAtInfinity()

PointOnCurve = AffinePoint | _PointAtInfinity


def is_on_curve(point: PointOnCurve, curve: CurveParams) -> bool:
    """Membership test y^2 + h(x) y = f(x); infinity is always on the curve."""
    if point is INFINITY:
        return True
    p = curve.p
    x, y = point.x % p, point.y % p
    hx = _eval(list(curve.h.coeffs), x, p)
    fx = _eval(list(curve.f.coeffs), x, p)
    return (y * y + hx * y - fx) % p == 0


def opposite_point(point: PointOnCurve, curve: CurveParams) -> PointOnCurve:
    """The hyperelliptic involution (x, y) -> (x, -y - h(x)); fixes infinity."""
    if not is_on_curve(point, curve):
        raise ValueError(f"point {point!r} is not on the curve")
    if point is INFINITY:
        return INFINITY
    p = curve.p
    hx = _eval(list(curve.h.coeffs), point.x, p)
    return AffinePoint(point.x % p, (-point.y - hx) % p)


def is_special_point(point: PointOnCurve, curve: CurveParams) -> bool:
    """A point equal to its own opposite (a ramification point)."""
    return opposite_point(point, curve) == point


# --- explicit (point-sum) divisors ---


class ExplicitDivisor:
    """A formal integer combination of curve points, sum(m_P * [P]).

    Stored as a point -> multiplicity map with zero entries dropped.  The
    point at infinity participates like any other point and typically carries
    the negative balancing multiplicity of a semi-reduced divisor.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[PointOnCurve, int] | None = None):
        self._terms = {pt: m for pt, m in (terms or {}).items() if m != 0}

    @classmethod
    def from_affine_points(cls, points: list[AffinePoint]) -> ExplicitDivisor:
        """sum([P_i]) - n [infinity] for the given affine points (with repeats)."""
        terms: dict[PointOnCurve, int] = {}
        for pt in points:
            terms[pt] = terms.get(pt, 0) + 1
        if points:
            terms[INFINITY] = -len(points)
        return cls(terms)

    @property
    def terms(self) -> dict[PointOnCurve, int]:
        return dict(self._terms)

    def degree(self) -> int:
        """deg(D) = sum of all multiplicities, infinity included."""
        return sum(self._terms.values())

    def order_at(self, point: PointOnCurve) -> int:
        """Multiplicity of a point in the divisor (0 if absent)."""
        return self._terms.get(point, 0)

    def support(self) -> list[PointOnCurve]:
        return list(self._terms)

    def affine_weight(self) -> int:
        return sum(m for pt, m in self._terms.items() if pt is not INFINITY)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExplicitDivisor):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "ExplicitDivisor(0)"
        bits = [f"{m}*[{pt!r}]" for pt, m in sorted(
            self._terms.items(), key=lambda kv: (kv[0] is INFINITY, repr(kv[0])))]
        return "ExplicitDivisor(" + " + ".join(bits) + ")"


def is_semi_reduced(div: ExplicitDivisor, curve: CurveParams) -> bool:
    """Semi-reduced: effective affine part, no {P, opposite(P)} pair with
    P != opposite(P), special points at multiplicity <= 1, and the infinity
    multiplicity balancing the affine weight to degree zero."""
    affine_weight = 0
    for pt, m in div.terms.items():
        if not is_on_curve(pt, curve):
            raise ValueError(f"point {pt!r} is not on the curve")
        if pt is INFINITY:
            continue
        if m < 0:
            return False
        affine_weight += m
        opp = opposite_point(pt, curve)
        if opp == pt:
            if m > 1:
                return False
        elif div.order_at(opp) != 0:
            return False
    return div.order_at(INFINITY) == -affine_weight


def is_reduced(div: ExplicitDivisor, curve: CurveParams) -> bool:
    """Reduced: semi-reduced with affine weight <= genus."""
    return is_semi_reduced(div, curve) and div.affine_weight() <= curve.genus


# --- Mumford representation ---


@dataclass(frozen=True)
class MumfordDivisor:
    """A reduced divisor as the Mumford pair (u, v).

    Invariants checked at construction: u monic and nonzero, deg v < deg u,
    matching moduli.  The curve-dependent membership condition
    u | v^2 + v h - f is checked by is_valid_divisor and at every decode
    boundary, not per group operation.
    """

    u: Polynomial
    v: Polynomial

    def __post_init__(self):
        if self.u.p != self.v.p:
            raise ValueError(f"modulus mismatch: {self.u.p} vs {self.v.p}")
        if self.u.is_zero() or not self.u.is_monic():
            raise ValueError("u must be monic and nonzero")
        if self.v.degree >= self.u.degree:
            raise ValueError("v must have degree strictly below deg u")

    @classmethod
    def identity(cls, p: int) -> MumfordDivisor:
        return cls(Polynomial.one(p), Polynomial.zero(p))

    @property
    def is_identity(self) -> bool:
        return self.u.degree == 0

    @property
    def weight(self) -> int:
        """Affine weight of the divisor, deg u."""
        return self.u.degree

    def __repr__(self) -> str:
        return f"MumfordDivisor(u={self.u}, v={self.v})"


def is_valid_divisor(div: MumfordDivisor, curve: CurveParams) -> bool:
    """Full validity under a curve: shape, weight bound, and membership."""
    if div.u.p != curve.p:
        return False
    if div.u.degree > curve.genus:
        return False
    p = curve.p
    u, v = list(div.u.coeffs), list(div.v.coeffs)
    lhs = _add(_mul(v, v, p), _mul(v, list(curve.h.coeffs), p), p)
    return not _mod(_sub(lhs, list(curve.f.coeffs), p), u, p)


# --- Cantor's algorithm on raw coefficient lists ---


def _cantor_compose(u1, v1, u2, v2, f, h, p):
    d1, e1, e2 = _xgcd(u1, u2, p)
    if len(d1) == 1:
        # Coprime u1, u2 (the generic case): the composed v is the unique
        # CRT solution v = v1 (mod u1), v = v2 (mod u2); e1 u1 = 1 (mod u2).
        t = _mod(_mul(e1, _sub(v2, v1, p), p), u2, p)
        return _mul(u1, u2, p), _add(v1, _mul(u1, t, p), p)
    cross = _add(_add(v1, v2, p), h, p)  # v1 + v2 + h
    d, c1, c2 = _xgcd(d1, cross, p)
    s1, s2, s3 = _mul(c1, e1, p), _mul(c1, e2, p), c2
    if len(d) == 1:
        u = _mul(u1, u2, p)
    else:
        u = _exact_div(_mul(u1, u2, p), _mul(d, d, p), p)
    num = _add(_mul(_mul(s1, u1, p), v2, p), _mul(_mul(s2, u2, p), v1, p), p)
    if s3:
        num = _add(num, _mul(s3, _add(_mul(v1, v2, p), f, p), p), p)
    if len(d) != 1:
        num = _exact_div(num, d, p)
    v = _mod(num, u, p)
    return u, v


def _cantor_reduce(u, v, f, h, g, p):
    while len(u) - 1 > g:
        num = _sub(f, _add(_mul(v, h, p), _mul(v, v, p), p), p)
        u = _monic(_exact_div(num, u, p), p)
        v = _mod(_neg(_add(h, v, p), p), u, p)
    return u, v


def _cantor_add(u1, v1, u2, v2, f, h, g, p):
    if len(u1) == 1:  # left operand is the identity
        return u2[:], v2[:]
    if len(u2) == 1:
        return u1[:], v1[:]
    u, v = _cantor_compose(u1, v1, u2, v2, f, h, p)
    return _cantor_reduce(u, v, f, h, g, p)


def _raw(div: MumfordDivisor) -> tuple[list[int], list[int]]:
    return list(div.u.coeffs), list(div.v.coeffs)


def _wrap_divisor(u: list[int], v: list[int], p: int) -> MumfordDivisor:
    return MumfordDivisor(Polynomial._wrap(u, p), Polynomial._wrap(v, p))


def jac_add(a: MumfordDivisor, b: MumfordDivisor, curve: CurveParams) -> MumfordDivisor:
    """Sum of two reduced divisors under Cantor composition and reduction."""
    p = curve.p
    if a.u.p != p or b.u.p != p:
        raise ValueError("divisor modulus does not match the curve")
    u1, v1 = _raw(a)
    u2, v2 = _raw(b)
    u, v = _cantor_add(u1, v1, u2, v2, list(curve.f.coeffs), list(curve.h.coeffs),
                       curve.genus, p)
    return _wrap_divisor(u, v, p)


def jac_neg(a: MumfordDivisor, curve: CurveParams) -> MumfordDivisor:
    """Inverse of a reduced divisor: (u, (-v - h) mod u)."""
    p = curve.p
    if a.u.p != p:
        raise ValueError("divisor modulus does not match the curve")
    u, v = _raw(a)
    return _wrap_divisor(u, _mod(_neg(_add(v, list(curve.h.coeffs), p), p), u, p), p)


def scalar_mul(n: int, div: MumfordDivisor, curve: CurveParams) -> MumfordDivisor:
    """n-fold sum of a divisor by left-to-right double-and-add; 0*D = identity."""
    if n < 0:
        raise ValueError("scalar must be non-negative")
    p = curve.p
    if div.u.p != p:
        raise ValueError("divisor modulus does not match the curve")
    if n == 0:
        return MumfordDivisor.identity(p)
    f, h, g = list(curve.f.coeffs), list(curve.h.coeffs), curve.genus
    bu, bv = _raw(div)
    ru, rv = [1], []
    for bit in bin(n)[2:]:
        ru, rv = _cantor_add(ru, rv, ru, rv, f, h, g, p)
        if bit == "1":
            ru, rv = _cantor_add(ru, rv, bu, bv, f, h, g, p)
    return _wrap_divisor(ru, rv, p)


class FixedBaseMultiplier:
    """Repeated scalar multiples of one base divisor, via an 8-bit comb table.

    Precomputes d * (256^w * B) for every window w and digit d, so each
    multiply costs at most one group addition per base-256 digit of the
    scalar.  Worth building when the same base is multiplied more than a few
    dozen times (bulk ElGamal encryption); agrees with scalar_mul exactly.
    """

    def __init__(self, base: MumfordDivisor, curve: CurveParams, max_scalar: int):
        self._curve = curve
        self._p = curve.p
        self._f = list(curve.f.coeffs)
        self._h = list(curve.h.coeffs)
        self._g = curve.genus
        windows = max(1, (max_scalar.bit_length() + 7) // 8)
        table = []
        cur = _raw(base)
        for _ in range(windows):
            row = [([1], [])]
            acc = cur
            for _ in range(255):
                row.append(acc)
                acc = _cantor_add(acc[0], acc[1], cur[0], cur[1],
                                  self._f, self._h, self._g, self._p)
            cur = acc  # 256 * previous window base
            table.append(row)
        self._table = table

    def mul(self, n: int) -> MumfordDivisor:
        if n < 0:
            raise ValueError("scalar must be non-negative")
        if n >> (8 * len(self._table)):
            raise ValueError("scalar exceeds the precomputed table range")
        ru, rv = [1], []
        w = 0
        while n:
            digit = n & 0xFF
            if digit:
                tu, tv = self._table[w][digit]
                ru, rv = _cantor_add(ru, rv, tu, tv, self._f, self._h, self._g, self._p)
            n >>= 8
            w += 1
        return _wrap_divisor(ru, rv, self._p)


def random_divisor(curve: CurveParams, rng) -> MumfordDivisor:
    """A pseudo-random reduced divisor, for tests and demos (not security).

    Composes genus-many random curve points: x is rejection-sampled until the
    fiber quadratic y^2 + h(x) y = f(x) is solvable, one extra rng bit picks
    between the two branches y = (-h(x) +/- s) / 2 with s the canonical root
    of the discriminant h^2 + 4f at x.
    """
    p = curve.p
    inv2 = pow(2, -1, p)
    f, h, g = list(curve.f.coeffs), list(curve.h.coeffs), curve.genus
    acc_u, acc_v = [1], []
    for _ in range(curve.genus):
        for _ in range(128 * max(p.bit_length(), 8)):
            x = rng.randrange(p)
            hx = _eval(h, x, p)
            disc = (hx * hx + 4 * _eval(f, x, p)) % p
            s = sqrt_mod(disc, p)
            if s is None:
                continue
            y = ((s if rng.randrange(2) == 0 else -s) - hx) * inv2 % p
            acc_u, acc_v = _cantor_add(acc_u, acc_v, [(-x) % p, 1],
                                       [y] if y else [], f, h, g, p)
            break
        else:
            raise RuntimeError("could not sample a curve point (degenerate curve?)")
    return _wrap_divisor(acc_u, acc_v, p)


# --- conversions between explicit and Mumford form ---


def explicit_to_mumford(div: ExplicitDivisor, curve: CurveParams) -> MumfordDivisor:
    """Mumford pair of a reduced explicit divisor.

    u = prod (x - x_i)^{m_i}; v interpolates y_i on the support and, for
    multiplicities above one, is Hensel-lifted against the curve equation so
    that u | v^2 + v h - f holds exactly.  Local solutions at distinct x_i
    are merged by polynomial CRT.
    """
    if not is_reduced(div, curve):
        raise ValueError("divisor is not reduced")
    p = curve.p
    f, h = list(curve.f.coeffs), list(curve.h.coeffs)
    u_total = [1]
    v_total: list[int] = []
    for pt, m in div.terms.items():
        if pt is INFINITY:
            continue
        x0, y0 = pt.x % p, pt.y % p
        lin = [(-x0) % p, 1]  # x - x0
        v_loc = [y0] if y0 else []
        modulus = lin
        for k in range(1, m):
            # One linear Hensel step: v <- v + t (x - x0)^k with t chosen so
            # that v^2 + v h - f vanishes to order k + 1 at x0.
            err = _add(_mul(v_loc, v_loc, p), _mul(v_loc, h, p), p)
            err = _sub(err, f, p)
            quot = _exact_div_by_power(err, x0, k, p)
            denom = (2 * y0 + _eval(h, x0, p)) % p
            t = (-_eval(quot, x0, p)) * pow(denom, -1, p) % p
            v_loc = _add(v_loc, _scale_raw(modulus, t, p), p)
            modulus = _mul(modulus, lin, p)
        if len(u_total) == 1:  # first affine point in the support
            u_total, v_total = modulus, v_loc
        else:
            # CRT merge: moduli are powers of distinct linear factors.
            d, s, t = _xgcd(u_total, modulus, p)
            if len(d) != 1:
                raise ValueError("unsupported multiplicity configuration")
            combined = _add(
                _mul(_mul(v_total, t, p), modulus, p),
                _mul(_mul(v_loc, s, p), u_total, p),
                p,
            )
            u_total = _mul(u_total, modulus, p)
            v_total = _mod(combined, u_total, p)
    return _wrap_divisor(u_total, v_total, p)


def _scale_raw(a: list[int], k: int, p: int) -> list[int]:
    k %= p
    if k == 0:
        return []
    return _trim([c * k % p for c in a])


def _exact_div_by_power(a: list[int], x0: int, k: int, p: int) -> list[int]:
    lin = [(-x0) % p, 1]
    for _ in range(k):
        a = _exact_div(a, lin, p)
    return a


MUMFORD_SPLIT_MAX_P = 1 << 20


def mumford_to_explicit(div: MumfordDivisor, curve: CurveParams) -> ExplicitDivisor | None:
    """Point sum of a Mumford divisor, or None when u has a non-linear factor.

    Roots of u are found by exhaustive search over F_p, so this is a
    small-field inspection tool; fields above 2^20 are rejected outright.
    None (the "irreducible u" outcome) is a legitimate result, not an error.
    """
    p = curve.p
    if p > MUMFORD_SPLIT_MAX_P:
        raise ValueError("field too large for exhaustive root search")
    if not is_valid_divisor(div, curve):
        raise ValueError("invalid Mumford divisor for this curve")
    u = list(div.u.coeffs)
    v = list(div.v.coeffs)
    terms: dict[PointOnCurve, int] = {}
    weight = 0
    for x in range(p):
        if len(u) == 1:
            break
        mult = 0
        while len(u) > 1 and _eval(u, x, p) == 0:
            u = _exact_div(u, [(-x) % p, 1], p)
            mult += 1
        if mult:
            terms[AffinePoint(x, _eval(v, x, p))] = mult
            weight += mult
    if len(u) != 1:
        return None
    if weight:
        terms[INFINITY] = -weight
    return ExplicitDivisor(terms)


# --- domain parameters ---


@dataclass(frozen=True)
class DomainParams:
    """A curve together with a base divisor of known prime order.

    The group order of the full Jacobian is deliberately not part of the
    domain: base orders are supplied externally (enumerated for toy fields,
    carried by published parameter files for demo fields).
    """

    curve: CurveParams
    base: MumfordDivisor
    order: int  # prime order of the base divisor


def validate_domain(dp: DomainParams) -> None:
    """Check curve invariants plus base membership, primality and order."""
    validate_curve(dp.curve)
    if dp.base.is_identity:
        raise CurveError("base divisor must not be the identity")
    if not is_valid_divisor(dp.base, dp.curve):
        raise CurveError("base divisor is not an element of the Jacobian")
    if dp.order < 2:
        raise CurveError(f"base order must be a prime >= 2, got {dp.order}")
    from sympy import isprime  # deferred: sympy import is slow

    if not isprime(dp.order):
        raise CurveError(f"base order {dp.order} is not prime")
    if not scalar_mul(dp.order, dp.base, dp.curve).is_identity:
        raise CurveError("base divisor order does not divide the declared order")

"""Brute-force ground truth for small curves.

Everything here is deliberately independent of the Cantor group law: points
come from exhaustive membership testing, the divisor list from scanning all
Mumford pairs, and the genus-1 law from textbook chord-and-tangent formulas.
Hard size guards keep the oracle from silently running for hours.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .field import legendre_symbol, sqrt_mod
from .jacobian import (
    INFINITY,
    AffinePoint,
    CurveParams,
    MumfordDivisor,
    PointOnCurve,
    is_on_curve,
    jac_add,
)
from .poly import Polynomial, _add, _eval, _mod, _mul, _sub

POINT_ENUM_MAX_P = 1 << 20
DIVISOR_ENUM_MAX_PAIRS = 10**7


@dataclass(frozen=True)
class EnumeratedGroup:
    """The complete Jacobian of a small curve, listed element by element."""

    curve: CurveParams
    elements: tuple[MumfordDivisor, ...]
    order: int


def enumerate_points(curve: CurveParams) -> list[PointOnCurve]:
    """All points of the curve over F_p: infinity first, then affine points
    sorted by (x, y).  Guarded to p <= 2^20."""
    p = curve.p
    if p > POINT_ENUM_MAX_P:
        raise ValueError(f"field too large for point enumeration (p > {POINT_ENUM_MAX_P})")
    f, h = list(curve.f.coeffs), list(curve.h.coeffs)
    inv2 = pow(2, -1, p)
    points: list[PointOnCurve] = [INFINITY]
    for x in range(p):
        hx = _eval(h, x, p)
        disc = (hx * hx + 4 * _eval(f, x, p)) % p
        ls = legendre_symbol(disc, p)
        if ls < 0:
            continue
        if ls == 0:
            points.append(AffinePoint(x, (-hx) * inv2 % p))
        else:
            s = sqrt_mod(disc, p)
            ys = sorted({(s - hx) * inv2 % p, (-s - hx) * inv2 % p})
            points.extend(AffinePoint(x, y) for y in ys)
    return points


def enumerate_reduced_divisors(curve: CurveParams) -> EnumeratedGroup:
    """All Mumford pairs (u, v) with u monic, deg u <= g, deg v < deg u and
    u | v^2 + v h - f.  This is exactly the rational Jacobian, so the count
    is the group order.  Guarded to p^(2g) <= 10^7 candidate pairs."""
    p, g = curve.p, curve.genus
    if p ** (2 * g) > DIVISOR_ENUM_MAX_PAIRS:
        raise ValueError("curve too large for divisor enumeration (p^(2g) > 10^7)")
    f, h = list(curve.f.coeffs), list(curve.h.coeffs)
    elements = [MumfordDivisor.identity(p)]
    for d in range(1, g + 1):
        for u_tail in product(range(p), repeat=d):
            u = list(u_tail) + [1]
            fm = _mod(f, u, p)
            hm = _mod(h, u, p)
            for v_tail in product(range(p), repeat=d):
                v = list(v_tail)
                while v and v[-1] == 0:
                    v.pop()
                lhs = _add(_mul(v, v, p), _mul(v, hm, p), p)
                if not _mod(_sub(lhs, fm, p), u, p):
                    elements.append(
                        MumfordDivisor(Polynomial._wrap(u, p), Polynomial._wrap(v, p))
                    )
    return EnumeratedGroup(curve=curve, elements=tuple(elements), order=len(elements))


def group_order_bruteforce(curve: CurveParams) -> int:
    """Jacobian order by exhaustive enumeration (small curves only)."""
    return enumerate_reduced_divisors(curve).order


def element_order(div: MumfordDivisor, group: EnumeratedGroup) -> int:
    """Least n >= 1 with n * D = identity; checked to divide the group order."""
    acc = div
    n = 1
    while not acc.is_identity:
        acc = jac_add(acc, div, group.curve)
        n += 1
        if n > group.order:
            raise ArithmeticError("element order exceeds the group order")
    if group.order % n != 0:
        raise ArithmeticError("element order does not divide the group order")
    return n


def ec_chord_tangent_add(a: PointOnCurve, b: PointOnCurve, curve: CurveParams) -> PointOnCurve:
    """Textbook chord-and-tangent addition on y^2 = x^3 + a2 x + a0.

    Only short-form genus-1 curves are accepted (h = 0, no x^2 term); this is
    the independent cross-check for the Cantor law at genus 1.
    """
    if curve.genus != 1 or not curve.h.is_zero() or curve.f.degree != 3 or curve.f[2] != 0:
        raise ValueError("chord-tangent law needs a short-form genus-1 curve")
    for pt in (a, b):
        if not is_on_curve(pt, curve):
            raise ValueError(f"point {pt!r} is not on the curve")
    if a is INFINITY:
        return b
    if b is INFINITY:
        return a
    p = curve.p
    if a.x == b.x and (a.y + b.y) % p == 0:
        return INFINITY
    if a == b:
        slope = (3 * a.x * a.x + curve.f[1]) * pow(2 * a.y, -1, p) % p
    else:
        slope = (b.y - a.y) * pow(b.x - a.x, -1, p) % p
    x3 = (slope * slope - a.x - b.x) % p
    y3 = (slope * (a.x - x3) - a.y) % p
    return AffinePoint(x3, y3)


def hasse_weil_interval(p: int, genus: int) -> tuple[int, int]:
    """[(sqrt(p) - 1)^(2g), (sqrt(p) + 1)^(2g)] rounded inward, exactly.

    Expands both endpoints as A + B*sqrt(p) with integer A, B and rounds via
    integer square roots; no floating point is involved.
    """
    def endpoint(sign: int) -> tuple[int, int]:
        a = b = 0
        for i in range(2 * genus + 1):
            c = math.comb(2 * genus, i) * sign ** (2 * genus - i)
            if i % 2 == 0:
                a += c * p ** (i // 2)
            else:
                b += c * p ** ((i - 1) // 2)
        return a, b

    def floor_val(a: int, b: int) -> int:
        if b >= 0:
            return a + math.isqrt(b * b * p)
        s = math.isqrt(b * b * p)
        return a - s if s * s == b * b * p else a - s - 1

    def ceil_val(a: int, b: int) -> int:
        return -floor_val(-a, -b)

    lo_a, lo_b = endpoint(-1)
    hi_a, hi_b = endpoint(+1)
    return ceil_val(lo_a, lo_b), floor_val(hi_a, hi_b)


def enumeration_report(group: EnumeratedGroup) -> str:
    """Plain-text listing of a small Jacobian, one hex divisor per line."""
    from .codec import encode_divisor

    lines = sorted(encode_divisor(d, group.curve).hex() for d in group.elements)
    return "\n".join(lines) + "\n"

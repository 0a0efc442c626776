"""Ready-made curves and domain parameters for tests, demos and the CLI.

Toy domains are built at call time: the Jacobian is enumerated, the group
order factored, and a base divisor of largest-prime order constructed as a
cofactor multiple.  Demo domains carry pinned constants found once by
scripts/make_demo_domains.py; their curves are of the supersingular family
y^2 = x^5 + a with p = 2 or 3 (mod 5), whose Jacobian over F_p has exactly
p^2 + 1 elements.  That order formula is cross-checked against enumeration
on small fields in the test suite, and every load re-verifies that the base
divisor is annihilated by its declared prime order.

Demo parameters are for demonstrations: supersingular curves and small
prime-order subgroups are deliberate throughput choices, not a hardened
production configuration.
"""

from __future__ import annotations

from .jacobian import (
    CurveParams,
    DomainParams,
    MumfordDivisor,
    scalar_mul,
    validate_curve,
    validate_domain,
)
from .oracle import enumerate_reduced_divisors
from .poly import Polynomial


def toy_curve_f7() -> CurveParams:
    """Genus-2 curve y^2 = x^5 + 3x + 1 over F_7 (the workhorse test curve)."""
    return _curve(7, 2, [1, 3, 0, 0, 0, 1], [])


def toy_curve_f11() -> CurveParams:
    """Genus-2 curve y^2 = x^5 + 3x + 1 over F_11."""
    return _curve(11, 2, [1, 3, 0, 0, 0, 1], [])


def toy_curve_f13_h() -> CurveParams:
    """Genus-2 curve y^2 + x y = x^5 + 1 over F_13 (nonzero h)."""
    return _curve(13, 2, [1, 0, 0, 0, 0, 1], [0, 1])


def elliptic_curve_f13() -> CurveParams:
    """Short-form elliptic curve y^2 = x^3 + 2x + 3 over F_13, for the
    chord-tangent cross-check."""
    return _curve(13, 1, [3, 2, 0, 1], [])


def _curve(p: int, genus: int, f: list[int], h: list[int]) -> CurveParams:
    curve = CurveParams(p=p, genus=genus, f=Polynomial(f, p), h=Polynomial(h, p))
    validate_curve(curve)
    return curve


def build_toy_domain(curve: CurveParams) -> DomainParams:
    """Domain parameters for a small curve, with the base order supplied by
    exhaustive enumeration: r is the largest prime factor of the Jacobian
    order and the base is a cofactor multiple of the first element that does
    not collapse to the identity."""
    from sympy import factorint  # deferred: sympy import is slow

    group = enumerate_reduced_divisors(curve)
    order = group.order
    r = max(factorint(order))
    cofactor = order // r
    for candidate in group.elements:
        base = scalar_mul(cofactor, candidate, curve)
        if not base.is_identity:
            dp = DomainParams(curve=curve, base=base, order=r)
            validate_domain(dp)
            return dp
    raise ArithmeticError("no base divisor of the requested order exists")


def toy_domain_f7() -> DomainParams:
    return build_toy_domain(toy_curve_f7())


# --- pinned demo domains (generated by scripts/make_demo_domains.py) ---

_DEMO_64 = dict(
    p=9223828473296009117,
    f=[3, 0, 0, 0, 0, 1],
    u=[2135961120146878084, 2826951877660999907, 1],
    v=[3513600022007056131, 6201741024762988876],
    r=1099511627873,
)

_DEMO_512 = dict(
    p=int("67039039649712985497870124991029230637396829102961966888617807218608820"
          "15036773488400937149083451713845015929093243025426876941405973284973217"
          "022144007063"),
    f=[3, 0, 0, 0, 0, 1],
    u=[
        int("45841090616004995248903153208735582886801593854238626138410541910032"
            "00750633657795437929659847270909028081366315592593334568422712370256"
            "083518928733777128"),
        int("60265575806462684319938244154428508026013233441339575416594309673636"
            "71714198196044415449528646278199361320287136662721457265661251919070"
            "905283271149543257"),
        1,
    ],
    v=[
        int("65540272658286552167308352840824400551998452639727141592016640998155"
            "67998412881589722784358361530477769397506613831194304771199519849164"
            "52162683246048427"),
        int("45740113241759468720328098006773565498819476886790277336103708021059"
            "41775550747208154094626965834256408705479602084628878339439079733435"
            "558922568577852266"),
    ],
    r=67108913,
)


def _pinned_domain(spec: dict) -> DomainParams:
    p = spec["p"]
    curve = _curve(p, 2, spec["f"], [])
    base = MumfordDivisor(Polynomial(spec["u"], p), Polynomial(spec["v"], p))
    dp = DomainParams(curve=curve, base=base, order=spec["r"])
    validate_domain(dp)
    return dp


def demo_domain_64() -> DomainParams:
    """64-bit genus-2 demo domain with a 41-bit prime base order.

    y^2 = x^5 + 3 over a 64-bit p = 2 (mod 5); |J| = p^2 + 1 and the base
    order r divides it by construction (p is a square root of -1 mod r).
    """
    return _pinned_domain(_DEMO_64)


def demo_domain_512() -> DomainParams:
    """512-bit genus-2 demo domain with a 27-bit prime base order.

    Large field, deliberately small subgroup: sized for bulk byte-level
    ElGamal throughput in pure Python, not for security margins.
    """
    return _pinned_domain(_DEMO_512)

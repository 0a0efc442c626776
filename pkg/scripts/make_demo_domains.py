#!/usr/bin/env python3
"""One-time search for the pinned demo domain parameters.

Construction: for the supersingular family y^2 = x^5 + a over F_p with
p = 2 or 3 (mod 5), the Jacobian has exactly p^2 + 1 elements (the map
x -> x^5 is a bijection of F_p and of F_{p^2}, so both point counts are
p + 1 and p^2 + 1, and the genus-2 order formula collapses to p^2 + 1).
The test suite cross-checks this count against exhaustive enumeration on
small fields.

To plant a subgroup of chosen prime order r: pick r = 1 (mod 4), take a
square root z of -1 mod r, and search for a prime p = z (mod r) of the
target size.  Then r | p^2 + 1, and a base divisor of order exactly r is a
cofactor multiple of a random divisor.  Every emitted domain re-verifies
scalar_mul(r, R) = identity, so a wrong order could not slip through.

Deterministic given the constants below.  Writes domains/*.dom and prints
the constants to pin in src/hecc/domains.py.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

from sympy import isprime, nextprime

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hecc.codec import write_domain_file
from hecc.field import sqrt_mod
from hecc.jacobian import (
    CurveParams,
    DomainParams,
    random_divisor,
    scalar_mul,
    validate_curve,
    validate_domain,
)
from hecc.poly import Polynomial

OUT_DIR = Path(__file__).resolve().parent.parent / "domains"


def find_order(min_r: int) -> tuple[int, int]:
    r = int(nextprime(min_r - 1))
    while r % 4 != 1:
        r = int(nextprime(r))
    z = sqrt_mod(r - 1, r)
    assert z is not None and z * z % r == r - 1
    return r, z


def find_prime(bits: int, r: int, z: int, mod4: int, mod5: int) -> int:
    # CRT-combine p = z (r), p = mod4 (4), p = mod5 (5); scan upward.
    step = 20 * r
    residue = None
    for cand in range(z, z + step, r):
        if cand % 4 == mod4 and cand % 5 == mod5:
            residue = cand % step
            break
    assert residue is not None
    k = ((1 << (bits - 1)) - residue) // step + 1
    while True:
        p = residue + k * step
        if p >= 1 << bits:
            raise RuntimeError("ran out of the target bit range")
        if isprime(p):
            return p
        k += 1


def build(name: str, bits: int, min_r: int, a: int, mod4: int, mod5: int,
          seed: int) -> DomainParams:
    r, z = find_order(min_r)
    p = find_prime(bits, r, z, mod4, mod5)
    order_j = p * p + 1
    assert order_j % r == 0
    cofactor = order_j // r
    curve = CurveParams(p=p, genus=2, f=Polynomial([a, 0, 0, 0, 0, 1], p),
                        h=Polynomial([], p))
    validate_curve(curve)
    rng = random.Random(seed)
    while True:
        base = scalar_mul(cofactor, random_divisor(curve, rng), curve)
        if not base.is_identity:
            break
    dp = DomainParams(curve=curve, base=base, order=r)
    validate_domain(dp)
    print(f"# {name}: p ({p.bit_length()} bits) = {p}")
    print(f"#   r ({r.bit_length()} bits) = {r}, cofactor = {cofactor}")
    print(f"#   f = x^5 + {a}, base u = {list(dp.base.u.coeffs)}")
    print(f"#   base v = {list(dp.base.v.coeffs)}")
    OUT_DIR.mkdir(exist_ok=True)
    out = OUT_DIR / f"{name}.dom"
    out.write_text(f"# hecc demo domain: genus-2 supersingular, |J| = p^2 + 1\n"
                   + write_domain_file(dp))
    print(f"#   wrote {out}")
    return dp


def main() -> None:
    build("demo-64", bits=64, min_r=1 << 40, a=3, mod4=1, mod5=2, seed=0x64)
    build("demo-512", bits=512, min_r=1 << 26, a=3, mod4=3, mod5=3, seed=0x512)


if __name__ == "__main__":
    main()

import random

import pytest

from hecc.domains import (
    build_toy_domain,
    elliptic_curve_f13,
    toy_curve_f7,
    toy_curve_f11,
    toy_curve_f13_h,
)
from hecc.field import FieldElement
from hecc.jacobian import (
    INFINITY,
    AffinePoint,
    CurveError,
    CurveParams,
    ExplicitDivisor,
    FixedBaseMultiplier,
    MumfordDivisor,
    explicit_to_mumford,
    is_on_curve,
    is_reduced,
    is_semi_reduced,
    is_special_point,
    is_valid_divisor,
    jac_add,
    jac_neg,
    mumford_to_explicit,
    opposite_point,
    random_divisor,
    scalar_mul,
    validate_curve,
)
from hecc.oracle import ec_chord_tangent_add, enumerate_points, enumerate_reduced_divisors
from hecc.poly import Polynomial

C7 = toy_curve_f7()


def mum(u, v, p=7):
    return MumfordDivisor(Polynomial(u, p), Polynomial(v, p))


# --- curve validation ---


def test_validate_curve_accepts_test_curves():
    validate_curve(C7)
    validate_curve(toy_curve_f11())
    validate_curve(toy_curve_f13_h())


def test_validate_curve_rejections():
    with pytest.raises(CurveError):  # wrong f degree for the genus
        validate_curve(CurveParams(7, 2, Polynomial([1, 0, 0, 0, 1], 7), Polynomial([], 7)))
    with pytest.raises(CurveError):  # even characteristic
        validate_curve(CurveParams(2, 2, Polynomial([1, 1, 0, 0, 0, 1], 2), Polynomial([], 2)))
    with pytest.raises(CurveError):  # non-monic f
        validate_curve(CurveParams(7, 2, Polynomial([1, 3, 0, 0, 0, 2], 7), Polynomial([], 7)))
    with pytest.raises(CurveError):  # deg h > g
        validate_curve(CurveParams(7, 2, Polynomial([1, 3, 0, 0, 0, 1], 7),
                                   Polynomial([0, 0, 0, 1], 7)))
    with pytest.raises(CurveError):  # singular: y^2 = x^5 (double root at 0)
        validate_curve(CurveParams(7, 2, Polynomial([0, 0, 0, 0, 0, 1], 7), Polynomial([], 7)))


# --- points ---


def test_opposite_point():
    assert opposite_point(AffinePoint(0, 1), C7) == AffinePoint(0, 6)
    assert opposite_point(INFINITY, C7) is INFINITY
    with pytest.raises(ValueError):
        opposite_point(AffinePoint(1, 1), C7)  # x = 1 has no points


def test_special_points():
    # on y^2 = x^3 + 2x + 3 / F_13, roots of f give y = 0 fixed points
    e13 = elliptic_curve_f13()
    roots = [x for x in range(13) if e13.f(x) == 0]
    assert roots  # the cross-check curve does have a 2-torsion point
    for x in roots:
        assert is_special_point(AffinePoint(x, 0), e13)
    assert not is_special_point(AffinePoint(0, 1), C7)


# --- explicit divisors ---


def test_degree_and_order():
    d = ExplicitDivisor({AffinePoint(0, 1): 1, INFINITY: -1})
    assert d.degree() == 0
    assert d.order_at(AffinePoint(0, 1)) == 1
    assert d.order_at(AffinePoint(2, 2)) == 0
    assert d.order_at(INFINITY) == -1
    assert is_reduced(d, C7)


def test_opposite_pair_not_semi_reduced():
    d = ExplicitDivisor({AffinePoint(0, 1): 1, AffinePoint(0, 6): 1, INFINITY: -2})
    assert not is_semi_reduced(d, C7)


def test_semi_reduced_but_not_reduced():
    d = ExplicitDivisor({AffinePoint(0, 1): 1, AffinePoint(2, 2): 1,
                         AffinePoint(3, 1): 1, INFINITY: -3})
    assert is_semi_reduced(d, C7)
    assert not is_reduced(d, C7)  # weight 3 > genus 2


def test_unbalanced_infinity_not_semi_reduced():
    d = ExplicitDivisor({AffinePoint(0, 1): 1, INFINITY: -2})
    assert not is_semi_reduced(d, C7)


# --- conversions ---


def test_explicit_to_mumford_examples():
    single = ExplicitDivisor({AffinePoint(0, 1): 1, INFINITY: -1})
    assert explicit_to_mumford(single, C7) == mum([0, 1], [1])
    pair = ExplicitDivisor({AffinePoint(0, 1): 1, AffinePoint(2, 2): 1, INFINITY: -2})
    assert explicit_to_mumford(pair, C7) == mum([0, 5, 1], [1, 4])
    assert explicit_to_mumford(ExplicitDivisor({}), C7) == MumfordDivisor.identity(7)
    with pytest.raises(ValueError):
        explicit_to_mumford(
            ExplicitDivisor({AffinePoint(0, 1): 1, AffinePoint(0, 6): 1, INFINITY: -2}), C7)


def test_explicit_to_mumford_with_multiplicity():
    # 2[(0,1)] - 2[inf]: u = x^2, v from the Hensel lift; must match doubling
    doubled = ExplicitDivisor({AffinePoint(0, 1): 2, INFINITY: -2})
    lifted = explicit_to_mumford(doubled, C7)
    assert lifted.u == Polynomial([0, 0, 1], 7)
    assert is_valid_divisor(lifted, C7)
    pt = mum([0, 1], [1])
    assert lifted == jac_add(pt, pt, C7)


def test_mumford_to_explicit_examples():
    assert mumford_to_explicit(mum([0, 1], [1]), C7) == ExplicitDivisor(
        {AffinePoint(0, 1): 1, INFINITY: -1})
    assert mumford_to_explicit(mum([0, 5, 1], [1, 4]), C7) == ExplicitDivisor(
        {AffinePoint(0, 1): 1, AffinePoint(2, 2): 1, INFINITY: -2})
    assert mumford_to_explicit(MumfordDivisor.identity(7), C7) == ExplicitDivisor({})


def test_mumford_to_explicit_irreducible_u():
    group = enumerate_reduced_divisors(C7)
    outcomes = [mumford_to_explicit(d, C7) for d in group.elements]
    assert any(o is None for o in outcomes)  # some u do not split over F_7
    for div, exp in zip(group.elements, outcomes):
        if exp is not None:
            assert explicit_to_mumford(exp, C7) == div


# --- group law ---


def test_cantor_add_example():
    assert jac_add(mum([0, 1], [1]), mum([5, 1], [2]), C7) == mum([0, 5, 1], [1, 4])


def test_identity_and_inverse_laws_exhaustive():
    for curve in (C7, toy_curve_f13_h()):
        group = enumerate_reduced_divisors(curve)
        identity = MumfordDivisor.identity(curve.p)
        for d in group.elements:
            assert jac_add(d, identity, curve) == d
            assert jac_add(d, jac_neg(d, curve), curve) == identity
            assert jac_neg(jac_neg(d, curve), curve) == d


def test_neg_example():
    assert jac_neg(mum([0, 1], [1]), C7) == mum([0, 1], [6])
    assert jac_neg(MumfordDivisor.identity(7), C7) == MumfordDivisor.identity(7)


def test_closure_under_addition():
    group = enumerate_reduced_divisors(C7)
    members = set(group.elements)
    rng = random.Random(0xC1)
    for _ in range(2000):
        a, b = rng.choice(group.elements), rng.choice(group.elements)
        s = jac_add(a, b, C7)
        assert s in members
        assert is_valid_divisor(s, C7)


def test_order_annihilation_exhaustive():
    group = enumerate_reduced_divisors(C7)
    for d in group.elements:
        assert scalar_mul(group.order, d, C7).is_identity


def test_scalar_mul_basics():
    d = mum([0, 5, 1], [1, 4])
    assert scalar_mul(0, d, C7).is_identity
    assert scalar_mul(1, d, C7) == d
    assert scalar_mul(2, d, C7) == jac_add(d, d, C7)
    with pytest.raises(ValueError):
        scalar_mul(-1, d, C7)


def test_scalar_mul_distributes():
    group = enumerate_reduced_divisors(toy_curve_f11())
    rng = random.Random(0xC2)
    curve = group.curve
    for _ in range(60):
        d = rng.choice(group.elements)
        m, n = rng.randrange(1 << 16), rng.randrange(1 << 16)
        lhs = scalar_mul(m + n, d, curve)
        rhs = jac_add(scalar_mul(m, d, curve), scalar_mul(n, d, curve), curve)
        assert lhs == rhs


def test_fixed_base_multiplier_matches_scalar_mul():
    dp = build_toy_domain(toy_curve_f13_h())
    table = FixedBaseMultiplier(dp.base, dp.curve, 1 << 20)
    rng = random.Random(0xC3)
    for n in [0, 1, 2, 255, 256, 257] + [rng.randrange(1 << 20) for _ in range(40)]:
        assert table.mul(n) == scalar_mul(n, dp.base, dp.curve)


# --- genus-1 equivalence with the chord-tangent oracle ---


def point_to_divisor(pt, curve):
    if pt is INFINITY:
        return MumfordDivisor.identity(curve.p)
    return MumfordDivisor(Polynomial([-pt.x, 1], curve.p), Polynomial([pt.y], curve.p))


@pytest.mark.parametrize("curve_coeffs", [(13, [3, 2, 0, 1]), (19, [1, 4, 0, 1])])
def test_cantor_matches_chord_tangent(curve_coeffs):
    p, f = curve_coeffs
    curve = CurveParams(p=p, genus=1, f=Polynomial(f, p), h=Polynomial([], p))
    validate_curve(curve)
    points = enumerate_points(curve)
    lifted = {pt if pt is INFINITY else (pt.x, pt.y): point_to_divisor(pt, curve)
              for pt in points}
    for a in points:
        for b in points:
            expected = ec_chord_tangent_add(a, b, curve)
            ka = a if a is INFINITY else (a.x, a.y)
            kb = b if b is INFINITY else (b.x, b.y)
            got = jac_add(lifted[ka], lifted[kb], curve)
            ke = expected if expected is INFINITY else (expected.x, expected.y)
            assert got == lifted[ke]


# --- random divisors ---


def test_random_divisor_always_valid():
    rng = random.Random(0xC4)
    for curve in (C7, toy_curve_f13_h()):
        for _ in range(300):
            assert is_valid_divisor(random_divisor(curve, rng), curve)


class ScriptedRng:
    def __init__(self, values):
        self.values = list(values)

    def randrange(self, *args):
        return self.values.pop(0)


def test_random_divisor_pinned_sequence():
    # x = 0 with the smaller root, then x = 2 with the smaller root
    rng = ScriptedRng([0, 0, 2, 0])
    assert random_divisor(C7, rng) == mum([0, 5, 1], [1, 4])


def test_random_divisor_covers_split_elements():
    group = enumerate_reduced_divisors(C7)
    split = {d for d in group.elements if mumford_to_explicit(d, C7) is not None}
    rng = random.Random(0xC5)
    seen = {random_divisor(C7, rng) for _ in range(1000)}
    assert split <= seen


# --- Mumford shape validation ---


def test_mumford_shape_rejections():
    with pytest.raises(ValueError):  # u not monic
        mum([0, 2], [1])
    with pytest.raises(ValueError):  # deg v >= deg u
        mum([0, 1], [1, 1])
    with pytest.raises(ValueError):  # mixed moduli
        MumfordDivisor(Polynomial([0, 1], 7), Polynomial([1], 11))


def test_is_valid_divisor_checks_membership_and_weight():
    assert is_valid_divisor(mum([0, 5, 1], [1, 4]), C7)
    assert not is_valid_divisor(mum([0, 5, 1], [2, 4]), C7)  # bumped coefficient
    cubic = MumfordDivisor(Polynomial([0, 0, 0, 1], 7), Polynomial([], 7))
    assert not is_valid_divisor(cubic, C7)  # weight 3 > genus

import random
from fractions import Fraction

import pytest

from motivint.arcs import (
    GeometryError,
    MonomialGeometry,
    big_d,
    char_integral,
    exp_coefficient,
    exp_series,
    measure_gt,
    measure_series,
    measure_total,
    ts_check,
    ts_direct_exp_coefficient,
    ts_direct_zeta,
    zeta_series,
)
from motivint.characters import Character
from motivint.gaussring import UElement
from motivint.motives import MotiveClass, MotiveFrac
from motivint.series import exp_t

from helpers import ff_char_arc_sum, ff_total_measure, random_geometry

L = MotiveClass.lpow
TRIV = Character.trivial()
HALF = Character(Fraction(1, 2))
THIRD = Character(Fraction(1, 3))

X1 = MonomialGeometry.make(1, [1], None, [1])
X2 = MonomialGeometry.make(1, [2], None, [1])
Y3 = MonomialGeometry.make(1, [3], None, [1])


def test_geometry_validation():
    with pytest.raises(GeometryError):
        MonomialGeometry.make(0, [], None, [])
    with pytest.raises(GeometryError):
        MonomialGeometry.make(2, [1], None, [1])
    with pytest.raises(GeometryError):
        MonomialGeometry.make(1, [1], None, [])
    with pytest.raises(GeometryError):
        MonomialGeometry.make(2, [1, 0], None, [2])  # w-index without f-exponent
    with pytest.raises(GeometryError):
        MonomialGeometry.make(2, [0, 0], None, [1])
    with pytest.raises(GeometryError):
        MonomialGeometry.make(1, [-1], None, [1])
    with pytest.raises(GeometryError):
        char_integral(X1, TRIV, -1)


def test_char_integral_examples():
    assert char_integral(X2, HALF, 4) == MotiveFrac((L(1) - 1).shift(-3))
    assert char_integral(X2, HALF, 3) == 0
    for i in range(8):
        assert char_integral(X2, THIRD, i) == 0


def test_char_integral_vanishes_at_zero_order():
    assert char_integral(X2, TRIV, 0) == 0
    geom = MonomialGeometry.make(2, [1, 2], None, [1])
    assert char_integral(geom, TRIV, 0) == 0


def test_char_integral_finite_field_oracle_dim1():
    # q = 3 and q = 5, f = x^2, quadratic and trivial characters
    for q, alpha in [(3, TRIV), (3, HALF), (5, HALF)]:
        for i in (2, 4):
            got = char_integral(X2, alpha, i)
            want = ff_char_arc_sum(X2, q, alpha, i, level=4)
            assert abs(complex(got.eval_l(Fraction(q))) - want) < 1e-9, (q, alpha, i)
        # odd orders are empty
        assert abs(ff_char_arc_sum(X2, q, alpha, 3, level=4)) < 1e-12


def test_char_integral_finite_field_oracle_character_kill():
    # order-4 character against f = x^2 over F_5: motivic side is 0 and the
    # finite-field sum cancels to 0 as well
    quarter = Character(Fraction(1, 4))
    assert char_integral(X2, quarter, 2) == 0
    assert abs(ff_char_arc_sum(X2, 5, quarter, 2, level=3)) < 1e-9


def test_char_integral_finite_field_oracle_dim2():
    # f = x y^2, W = {x = 0}, over F_3: exercises the union indicator with a
    # coordinate not in W and with a g-twist on the support
    geom = MonomialGeometry.make(2, [1, 2], None, [1])
    for i in (1, 2, 3):
        got = char_integral(geom, TRIV, i)
        want = ff_char_arc_sum(geom, 3, TRIV, i, level=3)
        assert abs(complex(got.eval_l(Fraction(3))) - want) < 1e-9, i
    twisted = MonomialGeometry.make(2, [1, 2], [0, 1], [1])
    for i in (1, 2):
        got = char_integral(twisted, TRIV, i)
        want = ff_char_arc_sum(twisted, 3, TRIV, i, level=3)
        assert abs(complex(got.eval_l(Fraction(3))) - want) < 1e-9, i


def test_char_integral_finite_field_oracle_union():
    # W a genuine union of two hyperplanes: inclusion-exclusion path
    geom = MonomialGeometry.make(2, [1, 1], None, [1, 2])
    for i in (1, 2, 3):
        got = char_integral(geom, TRIV, i)
        want = ff_char_arc_sum(geom, 3, TRIV, i, level=3)
        assert abs(complex(got.eval_l(Fraction(3))) - want) < 1e-9, i


def test_char_integral_free_coordinate():
    # f = x^2 in the plane, W = {x = 0}: the y-coordinate contributes a
    # geometric factor summing to 1 (untwisted), so values match the 1-dim case
    geom = MonomialGeometry.make(2, [2, 0], None, [1])
    for i in (2, 4):
        assert char_integral(geom, HALF, i) == char_integral(X2, HALF, i)
    want = ff_char_arc_sum(geom, 3, TRIV, 2, level=3)
    assert abs(complex(char_integral(geom, TRIV, 2).eval_l(Fraction(3))) - want) < 1e-9


def test_zeta_series_examples():
    z = zeta_series(X2, HALF)
    for i in range(0, 13):
        assert exp_t(z, i, i)[0] == char_integral(X2, HALF, i)
    # (L-1) L^{-2} T / (1 - L^{-1} T) for f = x
    z1 = zeta_series(X1, TRIV)
    assert exp_t(z1, 1, 4) == [
        MotiveFrac((L(1) - 1).shift(-i - 1)) for i in range(1, 5)
    ]
    assert zeta_series(X1, HALF).is_zero()


def test_zeta_matches_char_integral_random():
    rng = random.Random(60)
    for _ in range(12):
        geom = random_geometry(rng, max_m=3, max_exp=5)
        for alpha in geom.characters():
            z = zeta_series(geom, alpha)
            for i in list(range(0, 8)) + [15, 30]:
                assert exp_t(z, i, i)[0] == char_integral(geom, alpha, i), (geom, alpha, i)


def test_vanishing_outside_big_d():
    rng = random.Random(61)
    for _ in range(6):
        geom = random_geometry(rng, max_m=3, max_exp=5)
        d = big_d(geom)
        probes = 0
        while probes < 20:
            den = rng.randint(2, 24)
            num = rng.randint(1, den - 1)
            alpha = Character(Fraction(num, den))
            if d % alpha.order == 0:
                continue
            probes += 1
            assert char_integral(geom, alpha, rng.randint(0, 12)) == 0


def test_big_d_examples():
    assert big_d(MonomialGeometry.make(2, [2, 3], None, [1])) == 6
    assert big_d(MonomialGeometry.make(1, [4], None, [1])) == 4
    assert big_d(MonomialGeometry.make(2, [1, 1], None, [1])) == 1


def test_measure_examples():
    assert measure_gt(X2, 3) == MotiveFrac(L(-2))
    assert measure_gt(X1, 0) == MotiveFrac(L(-1))
    # telescoping of the trivial-character integrals against the total
    total = MotiveFrac.zero()
    for j in range(1, 12):
        total = total + char_integral(X1, TRIV, j)
    assert measure_gt(X1, 11) + total == MotiveFrac(L(-1))


def test_measure_total_finite_field():
    for geom, q in [
        (X2, 5),
        (MonomialGeometry.make(2, [1, 1], None, [1, 2]), 3),
        (MonomialGeometry.make(2, [2, 0], None, [1]), 3),
        (MonomialGeometry.make(3, [1, 2, 1], None, [1, 3]), 3),
    ]:
        assert measure_total(geom).eval_l(Fraction(q)) == ff_total_measure(geom, q)


def test_measure_telescoping_invariant():
    rng = random.Random(77)
    for _ in range(8):
        geom = random_geometry(rng)
        acc = MotiveFrac.zero()
        total = measure_total(geom)
        for i in range(0, 9):
            acc = acc + char_integral(geom, TRIV, i)
            assert measure_gt(geom, i) + acc == total, (geom, i)


def test_measure_series_identity():
    for geom in [X1, X2, MonomialGeometry.make(2, [1, 2], [1, 0], [1])]:
        ms = measure_series(geom)
        assert exp_t(ms, 0, 0)[0] == 0
        for i in range(1, 10):
            assert exp_t(ms, i, i)[0] == measure_gt(geom, i), (geom, i)


def test_exp_coefficient_examples():
    for i in range(1, 6):
        assert not exp_coefficient(X1, i)
    assert exp_coefficient(X2, 2) == UElement(0, {HALF: MotiveFrac(L(-2))})
    assert exp_coefficient(X2, 1) == UElement(MotiveFrac(L(-1)))


def test_exp_series_matches_coefficients():
    for geom in [X1, X2, Y3, MonomialGeometry.make(2, [2, 2], None, [1])]:
        es = exp_series(geom)
        for i in range(1, 12):
            assert exp_t(es, i, i)[0] == exp_coefficient(geom, i)
    assert exp_series(X1).is_zero()


# -- products of two geometries -------------------------------------------------


def test_ts_direct_zeta_linear_pair():
    # f = x, f' = y: after the coordinate change z = x + y this is a smooth
    # linear function on the plane based at the origin
    for i in (1, 2, 3, 6):
        got = ts_direct_zeta(X1, X1, TRIV, i)
        assert got == MotiveFrac((L(1) - 1).shift(-i - 2)), i


def test_ts_direct_zeta_parity():
    for i in (1, 3, 5, 9):
        assert ts_direct_zeta(X2, X2, HALF, i) == 0


def test_ts_direct_zeta_character_kill():
    fifth = Character(Fraction(1, 5))
    for i in (1, 2, 4):
        assert ts_direct_zeta(X2, Y3, fifth, i) == 0


def test_ts_product_path_hand_values():
    for j in (1, 2, 3):
        even = exp_coefficient(X2, 2 * j) * exp_coefficient(X2, 2 * j)
        assert even == UElement(MotiveFrac(L(-2 * j - 1)))
        odd = exp_coefficient(X2, 2 * j + 1) * exp_coefficient(X2, 2 * j + 1)
        assert odd == UElement(MotiveFrac(L(-2 * j - 2)))


def test_ts_check_zero_pair():
    report = ts_check(X1, X1, 10)
    assert report.ok
    for i in (1, 4, 9):
        assert not ts_direct_exp_coefficient(X1, X1, i)


def test_ts_check_small_matrix():
    for a in (1, 2, 3):
        for b in (2, 3):
            left = MonomialGeometry.make(1, [a], None, [1])
            right = MonomialGeometry.make(1, [b], None, [1])
            report = ts_check(left, right, 15)
            assert report.ok, (a, b, report.failures)


def test_ts_check_with_twists():
    left = MonomialGeometry.make(1, [2], [1], [1])
    right = MonomialGeometry.make(1, [3], [2], [1])
    assert ts_check(left, right, 12).ok


def test_ts_check_rejects_bad_imax():
    with pytest.raises(GeometryError):
        ts_check(X1, X1, 0)


def test_exp_series_hadamard_is_product_path():
    # the coefficientwise product of the exponential series, taken at the
    # series level over the Gauss-sum ring, reproduces the per-order products
    from motivint.series import hadamard

    for left, right in [(X2, Y3), (X2, X2)]:
        h = hadamard(exp_series(left), exp_series(right))
        for i in range(0, 12):
            want = exp_coefficient(left, i) * exp_coefficient(right, i) if i else UElement.zero()
            assert exp_t(h, i, i)[0] == want, (left, right, i)

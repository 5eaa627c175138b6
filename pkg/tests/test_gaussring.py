import random
from fractions import Fraction

import pytest

from motivint.characters import Character
from motivint.gaussring import UElement, hodge_realize_u, sg_decompose
from motivint.motives import MotiveClass, MotiveFrac

from helpers import all_characters_up_to, random_motive_frac

L = MotiveClass.lpow
HALF = Character(Fraction(1, 2))
THIRD = Character(Fraction(1, 3))


def random_u(rng, chars, coeff_den=0):
    u = UElement(random_motive_frac(rng, coeff_den) if coeff_den else rng.randint(-2, 2))
    for _ in range(rng.randint(1, 3)):
        alpha = rng.choice(chars)
        u = u + UElement.from_gauss(alpha, rng.randint(-3, 3))
    return u


def test_u_mul_examples():
    g = UElement.from_gauss
    assert g(HALF) * g(HALF) == UElement(MotiveFrac(L(1)))
    assert g(THIRD) * g(THIRD) == UElement(0, {THIRD.inverse(): MotiveFrac(MotiveClass.h(1, 0, -1))})
    assert UElement(-1) * g(HALF) == g(HALF, -1)
    # trivial basis element is the scalar -1
    assert UElement.from_gauss(Character.trivial()) == UElement(-1)


def test_trivial_gauss_key_rejected():
    with pytest.raises(ValueError):
        UElement(0, {Character.trivial(): MotiveFrac.one()})


def test_u_ring_laws_random():
    rng = random.Random(31)
    chars = [c for c in all_characters_up_to(12) if not c.is_trivial()]
    for _ in range(300):
        a, b, c = (random_u(rng, chars) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_hodge_realize_examples():
    g = UElement.from_gauss
    assert hodge_realize_u(g(HALF)) == MotiveFrac(
        MotiveClass.h(Fraction(1, 2), Fraction(1, 2), -1)
    )
    assert hodge_realize_u(g(THIRD) * g(THIRD.inverse())) == MotiveFrac(L(1))
    assert hodge_realize_u(UElement.one()) == MotiveFrac.one()


def test_hodge_realize_is_ring_morphism():
    rng = random.Random(17)
    chars = [c for c in all_characters_up_to(9) if not c.is_trivial()]
    for _ in range(150):
        a, b = random_u(rng, chars), random_u(rng, chars)
        assert hodge_realize_u(a * b) == hodge_realize_u(a) * hodge_realize_u(b)
        assert hodge_realize_u(a + b) == hodge_realize_u(a) + hodge_realize_u(b)


def test_sg_decompose_examples():
    assert sg_decompose(UElement.from_gauss(HALF)) == {HALF: MotiveFrac.one()}
    assert sg_decompose(UElement(MotiveFrac(L(1)))) == {
        Character.trivial(): MotiveFrac(L(1)) * -1
    }
    assert sg_decompose(UElement.zero()) == {}


def test_sg_decompose_round_trip():
    rng = random.Random(23)
    chars = [c for c in all_characters_up_to(8) if not c.is_trivial()]
    for _ in range(50):
        x = random_u(rng, chars, coeff_den=1)
        rebuilt = UElement.zero()
        for alpha, c in sg_decompose(x).items():
            rebuilt = rebuilt + UElement.from_gauss(alpha.inverse()) * c
        assert rebuilt == x


def test_scalar_action_and_lpow():
    x = UElement(1, {HALF: MotiveFrac.one()})
    assert x.mul_lpow(2).scalar == MotiveFrac(L(2))
    y = x * MotiveFrac(L(1) - 1)
    assert y.gauss[HALF] == MotiveFrac(L(1) - 1)
    assert x.div_lpow_diff(1, 0).gauss[HALF] == MotiveFrac(MotiveClass.one(), [(1, 0)])

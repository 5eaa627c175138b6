import json
import random
from fractions import Fraction

from motivint.arcs import MonomialGeometry, exp_series, zeta_series
from motivint.characters import Character
from motivint.gaussring import UElement
from motivint.jsonio import (
    character_from_json,
    character_to_json,
    geometry_from_json,
    geometry_to_json,
    motive_class_from_json,
    motive_class_to_json,
    motive_frac_from_json,
    motive_frac_to_json,
    series_from_json,
    series_to_json,
    spectrum_from_json,
    spectrum_to_json,
    uelement_from_json,
    uelement_to_json,
)
from motivint.spectra import brieskorn_oracle

from helpers import random_motive_class, random_motive_frac


def test_character_round_trip():
    for text in ["0/1", "1/2", "7/12"]:
        assert character_to_json(character_from_json(text)) == text


def test_motive_class_round_trip():
    rng = random.Random(1)
    for _ in range(30):
        cls = random_motive_class(rng)
        blob = json.dumps(motive_class_to_json(cls))
        assert motive_class_from_json(json.loads(blob)) == cls


def test_motive_frac_round_trip():
    rng = random.Random(2)
    for _ in range(30):
        x = random_motive_frac(rng)
        blob = json.dumps(motive_frac_to_json(x))
        back = motive_frac_from_json(json.loads(blob))
        assert back == x
        assert back.den == x.den or not x.num


def test_uelement_round_trip():
    rng = random.Random(3)
    chars = [Character(Fraction(a, 8)) for a in range(1, 8)]
    for _ in range(20):
        u = UElement(random_motive_frac(rng))
        for _ in range(2):
            u = u + UElement.from_gauss(rng.choice(chars), random_motive_frac(rng, 1))
        blob = json.dumps(uelement_to_json(u))
        assert uelement_from_json(json.loads(blob)) == u


def test_series_round_trip_motive_coefficients():
    geom = MonomialGeometry.make(2, [2, 3], [1, 0], [1, 2])
    s = zeta_series(geom, Character.trivial())
    blob = json.dumps(series_to_json(s))
    assert series_from_json(json.loads(blob)) == s


def test_series_round_trip_u_coefficients():
    geom = MonomialGeometry.make(1, [2], None, [1])
    s = exp_series(geom)
    blob = json.dumps(series_to_json(s, uelement_to_json))
    back = series_from_json(json.loads(blob), uelement_from_json)
    assert back == s


def test_geometry_round_trip():
    geom = MonomialGeometry.make(3, [2, 0, 3], [0, 1, 0], [1, 3])
    blob = json.dumps(geometry_to_json(geom))
    assert geometry_from_json(json.loads(blob)) == geom


def test_spectrum_round_trip_and_sorting():
    spectrum = brieskorn_oracle([2, 3, 5])
    items = spectrum_to_json(spectrum)
    assert items == sorted(items, key=lambda kv: Fraction(kv[0]))
    assert spectrum_from_json(items) == spectrum


def test_serialization_deterministic():
    geom = MonomialGeometry.make(2, [2, 2], None, [1])
    s = zeta_series(geom, Character(Fraction(1, 2)))
    a = json.dumps(series_to_json(s), sort_keys=True)
    b = json.dumps(series_to_json(zeta_series(geom, Character(Fraction(1, 2)))), sort_keys=True)
    assert a == b

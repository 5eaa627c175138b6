"""Nearby/vanishing-cycle classes, their Gauss-twisted sum, and Hodge spectra.

The nearby-cycle class of a character is L^m/(1-L) times the constant term
at T = infinity of its zeta series; the vanishing version subtracts the
class of the hyperplane union at the trivial character.  Packing these into
the Gauss-sum ring gives the invariant that is multiplicative over sums
f (+) f', and whose decomposition recovers the Hodge spectrum.  A monomial
Milnor-basis enumeration provides the independent spectrum oracle.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

from .arcs import (
    MonomialGeometry,
    _diag_fermat_sum,
    measure_series,
    zeta_series,
)
from .characters import Character, characters_of_order_dividing, gamma
from .gaussring import UElement, sg_decompose
from .motives import MotiveClass, MotiveFrac
from .series import RationalSeries, hadamard, lambda_functional, multiply, rs_normalize


class SpectrumPoly:
    """Finite multiset of rational exponents with integer multiplicities."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                e = Fraction(e)
                c = int(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
        self.coeffs = {e: c for e, c in clean.items() if c}

    @staticmethod
    def one() -> "SpectrumPoly":
        return SpectrumPoly({Fraction(0): 1})

    def __mul__(self, other: "SpectrumPoly") -> "SpectrumPoly":
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return SpectrumPoly(out)

    def reflect(self, pivot: Fraction) -> "SpectrumPoly":
        """The multiset with every exponent e replaced by pivot - e."""
        return SpectrumPoly({pivot - e: c for e, c in self.coeffs.items()})

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        return isinstance(other, SpectrumPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "SpectrumPoly({" + ", ".join(f"{e}: {c}" for e, c in self.items()) + "})"


def chi_c_w(geom: MonomialGeometry) -> MotiveClass:
    """Class of the hyperplane union, by inclusion-exclusion over intersections."""
    w = sorted(geom.w_indices)
    total = MotiveClass.zero()
    for mask in range(1, 1 << len(w)):
        size = bin(mask).count("1")
        sign = 1 if size % 2 == 1 else -1
        total = total + MotiveClass.lpow(geom.m - size) * sign
    return total


def s_psi(geom: MonomialGeometry, alpha: Character) -> MotiveFrac:
    """Nearby-cycle class: L^m/(1-L) times the T=infinity constant term of the zeta series."""
    lam = lambda_functional(zeta_series(geom, alpha))
    return -(lam.mul_lpow(geom.m).div_lpow_diff(1, 0))


def s_phi(geom: MonomialGeometry, alpha: Character) -> MotiveFrac:
    """Vanishing-cycle class: subtracts the base class at the trivial character."""
    out = s_psi(geom, alpha)
    if alpha.is_trivial():
        out = out - chi_c_w(geom)
    return out


def sg(geom: MonomialGeometry) -> UElement:
    """The Gauss-twisted vanishing-cycle sum over all contributing characters."""
    gauss = {}
    for alpha in geom.characters():
        if alpha.is_trivial():
            continue
        c = s_phi(geom, alpha)
        if c:
            gauss[alpha.inverse()] = c
    return UElement(-s_phi(geom, Character.trivial()), gauss)


def sp_from_sg(element: UElement, m: int) -> SpectrumPoly:
    """Spectrum of a Gauss-twisted vanishing-cycle sum in ambient dimension m.

    Each character contributes its class terms at exponent m - p - gamma(alpha);
    the class terms must have integer p, and the assembled multiplicities must
    be integers.
    """
    acc: dict = {}
    sign = 1 if (m - 1) % 2 == 0 else -1
    for alpha, coeff in sg_decompose(element).items():
        cls = coeff.as_class()
        for (p, q), c in cls.terms.items():
            if Fraction(p).denominator != 1:
                raise ValueError(
                    f"class term u^{p} v^{q} of the {alpha} part has fractional Hodge degree"
                )
            e = m - p - gamma(alpha)
            acc[e] = acc.get(e, 0) + sign * c
    for e, c in acc.items():
        if Fraction(c).denominator != 1:
            raise ValueError(f"non-integral multiplicity {c} at exponent {e}")
    return SpectrumPoly({e: int(c) for e, c in acc.items() if c})


def sp(geom: MonomialGeometry) -> SpectrumPoly:
    """Hodge spectrum of the monomial at the origin.

    Requires data supported at the origin: every coordinate hyperplane chosen
    and every f-exponent positive.
    """
    if geom.w_indices != set(range(1, geom.m + 1)):
        raise GeometryPointError("spectrum needs the full hyperplane set (origin support)")
    if any(n < 1 for n in geom.f_exponents):
        raise GeometryPointError("spectrum needs every f-exponent >= 1")
    return sp_from_sg(sg(geom), geom.m)


class GeometryPointError(ValueError):
    """Spectrum extraction asked for data that is not supported at the origin."""


def brieskorn_oracle(exponents) -> SpectrumPoly:
    """Spectrum of sum_i x_i^{a_i} from the monomial basis of its Milnor algebra.

    Basis monomials x^l with 0 <= l_i <= a_i - 2 contribute the exponent
    sum_i (l_i + 1)/a_i, each with multiplicity one.
    """
    exps = [int(a) for a in exponents]
    if any(a < 2 for a in exps):
        raise ValueError("every exponent must be >= 2")
    out: dict = {}
    for l in product(*(range(a - 1) for a in exps)):
        e = sum(Fraction(li + 1, ai) for li, ai in zip(l, exps))
        out[e] = out.get(e, 0) + 1
    return SpectrumPoly(out)


def sg_direct_product(left: MonomialGeometry, right: MonomialGeometry) -> UElement:
    """The Gauss-twisted sum of the product geometry via the direct stratum path.

    Builds the character zeta series of f (+) f' in closed form from the
    stratified decomposition (off-diagonal, equal-order Fermat classes, and
     1/L-geometric tails), then extracts vanishing cycles; no product of
    Gauss-ring elements is taken anywhere.
    """
    trivial = Character.trivial()
    m_total = left.m + right.m
    z_l, z_r = zeta_series(left, trivial), zeta_series(right, trivial)
    p_l, p_r = measure_series(left), measure_series(right)
    zz = hadamard(z_l, z_r)
    off_l, off_r = hadamard(z_l, p_r), hadamard(z_r, p_l)
    lm1 = MotiveClass.lpow(1) - 1
    # tails: seeds (equal-order totals minus their level part) times (L-1) L^{-1} T/(1 - L^{-1} T)
    seed_series = zz - zz.scale(
        MotiveFrac(_diag_fermat_sum(left, right, trivial), [(1, 0)])
    )
    tail = multiply(seed_series, rs_normalize({1: MotiveFrac(lm1).mul_lpow(-1)}, [(-1, 1)]))

    orders = left.order_gcd * right.order_gcd // gcd(left.order_gcd, right.order_gcd)
    gauss = {}
    scalar = None
    for alpha in characters_of_order_dividing(orders):
        z_direct = RationalSeries.zero()
        left_ok = (gamma(alpha) * left.order_gcd).denominator == 1
        right_ok = (gamma(alpha) * right.order_gcd).denominator == 1
        if left_ok:
            z_direct = z_direct + off_l
        if right_ok:
            z_direct = z_direct + off_r
        fsum = _diag_fermat_sum(left, right, alpha)
        if fsum:
            z_direct = z_direct + zz.scale(MotiveFrac(fsum, [(1, 0)]))
        if alpha.is_trivial():
            z_direct = z_direct + tail
        value = -(lambda_functional(z_direct).mul_lpow(m_total).div_lpow_diff(1, 0))
        if alpha.is_trivial():
            value = value - chi_c_w(left) * chi_c_w(right)
            scalar = -value
        elif value:
            gauss[alpha.inverse()] = value
    return UElement(scalar if scalar is not None else 0, gauss)

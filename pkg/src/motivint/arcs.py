"""Motivic integrals over arcs of monomial normal-crossings data on affine space.

The data is f = prod x_j^{n_j}, an optional twist g = prod x_j^{m_j}, and
W the union of the coordinate hyperplanes x_i = 0 for i in a nonempty index
set contained in the support of f.  Arcs based on W stratify by the vector
of contact orders gamma = (ord_t x_j); on each stratum the leading
coefficients sweep a torus, so every integral reduces to a lattice sum of
powers of L times torus classes.  The exponential coefficients live in the
Gauss-sum ring; their multiplicativity over f (+) f' is checked against a
direct stratum-by-stratum computation of the product geometry that never
assumes multiplicativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .characters import Character, characters_of_order_dividing, gamma
from .gaussring import UElement
from .motives import MotiveClass, MotiveFrac, fermat_torus_class
from .series import RationalSeries, prefix_sums, rs_normalize


class GeometryError(ValueError):
    """Raised for data violating the monomial normal-crossings invariants."""


@dataclass(frozen=True)
class MonomialGeometry:
    """Ambient dimension, exponents of f and g, and the hyperplane index set.

    ``w_indices`` is 1-based; every index i in it must have f-exponent >= 1,
    so that the hyperplane union is contained in the zero locus of f.
    """

    m: int
    f_exponents: tuple[int, ...]
    g_exponents: tuple[int, ...]
    w_indices: frozenset[int]

    @staticmethod
    def make(m, f_exponents, g_exponents=None, w_indices=()) -> "MonomialGeometry":
        f_exp = tuple(int(n) for n in f_exponents)
        g_exp = tuple(int(n) for n in (g_exponents if g_exponents is not None else [0] * m))
        geom = MonomialGeometry(int(m), f_exp, g_exp, frozenset(int(i) for i in w_indices))
        geom.validate()
        return geom

    def validate(self) -> None:
        if self.m < 1:
            raise GeometryError("ambient dimension must be >= 1")
        if len(self.f_exponents) != self.m or len(self.g_exponents) != self.m:
            raise GeometryError("exponent vectors must have length m")
        if any(n < 0 for n in self.f_exponents + self.g_exponents):
            raise GeometryError("exponents must be nonnegative")
        if not self.w_indices:
            raise GeometryError("the hyperplane index set must be nonempty")
        if not self.w_indices <= set(range(1, self.m + 1)):
            raise GeometryError("hyperplane indices must lie in 1..m")
        if any(self.f_exponents[i - 1] < 1 for i in self.w_indices):
            raise GeometryError("each chosen hyperplane needs a positive f-exponent")
        if not any(self.f_exponents):
            raise GeometryError("f must be nonconstant")

    # -- derived data ---------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        """0-based positions with positive f-exponent."""
        return tuple(j for j, n in enumerate(self.f_exponents) if n >= 1)

    @property
    def free_positions(self) -> tuple[int, ...]:
        """0-based positions with zero f-exponent (unconstrained contact order)."""
        return tuple(j for j, n in enumerate(self.f_exponents) if n == 0)

    @property
    def order_gcd(self) -> int:
        g = 0
        for n in self.f_exponents:
            g = gcd(g, n)
        return g

    def characters(self) -> list[Character]:
        """All characters that can meet f: order dividing gcd of the exponents."""
        return characters_of_order_dividing(self.order_gcd)


def big_d(geom: MonomialGeometry) -> int:
    """lcm of the nonzero f-exponents; characters of order not dividing it vanish."""
    out = 1
    for n in geom.f_exponents:
        if n:
            out = out * n // gcd(out, n)
    return out


def _passes(geom: MonomialGeometry, alpha: Character) -> bool:
    """Whether alpha pulls back trivially along the leading monomial of f."""
    return (gamma(alpha) * geom.order_gcd).denominator == 1


@lru_cache(maxsize=None)
def _free_factor(geom: MonomialGeometry) -> MotiveFrac:
    """Contribution of coordinates outside the support of f, summed over all orders."""
    out = MotiveFrac.one()
    lm1 = MotiveClass.lpow(1) - 1
    for j in geom.free_positions:
        c = 1 + geom.g_exponents[j]
        out = out * MotiveFrac(lm1 * MotiveClass.lpow(c - 1), [(c, 0)])
    return out


@lru_cache(maxsize=None)
def _lattice_sum(geom: MonomialGeometry, i: int) -> MotiveClass:
    """Sum over contact orders on the support with total f-order i, based on W."""
    sup = geom.support
    weights = [1 + geom.g_exponents[j] for j in sup]
    must = [geom.f_exponents[j] for j in sup]
    in_w = [(j + 1) in geom.w_indices for j in sup]
    counts: dict = {}

    def walk(pos: int, remaining: int, exp_acc: int, touched: bool) -> None:
        if pos == len(sup):
            if remaining == 0 and touched:
                counts[exp_acc] = counts.get(exp_acc, 0) + 1
            return
        n_j = must[pos]
        for k in range(0, remaining // n_j + 1):
            walk(
                pos + 1,
                remaining - k * n_j,
                exp_acc - k * weights[pos],
                touched or (k >= 1 and in_w[pos]),
            )

    walk(0, i, -len(sup), False)
    total = MotiveClass({(e, e): c for e, c in counts.items()})
    return total * (MotiveClass.lpow(1) - 1) ** len(sup)


def char_integral(geom: MonomialGeometry, alpha: Character, i: int) -> MotiveFrac:
    """Integral of alpha(ac f) L^{-ord g} over arcs from W with ord f = i."""
    geom.validate()
    if i < 0:
        raise GeometryError("contact order must be nonnegative")
    if not _passes(geom, alpha):
        return MotiveFrac.zero()
    return _free_factor(geom) * _lattice_sum(geom, i)


@lru_cache(maxsize=None)
def _zeta_fraction(geom: MonomialGeometry) -> tuple[tuple, tuple]:
    """Numerator/denominator of the character zeta series before normalization."""
    sup = geom.support
    den = tuple((-(1 + geom.g_exponents[j]), geom.f_exponents[j]) for j in sup)
    lm1 = MotiveClass.lpow(1) - 1
    base = _free_factor(geom) * (lm1 ** len(sup)).shift(-len(sup))
    w_pos = sorted(j for j in sup if (j + 1) in geom.w_indices)
    num: dict = {}
    for mask in range(1, 1 << len(w_pos)):
        sign = -1
        t_exp = 0
        shift = 0
        for b, j in enumerate(w_pos):
            if mask >> b & 1:
                sign = -sign
                t_exp += geom.f_exponents[j]
                shift -= 1 + geom.g_exponents[j]
        coeff = base.mul_lpow(shift) * sign
        cur = num.get(t_exp)
        num[t_exp] = coeff if cur is None else cur + coeff
    return tuple(sorted(num.items())), den


@lru_cache(maxsize=None)
def _zeta_common(geom: MonomialGeometry) -> RationalSeries:
    """Closed form of the character zeta series (common to all surviving characters)."""
    num, den = _zeta_fraction(geom)
    return rs_normalize(dict(num), list(den))


def zeta_series(geom: MonomialGeometry, alpha: Character) -> RationalSeries:
    """Generating series over i > 0 of char_integral(geom, alpha, i)."""
    geom.validate()
    if not _passes(geom, alpha):
        return RationalSeries.zero()
    return _zeta_common(geom)


@lru_cache(maxsize=None)
def measure_total(geom: MonomialGeometry) -> MotiveFrac:
    """The g-twisted motivic measure of all arcs based on W."""
    geom.validate()
    sup = geom.support
    lm1 = MotiveClass.lpow(1) - 1
    w_pos = sorted(j for j in sup if (j + 1) in geom.w_indices)
    total = MotiveFrac.zero()
    for mask in range(1, 1 << len(w_pos)):
        forced = {w_pos[b] for b in range(len(w_pos)) if mask >> b & 1}
        sign = -1 if len(forced) % 2 == 0 else 1
        piece = MotiveFrac.one()
        for j in sup:
            c = 1 + geom.g_exponents[j]
            start = c if j in forced else 0
            piece = piece * MotiveFrac(lm1 * MotiveClass.lpow(c - 1 - start), [(c, 0)])
        total = total + piece * sign
    return _free_factor(geom) * total


@lru_cache(maxsize=None)
def measure_gt(geom: MonomialGeometry, i: int) -> MotiveFrac:
    """The g-twisted measure of arcs from W with ord f > i."""
    geom.validate()
    if i < 0:
        raise GeometryError("contact order must be nonnegative")
    if i == 0:
        return measure_total(geom)
    trivial = Character.trivial()
    return measure_gt(geom, i - 1) - char_integral(geom, trivial, i)


@lru_cache(maxsize=None)
def measure_series(geom: MonomialGeometry) -> RationalSeries:
    """Generating series over i > 0 of measure_gt(geom, i).

    On each contact stratum the tail indicator sums to (T - T^{ord f})/(1 - T),
    so the whole series is (M0 T - Z(T))/(1 - T) with M0 the full measure;
    the division by 1 - T is a termwise prefix sum.
    """
    geom.validate()
    head = RationalSeries(poly={1: measure_total(geom)})
    return prefix_sums(head - _zeta_common(geom))


def exp_coefficient(geom: MonomialGeometry, i: int) -> UElement:
    """Coefficient of the exponential series: measure part plus Gauss-twisted characters."""
    geom.validate()
    base = char_integral(geom, Character.trivial(), i)
    scaled = base.div_lpow_diff(1, 0)
    gauss = {}
    for alpha in geom.characters():
        if not alpha.is_trivial():
            gauss[alpha.inverse()] = scaled
    return UElement(measure_gt(geom, i) - scaled, gauss)


def exp_series(geom: MonomialGeometry) -> RationalSeries:
    """Closed form over the Gauss-sum ring of the exponential coefficients, i > 0."""
    geom.validate()
    twist = UElement(-1, {alpha.inverse(): 1 for alpha in geom.characters() if not alpha.is_trivial()})
    twist = twist.div_lpow_diff(1, 0)
    z_u = zeta_series(geom, Character.trivial()).map_coefficients(lambda c: twist * c)
    p_u = measure_series(geom).map_coefficients(UElement)
    return p_u + z_u


# ---------------------------------------------------------------------------
# the direct (stratum-by-stratum) computation for a sum f (+) f'
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _diag_fermat_sum(left: MonomialGeometry, right: MonomialGeometry, alpha: Character) -> MotiveClass:
    """Sum of Fermat-torus classes over factorizations alpha = a1 * a2 meeting both sides."""
    total = MotiveClass.zero()
    for a1 in characters_of_order_dividing(left.order_gcd):
        a2 = alpha * a1.inverse()
        if _passes(right, a2):
            total = total + fermat_torus_class(a1.inverse(), a2.inverse())
    return total


@lru_cache(maxsize=None)
def _diag_level(left: MonomialGeometry, right: MonomialGeometry, alpha: Character, k: int) -> MotiveFrac:
    """Integral over the equal-order stratum ord f = ord f' = k of {ord (f+f') = k}."""
    fsum = _diag_fermat_sum(left, right, alpha)
    if not fsum:
        return MotiveFrac.zero()
    prod = char_integral(left, Character.trivial(), k) * char_integral(
        right, Character.trivial(), k
    )
    return (prod * fsum).div_lpow_diff(1, 0)


@lru_cache(maxsize=None)
def _diag_tail_seed(left: MonomialGeometry, right: MonomialGeometry, k: int) -> MotiveFrac:
    """Total of the equal-order-k stratum over ord (f+f') > k; vanishing cancellation tail."""
    trivial = Character.trivial()
    prod = char_integral(left, trivial, k) * char_integral(right, trivial, k)
    return prod - _diag_level(left, right, trivial, k)


def ts_direct_zeta(
    left: MonomialGeometry, right: MonomialGeometry, alpha: Character, i: int
) -> MotiveFrac:
    """Character integral of the sum geometry at order i, stratified by factor orders.

    Off-diagonal strata carry the leading coefficient of the smaller-order
    factor; the equal-order-i stratum is a Fermat-torus class sum over
    character factorizations; equal orders below i contribute only for the
    trivial character, through a geometric tail with ratio 1/L.
    """
    left.validate()
    right.validate()
    if i < 0:
        raise GeometryError("contact order must be nonnegative")
    out = char_integral(left, alpha, i) * measure_gt(right, i)
    out = out + char_integral(right, alpha, i) * measure_gt(left, i)
    out = out + _diag_level(left, right, alpha, i)
    if alpha.is_trivial():
        lm1 = MotiveClass.lpow(1) - 1
        for k in range(1, i):
            seed = _diag_tail_seed(left, right, k)
            if seed:
                out = out + (seed * lm1).mul_lpow(-(i - k))
    return out


def ts_direct_measure_gt(left: MonomialGeometry, right: MonomialGeometry, i: int) -> MotiveFrac:
    """Measure of arcs from the product base with ord (f+f') > i, computed directly."""
    out = measure_gt(left, i) * measure_gt(right, i)
    for k in range(1, i + 1):
        seed = _diag_tail_seed(left, right, k)
        if seed:
            out = out + seed.mul_lpow(-(i - k))
    return out


def ts_direct_exp_coefficient(
    left: MonomialGeometry, right: MonomialGeometry, i: int
) -> UElement:
    """Exponential coefficient of the sum geometry assembled from direct strata."""
    trivial = Character.trivial()
    order = left.order_gcd * right.order_gcd // gcd(left.order_gcd, right.order_gcd)
    scalar = ts_direct_measure_gt(left, right, i)
    scalar = scalar - ts_direct_zeta(left, right, trivial, i).div_lpow_diff(1, 0)
    gauss = {}
    for alpha in characters_of_order_dividing(order):
        if alpha.is_trivial():
            continue
        c = ts_direct_zeta(left, right, alpha, i)
        if c:
            gauss[alpha.inverse()] = c.div_lpow_diff(1, 0)
    return UElement(scalar, gauss)


@dataclass
class TSReport:
    """Outcome of comparing the product path against the direct path."""

    i_max: int
    failures: list[int]
    first_mismatch: tuple | None

    @property
    def ok(self) -> bool:
        return not self.failures


def ts_check(left: MonomialGeometry, right: MonomialGeometry, i_max: int) -> TSReport:
    """Compare exp_coefficient(left) * exp_coefficient(right) with the direct path."""
    if i_max < 1:
        raise GeometryError("i_max must be >= 1")
    failures = []
    first = None
    for i in range(1, i_max + 1):
        lhs = exp_coefficient(left, i) * exp_coefficient(right, i)
        rhs = ts_direct_exp_coefficient(left, right, i)
        if lhs != rhs:
            failures.append(i)
            if first is None:
                first = (i, lhs, rhs)
    return TSReport(i_max=i_max, failures=failures, first_mismatch=first)

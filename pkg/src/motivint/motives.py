"""Hodge-realized virtual motives: bigraded Laurent classes and their localization.

A ``MotiveClass`` is a finite sum of monomials c * u^p v^q with rational
exponents subject to p + q being an integer; the Lefschetz class L is uv.
``MotiveFrac`` localizes at the multiplicative family of differences
L^a - L^b (a != b), which covers every geometric-series denominator the
integral and series machinery produces.  Equality of fractions is decided
by cross-multiplication; no gcd cancellation is attempted.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .characters import Character, gamma


def _ex(x):
    """Normalize an exponent/coefficient to int when integral (cheaper arithmetic)."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


class MotiveClass:
    """Finite map (p, q) -> rational coefficient, with p + q an integer per term."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _validated=False):
        if terms is None:
            self.terms = {}
            return
        if _validated:
            self.terms = terms
            return
        clean = {}
        for (p, q), c in terms.items():
            c = _ex(c)
            if c == 0:
                continue
            p, q = _ex(p), _ex(q)
            if Fraction(p + q).denominator != 1:
                raise ValueError(f"term u^{p} v^{q} has non-integral total weight")
            clean[(p, q)] = clean.get((p, q), 0) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "MotiveClass":
        return MotiveClass({}, _validated=True)

    @staticmethod
    def one() -> "MotiveClass":
        return MotiveClass({(0, 0): 1}, _validated=True)

    @staticmethod
    def from_scalar(c) -> "MotiveClass":
        c = _ex(c)
        return MotiveClass({(0, 0): c} if c != 0 else {}, _validated=True)

    @staticmethod
    def lpow(k: int = 1) -> "MotiveClass":
        """L^k = (uv)^k."""
        return MotiveClass({(k, k): 1}, _validated=True)

    @staticmethod
    def h(p, q, c=1) -> "MotiveClass":
        """c times the rank-1 class of bidegree (p, q)."""
        return MotiveClass({(_ex(p), _ex(q)): _ex(c)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _as_class(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return MotiveClass(out, _validated=True)

    __radd__ = __add__

    def __neg__(self):
        return MotiveClass({k: -c for k, c in self.terms.items()}, _validated=True)

    def __sub__(self, other):
        other = _as_class(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_class(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _ex(other)
            if c == 0:
                return MotiveClass.zero()
            return MotiveClass({k: v * c for k, v in self.terms.items()}, _validated=True)
        if not isinstance(other, MotiveClass):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) == 1:
            ((p1, q1), c1) = next(iter(a.items()))
            if type(p1) is int and type(q1) is int:
                return MotiveClass(
                    {(p2 + p1, q2 + q1): c2 * c1 for (p2, q2), c2 in b.items()},
                    _validated=True,
                )
        if len(b) == 1:
            ((p2, q2), c2) = next(iter(b.items()))
            if type(p2) is int and type(q2) is int:
                return MotiveClass(
                    {(p1 + p2, q1 + q2): c1 * c2 for (p1, q1), c1 in a.items()},
                    _validated=True,
                )
        out = {}
        for (p1, q1), c1 in a.items():
            int1 = type(p1) is int and type(q1) is int
            for (p2, q2), c2 in b.items():
                if int1 and type(p2) is int and type(q2) is int:
                    k = (p1 + p2, q1 + q2)
                else:
                    k = (_ex(p1 + p2), _ex(q1 + q2))
                s = out.get(k, 0) + c1 * c2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return MotiveClass(out, _validated=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers live in MotiveFrac")
        out = MotiveClass.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_class(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- helpers --------------------------------------------------------

    def shift(self, k: int) -> "MotiveClass":
        """Multiply by L^k (shift both gradings by k)."""
        if not k:
            return self
        return MotiveClass(
            {(_ex(p + k), _ex(q + k)): c for (p, q), c in self.terms.items()},
            _validated=True,
        )

    def weights(self) -> set:
        """Set of total weights p + q appearing."""
        return {_ex(p + q) for p, q in self.terms}

    def eval_l(self, value: Fraction) -> Fraction:
        """Evaluate at L = value; only defined when every term has p = q in Z."""
        total = Fraction(0)
        for (p, q), c in self.terms.items():
            if p != q or Fraction(p).denominator != 1:
                raise ValueError(f"term u^{p} v^{q} is not a power of L")
            total += Fraction(c) * Fraction(value) ** int(p)
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (p, q) in sorted(self.terms, key=lambda k: (Fraction(k[0]), Fraction(k[1]))):
            c = self.terms[(p, q)]
            if (p, q) == (0, 0):
                bits.append(f"{c}")
            else:
                bits.append(f"{c}*u^{p}*v^{q}")
        return " + ".join(bits)


def _as_class(x):
    if isinstance(x, MotiveClass):
        return x
    if isinstance(x, (int, Fraction)):
        return MotiveClass.from_scalar(x)
    return NotImplemented


def divide_by_l_diff(cls: MotiveClass, a: int, b: int) -> MotiveClass:
    """Exact division of a class by (L^a - L^b); raises if the division is inexact."""
    if a == b:
        raise ValueError("L^a - L^b must be nonzero")
    # L^a - L^b = L^b (L^c - 1) with c = a - b; further reduce to c > 0 via
    # L^{-c} - 1 = -L^{-c} (L^c - 1).
    c = a - b
    shift = -b
    sign = 1
    if c < 0:
        c = -c
        shift += c
        sign = -1
    y = cls.shift(shift)
    # Solve Q * (L^c - 1) = y by walking each chain p, p+c, p+2c, ... inside a
    # fixed p - q grade:  Q_p = Q_{p-c} - Y_p.
    groups: dict = {}
    for (p, q), coef in y.terms.items():
        delta = _ex(p - q)
        res = _ex(Fraction(p) - c * (Fraction(p) / c).__floor__())
        groups.setdefault((delta, res), {})[_ex(p)] = coef
    out = {}
    for (delta, _res), ys in groups.items():
        ps = sorted(ys, key=Fraction)
        p = ps[0]
        top = ps[-1]
        q_run = 0
        while True:
            q_run = q_run - ys.get(p, 0)
            if q_run != 0:
                out[(p, _ex(p - delta))] = q_run
            if p == top:
                break
            p = _ex(p + c)
        if q_run != 0:
            raise ValueError("inexact division by L^a - L^b")
    res_cls = MotiveClass(out, _validated=True)
    return res_cls if sign == 1 else -res_cls


class MotiveFrac:
    """A MotiveClass divided by a multiset of factors (L^a - L^b)."""

    __slots__ = ("num", "den", "_den_cls")

    def __init__(self, num, den=()):
        self.num = _as_class(num)
        if self.num is NotImplemented:
            raise TypeError(f"cannot build MotiveFrac from {num!r}")
        for (a, b) in den:
            if a == b:
                raise ValueError("denominator factor L^a - L^b must be nonzero")
        self.den = () if not self.num else tuple(sorted((int(a), int(b)) for a, b in den))
        self._den_cls = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def _fast(num: MotiveClass, den: tuple) -> "MotiveFrac":
        """Internal: build from an already-sorted denominator tuple."""
        out = MotiveFrac.__new__(MotiveFrac)
        out.num = num
        out.den = den if num else ()
        out._den_cls = None
        return out

    @staticmethod
    def zero() -> "MotiveFrac":
        return MotiveFrac(MotiveClass.zero())

    @staticmethod
    def one() -> "MotiveFrac":
        return MotiveFrac(MotiveClass.one())

    @staticmethod
    def lpow(k: int) -> "MotiveFrac":
        return MotiveFrac(MotiveClass.lpow(k))

    def den_class(self) -> MotiveClass:
        """The denominator expanded as a MotiveClass."""
        if self._den_cls is None:
            self._den_cls = _product(self.den)
        return self._den_cls

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return MotiveFrac._fast(self.num + other.num, self.den)
        if not self.num:
            return other
        if not other.num:
            return self
        common = _multiset_union(self.den, other.den)
        lift_l = _product(_multiset_sub(common, self.den))
        lift_r = _product(_multiset_sub(common, other.den))
        return MotiveFrac._fast(self.num * lift_l + other.num * lift_r, common)

    __radd__ = __add__

    def __neg__(self):
        return MotiveFrac._fast(-self.num, self.den)

    def __sub__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_frac(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MotiveClass)):
            return MotiveFrac._fast(self.num * other, self.den)
        if not isinstance(other, MotiveFrac):
            return NotImplemented
        if not other.den:
            return MotiveFrac._fast(self.num * other.num, self.den)
        return MotiveFrac._fast(
            self.num * other.num, tuple(sorted(self.den + other.den))
        )

    __rmul__ = __mul__

    def mul_lpow(self, k: int) -> "MotiveFrac":
        return MotiveFrac._fast(self.num.shift(k), self.den)

    def div_lpow_diff(self, a: int, b: int) -> "MotiveFrac":
        """Divide by (L^a - L^b), enlarging the denominator."""
        if a == b:
            raise ValueError("denominator factor L^a - L^b must be nonzero")
        return MotiveFrac._fast(self.num, tuple(sorted(self.den + ((int(a), int(b)),))))

    def __eq__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return not other.num
        if not other.num:
            return False
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den_class() == other.num * self.den_class()

    def __hash__(self):  # hash only safe on normalized zero / equal-den cases
        return hash(bool(self.num))

    def __bool__(self):
        return bool(self.num)

    def as_class(self) -> MotiveClass:
        """Clear the denominator by exact division; raises ValueError if inexact."""
        out = self.num
        for (a, b) in self.den:
            out = divide_by_l_diff(out, a, b)
        return out

    def eval_l(self, value: Fraction) -> Fraction:
        num = self.num.eval_l(value)
        for (a, b) in self.den:
            num /= Fraction(value) ** a - Fraction(value) ** b
        return num

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        den = " * ".join(f"(L^{a} - L^{b})" for a, b in self.den)
        return f"({self.num!r}) / ({den})"


def _as_frac(x):
    if isinstance(x, MotiveFrac):
        return x
    if isinstance(x, (int, Fraction, MotiveClass)):
        return MotiveFrac(x)
    return NotImplemented


def _multiset_union(a: tuple, b: tuple) -> tuple:
    out = []
    ca = {k: a.count(k) for k in set(a)}
    cb = {k: b.count(k) for k in set(b)}
    for k in sorted(set(ca) | set(cb)):
        out.extend([k] * max(ca.get(k, 0), cb.get(k, 0)))
    return tuple(out)


def _multiset_sub(a: tuple, b: tuple) -> tuple:
    out = list(a)
    for k in b:
        out.remove(k)
    return tuple(out)


_product_cache: dict = {}


def _product(factors: tuple) -> MotiveClass:
    hit = _product_cache.get(factors)
    if hit is None:
        prod = MotiveClass.one()
        for (a, b) in factors:
            prod = prod * (MotiveClass.lpow(a) - MotiveClass.lpow(b))
        _product_cache[factors] = hit = prod
    return hit


# ---------------------------------------------------------------------------
# Character classes on motives
# ---------------------------------------------------------------------------

_jacobi_cache: dict = {}


def jacobi(alpha1: Character, alpha2: Character) -> MotiveClass:
    """The two-variable Jacobi class, in its Hodge realization.

    J(1,1) = L, J(1,alpha) = 0 for nontrivial alpha, J(alpha, alpha^{-1}) = -1
    (the base field contains all roots of unity, so the class of alpha(-1) is 1),
    and otherwise -u^{1-s} v^s where s = gamma(a1) + gamma(a2) - gamma(a1*a2).
    """
    key = (alpha1.value, alpha2.value)
    hit = _jacobi_cache.get(key)
    if hit is not None:
        return hit
    t1, t2 = alpha1.is_trivial(), alpha2.is_trivial()
    if t1 and t2:
        out = MotiveClass.lpow(1)
    elif t1 or t2:
        out = MotiveClass.zero()
    elif (alpha1 * alpha2).is_trivial():
        out = MotiveClass.from_scalar(-1)
    else:
        s = gamma(alpha1) + gamma(alpha2) - gamma(alpha1 * alpha2)
        out = MotiveClass.h(1 - s, s, -1)
    _jacobi_cache[key] = out
    return out


def fermat_torus_class(alpha1: Character, alpha2: Character) -> MotiveClass:
    """Class of the open Fermat torus curve x^d + y^d = 1, x*y != 0, with characters."""
    t1, t2 = alpha1.is_trivial(), alpha2.is_trivial()
    if t1 and t2:
        return MotiveClass.lpow(1) - 2
    if t1 or t2:
        return MotiveClass.from_scalar(-1)
    return jacobi(alpha1, alpha2)


def torus_char_class(exponents, alpha: Character) -> MotiveClass:
    """Class of the m-torus with alpha pulled back along c -> prod c_j^{n_j}.

    Equals (L-1)^m when the order of alpha divides gcd of the positive
    exponents (a trivial pullback), and 0 otherwise; with no positive
    exponent, the monomial is constant and only the trivial alpha survives.
    """
    exponents = list(exponents)
    if any(n < 0 for n in exponents):
        raise ValueError("exponents must be nonnegative")
    m = len(exponents)
    g = 0
    for n in exponents:
        g = gcd(g, n)
    if g == 0:
        trivial_pullback = alpha.is_trivial()
    else:
        trivial_pullback = (gamma(alpha) * g).denominator == 1
    if not trivial_pullback:
        return MotiveClass.zero()
    return (MotiveClass.lpow(1) - 1) ** m

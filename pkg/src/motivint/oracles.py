"""Numeric ground truth: p-adic exponential sums and finite-field character sums.

Everything here is a finite sum over residues, evaluated in complex floating
point; the decomposition of an oscillatory integral into Gauss sums times
multiplicative character integrals is checked to 1e-9.  These sums are the
numeric shadow of the exact Gauss-ring algebra: g(chi1) g(chi2) =
j(chi1, chi2) g(chi1 chi2) mirrors the basis multiplication law and
|j| = sqrt(p) mirrors the weight of the Jacobi class.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import pi

from .polyparse import IntPolynomial

TOLERANCE = 1e-9


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PadicContext:
    """Arithmetic over Z/p^N for an odd prime p, with uniformizer p."""

    p: int
    precision: int

    def __post_init__(self):
        if self.p == 2 or not _is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")


def _primitive_root(p: int, c: int) -> int:
    mod = p**c
    order = (p - 1) * p ** (c - 1)
    for g in range(2, mod):
        if g % p == 0:
            continue
        if pow(g, order, mod) != 1:
            continue
        if all(pow(g, order // q, mod) != 1 for q in _prime_factors(order)):
            return g
    raise ValueError("no primitive root found")


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_dlog_cache: dict = {}


def _dlog_table(p: int, c: int) -> dict:
    key = (p, c)
    hit = _dlog_cache.get(key)
    if hit is None:
        mod = p**c
        g = _primitive_root(p, c)
        table = {}
        acc = 1
        for k in range((p - 1) * p ** (c - 1)):
            table[acc] = k
            acc = acc * g % mod
        hit = table
        _dlog_cache[key] = hit
    return hit


class ResidueCharacter:
    """A character of (Z/p^c)^* fixed by its value exp(2 pi i k / phi(p^c)) on
    the smallest primitive root; the conductor c is minimal unless c = 1."""

    __slots__ = ("p", "conductor", "index")

    def __init__(self, p: int, conductor: int, index: int):
        if p == 2 or not _is_prime(p):
            raise ValueError("p must be an odd prime")
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        phi = (p - 1) * p ** (conductor - 1)
        index %= phi
        if conductor >= 2 and index % p == 0:
            raise ValueError("character is not primitive at its conductor")
        self.p = p
        self.conductor = conductor
        self.index = index

    @staticmethod
    def trivial(p: int) -> "ResidueCharacter":
        return ResidueCharacter(p, 1, 0)

    @property
    def group_order(self) -> int:
        return (self.p - 1) * self.p ** (self.conductor - 1)

    def is_trivial(self) -> bool:
        return self.conductor == 1 and self.index == 0

    def inverse(self) -> "ResidueCharacter":
        return ResidueCharacter(self.p, self.conductor, -self.index)

    def __mul__(self, other: "ResidueCharacter") -> "ResidueCharacter":
        if self.p != other.p or self.conductor != other.conductor:
            raise ValueError("characters must share a modulus to multiply")
        phi = self.group_order
        k = (self.index + other.index) % phi
        c = self.conductor
        # drop to the true conductor of the product
        while c >= 2 and k % self.p == 0:
            k //= self.p
            c -= 1
        return ResidueCharacter(self.p, c, k)

    def value(self, v: int) -> complex:
        """chi(v) for v coprime to p, read modulo p^conductor."""
        mod = self.p**self.conductor
        v %= mod
        if v % self.p == 0:
            raise ValueError("character evaluated at a non-unit")
        k = _dlog_table(self.p, self.conductor)[v]
        return cmath.exp(2j * pi * self.index * k / self.group_order)

    def __eq__(self, other):
        return (
            isinstance(other, ResidueCharacter)
            and (self.p, self.conductor, self.index)
            == (other.p, other.conductor, other.index)
        )

    def __hash__(self):
        return hash((self.p, self.conductor, self.index))

    def __repr__(self):
        return f"ResidueCharacter(p={self.p}, c={self.conductor}, k={self.index})"


def characters_mod(p: int, level: int) -> list[ResidueCharacter]:
    """All characters of (Z/p^level)^*, each reduced to its conductor."""
    phi_level = (p - 1) * p ** (level - 1)
    g_entries = []
    for k in range(phi_level):
        if k == 0:
            g_entries.append(ResidueCharacter.trivial(p))
            continue
        v = 0
        kk = k
        while kk % p == 0:
            v += 1
            kk //= p
        c = max(1, level - v)
        # index at conductor c: divide out the redundant p-part, then express
        # against the conductor-level primitive root
        k_red = k // p ** (level - c)
        if c == level:
            g_entries.append(ResidueCharacter(p, c, k_red))
        else:
            g_level_c = _primitive_root(p, c)
            dl = _dlog_table(p, level)[g_level_c % p**level]
            # value of chi_k on the conductor-c generator determines the index
            idx = k_red * dl % ((p - 1) * p ** (c - 1))
            g_entries.append(ResidueCharacter(p, c, idx))
    return g_entries


def additive_character(numerator: int, p_power: int) -> complex:
    """exp(2 pi i {numerator / p_power}_p)."""
    return cmath.exp(2j * pi * (numerator % p_power) / p_power)


# ---------------------------------------------------------------------------
# residual test functions
# ---------------------------------------------------------------------------


def phi_one(p: int, m: int):
    """The constant residual function 1."""
    return lambda xbar: Fraction(1)


def phi_indicator_zero(p: int, m: int):
    """Indicator of the residue class 0 in (Z/p)^m."""
    zero = (0,) * m
    return lambda xbar: Fraction(1) if xbar == zero else Fraction(0)


# ---------------------------------------------------------------------------
# the integrals
# ---------------------------------------------------------------------------


def _value_buckets(f: IntPolynomial, ctx: PadicContext, phi, m: int, mod: int) -> dict:
    """Sum phi(x mod p) over x in (Z/p^N)^m, bucketed by f(x) mod ``mod``."""
    p, n_prec = ctx.p, ctx.precision
    pn = p**n_prec
    monos = list(f._pad(m).items())
    tables = []
    for exps, coeff in monos:
        per_var = []
        for e in exps:
            per_var.append([pow(x, e, mod) for x in range(pn)] if e else None)
        tables.append((per_var, coeff % mod))
    buckets: dict = {}
    for x in product(range(pn), repeat=m):
        val = 0
        for per_var, coeff in tables:
            term = coeff
            for xj, tab in zip(x, per_var):
                if tab is not None:
                    term = term * tab[xj] % mod
            val = (val + term) % mod
        w = phi(tuple(xj % p for xj in x))
        if w:
            buckets[val] = buckets.get(val, Fraction(0)) + w
    return buckets


def padic_exp_integral(f: IntPolynomial, ctx: PadicContext, phi, i: int) -> complex:
    """Integral of phi(x) Psi(f(x)/p^{i+1}) over Z_p^m, as an exact finite sum."""
    if ctx.precision < i + 1:
        raise ValueError("precision must be at least i + 1")
    m = max(f.nvars, 1)
    mod = ctx.p ** (i + 1)
    buckets = _value_buckets(f, ctx, phi, m, mod)
    norm = Fraction(1, ctx.p ** (ctx.precision * m))
    total = 0j
    for val, w in buckets.items():
        total += float(w * norm) * additive_character(val, mod)
    return total


def padic_char_integral(
    f: IntPolynomial, ctx: PadicContext, phi, alpha: ResidueCharacter, i: int
) -> complex:
    """Integral of phi(x) alpha(ac f(x)) over the locus ord f(x) = i."""
    c = alpha.conductor
    if ctx.precision < i + c:
        raise ValueError("precision must be at least i + conductor")
    m = max(f.nvars, 1)
    p = ctx.p
    mod = p ** (i + c)
    buckets = _value_buckets(f, ctx, phi, m, mod)
    norm = Fraction(1, p ** (ctx.precision * m))
    total = 0j
    pi_i = p**i
    for val, w in buckets.items():
        if val % pi_i:
            continue
        unit = val // pi_i
        if unit % p == 0:
            continue  # ord f > i
        total += float(w * norm) * alpha.value(unit % p**c)
    return total


def gauss_sum_numeric(ctx: PadicContext, alpha: ResidueCharacter) -> complex:
    """q^{1-c} sum over units v mod p^c of alpha(v) Psi(v / p^c)."""
    p, c = ctx.p, alpha.conductor
    mod = p**c
    total = 0j
    for v in range(1, mod):
        if v % p == 0:
            continue
        total += alpha.value(v) * additive_character(v, mod)
    return p ** (1 - c) * total


def jacobi_sum_numeric(p: int, chi1: ResidueCharacter, chi2: ResidueCharacter) -> complex:
    """sum over x != 0, 1 mod p of chi1(x) chi2(1 - x); conductor-1 characters only."""
    if chi1.conductor != 1 or chi2.conductor != 1 or chi1.p != p or chi2.p != p:
        raise ValueError("jacobi sums are taken for conductor-1 characters mod p")
    total = 0j
    for x in range(2, p):
        total += chi1.value(x) * chi2.value((1 - x) % p)
    return total


@dataclass
class DecompositionReport:
    """Both sides of the Gauss-sum decomposition of an exponential integral."""

    lhs: complex
    rhs: complex

    @property
    def residue(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def ok(self) -> bool:
        return self.residue <= TOLERANCE


def check_exp_decomposition(f: IntPolynomial, ctx: PadicContext, phi, i: int) -> DecompositionReport:
    """Compare the exponential integral at level i with its character decomposition.

    The right-hand side is the measure of {ord f > i} plus (q-1)^{-1} times the
    sum over characters of conductor <= i+1 of g(alpha^{-1}) times the character
    integral at level i - c(alpha) + 1.
    """
    if ctx.precision < i + 1:
        raise ValueError("precision must be at least i + 1")
    p = ctx.p
    m = max(f.nvars, 1)
    mod = p ** (i + 1)
    buckets = _value_buckets(f, ctx, phi, m, mod)
    norm = Fraction(1, p ** (ctx.precision * m))

    lhs = 0j
    for val, w in buckets.items():
        lhs += float(w * norm) * additive_character(val, mod)

    measure = float(
        sum((w for val, w in buckets.items() if val % mod == 0), Fraction(0)) * norm
    )
    rhs = complex(measure)
    for alpha in characters_mod(p, i + 1):
        c = alpha.conductor
        j = i - c + 1
        pj = p**j
        z = 0j
        for val, w in buckets.items():
            if val % pj:
                continue
            unit = val // pj
            if unit % p == 0:
                continue
            z += float(w * norm) * alpha.value(unit % p**c)
        if z != 0:
            rhs += gauss_sum_numeric(ctx, alpha.inverse()) * z / (p - 1)
    return DecompositionReport(lhs=lhs, rhs=rhs)

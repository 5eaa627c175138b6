"""Batch command-line front end; every subcommand reads and writes JSON.

Exit codes: 0 on success, 1 when a requested check fails, 2 on parse or
validation errors (with a machine-readable {"error": ...} payload).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .arcs import (
    GeometryError,
    MonomialGeometry,
    exp_series,
    measure_gt,
    measure_series,
    ts_direct_exp_coefficient,
    zeta_series,
)
from .arcs import exp_coefficient as arc_exp_coefficient
from .characters import Character
from .gaussring import u_mul
from .jsonio import (
    geometry_from_json,
    geometry_to_json,
    motive_frac_to_json,
    series_to_json,
    spectrum_to_json,
    uelement_to_json,
)
from .motives import MotiveFrac
from .oracles import (
    PadicContext,
    ResidueCharacter,
    check_exp_decomposition,
    gauss_sum_numeric,
    jacobi_sum_numeric,
    phi_indicator_zero,
    phi_one,
)
from .polyparse import PolyParseError, parse_poly
from .selftest import run_selftest
from .series import exp_t
from .spectra import GeometryPointError, sg, sp, sp_from_sg
from .gaussring import UElement

_BRIESKORN = re.compile(r"brieskorn\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)$")


class CliError(ValueError):
    pass


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_geometry(path: str) -> MonomialGeometry:
    try:
        return geometry_from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid geometry in {path}: {exc}") from exc


def _emit(payload, output: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_character(text: str) -> Character:
    try:
        return Character.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"invalid character {text!r}: {exc}") from exc


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MOTIVINT_THREADS", "1")))
    except ValueError:
        return 1


def _pretty_frac(x: MotiveFrac) -> str:
    bits = []
    for (p, q) in sorted(x.num.terms, key=lambda k: (Fraction(k[0]), Fraction(k[1]))):
        c = x.num.terms[(p, q)]
        if p == q and Fraction(p).denominator == 1:
            mono = f"L^{p}" if p else ""
        else:
            mono = f"u^{p}*v^{q}"
        bits.append(f"{c}*{mono}" if mono else f"{c}")
    num = " + ".join(bits) if bits else "0"
    if not x.den:
        return num
    den = " * ".join(f"(L^{a} - L^{b})" for a, b in x.den)
    return f"({num}) / ({den})"


def cmd_zeta(args) -> int:
    geom = _load_geometry(args.geometry)
    alpha = _parse_character(args.character)
    series = zeta_series(geom, alpha)
    payload = {
        "geometry": geometry_to_json(geom),
        "character": str(alpha),
        "series": series_to_json(series),
    }
    if args.window:
        lo, hi = args.window
        if lo > hi:
            raise CliError("window minimum exceeds maximum")
        coeffs = exp_t(series, lo, hi)
        payload["coefficients"] = [
            [i, motive_frac_to_json(c)] for i, c in zip(range(lo, hi + 1), coeffs)
        ]
        if args.display == "lpow":
            payload["coefficients_pretty"] = [
                [i, _pretty_frac(c)] for i, c in zip(range(lo, hi + 1), coeffs)
            ]
    _emit(payload, args.output)
    return 0


def cmd_exp_series(args) -> int:
    geom = _load_geometry(args.geometry)
    series = exp_series(geom)
    payload = {
        "geometry": geometry_to_json(geom),
        "series": series_to_json(series, uelement_to_json),
    }
    _emit(payload, args.output)
    return 0


def cmd_measure(args) -> int:
    geom = _load_geometry(args.geometry)
    payload = {"geometry": geometry_to_json(geom)}
    if args.gt is not None:
        if args.gt < 0:
            raise CliError("--gt level must be nonnegative")
        payload["level"] = args.gt
        payload["measure_gt"] = motive_frac_to_json(measure_gt(geom, args.gt))
    else:
        payload["series"] = series_to_json(measure_series(geom))
    _emit(payload, args.output)
    return 0


def cmd_sg(args) -> int:
    geom = _load_geometry(args.geometry)
    payload = {
        "geometry": geometry_to_json(geom),
        "sg": uelement_to_json(sg(geom)),
    }
    _emit(payload, args.output)
    return 0


def cmd_spectrum(args) -> int:
    m = _BRIESKORN.match(args.geometry.strip())
    if m:
        exponents = [int(x) for x in m.group(1).split(",")]
        if any(a < 2 for a in exponents):
            raise CliError("brieskorn exponents must be >= 2")
        total = UElement.one()
        for a in exponents:
            total = u_mul(total, sg(MonomialGeometry.make(1, [a], None, [1])))
        spectrum = sp_from_sg(total, len(exponents))
        echo: object = f"brieskorn({','.join(str(a) for a in exponents)})"
    else:
        geom = _load_geometry(args.geometry)
        try:
            spectrum = sp(geom)
        except GeometryPointError as exc:
            raise CliError(str(exc)) from exc
        echo = geometry_to_json(geom)
    _emit({"geometry": echo, "spectrum": spectrum_to_json(spectrum)}, args.output)
    return 0


def cmd_thom_sebastiani(args) -> int:
    left = _load_geometry(args.left)
    right = _load_geometry(args.right)
    if args.imax < 1:
        raise CliError("--imax must be >= 1")

    def one(i: int):
        product = u_mul(arc_exp_coefficient(left, i), arc_exp_coefficient(right, i))
        direct = ts_direct_exp_coefficient(left, right, i)
        return i, product, direct

    workers = _threads()
    indices = range(1, args.imax + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, indices))
    else:
        rows = [one(i) for i in indices]
    coeffs = []
    all_ok = True
    for i, product, direct in rows:
        equal = product == direct
        all_ok = all_ok and equal
        coeffs.append(
            {
                "i": i,
                "product": uelement_to_json(product),
                "direct": uelement_to_json(direct),
                "equal": equal,
            }
        )
    payload = {
        "left": geometry_to_json(left),
        "right": geometry_to_json(right),
        "i_max": args.imax,
        "coefficients": coeffs,
        "pass": all_ok,
    }
    _emit(payload, args.output)
    if args.check and not all_ok:
        return 1
    return 0


def cmd_oracle_padic(args) -> int:
    try:
        f = parse_poly(args.poly)
    except PolyParseError as exc:
        raise CliError(f"invalid polynomial: {exc}") from exc
    if args.level < 0:
        raise CliError("--level must be nonnegative")
    precision = args.precision if args.precision is not None else args.level + 1
    try:
        ctx = PadicContext(args.prime, precision)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if precision < args.level + 1:
        raise CliError("--precision must be at least level + 1")
    m = max(f.nvars, 1)
    phi = phi_one(ctx.p, m) if args.phi == "one" else phi_indicator_zero(ctx.p, m)
    report = check_exp_decomposition(f, ctx, phi, args.level)
    payload = {
        "poly": str(f),
        "prime": ctx.p,
        "level": args.level,
        "precision": precision,
        "phi": args.phi,
        "lhs": {"re": report.lhs.real, "im": report.lhs.imag},
        "rhs": {"re": report.rhs.real, "im": report.rhs.imag},
        "residue": report.residue,
        "pass": report.ok,
    }
    _emit(payload, args.output)
    return 0 if report.ok else 1


def cmd_oracle_gauss(args) -> int:
    p = args.prime
    try:
        ctx = PadicContext(p, 1)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    chars = [ResidueCharacter(p, 1, k) for k in range(p - 1)]
    gs = {c.index: gauss_sum_numeric(ctx, c) for c in chars}
    worst = 0.0
    pairs = 0
    for c1 in chars:
        if not c1.is_trivial():
            worst = max(worst, abs(gs[c1.index] * gs[c1.inverse().index] - c1.value(p - 1) * p))
        for c2 in chars:
            prod = c1 * c2
            if c1.is_trivial() or c2.is_trivial() or prod.is_trivial():
                continue
            j = jacobi_sum_numeric(p, c1, c2)
            worst = max(worst, abs(gs[c1.index] * gs[c2.index] - j * gs[prod.index]))
            worst = max(worst, abs(abs(j) - p**0.5))
            pairs += 1
    ok = worst <= 1e-9
    payload = {
        "prime": p,
        "pairs_checked": pairs,
        "max_residue": worst,
        "pass": ok,
    }
    _emit(payload, args.output)
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    failures = run_selftest()
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivint",
        description="Exact motivic character integrals, exponential series and Hodge spectra "
        "for monomial normal-crossings data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", help="write JSON here instead of stdout")

    p = sub.add_parser("zeta", help="character zeta series of a geometry")
    p.add_argument("--geometry", required=True, help="geometry JSON file (or - for stdin)")
    p.add_argument("--character", required=True, help="character as a/d")
    p.add_argument("--window", nargs=2, type=int, metavar=("MIN", "MAX"),
                   help="also expand coefficients on this window")
    p.add_argument("--display", choices=["uv", "lpow"], default="uv")
    add_output(p)
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("exp-series", help="exponential series over the Gauss-sum ring")
    p.add_argument("--geometry", required=True)
    add_output(p)
    p.set_defaults(fn=cmd_exp_series)

    p = sub.add_parser("measure", help="measure series, or a single tail measure")
    p.add_argument("--geometry", required=True)
    p.add_argument("--gt", type=int, help="emit the measure of ord f > GT instead")
    add_output(p)
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("sg", help="Gauss-twisted vanishing-cycle sum")
    p.add_argument("--geometry", required=True)
    add_output(p)
    p.set_defaults(fn=cmd_sg)

    p = sub.add_parser("spectrum", help="Hodge spectrum (geometry file or brieskorn(a,b,...))")
    p.add_argument("--geometry", required=True)
    add_output(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("thom-sebastiani", help="compare product and direct paths")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--imax", type=int, default=10)
    p.add_argument("--check", action="store_true", help="exit 1 on any mismatch")
    add_output(p)
    p.set_defaults(fn=cmd_thom_sebastiani)

    p = sub.add_parser("oracle", help="numeric oracles")
    osub = p.add_subparsers(dest="oracle_command", required=True)

    po = osub.add_parser("padic", help="p-adic exponential-integral decomposition check")
    po.add_argument("--poly", required=True, help="integer polynomial in x, y, z")
    po.add_argument("--prime", type=int, required=True)
    po.add_argument("--level", type=int, required=True)
    po.add_argument("--precision", type=int)
    po.add_argument("--phi", choices=["one", "indicator0"], default="one")
    add_output(po)
    po.set_defaults(fn=cmd_oracle_padic)

    pg = osub.add_parser("gauss", help="finite-field Gauss/Jacobi relation suite")
    pg.add_argument("--prime", type=int, required=True)
    add_output(pg)
    pg.set_defaults(fn=cmd_oracle_gauss)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, GeometryError) as exc:
        sys.stdout.write(json.dumps({"error": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

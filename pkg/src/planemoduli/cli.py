"""Command-line front end.

Every number printed by this interface is produced by exact arithmetic and
serialized as an integer or a "num/den" rational; floating point only ever
appears in SVG coordinates, rounded at the moment of rendering.  Identical
argument vectors produce identical bytes.

Exit codes: 0 on success, 1 on a usage error, 2 on a domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import betti, divisors, ktheory, walls
from .errors import PlaneModuliError
from .exactmath import QPoly, grassmannian_poincare, parse_rational
from .ktheory import parse_chern
from .walls import Wall

USAGE_ERROR = 1
DOMAIN_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="planemoduli",
                     description="Exact wall-crossing computations for moduli "
                                 "of one-dimensional plane sheaves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_walls = sub.add_parser("walls", help="potential and actual walls for a degree")
    p_walls.add_argument("--degree", type=int, required=True)
    p_walls.add_argument("--json", action="store_true")
    p_walls.add_argument("--svg", metavar="FILE")

    for name in ("nef", "effective"):
        p = sub.add_parser(name, help=f"{name} cone generators")
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p_div = sub.add_parser("divisor", help="wall divisor for a destabilizer")
    p_div.add_argument("--degree", type=int, required=True)
    p_div.add_argument("--destabilizer", required=True, metavar="r,c,e")
    p_div.add_argument("--json", action="store_true")

    p_int = sub.add_parser("intersect", help="intersection degree of a divisor "
                                             "class with a test family")
    p_int.add_argument("--family", required=True,
                       choices=["pencil", "jacobian", "evenwall", "oddwall"])
    p_int.add_argument("--degree", type=int, required=True)
    p_int.add_argument("--w", required=True, metavar="r,c,e")
    p_int.add_argument("--json", action="store_true")

    p_euler = sub.add_parser("euler", help="Euler pairing of two K-classes")
    p_euler.add_argument("--v", required=True, metavar="r,c,e")
    p_euler.add_argument("--w", required=True, metavar="r,c,e")
    p_euler.add_argument("--pairing", required=True, choices=["product", "hom"])
    p_euler.add_argument("--json", action="store_true")

    p_betti = sub.add_parser("betti", help="Poincare polynomial of a space")
    p_betti.add_argument("--space", required=True,
                         metavar="M6|N6|Q6|hilb:n[:k]|kronecker:m:e:f|gr:k:n")
    p_betti.add_argument("--json", action="store_true")
    p_betti.add_argument("--at", metavar="Q",
                         help="evaluate the polynomial at a rational point")

    return parser


def _print_json(obj) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


def _actual_destabilizers(degree: int) -> list[ktheory.ChernP2]:
    """Destabilizers of walls known to be actual, from curated tables."""
    if degree == 6:
        curated = [rec.destabilizer for rec in betti.m6_wall_records()]
    else:
        curated = [divisors.first_wall_destabilizer(degree)]
    return curated + [ktheory.line_bundle(0)]


def _cmd_walls(args) -> int:
    candidates = walls.enumerate_potential_walls(args.degree)
    actual = set(_actual_destabilizers(args.degree))
    rows = []
    for cand, wall in candidates:
        is_actual = cand in actual
        divisor = divisors.wall_divisor(args.degree, cand) if is_actual else None
        rows.append((cand, wall, is_actual, divisor))
    if args.svg:
        render_svg([w for _, w, _, _ in rows], args.svg)
    if args.json:
        _print_json({
            "degree": args.degree,
            "walls": [{
                "center": str(w.center),
                "radius_sq": str(w.radius_sq),
                "destabilizer": str(c),
                "actual": flag,
                "divisor": div.to_json() if div is not None else None,
            } for c, w, flag, div in rows],
        })
        return 0
    header = ("center", "radius_sq", "destabilizer", "status", "divisor")
    table = [header]
    for c, w, flag, div in rows:
        table.append((str(w.center), str(w.radius_sq), str(c),
                      "actual" if flag else "potential",
                      str(div) if div is not None else "-"))
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    for row in table:
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return 0


def _cmd_nef(args) -> int:
    a, b = divisors.nef_generators(args.degree)
    if args.json:
        _print_json({"A": a.to_json(), "B": b.to_json()})
    else:
        print(f"{a}, {b}")
    return 0


def _cmd_effective(args) -> int:
    a, l = divisors.effective_generators(args.degree)
    if args.json:
        _print_json({"A": a.to_json(), "L": l.to_json()})
    else:
        print(f"{a}, {l}")
    return 0


def _cmd_divisor(args) -> int:
    div = divisors.wall_divisor(args.degree, parse_chern(args.destabilizer))
    if args.json:
        _print_json(div.to_json())
    else:
        print(str(div))
    return 0


_FAMILY_BY_FLAG = {"pencil": "pencil", "jacobian": "jacobian",
                   "evenwall": "even_wall", "oddwall": "odd_wall"}


def _cmd_intersect(args) -> int:
    family = divisors.family_class(_FAMILY_BY_FLAG[args.family], args.degree)
    value = divisors.intersection_degree(family, parse_chern(args.w))
    if args.json:
        _print_json({"family": args.family, "degree": args.degree,
                     "w": args.w, "value": str(value)})
    else:
        print(str(value))
    return 0


def _cmd_euler(args) -> int:
    v, w = parse_chern(args.v), parse_chern(args.w)
    pairing = ktheory.euler_product if args.pairing == "product" else ktheory.euler_hom
    value = pairing(v, w)
    if args.json:
        _print_json({"pairing": args.pairing, "v": args.v, "w": args.w,
                     "value": str(value)})
    else:
        print(str(value))
    return 0


def _space_poly(spec: str) -> QPoly:
    if spec == "M6":
        return betti.assemble_m6()
    if spec == "N6":
        return betti.n6_poincare()
    if spec == "Q6":
        return betti.q6_poincare()
    head, *rest = spec.split(":")
    try:
        nums = [int(s) for s in rest]
    except ValueError as exc:
        raise _UsageError(f"bad space parameters in {spec!r}") from exc
    if head == "hilb" and len(nums) in (1, 2):
        return betti.hilb_model_poincare(nums[0], nums[1] if len(nums) == 2 else 0)
    if head == "kronecker" and len(nums) == 3:
        return betti.kronecker_poincare(nums[0], (nums[1], nums[2]))
    if head == "gr" and len(nums) == 2:
        return grassmannian_poincare(nums[0], nums[1])
    raise _UsageError(f"unknown space {spec!r}")


def _cmd_betti(args) -> int:
    poly = _space_poly(args.space)
    at = parse_rational(args.at) if args.at is not None else None
    if args.json:
        payload = {
            "space": args.space,
            "coefficients": poly.to_coefficient_strings(),
            "degree": poly.degree,
            "euler": str(poly(1)),
        }
        if at is not None:
            payload["at"] = str(at)
            payload["value"] = str(Fraction(poly(at)))
        _print_json(payload)
    elif at is not None:
        print(str(Fraction(poly(at))))
    else:
        print(str(poly))
    return 0


def render_svg(wall_list: list[Wall], path: str) -> None:
    """Write the walls as nested upper-half-plane arcs to an SVG file.

    Coordinates are derived from the exact rational data and rounded only
    here; output bytes are deterministic for a fixed input list.
    """
    if not wall_list:
        raise PlaneModuliError("nothing to render: empty wall list")
    radii = [math.sqrt(w.radius_sq) for w in wall_list]
    lo = min(float(w.center) - r for w, r in zip(wall_list, radii))
    hi = max(float(w.center) + r for w, r in zip(wall_list, radii))
    top = max(radii)
    scale = 100.0
    pad = 10.0
    width = (hi - lo) * scale + 2 * pad
    height = top * scale + 2 * pad

    def fmt(x: float) -> str:
        return f"{x:.6f}"

    baseline = height - pad
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(width)}" '
        f'height="{fmt(height)}" viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f'<line x1="0" y1="{fmt(baseline)}" x2="{fmt(width)}" '
        f'y2="{fmt(baseline)}" stroke="#888" stroke-width="1"/>',
    ]
    ordered = sorted(zip(wall_list, radii), key=lambda wr: -wr[1])
    for wall, radius in ordered:
        x1 = (float(wall.center) - radius - lo) * scale + pad
        x2 = (float(wall.center) + radius - lo) * scale + pad
        r = radius * scale
        lines.append(
            f'<path d="M {fmt(x1)} {fmt(baseline)} A {fmt(r)} {fmt(r)} 0 0 1 '
            f'{fmt(x2)} {fmt(baseline)}" fill="none" stroke="#205080" '
            f'stroke-width="1.5"/>')
    lines.append("</svg>")
    with open(path, "w", encoding="ascii") as handle:
        handle.write("\n".join(lines) + "\n")


_COMMANDS = {
    "walls": _cmd_walls,
    "nef": _cmd_nef,
    "effective": _cmd_effective,
    "divisor": _cmd_divisor,
    "intersect": _cmd_intersect,
    "euler": _cmd_euler,
    "betti": _cmd_betti,
}


#: flags whose values may start with "-", which argparse would otherwise
#: mistake for options; their tokens are joined with "=" before parsing
_VALUE_FLAGS = ("--w", "--v", "--destabilizer", "--at")


def _join_value_flags(argv: list[str]) -> list[str]:
    out = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if (token in _VALUE_FLAGS and i + 1 < len(argv)
                and not argv[i + 1].startswith("--")):
            out.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def run(argv: list[str]) -> int:
    """Parse arguments, dispatch, and map failures to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_value_flags(argv))
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except SystemExit as exc:  # argparse -h/--help
        code = exc.code
        return 0 if code in (0, None) else USAGE_ERROR
    except PlaneModuliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))

"""
Tower verbs - bounds, select-step, count-places
"""

import argparse

from config import Settings
from handlers.common import emit, output_options, positive_int
from tower.bounds import bound_report, genus_info, select_step
from tower.curves import CURVES, curve, place_counts_report


def cmd_bounds(args: argparse.Namespace, settings: Settings) -> int:
    report = bound_report(args.n)
    payload = report.to_json()
    lines = [
        f"n = {report.n}, step {report.selected_step} ({report.selected_step.name})",
        f"  Step bound 9/2(n+g+5):     {float(report.step_bound):.3f}",
        f"  Without derivatives:       {float(report.simple_bound):.3f}",
        f"  With derivatives:          {float(report.derivative_bound):.3f}",
    ]
    for name, value in report.legacy.items():
        lines.append(f"  {name + ':':<27}{float(value):.3f}")
    emit(args, payload, "\n".join(lines))
    return 0


def cmd_select_step(args: argparse.Namespace, settings: Settings) -> int:
    step = select_step(args.n)
    info = genus_info(step)
    payload = dict(step.to_json(), genus={"exact": info.exact, "lower": info.lower, "upper": info.upper})
    genus = info.exact if info.exact is not None else f"<= {info.upper}"
    emit(args, payload, f"n = {args.n}: {step} ({step.name}), genus {genus}")
    return 0


def cmd_count_places(args: argparse.Namespace, settings: Settings) -> int:
    report = place_counts_report(curve(args.step))
    counts = report["recomputed"]
    lines = [f"{report['step']}: " + ", ".join(report["equations"] or ["rational field"])]
    for key in ("genus", "N1", "N2", "N4"):
        mark = "✅" if report["matches_paper"][key] else "⚠️"
        lines.append(f"  {mark} {key:<6} {counts[key]:>4}  (table {report['table'][key]})")
    lines.append(f"  N1 + 2 N2 + 4 N4 = {counts['place_sum']}, lower bound {report['place_sum_lower']}")
    emit(args, report, "\n".join(lines))
    return 0


def register_tower_handlers(subparsers) -> None:
    """Attach bounds, select-step and count-places"""
    common = output_options()

    p = subparsers.add_parser('bounds', parents=[common], help='tensor-rank bounds for F_2^n')
    p.add_argument('--n', type=positive_int, required=True)
    p.set_defaults(handler=cmd_bounds)

    p = subparsers.add_parser('select-step', parents=[common], help='tower step used for F_2^n')
    p.add_argument('--n', type=positive_int, required=True)
    p.set_defaults(handler=cmd_select_step)

    p = subparsers.add_parser('count-places', parents=[common], help='genus and place counts of a tower step')
    p.add_argument('--step', required=True, help=f"one of {', '.join(CURVES)}, any case")
    p.set_defaults(handler=cmd_count_places)

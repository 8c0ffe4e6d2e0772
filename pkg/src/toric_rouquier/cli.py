"""Command-line front end.

One verb per operation; fan and CW inputs are JSON files, rational
inputs are "p/q" strings, reports go to stdout (or a file) and logging
to stderr.  Exit codes: 0 success, 2 parse error, 3 validation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import bondal_ruan, incidence, report as report_mod, skeleton as skel, svg
from .fan import Fan, FanFormatError, cox_data, validate_fan
from .incidence import CWFormatError, CWPoset

log = logging.getLogger("toric_rouquier")

EXIT_PARSE = 2
EXIT_INVALID = 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc), EXIT_PARSE)
    except json.JSONDecodeError as exc:
        raise CliError("malformed JSON in %s: %s" % (path, exc), EXIT_PARSE)


def _load_fan(path):
    try:
        return Fan.from_json(_load_json(path))
    except FanFormatError as exc:
        raise CliError("bad fan file %s: %s" % (path, exc), EXIT_PARSE)


def _load_cw(path):
    try:
        return CWPoset.from_json(_load_json(path))
    except (CWFormatError, KeyError, TypeError) as exc:
        raise CliError("bad CW file %s: %s" % (path, exc), EXIT_PARSE)


def _parse_rationals(text):
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError("bad rational vector %r: %s" % (text, exc), EXIT_PARSE)


def _emit(data, out=None):
    payload = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def cmd_validate(args):
    fan = _load_fan(args.fan)
    diag = validate_fan(fan)
    _emit(diag.to_json())
    return 0 if diag.is_valid else EXIT_INVALID


def cmd_cox(args):
    fan = _load_fan(args.fan)
    cox = cox_data(fan)
    _emit({"class_group": cox.ghat.describe(),
           "beta": [list(r) for r in cox.beta],
           "beta_dual": [list(r) for r in cox.beta_dual],
           "spans": cox.spans})
    return 0


def cmd_phi(args):
    fan = _load_fan(args.fan)
    cox = cox_data(fan)
    x = _parse_rationals(args.point)
    try:
        cls = bondal_ruan.phi_eval(cox, x)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    _emit(cls.to_json())
    return 0


def cmd_image_phi(args):
    fan = _load_fan(args.fan)
    cox = cox_data(fan)
    img = bondal_ruan.image_phi(cox, method=args.method, lmax=args.lmax,
                                workers=args.parallel)
    _emit(img.to_json())
    return 0


def cmd_frobenius(args):
    fan = _load_fan(args.fan)
    cox = cox_data(fan)
    classes = bondal_ruan.frobenius_level_set(cox, args.level,
                                              workers=args.parallel)
    _emit({"level": args.level, "classes": [c.to_json() for c in classes],
           "count": len(classes)})
    return 0


def cmd_strata(args):
    fan = _load_fan(args.fan)
    cox = cox_data(fan)
    strat = bondal_ruan.br_stratification(cox)
    _emit(strat.to_json())
    return 0


def cmd_report(args):
    fan = _load_fan(args.fan)
    try:
        rep = report_mod.run_report(fan, workers=args.parallel)
    except report_mod.ValidationFailure as exc:
        _emit(exc.diagnostics.to_json())
        return EXIT_INVALID
    payload = rep.to_json_bytes()
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    if args.svg:
        cox = cox_data(fan)
        strat = bondal_ruan.br_stratification(cox)
        svg.emit_svg(strat, args.svg)
    return 0


def cmd_cw(args):
    poset = _load_cw(args.cw)
    diag = incidence.validate_cw(poset)
    out = {"graded": diag.graded, "diamond": diag.diamond,
           "violations": diag.violations}
    if diag.graded and diag.diamond:
        alg = incidence.incidence_algebra(poset)
        dual = incidence.quadratic_dual(alg)
        cap = poset.top_dim + 2
        pa = incidence.loewy_profile(alg, cap)
        pd = incidence.loewy_profile(dual, cap)
        ok, residual = incidence.koszul_hilbert_check(alg, dual, cap)
        gt = incidence.generation_time_bounds(poset)
        out.update({
            "loewy_length_A": pa.loewy_length,
            "loewy_length_A_dual": pd.loewy_length,
            "graded_dimension_totals_A": pa.totals,
            "graded_dimension_totals_A_dual": pd.totals,
            "hilbert_identity": ok,
            "generation_time": {"t_GA": gt.t_GA, "t_GA_dual": gt.t_GA_dual,
                                "dim_X": gt.dim_X,
                                "matches_dimension": gt.matches_dimension},
        })
    _emit(out)
    return 0 if not diag.violations else EXIT_INVALID


def cmd_skeleton_member(args):
    fan = _load_fan(args.fan)
    x = _parse_rationals(args.x)
    xi = _parse_rationals(args.xi)
    try:
        member = skel.skeleton_member(fan, args.mode,
                                      skel.CotangentPoint(x, xi))
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    _emit({"member": member, "mode": args.mode})
    return 0


def cmd_skeleton_subset(args):
    coarse = _load_fan(args.coarse)
    fine = _load_fan(args.fine)
    verdict = skel.skeleton_subset(coarse, fine, args.coarse_mode,
                                   args.fine_mode,
                                   falsifier_samples=args.samples)
    _emit(verdict.to_json())
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toric-rouquier",
        description="Combinatorial Rouquier-dimension toolkit for toric fans")
    parser.add_argument("--log-level", default=os.environ.get(
        "TORIC_ROUQUIER_LOG", "WARNING"))
    sub = parser.add_subparsers(dest="command", required=True)

    def fan_cmd(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("fan", help="fan JSON file")
        p.set_defaults(func=func)
        return p

    fan_cmd("validate", cmd_validate, help="structural fan diagnostics")
    fan_cmd("cox", cmd_cox, help="Cox lattice maps and class group")
    p = fan_cmd("phi", cmd_phi, help="evaluate the Bondal-Ruan map")
    p.add_argument("--point", required=True, help='rational point, e.g. "1/3,1/3"')
    p = fan_cmd("image-phi", cmd_image_phi, help="image of the Bondal-Ruan map")
    p.add_argument("--method", choices=("chambers", "grid"), default="chambers")
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--parallel", type=int, default=1)
    p = fan_cmd("frobenius", cmd_frobenius, help="Frobenius summand classes at a level")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--parallel", type=int, default=1)
    fan_cmd("strata", cmd_strata, help="Bondal-Ruan stratification (dim <= 3)")
    p = fan_cmd("report", cmd_report, help="full Rouquier-dimension report")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--svg", default=None, help="also render the stratification (dim 2)")
    p.add_argument("--parallel", type=int, default=1)

    p = sub.add_parser("cw", help="incidence-algebra suite for a CW poset")
    p.add_argument("cw", help="CW JSON file")
    p.set_defaults(func=cmd_cw)

    sk = sub.add_parser("skeleton", help="FLTZ skeleton queries")
    sksub = sk.add_subparsers(dest="skeleton_command", required=True)
    p = sksub.add_parser("member", help="exact membership of a cotangent point")
    p.add_argument("fan")
    p.add_argument("--x", required=True)
    p.add_argument("--xi", required=True)
    p.add_argument("--mode", choices=skel.MODES, default="stack")
    p.set_defaults(func=cmd_skeleton_member)
    p = sksub.add_parser("subset", help="skeleton inclusion between fans")
    p.add_argument("coarse")
    p.add_argument("fine")
    p.add_argument("--coarse-mode", choices=skel.MODES, default="variety")
    p.add_argument("--fine-mode", choices=skel.MODES, default="variety")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_skeleton_subset)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=getattr(logging, args.log_level.upper(), logging.WARNING))
    try:
        return args.func(args)
    except CliError as exc:
        log.error("%s", exc)
        sys.stderr.write("error: %s\n" % exc)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

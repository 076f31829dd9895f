"""Command-line entry point.

Exit codes: 0 success or predicate true, 1 predicate false, 2 input error,
3 insufficient precision, 4 unsupported spectrum.
"""

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from . import serialize as S
from .admissibility import (NewtonPoint, harder_narasimhan,
                            is_weakly_admissible, newton_membership,
                            newton_point)
from .arithmetic import format_rational, padic_valuation, parse_rational
from .cocharacters import (bruhat_leq, dimension_formulas, l_vector,
                           reflex_degree)
from .errors import (HodgePinkError, InputError, InsufficientPrecision,
                     UnsupportedSpectrum)
from .hodge_pink import (KFiltration, bounded_by,
                         filtration_to_lattice, hodge_polygon,
                         lattice_to_filtration, validate_lattice)
from .phin import jordan_component, validate_module
from .suites import run_all
from .unit_disc import is_zero_section

OK, FALSE, INPUT_ERROR, PRECISION, UNSUPPORTED = 0, 1, 2, 3, 4
FIXTURES_ENV = "HODGEPINK_FIXTURES"


def resolve_input(name):
    """A path as given, else a file of that name in the fixtures directory
    (the environment override first, then the packaged fixtures)."""
    path = Path(name)
    if path.exists():
        return path
    override = os.environ.get(FIXTURES_ENV)
    if override and (Path(override) / name).exists():
        return Path(override) / name
    packaged = resources.files("hodgepink") / "fixtures" / name
    if packaged.is_file():
        return packaged
    return path


def _as_lattice(h):
    return filtration_to_lattice(h) if isinstance(h, KFiltration) else h


def _mu(args, doc, h=None):
    if args.mu:
        labels = h.labels if h is not None else ("psi0",)
        e = h.e if h is not None else None
        f = h.f if h is not None else 1
        return S.parse_mu_option(args.mu, labels, e, f)
    return S.load_cocharacter(doc)[0]


# -- commands ----------------------------------------------------------------

def cmd_validate(args, doc):
    report = {}
    ok = True
    if "module" in doc:
        r = validate_module(S.load_module(doc))
        report["module"] = {"failure": r.failure, "message": r.message,
                            "valid": r.valid}
        ok &= r.valid
    if "lattice" in doc:
        try:
            q = S.load_lattice(doc)
            report["lattice"] = validate_lattice(
                [(k, b.matrix) for k, b in q.components], q.window)
        except InsufficientPrecision:
            raise
        except HodgePinkError as exc:
            report["lattice"] = {"valid": False,
                                 "failure": type(exc).__name__,
                                 "message": exc.message}
            ok = False
    if "filtration" in doc:
        try:
            S.load_filtration(doc)
            report["filtration"] = {"valid": True}
        except HodgePinkError as exc:
            report["filtration"] = {"valid": False,
                                    "failure": type(exc).__name__,
                                    "message": exc.message}
            ok = False
    if not report:
        raise InputError("nothing to validate: need module, lattice or "
                         "filtration")
    return report, OK if ok else FALSE


def cmd_polygon(args, doc):
    h = S.load_hodge_data(doc)
    if isinstance(h, KFiltration):
        poly = {lab: list(h.jump_type(lab)) for lab in h.labels}
    else:
        poly = dict((k, list(v)) for k, v in hodge_polygon(h).weights)
    return {"polygon": poly}, OK


def cmd_bound(args, doc):
    q = _as_lattice(S.load_hodge_data(doc))
    mu = _mu(args, doc, q)
    methods = ["primal", "dual"] if args.method == "both" else [args.method]
    res = {m: bounded_by(q, mu, m) for m in methods}
    poly = hodge_polygon(q)
    report = {"bounded": res, "mu": S.dump_cocharacter(mu),
              "polygon": {k: list(v) for k, v in poly.weights},
              "polygon_below_mu": bruhat_leq(poly, mu)}
    return report, OK if all(res.values()) else FALSE


def cmd_convert(args, doc):
    if "lattice" in doc:
        F = lattice_to_filtration(S.load_lattice(doc))
        return {"filtration": S.dump_filtration(F)}, OK
    if "filtration" in doc:
        q = filtration_to_lattice(S.load_filtration(doc))
        return {"lattice": S.dump_lattice(q)}, OK
    raise InputError("convert needs a 'lattice' or a 'filtration'")


def cmd_wa(args, doc):
    m = S.load_module(doc)
    r = is_weakly_admissible(m, S.load_hodge_data(doc))
    return S.dump_wa(r), OK if r.wa else FALSE


def cmd_hn(args, doc):
    m = S.load_module(doc)
    return S.dump_hn(harder_narasimhan(m, S.load_hodge_data(doc))), OK


def cmd_newton(args, doc):
    if "newton" in doc:
        ctx = S.load_context(doc, doc["newton"])
        cs = tuple(parse_rational(c) for c in doc["newton"]["coefficients"])
        pt = NewtonPoint(cs, tuple(padic_valuation(c, ctx) for c in cs))
    else:
        m = S.load_module(doc)
        ctx = m.ctx
        pt = newton_point(m)
    if args.mu or "cocharacter" in doc:
        mu = _mu(args, doc)
        member = newton_membership(pt, mu, ctx)
        report = S.dump_newton(pt, member)
        report["bounds"] = [format_rational(mu.f * x) for x in l_vector(mu)]
        return report, OK if member else FALSE
    return S.dump_newton(pt), OK


def cmd_dims(args, doc):
    mu, galois = S.load_cocharacter(doc)
    report = dimension_formulas(mu)
    if galois:
        report["reflex_degree"] = reflex_degree(mu, galois).degree
    return report, OK


def cmd_jordan(args, doc):
    return S.dump_jordan(jordan_component(S.load_module(doc))), OK


def cmd_zero_section(args, doc):
    m = S.load_module(doc)
    h = _as_lattice(S.load_hodge_data(doc))
    prec = args.precision if args.precision is not None else doc.get(
        "precision")
    res = is_zero_section(m, h, args.convention, prec)
    return {"convention": args.convention, "zero_section": res}, \
        OK if res else FALSE


def cmd_selftest(args, doc):
    numbers = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_all(numbers)
    if not args.json:
        for r in results:
            print(r.line())
    report = {str(r.number): {"checks": r.checked, "failures": r.failures,
                              "passed": r.passed, "title": r.title}
              for r in results}
    return report, OK if all(r.passed for r in results) else FALSE


COMMANDS = {
    "validate": (cmd_validate, "validate module, lattice and filtration"),
    "polygon": (cmd_polygon, "Hodge polygon of the lattice or filtration"),
    "bound": (cmd_bound, "boundedness by a cocharacter"),
    "convert": (cmd_convert, "filtration <-> lattice"),
    "wa": (cmd_wa, "weak admissibility with a destabilizing witness"),
    "hn": (cmd_hn, "Harder-Narasimhan filtration"),
    "newton": (cmd_newton, "adjoint-quotient point and stratum membership"),
    "dims": (cmd_dims, "moduli dimension numbers of a cocharacter"),
    "jordan": (cmd_jordan, "partition labelling the component"),
    "zero-section": (cmd_zero_section, "zero-section detector"),
    "selftest": (cmd_selftest, "run the acceptance suites"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hodgepink",
        description="Exact computations with (phi,N)-modules and "
                    "Hodge-Pink lattices.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", "-i",
                        help="instance JSON file (or a fixture name)")
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
        sp.add_argument("--precision", type=int, default=None)
        sp.add_argument("--convention", choices=["eta", "id"], default="eta")
        if name in ("bound", "newton"):
            sp.add_argument("--mu", help='weights, "2,0" or "psi0=2,0;psi1=1,1"')
        if name == "bound":
            sp.add_argument("--method", choices=["primal", "dual", "both"],
                            default="both")
        if name == "selftest":
            sp.add_argument("--only", help="comma-separated criterion numbers")
    return parser


def _print_human(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                print(f"{pad}{k}:")
                _print_human(v, indent + 1)
            else:
                print(f"{pad}{k}: {_fmt(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                print(f"{pad}-")
                _print_human(v, indent + 1)
            else:
                print(f"{pad}- {_fmt(v)}")
    else:
        print(f"{pad}{_fmt(obj)}")


def _flat(v):
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) or _flat(x) for x in v)


def _fmt(v):
    v = S.canonical(v)
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def _emit_error(args, exc, code):
    if isinstance(exc, HodgePinkError):
        payload = exc.as_dict()
    else:
        payload = {"error": type(exc).__name__,
                   "invariant": "input parses against the schema",
                   "message": str(exc)}
    if getattr(args, "json", False):
        sys.stdout.write(S.dumps(payload))
    else:
        print(f"error [{payload['error']}] {payload['message']} "
              f"(invariant: {payload['invariant']})", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.command][0]
    try:
        if args.command == "selftest" and not args.input:
            doc = {}
        else:
            if not args.input:
                raise InputError(f"{args.command} needs --input")
            doc = S.load_file(resolve_input(args.input))
        report, code = fn(args, doc)
    except InsufficientPrecision as exc:
        return _emit_error(args, exc, PRECISION)
    except UnsupportedSpectrum as exc:
        return _emit_error(args, exc, UNSUPPORTED)
    except HodgePinkError as exc:
        return _emit_error(args, exc, INPUT_ERROR)
    except (ValueError, TypeError, KeyError) as exc:
        return _emit_error(args, exc, INPUT_ERROR)
    if args.json:
        sys.stdout.write(S.dumps(report))
        sys.stdout.flush()
    elif args.command != "selftest":
        _print_human(report)
    return code


if __name__ == "__main__":
    sys.exit(main())

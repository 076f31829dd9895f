"""JSON instance files and report records.

Rationals are written as "n" or "n/d" in lowest terms and keys are sorted,
so two runs over the same instance produce identical bytes.

Instance layout (all sections optional, each command reads what it needs):

    {"p": 2,
     "module": {"f": 1, "frobenius_power": [[..]], "monodromy": [[..]],
                "frobenius_components": [[[..]], ..]},
     "lattice": {"window": {"m": 2, "n": 0}, "e": 1, "f": 1,
                 "components": [{"label": "psi0",
                                 "matrix": [[series, ..], ..]}]},
     "filtration": {"e": 1, "f": 1,
                    "components": [{"label": "psi0",
                                    "basis": [[column], ..],
                                    "jumps": [..]}]},
     "cocharacter": {"d": 2, "e": 1, "f": 1, "weights": {"psi0": [2, 0]},
                     "galois": [["psi0"]]},
     "unit_disc": {"p": 2, "eisenstein": ["-2"], "precision": 40},
     "newton": {"coefficients": ["-4", "4"]},
     "precision": 40}

A series is {"terms": {"-2": "1"}, "precision": null}; a bare rational is
accepted as a constant series.
"""

import json
import math
from fractions import Fraction

from .arithmetic import PrimeContext, format_rational, parse_rational
from .cocharacters import Cocharacter
from .dvr import LaurentMatrix
from .errors import InputError
from .hodge_pink import HodgePinkLattice, KFiltration
from .phin import PhiNModule
from .series import TruncatedLaurent
from .unit_disc import EisensteinPoly, USeriesContext


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"missing field {key!r} in {where}")
    return obj[key]


def _rat_matrix(rows, where):
    if not isinstance(rows, list) or not all(isinstance(r, list)
                                             for r in rows):
        raise InputError(f"{where} must be a list of rows")
    return [[parse_rational(x) for x in r] for r in rows]


# -- scalars and series ------------------------------------------------------

def dump_rational(q):
    return format_rational(q)


def dump_value(v):
    """Rationals to strings, infinity to the string "inf"."""
    if v == math.inf:
        return "inf"
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


def load_series(obj, var="t"):
    if isinstance(obj, dict):
        terms = obj.get("terms", {})
        if not isinstance(terms, dict):
            raise InputError("series terms must be an object")
        prec = obj.get("precision")
        coeffs = {}
        for k, v in terms.items():
            try:
                coeffs[int(k)] = parse_rational(v)
            except ValueError as exc:
                raise InputError(f"bad exponent {k!r}") from exc
        return TruncatedLaurent(coeffs, None if prec is None else int(prec),
                                obj.get("var", var))
    return TruncatedLaurent({0: parse_rational(obj)}, None, var)


def dump_series(s: TruncatedLaurent):
    return {"precision": s.prec,
            "terms": {str(k): format_rational(c)
                      for k, c in sorted(s.coeffs.items())}}


# -- modules -------------------------------------------------------------------

def load_context(doc, section=None):
    p = None
    if isinstance(section, dict):
        p = section.get("p")
    if p is None:
        p = doc.get("p") if isinstance(doc, dict) else None
    if p is None:
        raise InputError("missing prime 'p'")
    return PrimeContext(int(p))


def load_module(doc):
    sec = _need(doc, "module", "instance")
    ctx = load_context(doc, sec)
    N0 = _rat_matrix(_need(sec, "monodromy", "module"), "monodromy")
    if "frobenius_components" in sec:
        comps = [_rat_matrix(c, "frobenius_components")
                 for c in sec["frobenius_components"]]
        m = PhiNModule.from_components(comps, N0, ctx)
        if "f" in sec and int(sec["f"]) != m.f:
            raise InputError("f disagrees with the number of components")
        return m
    F = _rat_matrix(_need(sec, "frobenius_power", "module"),
                    "frobenius_power")
    return PhiNModule(int(sec.get("f", 1)), F, N0, ctx)


def dump_module(m: PhiNModule):
    return {"f": m.f, "p": m.p,
            "frobenius_power": [[format_rational(x) for x in r] for r in m.F],
            "monodromy": [[format_rational(x) for x in r] for r in m.N0]}


# -- lattices and filtrations ----------------------------------------------------

def load_lattice(doc, key="lattice"):
    sec = _need(doc, key, "instance")
    comps = []
    for c in _need(sec, "components", key):
        rows = _need(c, "matrix", "lattice component")
        comps.append((str(_need(c, "label", "lattice component")),
                      LaurentMatrix([[load_series(x) for x in r]
                                     for r in rows])))
    window = None
    if "window" in sec:
        w = sec["window"]
        window = (int(_need(w, "m", "window")), int(_need(w, "n", "window")))
    return HodgePinkLattice(comps, window, sec.get("e"), int(sec.get("f", 1)))


def dump_lattice(q: HodgePinkLattice):
    return {"e": q.e, "f": q.f,
            "window": {"m": q.window[0], "n": q.window[1]},
            "components": [
                {"label": label,
                 "matrix": [[dump_series(b.matrix[i, j])
                             for j in range(q.d)] for i in range(q.d)]}
                for label, b in q.components]}


def load_filtration(doc, key="filtration"):
    sec = _need(doc, key, "instance")
    comps = []
    for c in _need(sec, "components", key):
        basis = [[parse_rational(x) for x in col]
                 for col in _need(c, "basis", "filtration component")]
        jumps = [int(x) for x in _need(c, "jumps", "filtration component")]
        comps.append((str(_need(c, "label", "filtration component")),
                      basis, jumps))
    return KFiltration(comps, sec.get("e"), int(sec.get("f", 1)))


def dump_filtration(F: KFiltration):
    return {"e": F.e, "f": F.f,
            "components": [
                {"label": c.label,
                 "basis": [[format_rational(x) for x in v] for v in c.basis],
                 "jumps": list(c.jumps)}
                for c in F.components]}


def load_hodge_data(doc):
    """The lattice if present, else the filtration."""
    if "lattice" in doc:
        return load_lattice(doc)
    if "filtration" in doc:
        return load_filtration(doc)
    raise InputError("instance needs a 'lattice' or a 'filtration'")


# -- cocharacters ------------------------------------------------------------------

def load_cocharacter(obj):
    if "cocharacter" in obj and isinstance(obj["cocharacter"], dict):
        obj = obj["cocharacter"]
    weights = _need(obj, "weights", "cocharacter")
    if not isinstance(weights, dict):
        raise InputError("weights must map labels to integer vectors")
    ws = tuple((str(k), tuple(int(x) for x in v)) for k, v in weights.items())
    d = int(obj.get("d", len(ws[0][1]) if ws else 0))
    f = int(obj.get("f", 1))
    e = int(obj.get("e", len(ws) // f))
    galois = [tuple(str(x) for x in g) for g in obj.get("galois", [])]
    return Cocharacter(d, ws, e, f), galois


def dump_cocharacter(mu: Cocharacter, galois=()):
    out = {"d": mu.d, "e": mu.e, "f": mu.f,
           "weights": {k: list(v) for k, v in mu.weights}}
    if galois:
        out["galois"] = [list(g) for g in galois]
    return out


def parse_mu_option(text, labels, e=None, f=1):
    """--mu "2,0" for every label, or "psi0=2,0;psi1=1,1"."""
    text = text.strip()
    try:
        if "=" in text:
            ws = {}
            for part in text.split(";"):
                k, v = part.split("=")
                ws[k.strip()] = tuple(int(x) for x in v.split(","))
        else:
            vec = tuple(int(x) for x in text.split(","))
            ws = {k: vec for k in labels}
    except ValueError as exc:
        raise InputError(f"cannot parse --mu {text!r}") from exc
    d = len(next(iter(ws.values())))
    e = len(ws) // f if e is None else e
    return Cocharacter(d, tuple(ws.items()), e, f)


# -- unit disc ---------------------------------------------------------------------

def load_unit_disc(doc, precision=None):
    sec = _need(doc, "unit_disc", "instance")
    ctx = load_context(doc, sec)
    E = EisensteinPoly(tuple(parse_rational(a)
                             for a in _need(sec, "eisenstein", "unit_disc")),
                       ctx)
    P = precision if precision is not None else int(sec.get("precision", 40))
    return USeriesContext(E, P)


# -- reports -----------------------------------------------------------------------

def dump_slopes(s):
    if s is None:
        return None
    return {"rank": s.rank, "sigma": format_rational(s.sigma),
            "t_H": format_rational(s.t_H), "t_N": format_rational(s.t_N)}


def dump_basis(vectors):
    if vectors is None:
        return None
    return [[format_rational(x) for x in v] for v in vectors]


def dump_wa(r):
    out = {"spectrum_class": r.spectrum_class, "slopes": dump_slopes(r.slopes),
           "wa": r.wa}
    if not r.wa:
        out["witness"] = dump_basis(r.witness)
        out["witness_slopes"] = dump_slopes(r.witness_slopes)
        out["reason"] = r.reason
    return out


def dump_hn(hn):
    return {"sigmas": [format_rational(s) for s in hn.sigmas],
            "slopes": [dump_slopes(s) for s in hn.slopes],
            "steps": [dump_basis(s) for s in hn.steps],
            "trivial": hn.is_trivial}


def dump_newton(pt, member=None):
    out = {"coefficients": [format_rational(c) for c in pt.coefficients],
           "valuations": [dump_value(v) for v in pt.valuations]}
    if member is not None:
        out["member"] = member
    return out


def dump_jordan(j):
    return {"eigenvalue_order": [format_rational(x)
                                 for x in j.eigenvalue_order],
            "monodromy_type": list(j.monodromy_type),
            "partition": list(j.partition),
            "relations": list(j.relations)}


def canonical(obj):
    """Recursively convert to JSON-ready values."""
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    return dump_value(obj)


def dumps(obj):
    return json.dumps(canonical(obj), sort_keys=True, indent=2) + "\n"


def load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})",
                         line=exc.lineno) from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    if not isinstance(doc, dict):
        raise InputError("instance file must hold a JSON object")
    return doc

"""Hodge-Pink lattices, K-filtrations, Hodge polygons and boundedness.

A lattice is given per embedding label as a basis matrix over Q((t))
relative to the tautological lattice p = Q[[t]]^d.  A filtration is given
per label by an adapted rational basis and a nonincreasing jump vector.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import qlinalg as ql
from .cocharacters import Cocharacter
from .dvr import LatticeBasis, LaurentMatrix, mono, smith_exponents
from .errors import InputError, ShapeMismatch


class HodgePinkLattice:
    def __init__(self, components, window=None, e=None, f=1):
        comps = components.items() if isinstance(components, dict) \
            else components
        raw = []
        for label, mat in comps:
            if isinstance(mat, LatticeBasis):
                mat = mat.matrix
            elif not isinstance(mat, LaurentMatrix):
                mat = LaurentMatrix(mat)
            raw.append((str(label), mat))
        if not raw:
            raise InputError("a lattice needs at least one component")
        d = raw[0][1].rows
        if any(mat.rows != d or mat.cols != d for _, mat in raw):
            raise ShapeMismatch("components must all be d x d")
        if window is None:
            probes = [LatticeBasis(mat) for _, mat in raw]
            window = (max(q.window[0] for q in probes),
                      max(q.window[1] for q in probes))
        window = (int(window[0]), int(window[1]))
        self.components = tuple((label, LatticeBasis(mat, window))
                                for label, mat in raw)
        self.window = window
        self.d = d
        self.f = f
        self.e = len(self.components) // f if e is None else e

    @property
    def labels(self):
        return tuple(k for k, _ in self.components)

    @property
    def ef(self):
        return len(self.components)

    def component(self, label):
        return dict(self.components)[label]

    def same_lattice(self, other):
        if self.labels != other.labels:
            return False
        return all(a.same_lattice(b) for (_, a), (_, b) in
                   zip(self.components, other.components))

    def map_components(self, fn, window=None):
        return HodgePinkLattice([(k, fn(q)) for k, q in self.components],
                                window, self.e, self.f)


def validate_lattice(components, window):
    """Certify full rank and both window inclusions per component.

    Raises RankDeficient, WindowViolated or InsufficientPrecision; on
    success returns the minimal window of each component.
    """
    q = HodgePinkLattice(components, window)
    return {"valid": True, "window": list(q.window),
            "minimal_windows": {label: list(b.minimal_window)
                                for label, b in q.components}}


@dataclass(frozen=True)
class FiltrationComponent:
    label: str
    basis: tuple        # columns, as tuples of Fractions
    jumps: tuple


class KFiltration:
    def __init__(self, components, e=None, f=1):
        comps = []
        for item in components:
            if isinstance(item, FiltrationComponent):
                label, cols, jumps = item.label, item.basis, item.jumps
            else:
                label, cols, jumps = item
            cols = tuple(tuple(Fraction(x) for x in c) for c in cols)
            jumps = tuple(int(x) for x in jumps)
            d = len(cols)
            if any(len(c) != d for c in cols) or len(jumps) != d:
                raise ShapeMismatch("filtration basis must be d x d with d "
                                    "jumps")
            if ql.rank([list(c) for c in cols]) != d:
                raise InputError("filtration basis is not a basis",
                                 label=label)
            if any(jumps[i] < jumps[i + 1] for i in range(d - 1)):
                raise InputError("jumps must be nonincreasing", label=label)
            comps.append(FiltrationComponent(str(label), cols, jumps))
        if not comps:
            raise InputError("a filtration needs at least one component")
        self.components = tuple(comps)
        self.d = len(comps[0].jumps)
        if any(len(c.jumps) != self.d for c in comps):
            raise ShapeMismatch("components have different ranks")
        self.f = f
        self.e = len(comps) // f if e is None else e

    @classmethod
    def from_matrices(cls, items, e=None, f=1):
        """items: (label, d x d matrix whose columns are adapted, jumps)."""
        return cls([(lab, ql.transpose(ql.to_fraction_matrix(mat)), jumps)
                    for lab, mat, jumps in items], e, f)

    @property
    def labels(self):
        return tuple(c.label for c in self.components)

    @property
    def ef(self):
        return len(self.components)

    def component(self, label):
        for c in self.components:
            if c.label == label:
                return c
        raise KeyError(label)

    def step(self, label, i):
        """Spanning vectors of F^i."""
        c = self.component(label)
        return [list(v) for v, k in zip(c.basis, c.jumps) if k >= i]

    def flags(self, label):
        c = self.component(label)
        return {k: ql.span_key(self.step(label, k)) for k in set(c.jumps)}

    def jump_type(self, label):
        return tuple(sorted(self.component(label).jumps, reverse=True))

    def __eq__(self, other):
        if not isinstance(other, KFiltration) or self.labels != other.labels:
            return False
        return all(self.jump_type(k) == other.jump_type(k)
                   and self.flags(k) == other.flags(k) for k in self.labels)

    def hodge_number(self, label, sub=None):
        """sum_i i * dim gr^i of the filtration, optionally induced on sub."""
        c = self.component(label)
        if sub is None:
            return sum(c.jumps)
        sub = [list(v) for v in sub]
        total = 0
        values = sorted(set(c.jumps), reverse=True)
        prev = 0
        for x in values:
            dim = len(ql.intersect_spans(self.step(label, x), sub))
            total += x * (dim - prev)
            prev = dim
        return total


def hodge_polygon(q: HodgePinkLattice) -> Cocharacter:
    """Per label, the negated elementary divisors sorted nonincreasingly."""
    ws = []
    for label, b in q.components:
        exps = smith_exponents(b.matrix).exponents
        ws.append((label, tuple(sorted((-a for a in exps), reverse=True))))
    return Cocharacter(q.d, tuple(ws), q.e, q.f)


def _partial_sums(v):
    out, s = [], 0
    for x in v:
        s += x
        out.append(s)
    return out


def _bounded_primal(b, mu):
    d = b.d
    lead = _partial_sums(mu)
    M = b.matrix
    for j in range(1, d):
        subsets = list(combinations(range(d), j))
        for r in subsets:
            for c in subsets:
                if M.minor(r, c).order() < -lead[j - 1]:
                    return False
    return b.det_order() == -lead[d - 1]


def _bounded_dual(b, mu):
    # Cramer: B^-1 = adj(B) / det B, so the j x j minors of B^-1 are the
    # j x j minors of adj(B) divided by det(B)^j
    d = b.d
    trail = _partial_sums(list(reversed(mu)))
    adj = b.matrix.adjugate()
    dord = b.det_order()
    for j in range(1, d):
        subsets = list(combinations(range(d), j))
        for r in subsets:
            for c in subsets:
                if adj.minor(r, c).order() - j * dord < trail[j - 1]:
                    return False
    return -dord == trail[d - 1]


def bounded_by(q: HodgePinkLattice, mu: Cocharacter, method="primal"):
    """Whether every exterior power of q sits in the window prescribed by mu.

    primal: Lambda^j q inside t^-(mu_1+...+mu_j) Lambda^j p for all j,
    dual: Lambda^j p inside t^(mu_(d-j+1)+...+mu_d) Lambda^j q for all j,
    both with equality at j = d.
    """
    if mu.d != q.d or set(mu.labels) != set(q.labels):
        raise ShapeMismatch("cocharacter does not match the lattice")
    test = {"primal": _bounded_primal, "dual": _bounded_dual}.get(method)
    if test is None:
        raise InputError(f"unknown method {method!r}")
    return all(test(b, mu.mu(label)) for label, b in q.components)


def filtration_to_lattice(F: KFiltration) -> HodgePinkLattice:
    """sum_i t^-i F^i [[t]]: columns t^-k w for basis vectors w of jump k."""
    comps = []
    lo = min(min(c.jumps) for c in F.components)
    hi = max(max(c.jumps) for c in F.components)
    for c in F.components:
        cols = [[mono(x, -k) if x else mono(0, 0) for x in w]
                for w, k in zip(c.basis, c.jumps)]
        comps.append((c.label, LaurentMatrix.from_columns(cols)))
    return HodgePinkLattice(comps, (max(hi, 0), max(-lo, 0)), F.e, F.f)


def lattice_to_filtration(q: HodgePinkLattice) -> KFiltration:
    """F^i = image of p & t^i q modulo t, per label.

    These are the leading coefficient spaces of q: F^i collects the t^-i
    coefficients of elements of q & t^-i p.
    """
    comps = []
    for label, b in q.components:
        orders, leads, _ = b.leading_data()
        comps.append((label, tuple(tuple(v) for v in leads),
                      tuple(-o for o in orders)))
    return KFiltration(comps, q.e, q.f)

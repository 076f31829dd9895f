"""Slopes, weak admissibility, Harder-Narasimhan filtrations, Newton strata.

Numbers are additive: t_N = val(det F)/f and t_H is the normalized total
t-defect of the lattice.  A subobject destabilizes when t_H > t_N, so
weak admissibility means t_H(D') <= t_N(D') for every stable D' with
equality for D itself.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import qlinalg as ql
from .arithmetic import padic_valuation
from .cocharacters import Cocharacter, l_vector
from .dvr import lattice_intersection
from .errors import (InputError, NotStable, ShapeMismatch,
                     UnsupportedSpectrum)
from .hodge_pink import HodgePinkLattice, KFiltration
from .phin import (PhiNModule, charpoly_coefficients, rational_roots,
                   validate_module)


@dataclass(frozen=True)
class SlopeData:
    t_N: Fraction
    t_H: Fraction
    rank: int

    @property
    def sigma(self):
        return Fraction(self.t_H - self.t_N, self.rank)


@dataclass(frozen=True)
class StableSubspace:
    key: tuple
    basis: tuple        # column vectors

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [list(v) for v in self.basis]


def _subspace_matrix(vectors):
    return ql.transpose([list(v) for v in vectors])


def _restrict(A, vectors):
    """Matrix of A on span(vectors) in those coordinates."""
    S = _subspace_matrix(vectors)
    return ql.matmul(ql.left_inverse(S), ql.matmul(A, S))


def _is_invariant(A, vectors):
    return all(ql.in_span(vectors, ql.matvec(A, v)) for v in vectors)


def _check_shapes(m, h):
    if h.d != m.d:
        raise ShapeMismatch("module and Hodge datum differ in rank")
    if h.ef % m.f:
        raise ShapeMismatch("number of embeddings must be a multiple of f")


def newton_number(m: PhiNModule, vectors=None):
    F = m.Fm()
    if vectors is not None:
        F = _restrict(F, vectors)
    return Fraction(padic_valuation(ql.det(F), m.ctx)) / m.f


def hodge_total(h, vectors=None):
    """sum over labels of h_psi(D'), unnormalized."""
    if isinstance(h, KFiltration):
        return sum(h.hodge_number(lab, vectors) for lab in h.labels)
    if vectors is None:
        return sum(b.hodge_number() for _, b in h.components)
    S = _subspace_matrix(vectors)
    return sum(lattice_intersection(b, S).hodge_number()
               for _, b in h.components)


def t_invariants(m: PhiNModule, h, vectors=None) -> SlopeData:
    _check_shapes(m, h)
    rank = m.d if vectors is None else len(vectors)
    return SlopeData(newton_number(m, vectors),
                     Fraction(hodge_total(h, vectors), h.ef), rank)


# -- supported spectra ----------------------------------------------------

@dataclass(frozen=True)
class SpectrumClass:
    name: str
    eigenvalues: tuple = ()
    eigenvectors: tuple = ()
    scalar: Fraction = None


def classify_spectrum(m: PhiNModule) -> SpectrumClass:
    F, N = m.Fm(), m.Nm()
    d = m.d
    if d == 1:
        return SpectrumClass("rank_one", (F[0][0],), ((Fraction(1),),))
    roots = rational_roots(charpoly_coefficients(F))
    if sum(roots.values()) != d:
        raise UnsupportedSpectrum(
            "Frobenius has irrational eigenvalues; no supported class",
            spectrum_class="none")
    if len(roots) == d:
        eig = sorted(roots)
        vecs = []
        for lam in eig:
            shifted = [[F[i][j] - (lam if i == j else 0) for j in range(d)]
                       for i in range(d)]
            vecs.append(tuple(ql.nullspace(shifted)[0]))
        return SpectrumClass("distinct", tuple(eig), tuple(vecs))
    if len(roots) == 1:
        c = next(iter(roots))
        shifted = [[F[i][j] - (c if i == j else 0) for j in range(d)]
                   for i in range(d)]
        if ql.rank(shifted) == d - 1 and ql.is_zero_matrix(N):
            return SpectrumClass("cyclic_unipotent", scalar=c)
        if ql.is_zero_matrix(shifted) and d == 2 and ql.is_zero_matrix(N):
            return SpectrumClass("scalar_plane", scalar=c)
    raise UnsupportedSpectrum(
        "Frobenius spectrum is neither distinct rational, a single "
        "Jordan block, nor scalar of rank 2", spectrum_class="none")


def stable_subspaces(m: PhiNModule):
    """All proper nonzero F- and N0-stable subspaces of D0."""
    cls = classify_spectrum(m)
    d = m.d
    if cls.name == "rank_one":
        return []
    if cls.name == "scalar_plane":
        raise UnsupportedSpectrum(
            "scalar Frobenius: every line is stable, the list is infinite",
            spectrum_class="scalar_plane")
    N = m.Nm()
    out = []
    if cls.name == "distinct":
        for k in range(1, d):
            for idx in combinations(range(d), k):
                vecs = [list(cls.eigenvectors[i]) for i in idx]
                if _is_invariant(N, vecs):
                    out.append(StableSubspace(("eig", idx),
                                              tuple(map(tuple, vecs))))
        return out
    F = m.Fm()
    c = cls.scalar
    shifted = [[F[i][j] - (c if i == j else 0) for j in range(d)]
               for i in range(d)]
    for k in range(1, d):
        kern = ql.nullspace(ql.mat_pow(shifted, k))
        out.append(StableSubspace(("ker", k), tuple(map(tuple, kern))))
    return out


def induced_subobject(m: PhiNModule, q: HodgePinkLattice, vectors):
    """Restriction of F, N0 and of every lattice component to span(vectors)."""
    vectors = [[Fraction(x) for x in v] for v in vectors]
    if not (_is_invariant(m.Fm(), vectors) and _is_invariant(m.Nm(), vectors)):
        raise NotStable("subspace is not stable under F and N0")
    sub = PhiNModule(m.f, _restrict(m.Fm(), vectors),
                     _restrict(m.Nm(), vectors), m.ctx)
    S = _subspace_matrix(vectors)
    comps = [(lab, lattice_intersection(b, S)) for lab, b in q.components]
    return sub, HodgePinkLattice(comps, q.window, q.e, q.f)


# -- the scalar rank two case ----------------------------------------------

def _line_profile_lattice(b):
    """[(h, C_h)] for the constant vectors w with t^-h w in the lattice."""
    m, n = b.window
    d = b.d
    rows, _ = b.window_space()
    L = m + n
    ann = ql.nullspace(rows, d * L) if rows else [
        [Fraction(int(i == j)) for i in range(d * L)] for j in range(d * L)]
    prof = []
    for h in range(m, -n - 1, -1):
        e = -h
        if e >= n:
            prof.append((h, ql.identity(d)))
            continue
        cons = [[y[(e + m) * d + r] for r in range(d)] for y in ann]
        cons = [c for c in cons if any(c)]
        prof.append((h, ql.nullspace(cons, d) if cons else ql.identity(d)))
    return prof


def _line_profile_filtration(F, label):
    c = F.component(label)
    prof = []
    for h in range(max(c.jumps), min(c.jumps) - 1, -1):
        prof.append((h, F.step(label, h)))
    return prof


def _line_hodge(profile, w):
    best = None
    for h, C in profile:
        if ql.in_span(C, w):
            best = h if best is None else max(best, h)
    return best


def _plane_candidates(h):
    """Lines carrying the maximal t_H, plus one generic line."""
    profiles = []
    for lab in h.labels:
        if isinstance(h, KFiltration):
            profiles.append(_line_profile_filtration(h, lab))
        else:
            profiles.append(_line_profile_lattice(h.component(lab)))
    special = {}
    for prof in profiles:
        for _, C in prof:
            if len(ql.span_basis(C)) == 1:
                v = ql.span_basis(C)[0]
                special[ql.span_key([v])] = v
    lines = list(special.values())
    k = 0
    while True:
        v = [Fraction(1), Fraction(k)]
        if ql.span_key([v]) not in special:
            lines.append(v)
            break
        k += 1
    scored = []
    for v in lines:
        total = sum(_line_hodge(prof, v) for prof in profiles)
        scored.append((Fraction(total, h.ef), v))
    return scored


# -- weak admissibility -----------------------------------------------------

@dataclass(frozen=True)
class WAReport:
    wa: bool
    slopes: SlopeData
    witness: tuple = None
    witness_slopes: SlopeData = None
    reason: str = ""
    spectrum_class: str = ""


def is_weakly_admissible(m: PhiNModule, h) -> WAReport:
    validate_module(m, raise_on_failure=True)
    _check_shapes(m, h)
    whole = t_invariants(m, h)
    cls = classify_spectrum(m)
    full = tuple(tuple(Fraction(int(i == j)) for i in range(m.d))
                 for j in range(m.d))
    if whole.t_H != whole.t_N:
        return WAReport(False, whole, full, whole,
                        "t_H(D) differs from t_N(D)", cls.name)
    worst = None
    if cls.name == "scalar_plane":
        t_n = Fraction(padic_valuation(cls.scalar, m.ctx)) / m.f
        for t_h, v in _plane_candidates(h):
            sd = SlopeData(t_n, t_h, 1)
            if worst is None or sd.sigma > worst[0].sigma:
                worst = (sd, (tuple(v),))
    else:
        for s in stable_subspaces(m):
            sd = t_invariants(m, h, s.vectors())
            if worst is None or (sd.t_H - sd.t_N, s.dim) > (
                    worst[0].t_H - worst[0].t_N, len(worst[1])):
                worst = (sd, s.basis)
    if worst is not None and worst[0].t_H > worst[0].t_N:
        return WAReport(False, whole, worst[1], worst[0],
                        "a stable subobject has t_H > t_N", cls.name)
    return WAReport(True, whole, None, None, "", cls.name)


# -- Harder-Narasimhan --------------------------------------------------------

@dataclass(frozen=True)
class HNFiltration:
    steps: tuple            # bases of 0 < S_1 < ... < S_r = D
    slopes: tuple           # SlopeData of the subquotients S_k / S_(k-1)

    @property
    def sigmas(self):
        return tuple(s.sigma for s in self.slopes)

    @property
    def is_trivial(self):
        return len(self.steps) == 1


def harder_narasimhan(m: PhiNModule, h, candidates=None) -> HNFiltration:
    """Successive maximal destabilizing subobjects.

    ``candidates`` may override the enumeration (e.g. a permuted list of
    stable subspaces); the result does not depend on its order.
    """
    validate_module(m, raise_on_failure=True)
    _check_shapes(m, h)
    d = m.d
    full = StableSubspace(("all",), tuple(
        tuple(Fraction(int(i == j)) for i in range(d)) for j in range(d)))
    cls = classify_spectrum(m)
    if cls.name == "scalar_plane":
        return _hn_plane(m, h, cls, full)
    subs = list(stable_subspaces(m) if candidates is None else candidates)
    data = {}
    for s in subs + [full]:
        data[s.key] = (newton_number(m, s.vectors()),
                       Fraction(hodge_total(h, s.vectors()), h.ef))
    base_vecs, base_dim, base_tn, base_th = [], 0, Fraction(0), Fraction(0)
    steps, slopes = [], []
    while base_dim < d:
        best = None
        for s in subs + [full]:
            if s.dim <= base_dim or not ql.span_contains(s.vectors(),
                                                         base_vecs):
                continue
            tn, th = data[s.key]
            sd = SlopeData(tn - base_tn, th - base_th, s.dim - base_dim)
            rank_key = (sd.sigma, s.dim)
            if best is None or rank_key > best[0] or (
                    rank_key == best[0] and s.key < best[1].key):
                best = (rank_key, s, sd)
        _, s, sd = best
        steps.append(s.basis)
        slopes.append(sd)
        base_vecs, base_dim = s.vectors(), s.dim
        base_tn, base_th = data[s.key]
    return HNFiltration(tuple(steps), tuple(slopes))


def _hn_plane(m, h, cls, full):
    whole = t_invariants(m, h)
    t_n = Fraction(padic_valuation(cls.scalar, m.ctx)) / m.f
    best = max(_plane_candidates(h), key=lambda x: x[0])
    line = SlopeData(t_n, best[0], 1)
    if line.sigma > whole.sigma:
        rest = SlopeData(whole.t_N - t_n, whole.t_H - best[0], 1)
        return HNFiltration(((tuple(best[1]),), full.basis), (line, rest))
    return HNFiltration((full.basis,), (whole,))


# -- Newton strata -------------------------------------------------------------

@dataclass(frozen=True)
class NewtonPoint:
    coefficients: tuple
    valuations: tuple = field(default=())


def newton_point(m: PhiNModule) -> NewtonPoint:
    c = charpoly_coefficients(m.Fm())
    if c[-1] == 0:
        raise InputError("last coefficient must be nonzero")
    return NewtonPoint(c, tuple(padic_valuation(x, m.ctx) for x in c))


def newton_membership(c, mu: Cocharacter, ctx) -> bool:
    """val(c_i) >= f * l_i(mu) for all i, with equality at i = d."""
    coeffs = c.coefficients if isinstance(c, NewtonPoint) else tuple(c)
    if len(coeffs) != mu.d:
        raise ShapeMismatch("point and cocharacter differ in rank")
    ls = l_vector(mu)
    for i, (ci, li) in enumerate(zip(coeffs, ls), start=1):
        v = padic_valuation(ci, ctx)
        bound = mu.f * li
        if v < bound:
            return False
        if i == mu.d and v != bound:
            return False
    return True


def module_with_charpoly(c, ctx, f=1):
    """A rank-2 module with N0 = 0 and the given characteristic polynomial.

    Diagonal when the roots are distinct, a Jordan block for a double root.
    """
    c1, c2 = (Fraction(x) for x in c)
    roots = rational_roots((c1, c2))
    if sum(roots.values()) != 2:
        raise UnsupportedSpectrum("characteristic polynomial has no "
                                  "rational roots", spectrum_class="none")
    zero = [[Fraction(0)] * 2 for _ in range(2)]
    if len(roots) == 2:
        a, b = sorted(roots)
        return PhiNModule(f, [[a, 0], [0, b]], zero, ctx)
    (a,) = roots
    return PhiNModule(f, [[a, 1], [0, a]], zero, ctx)


def newton_preimage_search(c, mu: Cocharacter, ctx, tries=8):
    """Search a weakly admissible rank-2 filtered module over a given point.

    Returns (module, filtration) or None.
    """
    if mu.d != 2:
        raise InputError("constructive search is implemented for d = 2")
    m = module_with_charpoly(c, ctx, mu.f)
    directions = [[Fraction(1), Fraction(k)] for k in range(tries)]
    directions.append([Fraction(0), Fraction(1)])
    labels = mu.labels

    def flags(i):
        # each label independently cycles through the candidate lines
        out = []
        for j, lab in enumerate(labels):
            top = directions[(i + j) % len(directions)]
            comp = ql.extend_basis([top], 2)
            out.append((lab, tuple(map(tuple, comp)), mu.mu(lab)))
        return out

    for i in range(len(directions)):
        F = KFiltration(flags(i), mu.e, mu.f)
        if is_weakly_admissible(m, F).wa:
            return m, F
    return None


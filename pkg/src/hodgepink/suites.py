"""Acceptance suites, shared by the test-suite and ``hodgepink selftest``.

Each suite returns a SuiteResult; ``failures`` lists human-readable
counterexamples (empty on success).
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import sympy
from sympy.functions.combinatorial.numbers import partition as n_partitions
from sympy.utilities.iterables import partitions as sympy_partitions

from . import qlinalg as ql
from .admissibility import (harder_narasimhan, induced_subobject,
                            is_weakly_admissible, newton_membership,
                            newton_point, newton_preimage_search,
                            stable_subspaces, t_invariants)
from .arithmetic import PrimeContext, padic_valuation
from .cocharacters import (Cocharacter, bruhat_leq, combinatorial_gap,
                           dimension_formulas, l_vector)
from .dvr import LaurentMatrix, mono
from .hodge_pink import (HodgePinkLattice, KFiltration, bounded_by,
                         filtration_to_lattice, hodge_polygon,
                         lattice_to_filtration)
from .phin import (PhiNModule, admissible_blocks, degeneration_identity_check,
                   generic_representative, jordan_component, random_conjugate,
                   specialize)
from . import sampling as smp
from .series import TruncatedLaurent
from .unit_disc import (EisensteinPoly, USeriesContext, apply_eta, eta_matrix,
                        is_zero_section, lambda_residual, nnabla_commutator)


@dataclass
class SuiteResult:
    number: int
    title: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures and self.checked > 0

    def check(self, ok, what):
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what)

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return (f"[{mark}] criterion {self.number}: {self.title} "
                f"({self.checked} checks{extra})")


# -- fixtures built in code, mirrored by the shipped JSON files ---------------

def cyclotomic_pair(p=3):
    ctx = PrimeContext(p)
    m = PhiNModule(1, [[Fraction(1, p)]], [[0]], ctx)
    q = HodgePinkLattice({"psi0": LaurentMatrix([[mono(1, 1)]])})
    m_dual = PhiNModule(1, [[p]], [[0]], ctx)
    q_dual = HodgePinkLattice({"psi0": LaurentMatrix([[mono(1, -1)]])})
    return (m, q), (m_dual, q_dual)


def plane_example(dependent, p=3):
    """F = p I_2, N = 0, q = p + t^-2 (u + t u') Q[[t]] with u = e1 and
    u' = e1 (dependent) or e2 (independent)."""
    ctx = PrimeContext(p)
    m = PhiNModule(1, [[p, 0], [0, p]], [[0, 0], [0, 0]], ctx)
    z = TruncatedLaurent()
    if dependent:
        gen = [TruncatedLaurent({-2: 1, -1: 1}), z]
    else:
        gen = [mono(1, -2), mono(1, -1)]
    q = HodgePinkLattice({"psi0": LaurentMatrix.from_columns(
        [gen, [z, mono(1, 0)]])})
    return m, q


# -- 1 ---------------------------------------------------------------------------

def criterion_1():
    r = SuiteResult(1, "cyclotomic objects: t_N = t_H = -1 / +1, wa, "
                       "zero section")
    for (m, q), sign in zip(cyclotomic_pair(), (-1, 1)):
        s = t_invariants(m, q)
        r.check(s.t_N == sign and s.t_H == sign, f"slopes {s}")
        r.check(is_weakly_admissible(m, q).wa, "not weakly admissible")
        r.check(is_zero_section(m, q), "eta convention: not a section image")
        r.check(is_zero_section(m, q, "id"), "id convention: not a section "
                                             "image")
        r.check(hodge_polygon(q).mu("psi0") == (sign,), "polygon")
    return r


# -- 2 ---------------------------------------------------------------------------

def criterion_2():
    r = SuiteResult(2, "plane example mu = (2,0): independent wa, "
                       "dependent not with witness span(u, v)")
    m, q = plane_example(False)
    rep = is_weakly_admissible(m, q)
    r.check(rep.wa, f"independent case reported {rep}")
    sub_m, sub_q = induced_subobject(m, q, [[1, 0]])
    r.check(t_invariants(sub_m, sub_q).t_H == 1,
            "independent sub-lattice has t_H != 1")
    m, q = plane_example(True)
    rep = is_weakly_admissible(m, q)
    r.check(not rep.wa, "dependent case reported weakly admissible")
    r.check(rep.witness is not None and
            ql.span_equal([list(v) for v in rep.witness], [[1, 0]]),
            f"witness {rep.witness}")
    r.check(rep.witness_slopes is not None and rep.witness_slopes.t_H == 2
            and rep.witness_slopes.t_N == 1, f"witness slopes "
                                             f"{rep.witness_slopes}")
    r.check(bounded_by(q, Cocharacter.single((2, 0))), "not bounded by (2,0)")
    return r


# -- 3 ---------------------------------------------------------------------------

def criterion_3(seed=3, n_filtrations=200, n_minuscule=100):
    r = SuiteResult(3, "filtration roundtrip and minuscule double roundtrip")
    rng = random.Random(seed)
    for k in range(n_filtrations):
        d = rng.randint(1, 4)
        e = rng.randint(1, 2)
        F = smp.random_filtration(rng, d, e)
        r.check(lattice_to_filtration(filtration_to_lattice(F)) == F,
                f"filtration #{k} does not round-trip")
    for k in range(n_minuscule):
        d = rng.randint(1, 4)
        q = smp.minuscule_lattice(rng, d)
        Fq = lattice_to_filtration(q)
        back = filtration_to_lattice(Fq)
        r.check(back.same_lattice(q),
                f"minuscule lattice #{k}: q(F_q) != q")
        r.check(lattice_to_filtration(back) == Fq,
                f"minuscule lattice #{k}: F_q(F_q) != F_q")
    return r


# -- 4 ---------------------------------------------------------------------------

def _same_total(d, total, lo=-3, hi=3):
    return [v for v in product(range(hi, lo - 1, -1), repeat=d)
            if sum(v) == total and all(v[i] >= v[i + 1]
                                       for i in range(d - 1))]


def criterion_4(seed=4, n=200):
    r = SuiteResult(4, "primal = dual boundedness; bounded_by = Bruhat "
                       "comparison of the Hodge polygon")
    rng = random.Random(seed)
    outcomes = set()
    for k in range(n):
        d = rng.randint(1, 4)
        e = rng.randint(1, 2)
        labels = smp.labels_for(e, 1)
        mu_q = Cocharacter(d, tuple((lab, smp.dominant(rng, d, -2, 2))
                                    for lab in labels), e)
        q = smp.lattice_with_polygon(rng, mu_q, degree=1)
        ws = []
        for lab in labels:
            if rng.random() < 0.75:
                ws.append((lab, rng.choice(_same_total(d, sum(mu_q.mu(lab))))))
            else:
                ws.append((lab, smp.dominant(rng, d)))
        mu = Cocharacter(d, tuple(ws), e)
        primal = bounded_by(q, mu, "primal")
        dual = bounded_by(q, mu, "dual")
        poly = hodge_polygon(q)
        r.check(poly == mu_q, f"pair #{k}: polygon {poly} != built {mu_q}")
        r.check(primal == dual, f"pair #{k}: primal {primal} dual {dual}")
        r.check(primal == bruhat_leq(poly, mu),
                f"pair #{k}: bounded {primal} vs Bruhat")
        outcomes.add(primal)
    r.check(outcomes == {True, False}, "sample never exercised both answers")
    return r


# -- 5 ---------------------------------------------------------------------------

def _dominant_vectors(d, lo=-3, hi=3):
    return [v for v in product(range(hi, lo - 1, -1), repeat=d)
            if all(v[i] >= v[i + 1] for i in range(d - 1))]


def criterion_5():
    r = SuiteResult(5, "l-vector direct = reconstruction (exhaustive); "
                       "gap inequality brute force")
    for d in range(1, 5):
        vecs = _dominant_vectors(d)
        for v in vecs:
            mu = Cocharacter.single(v)
            r.check(l_vector(mu) == l_vector(mu, "reconstruction"),
                    f"mismatch at {v}")
        for v, w in product(vecs, repeat=2):
            mu = Cocharacter.of(v, w)
            r.check(l_vector(mu) == l_vector(mu, "reconstruction"),
                    f"mismatch at {(v, w)}")
    for n in range(1, 6):
        for rv in product(range(-3, 5), repeat=n):
            res = combinatorial_gap(rv)
            naive = sum(x * x for x in rv) - sum(a * b for a, b in
                                               zip(rv, rv[1:]))
            ones = all(x == 1 for x in rv)
            r.check(res["gap"] == naive and res["exceptional"] == ones,
                    f"gap of {rv}")
            if sum(rv) >= n:
                r.check((res["gap"] > 1) != ones, f"gap inequality fails at {rv}")
    return r


# -- 6 ---------------------------------------------------------------------------

def _sizes_for(s):
    for si in range(1, s + 1):
        for sj in range(1, s + 1):
            yield si, sj


def criterion_6(seed=6):
    r = SuiteResult(6, "Jordan roundtrip over all partitions of d <= 5; "
                       "degeneration identities a-d for sizes <= 3")
    rng = random.Random(seed)
    for p in (2, 3):
        ctx = PrimeContext(p)
        for d in range(1, 6):
            found = set()
            for part in sympy_partitions(d):
                pi = tuple(sorted((k for k, c in part.items()
                                   for _ in range(c)), reverse=True))
                m = generic_representative(pi, 1, ctx)
                got = jordan_component(m).partition
                r.check(got == pi, f"p={p}: {pi} -> {got}")
                conj, _ = random_conjugate(m, rng)
                r.check(jordan_component(conj).partition == pi,
                        f"p={p}: conjugate of {pi}")
                found.add(got)
            r.check(len(found) == n_partitions(d),
                    f"d={d}: {len(found)} components")
    for s in (2, 3):
        for si, sj in _sizes_for(s):
            case = {(False, False): "a", (True, False): "b",
                    (False, True): "c", (True, True): "d"}[(si == s, sj == s)]
            for p in (2, 3):
                rho_i, rho_j = Fraction(1), Fraction(p)
                basis = admissible_blocks(si, sj, rho_i, rho_j, p, 1)
                blocks = list(basis)
                if basis:
                    blocks.append(sum((rng.randint(-3, 3) * b for b in basis),
                                      sympy.zeros(si, sj)))
                for N in blocks:
                    fam = degeneration_identity_check(
                        (si, sj), (rho_i, rho_j), N, case, p, s_max=s)
                    r.check(fam.holds, f"case {case} sizes {(si, sj)} "
                                       f"s={s} p={p}")
                    Ji, Jj, Nt = specialize(fam, 1)
                    r.check(Nt == N, f"case {case}: z = 1 does not recover N")
    return r


# -- 7 ---------------------------------------------------------------------------

def _random_wa_instance(rng, ctx):
    """A weakly admissible instance bounded by mu, or None."""
    d = rng.randint(1, 3)
    e = rng.choice([1, 1, 2])
    f = rng.choice([1, 1, 2])
    labels = smp.labels_for(e, f)
    mu = Cocharacter(d, tuple((lab, smp.dominant(rng, d, -2, 3))
                              for lab in labels), e, f)
    total = sum(sum(v) for v in mu.vectors())
    if total % e:
        return None
    # t_N(D) = val(det F)/f must equal t_H(D) = total/(ef)
    target = total // e
    vals = [rng.randint(-2, 4) for _ in range(d - 1)]
    vals.append(target - sum(vals))
    chain = d >= 2 and rng.random() < 0.3
    if chain:
        # the chain eigenvalues have valuations v and v + f
        vals[1] = vals[0] + f
        vals[-1] = target - sum(vals[:-1]) if d > 2 else vals[-1]
        if sum(vals) != target:
            return None
    m = smp.diagonal_module(rng, vals, ctx, f, chain)
    if rng.random() < 0.5:
        h = smp.random_filtration(rng, d, e, f,
                                  jumps={lab: mu.mu(lab) for lab in labels})
    else:
        h = smp.lattice_with_polygon(rng, mu, degree=1)
    if not is_weakly_admissible(m, h).wa:
        return None
    return m, h, mu


def _stratum_grid(p):
    """Points (c1, c2) with rational roots lying over mu-strata, d = 2."""
    ctx = PrimeContext(p)
    pts = []
    for mu in [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1)]:
        cmu = Cocharacter.single(mu)
        for i in range(mu[1], mu[0] + 1):
            j = sum(mu) - i
            if j < i:
                continue
            for u in (1, 2, 5):
                a, b = Fraction(p) ** i, Fraction(p) ** j * u
                c = (-(a + b), a * b)
                if newton_membership(c, cmu, ctx):
                    pts.append((c, cmu, ctx))
    return pts


def criterion_7(seed=7, n=100, grid=20):
    r = SuiteResult(7, "Newton membership of weakly admissible instances; "
                       "constructive preimages for d = 2")
    rng = random.Random(seed)
    ctx = PrimeContext(2)
    found = 0
    attempts = 0
    while found < n and attempts < 50 * n:
        attempts += 1
        inst = _random_wa_instance(rng, ctx)
        if inst is None:
            continue
        m, h, mu = inst
        found += 1
        if isinstance(h, KFiltration):
            bounded = bounded_by(filtration_to_lattice(h), mu)
        else:
            bounded = bounded_by(h, mu)
        r.check(bounded, f"instance {found} not bounded by its mu")
        pt = newton_point(m)
        r.check(newton_membership(pt, mu, ctx),
                f"instance {found}: point {pt} outside the stratum of {mu}")
        last = padic_valuation(pt.coefficients[-1], ctx)
        r.check(last == mu.f * l_vector(mu)[-1],
                f"instance {found}: no equality at i = d")
    r.check(found == n, f"only {found} weakly admissible instances drawn")
    pts = []
    for p in (2, 3):
        pts += _stratum_grid(p)
    pts = pts[:grid]
    r.check(len(pts) == grid, f"grid has only {len(pts)} points")
    for c, cmu, ctx_p in pts:
        hit = newton_preimage_search(c, cmu, ctx_p)
        ok = hit is not None and is_weakly_admissible(*hit).wa and \
            tuple(newton_point(hit[0]).coefficients) == c
        r.check(ok, f"no preimage for {c} over {cmu.mu('psi0')}")
    return r


# -- 8 ---------------------------------------------------------------------------

def criterion_8(seed=8, P=40):
    r = SuiteResult(8, "series identities: lambda, N_nabla commutation, "
                       "eta inverse, zero-section detector")
    rng = random.Random(seed)
    for p, coeffs in [(2, (-2,)), (3, (3, 0)), (5, (-5, 5, 0)), (3, (6, 3))]:
        c = USeriesContext(EisensteinPoly(coeffs, PrimeContext(p)), P)
        res = lambda_residual(c)
        r.check(res.vanishes_within_precision() and res.prec >= P - c.E.e,
                f"lambda residual {res} for p={p}")
    c = USeriesContext(EisensteinPoly((-2,), PrimeContext(2)), P)
    for k in range(50):
        g = smp.series_poly(rng, rng.randint(0, 8))
        res = nnabla_commutator(g, c)
        r.check(res.vanishes_within_precision() and res.prec >= P - 2,
                f"commutator sample {k}: {res}")
    for k in range(20):
        d = rng.randint(1, 4)
        N0 = smp.nilpotent(rng, d)
        prod = eta_matrix(N0, P) @ eta_matrix(N0, P, "inverse")
        r.check(prod.agrees_with(LaurentMatrix.identity(d)) and
                prod.precision() >= P, f"eta * eta^-1 != I, sample {k}")
    ctx = PrimeContext(2)
    for k in range(30):
        d = rng.randint(1, 3)
        parts = [tuple(k for k, c in pt.items() for _ in range(c))
                 for pt in sympy_partitions(d)]
        m = generic_representative(rng.choice(parts), 1, ctx)
        F = smp.random_filtration(rng, d)
        q = filtration_to_lattice(F)
        r.check(is_zero_section(m, q), f"section image {k} rejected")
        twisted = apply_eta(m.Nm(), q, "inverse")
        r.check(is_zero_section(m, twisted, "id"),
                f"id-convention section image {k} rejected")
    m, q = plane_example(False)
    r.check(not is_zero_section(m, q), "independent fixture accepted")
    return r


# -- 9 ---------------------------------------------------------------------------

def _max_sub_sigma(m, h):
    return max((t_invariants(m, h, s.vectors()).sigma
                for s in stable_subspaces(m)), default=None)


def criterion_9(seed=9, n=80):
    r = SuiteResult(9, "HN: strictly decreasing sigmas, trivial iff "
                       "semistable, order independence")
    rng = random.Random(seed)
    shapes = set()
    for k in range(n):
        d = rng.randint(1, 3)
        f = rng.choice([1, 2])
        ctx = PrimeContext(rng.choice([2, 3]))
        vals = [rng.randint(-2, 3) for _ in range(d)]
        chain = d >= 2 and rng.random() < 0.3
        if chain:
            vals[1] = vals[0] + f
        m = smp.diagonal_module(rng, vals, ctx, f, chain)
        mu = Cocharacter(d, tuple((lab, smp.dominant(rng, d, -2, 3))
                                  for lab in smp.labels_for(1, f)), 1, f)
        if rng.random() < 0.5:
            h = smp.random_filtration(rng, d, 1, f,
                                      jumps=dict(mu.weights))
        else:
            h = smp.lattice_with_polygon(rng, mu, degree=1)
        hn = harder_narasimhan(m, h)
        shapes.add(hn.is_trivial)
        sig = hn.sigmas
        r.check(all(a > b for a, b in zip(sig, sig[1:])),
                f"instance {k}: sigmas {sig}")
        whole = t_invariants(m, h)
        worst = _max_sub_sigma(m, h)
        semistable = worst is None or worst <= whole.sigma
        r.check(hn.is_trivial == semistable,
                f"instance {k}: trivial {hn.is_trivial}, semistable "
                f"{semistable}")
        # normalize the slope of D to zero by twisting F with p^j
        j = whole.sigma * f
        if j.denominator == 1:
            s = Fraction(m.p) ** int(j)
            tw = PhiNModule(m.f, ql.mat_scale(m.Fm(), s), m.N0, ctx)
            r.check(is_weakly_admissible(tw, h).wa == hn.is_trivial,
                    f"instance {k}: twisted wa disagrees with HN")
        subs = stable_subspaces(m)
        for _ in range(3):
            perm = subs[:]
            rng.shuffle(perm)
            again = harder_narasimhan(m, h, perm)
            r.check([ql.span_key([list(v) for v in s]) for s in again.steps]
                    == [ql.span_key([list(v) for v in s]) for s in hn.steps]
                    and again.sigmas == sig,
                    f"instance {k}: permuted run differs")
    r.check(shapes == {True, False}, "sample lacks trivial or nontrivial "
                                     "chains")
    m, q = plane_example(True)
    hn = harder_narasimhan(m, q)
    r.check(not hn.is_trivial and hn.sigmas == (1, -1),
            f"dependent plane example HN {hn.sigmas}")
    m, q = plane_example(False)
    r.check(harder_narasimhan(m, q).is_trivial, "independent plane example")
    return r


# -- 10 --------------------------------------------------------------------------

def _dim_q_pairs(v):
    return sum(v[i] - v[j] for i in range(len(v)) for j in range(i + 1, len(v)))


def _dim_flag_multiplicities(v):
    d = len(v)
    return (d * d - sum(v.count(x) ** 2 for x in set(v))) // 2


def criterion_10(seed=10, n=50):
    r = SuiteResult(10, "dimension formulas against independent "
                        "re-evaluation")
    rng = random.Random(seed)
    for k in range(n):
        d = rng.randint(1, 5)
        e = rng.randint(1, 2)
        f = rng.randint(1, 2)
        mu = Cocharacter(d, tuple((lab, smp.dominant(rng, d, -4, 4))
                                  for lab in smp.labels_for(e, f)), e, f)
        got = dimension_formulas(mu)
        want = {"dim_P": f * d ** 2,
                "dim_Q": sum(_dim_q_pairs(list(v)) for v in mu.vectors()),
                "dim_flag": sum(_dim_flag_multiplicities(list(v))
                                for v in mu.vectors())}
        r.check(got == want, f"mu {mu.weights}: {got} != {want}")
    return r


SUITES = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


def run_all(numbers=None):
    return [SUITES[i]() for i in (numbers or sorted(SUITES))]

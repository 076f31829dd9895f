"""Random instances for property checks.  Every generator takes a
``random.Random`` so runs are reproducible from a seed."""

import random
from fractions import Fraction

from . import qlinalg as ql
from .arithmetic import PrimeContext
from .cocharacters import Cocharacter
from .dvr import LaurentMatrix, mono
from .hodge_pink import HodgePinkLattice, KFiltration
from .phin import PhiNModule
from .series import TruncatedLaurent


def labels_for(e, f):
    return [f"psi{i}" for i in range(e * f)]


def invertible_rational(rng: random.Random, d, size=3):
    while True:
        g = [[Fraction(rng.randint(-size, size)) for _ in range(d)]
             for _ in range(d)]
        if ql.det(g) != 0:
            return g


def unimodular_series(rng: random.Random, d, degree=2, size=2):
    """g0 + g1 t + ... with g0 invertible: a unit of GL_d(Q[[t]])."""
    layers = [invertible_rational(rng, d, size)]
    for _ in range(degree):
        layers.append([[Fraction(rng.randint(-size, size)) for _ in range(d)]
                       for _ in range(d)])
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            c = {k: layers[k][i][j] for k in range(len(layers))
                 if layers[k][i][j]}
            row.append(TruncatedLaurent(c))
        rows.append(row)
    return LaurentMatrix(rows)


def dominant(rng: random.Random, d, lo=-3, hi=3):
    return tuple(sorted((rng.randint(lo, hi) for _ in range(d)),
                        reverse=True))


def random_filtration(rng: random.Random, d, e=1, f=1, lo=-3, hi=3,
                      jumps=None):
    comps = []
    for lab in labels_for(e, f):
        g = invertible_rational(rng, d)
        js = dominant(rng, d, lo, hi) if jumps is None else jumps[lab]
        comps.append((lab, ql.columns(g), js))
    return KFiltration(comps, e, f)


def lattice_with_polygon(rng: random.Random, mu: Cocharacter, degree=2):
    """g1 diag(t^-mu) g2 per label, g1 and g2 random units."""
    comps = []
    for lab in mu.labels:
        D = LaurentMatrix.diagonal_monomials([-a for a in mu.mu(lab)])
        g1 = unimodular_series(rng, mu.d, degree)
        g2 = unimodular_series(rng, mu.d, degree)
        comps.append((lab, g1 @ D @ g2))
    return HodgePinkLattice(comps, None, mu.e, mu.f)


def minuscule_lattice(rng: random.Random, d, e=1, f=1):
    """g diag(t^-1,...,t^-1,1,...,1) for a random unit g."""
    comps = []
    for lab in labels_for(e, f):
        k = rng.randint(0, d)
        D = LaurentMatrix.diagonal_monomials([-1] * k + [0] * (d - k))
        comps.append((lab, unimodular_series(rng, d, 2) @ D))
    return HodgePinkLattice(comps, (1, 0), e, f)


def _unit(rng):
    # a unit at p = 2 and p = 3
    return Fraction(rng.choice([1, -1, 5, -5, 7, 1, -1]),
                    rng.choice([1, 1, 5, 7]))


def diagonal_module(rng: random.Random, vals, ctx: PrimeContext, f=1,
                    chain=False, conjugate=True):
    """Distinct eigenvalues p^(v_i) * unit_i; with ``chain`` the first two
    eigenvalues form a chain lambda, p^f lambda linked by N0."""
    d = len(vals)
    p = ctx.p
    while True:
        eig = [Fraction(p) ** v * _unit(rng) for v in vals]
        if chain and d >= 2:
            eig[1] = eig[0] * Fraction(p) ** f
        if len(set(eig)) == d:
            break
    F = [[eig[i] if i == j else Fraction(0) for j in range(d)]
         for i in range(d)]
    N = ql.zeros(d, d)
    if chain and d >= 2:
        N[0][1] = Fraction(1)
    if not conjugate:
        return PhiNModule(f, F, N, ctx)
    g = invertible_rational(rng, d)
    gi = ql.inverse(g)
    return PhiNModule(f, ql.matmul(gi, ql.matmul(F, g)),
                      ql.matmul(gi, ql.matmul(N, g)), ctx)


def nilpotent(rng: random.Random, d):
    """A random conjugate of a strictly upper triangular matrix."""
    U = [[Fraction(rng.randint(-2, 2)) if j > i else Fraction(0)
          for j in range(d)] for i in range(d)]
    g = invertible_rational(rng, d)
    return ql.matmul(ql.inverse(g), ql.matmul(U, g))


def is_unit_matrix(M: LaurentMatrix):
    return M.det().order() == 0


def series_poly(rng: random.Random, degree, var="u"):
    return TruncatedLaurent({k: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                             for k in range(degree + 1)}, None, var)


__all__ = ["labels_for", "invertible_rational", "unimodular_series",
           "dominant", "random_filtration", "lattice_with_polygon",
           "minuscule_lattice", "diagonal_module", "nilpotent",
           "series_poly", "mono"]

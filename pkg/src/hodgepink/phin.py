"""(phi, N)-modules over a field in normalized coordinates.

A module over K0 of degree f is stored as the triple (f, F, N0) where F is
the matrix of the f-th power of Frobenius on the 0-th component and N0 the
monodromy there.  The condition N Phi = p Phi N becomes p^f F N0 = N0 F.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
import random

import sympy

from . import qlinalg as ql
from .arithmetic import PrimeContext, is_prime, padic_valuation
from .errors import (CasePreconditionViolated, InconsistentChain, InputError,
                     NotNilpotent, RelationViolated, ShapeMismatch,
                     SingularFrobenius, UnsupportedSpectrum)


def _freeze(mat):
    return tuple(tuple(Fraction(x) for x in row) for row in mat)


@dataclass(frozen=True)
class PhiNModule:
    f: int
    F: tuple
    N0: tuple
    ctx: PrimeContext

    def __post_init__(self):
        object.__setattr__(self, "F", _freeze(self.F))
        object.__setattr__(self, "N0", _freeze(self.N0))
        d = len(self.F)
        if d == 0 or any(len(r) != d for r in self.F):
            raise ShapeMismatch("F must be a nonempty square matrix")
        if len(self.N0) != d or any(len(r) != d for r in self.N0):
            raise ShapeMismatch("N0 must have the shape of F")
        if self.f < 1:
            raise InputError("f must be positive", f=self.f)

    @property
    def d(self):
        return len(self.F)

    @property
    def p(self):
        return self.ctx.p

    def Fm(self):
        return [list(r) for r in self.F]

    def Nm(self):
        return [list(r) for r in self.N0]

    @classmethod
    def from_components(cls, frobenius_components, N0, ctx):
        """Normalize a full tuple (Phi_1, ..., Phi_f), Phi_i: D_{i-1} -> D_i.

        The composite Phi_f ... Phi_1 is the f-th power on D_0 (coefficients
        are rational, so semilinearity is invisible).
        """
        comps = [ql.to_fraction_matrix(c) for c in frobenius_components]
        F = ql.identity(len(comps[0]))
        for c in comps:
            F = ql.matmul(c, F)
        return cls(len(comps), F, N0, ctx)


@dataclass(frozen=True)
class ModuleReport:
    valid: bool
    failure: str = None
    message: str = ""


def validate_module(m: PhiNModule, raise_on_failure=False) -> ModuleReport:
    """Check det F != 0, p^f F N0 = N0 F and N0^d = 0, in that order."""
    F, N = m.Fm(), m.Nm()
    checks = []
    if ql.det(F) == 0:
        checks.append(SingularFrobenius("F is singular"))
    else:
        lhs = ql.mat_scale(ql.matmul(F, N), Fraction(m.p) ** m.f)
        rhs = ql.matmul(N, F)
        if lhs != rhs:
            checks.append(RelationViolated("p^f F N0 differs from N0 F"))
        elif not ql.is_zero_matrix(ql.mat_pow(N, m.d)):
            # cannot happen when the relation holds; kept as a guard
            checks.append(NotNilpotent("N0^d is nonzero"))
    if not checks:
        return ModuleReport(True)
    err = checks[0]
    if raise_on_failure:
        raise err
    return ModuleReport(False, type(err).__name__, err.message)


def charpoly_coefficients(F):
    """(c_1, ..., c_d) with det(X - F) = X^d + c_1 X^(d-1) + ... + c_d.

    Faddeev-LeVerrier recursion, exact over Q.
    """
    F = ql.to_fraction_matrix(F)
    d = len(F)
    Mk = ql.zeros(d, d)
    c = [Fraction(1)]
    I = ql.identity(d)
    for k in range(1, d + 1):
        Mk = ql.mat_add(ql.matmul(F, Mk), ql.mat_scale(I, c[-1]))
        FM = ql.matmul(F, Mk)
        tr = sum(FM[i][i] for i in range(d))
        c.append(-tr / k)
    return tuple(c[1:])


def rational_roots(coeffs):
    """Rational roots with multiplicity of X^d + c_1 X^(d-1) + ... + c_d."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([1] + [sympy.Rational(c.numerator, c.denominator)
                             for c in coeffs], x, domain=sympy.QQ)
    roots = sympy.roots(poly, filter="Q", multiple=False)
    out = {}
    for r, mult in roots.items():
        r = sympy.Rational(r)
        out[Fraction(int(r.p), int(r.q))] = int(mult)
    return out


def adjoint_quotient_point(m: PhiNModule):
    """Characteristic polynomial coefficients of F."""
    return charpoly_coefficients(m.Fm())


def p_scheme_dimension(f: int, d: int) -> int:
    if f < 1 or d < 1:
        raise InputError("f and d must be positive")
    return f * d * d


def distinct_rational_spectrum(F):
    """Eigenvalues and eigenvectors when F has d distinct rational ones."""
    d = len(F)
    roots = rational_roots(charpoly_coefficients(F))
    if sum(roots.values()) != d:
        raise UnsupportedSpectrum("Frobenius has irrational eigenvalues",
                                  spectrum_class="distinct rational")
    if any(k > 1 for k in roots.values()):
        raise UnsupportedSpectrum("Frobenius has a repeated eigenvalue",
                                  spectrum_class="distinct rational")
    eig = sorted(roots)
    vecs = []
    for lam in eig:
        shifted = [[F[i][j] - (lam if i == j else 0) for j in range(d)]
                   for i in range(d)]
        vecs.append(ql.nullspace(shifted)[0])
    return eig, vecs


def nilpotent_jordan_type(N):
    """Block sizes of a nilpotent matrix, nonincreasing."""
    d = len(N)
    ranks = [d]
    P = ql.identity(d)
    for _ in range(d):
        P = ql.matmul(P, N)
        ranks.append(ql.rank(P))
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise NotNilpotent("matrix is not nilpotent")
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        exactly = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes += [k] * exactly
    return tuple(sizes)


@dataclass(frozen=True)
class JordanType:
    partition: tuple
    eigenvalue_order: tuple
    relations: tuple
    monodromy_type: tuple = field(default=())


def jordan_component(m: PhiNModule) -> JordanType:
    """The partition labelling the component through a generic point."""
    F = m.Fm()
    eig, _ = distinct_rational_spectrum(F)
    q = Fraction(m.p) ** m.f
    spectrum = set(eig)
    chains = []
    for lam in eig:
        if lam / q in spectrum:
            continue
        chain = [lam]
        while chain[-1] * q in spectrum:
            chain.append(chain[-1] * q)
        chains.append(chain)
    chains.sort(key=lambda c: (-len(c), c[0]))
    partition = tuple(len(c) for c in chains)
    order = tuple(x for c in chains for x in c)
    relations = tuple(i for i in range(len(order) - 1)
                      if order[i] * q == order[i + 1])
    ntype = nilpotent_jordan_type(m.Nm())
    if ntype != partition:
        raise InconsistentChain(
            "Jordan type of N0 differs from the eigenvalue chains",
            chains=partition, monodromy=ntype)
    return JordanType(partition, order, relations, ntype)


def _primes_except(p):
    for k in count(2):
        if is_prime(k) and k != p:
            yield k


def generic_representative(partition, lam0, ctx: PrimeContext, f: int = 1):
    """Diagonal F with chained eigenvalues and N0 linking each chain."""
    partition = sorted((int(k) for k in partition), reverse=True)
    if not partition or any(k < 1 for k in partition):
        raise InputError("partition must consist of positive integers")
    lam0 = Fraction(lam0)
    if lam0 == 0:
        raise InputError("seed eigenvalue must be nonzero")
    q = Fraction(ctx.p) ** f
    primes = _primes_except(ctx.p)
    diag = []
    links = []
    for b, k in enumerate(partition):
        seed = lam0 if b == 0 else lam0 * next(primes)
        start = len(diag)
        for i in range(k):
            diag.append(seed * q ** i)
            if i:
                links.append((start + i - 1, start + i))
    d = len(diag)
    F = [[diag[i] if i == j else Fraction(0) for j in range(d)]
         for i in range(d)]
    N = ql.zeros(d, d)
    for i, j in links:
        N[i][j] = Fraction(1)
    return PhiNModule(f, F, N, ctx)


def random_conjugate(m: PhiNModule, rng: random.Random, size=3):
    """(g^-1 F g, g^-1 N0 g) for a random invertible rational g."""
    d = m.d
    while True:
        g = [[Fraction(rng.randint(-size, size)) for _ in range(d)]
             for _ in range(d)]
        if ql.det(g) != 0:
            break
    gi = ql.inverse(g)
    F = ql.matmul(gi, ql.matmul(m.Fm(), g))
    N = ql.matmul(gi, ql.matmul(m.Nm(), g))
    return PhiNModule(m.f, F, N, m.ctx), g


# -- degeneration families --------------------------------------------------

def jordan_block(size, rho, last=None):
    J = sympy.zeros(size, size)
    for i in range(size):
        J[i, i] = rho
        if i + 1 < size:
            J[i, i + 1] = 1
    if last is not None:
        J[size - 1, size - 1] = last
    return J


def _is_admissible_block(N, si, sj, rho_i, rho_j, q):
    Ji = jordan_block(si, rho_i)
    Jj = jordan_block(sj, rho_j)
    return sympy.simplify(q * Ji * N - N * Jj) == sympy.zeros(si, sj)


def admissible_blocks(si, sj, rho_i, rho_j, p, f):
    """Basis of the solutions N of p^f J_i N = N J_j (as sympy matrices)."""
    q = sympy.Integer(p) ** f
    syms = sympy.symbols("n0:%d" % (si * sj))
    N = sympy.Matrix(si, sj, syms)
    eqs = list(q * jordan_block(si, rho_i) * N - N * jordan_block(sj, rho_j))
    A, _ = sympy.linear_eq_to_matrix(eqs, syms)
    basis = []
    for v in A.nullspace():
        basis.append(sympy.Matrix(si, sj, list(v)))
    return basis


@dataclass(frozen=True)
class DegenerationFamily:
    case: str
    z: sympy.Symbol
    J_i: sympy.Matrix
    J_j: sympy.Matrix
    N_ij: sympy.Matrix
    holds: bool


def degeneration_identity_check(sizes, rhos, N_ij, case, p, f=1,
                                s_max=None) -> DegenerationFamily:
    """Build the z-family of (J_i, J_j, N_ij) for one of the four cases.

    Cases: a (both blocks smaller than the maximal size s), b (only the
    source block i has size s), c (only the target block j has size s),
    d (both have size s).  The identity p^f J_i N = N J_j is verified as a
    polynomial identity in z.
    """
    si, sj = (int(x) for x in sizes)
    rho_i, rho_j = (sympy.nsimplify(Fraction(x)) for x in rhos)
    q = sympy.Integer(p) ** f
    N = sympy.Matrix(N_ij)
    if N.shape != (si, sj):
        raise CasePreconditionViolated("N_ij must be s_i x s_j")
    if q * rho_i != rho_j:
        raise CasePreconditionViolated("need p^f rho_i = rho_j")
    if not _is_admissible_block(N, si, sj, rho_i, rho_j, q):
        raise CasePreconditionViolated("N_ij violates p^f J_i N = N J_j")
    s = max(si, sj) if s_max is None else int(s_max)
    if s < max(si, sj) or s < 2:
        raise CasePreconditionViolated(
            "maximal block size must be at least 2 and dominate the blocks")
    expected = {(False, False): "a", (True, False): "b",
                (False, True): "c", (True, True): "d"}[(si == s, sj == s)]
    if case != expected:
        raise CasePreconditionViolated(
            f"sizes ({si}, {sj}) with s = {s} belong to case {expected}")
    z = sympy.Symbol("z")
    Ji = jordan_block(si, rho_i, z * rho_i if si == s else None)
    Jj = jordan_block(sj, rho_j, z * rho_j if sj == s else None)

    def n(mu, nu):
        return N[mu - 1, nu - 1]

    if case in ("a", "b"):
        Nt = N
    else:
        Nt = sympy.zeros(si, sj)
        for mu in range(1, si + 1):
            Nt[mu - 1, sj - 1] = n(mu, sj)
            for nu in range(1, sj):
                if case == "c":
                    if mu > nu + si - sj + 1:
                        continue
                    src = mu - nu + sj - 1
                    Nt[mu - 1, nu - 1] = n(mu, nu) + (1 - z) * \
                        q ** (sj - 1 - nu) * rho_j * n(src, sj)
                else:
                    if mu > nu:
                        continue
                    src = mu - nu + s - 1
                    Nt[mu - 1, nu - 1] = n(mu, nu) + (1 - z) * \
                        q ** (s - 1 - nu) * rho_j * n(src, s)
    residual = (q * Ji * Nt - Nt * Jj).applyfunc(sympy.expand)
    holds = residual == sympy.zeros(si, sj)
    return DegenerationFamily(case, z, Ji, Jj, Nt, bool(holds))


def specialize(family: DegenerationFamily, value=1):
    sub = {family.z: value}
    return (family.J_i.subs(sub), family.J_j.subs(sub),
            family.N_ij.subs(sub))

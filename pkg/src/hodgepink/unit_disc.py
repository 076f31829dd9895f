"""Power series on the open unit disc, truncated in u.

Only the case K0 = Q_p is modelled (f = 1): Frobenius fixes coefficients
and acts by u -> u^p.  The Hodge-Pink variable t corresponds to E(u)/E(0).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import qlinalg as ql
from .arithmetic import PrimeContext, padic_valuation
from .dvr import LaurentMatrix, LatticeBasis
from .errors import InputError, InsufficientPrecision, NotNilpotent
from .hodge_pink import (HodgePinkLattice, filtration_to_lattice,
                         lattice_to_filtration)
from .series import TruncatedLaurent, log_one_minus


@dataclass(frozen=True)
class EisensteinPoly:
    """E(u) = u^e + a_(e-1) u^(e-1) + ... + a_0 over Q."""

    coefficients: tuple     # a_0, ..., a_(e-1)
    ctx: PrimeContext

    def __post_init__(self):
        coeffs = tuple(Fraction(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise InputError("Eisenstein polynomial needs degree >= 1")
        if any(padic_valuation(a, self.ctx) < 1 for a in coeffs):
            raise InputError("non-leading coefficients must be divisible "
                             "by p")
        if padic_valuation(coeffs[0], self.ctx) != 1:
            raise InputError("constant term must have valuation exactly 1")

    @property
    def e(self):
        return len(self.coefficients)

    def series(self):
        c = {i: a for i, a in enumerate(self.coefficients)}
        c[self.e] = Fraction(1)
        return TruncatedLaurent(c, None, "u")

    @property
    def constant(self):
        return self.coefficients[0]

    def normalized(self):
        """E(u)/E(0), an exact polynomial with constant term 1."""
        return self.series().scale(1 / self.constant)


@dataclass(frozen=True)
class USeriesContext:
    E: EisensteinPoly
    precision: int

    def __post_init__(self):
        if self.precision < self.E.e + 1:
            raise InputError("precision must be at least e + 1")

    @property
    def p(self):
        return self.E.ctx.p

    @property
    def ctx(self):
        return self.E.ctx


def lambda_series(c: USeriesContext) -> TruncatedLaurent:
    """prod_{n >= 0} phi^n(E(u)/E(0)) modulo u^P.

    The n-th factor is 1 + O(u^(p^n)), so it is dropped once p^n >= P.
    """
    P = c.precision
    factor = c.E.normalized().truncate(P)
    out = TruncatedLaurent({0: 1}, P, "u")
    n = 0
    while c.p ** n < P:
        out = (out * factor).truncate(P)
        factor = factor.frobenius(c.p).truncate(P)
        n += 1
    return out


def nnabla(g: TruncatedLaurent, lam: TruncatedLaurent) -> TruncatedLaurent:
    """N_nabla(g) = -u * lambda * dg/du."""
    return -(lam * g.derivative()).shift(1)


def nnabla_commutator(g: TruncatedLaurent, c: USeriesContext):
    """N(phi(g)) - p * (E/E(0)) * phi(N(g)); vanishes on the known window."""
    if g.var != "u":
        raise InputError("series must be in the variable u")
    g = g.truncate(c.precision)
    lam = lambda_series(c)
    left = nnabla(g.frobenius(c.p), lam)
    right = (c.E.normalized() * nnabla(g, lam).frobenius(c.p)).scale(c.p)
    return left - right


def lambda_residual(c: USeriesContext):
    lam = lambda_series(c)
    return lam - c.E.normalized() * lam.frobenius(c.p)


def _nilpotent_powers(N0):
    d = len(N0)
    powers = [ql.identity(d)]
    while not ql.is_zero_matrix(powers[-1]):
        if len(powers) > d:
            raise NotNilpotent("N0 is not nilpotent")
        powers.append(ql.matmul(powers[-1], N0))
    return powers[:-1]


def eta_matrix(N0, P: int, direction="forward") -> LaurentMatrix:
    """sum_i N0^i * s^i / i! * log(1 - t)^i with s = -1 (forward), +1 (inverse).

    Returned as a matrix of series in t known modulo t^P.
    """
    N0 = ql.to_fraction_matrix(N0)
    if direction not in ("forward", "inverse"):
        raise InputError(f"unknown direction {direction!r}")
    sign = -1 if direction == "forward" else 1
    d = len(N0)
    log = log_one_minus(TruncatedLaurent({1: 1}), P)
    powers = _nilpotent_powers(N0)
    entries = [[TruncatedLaurent({}, P) for _ in range(d)] for _ in range(d)]
    logpow = TruncatedLaurent({0: 1}, P)
    for i, Ni in enumerate(powers):
        coef = Fraction(sign ** i, factorial(i))
        for r in range(d):
            for s in range(d):
                if Ni[r][s]:
                    entries[r][s] = entries[r][s] + logpow.scale(coef * Ni[r][s])
        logpow = (logpow * log).truncate(P)
    return LaurentMatrix(entries)


def rank1_twist_factor(n: int, c: USeriesContext) -> TruncatedLaurent:
    """(p E(u)/E(0))^n modulo u^P."""
    base = c.E.normalized().scale(c.p)
    P = c.precision
    if n >= 0:
        return base.power(n).truncate(P)
    return base.inverse(P).power(-n).truncate(P)


def apply_eta(N0, q: HodgePinkLattice, direction="forward", precision=None):
    """The image of q under eta (or its inverse), exactly on q's window."""
    m, n = q.window
    need = m + n + 1
    P = need if precision is None else precision
    if P < need:
        raise InsufficientPrecision("eta needs precision m + n + 1",
                                    precision=P, needed=need)
    eta = eta_matrix(N0, P, direction)
    comps = []
    for label, b in q.components:
        img = (eta @ b.matrix).truncate(n + 1).exactify()
        comps.append((label, LatticeBasis(img, (m, n))))
    return HodgePinkLattice(comps, (m, n), q.e, q.f)


def is_zero_section(m, q: HodgePinkLattice, convention="eta",
                    precision=None) -> bool:
    """Whether q comes from a filtration through the relevant section.

    With the default convention this is q = q(F_q).  When eta is taken to
    be the identity the section is F -> eta^-1(q(F)), so the test is run
    on eta(q).
    """
    if convention == "eta":
        target = q
    elif convention == "id":
        if m.f != 1:
            raise InputError("the unit disc model covers f = 1 only")
        target = apply_eta(m.Nm(), q, "forward", precision)
    else:
        raise InputError(f"unknown convention {convention!r}")
    return target.same_lattice(filtration_to_lattice(
        lattice_to_filtration(target)))

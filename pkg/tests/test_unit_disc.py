import random
from fractions import Fraction

import pytest

from hodgepink import qlinalg as ql
from hodgepink.admissibility import is_weakly_admissible
from hodgepink.arithmetic import PrimeContext
from hodgepink.dvr import LaurentMatrix, mono
from hodgepink.errors import InputError, InsufficientPrecision, NotNilpotent
from hodgepink.hodge_pink import HodgePinkLattice, filtration_to_lattice
from hodgepink.phin import PhiNModule
from hodgepink.sampling import (diagonal_module, nilpotent,
                                random_filtration, series_poly,
                                unimodular_series)
from hodgepink.series import TruncatedLaurent
from hodgepink.suites import plane_example
from hodgepink.unit_disc import (EisensteinPoly, USeriesContext, apply_eta,
                                 eta_matrix, is_zero_section, lambda_residual,
                                 lambda_series, nnabla_commutator,
                                 rank1_twist_factor)

C2 = PrimeContext(2)


def context(p, coeffs, P):
    return USeriesContext(EisensteinPoly(coeffs, PrimeContext(p)), P)


def low_coefficients_vanish(s, upto):
    return all(s.coefficient(k) == 0 for k in range(upto))


def test_lambda_example():
    lam = lambda_series(context(2, (-2,), 4))
    expect = {0: 1, 1: Fraction(-1, 2), 2: Fraction(-1, 2), 3: Fraction(1, 4)}
    assert all(lam.coefficient(k) == v for k, v in expect.items())
    assert lam.prec == 4


def test_lambda_residual_window():
    for p in (2, 3, 5):
        for coeffs in ((-p,), (p, p), (p, 0, p * p)):
            for P in (10, 30, 60):
                c = context(p, coeffs, P)
                assert lambda_series(c).coefficient(0) == 1
                assert low_coefficients_vanish(lambda_residual(c), P - c.E.e)


def test_commutator_examples():
    c = context(2, (-2,), 40)
    assert low_coefficients_vanish(
        nnabla_commutator(TruncatedLaurent({1: 1}, None, "u"), c), 38)
    assert nnabla_commutator(TruncatedLaurent({0: 1}, None, "u"),
                             c).vanishes_within_precision()
    rng = random.Random(51)
    for _ in range(10):
        g = series_poly(rng, 5)
        assert low_coefficients_vanish(nnabla_commutator(g, c), 38)


def test_commutator_rejects_t_series():
    with pytest.raises(InputError):
        nnabla_commutator(TruncatedLaurent({1: 1}), context(2, (-2,), 10))


def test_eta_examples():
    assert eta_matrix(ql.zeros(2, 2), 5) == LaurentMatrix(
        [[TruncatedLaurent({0: 1}, 5), TruncatedLaurent({}, 5)],
         [TruncatedLaurent({}, 5), TruncatedLaurent({0: 1}, 5)]])
    eta = eta_matrix([[0, 1], [0, 0]], 3)
    assert eta[0, 1].coefficient(1) == 1
    assert eta[0, 1].coefficient(2) == Fraction(1, 2)
    assert eta[0, 0].coefficient(0) == 1 and eta[1, 0].vanishes_within_precision()
    with pytest.raises(NotNilpotent):
        eta_matrix([[1, 0], [0, 0]], 3)


def test_eta_unipotent_and_inverse():
    rng = random.Random(52)
    for _ in range(10):
        d = rng.randint(1, 4)
        N = nilpotent(rng, d)
        P = 6
        fwd, inv = eta_matrix(N, P), eta_matrix(N, P, "inverse")
        ident = LaurentMatrix.identity(d)
        assert (fwd @ inv).agrees_with(ident, P)
        diff = LaurentMatrix([[fwd[i, j] - ident[i, j] for j in range(d)]
                              for i in range(d)])
        power = diff
        for _ in range(d - 1):
            power = (power @ diff).truncate(P)
        assert all(power[i, j].vanishes_within_precision() or
                   low_coefficients_vanish(power[i, j], P)
                   for i in range(d) for j in range(d))
        # eta is the identity modulo t
        assert all(fwd[i, j].coefficient(0) == ident[i, j].coefficient(0)
                   for i in range(d) for j in range(d))


def test_twist_factors():
    c = context(2, (-2,), 3)
    inv = rank1_twist_factor(-1, c)
    assert [inv.coefficient(k) for k in range(3)] == \
        [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    one = rank1_twist_factor(1, c)
    assert [one.coefficient(k) for k in range(2)] == [2, -1]
    assert [rank1_twist_factor(0, c).coefficient(k) for k in range(3)] == \
        [1, 0, 0]
    for p in (3, 5):
        f = rank1_twist_factor(1, context(p, (-p,), 4))
        assert [f.coefficient(k) for k in range(3)] == [p, -1, 0]


def test_eisenstein_validation():
    with pytest.raises(InputError):
        EisensteinPoly((4,), C2)
    with pytest.raises(InputError):
        EisensteinPoly((2, 1), C2)
    with pytest.raises(InputError):
        USeriesContext(EisensteinPoly((2, 2), C2), 2)


def test_zero_section_examples():
    rng = random.Random(53)
    for _ in range(10):
        d = rng.randint(1, 3)
        m = diagonal_module(rng, [0] * d, C2, conjugate=False)
        q = filtration_to_lattice(random_filtration(rng, d))
        assert is_zero_section(m, q)
    m, q = plane_example(False)
    assert not is_zero_section(m, q)
    assert not is_zero_section(m, q, "id")
    m1 = PhiNModule(1, [[2]], [[0]], C2)
    for k in range(-3, 4):
        q1 = HodgePinkLattice({"psi0": LaurentMatrix([[mono(1, -k)]])})
        assert is_zero_section(m1, q1) and is_zero_section(m1, q1, "id")


def test_zero_section_basis_invariance():
    rng = random.Random(54)
    for dependent in (False, True):
        m, q = plane_example(dependent)
        base = is_zero_section(m, q)
        for _ in range(5):
            g = unimodular_series(rng, 2, 2)
            q2 = q.map_components(lambda b: b.matrix @ g)
            assert is_zero_section(m, q2) == base
    for _ in range(10):
        F = random_filtration(rng, 3)
        q = filtration_to_lattice(F)
        m = diagonal_module(rng, [0, 0, 0], C2, conjugate=False)
        g = unimodular_series(rng, 3, 2)
        assert is_zero_section(m, q.map_components(lambda b: b.matrix @ g))


def test_id_convention_with_monodromy():
    # with N0 = E12 the section images differ between conventions
    lam = Fraction(3)
    m = PhiNModule(1, [[lam, 0], [0, 2 * lam]], [[0, 1], [0, 0]], C2)
    q_eta = filtration_to_lattice(random_filtration(random.Random(55), 2,
                                                    jumps={"psi0": (1, 0)}))
    assert is_zero_section(m, q_eta)
    q_id = apply_eta(m.Nm(), q_eta, "inverse")
    assert is_zero_section(m, q_id, "id")
    with pytest.raises(InsufficientPrecision):
        apply_eta(m.Nm(), q_eta, precision=1)


def test_wa_preserved_along_section():
    rng = random.Random(56)
    hits = 0
    for _ in range(60):
        d = rng.randint(1, 3)
        vals = [rng.randint(-1, 2) for _ in range(d)]
        m = diagonal_module(rng, vals, C2, chain=rng.random() < 0.3)
        head = [rng.randint(-2, 2) for _ in range(d - 1)]
        js = tuple(sorted(head + [sum(vals) - sum(head)], reverse=True))
        F = random_filtration(rng, d, jumps={"psi0": js})
        if not is_weakly_admissible(m, F).wa:
            continue
        hits += 1
        q = filtration_to_lattice(F)
        assert is_weakly_admissible(m, q).wa
        assert is_zero_section(m, q)
    assert hits >= 10

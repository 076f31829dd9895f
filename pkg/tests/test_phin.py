import random
from fractions import Fraction

import pytest
import sympy

from hodgepink import qlinalg as ql
from hodgepink.arithmetic import PrimeContext
from hodgepink.errors import (CasePreconditionViolated, InconsistentChain,
                              InputError, UnsupportedSpectrum)
from hodgepink.phin import (PhiNModule, adjoint_quotient_point,
                            admissible_blocks, charpoly_coefficients,
                            degeneration_identity_check,
                            generic_representative, jordan_component,
                            nilpotent_jordan_type, p_scheme_dimension,
                            random_conjugate, specialize, validate_module)

C2, C3 = PrimeContext(2), PrimeContext(3)


def E(d, i, j):
    m = ql.zeros(d, d)
    m[i][j] = Fraction(1)
    return m


def test_validate_examples():
    assert validate_module(PhiNModule(1, [[2, 0], [0, 2]], ql.zeros(2, 2),
                                      C2)).valid
    lam = Fraction(7, 3)
    assert validate_module(PhiNModule(1, [[lam, 0], [0, 2 * lam]],
                                      E(2, 0, 1), C2)).valid
    r = validate_module(PhiNModule(1, ql.identity(2), E(2, 0, 1), C2))
    assert not r.valid and r.failure == "RelationViolated"
    r = validate_module(PhiNModule(1, [[0, 0], [0, 1]], ql.zeros(2, 2), C2))
    assert r.failure == "SingularFrobenius"


def test_validate_matches_matrix_arithmetic():
    rng = random.Random(21)
    for _ in range(200):
        d = rng.randint(1, 4)
        parts = []
        left = d
        while left:
            k = rng.randint(1, left)
            parts.append(k)
            left -= k
        p = rng.choice([2, 3])
        m = generic_representative(parts, Fraction(rng.randint(1, 5)),
                                   PrimeContext(p), rng.randint(1, 2))
        m, _ = random_conjugate(m, rng)
        assert validate_module(m).valid
        # perturb N0 by one entry
        N = m.Nm()
        i, j = rng.randrange(d), rng.randrange(d)
        N[i][j] += rng.choice([-1, 1])
        bad = PhiNModule(m.f, m.F, N, m.ctx)
        q = Fraction(p) ** m.f
        relation = ql.mat_scale(ql.matmul(bad.Fm(), N), q) == \
            ql.matmul(N, bad.Fm())
        assert validate_module(bad).valid == relation


def test_jordan_examples():
    for p in (2, 3, 5):
        ctx = PrimeContext(p)
        lam = Fraction(5, 7)
        m = PhiNModule(1, [[lam, 0], [0, p * lam]], E(2, 0, 1), ctx)
        assert jordan_component(m).partition == (2,)
    assert jordan_component(PhiNModule(1, [[1, 0], [0, 3]], ql.zeros(2, 2),
                                       C2)).partition == (1, 1)
    with pytest.raises(UnsupportedSpectrum):
        jordan_component(PhiNModule(1, [[2, 0], [0, 2]], ql.zeros(2, 2), C2))
    with pytest.raises(UnsupportedSpectrum):
        jordan_component(PhiNModule(1, [[0, 2], [1, 0]], ql.zeros(2, 2), C3))


def test_degenerate_point_is_flagged():
    # eigenvalues chained but N0 = 0
    with pytest.raises(InconsistentChain):
        jordan_component(PhiNModule(1, [[1, 0], [0, 2]], ql.zeros(2, 2), C2))


def test_generic_representative_examples():
    m = generic_representative([2], 1, C2)
    assert m.Fm() == [[1, 0], [0, 2]] and m.Nm() == E(2, 0, 1)
    m = generic_representative([1, 1], 1, C2)
    assert ql.is_zero_matrix(m.Nm())
    eig = [m.F[0][0], m.F[1][1]]
    assert eig[0] != eig[1] and eig[1] != 2 * eig[0] and eig[0] != 2 * eig[1]
    m = generic_representative([3], 1, C2)
    assert m.Fm() == [[1, 0, 0], [0, 2, 0], [0, 0, 4]]
    assert m.Nm() == ql.mat_add(E(3, 0, 1), E(3, 1, 2))
    assert validate_module(m).valid
    with pytest.raises(InputError):
        generic_representative([2], 0, C2)


def test_charpoly_against_sympy_and_conjugation():
    rng = random.Random(22)
    x = sympy.Symbol("x")
    for _ in range(100):
        d = rng.randint(1, 4)
        F = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
              for _ in range(d)] for _ in range(d)]
        ours = charpoly_coefficients(F)
        M = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator)
                           for v in r] for r in F])
        ref = sympy.Poly(M.charpoly(x).as_expr(), x).all_coeffs()[1:]
        assert [sympy.Rational(c.numerator, c.denominator) for c in ours] \
            == list(ref)
        if ql.det(F) != 0:
            m = PhiNModule(1, F, ql.zeros(d, d), C3)
            conj, _ = random_conjugate(m, rng)
            assert adjoint_quotient_point(conj) == ours


def test_adjoint_quotient_examples():
    assert adjoint_quotient_point(PhiNModule(1, [[3, 0], [0, 3]],
                                             ql.zeros(2, 2), C3)) == (-6, 9)
    assert adjoint_quotient_point(PhiNModule(1, [[1, 0], [0, 2]],
                                             ql.zeros(2, 2), C3)) == (-3, 2)
    g = [[1, 1], [0, 1]]
    F = ql.matmul(ql.inverse(g), ql.matmul([[1, 0], [0, 2]], g))
    assert adjoint_quotient_point(PhiNModule(1, F, ql.zeros(2, 2), C3)) \
        == (-3, 2)


def test_p_scheme_dimension():
    assert [p_scheme_dimension(1, 2), p_scheme_dimension(2, 3),
            p_scheme_dimension(1, 1)] == [4, 18, 1]


def test_nilpotent_jordan_type():
    N = ql.mat_add(E(4, 0, 1), E(4, 1, 2))
    assert nilpotent_jordan_type(N) == (3, 1)
    assert nilpotent_jordan_type(ql.zeros(3, 3)) == (1, 1, 1)


def test_degeneration_case_d_upper_triangular():
    # p^f n_{mu,nu} = n_{mu-1,nu-1} with p = 2, rho_i = 1, rho_j = 2
    N = sympy.Matrix([[2, 5], [0, 1]])
    fam = degeneration_identity_check((2, 2), (1, 2), N, "d", 2)
    assert fam.holds
    z = fam.z
    assert fam.J_i[1, 1] == z and fam.J_j[1, 1] == 2 * z
    Ji, Jj, Nt = specialize(fam, 1)
    assert Nt == N and Ji == sympy.Matrix([[1, 1], [0, 1]])


def test_degeneration_case_b_keeps_block():
    basis = admissible_blocks(2, 1, 1, 3, 3, 1)
    assert basis
    for N in basis:
        assert N[1, 0] == 0
        fam = degeneration_identity_check((2, 1), (1, 3), N, "b", 3)
        assert fam.holds and fam.N_ij == N


def test_degeneration_preconditions():
    with pytest.raises(CasePreconditionViolated):
        degeneration_identity_check((2, 2), (1, 3), sympy.zeros(2, 2), "d", 2)
    with pytest.raises(CasePreconditionViolated):
        degeneration_identity_check((2, 1), (1, 2), sympy.zeros(2, 1), "a", 2)
    with pytest.raises(CasePreconditionViolated):
        degeneration_identity_check((2, 2), (1, 2), sympy.ones(2, 2), "d", 2)


def test_from_components_composes():
    m = PhiNModule.from_components([[[2, 0], [0, 1]], [[1, 0], [0, 4]]],
                                   ql.zeros(2, 2), C2)
    assert m.f == 2 and m.Fm() == [[2, 0], [0, 4]]

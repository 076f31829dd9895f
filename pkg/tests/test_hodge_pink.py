import random
from fractions import Fraction

import pytest

from hodgepink import qlinalg as ql
from hodgepink.cocharacters import Cocharacter, bruhat_leq
from hodgepink.dvr import LaurentMatrix, mono, smith_exponents
from hodgepink.errors import InputError, RankDeficient, WindowViolated
from hodgepink.hodge_pink import (HodgePinkLattice, KFiltration, bounded_by,
                                  filtration_to_lattice, hodge_polygon,
                                  lattice_to_filtration, validate_lattice)
from hodgepink.sampling import (dominant, lattice_with_polygon,
                                random_filtration)
from hodgepink.series import TruncatedLaurent

Z = TruncatedLaurent()


def two_zero_matrix():
    return LaurentMatrix.from_columns([[mono(1, -2), mono(1, -1)],
                                       [Z, mono(1, 0)]])


def lattice(mat, window=None):
    return HodgePinkLattice({"psi0": mat}, window)


def test_validate_examples():
    r = validate_lattice([("psi0", two_zero_matrix())], (2, 0))
    assert r["valid"] and r["minimal_windows"]["psi0"] == [2, 0]
    flat = LaurentMatrix.from_columns([[mono(1, 0), mono(1, 0)],
                                       [mono(1, 0), mono(1, 0)]])
    with pytest.raises(RankDeficient):
        validate_lattice([("psi0", flat)], (1, 1))
    with pytest.raises(WindowViolated):
        validate_lattice([("psi0", two_zero_matrix())], (0, 0))


def test_polygon_examples():
    assert hodge_polygon(lattice(two_zero_matrix())).mu("psi0") == (2, 0)
    for d in (1, 2, 3):
        assert hodge_polygon(lattice(LaurentMatrix.identity(d))) \
            .mu("psi0") == (0,) * d
    assert hodge_polygon(lattice(LaurentMatrix([[mono(1, -1)]]))) \
        .mu("psi0") == (1,)


def test_bounded_examples():
    q = lattice(two_zero_matrix())
    for method in ("primal", "dual"):
        assert bounded_by(q, Cocharacter.single((2, 0)), method)
        assert not bounded_by(q, Cocharacter.single((1, 1)), method)
        assert bounded_by(q, Cocharacter.single((3, -1)), method)


def test_filtration_to_lattice_examples():
    for k in (1, -1):
        q = filtration_to_lattice(KFiltration([("psi0", [[1]], [k])]))
        assert q.same_lattice(lattice(LaurentMatrix([[mono(1, -k)]])))
    F = KFiltration([("psi0", [[1, 0], [0, 1]], [2, 0])])
    expect = LaurentMatrix.from_columns([[mono(1, -2), Z], [Z, mono(1, 0)]])
    assert filtration_to_lattice(F).same_lattice(lattice(expect))


def test_lattice_to_filtration_examples():
    F = lattice_to_filtration(lattice(two_zero_matrix()))
    assert F.jump_type("psi0") == (2, 0)
    assert ql.span_equal(F.step("psi0", 1), [[1, 0]])
    assert ql.span_equal(F.step("psi0", 2), [[1, 0]])
    assert ql.span_equal(F.step("psi0", 0), [[1, 0], [0, 1]])
    F = lattice_to_filtration(lattice(LaurentMatrix([[mono(1, -1)]])))
    assert F.jump_type("psi0") == (1,)


def test_polygon_of_filtration_lattice_is_jump_type():
    rng = random.Random(31)
    for _ in range(60):
        d = rng.randint(1, 4)
        e, f = rng.choice([(1, 1), (2, 1), (1, 2)])
        F = random_filtration(rng, d, e, f)
        poly = hodge_polygon(filtration_to_lattice(F))
        for lab in F.labels:
            assert poly.mu(lab) == F.jump_type(lab)


def test_nesting():
    rng = random.Random(32)
    for _ in range(40):
        d = rng.randint(2, 3)
        mu_small = Cocharacter.single(dominant(rng, d, -2, 2))
        q = lattice_with_polygon(rng, mu_small, 1)
        bigger = Cocharacter.single(dominant(rng, d, -3, 3))
        if bruhat_leq(mu_small, bigger):
            assert bounded_by(q, bigger)
            assert bounded_by(q, bigger, "dual")
        assert bounded_by(q, mu_small)


def test_semicontinuity_random():
    rng = random.Random(33)
    seen = set()
    for _ in range(40):
        d = rng.randint(2, 3)
        mu = Cocharacter.single(dominant(rng, d, -2, 2))
        q = lattice_with_polygon(rng, mu, 1)
        assert hodge_polygon(q) == mu
        other = Cocharacter.single(dominant(rng, d, -2, 2))
        res = bounded_by(q, other)
        assert res == bounded_by(q, other, "dual") == bruhat_leq(mu, other)
        seen.add(res)
    assert seen == {True, False}


def test_roundtrip_and_smith_total():
    rng = random.Random(34)
    for _ in range(40):
        d = rng.randint(1, 4)
        F = random_filtration(rng, d)
        q = filtration_to_lattice(F)
        assert lattice_to_filtration(q) == F
        total = sum(smith_exponents(q.component("psi0").matrix).exponents)
        assert -total == sum(F.jump_type("psi0"))


def test_filtration_validation():
    with pytest.raises(InputError):
        KFiltration([("psi0", [[1, 0], [2, 0]], [1, 0])])
    with pytest.raises(InputError):
        KFiltration([("psi0", [[1, 0], [0, 1]], [0, 1])])

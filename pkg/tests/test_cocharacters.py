from fractions import Fraction
from itertools import product

import pytest

from hodgepink.cocharacters import (Cocharacter, bruhat_leq,
                                    combinatorial_gap, dimension_formulas,
                                    dominated_by, l_vector, reflex_degree)
from hodgepink.errors import InputError, ShapeMismatch

SWAP = [("psi1", "psi0")]


def dominant_vectors(d, lo, hi):
    return [v for v in product(range(hi, lo - 1, -1), repeat=d)
            if all(v[i] >= v[i + 1] for i in range(d - 1))]


def test_bruhat_chain():
    mu2 = Cocharacter.of((1, 1), (1, 1))
    mu1 = Cocharacter.of((2, 0), (1, 1))
    mu = Cocharacter.of((2, 0), (2, 0))
    assert bruhat_leq(mu2, mu1) and bruhat_leq(mu1, mu)
    assert not bruhat_leq(mu, mu1)


def test_bruhat_single_label():
    assert bruhat_leq(Cocharacter.single((1, 1)), Cocharacter.single((2, 0)))
    assert not bruhat_leq(Cocharacter.single((1, 0)),
                          Cocharacter.single((2, 0)))
    with pytest.raises(ShapeMismatch):
        bruhat_leq(Cocharacter.single((1, 1)), Cocharacter.single((1, 1, 0)))


def test_reflex_degree():
    assert reflex_degree(Cocharacter.of((2, 0), (1, 1)), SWAP).degree == 2
    r = reflex_degree(Cocharacter.of((2, 0), (2, 0)), SWAP)
    assert r.degree == 1 and r.orbits == (("psi0", "psi1"),)
    r = reflex_degree(Cocharacter.of((2, 0), (1, 1)))
    assert r.degree == 1 and r.orbits == (("psi0",), ("psi1",))
    with pytest.raises(InputError):
        reflex_degree(Cocharacter.of((2, 0), (1, 1)), [("psi0", "psi0")])


def test_l_vector_examples():
    assert l_vector(Cocharacter.single((2, 0))) == (0, 2)
    assert l_vector(Cocharacter.single((1, 1))) == (1, 2)
    assert l_vector(Cocharacter.of((2, 0), (1, 1))) == (Fraction(1, 2), 2)


def test_l_vector_methods_agree_exhaustively():
    for d in range(1, 5):
        vecs = dominant_vectors(d, -3, 3)
        for v in vecs:
            mu = Cocharacter.single(v)
            assert l_vector(mu) == l_vector(mu, "reconstruction")
        if d <= 3:
            for a, b in product(vecs, repeat=2):
                mu = Cocharacter.of(a, b)
                assert l_vector(mu) == l_vector(mu, "reconstruction")


def test_l_vector_increments():
    for v in dominant_vectors(3, -2, 2):
        l = (0,) + l_vector(Cocharacter.single(v))
        incs = [l[i + 1] - l[i] for i in range(3)]
        assert incs == [v[2], v[1], v[0]]
        assert incs == sorted(incs)


def test_dimension_examples():
    assert dimension_formulas(Cocharacter.single((2, 0))) == \
        {"dim_Q": 2, "dim_flag": 1, "dim_P": 4}
    r = dimension_formulas(Cocharacter.single((1, 1)))
    assert r["dim_Q"] == 0 and r["dim_flag"] == 0
    for a in range(-3, 4):
        r = dimension_formulas(Cocharacter.single((a,)))
        assert r["dim_Q"] == 0 and r["dim_flag"] == 0


def test_gap_examples():
    assert combinatorial_gap((1, 1, 1)) == {"gap": 1, "exceptional": True}
    assert combinatorial_gap((2, 1))["gap"] == 3
    assert combinatorial_gap((0, 2)) == {"gap": 4, "exceptional": False}


def test_gap_brute_force():
    for n in range(1, 6):
        for r in product(range(-3, 5), repeat=n):
            if sum(r) < n:
                continue
            out = combinatorial_gap(r)
            brute = sum(x * x for x in r) - sum(a * b for a, b in
                                                zip(r, r[1:]))
            assert out["gap"] == brute
            assert (brute > 1) != (r == (1,) * n)


def test_bruhat_partial_order():
    for d in range(1, 4):
        vecs = [Cocharacter.single(v) for v in dominant_vectors(d, -2, 2)]
        leq = {(i, j): bruhat_leq(a, b) for i, a in enumerate(vecs)
               for j, b in enumerate(vecs)}
        n = len(vecs)
        for i in range(n):
            assert leq[i, i]
            for j in range(n):
                if i != j and leq[i, j]:
                    assert not leq[j, i]
                    for k in range(n):
                        if leq[j, k]:
                            assert leq[i, k]


def test_l_monotone_under_bruhat():
    for d in range(1, 4):
        vecs = [Cocharacter.single(v) for v in dominant_vectors(d, -2, 2)]
        for a, b in product(vecs, repeat=2):
            if bruhat_leq(a, b):
                la, lb = l_vector(a), l_vector(b)
                assert all(x >= y for x, y in zip(la[:-1], lb[:-1]))
                assert la[-1] == lb[-1]


def test_dominated_by_matches_filter():
    for v in dominant_vectors(3, -2, 2):
        mu = Cocharacter.single(v)
        ours = set(dominated_by(v))
        ref = {w for w in dominant_vectors(3, -2, 2)
               if bruhat_leq(Cocharacter.single(w), mu)}
        assert ours == ref


def test_cocharacter_validation():
    with pytest.raises(InputError):
        Cocharacter.single((0, 1))
    with pytest.raises(ShapeMismatch):
        Cocharacter(2, (("psi0", (1, 0)),), e=2)

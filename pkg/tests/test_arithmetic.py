import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hodgepink.arithmetic import (PrimeContext, ValuedRational,
                                  format_rational, padic_valuation,
                                  parse_rational, unit_part)
from hodgepink.errors import InputError


def test_valuation_examples():
    assert padic_valuation(18, PrimeContext(3)) == 2
    assert padic_valuation(Fraction(3, 4), PrimeContext(2)) == -2
    assert padic_valuation(0, PrimeContext(7)) == math.inf
    assert ValuedRational(Fraction(5, 25)).valuation(PrimeContext(5)) == -1


def test_prime_context_rejects_composites():
    for bad in (0, 1, 4, 9, -3):
        with pytest.raises(InputError):
            PrimeContext(bad)


def _brute_order(q, p):
    # strip factors one at a time
    if q == 0:
        return math.inf
    n, d, v = abs(q.numerator), q.denominator, 0
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def test_discrete_valuation_laws_on_random_pairs():
    rng = random.Random(0)
    for _ in range(10_000):
        p = rng.choice([2, 3, 5, 7])
        ctx = PrimeContext(p)
        a = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        b = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        va, vb = padic_valuation(a, ctx), padic_valuation(b, ctx)
        assert va == _brute_order(a, p)
        assert padic_valuation(a * b, ctx) == va + vb
        vs = padic_valuation(a + b, ctx)
        assert vs >= min(va, vb)
        if va != vb:
            assert vs == min(va, vb)


rationals = st.fractions(max_denominator=10 ** 6)


@given(rationals)
def test_format_parse_roundtrip(q):
    s = format_rational(q)
    assert parse_rational(s) == q
    if q.denominator == 1:
        assert "/" not in s


@given(rationals.filter(lambda q: q != 0), st.sampled_from([2, 3, 5]))
def test_unit_part_has_valuation_zero(q, p):
    ctx = PrimeContext(p)
    u = unit_part(q, ctx)
    assert padic_valuation(u, ctx) == 0
    assert u * Fraction(p) ** padic_valuation(q, ctx) == q


def test_parse_rejects_garbage():
    for bad in ("1/0", "x", None, True, 1.5):
        with pytest.raises(InputError):
            parse_rational(bad)

"""Exact rationals with p-adic valuations.

Valuations are additive and normalized by val(p) = 1, so a bound of the
form |x| <= |p|^m becomes val(x) >= m.  Zero has valuation +infinity,
represented by ``math.inf`` (it compares correctly against Fractions).
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import InputError

INF = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InputError(f"p = {self.p!r} is not a prime", p=self.p)

    def val(self, q) -> "Fraction | float":
        return padic_valuation(q, self)


def _int_order(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def padic_valuation(q, ctx) -> "int | float":
    """Exact p-adic order of a rational number; ``inf`` for zero."""
    p = ctx.p if isinstance(ctx, PrimeContext) else int(ctx)
    q = Fraction(q)
    if q == 0:
        return INF
    return _int_order(abs(q.numerator), p) - _int_order(q.denominator, p)


@dataclass(frozen=True)
class ValuedRational:
    """A rational scalar; its valuation is recomputed on demand."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def valuation(self, ctx: PrimeContext):
        return padic_valuation(self.value, ctx)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise InputError(f"not a rational: {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {s!r}") from exc
    raise InputError(f"not a rational: {s!r}")


def unit_part(q, ctx) -> Fraction:
    """q / p^val(q) for nonzero q."""
    q = Fraction(q)
    v = padic_valuation(q, ctx)
    return q / Fraction(ctx.p) ** v

"""Truncated Laurent series in one variable over the rationals.

A series is a finite map exponent -> coefficient together with a precision
P, meaning the value is only known modulo x^P.  ``prec=None`` marks an
exact Laurent polynomial.  Arithmetic never reports coefficients at or
beyond the provable window.
"""

from fractions import Fraction
import math

from .errors import InputError, NonzeroConstantTerm, NotAUnit


def _pmin(*ps):
    """Minimum of precisions where None stands for +infinity."""
    finite = [p for p in ps if p is not None and p != math.inf]
    return min(finite) if finite else None


def _as_num(p):
    return math.inf if p is None else p


class TruncatedLaurent:
    __slots__ = ("coeffs", "prec", "var")

    def __init__(self, coeffs=None, prec=None, var="t"):
        if prec is not None and prec == math.inf:
            prec = None
        if prec is not None:
            prec = int(prec)
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                k = int(k)
                c = Fraction(c)
                if c != 0 and (prec is None or k < prec):
                    clean[k] = c
        self.coeffs = clean
        self.prec = prec
        self.var = var

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c, prec=None, var="t"):
        return cls({0: c}, prec, var)

    @classmethod
    def monomial(cls, c, k, prec=None, var="t"):
        return cls({k: c}, prec, var)

    @classmethod
    def from_list(cls, coeffs, start=0, prec=None, var="t"):
        return cls({start + i: c for i, c in enumerate(coeffs)}, prec, var)

    @classmethod
    def zero(cls, prec=None, var="t"):
        return cls({}, prec, var)

    def _coerce(self, other):
        if isinstance(other, TruncatedLaurent):
            if other.var != self.var:
                raise InputError(
                    f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedLaurent({0: other}, None, self.var)
        return NotImplemented

    # -- inspection --------------------------------------------------------
    @property
    def is_exact(self):
        return self.prec is None

    def order(self):
        """Lowest exponent with a nonzero coefficient.

        For an inexact series with no visible coefficient this is its
        precision (the value may vanish to that order); exact zero gives
        ``math.inf``.
        """
        if self.coeffs:
            return min(self.coeffs)
        return _as_num(self.prec)

    def has_certified_order(self):
        return bool(self.coeffs)

    def is_zero(self):
        """Exactly zero (not merely zero within precision)."""
        return not self.coeffs and self.prec is None

    def is_indeterminate(self):
        return not self.coeffs and self.prec is not None

    def degree(self):
        return max(self.coeffs) if self.coeffs else -math.inf

    def coefficient(self, k):
        if self.prec is not None and k >= self.prec:
            raise InputError(f"coefficient x^{k} lies beyond precision "
                             f"{self.prec}")
        return self.coeffs.get(k, Fraction(0))

    def lowest_coefficient(self):
        if not self.coeffs:
            raise NotAUnit("no certified lowest coefficient")
        return self.coeffs[min(self.coeffs)]

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(
            other, TruncatedLaurent) else other
        if other is NotImplemented:
            return NotImplemented
        return (self.var == other.var and self.prec == other.prec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.var, self.prec, tuple(sorted(self.coeffs.items()))))

    def agrees_with(self, other, upto=None):
        """Coefficientwise equality on the common window (and below upto)."""
        other = self._coerce(other)
        bound = _pmin(self.prec, other.prec, upto)
        keys = set(self.coeffs) | set(other.coeffs)
        for k in keys:
            if bound is not None and k >= bound:
                continue
            if self.coeffs.get(k, 0) != other.coeffs.get(k, 0):
                return False
        return True

    def vanishes_within_precision(self):
        return not self.coeffs

    # -- arithmetic --------------------------------------------------------
    def __neg__(self):
        return TruncatedLaurent({k: -c for k, c in self.coeffs.items()},
                                self.prec, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = _pmin(self.prec, other.prec)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TruncatedLaurent(out, prec, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return TruncatedLaurent({}, self.prec, self.var)
        return TruncatedLaurent({k: c * v for k, v in self.coeffs.items()},
                                self.prec, self.var)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # a = A + O(x^Pa), b = B + O(x^Pb): the error is
        # A*O(x^Pb) + B*O(x^Pa), known from exponent min(Pa+ord b, Pb+ord a)
        pa, pb = _as_num(self.prec), _as_num(other.prec)
        prec = min(pa + other.order(), pb + self.order())
        prec = None if prec == math.inf else prec
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                if prec is not None and k >= prec:
                    continue
                out[k] = out.get(k, 0) + a * b
        return TruncatedLaurent(out, prec, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return self * other.inverse()

    def shift(self, k):
        """Multiply by x^k."""
        prec = None if self.prec is None else self.prec + k
        return TruncatedLaurent({e + k: c for e, c in self.coeffs.items()},
                                prec, self.var)

    def truncate(self, prec):
        """Forget everything from x^prec on."""
        if prec is None:
            return self
        return TruncatedLaurent(self.coeffs, _pmin(self.prec, prec), self.var)

    def inverse(self, prec=None):
        """Multiplicative inverse of x^v * (unit).

        For an exact input the inverse is an infinite series, so a target
        precision must be supplied.  For an inexact input the provable
        precision is P - 2v.
        """
        if not self.coeffs:
            raise NotAUnit("series vanishes within its precision; "
                           "no certified lowest coefficient")
        v = min(self.coeffs)
        own = None if self.prec is None else self.prec - 2 * v
        target = _pmin(own, prec)
        if target is None:
            if len(self.coeffs) == 1:
                return TruncatedLaurent({-v: 1 / self.coeffs[v]}, None,
                                        self.var)
            raise NotAUnit("inverse of an exact non-monomial needs a "
                           "target precision")
        n = target + v  # number of unit-part coefficients required
        u = [self.coeffs.get(v + i, Fraction(0)) for i in range(max(n, 0))]
        inv0 = 1 / u[0] if u else None
        b = []
        for k in range(max(n, 0)):
            if k == 0:
                b.append(inv0)
                continue
            s = Fraction(0)
            for i in range(1, k + 1):
                ui = u[i]
                if ui:
                    s += ui * b[k - i]
            b.append(-inv0 * s)
        return TruncatedLaurent({k - v: c for k, c in enumerate(b)}, target,
                                self.var)

    invert_unit = inverse

    def __pow__(self, n, prec=None):
        n = int(n)
        if n < 0:
            return self.inverse(prec).__pow__(-n)
        result = TruncatedLaurent({0: 1}, None, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def power(self, n, prec=None):
        out = self.__pow__(n, prec)
        return out.truncate(prec) if prec is not None else out

    def frobenius(self, p):
        """Substitute x -> x^p."""
        prec = None if self.prec is None else self.prec * p
        return TruncatedLaurent({k * p: c for k, c in self.coeffs.items()},
                                prec, self.var)

    frobenius_substitute = frobenius

    def derivative(self):
        # d/dx lowers the precision by one
        prec = None if self.prec is None else self.prec - 1
        return TruncatedLaurent({k - 1: k * c for k, c in self.coeffs.items()
                                 if k != 0}, prec, self.var)

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for k in sorted(self.coeffs):
                c = self.coeffs[k]
                if k == 0:
                    parts.append(f"{c}")
                else:
                    parts.append(f"{c}*{self.var}^{k}")
            body = " + ".join(parts)
        if self.prec is not None:
            body += f" + O({self.var}^{self.prec})"
        return body


def log_one_minus(s, prec=None):
    """log(1 - s) = -sum_{k>=1} s^k / k, truncated to the precision of s.

    An exact argument needs an explicit ``prec``.
    """
    if s.coeffs and min(s.coeffs) <= 0:
        raise NonzeroConstantTerm(
            "log(1 - s) needs s of strictly positive order",
            order=min(s.coeffs))
    target = _pmin(s.prec, prec)
    if target is None:
        raise InputError("an exact argument needs a target precision")
    s = s.truncate(target)
    out = TruncatedLaurent({}, target, s.var)
    if not s.coeffs:
        return out
    v = min(s.coeffs)
    power = s
    k = 1
    while k * v < target:
        out = out - power.scale(Fraction(1, k))
        power = (power * s).truncate(target)
        k += 1
    return out


def laurent_arith(a, b, op, p=None, prec=None):
    """Dispatch one of the basic series operations by name."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "invert_unit":
        return a.inverse(prec)
    if op == "frobenius_substitute":
        if a.var != "u":
            raise InputError("Frobenius substitution acts on the variable u")
        if p is None:
            raise InputError("Frobenius substitution needs p")
        return a.frobenius(p)
    raise InputError(f"unknown series operation {op!r}")

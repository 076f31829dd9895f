"""Linear algebra over Q[[t]] and Q((t)).

Lattices are stored by exact Laurent-polynomial basis matrices.  Most
questions about a lattice q with t^n p <= q <= t^-m p are finite linear
algebra over Q once q is replaced by its image in the window space
t^-m p / t^n p, which has dimension d(m + n).  Intersections, leading
terms and filtrations are all computed there.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import math

from . import qlinalg as ql
from .errors import (InputError, InsufficientPrecision, RankDeficient,
                     ShapeMismatch, WindowViolated)
from .series import TruncatedLaurent

ZERO = TruncatedLaurent()
ONE = TruncatedLaurent({0: 1})


def _as_series(x):
    if isinstance(x, TruncatedLaurent):
        return x
    return TruncatedLaurent({0: Fraction(x)})


def mono(c, k):
    return TruncatedLaurent({k: c})


class LaurentMatrix:
    """A rows x cols matrix of Laurent series in t."""

    __slots__ = ("entries", "rows", "cols", "_minors")

    def __init__(self, entries):
        rows = [[_as_series(x) for x in row] for row in entries]
        if not rows or not rows[0]:
            raise ShapeMismatch("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged matrix")
        self.entries = rows
        self.rows = len(rows)
        self.cols = width
        self._minors = {}

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)]
                    for i in range(n)])

    @classmethod
    def from_rational(cls, mat):
        return cls([[TruncatedLaurent({0: x}) for x in row] for row in mat])

    @classmethod
    def diagonal_monomials(cls, exps):
        n = len(exps)
        return cls([[mono(1, exps[i]) if i == j else ZERO for j in range(n)]
                    for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        return cls([list(r) for r in zip(*cols)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return LaurentMatrix([list(c) for c in zip(*self.entries)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_exact(self):
        return all(x.is_exact for row in self.entries for x in row)

    def min_order(self):
        return min(x.order() for row in self.entries for x in row)

    def precision(self):
        ps = [x.prec for row in self.entries for x in row
              if x.prec is not None]
        return min(ps) if ps else None

    def truncate(self, prec):
        return LaurentMatrix([[x.truncate(prec) for x in row]
                              for row in self.entries])

    def exactify(self):
        """Treat every stored coefficient as exact."""
        return LaurentMatrix([[TruncatedLaurent(x.coeffs, None, x.var)
                               for x in row] for row in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch("inner dimensions differ")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def __eq__(self, other):
        return (isinstance(other, LaurentMatrix)
                and self.entries == other.entries)

    def agrees_with(self, other, upto=None):
        if self.shape != other.shape:
            return False
        return all(a.agrees_with(b, upto) for ra, rb in
                   zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def minor(self, rows, cols):
        """Determinant of the submatrix on the given row/column tuples."""
        rows = tuple(rows)
        cols = tuple(cols)
        if len(rows) != len(cols):
            raise ShapeMismatch("minor must be square")
        if not rows:
            return ONE
        key = (rows, cols)
        hit = self._minors.get(key)
        if hit is not None:
            return hit
        r0 = rows[0]
        rest = rows[1:]
        acc = ZERO
        for idx, c in enumerate(cols):
            a = self.entries[r0][c]
            if a.is_zero():
                continue
            sub = self.minor(rest, cols[:idx] + cols[idx + 1:])
            if sub.is_zero():
                continue
            term = a * sub
            acc = acc - term if idx % 2 else acc + term
        self._minors[key] = acc
        return acc

    def det(self):
        if self.rows != self.cols:
            raise ShapeMismatch("determinant of a non-square matrix")
        n = self.rows
        return self.minor(range(n), range(n))

    def adjugate(self):
        n = self.rows
        if n == 1:
            return LaurentMatrix([[ONE]])
        out = [[None] * n for _ in range(n)]
        full = tuple(range(n))
        for i in range(n):
            for j in range(n):
                rows = full[:j] + full[j + 1:]
                cols = full[:i] + full[i + 1:]
                m = self.minor(rows, cols)
                out[i][j] = -m if (i + j) % 2 else m
        return LaurentMatrix(out)

    def compound(self, j):
        """The j-th exterior power in the lexicographic subset basis."""
        rsub = list(combinations(range(self.rows), j))
        csub = list(combinations(range(self.cols), j))
        return LaurentMatrix([[self.minor(r, c) for c in csub] for r in rsub])

    def __repr__(self):
        return "LaurentMatrix(%r)" % (self.entries,)


# -- Smith normal form ------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    exponents: tuple
    U: LaurentMatrix
    V: LaurentMatrix


def _working_precision(M):
    """Precision that certifies every elementary divisor of an exact M."""
    d = M.rows
    det = M.det()
    if det.is_zero():
        raise RankDeficient("determinant vanishes")
    low = M.min_order()
    D = det.order()
    # t^-low M is integral with det order D - d*low, so every divisor is
    # below D - (d-1)*low + 1; keep a guard of d on top of that
    return D - (d - 1) * low + 1 + d


def smith_exponents(M: LaurentMatrix) -> SmithForm:
    """t-adic elementary divisors a_1 <= ... <= a_r with transforms U, V.

    U M V agrees with diag(t^a) on the precision window.  Pivots have
    minimal t-order, ties broken by lowest (row, col).
    """
    if M.rows != M.cols:
        raise ShapeMismatch("Smith form is computed for square matrices")
    d = M.rows
    if M.is_exact:
        A = M.truncate(_working_precision(M)).entries
    else:
        A = [list(r) for r in M.entries]
    A = [list(r) for r in A]
    U = [list(r) for r in LaurentMatrix.identity(d).entries]
    V = [list(r) for r in LaurentMatrix.identity(d).entries]
    exps = []
    for k in range(d):
        best = None
        for i in range(k, d):
            for j in range(k, d):
                x = A[i][j]
                if x.has_certified_order():
                    o = x.order()
                    if best is None or o < best[0]:
                        best = (o, i, j)
        if best is None:
            if all(A[i][j].is_zero() for i in range(k, d)
                   for j in range(k, d)):
                raise RankDeficient("matrix has rank %d < %d" % (k, d))
            raise InsufficientPrecision(
                "no pivot with certified order", step=k)
        o, pi, pj = best
        for i in range(k, d):
            for j in range(k, d):
                x = A[i][j]
                if x.is_indeterminate() and x.prec <= o:
                    raise InsufficientPrecision(
                        "pivot order cannot be certified", step=k, order=o)
        A[k], A[pi] = A[pi], A[k]
        U[k], U[pi] = U[pi], U[k]
        for row in A:
            row[k], row[pj] = row[pj], row[k]
        for row in V:
            row[k], row[pj] = row[pj], row[k]
        a = A[k][k]
        ainv = a.inverse()
        for i in range(k + 1, d):
            if A[i][k].is_zero():
                continue
            c = A[i][k] * ainv
            for j in range(k, d):
                A[i][j] = A[i][j] - c * A[k][j]
            for j in range(d):
                U[i][j] = U[i][j] - c * U[k][j]
            A[i][k] = TruncatedLaurent({}, A[i][k].prec)
        for j in range(k + 1, d):
            if A[k][j].is_zero():
                continue
            c = A[k][j] * ainv
            for i in range(d):
                V[i][j] = V[i][j] - c * V[i][k]
            # entries below the pivot are zero only up to their precision
            for i in range(k + 1, d):
                A[i][j] = A[i][j] - c * A[i][k]
            A[k][j] = TruncatedLaurent({}, A[k][j].prec)
        # normalize the pivot to exactly t^o
        uinv = a.shift(-o).inverse()
        U[k] = [x * uinv for x in U[k]]
        A[k][k] = mono(1, o)
        exps.append(o)
    return SmithForm(tuple(exps), LaurentMatrix(U), LaurentMatrix(V))


# -- window space -----------------------------------------------------------

def _window_vector(col, m, n, d, shift=0):
    """Coefficients of t^shift * col on exponents [-m, n)."""
    vec = [Fraction(0)] * (d * (m + n))
    for r, x in enumerate(col):
        for e, c in x.coeffs.items():
            ee = e + shift
            if -m <= ee < n:
                vec[(ee + m) * d + r] = c
    return vec


def window_rows(cols, m, n, d):
    """Echelon basis of the image of span_{Q[[t]]}(cols) in t^-m p/t^n p."""
    gens = []
    for col in cols:
        o = min(x.order() for x in col)
        if o == math.inf:
            continue
        for k in range(max(0, -m - o), n - o):
            gens.append(_window_vector(col, m, n, d, k))
    if not gens:
        return [], []
    return ql.rref(gens)


def basis_from_window(rows, pivots, m, n, d):
    """Q[[t]]-basis of the lattice (window subspace) + t^n p.

    Returns (orders, lead vectors, basis columns) with orders
    nondecreasing; the leading coefficient vectors are independent.
    """
    chosen = []
    orders = []
    columns = []
    for row, pc in zip(rows, pivots):
        e = pc // d - m
        lead = row[(e + m) * d:(e + m + 1) * d]
        if ql.in_span(chosen, lead):
            continue
        chosen.append(lead)
        orders.append(e)
        col = []
        for r in range(d):
            coeffs = {}
            for ee in range(e, n):
                c = row[(ee + m) * d + r]
                if c:
                    coeffs[ee] = c
            col.append(TruncatedLaurent(coeffs))
        columns.append(col)
        if len(chosen) == d:
            break
    for r in range(d):
        if len(chosen) == d:
            break
        unit = [Fraction(int(i == r)) for i in range(d)]
        if not ql.in_span(chosen, unit):
            chosen.append(unit)
            orders.append(n)
            columns.append([mono(1, n) if i == r else ZERO
                            for i in range(d)])
    return orders, chosen, columns


# -- lattices ---------------------------------------------------------------

class LatticeBasis:
    """A full Q[[t]]-lattice in Q((t))^d with a certified window (m, n).

    The basis matrix has the generators as columns.  Inexact input entries
    are truncated to t^(n+1), which does not change the lattice once the
    window is certified.
    """

    def __init__(self, matrix, window=None):
        if not isinstance(matrix, LaurentMatrix):
            matrix = LaurentMatrix(matrix)
        if matrix.rows != matrix.cols:
            raise ShapeMismatch("lattice basis must be square")
        if not matrix.is_exact:
            if window is None:
                raise InsufficientPrecision(
                    "an inexact basis needs a declared window")
            n = window[1]
            p = matrix.precision()
            if p is not None and p < n + 1:
                raise InsufficientPrecision(
                    "basis entries must be known modulo t^(n+1)",
                    precision=p, needed=n + 1)
            matrix = matrix.truncate(n + 1).exactify()
        self.matrix = matrix
        self.d = matrix.rows
        det = matrix.det()
        if det.is_zero():
            raise RankDeficient("basis matrix is singular")
        self.det = det
        adj = matrix.adjugate()
        self._adj = adj
        m0 = -matrix.min_order()
        dord = det.order()
        n0 = max(dord - adj[i, j].order() for i in range(self.d)
                 for j in range(self.d) if not adj[i, j].is_zero())
        self.minimal_window = (int(m0), int(n0))
        if window is None:
            window = (max(int(m0), 0), max(int(n0), 0))
        m, n = int(window[0]), int(window[1])
        if m0 > m:
            raise WindowViolated("lattice is not inside t^-m p", m=m,
                                 needed=m0)
        if n0 > n:
            raise WindowViolated("t^n p is not inside the lattice", n=n,
                                 needed=n0)
        self.window = (m, n)
        self._rows = None

    # membership through the adjugate: x in q iff adj(B) x has order
    # >= ord det B in every coordinate
    def contains(self, vec):
        vec = [_as_series(x) for x in vec]
        dord = self.det.order()
        for i in range(self.d):
            acc = ZERO
            for j in range(self.d):
                a = self._adj[i, j]
                if a.is_zero() or vec[j].is_zero():
                    continue
                acc = acc + a * vec[j]
            if acc.order() < dord:
                return False
        return True

    def contains_lattice(self, other):
        return all(self.contains(c) for c in other.matrix.columns())

    def same_lattice(self, other):
        return (self.d == other.d and self.contains_lattice(other)
                and other.contains_lattice(self))

    def det_order(self):
        return self.det.order()

    def hodge_number(self):
        """h with Lambda^d q = t^-h Lambda^d p."""
        return -self.det.order()

    def window_space(self, window=None):
        m, n = window or self.window
        if window is None and self._rows is not None:
            return self._rows
        rows = window_rows(self.matrix.columns(), m, n, self.d)
        if window is None:
            self._rows = rows
        return rows

    def leading_data(self):
        """(orders, lead vectors, echelon basis columns) of the lattice."""
        m, n = self.window
        rows, piv = self.window_space()
        return basis_from_window(rows, piv, m, n, self.d)

    def echelon(self):
        orders, _, cols = self.leading_data()
        return LatticeBasis(LaurentMatrix.from_columns(cols), self.window)

    def smith(self):
        return smith_exponents(self.matrix)

    def __repr__(self):
        return "LatticeBasis(%r, window=%r)" % (self.matrix, self.window)


def standard_lattice(d):
    return LatticeBasis(LaurentMatrix.identity(d), (0, 0))


def lattice_intersection(q: LatticeBasis, S) -> LatticeBasis:
    """q & S((t)) as a lattice in the coordinates of the columns of S.

    Membership of a window vector in S((t)) is a finite set of Q-linear
    constraints per power of t; the intersection is read off in the
    window space and lifted back to a saturated basis.
    """
    S = ql.to_fraction_matrix(S)
    d = q.d
    if len(S) != d:
        raise ShapeMismatch("subspace basis has the wrong height")
    dp = len(S[0]) if S else 0
    if dp == 0 or ql.rank(ql.transpose(S)) != dp:
        raise RankDeficient("subspace basis must have full column rank")
    m, n = q.window
    L = m + n
    rows, _ = q.window_space()
    # functionals vanishing on the window image of q
    ann = ql.nullspace(rows, d * L) if rows else [
        [Fraction(int(i == j)) for i in range(d * L)] for j in range(d * L)]
    constraints = []
    for y in ann:
        c = [Fraction(0)] * (dp * L)
        for e in range(L):
            for r in range(d):
                yr = y[e * d + r]
                if not yr:
                    continue
                for col in range(dp):
                    s = S[r][col]
                    if s:
                        c[e * dp + col] += yr * s
        if any(c):
            constraints.append(c)
    if constraints:
        sub = ql.nullspace(constraints, dp * L)
    else:
        sub = [[Fraction(int(i == j)) for i in range(dp * L)]
               for j in range(dp * L)]
    if sub:
        srows, spiv = ql.rref(sub)
    else:
        srows, spiv = [], []
    _, _, cols = basis_from_window(srows, spiv, m, n, dp)
    return LatticeBasis(LaurentMatrix.from_columns(cols), (m, n))


def exterior_lattice(q: LatticeBasis, j: int) -> LatticeBasis:
    """Lambda^j q from the j x j minors, in lexicographic subset order."""
    if not 1 <= j <= q.d:
        raise InputError("exterior degree out of range", j=j, d=q.d)
    m, n = q.window
    return LatticeBasis(q.matrix.compound(j), (j * m, j * n))


def gcd_minor_orders(M: LaurentMatrix):
    """Minimal order of the k x k minors for k = 1..r (an SNF oracle)."""
    d = min(M.rows, M.cols)
    out = []
    for k in range(1, d + 1):
        best = math.inf
        for r in combinations(range(M.rows), k):
            for c in combinations(range(M.cols), k):
                best = min(best, M.minor(r, c).order())
        out.append(best)
    return out

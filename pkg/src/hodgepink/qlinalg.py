"""Dense linear algebra over the rationals with Fractions.

Matrices are lists of rows; vectors are lists.  Subspaces of Q^n are
handed around as lists of spanning vectors and compared through their
reduced row echelon forms.
"""

from fractions import Fraction

from .errors import RankDeficient, ShapeMismatch


def to_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def matmul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ShapeMismatch("inner dimensions differ")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0))
             for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_pow(a, k):
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def is_zero_matrix(a):
    return all(x == 0 for row in a for x in row)


def rref(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullspace(a, ncols=None):
    """Basis of {x : a x = 0}."""
    if not a:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    n = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if len(red) < n or pivots[:n] != list(range(n)):
        raise RankDeficient("matrix is singular")
    return [row[n:] for row in red]


def det(a):
    n = len(a)
    m = [list(r) for r in a]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


# -- subspaces given by spanning vectors ---------------------------------

def span_basis(vectors):
    red, _ = rref(vectors)
    return red


def span_key(vectors):
    """Canonical hashable key of span(vectors)."""
    return tuple(tuple(r) for r in span_basis(vectors))


def span_dim(vectors):
    return rank(vectors) if vectors else 0


def in_span(vectors, v):
    if not vectors:
        return all(x == 0 for x in v)
    return rank(list(vectors) + [list(v)]) == rank(vectors)


def span_contains(big, small):
    return all(in_span(big, v) for v in small)


def span_equal(a, b):
    return span_key(a) == span_key(b)


def intersect_spans(a, b):
    """Basis of span(a) & span(b) for lists of vectors in Q^n."""
    if not a or not b:
        return []
    # x = sum c_i a_i = sum d_j b_j
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    mat = transpose(cols)
    sols = nullspace(mat)
    out = []
    for s in sols:
        vec = [Fraction(0)] * len(a[0])
        for c, v in zip(s[:len(a)], a):
            if c:
                vec = [x + c * y for x, y in zip(vec, v)]
        out.append(vec)
    return span_basis(out)


def extend_basis(vectors, n):
    """Extend independent vectors to a basis of Q^n with standard vectors."""
    out = [list(v) for v in vectors]
    for i in range(n):
        e = [Fraction(int(i == j)) for j in range(n)]
        if not in_span(out, e):
            out.append(e)
    return out


def columns(mat):
    return transpose(mat)


def from_columns(cols):
    return transpose(cols)


def left_inverse(s):
    """A rational matrix L with L S = I for S of full column rank."""
    st = transpose(s)
    gram = matmul(st, s)
    return matmul(inverse(gram), st)

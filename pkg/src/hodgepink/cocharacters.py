"""Dominant cocharacters of GL_d indexed by embeddings, and their numerics."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ShapeMismatch


@dataclass(frozen=True)
class Cocharacter:
    d: int
    weights: tuple      # ((label, (mu_1 >= ... >= mu_d)), ...)
    e: int = 1
    f: int = 1

    def __post_init__(self):
        ws = self.weights
        if isinstance(ws, dict):
            ws = tuple(ws.items())
        ws = tuple((str(k), tuple(int(x) for x in v)) for k, v in ws)
        object.__setattr__(self, "weights", ws)
        labels = [k for k, _ in ws]
        if len(set(labels)) != len(labels):
            raise InputError("embedding labels must be distinct")
        for k, v in ws:
            if len(v) != self.d:
                raise ShapeMismatch(f"weights of {k} must have length d")
            if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
                raise InputError(f"weights of {k} are not nonincreasing",
                                 label=k, weights=v)
        if len(ws) != self.e * self.f:
            raise ShapeMismatch("number of embeddings must equal e*f",
                                embeddings=len(ws), ef=self.e * self.f)

    @classmethod
    def single(cls, mu, e=1, f=1):
        """All e*f embeddings carry the same weight vector."""
        mu = tuple(mu)
        return cls(len(mu), tuple((f"psi{i}", mu) for i in range(e * f)),
                   e, f)

    @classmethod
    def of(cls, *mus, e=None, f=1):
        e = len(mus) // f if e is None else e
        return cls(len(mus[0]), tuple((f"psi{i}", tuple(m))
                                      for i, m in enumerate(mus)), e, f)

    @property
    def labels(self):
        return tuple(k for k, _ in self.weights)

    @property
    def ef(self):
        return self.e * self.f

    def mu(self, label):
        return dict(self.weights)[label]

    def vectors(self):
        return [v for _, v in self.weights]


def _check_same_shape(a, b):
    if a.d != b.d or set(a.labels) != set(b.labels):
        raise ShapeMismatch("cocharacters differ in rank or embeddings")


def bruhat_leq(mu_small: Cocharacter, mu_big: Cocharacter) -> bool:
    """mu_small <= mu_big: dominated partial sums, equal totals."""
    _check_same_shape(mu_small, mu_big)
    for label in mu_big.labels:
        a, b = mu_small.mu(label), mu_big.mu(label)
        sa = sb = 0
        for j in range(mu_big.d):
            sa += a[j]
            sb += b[j]
            if sb < sa:
                return False
        if sa != sb:
            return False
    return True


def _generate_group(gens, labels):
    ident = tuple(labels)
    group = {ident}
    frontier = [ident]
    index = {lab: i for i, lab in enumerate(labels)}
    gmaps = []
    for g in gens:
        g = tuple(str(x) for x in g)
        if sorted(g) != sorted(labels):
            raise InputError("Galois generator is not a permutation of the "
                             "embedding labels", generator=g)
        gmaps.append(g)
    while frontier:
        new = []
        for h in frontier:
            for g in gmaps:
                # composite: label k -> g(h(k))
                comp = tuple(g[index[h[i]]] for i in range(len(labels)))
                if comp not in group:
                    group.add(comp)
                    new.append(comp)
        frontier = new
    return group


@dataclass(frozen=True)
class ReflexReport:
    degree: int
    group_order: int
    stabilizer_order: int
    orbits: tuple


def reflex_degree(mu: Cocharacter, generators=()) -> ReflexReport:
    """Index of the stabilizer of mu in the group generated by the action.

    A generator is the tuple of images of the labels in their stored order.
    """
    labels = list(mu.labels)
    group = _generate_group(list(generators), labels)
    w = dict(mu.weights)
    stab = [g for g in group
            if all(w[g[i]] == w[labels[i]] for i in range(len(labels)))]
    seen = set()
    orbits = []
    index = {lab: i for i, lab in enumerate(labels)}
    for lab in labels:
        if lab in seen:
            continue
        orb = sorted({g[index[lab]] for g in group}, key=index.get)
        seen.update(orb)
        orbits.append(tuple(orb))
    return ReflexReport(len(group) // len(stab), len(group), len(stab),
                        tuple(orbits))


def l_vector(mu: Cocharacter, method="direct"):
    """The vector (l_1, ..., l_d) of normalized trailing partial sums."""
    if method == "direct":
        return _l_direct(mu)
    if method == "reconstruction":
        return _l_reconstruction(mu)
    raise InputError(f"unknown method {method!r}")


def _l_direct(mu):
    d = mu.d
    out = []
    for i in range(1, d + 1):
        total = sum(sum(v[d - i:]) for v in mu.vectors())
        out.append(Fraction(total, mu.ef))
    return tuple(out)


def _l_reconstruction(mu):
    # Writing mu_psi through its distinct values x_1 > ... > x_r with
    # n_j = #{k : mu_k >= x_j}, an i-dimensional subspace in general
    # position meets the j-th step of the flag in m_j(i) = max(0, n_j+i-d)
    # dimensions, and the Hodge number telescopes over the steps.
    d = mu.d
    out = []
    for i in range(1, d + 1):
        total = 0
        for v in mu.vectors():
            xs = sorted(set(v), reverse=True)
            ns = [max(k + 1 for k in range(d) if v[k] >= x) for x in xs]
            ms = [max(0, nj + i - d) for nj in ns]
            r = len(xs)
            acc = sum((xs[j] - xs[j + 1]) * ms[j] for j in range(r - 1))
            acc += xs[-1] * ms[-1]
            total += acc
        out.append(Fraction(total, mu.ef))
    return tuple(out)


def dimension_formulas(mu: Cocharacter):
    d = mu.d
    dim_q = sum((d + 1 - 2 * j) * v[j - 1] for v in mu.vectors()
                for j in range(1, d + 1))
    dim_flag = sum(1 for v in mu.vectors() for i in range(d)
                   for j in range(d) if v[i] > v[j])
    return {"dim_Q": dim_q, "dim_flag": dim_flag, "dim_P": mu.f * d * d}


def combinatorial_gap(r):
    r = [int(x) for x in r]
    gap = sum(x * x for x in r) - sum(r[i] * r[i + 1]
                                      for i in range(len(r) - 1))
    exceptional = bool(r) and all(x == 1 for x in r)
    if sum(r) >= len(r) and not exceptional:
        assert gap > 1, (r, gap)
    return {"gap": gap, "exceptional": exceptional}


def dominated_by(mu_vec):
    """All dominant integer vectors with the same total lying below mu_vec."""
    d = len(mu_vec)
    total = sum(mu_vec)
    lo = min(mu_vec)
    hi = max(mu_vec)
    out = []

    def rec(prefix, remaining_slots, top):
        if remaining_slots == 0:
            if sum(prefix) == total:
                cand = tuple(prefix)
                ps = pm = 0
                for a, b in zip(cand, mu_vec):
                    ps += a
                    pm += b
                    if ps > pm:
                        return
                out.append(cand)
            return
        for x in range(top, lo - 1, -1):
            rec(prefix + [x], remaining_slots - 1, x)

    rec([], d, hi)
    return out

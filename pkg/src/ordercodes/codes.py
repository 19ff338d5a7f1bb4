"""Evaluation codes from order-domain presentations: generator matrices,
exact brute-force minimum distance, duals, bounds, and the quasicyclic orbit
decomposition of the tangent-form Hermitian surface."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .gf import Field, nullspace, primitive_element, rref
from .mpoly import ResourceLimit
from .orderdomain import Presentation, standard_monomials
from .varieties import PointSet

DEFAULT_CODEWORD_CEILING = 2**24


# ---------------------------------------------------------------------------


@dataclass
class EvaluationCode:
    field: Field
    points: PointSet
    monomials: list  # exponent tuples, row order
    matrix: list  # raw evaluation matrix, rows of codes
    generator: list  # row-reduced full-rank form
    n: int
    k: int
    d: Optional[int] = None
    d_method: Optional[str] = None
    d_interval: Optional[tuple] = None

    def params(self):
        return (self.n, self.k, self.d)

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "points": self.points.to_json(),
            "monomials": [list(e) for e in self.monomials],
            "G": [[list(self.field.coeffs(c)) for c in row] for row in self.matrix],
            "params": {"n": self.n, "k": self.k, "d": self.d,
                       "d_method": self.d_method,
                       "d_interval": list(self.d_interval) if self.d_interval else None},
        }


def evaluation_code(points: PointSet, monomials: Sequence, field: Field) -> EvaluationCode:
    """Matrix entry (i, j) = monomial_i evaluated at point_j."""
    if field != points.field:
        raise ValueError("field mismatch between points and code")
    if not points.points:
        raise ValueError("empty point set")
    monomials = [tuple(m) for m in monomials]
    svars = points.dimension
    for m in monomials:
        if len(m) != svars:
            raise ValueError("monomial arity does not match the point dimension")
    # per-point power tables
    rows = []
    powcache = []
    maxexp = [max((m[i] for m in monomials), default=0) for i in range(svars)]
    for pt in points.points:
        pows = []
        for i, x in enumerate(pt):
            col = [1]
            for _ in range(maxexp[i]):
                col.append(field.mul_c(col[-1], x))
            pows.append(col)
        powcache.append(pows)
    for m in monomials:
        row = []
        for pows in powcache:
            v = 1
            for i, e in enumerate(m):
                if e:
                    v = field.mul_c(v, pows[i][e])
            row.append(v)
        rows.append(row)
    gen, rank, _ = rref(rows, field)
    return EvaluationCode(
        field=field,
        points=points,
        monomials=monomials,
        matrix=rows,
        generator=gen,
        n=len(points.points),
        k=rank,
    )


def first_ell_code(P: Presentation, points: PointSet, ell: int) -> EvaluationCode:
    """Code spanned by the first ell standard monomials under the weight order."""
    mons = standard_monomials(P, count=ell)
    return evaluation_code(points, mons, P.ring.field)


def c_a_code(P: Presentation, points: PointSet, a: int) -> EvaluationCode:
    """Code from all standard monomials of total degree <= a.

    When the order is graded (an all-ones weight row) and the footprint up
    to degree a is full, this coincides with a first-ell code; callers can
    assert that via `first_ell_code`.
    """
    if a < 0:
        raise ValueError("degree must be >= 0")
    mons = standard_monomials(P, max_degree=a)
    return evaluation_code(points, mons, P.ring.field)


def _field_tables(field: Field):
    q = field.q
    add = np.empty((q, q), dtype=np.int16)
    mul = np.empty((q, q), dtype=np.int16)
    for a in range(q):
        for b in range(q):
            add[a, b] = field.add_c(a, b)
            mul[a, b] = field.mul_c(a, b)
    return add, mul


def min_distance(C: EvaluationCode, method: str = "exhaustive",
                 ceiling: int = DEFAULT_CODEWORD_CEILING) -> int:
    """Exact minimum Hamming weight by iterating message vectors.

    One representative per scalar class is enumerated (first nonzero
    coordinate fixed to 1), cutting the work by a factor q-1.
    """
    if method != "exhaustive":
        raise ValueError("only the exhaustive method computes an exact distance")
    field, k, n = C.field, C.k, C.n
    q = field.q
    if q**k > ceiling:
        raise ResourceLimit(
            f"{q}^{k} codewords exceed ceiling {ceiling}; use bound mode")
    add, mul = _field_tables(field)
    G = np.array(C.generator, dtype=np.int16)
    best = n
    # messages with first nonzero coordinate at position i, fixed to 1
    for i in range(k):
        base = G[i].copy()
        if k - i - 1 == 0:
            tail_iter = [()]
        else:
            tail_iter = np.ndindex(*([q] * (k - i - 1)))
        for tail in tail_iter:
            w = base
            for j, c in enumerate(tail):
                if c:
                    w = add[w, mul[c, G[i + 1 + j]]]
            weight = int(np.count_nonzero(w))
            if weight < best:
                best = weight
    return best


def distance_interval(C: EvaluationCode, samples: int = 10000, seed: int = 0):
    """Bound mode: (lower, upper) from the Singleton complement and the best
    codeword found in a seeded random sample."""
    import random

    rng = random.Random(seed)
    field = C.field
    add, mul = _field_tables(field)
    G = np.array(C.generator, dtype=np.int16)
    upper = C.n
    for _ in range(samples):
        msg = [rng.randrange(field.q) for _ in range(C.k)]
        if not any(msg):
            msg[rng.randrange(C.k)] = 1
        w = np.zeros(C.n, dtype=np.int16)
        for c, row in zip(msg, G):
            if c:
                w = add[w, mul[c, row]]
        upper = min(upper, int(np.count_nonzero(w)))
    lower = 1
    return lower, upper


def dual_code(C: EvaluationCode):
    """Exact nullspace basis (parity-check rows) of the generator matrix."""
    basis = nullspace(C.generator, C.field)
    assert len(basis) == C.n - C.k
    return basis


def griesmer_bound(k: int, d: int, Q: int) -> int:
    """sum_{i<k} ceil(d / Q^i): minimal possible length of an [n,k,d] code."""
    if k < 1 or d < 1 or Q < 2:
        raise ValueError("need k >= 1, d >= 1, Q >= 2")
    return sum(math.ceil(d / Q**i) for i in range(k))


def hermitian_predicted_params(r: int, q: int):
    """Closed-form [n, k, d] of the degree-1 evaluation code on the
    Hermitian hypersurface of dimension r over GF(q^2)."""
    if r < 1:
        raise ValueError("need r >= 1")
    n = q ** (2 * r + 1) - (-1) ** (r + 1) * q**r
    k = r + 2
    if r % 2 == 0:
        d = q ** (2 * r + 1) - q ** (2 * r - 1)
    else:
        d = q ** (2 * r + 1) - q ** (2 * r - 1) - q**r - q ** (r - 1)
    return n, k, d


# ---------------------------------------------------------------------------
# quasicyclic orbit structure


@dataclass
class OrbitDecomposition:
    automorphism: str
    orbits: list  # lists of point indices
    histogram: dict  # orbit size -> count

    def to_json(self):
        return {
            "automorphism": self.automorphism,
            "orbits": self.orbits,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        }


def orbit_decomposition(points: PointSet, q: int) -> OrbitDecomposition:
    """Partition tangent-form Hermitian surface points under
    (x, x1, y) -> (a x, a x1, a^{q+1} y) with a primitive in GF(q^2)."""
    field = points.field
    if field.q != q * q:
        raise ValueError("points must live over GF(q^2)")
    if points.dimension != 3:
        raise ValueError("expected 3-dimensional tangent-surface points")
    alpha = primitive_element(field).code
    a_pow = field.pow_c(alpha, q + 1)
    index = {pt: i for i, pt in enumerate(points.points)}

    def sigma(pt):
        x, x1, y = pt
        return (field.mul_c(alpha, x), field.mul_c(alpha, x1), field.mul_c(a_pow, y))

    seen = set()
    orbits = []
    for i, pt in enumerate(points.points):
        if i in seen:
            continue
        orbit = [i]
        seen.add(i)
        cur = sigma(pt)
        while cur != pt:
            if cur not in index:
                raise ValueError("point set is not closed under the automorphism")
            j = index[cur]
            orbit.append(j)
            seen.add(j)
            cur = sigma(cur)
        orbits.append(orbit)
    hist: dict = {}
    for o in orbits:
        hist[len(o)] = hist.get(len(o), 0) + 1
    return OrbitDecomposition(
        automorphism=f"(x, x1, y) -> (a*x, a*x1, a^{q + 1}*y), a primitive in GF({q * q})",
        orbits=orbits,
        histogram=hist,
    )

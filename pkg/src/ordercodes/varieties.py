"""Explicit families: Hermitian hypersurfaces (transverse and tangent
coordinate forms), Grassmannians with their Pluecker ideals and diagonal-term
matrices, and the two-step flag varieties, plus rational-point enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .gf import Field, build_field, hermitian_constants, nullspace, _parse_prime_power
from .mpoly import (
    Grevlex,
    Lex,
    Polynomial,
    ResourceLimit,
    Ring,
    buchberger_reduced,
    eliminate,
    poly_to_json,
)
from .orderdomain import Presentation, verify_gp

DEFAULT_POINT_CEILING = 10**8


@dataclass
class PointSet:
    field: Field
    dimension: int
    points: list  # list of tuples of element codes

    def __len__(self):
        return len(self.points)

    def coords(self, i):
        return tuple(self.field.element(c) for c in self.points[i])

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "dimension": self.dimension,
            "points": [[list(self.field.coeffs(c)) for c in pt] for pt in self.points],
        }


@dataclass
class VarietyInstance:
    name: str
    field: Field
    homogeneous_ideal: list  # polynomials in the projective coordinate ring
    chart_variable: Optional[str]  # dehomogenized by setting this to 1
    affine_ring: Ring
    affine_ideal: list
    presentation: Optional[Presentation] = None
    expected_counts: Optional[dict] = None

    def to_json(self):
        return {
            "name": self.name,
            "field": self.field.to_json(),
            "homogeneous_ideal": [poly_to_json(g) for g in self.homogeneous_ideal],
            "chart_variable": self.chart_variable,
            "affine_ideal": [poly_to_json(g) for g in self.affine_ideal],
            "presentation": self.presentation.to_json() if self.presentation else None,
            "expected_counts": self.expected_counts,
        }


def affine_points(gens: Sequence[Polynomial], ring: Ring,
                  ceiling: int = DEFAULT_POINT_CEILING) -> PointSet:
    """All common zeros in affine space, in lex order of code tuples.

    Candidates are pruned variable by variable: a generator is tested as soon
    as all of its variables are assigned.
    """
    q, s = ring.field.q, ring.nvars
    if q**s > ceiling:
        raise ResourceLimit(f"candidate count {q}^{s} exceeds ceiling {ceiling}")
    # for each prefix length, the generators that become fully determined there
    by_prefix = [[] for _ in range(s + 1)]
    for g in gens:
        used = [i for i in range(s) if any(e[i] for e in g.terms)]
        by_prefix[(max(used) + 1) if used else 0].append(g)

    fld = ring.field
    points = []

    def rec(prefix):
        k = len(prefix)
        for g in by_prefix[k]:
            if g.evaluate(list(prefix) + [0] * (s - k)).code != 0:
                return
        if k == s:
            points.append(tuple(prefix))
            return
        for c in range(q):
            rec(prefix + [c])

    rec([])
    return PointSet(fld, s, points)


def rational_points(V: VarietyInstance, ceiling: int = DEFAULT_POINT_CEILING) -> PointSet:
    return affine_points(V.affine_ideal, V.affine_ring, ceiling)


# ---------------------------------------------------------------------------
# Hermitian hypersurfaces


def hermitian_counts(r: int, q: int):
    """(projective, at-infinity, affine) point counts of the degree-(q+1)
    Hermitian hypersurface in P^(r+1) over GF(q^2)."""

    def projective(rr):
        num = (q ** (rr + 2) + (-1) ** (rr + 1)) * (q ** (rr + 1) - (-1) ** (rr + 1))
        assert num % (q**2 - 1) == 0
        return num // (q**2 - 1)

    proj = projective(r)
    at_inf = projective(r - 1)
    affine = proj - at_inf
    assert affine == q ** (2 * r + 1) - (-1) ** (r + 1) * q**r
    return proj, at_inf, affine


def hermitian_projective(r: int, q: int) -> VarietyInstance:
    """V(X_0^{q+1} + ... + X_{r+1}^{q+1}) in P^{r+1} over GF(q^2)."""
    p, e = _parse_prime_power(q)
    F = build_field(p, 2 * e)
    names = [f"X{i}" for i in range(r + 2)]
    proj = Ring(F, names)
    gen = proj.zero()
    for i in range(r + 2):
        gen = gen + proj.gen(i) ** (q + 1)
    aff = Ring(F, names[1:])
    # dehomogenize X0 = 1: merge the X0^{q+1} term into the constant
    terms = {}
    for e2, c in gen.terms.items():
        key = tuple(e2[1:])
        terms[key] = F.add_c(terms.get(key, 0), c)
    affine_gen = Polynomial(aff, {k: v for k, v in terms.items() if v})
    proj_n, inf_n, aff_n = hermitian_counts(r, q)
    return VarietyInstance(
        name=f"hermitian:{r}:{q}",
        field=F,
        homogeneous_ideal=[gen],
        chart_variable="X0",
        affine_ring=aff,
        affine_ideal=[affine_gen],
        expected_counts={"projective": proj_n, "at_infinity": inf_n, "affine": aff_n},
    )


def hermitian_presentation(r: int, q: int, verify_bound: int | None = None) -> Presentation:
    """Order-domain presentation of the Hermitian hypersurface H_r over
    GF(q^2).

    For r >= 2 the single generator in variables (X_1..X_{r-1}, U, X_{r+1})
    is

        X_{r+1}^{q+1} + d^q X_{r-1}^q U + d X_{r-1} U^q
            + sum_{j<=r-2} X_j^{q+1} - U^{q+1} - 1,

    with d^{q+1} = -1, and the weight matrix is the nonnegative lift of the
    value vectors (a, b_1..b_{r-1}) -> (a, a+b_1, .., a+b_{r-2},
    (q+1)a + b_{r-1}).  For r = 1 the tangent form of the curve is used, in
    variables (U, X_2) with weights (q+1, q).
    """
    if r < 1:
        raise ValueError("dimension must be >= 1")
    p, e = _parse_prime_power(q)
    F = build_field(p, 2 * e)
    if r == 1:
        ring = Ring(F, ["U", "X2"])
        U, X2 = ring.gens()
        gen = X2 ** (q + 1) - U**q - U
        M = [[q + 1, q]]
        P = Presentation(ring, [gen], M, tau=Lex(priority=[1, 0]))
    else:
        delta, _ = hermitian_constants(q)
        names = [f"X{j}" for j in range(1, r)] + ["U", f"X{r + 1}"]
        ring = Ring(F, names)
        gens = ring.gens()
        xs = gens[: r - 1]  # X_1 .. X_{r-1}
        U = gens[r - 1]
        Xtop = gens[r]
        gen = (
            Xtop ** (q + 1)
            + xs[-1] ** q * U * (delta**q)
            + xs[-1] * U**q * delta
            - U ** (q + 1)
            - ring.one()
        )
        for j in range(r - 2):
            gen = gen + xs[j] ** (q + 1)

        # lifted column weights; column order matches the ring variables
        def lift(b):
            # b has r-1 entries; image (1, 1+b_1, .., 1+b_{r-2}, (q+1)+b_{r-1})
            out = [1]
            for i in range(r - 2):
                out.append(1 + b[i])
            out.append((q + 1) + b[r - 2])
            return out

        cols = []
        for j in range(1, r - 1):  # X_1 .. X_{r-2}: b = -e_j
            b = [0] * (r - 1)
            b[j - 1] = -1
            cols.append(lift(b))
        cols.append(lift([0] * (r - 1)))  # X_{r-1}
        b = [0] * (r - 1)
        b[-1] = -(q + 1)
        cols.append(lift(b))  # U
        b = [0] * (r - 1)
        b[-1] = -1
        cols.append(lift(b))  # X_{r+1}
        M = [[cols[j][i] for j in range(r + 1)] for i in range(r)]
        # tie-break: X_{r+1} first so the leading term is X_{r+1}^{q+1}
        tau = Lex(priority=[r] + list(range(r)))
        P = Presentation(ring, [gen], M, tau=tau)
    report = verify_gp(P, verify_bound)
    if not report.passed:
        raise AssertionError(f"Hermitian presentation failed verification: {report}")
    return P


def hermitian_tangent_presentation(dim: int, q: int,
                                   verify_bound: int | None = None) -> Presentation:
    """Tangent-hyperplane coordinate forms: the curve X^{q+1} - Y^q - Y with
    weights (q, q+1), or the surface X^{q+1} + X1^{q+1} - Y^q - Y with the
    two-row weight matrix ((q,0,q+1),(0,1,0))."""
    if dim not in (1, 2):
        raise ValueError("tangent form implemented for dim 1 and 2 only")
    p, e = _parse_prime_power(q)
    F = build_field(p, 2 * e)
    if dim == 1:
        ring = Ring(F, ["X", "Y"])
        X, Y = ring.gens()
        gen = X ** (q + 1) - Y**q - Y
        M = [[q, q + 1]]
    else:
        ring = Ring(F, ["X", "X1", "Y"])
        X, X1, Y = ring.gens()
        gen = X ** (q + 1) + X1 ** (q + 1) - Y**q - Y
        M = [[q, 0, q + 1], [0, 1, 0]]
    P = Presentation(ring, [gen], M, tau=Lex())
    report = verify_gp(P, verify_bound)
    if not report.passed:
        raise AssertionError(f"tangent presentation failed verification: {report}")
    return P


def hermitian_tangent_variety(dim: int, q: int) -> VarietyInstance:
    """Affine chart of the tangent-form Hermitian curve/surface, with its
    verified presentation attached."""
    P = hermitian_tangent_presentation(dim, q)
    F = P.ring.field
    if dim == 1:
        proj = Ring(F, ["X", "Y", "Z"])
        X, Y, Z = proj.gens()
        hom = [X ** (q + 1) - Y**q * Z - Y * Z**q]
    else:
        proj = Ring(F, ["X", "X1", "Y", "Z"])
        X, X1, Y, Z = proj.gens()
        hom = [X ** (q + 1) + X1 ** (q + 1) - Y**q * Z - Y * Z**q]
    return VarietyInstance(
        name=f"hermitian-tangent:{dim}:{q}",
        field=F,
        homogeneous_ideal=hom,
        chart_variable="Z",
        affine_ring=P.ring,
        affine_ideal=list(P.generators),
        presentation=P,
        expected_counts={"affine": q ** (2 * dim + 1)},
    )


def hermitian_variety(r: int, q: int) -> VarietyInstance:
    """Hermitian hypersurface in the presentation coordinates; its points
    support the C_a codes.

    For r >= 2 these are the transverse-chart coordinates
    (X_1..X_{r-1}, U, X_{r+1}) and the point count matches the affine count
    formula; for r = 1 the presentation is the tangent-form curve, whose
    chart holds q^3 affine points instead.
    """
    P = hermitian_presentation(r, q)
    base = hermitian_projective(r, q)
    if r == 1:
        counts = {"projective": base.expected_counts["projective"],
                  "affine": q**3}
    else:
        counts = base.expected_counts
    return VarietyInstance(
        name=f"hermitian:{r}:{q}",
        field=P.ring.field,
        homogeneous_ideal=base.homogeneous_ideal,
        chart_variable="X0",
        affine_ring=P.ring,
        affine_ideal=list(P.generators),
        presentation=P,
        expected_counts=counts,
    )


# ---------------------------------------------------------------------------
# Grassmannians


def _subsets(n: int, k: int):
    return list(itertools.combinations(range(1, n + 1), k))


def _det_poly(ring: Ring, rows, cols, var_index):
    """Determinant of the generic submatrix with given rows/cols as a
    polynomial; var_index maps (i, j) to a ring variable index."""
    k = len(rows)
    out = ring.zero()
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = ring.one()
        for i in range(k):
            term = term * ring.gen(var_index[(rows[i], cols[perm[i]])])
        term = term.scale(ring.field.neg_c(1)) if inv % 2 else term
        out = out + term
    return out


def grassmannian_data(k: int, n: int, field: Field,
                      method: str = "kernel", pair_limit: int = 500_000):
    """(pluecker_ideal, B_matrix, diagonal_terms) for G(k,n) over `field`.

    Pluecker coordinates X_1..X_C are indexed by the lex-ordered k-subsets of
    columns; B is the C x kn matrix whose row for subset S marks the diagonal
    positions t_{i, S_i}.  The ideal of relations among the maximal minors is
    generated by its quadrics, so the default method finds all linear and
    quadratic dependencies among products of minors by exact nullspace
    computation and returns their reduced grevlex GB.  method="eliminate"
    instead eliminates the t_{ij} from {X_S - minor_S}; it gives the same
    ideal but is only tractable for very small (k, n).
    """
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    subsets = _subsets(n, k)
    C = len(subsets)
    tnames = [f"t{i}{j}" for i in range(1, k + 1) for j in range(1, n + 1)]
    xnames = [f"X{a}" for a in range(1, C + 1)]
    var_index = {}
    for idx, (i, j) in enumerate(itertools.product(range(1, k + 1), range(1, n + 1))):
        var_index[(i, j)] = idx

    B = []
    diagonal_terms = []
    for S in subsets:
        row = [0] * (k * n)
        for i, col in enumerate(S, start=1):
            row[var_index[(i, col)]] = 1
        B.append(row)
        diagonal_terms.append(tuple(row))

    if method == "eliminate":
        big = Ring(field, tnames + xnames)
        gens = []
        for a, S in enumerate(subsets):
            minor = _det_poly(big, list(range(1, k + 1)), list(S), var_index)
            gens.append(big.gen(k * n + a) - minor)
        sub, ideal = eliminate(gens, xnames, Grevlex(), pair_limit=pair_limit)
        return ideal, B, diagonal_terms
    if method != "kernel":
        raise ValueError("method must be 'kernel' or 'eliminate'")

    tring = Ring(field, tnames)
    minors = [_det_poly(tring, list(range(1, k + 1)), list(S), var_index)
              for S in subsets]
    xring = Ring(field, xnames)

    def relations(monomials):
        """Nullspace of the map sending each X-monomial to the matching
        product of minors; rows of the assembled matrix are indexed by
        t-monomials, columns by the given X-monomials."""
        images = []
        for mon in monomials:
            img = tring.one()
            for i, e in enumerate(mon):
                for _ in range(e):
                    img = img * minors[i]
            images.append(img)
        tmons = sorted({e for img in images for e in img.terms})
        matrix = [[img.terms.get(te, 0) for img in images] for te in tmons]
        return nullspace(matrix, field)

    def expify(pairs):
        out = [0] * C
        for i, e in pairs:
            out[i] = e
        return tuple(out)

    mons1 = [expify([(i, 1)]) for i in range(C)]
    mons2 = [expify([(i, 1), (j, 1)]) if i != j else expify([(i, 2)])
             for i in range(C) for j in range(i, C)]
    gens = []
    for mons in (mons1, mons2):
        for vec in relations(mons):
            gens.append(Polynomial(xring, {m: c for m, c in zip(mons, vec) if c}))
    # the minors are linearly independent, so all relations are quadratic
    assert all(max(sum(e) for e in g.terms) == 2 for g in gens)
    ideal = buchberger_reduced(gens, Grevlex(), pair_limit) if gens else []
    return ideal, B, diagonal_terms


def grassmann_points(k: int, n: int, q: int, ceiling: int = 10**7) -> PointSet:
    """One normalized Pluecker vector per k-subspace of GF(q)^n, enumerated
    through reduced row-echelon forms."""
    p, e = _parse_prime_power(q)
    F = build_field(p, e)
    subsets = _subsets(n, k)
    if q ** (k * (n - k)) * len(subsets) > ceiling:
        raise ResourceLimit("echelon enumeration exceeds ceiling")

    points = []
    for pivots in itertools.combinations(range(n), k):
        free_positions = [
            (row, col)
            for row in range(k)
            for col in range(n)
            if col not in pivots and col > pivots[row]
        ]
        for values in itertools.product(range(F.q), repeat=len(free_positions)):
            mat = [[0] * n for _ in range(k)]
            for row, piv in enumerate(pivots):
                mat[row][piv] = 1
            for (row, col), v in zip(free_positions, values):
                mat[row][col] = v
            pl = []
            for S in subsets:
                cols = [c - 1 for c in S]
                pl.append(_det_codes(mat, cols, F))
            # normalize: first nonzero coordinate to 1
            fn = next(i for i, c in enumerate(pl) if c)
            if pl[fn] != 1:
                inv = F.inv_c(pl[fn])
                pl = [F.mul_c(c, inv) for c in pl]
            points.append(tuple(pl))
    points = sorted(set(points))
    return PointSet(F, len(subsets), points)


def _det_codes(mat, cols, F: Field):
    k = len(mat)
    acc = 0
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = 1
        for i in range(k):
            term = F.mul_c(term, mat[i][cols[perm[i]]])
            if term == 0:
                break
        if term:
            acc = F.add_c(acc, F.neg_c(term) if inv % 2 else term)
    return acc


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def grassmann_presentation(k: int, n: int, field: Field,
                           verify_bound: int | None = None) -> Presentation:
    """Order-domain presentation of the cone over G(k,n): the Pluecker ideal
    under the weight order with matrix B^T and grevlex tie-break."""
    ideal, B, _ = grassmannian_data(k, n, field)
    ring = ideal[0].ring if ideal else Ring(field, [f"X{a}" for a in range(1, len(B) + 1)])
    M = [list(row) for row in zip(*B)]  # transpose: kn x C
    P = Presentation(ring, ideal, M, tau=Grevlex())
    report = verify_gp(P, verify_bound)
    if not report.passed:
        raise AssertionError("Grassmannian presentation failed verification")
    return P


# ---------------------------------------------------------------------------
# flag varieties F(1, n-1; n)


@dataclass
class LatticeH:
    """The Pluecker-label poset H for F(1, n-1; n) with join/meet tables."""

    elements: list  # tuples; (j,) for lines, the (n-1)-tuples for hyperplanes
    labels: list  # printable labels aligned with `elements`

    def geq(self, a, b) -> bool:
        return len(a) <= len(b) and all(x >= y for x, y in zip(a, b))

    def incomparable_pairs(self):
        out = []
        for i, a in enumerate(self.elements):
            for b in self.elements[i + 1:]:
                if not self.geq(a, b) and not self.geq(b, a):
                    out.append((a, b))
        return out

    def join(self, a, b):
        ub = [c for c in self.elements if self.geq(c, a) and self.geq(c, b)]
        minimal = [c for c in ub if not any(self.geq(c, d) and c != d for d in ub)]
        if len(minimal) != 1:
            raise ValueError("join is not unique")
        return minimal[0]

    def meet(self, a, b):
        lb = [c for c in self.elements if self.geq(a, c) and self.geq(b, c)]
        maximal = [c for c in lb if not any(self.geq(d, c) and c != d for d in lb)]
        if len(maximal) != 1:
            raise ValueError("meet is not unique")
        return maximal[0]


def _flag_lattice(n: int) -> LatticeH:
    lines = [(j,) for j in range(1, n + 1)]
    hats = [tuple(x for x in range(1, n + 1) if x != j) for j in range(1, n + 1)]
    labels = [f"p({j})" for j in range(1, n + 1)] + [f"p({j}^)" for j in range(1, n + 1)]
    return LatticeH(elements=lines + hats, labels=labels)


def flag_presentation(n: int, q: int, verify_bound: int | None = None):
    """(Presentation, LatticeH) for the flag variety F(1, n-1; n) over GF(q).

    The single incidence relation is p_(1) p_(1^) - p_(2) p_(2^)
    + p_(3) p_(3^) - ... ; the weight matrix makes the first two products tie
    at maximal weight (degree row plus near-free coordinate rows, with the
    p_(2) column zero and the p_(2^) column the sum of the p_(1), p_(1^)
    columns).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    p, e = _parse_prime_power(q)
    F = build_field(p, e)
    lat = _flag_lattice(n)
    inc = lat.incomparable_pairs()
    if inc != [((1,), tuple(range(2, n + 1)))]:
        raise AssertionError("unexpected incomparable pairs in the flag lattice")

    names = [f"p{j}" for j in range(1, n + 1)] + [f"ph{j}" for j in range(1, n + 1)]
    ring = Ring(F, names)
    terms = {}
    for kk in range(1, n + 1):
        exp = [0] * (2 * n)
        exp[kk - 1] += 1
        exp[n + kk - 1] += 1
        terms[tuple(exp)] = (-1) ** (kk + 1)
    gen = ring.from_int_terms(terms)

    # weight matrix: degree row + a coordinate row per variable other than
    # p_2 (zero) and p_2^ (sum of the p_1 and p_1^ rows)
    nv = 2 * n
    extra_vars = [i for i in range(nv) if i not in (1, n + 1)]  # all but p2, ph2
    # order so p1, ph1 get the first two coordinate rows
    extra_vars.sort(key=lambda i: (i not in (0, n), i))
    rows = [[1] * nv]
    for v in extra_vars:
        row = [0] * nv
        row[v] = 1
        if v == 0 or v == n:  # p1 / ph1 also feed the p_2^ column
            row[n + 1] = 1
        rows.append(row)
    P = Presentation(ring, [gen], rows, tau=Lex())
    report = verify_gp(P, verify_bound)
    if not report.passed:
        raise AssertionError("flag presentation failed verification")
    return P, lat


def _golden_g35(field: Field):
    """Shipped reference data for G(3,5) with polynomial coefficients reduced
    into `field`: {"B", "toric_gb", "pluecker_gb", "ring"}."""
    import importlib.resources as resources
    import json

    text = resources.files("ordercodes").joinpath("data/g35_golden.json").read_text()
    data = json.loads(text)
    ring = Ring(field, data["vars"])

    def load(polys):
        out = []
        for terms in polys:
            out.append(ring.from_int_terms(
                {tuple(t["exp"]): t["coeff"] for t in terms}))
        return out

    return {
        "B": data["B"],
        "ring": ring,
        "toric_gb": load(data["toric_gb"]),
        "pluecker_gb": load(data["pluecker_gb"]),
    }

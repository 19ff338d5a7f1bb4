"""Weight-matrix order domains: verification, order functions, value
semigroups, toric ideals, and flat toric degenerations."""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .mpoly import (
    Grevlex,
    Lex,
    MonomialOrder,
    Polynomial,
    ResourceLimit,
    Ring,
    RingError,
    WeightOrder,
    buchberger_reduced,
    eliminate,
    normal_form,
    order_from_json,
    poly_from_json,
    poly_to_json,
)


def m_weight(exp: Sequence[int], M: Sequence[Sequence[int]]):
    """The weight vector M * alpha of a monomial exponent alpha."""
    exp = tuple(exp)
    for row in M:
        if len(row) != len(exp):
            raise RingError("weight matrix column count does not match monomial")
    return tuple(sum(r[i] * exp[i] for i in range(len(exp))) for r in M)


# ---------------------------------------------------------------------------
# order values


class OrderValue:
    """Either -infinity (for the zero element) or a vector in the value
    semigroup, compared lexicographically."""

    __slots__ = ("value",)

    def __init__(self, value: Optional[tuple]):
        self.value = tuple(value) if value is not None else None

    @property
    def is_minus_infinity(self):
        return self.value is None

    def __add__(self, other):
        if self.value is None or other.value is None:
            return OrderValue(None)
        return OrderValue(tuple(a + b for a, b in zip(self.value, other.value)))

    def _cmp(self, other):
        if self.value is None:
            return 0 if other.value is None else -1
        if other.value is None:
            return 1
        return (self.value > other.value) - (self.value < other.value)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __eq__(self, other):
        return isinstance(other, OrderValue) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "-inf" if self.value is None else repr(self.value)


MINUS_INFINITY = OrderValue(None)


# ---------------------------------------------------------------------------
# semigroups


@dataclass(frozen=True)
class SemigroupData:
    """Subsemigroup of Z_{>=0}^r generated by the columns of a weight matrix."""

    generators: tuple  # tuple of vectors in Z_{>=0}^r

    def __post_init__(self):
        for g in self.generators:
            if any(x < 0 for x in g):
                raise ValueError("semigroup generators must be nonnegative")

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence[int]]):
        rows = [tuple(r) for r in M]
        cols = tuple(tuple(r[i] for r in rows) for i in range(len(rows[0])))
        return cls(generators=cols)


def semigroup_membership(v: Sequence[int], S: SemigroupData):
    """Nonnegative-integer combination of the generators equal to v, or None.

    The search is exhaustive with per-generator bounds derived from v, so a
    None answer is a certificate of absence.
    """
    v = tuple(v)
    gens = [g for g in S.generators if any(g)]
    r = len(v)
    if any(len(g) != r for g in gens):
        raise ValueError("dimension mismatch")
    if any(x < 0 for x in v):
        return None

    def rec(idx, rest):
        if all(x == 0 for x in rest):
            return [0] * (len(gens) - idx)
        if idx == len(gens):
            return None
        g = gens[idx]
        bound = min((rest[i] // g[i] for i in range(r) if g[i]), default=0)
        for k in range(bound, -1, -1):
            nxt = tuple(rest[i] - k * g[i] for i in range(r))
            if any(x < 0 for x in nxt):
                continue
            tail = rec(idx + 1, nxt)
            if tail is not None:
                return [k] + tail
        return None

    combo = rec(0, v)
    if combo is None:
        return None
    # re-attach zero generators that were skipped
    out = []
    it = iter(combo)
    for g in S.generators:
        out.append(next(it) if any(g) else 0)
    return out


# ---------------------------------------------------------------------------
# presentations and the Geil-Pellikaan verification


@dataclass
class GPReport:
    passed: bool
    bound: int
    gb_size: int
    leading_terms: list
    tie_pairs: list  # per GB element: the monomials of maximal M-weight
    condition_a_failures: list  # (generator index, max-weight monomial list)
    condition_b_witness: Optional[tuple]  # (monomial, monomial) with equal weight
    footprint_checked: int = 0

    def to_json(self):
        return {
            "passed": self.passed,
            "bound": self.bound,
            "gb_size": self.gb_size,
            "leading_terms": [list(e) for e in self.leading_terms],
            "tie_pairs": [[list(e) for e in pair] for pair in self.tie_pairs],
            "condition_a_failures": [
                {"generator": i, "max_weight_monomials": [list(e) for e in ms]}
                for i, ms in self.condition_a_failures
            ],
            "condition_b_witness": (
                [list(e) for e in self.condition_b_witness]
                if self.condition_b_witness
                else None
            ),
            "footprint_checked": self.footprint_checked,
        }


class Presentation:
    """An order-domain candidate F_q[X_1..X_s]/I with weight matrix M and
    tie-break order tau."""

    def __init__(self, ring: Ring, generators: Sequence[Polynomial],
                 M: Sequence[Sequence[int]], tau: MonomialOrder | None = None):
        self.ring = ring
        self.generators = list(generators)
        self.M = tuple(tuple(int(x) for x in r) for r in M)
        for row in self.M:
            if len(row) != ring.nvars:
                raise RingError("weight matrix shape does not match the ring")
        self.tau = tau if tau is not None else Lex()
        self.order = WeightOrder(self.M, self.tau)
        self._gb = None
        self.report: Optional[GPReport] = None

    @property
    def gb(self):
        if self._gb is None:
            self._gb = buchberger_reduced(self.generators, self.order)
        return self._gb

    @property
    def verified(self) -> bool:
        return self.report is not None and self.report.passed

    def semigroup(self) -> SemigroupData:
        return SemigroupData.from_matrix(self.M)

    def weight(self, exp):
        return m_weight(exp, self.M)

    def to_json(self):
        return {
            "ring": {"field": self.ring.field.to_json(), "vars": list(self.ring.names)},
            "generators": [poly_to_json(g) for g in self.generators],
            "weight_matrix": [list(r) for r in self.M],
            "tie_break": self.tau.to_json(),
            "report": self.report.to_json() if self.report else None,
        }

    @classmethod
    def from_json(cls, obj) -> "Presentation":
        from .gf import field_from_json

        ring = Ring(field_from_json(obj["ring"]["field"]), obj["ring"]["vars"])
        gens = [poly_from_json(g, ring) for g in obj["generators"]]
        tau = order_from_json(obj["tie_break"]) if obj.get("tie_break") else None
        return cls(ring, gens, obj["weight_matrix"], tau)


def _footprint_monomials(nvars: int, bound: int, leading_terms):
    """Exponent tuples of total degree <= bound outside the leading-term ideal."""
    lts = [tuple(lt) for lt in leading_terms]

    def rec(prefix, remaining, slots):
        if slots == 0:
            e = tuple(prefix)
            if not any(all(a <= b for a, b in zip(lt, e)) for lt in lts):
                yield e
            return
        for d in range(remaining + 1):
            yield from rec(prefix + [d], remaining - d, slots - 1)

    yield from rec([], bound, nvars)


def verify_gp(P: Presentation, distinctness_bound: int | None = None) -> GPReport:
    """Check the two Geil-Pellikaan conditions on the reduced GB of P.

    (a) every GB element has exactly two support monomials of maximal
        M-weight (tied in the lex order on weight vectors);
    (b) standard monomials of total degree <= bound have pairwise distinct
        M-weights.
    The report is attached to P; passing certifies the structure up to the
    bound.
    """
    gb = P.gb
    max_deg = max((sum(g.leading(P.order)[0]) for g in gb), default=1)
    D = distinctness_bound if distinctness_bound is not None else 4 * max_deg
    if D < max_deg:
        raise ValueError("distinctness bound below the maximum leading degree")

    leading_terms = [g.leading(P.order)[0] for g in gb]
    tie_pairs = []
    cond_a_failures = []
    for i, g in enumerate(gb):
        weights = {e: P.weight(e) for e in g.terms}
        wmax = max(weights.values())
        top = sorted(e for e, w in weights.items() if w == wmax)
        tie_pairs.append(top)
        if len(top) != 2:
            cond_a_failures.append((i, top))

    witness = None
    seen = {}
    checked = 0
    for e in _footprint_monomials(P.ring.nvars, D, leading_terms):
        checked += 1
        w = P.weight(e)
        if w in seen:
            witness = tuple(sorted((seen[w], e)))
            break
        seen[w] = e

    report = GPReport(
        passed=not cond_a_failures and witness is None,
        bound=D,
        gb_size=len(gb),
        leading_terms=leading_terms,
        tie_pairs=tie_pairs,
        condition_a_failures=cond_a_failures,
        condition_b_witness=witness,
        footprint_checked=checked,
    )
    P.report = report
    return report


def rho(f: Polynomial, P: Presentation) -> OrderValue:
    """Order-function value: the lex-max M-weight over the support of the
    normal form of f."""
    if not P.verified:
        raise ValueError("presentation is not verified; run verify_gp first")
    if f.ring != P.ring:
        raise RingError("polynomial from a different ring")
    nf = normal_form(f, P.gb, P.order) if P.gb else f
    if nf.is_zero():
        return MINUS_INFINITY
    return OrderValue(max(P.weight(e) for e in nf.terms))


def standard_monomials(P: Presentation, count: int | None = None,
                       max_degree: int | None = None):
    """Footprint monomials sorted ascending by (M-weight, tau).

    Exactly one of `count` (first-ell query) and `max_degree` must be given.
    """
    if (count is None) == (max_degree is None):
        raise ValueError("give exactly one of count / max_degree")
    lts = [g.leading(P.order)[0] for g in P.gb]
    nvars = P.ring.nvars
    if max_degree is not None:
        out = list(_footprint_monomials(nvars, max_degree, lts))
        out.sort(key=P.order.key)
        return out
    # Dijkstra over the footprint: the footprint is closed under division and
    # the order key is monotone under multiplying by a variable, so popping
    # in key order enumerates globally smallest-first.
    start = (0,) * nvars
    heap = [(P.order.key(start), start)]
    seen = {start}
    out = []
    while heap and len(out) < count:
        _, e = heapq.heappop(heap)
        out.append(e)
        for i in range(nvars):
            ne = e[:i] + (e[i] + 1,) + e[i + 1:]
            if ne in seen:
                continue
            if any(all(a <= b for a, b in zip(lt, ne)) for lt in lts):
                continue
            seen.add(ne)
            heapq.heappush(heap, (P.order.key(ne), ne))
    if len(out) < count:
        raise ResourceLimit("footprint exhausted before reaching the requested count")
    return out


# ---------------------------------------------------------------------------
# axiom probe


def _random_poly(ring: Ring, rng: random.Random, max_degree=3, max_terms=4) -> Polynomial:
    terms = {}
    f = ring.field
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exp = [0] * ring.nvars
        for _ in range(deg):
            exp[rng.randrange(ring.nvars)] += 1
        terms[tuple(exp)] = rng.randint(1, f.q - 1)
    return Polynomial(ring, terms)


def axiom_probe(P: Presentation, trials: int = 1000, seed: int = 0):
    """Sample random polynomial pairs and check the order-function axioms.

    Axioms checked: scaling invariance, the ultrametric-style bound for sums,
    additivity for products, and (constructively) the one-dimensional
    quotients axiom whenever the sampled values coincide.  Returns the list
    of violations (expected empty).
    """
    if not P.verified:
        raise ValueError("presentation is not verified; run verify_gp first")
    rng = random.Random(seed)
    fld = P.ring.field
    violations = []
    for t in range(trials):
        f = _random_poly(P.ring, rng)
        g = _random_poly(P.ring, rng)
        if t % 3 == 2:
            # engineer frequent equal-value pairs to exercise axiom 4
            c = fld.element(rng.randint(1, fld.q - 1))
            g = f * c + _random_poly(P.ring, rng, max_degree=1, max_terms=2)
        rf, rg = rho(f, P), rho(g, P)
        # axiom 2
        c = fld.element(rng.randint(1, fld.q - 1))
        if rho(f * c, P) != rf:
            violations.append({"trial": t, "axiom": 2, "f": repr(f)})
        # axiom 3
        if not rho(f + g, P) <= max(rf, rg):
            violations.append({"trial": t, "axiom": 3, "f": repr(f), "g": repr(g)})
        # axiom 5
        if rho(f * g, P) != rf + rg:
            violations.append({"trial": t, "axiom": 5, "f": repr(f), "g": repr(g)})
        # axiom 4, constructively
        if rf == rg and not rf.is_minus_infinity:
            found = False
            for code in range(1, fld.q):
                if rho(f - g * fld.element(code), P) < rf:
                    found = True
                    break
            if not found:
                violations.append({"trial": t, "axiom": 4, "f": repr(f), "g": repr(g)})
    return violations


# ---------------------------------------------------------------------------
# toric ideals and deformation


def toric_ideal(M: Sequence[Sequence[int]], ring: Ring,
                order: MonomialOrder | None = None):
    """Generators of the toric ideal of the semigroup generated by the
    columns of M, as the reduced GB under `order` (default grevlex).

    Computed by eliminating parameters t_1..t_r from {X_j - t^(M e_j)}.
    Every output generator is a binomial X^a - X^b with M a = M b.
    """
    M = [tuple(int(x) for x in r) for r in M]
    if any(x < 0 for r in M for x in r):
        raise ValueError("weight matrix entries must be nonnegative")
    r = len(M)
    s = ring.nvars
    if any(len(row) != s for row in M):
        raise RingError("weight matrix shape does not match the ring")
    tnames = [f"_t{i}" for i in range(r)]
    big = Ring(ring.field, tnames + list(ring.names))
    gens = []
    for j in range(s):
        texp = tuple(M[i][j] for i in range(r)) + (0,) * s
        xexp = (0,) * r + tuple(1 if i == j else 0 for i in range(s))
        gens.append(Polynomial(big, {xexp: 1, texp: ring.field.neg_c(1)}))
    hint = order or Grevlex()
    sub, out = eliminate(gens, list(ring.names), hint)
    result = [Polynomial(ring, dict(g.terms)) for g in out]
    for g in result:
        terms = sorted(g.terms.items(), key=lambda t: hint.key(t[0]), reverse=True)
        if len(terms) != 2:
            raise AssertionError("toric ideal generator is not a binomial")
        (ea, ca), (eb, cb) = terms
        if m_weight(ea, M) != m_weight(eb, M):
            raise AssertionError("toric binomial not weight-tied")
        if ca != 1 or cb != ring.field.neg_c(1):
            raise AssertionError("toric binomial not of the form X^a - X^b")
    return result


@dataclass
class DeformationResult:
    omega: tuple
    limit_generators: list
    toric_generators: list
    toric_match: bool
    rescaling: Optional[tuple]  # variable scalars certifying the match
    failure: Optional[str] = None

    def to_json(self):
        return {
            "omega": list(self.omega),
            "limit_generators": [poly_to_json(g) for g in self.limit_generators],
            "toric_generators": [poly_to_json(g) for g in self.toric_generators],
            "toric_match": self.toric_match,
            "rescaling": list(self.rescaling) if self.rescaling else None,
            "failure": self.failure,
        }


def _auto_omega(P: Presentation):
    """A positive row combination of M realizing the lex order on the weight
    vectors that actually occur in the GB supports.

    With K larger than every occurring weight entry, the combination
    (K^(r-1), ..., K, 1) of the rows orders those vectors exactly as lex
    does, so the two max-weight terms of each GB element tie and strictly
    dominate the rest.
    """
    r = len(P.M)
    entries = [w for g in P.gb for e in g.terms for w in P.weight(e)]
    K = max(entries, default=1) + 1
    coeffs = [K ** (r - 1 - i) for i in range(r)]
    omega = tuple(sum(coeffs[i] * P.M[i][j] for i in range(r))
                  for j in range(P.ring.nvars))
    return omega


def _omega_weight(exp, omega):
    return sum(o * e for o, e in zip(omega, exp))


def deform_to_toric(P: Presentation, omega: Sequence[int] | None = None,
                    rescale_ceiling: int = 10**6) -> DeformationResult:
    """Degenerate P along X_i -> t^(-omega_i) X_i and compare the t->0 limit
    with the toric ideal of M.

    The limit keeps, in each GB element, exactly the terms of maximal
    omega-weight.  `toric_match` is True when the limit ideal equals the
    toric ideal up to a diagonal rescaling of the variables.
    """
    if not P.verified:
        raise ValueError("presentation is not verified; run verify_gp first")
    gb = P.gb
    if omega is None:
        omega = _auto_omega(P)
    omega = tuple(int(x) for x in omega)

    # certify: in each GB element the two lex-max-weight terms tie under
    # omega and strictly dominate every other term
    for g, tie in zip(gb, P.report.tie_pairs):
        ow = {e: _omega_weight(e, omega) for e in g.terms}
        top = max(ow.values())
        top_terms = sorted(e for e, w in ow.items() if w == top)
        if top_terms != sorted(tie):
            return DeformationResult(omega, [], [], False, None,
                                     failure="no separating omega found")

    limit = []
    for g in gb:
        ow = {e: _omega_weight(e, omega) for e in g.terms}
        top = max(ow.values())
        limit.append(Polynomial(P.ring, {e: c for e, c in g.terms.items()
                                         if ow[e] == top}))

    toric = toric_ideal(P.M, P.ring)

    # support matching
    def support_pair(g):
        return frozenset(g.terms)

    limit_by_support = {support_pair(g): g for g in limit}
    toric_by_support = {support_pair(g): g for g in toric}
    if set(limit_by_support) != set(toric_by_support):
        return DeformationResult(omega, limit, toric, False, None,
                                 failure="limit supports differ from the toric ideal")

    # search a diagonal rescaling X_i -> lam_i X_i mapping limit gens to
    # scalar multiples of the toric binomials
    fld = P.ring.field
    s = P.ring.nvars
    nonzero = list(range(1, fld.q))
    if (fld.q - 1) ** s > rescale_ceiling:
        return DeformationResult(omega, limit, toric, False, None,
                                 failure="rescaling search ceiling exceeded")
    constraints = []
    for key, lg in limit_by_support.items():
        tg = toric_by_support[key]
        (ea, ca), (eb, cb) = sorted(lg.terms.items())
        ta, tb = tg.terms[ea], tg.terms[eb]
        constraints.append((ea, ca, ta, eb, cb, tb))
    for lam in itertools.product(nonzero, repeat=s):
        ok = True
        for ea, ca, ta, eb, cb, tb in constraints:
            la = ca
            for i in range(s):
                if ea[i]:
                    la = fld.mul_c(la, fld.pow_c(lam[i], ea[i]))
            lb = cb
            for i in range(s):
                if eb[i]:
                    lb = fld.mul_c(lb, fld.pow_c(lam[i], eb[i]))
            # (la, lb) must be proportional to (ta, tb)
            if fld.mul_c(la, tb) != fld.mul_c(lb, ta):
                ok = False
                break
        if ok:
            return DeformationResult(omega, limit, toric, True, lam)
    return DeformationResult(omega, limit, toric, False, None,
                             failure="no consistent diagonal rescaling")

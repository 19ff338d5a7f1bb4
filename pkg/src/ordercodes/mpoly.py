"""Sparse multivariate polynomials over a finite field.

Terms are dicts mapping exponent tuples to nonzero coefficient codes.
Monomial orders expose a sort key: m1 > m2 in the order exactly when
key(m1) > key(m2) as Python tuples, so ascending sorts of keys list
monomials from smallest to largest.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .gf import Field, FieldElement, FieldError


class RingError(ValueError):
    pass


class ResourceLimit(RuntimeError):
    """A configured work ceiling was exceeded (never silent truncation)."""


class Ring:
    def __init__(self, field: Field, names: Sequence[str]):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise RingError("duplicate variable names")
        self.nvars = len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        code = c.code if isinstance(c, FieldElement) else c % self.field.p
        if code == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: code})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        code = coeff.code if isinstance(coeff, FieldElement) else coeff % self.field.p
        if code == 0:
            return self.zero()
        return Polynomial(self, {tuple(exp): code})

    def from_int_terms(self, terms: dict) -> "Polynomial":
        """Build from {exp: integer} with integers taken mod p (signs allowed)."""
        out = {}
        for e, c in terms.items():
            code = c % self.field.p
            if code:
                out[tuple(e)] = code
        return Polynomial(self, out)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.field == other.field and self.names == other.names

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return list(self.terms.keys())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("polynomials from different rings")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.const(other)
        raise TypeError(type(other))

    def __add__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add_c(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {e: f.neg_c(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            code = other.code if isinstance(other, FieldElement) else other % self.ring.field.p
            return self.scale(code)
        other = self._coerce(other)
        f = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add_c(out.get(e, 0), f.mul_c(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, code: int) -> "Polynomial":
        f = self.ring.field
        if code == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {e: f.mul_c(c, code) for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def leading(self, order) -> tuple:
        """(exponent, coefficient code) of the order-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order)
        if c == 1:
            return self
        return self.scale(self.ring.field.inv_c(c))

    def evaluate(self, point) -> FieldElement:
        f = self.ring.field
        codes = []
        for x in point:
            if isinstance(x, FieldElement):
                if x.field != f:
                    raise FieldError("evaluation point from the wrong field")
                codes.append(x.code)
            else:
                codes.append(int(x))
        if len(codes) != self.ring.nvars:
            raise RingError("point length does not match variable count")
        acc = 0
        for e, c in self.terms.items():
            val = c
            for x, k in zip(codes, e):
                if k:
                    val = f.mul_c(val, f.pow_c(x, k))
            acc = f.add_c(acc, val)
        return f.element(acc)

    def sorted_terms(self, order, reverse=True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{n}^{k}" if k > 1 else n for n, k in zip(self.ring.names, e) if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    kind = "abstract"

    def key(self, exp):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        if len(a) != len(b):
            raise RingError("monomials of different lengths")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def to_json(self):
        return {"kind": self.kind}


class Lex(MonomialOrder):
    """Lex order; optional priority permutation lists variable indices from
    most to least significant."""

    kind = "lex"

    def __init__(self, priority: Sequence[int] | None = None):
        self.priority = tuple(priority) if priority is not None else None

    def key(self, exp):
        if self.priority is None:
            return exp
        return tuple(exp[i] for i in self.priority)

    def to_json(self):
        d = {"kind": "lex"}
        if self.priority is not None:
            d["priority"] = list(self.priority)
        return d


class Grevlex(MonomialOrder):
    kind = "grevlex"

    def key(self, exp):
        return (sum(exp),) + tuple(-e for e in reversed(exp))


class WeightOrder(MonomialOrder):
    """Order >_{M,tau}: compare M-weight vectors lexicographically, break
    ties with tau.  Rows need not be linearly independent."""

    kind = "weight"

    def __init__(self, rows: Sequence[Sequence[int]], tie: MonomialOrder | None = None):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        if any(x < 0 for r in self.rows for x in r):
            raise RingError("weight matrix entries must be nonnegative")
        self.tie = tie if tie is not None else Lex()

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def weight(self, exp):
        if self.rows and len(exp) != len(self.rows[0]):
            raise RingError("weight matrix column count does not match monomial")
        return tuple(sum(r[i] * exp[i] for i in range(len(exp))) for r in self.rows)

    def key(self, exp):
        return (self.weight(exp), self.tie.key(exp))

    def to_json(self):
        return {"kind": "weight", "matrix": [list(r) for r in self.rows], "tie": self.tie.to_json()}


class BlockOrder(MonomialOrder):
    """Elimination order: the first block (compared by a graded order) beats
    the second, so GB intersection with the kept subring eliminates it."""

    kind = "block"

    def __init__(self, first: Sequence[int], rest: Sequence[int],
                 first_order: MonomialOrder | None = None,
                 rest_order: MonomialOrder | None = None):
        self.first = tuple(first)
        self.rest = tuple(rest)
        self.first_order = first_order or Grevlex()
        self.rest_order = rest_order or Grevlex()

    def key(self, exp):
        sub1 = tuple(exp[i] for i in self.first)
        sub2 = tuple(exp[i] for i in self.rest)
        return (self.first_order.key(sub1), self.rest_order.key(sub2))


def order_from_json(obj) -> MonomialOrder:
    kind = obj["kind"]
    if kind == "lex":
        return Lex(obj.get("priority"))
    if kind == "grevlex":
        return Grevlex()
    if kind == "weight":
        return WeightOrder(obj["matrix"], order_from_json(obj["tie"]))
    raise ValueError(f"unknown order kind {kind!r}")


def compare(order: MonomialOrder, a, b) -> str:
    """Three-way comparison as a string: 'less' | 'equal' | 'greater'."""
    c = order.compare(tuple(a), tuple(b))
    return {-1: "less", 0: "equal", 1: "greater"}[c]


# ---------------------------------------------------------------------------
# division / Buchberger


def _divides(lt, e):
    return all(a <= b for a, b in zip(lt, e))


def _neg_key(k):
    if isinstance(k, tuple):
        return tuple(_neg_key(x) for x in k)
    return -k


def normal_form(f: Polynomial, G: Iterable[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by G; no remainder term is divisible by a
    leading term of G."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return f
    ring = f.ring
    for g in G:
        if g.ring != ring:
            raise RingError("divisors from a different ring")
    fld = ring.field
    ginfo = []
    for g in G:
        lt, lc = g.leading(order)
        tail = [(e, c) for e, c in g.terms.items() if e != lt]
        ginfo.append((lt, fld.inv_c(lc), tail))

    work = dict(f.terms)
    rem = {}
    heap = [(_neg_key(order.key(e)), e) for e in work]
    heapq.heapify(heap)
    seen = set(work)
    while heap:
        _, e = heapq.heappop(heap)
        seen.discard(e)
        c = work.pop(e, 0)
        if not c:
            continue
        for lt, ilc, tail in ginfo:
            if _divides(lt, e):
                quot = tuple(a - b for a, b in zip(e, lt))
                factor = fld.mul_c(c, ilc)
                for ge, gc in tail:
                    te = tuple(a + b for a, b in zip(ge, quot))
                    s = fld.sub_c(work.get(te, 0), fld.mul_c(factor, gc))
                    if s:
                        work[te] = s
                        if te not in seen:
                            seen.add(te)
                            heapq.heappush(heap, (_neg_key(order.key(te)), te))
                    else:
                        work.pop(te, None)
                break
        else:
            rem[e] = c
    return Polynomial(ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fld = f.ring.field
    ltf, lcf = f.leading(order)
    ltg, lcg = g.leading(order)
    lcm = tuple(max(a, b) for a, b in zip(ltf, ltg))
    mf = f.ring.monomial(tuple(a - b for a, b in zip(lcm, ltf)), fld.inv_c(lcf))
    mg = g.ring.monomial(tuple(a - b for a, b in zip(lcm, ltg)), fld.inv_c(lcg))
    return mf * f - mg * g


DEFAULT_PAIR_LIMIT = 200_000


def buchberger_reduced(F: Sequence[Polynomial], order: MonomialOrder,
                       pair_limit: int = DEFAULT_PAIR_LIMIT) -> list:
    """Reduced Groebner basis (unique; monic; fully inter-reduced).

    Normal selection strategy on the lcm key, with the coprime-product and
    chain criteria.
    """
    G = [f.monic(order) for f in F if not f.is_zero()]
    if not G:
        return []
    ring = G[0].ring
    lts = [g.leading(order)[0] for g in G]

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(lts[i], lts[j]))

    pairs = {(i, j): lcm_of(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    done = set()
    processed = 0
    while pairs:
        processed += 1
        if processed > pair_limit:
            raise ResourceLimit(f"Buchberger pair limit {pair_limit} exceeded")
        (i, j) = min(pairs, key=lambda p: (order.key(pairs[p]), p))
        lcm = pairs.pop((i, j))
        done.add((i, j))
        # product criterion
        if all(a + b == c for a, b, c in zip(lts[i], lts[j], lcm)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(lts[k], lcm):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in done and p2 in done:
                    skip = True
                    break
        if skip:
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if not h.is_zero():
            h = h.monic(order)
            G.append(h)
            lts.append(h.leading(order)[0])
            t = len(G) - 1
            for k in range(t):
                pairs[(k, t)] = lcm_of(k, t)

    # minimalize
    keep = []
    for i, lt in enumerate(lts):
        if any(_divides(lts[j], lt) for j in range(len(G)) if j != i and
               (lts[j] != lt or j < i)):
            continue
        keep.append(i)
    basis = [G[i] for i in keep]
    # reduce each element against the others
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = normal_form(g, others, order) if others else g
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return reduced


def eliminate(F: Sequence[Polynomial], keep: Sequence[str],
              hint_order: MonomialOrder | None = None,
              pair_limit: int = DEFAULT_PAIR_LIMIT):
    """Generators of the ideal intersection with the subring in `keep`.

    Returns (subring, generators): the reduced GB of the intersection under
    the hint order (default grevlex) on the kept variables.
    """
    if not F:
        return None, []
    ring = F[0].ring
    keep = list(keep)
    for v in keep:
        if v not in ring.names:
            raise RingError(f"unknown variable {v!r}")
    keep_idx = [i for i, n in enumerate(ring.names) if n in keep]
    elim_idx = [i for i, n in enumerate(ring.names) if n not in keep]
    hint = hint_order or Grevlex()
    if not elim_idx:
        return ring, buchberger_reduced(F, hint, pair_limit)
    order = BlockOrder(elim_idx, keep_idx, Grevlex(), hint)
    G = buchberger_reduced(F, order, pair_limit)
    sub = Ring(ring.field, [ring.names[i] for i in keep_idx])
    out = []
    for g in G:
        if all(all(e[i] == 0 for i in elim_idx) for e in g.terms):
            out.append(Polynomial(sub, {tuple(e[i] for i in keep_idx): c
                                        for e, c in g.terms.items()}))
    out.sort(key=lambda g: hint.key(g.leading(hint)[0]))
    return sub, out


# ---------------------------------------------------------------------------
# enumeration helpers


def monomials_up_to_degree(nvars: int, bound: int):
    """All exponent tuples with total degree <= bound."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for d in range(remaining + 1):
            yield from rec(prefix + [d], remaining - d, slots - 1)
    yield from rec([], bound, nvars)


# ---------------------------------------------------------------------------
# JSON


def poly_to_json(f: Polynomial):
    fld = f.ring.field
    terms = sorted(f.terms.items())
    return {
        "vars": list(f.ring.names),
        "field": fld.to_json(),
        "terms": [{"exp": list(e), "coeff": list(fld.coeffs(c))} for e, c in terms],
    }


def poly_from_json(obj, ring: Ring | None = None) -> Polynomial:
    from .gf import field_from_json

    if ring is None:
        ring = Ring(field_from_json(obj["field"]), obj["vars"])
    terms = {}
    for t in obj["terms"]:
        el = ring.field.from_coeffs(t["coeff"])
        if el.code:
            terms[tuple(t["exp"])] = el.code
    return Polynomial(ring, terms)

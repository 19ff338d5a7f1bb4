"""Exact arithmetic in small finite fields GF(p^m).

Elements are stored as integer codes: the code of the element with
coefficient vector (c_0, ..., c_{m-1}) in the power basis of the modulus
root is sum(c_i * p**i).  The natural "lex" order on elements used by the
deterministic scans below is simply ascending code order.
"""

from __future__ import annotations

import functools
from typing import Iterator

DEFAULT_CARDINALITY_CEILING = 2**16

# full add/mul tables are built only for fields at most this large
_TABLE_CEILING = 512


class FieldError(ValueError):
    """Bad field construction or cross-field arithmetic."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomial helpers over GF(p); coefficient tuples in ascending power order


def _trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _polymulmod(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(tuple(out))


def _polyrem(a, b, p):
    # remainder of a by b (b monic-normalizable), over GF(p)
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    while len(a) - 1 >= db and _trim(tuple(a)):
        a = list(_trim(tuple(a)))
        if len(a) - 1 < db:
            break
        factor = (a[-1] * inv_lb) % p
        shift = len(a) - 1 - db
        for j, cb in enumerate(b):
            a[shift + j] = (a[shift + j] - factor * cb) % p
        a = list(_trim(tuple(a)))
        if not a:
            break
    return _trim(tuple(a))


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            cs = []
            c = code
            for _ in range(d):
                cs.append(c % p)
                c //= p
            divisor = _trim(tuple(cs) + (1,))
            if len(divisor) - 1 != d:
                divisor = tuple(cs) + (1,)
            if not _polyrem(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, m: int):
    """Monic irreducible of degree m over GF(p) with smallest coefficient code."""
    for code in range(p**m):
        cs = []
        c = code
        for _ in range(m):
            cs.append(c % p)
            c //= p
        poly = tuple(cs) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


class Field:
    """GF(p^m) with an explicit modulus polynomial; immutable after construction."""

    def __init__(self, p: int, m: int, ceiling: int = DEFAULT_CARDINALITY_CEILING):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be positive")
        q = p**m
        if q > ceiling:
            raise FieldError(f"cardinality {q} exceeds ceiling {ceiling}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            # identity placeholder; elements are residues mod p
            self.modulus = (0, 1)
        else:
            self.modulus = _smallest_irreducible(p, m)
        self._mul_table = None
        self._inv_table = None
        if m > 1:
            # reduction vectors for x^m .. x^{2m-2}
            red = []
            cur = tuple((-c) % p for c in self.modulus[:-1])  # x^m = -lower part
            red.append(cur)
            for _ in range(m - 2):
                cur = self._shift_reduce(cur)
                red.append(cur)
            self._reductions = red
        if q <= _TABLE_CEILING and m > 1:
            self._build_tables()

    def _shift_reduce(self, vec):
        p, m = self.p, self.m
        shifted = (0,) + vec[: m - 1]
        top = vec[m - 1]
        if top:
            shifted = tuple((shifted[i] + top * self._reductions[0][i]) % p for i in range(m))
        return shifted

    def _build_tables(self):
        q = self.q
        self._mul_table = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul_table[a][b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv

    # -- code <-> coefficient vector

    def coeffs(self, code: int):
        cs = []
        for _ in range(self.m):
            cs.append(code % self.p)
            code //= self.p
        return tuple(cs)

    def from_coeffs(self, cs) -> "FieldElement":
        if len(cs) > self.m:
            raise FieldError("coefficient vector too long")
        code = 0
        for c in reversed(list(cs)):
            code = code * self.p + (c % self.p)
        return FieldElement(self, code)

    # -- arithmetic on codes

    def add_c(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        code, mult = 0, 1
        for _ in range(self.m):
            code += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return code

    def neg_c(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        code, mult = 0, 1
        for _ in range(self.m):
            code += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return code

    def sub_c(self, a: int, b: int) -> int:
        return self.add_c(a, self.neg_c(b))

    def _mul_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        out = list(prod[:m])
        for d in range(m, 2 * m - 1):
            c = prod[d]
            if c:
                red = self._reductions[d - m]
                for i in range(m):
                    out[i] = (out[i] + c * red[i]) % p
        code, mult = 0, 1
        for c in out:
            code += c * mult
            mult *= p
        return code

    def mul_c(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def inv_c(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow_c(a, self.q - 2)

    def div_c(self, a: int, b: int) -> int:
        return self.mul_c(a, self.inv_c(b))

    def pow_c(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        e %= self.q - 1 if self.q > 2 else 1
        if self.q == 2:
            return a  # only nonzero element is 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul_c(result, base)
            base = self.mul_c(base, base)
            e >>= 1
        return result

    def order_c(self, a: int) -> int:
        """Multiplicative order of a nonzero code."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul_c(x, a)
            n += 1
        return n

    # -- element constructors / iteration

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code % self.q if self.m == 1 else code)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for c in range(self.q):
            yield FieldElement(self, c)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})" if self.m > 1 else f"GF({self.p})"

    def to_json(self):
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self):
        return self.field.coeffs(self.code)

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements of distinct fields never mix")
            return other.code
        if isinstance(other, int):
            return other % self.field.p if self.field.m == 1 else (other % self.field.p)
        raise TypeError(f"cannot combine FieldElement with {type(other)!r}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_c(self.code, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_c(self.code, self._check(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub_c(self._check(other), self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_c(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_c(self.code, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div_c(self.code, self._check(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div_c(self._check(other), self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_c(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_c(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self._check(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        return f"{self.field!r}[{self.code}]"

    def to_json(self):
        return list(self.coeffs)


@functools.lru_cache(maxsize=None)
def build_field(p: int, m: int, ceiling: int = DEFAULT_CARDINALITY_CEILING) -> Field:
    """GF(p^m) with the deterministic smallest-modulus choice."""
    return Field(p, m, ceiling)


def field_from_json(obj) -> Field:
    f = build_field(int(obj["p"]), int(obj["m"]))
    if list(f.modulus) != [c % f.p for c in obj["modulus"]]:
        raise FieldError("modulus in JSON does not match the deterministic choice")
    return f


def field_arith(op: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatcher form of the element arithmetic; pow takes an integer exponent."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        if not isinstance(b, int):
            raise TypeError("pow exponent must be an integer")
        return a**b
    raise ValueError(f"unknown op {op!r}")


def primitive_element(F: Field) -> FieldElement:
    """Smallest-code element of multiplicative order q-1."""
    target = F.q - 1
    if target == 1:
        return F.one()
    for c in range(1, F.q):
        if F.order_c(c) == target:
            return F.element(c)
    raise FieldError("no primitive element found (field arithmetic bug)")


def _parse_prime_power(q):
    if isinstance(q, str):
        text = q.strip()
        if "^" in text:
            base, _, exp = text.partition("^")
            try:
                p, e = int(base), int(exp)
            except ValueError:
                raise FieldError(f"cannot parse field size {q!r}")
            if e < 1 or not is_prime(p):
                raise FieldError(f"{q!r} is not a prime power")
            return p, e
        try:
            q = int(text)
        except ValueError:
            raise FieldError(f"cannot parse field size {q!r}")
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n == 1:
                return p, e
            break
    raise FieldError(f"{q} is not a prime power")


def hermitian_constants(q: int):
    """(delta, gamma) in GF(q^2) with delta^(q+1) = gamma^q + gamma = -1.

    Both are the smallest-code solutions, so the output is deterministic.
    """
    p, e = _parse_prime_power(q)
    F = build_field(p, 2 * e)
    minus_one = F.neg_c(1)
    delta = gamma = None
    for c in range(F.q):
        if delta is None and F.pow_c(c, q + 1) == minus_one:
            delta = c
        if gamma is None and F.add_c(F.pow_c(c, q), c) == minus_one:
            gamma = c
        if delta is not None and gamma is not None:
            return F.element(delta), F.element(gamma)
    raise FieldError("hermitian constant scan failed (field arithmetic bug)")


# ---------------------------------------------------------------------------
# exact linear algebra on matrices of element codes


def rref(rows, field: "Field"):
    """(reduced rows, rank, pivot columns); the input is not modified."""
    m = [list(r) for r in rows]
    if not m:
        return [], 0, []
    ncols = len(m[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv_c(m[rank][col])
        m[rank] = [field.mul_c(x, inv) for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [field.sub_c(a, field.mul_c(f, b)) for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], rank, pivots


def nullspace(rows, field: "Field"):
    """Basis of the right nullspace of the matrix (rows of codes)."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, rank, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [0] * ncols
        vec[fcol] = 1
        for i, pcol in enumerate(pivots):
            vec[pcol] = field.neg_c(red[i][fcol])
        basis.append(vec)
    return basis

"""Exact arithmetic in F_p and its extensions F_{p^m}.

Elements are coefficient vectors over F_p in the power basis of a monic
irreducible modulus.  Everything is plain integer arithmetic; no floats
appear anywhere in this package's value domain.

Small fields (q <= _TABLE_LIMIT) additionally carry lazily built numpy
lookup tables so that exhaustive sums and code enumeration elsewhere can
run vectorized.  The tables are an implementation detail: the element API
works for any desk-scale field.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class GFError(Exception):
    pass


class CompositeP(GFError):
    """Raised when p is not an odd prime."""


class ReducibleModulus(GFError):
    """Raised when a supplied modulus factors over F_p."""


class DivisionByZero(GFError):
    """Raised on inversion of zero."""


class FieldMismatch(GFError):
    """Raised when operands belong to different fields."""


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomials over F_p, little-endian coefficient tuples
# ---------------------------------------------------------------------------

def _trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mulmod(a, b, mod, p):
    # mod is monic of degree m; result has degree < m
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for k in range(m):
                prod[d - m + k] = (prod[d - m + k] - c * mod[k]) % p
    out = prod[:m]
    out += [0] * (m - len(out))
    return tuple(out)


def _poly_powmod(base, e, mod, p):
    m = len(mod) - 1
    result = (1,) + (0,) * (m - 1)
    acc = tuple(base[:m]) + (0,) * (m - len(base))
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _poly_mod(a, b, p):
    # remainder of a by nonzero b
    inv_lead = pow(b[-1], p - 2, p)
    r = list(a)
    while True:
        r = list(_trim(tuple(r)))
        if len(r) < len(b):
            return tuple(r)
        coef = (r[-1] * inv_lead) % p
        shift = len(r) - len(b)
        for k in range(len(b)):
            r[shift + k] = (r[shift + k] - coef * b[k]) % p


def _poly_gcd(a, b, p):
    a = _trim(tuple(c % p for c in a))
    b = _trim(tuple(c % p for c in b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Rabin test: X^{p^m} == X mod f, and gcd(X^{p^{m/r}} - X, f) = 1 for primes r | m."""
    mod = tuple(c % p for c in modulus)
    m = len(mod) - 1
    if m < 1 or mod[-1] != 1:
        return False
    if m == 1:
        return True
    x = (0, 1) + (0,) * (m - 2)
    if _poly_powmod(x, p**m, mod, p) != x:
        return False
    for r in _prime_factors(m):
        h = _poly_powmod(x, p ** (m // r), mod, p)
        diff = tuple((h[i] - x[i]) % p for i in range(m))
        if len(_poly_gcd(diff, mod, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m (low-degree coeffs compared first)."""
    if m == 1:
        return (0, 1)  # X itself: F_p presented with the degree-1 convention
    lower = [0] * m
    while True:
        cand = tuple(lower) + (1,)
        if is_irreducible(cand, p):
            return cand
        # odometer on (c_0, ..., c_{m-1}) with c_{m-1} fastest keeps lex order on tuples
        i = m - 1
        while i >= 0:
            lower[i] += 1
            if lower[i] < p:
                break
            lower[i] = 0
            i -= 1
        if i < 0:
            raise GFError(f"no irreducible of degree {m} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

_TABLE_LIMIT = 2048  # build O(q) / O(q^2) lookup tables only below this size


class FiniteField:
    """F_{p^m} presented as F_p[X]/(modulus), modulus monic irreducible.

    Instances are immutable and compare by (p, m, modulus), so two
    independently created descriptions of the same field interoperate.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not is_odd_prime(p):
            raise CompositeP(f"p = {p} is not an odd prime")
        if m < 1:
            raise GFError(f"extension degree must be positive, got {m}")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {m}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} factors over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._caches: dict = {}

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m})"

    # -- index <-> coefficient encoding (index = sum c_i p^i) --

    def coeffs_of(self, idx: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            idx, c = divmod(idx, p)
            out.append(c)
        return tuple(out)

    def index_of(self, coeffs) -> int:
        idx = 0
        for c in reversed(tuple(coeffs)):
            idx = idx * self.p + (c % self.p)
        return idx

    # -- element construction --

    def element(self, coeffs) -> "FFElement":
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise GFError(f"need {self.m} coefficients, got {len(coeffs)}")
        return FFElement(self, coeffs)

    def from_index(self, idx: int) -> "FFElement":
        return FFElement(self, self.coeffs_of(idx % self.q))

    def scalar(self, c: int) -> "FFElement":
        """Embed c in F_p as c * 1."""
        return self.element((c % self.p,) + (0,) * (self.m - 1))

    def zero(self) -> "FFElement":
        return self.scalar(0)

    def one(self) -> "FFElement":
        return self.scalar(1)

    def gen(self) -> "FFElement":
        """The modulus root (the element X), or 1 for m = 1."""
        if self.m == 1:
            return self.one()
        return self.element((0, 1) + (0,) * (self.m - 2))

    def elements(self):
        for i in range(self.q):
            yield self.from_index(i)

    # -- index-level arithmetic (exact; table-free fallbacks work at any size) --

    def add_i(self, i: int, j: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            i, a = divmod(i, p)
            j, b = divmod(j, p)
            out += ((a + b) % p) * mult
            mult *= p
        return out

    def neg_i(self, i: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            i, a = divmod(i, p)
            out += (-a % p) * mult
            mult *= p
        return out

    def mul_i(self, i: int, j: int) -> int:
        tables = self._caches.get("mul_table")
        if tables is not None:
            return int(tables[i, j])
        prod = _poly_mulmod(self.coeffs_of(i), self.coeffs_of(j), self.modulus, self.p)
        return self.index_of(prod)

    def pow_i(self, i: int, e: int) -> int:
        if e < 0:
            return self.pow_i(self.inv_i(i), -e)
        result = 1  # index of 1
        acc = i
        while e:
            if e & 1:
                result = self.mul_i(result, acc)
            acc = self.mul_i(acc, acc)
            e >>= 1
        return result

    def inv_i(self, i: int) -> int:
        if i == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow_i(i, self.q - 2)

    def frob_i(self, i: int, k: int = 1) -> int:
        return self.pow_i(i, self.p ** (k % self.m))

    def trace_i(self, i: int) -> int:
        vec = self._caches.get("trace_vec")
        if vec is not None:
            return int(vec[i])
        acc = i
        tot = i
        for _ in range(self.m - 1):
            acc = self.frob_i(acc, 1)
            tot = self.add_i(tot, acc)
        # total lies in the prime field: index equals the F_p value
        return tot

    def eta_i(self, i: int) -> int:
        if i == 0:
            return 0
        vec = self._caches.get("eta_vec")
        if vec is not None:
            return int(vec[i])
        r = self.pow_i(i, (self.q - 1) // 2)
        return 1 if r == 1 else -1

    # -- vectorized lookup tables (small fields only) --

    def _digits_matrix(self) -> np.ndarray:
        """(q, m) matrix of base-p digits of every index."""
        dm = self._caches.get("digits")
        if dm is None:
            idx = np.arange(self.q, dtype=np.int64)
            cols = []
            for _ in range(self.m):
                idx, c = np.divmod(idx, self.p)
                cols.append(c)
            dm = np.stack(cols, axis=1).astype(np.int16)
            self._caches["digits"] = dm
        return dm

    def lex_order(self) -> np.ndarray:
        """Indices of all elements sorted lexicographically by coefficient tuple."""
        order = self._caches.get("lex_order")
        if order is None:
            dm = self._digits_matrix()
            order = np.lexsort(dm.T[::-1]).astype(np.int64)
            self._caches["lex_order"] = order
        return order

    def mul_table(self) -> np.ndarray:
        """(q, q) index multiplication table (built via a discrete-log pair)."""
        tab = self._caches.get("mul_table")
        if tab is None:
            if self.q > _TABLE_LIMIT:
                raise GFError(f"q = {self.q} too large for dense tables")
            g = self._generator_index()
            n = self.q - 1
            exp = np.empty(n, dtype=np.int64)
            acc = 1
            for k in range(n):
                exp[k] = acc
                acc = self.mul_i(acc, g)
            log = np.empty(self.q, dtype=np.int64)
            log[exp] = np.arange(n)
            tab = exp[(log[1:, None] + log[None, 1:]) % n]
            full = np.zeros((self.q, self.q), dtype=np.int32)
            full[1:, 1:] = tab
            self._caches["mul_table"] = full
            tab = full
        return tab

    def _generator_index(self) -> int:
        g = self._caches.get("generator")
        if g is None:
            n = self.q - 1
            facs = _prime_factors(n)
            for cand in range(1, self.q):
                if all(self.pow_i(cand, n // r) != 1 for r in facs):
                    g = cand
                    break
            self._caches["generator"] = g
        return g

    def trace_table(self) -> np.ndarray:
        vec = self._caches.get("trace_vec")
        if vec is None:
            frob = self.frob_table()
            acc = np.arange(self.q, dtype=np.int64)
            dm = self._digits_matrix()
            tot = dm.astype(np.int64).copy()
            for _ in range(self.m - 1):
                acc = frob[acc]
                tot += dm[acc]
            # trace lives in F_p, so only the constant digit can be nonzero
            vec = np.mod(tot[:, 0], self.p).astype(np.int16)
            assert not np.mod(tot[:, 1:], self.p).any()
            self._caches["trace_vec"] = vec
        return vec

    def frob_table(self) -> np.ndarray:
        frob = self._caches.get("frob_vec")
        if frob is None:
            frob = np.fromiter(
                (self.pow_i(i, self.p) for i in range(self.q)), dtype=np.int64, count=self.q
            )
            self._caches["frob_vec"] = frob
        return frob

    def eta_table(self) -> np.ndarray:
        vec = self._caches.get("eta_vec")
        if vec is None:
            vec = np.fromiter(
                (self.eta_i(i) if i else 0 for i in range(self.q)), dtype=np.int8, count=self.q
            )
            self._caches["eta_vec"] = vec
        return vec

    def power_table(self, e: int) -> np.ndarray:
        """x^e for every index x, as an index vector."""
        key = ("pow", e)
        vec = self._caches.get(key)
        if vec is None:
            mt = self.mul_table()
            vec = np.ones(self.q, dtype=np.int64)
            acc = np.arange(self.q, dtype=np.int64)
            ee = e
            while ee:
                if ee & 1:
                    vec = mt[vec, acc]
                acc = mt[acc, acc]
                ee >>= 1
            if e > 0:
                vec[0] = 0
            self._caches[key] = vec
        return vec

    def trace_of_products(self) -> np.ndarray:
        """(q, q) int8 table of Tr(x*y)."""
        ta = self._caches.get("trace_prod")
        if ta is None:
            ta = self.trace_table()[self.mul_table()].astype(np.int8)
            self._caches["trace_prod"] = ta
        return ta


def field_create(p: int, m: int, modulus=None) -> FiniteField:
    """Create F_{p^m}; modulus defaults to the lex-smallest monic irreducible."""
    return FiniteField(p, m, modulus)


@lru_cache(maxsize=None)
def cached_field(p: int, m: int, modulus: tuple[int, ...] | None = None) -> FiniteField:
    """Shared field instance per (p, m, modulus), so lookup tables are built once."""
    return FiniteField(p, m, modulus)


class FFElement:
    """An element of a FiniteField as a reduced coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        return self.field.index_of(self.coeffs)

    def _check(self, other):
        if not isinstance(other, FFElement):
            raise TypeError(f"expected FFElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        prod = _poly_mulmod(self.coeffs, other.coeffs, f.modulus, f.p)
        return FFElement(f, prod)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        f = self.field
        return f.from_index(f.pow_i(self.index, e))

    def inverse(self) -> "FFElement":
        f = self.field
        return f.from_index(f.inv_i(self.index))

    def frobenius_iterate(self, k: int) -> "FFElement":
        """x -> x^{p^k}, k reduced mod m."""
        f = self.field
        return f.from_index(f.frob_i(self.index, k))

    def trace(self) -> int:
        """Tr(x) = sum of x^{p^i}, returned as a value in {0, ..., p-1}."""
        return self.field.trace_i(self.index)

    def eta(self) -> int:
        """Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0."""
        return self.field.eta_i(self.index)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FFElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"FFElement({self.field!r}, {self.coeffs})"


def trace(x: FFElement) -> int:
    return x.trace()


def eta(x: FFElement) -> int:
    return x.eta()


# ---------------------------------------------------------------------------
# F_p-linear operators (linearized polynomials as matrices)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinOperator:
    """An F_p-linear map on coefficient vectors, stored as an m x m matrix (rows)."""

    field: FiniteField
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, x: FFElement) -> FFElement:
        if x.field != self.field:
            raise FieldMismatch("operand from a different field")
        p = self.field.p
        out = tuple(
            sum(r * c for r, c in zip(row, x.coeffs)) % p for row in self.matrix
        )
        return FFElement(self.field, out)

    def kernel_dim(self) -> int:
        m = self.field.m
        return m - _rank_mod_p([list(row) for row in self.matrix], self.field.p)


def linearized_operator(field: FiniteField, a: FFElement, u: int) -> LinOperator:
    """Matrix of X -> a^{p^u} X^{p^{2u}} + a X on the power basis."""
    if a.field != field:
        raise FieldMismatch("a must lie in the given field")
    apu = a.frobenius_iterate(u)
    cols = []
    for i in range(field.m):
        e = field.element(tuple(1 if j == i else 0 for j in range(field.m)))
        img = apu * e.frobenius_iterate(2 * u) + a * e
        cols.append(img.coeffs)
    matrix = tuple(tuple(cols[c][r] for c in range(field.m)) for r in range(field.m))
    return LinOperator(field, matrix)


@dataclass
class SolutionSet:
    """Solutions of op(X) = rhs: none, a unique point, or an affine subspace."""

    kind: str  # "none" | "unique" | "affine"
    particular: FFElement | None
    basis: list[FFElement]

    @property
    def size(self) -> int:
        if self.kind == "none":
            return 0
        return self.particular.field.p ** len(self.basis)

    def solutions(self):
        if self.kind == "none":
            return
        f = self.particular.field
        p = f.p
        dim = len(self.basis)
        for counter in range(p**dim):
            x = self.particular
            c = counter
            for b in self.basis:
                c, r = divmod(c, p)
                if r:
                    x = x + f.scalar(r) * b
            yield x

    def __contains__(self, x: FFElement) -> bool:
        return any(x == s for s in self.solutions())


def _rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    n = len(rows)
    cols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, n) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(v - f * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def solve_linear(op: LinOperator, rhs: FFElement) -> SolutionSet:
    """All solutions of op(X) = rhs by Gaussian elimination over F_p."""
    f = op.field
    if rhs.field != f:
        raise FieldMismatch("rhs from a different field")
    p, m = f.p, f.m
    aug = [list(row) + [rhs.coeffs[r]] for r, row in enumerate(op.matrix)]
    pivots = []
    rank = 0
    for c in range(m):
        piv = next((r for r in range(rank, m) if aug[r][c] % p), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][c], p - 2, p)
        aug[rank] = [(v * inv) % p for v in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][c] % p:
                fac = aug[r][c]
                aug[r] = [(v - fac * w) % p for v, w in zip(aug[r], aug[rank])]
        pivots.append(c)
        rank += 1
    for r in range(rank, m):
        if aug[r][m] % p:
            return SolutionSet("none", None, [])
    part = [0] * m
    for r, c in enumerate(pivots):
        part[c] = aug[r][m] % p
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * m
        vec[fc] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-aug[r][fc]) % p
        basis.append(f.element(tuple(vec)))
    particular = f.element(tuple(part))
    kind = "unique" if not basis else "affine"
    return SolutionSet(kind, particular, basis)

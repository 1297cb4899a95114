"""Defining sets, codeword generation, and exhaustive weight enumeration.

This module is the ground-truth side of the build: everything here is
computed by scanning the actual point sets and message spaces, never by
formula.  The closed-form predictions live in `theory` and are compared
against these results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .gf import CompositeP, FFElement, FieldMismatch, FiniteField, cached_field, is_odd_prime

DEFAULT_BUDGET = 10_000_000

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class BudgetExceeded(Exception):
    """Enumeration would exceed the symbol-evaluation budget."""

    def __init__(self, required, budget):
        super().__init__(f"enumeration needs {required} symbol evaluations, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class CodeSpec:
    """Parameters (p, m1, m2, u, lambda, punctured) of one code construction.

    mod1/mod2 optionally pin the field presentations; all enumerators are
    representation-independent, so they only matter for reproducing dumps.
    """

    p: int
    m1: int
    m2: int
    u: int
    lam: int
    punctured: bool = False
    mod1: tuple[int, ...] | None = None
    mod2: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise CompositeP(f"p = {self.p} is not an odd prime")
        for name in ("m1", "m2", "u"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        object.__setattr__(self, "lam", self.lam % self.p)
        for name in ("mod1", "mod2"):
            mod = getattr(self, name)
            if mod is not None:
                object.__setattr__(self, name, tuple(int(c) for c in mod))

    @property
    def v(self) -> int:
        return math.gcd(self.m2, self.u)

    @property
    def K(self) -> int:
        return self.m1 + self.m2

    @property
    def s(self) -> int:
        if self.m2 % 2:
            raise ValueError("s = m2/2 is only defined for even m2")
        return self.m2 // 2

    @property
    def field1(self) -> FiniteField:
        return cached_field(self.p, self.m1, self.mod1)

    @property
    def field2(self) -> FiniteField:
        return cached_field(self.p, self.m2, self.mod2)

    def full(self) -> "CodeSpec":
        return CodeSpec(self.p, self.m1, self.m2, self.u, self.lam, False, self.mod1, self.mod2)


class DefiningSet:
    """The realized coordinate set: ordered (x, y) pairs satisfying the trace condition.

    Points are kept as index arrays into the two fields, ordered
    lexicographically on (x-coefficients, y-coefficients) so codeword
    coordinates are reproducible run to run.
    """

    def __init__(self, spec: CodeSpec, xs: np.ndarray, ys: np.ndarray):
        self.spec = spec
        self.xs = xs
        self.ys = ys

    def __len__(self):
        return len(self.xs)

    @cached_property
    def points(self) -> list[tuple[FFElement, FFElement]]:
        f1, f2 = self.spec.field1, self.spec.field2
        return [(f1.from_index(int(x)), f2.from_index(int(y))) for x, y in zip(self.xs, self.ys)]


def _membership_mask(spec: CodeSpec) -> np.ndarray:
    """(q1, q2) boolean mask of Tr(x^2) + Tr(y^{p^u+1}) == lambda, origin excluded."""
    f1, f2 = spec.field1, spec.field2
    tx = f1.trace_table()[f1.power_table(2)].astype(np.int64)
    ty = f2.trace_table()[f2.power_table(spec.p**spec.u + 1)].astype(np.int64)
    mask = (tx[:, None] + ty[None, :]) % spec.p == spec.lam
    mask[0, 0] = False
    return mask


def build_defining_set(spec: CodeSpec) -> DefiningSet:
    """Exhaustive scan of the p^K - 1 candidate points, then orbit reduction if punctured."""
    f1, f2 = spec.field1, spec.field2
    mask = _membership_mask(spec)
    lex1, lex2 = f1.lex_order(), f2.lex_order()
    hits = np.argwhere(mask[np.ix_(lex1, lex2)])
    xs = lex1[hits[:, 0]]
    ys = lex2[hits[:, 1]]
    if not spec.punctured:
        return DefiningSet(spec, xs, ys)
    # one representative per scaling orbit; first-seen in lex order is the
    # lex-smallest point of its orbit
    if spec.lam == 0:
        scalars = range(1, spec.p)
    else:
        scalars = (1, spec.p - 1)  # +-1: only sign flips preserve the level set
    keep_x, keep_y = [], []
    seen = set()
    for x, y in zip(xs.tolist(), ys.tolist()):
        if (x, y) in seen:
            continue
        keep_x.append(x)
        keep_y.append(y)
        for c in scalars:
            seen.add((f1.mul_i(c, x), f2.mul_i(c, y)))
    return DefiningSet(spec, np.array(keep_x, dtype=np.int64), np.array(keep_y, dtype=np.int64))


def encode(ds: DefiningSet, a: FFElement, b: FFElement) -> list[int]:
    """Codeword of the message pair (a, b): Tr(a x_j) + Tr(b y_j) per coordinate."""
    spec = ds.spec
    if a.field != spec.field1 or b.field != spec.field2:
        raise FieldMismatch("message components must lie in F_{p^m1} x F_{p^m2}")
    t1 = spec.field1.trace_of_products()
    t2 = spec.field2.trace_of_products()
    vals = (t1[a.index, ds.xs].astype(np.int64) + t2[b.index, ds.ys]) % spec.p
    return [int(v) for v in vals]


def symbol_count_table(ds: DefiningSet, budget: int | None = DEFAULT_BUDGET) -> np.ndarray:
    """(q1, q2, p) tally: entry [a, b, r] counts coordinates of codeword (a, b) equal to r."""
    spec = ds.spec
    p = spec.p
    q1, q2 = spec.field1.q, spec.field2.q
    n = len(ds)
    required = q1 * q2 * max(n, 1)
    if budget is not None and required > budget:
        raise BudgetExceeded(required, budget)
    t1 = spec.field1.trace_of_products()
    t2 = spec.field2.trace_of_products()
    if n == 0:
        return np.zeros((q1, q2, p), dtype=np.int64)
    m2cols = t2[:, ds.ys].astype(np.int16)  # (q2, n)
    row_offset = (np.arange(q2, dtype=np.int64) * p)[:, None]
    out = np.empty((q1, q2, p), dtype=np.int64)
    for ai in range(q1):
        v = t1[ai, ds.xs].astype(np.int16)[None, :] + m2cols
        v[v >= p] -= p
        flat = (row_offset + v).ravel()
        out[ai] = np.bincount(flat, minlength=q2 * p).reshape(q2, p)
    return out


@dataclass
class EnumerationResult:
    """Everything the exhaustive sweep of all p^K messages yields."""

    length: int
    dimension: int
    cwe: dict[tuple[int, ...], int]
    we: dict[int, int]
    table: np.ndarray = field(repr=False)

    @property
    def min_distance(self) -> int:
        nz = [w for w in self.we if w > 0]
        return min(nz) if nz else 0


def complete_weight_enumerator(
    ds: DefiningSet, budget: int | None = DEFAULT_BUDGET
) -> EnumerationResult:
    """Tally the composition vector of every codeword; project to the weight enumerator."""
    spec = ds.spec
    p = spec.p
    n = len(ds)
    table = symbol_count_table(ds, budget)
    rows = table.reshape(-1, p)
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    cwe = {tuple(int(c) for c in comp): int(k) for comp, k in zip(uniq, counts)}
    we: dict[int, int] = {}
    for comp, k in cwe.items():
        we[n - comp[0]] = we.get(n - comp[0], 0) + k
    zero_count = cwe.get((n,) + (0,) * (p - 1), 0)
    dim = spec.K
    z = zero_count
    while z > 1:
        if z % p:
            raise AssertionError("zero-codeword count is not a power of p")
        z //= p
        dim -= 1
    return EnumerationResult(length=n, dimension=dim, cwe=cwe, we=we, table=table)


def verify_dimension(ds: DefiningSet, budget: int | None = DEFAULT_BUDGET) -> int:
    """log_p of the number of distinct codewords (equals K iff encoding is injective)."""
    return complete_weight_enumerator(ds, budget).dimension


def we_from_cwe(cwe: dict[tuple[int, ...], int], n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for comp, k in cwe.items():
        out[n - comp[0]] = out.get(n - comp[0], 0) + k
    return out


def dump_lines(ds: DefiningSet):
    """Debug dump, one line per codeword: 'a=<coeffs> b=<coeffs> c=<symbols>'.

    Symbols are base-36 digit characters in defining-set order; messages are
    emitted in index order of (a, b).
    """
    spec = ds.spec
    f1, f2 = spec.field1, spec.field2
    for ai in range(f1.q):
        a = f1.from_index(ai)
        for bi in range(f2.q):
            b = f2.from_index(bi)
            word = encode(ds, a, b)
            yield "a={} b={} c={}".format(
                ",".join(map(str, a.coeffs)),
                ",".join(map(str, b.coeffs)),
                "".join(_DIGITS[s] for s in word),
            )

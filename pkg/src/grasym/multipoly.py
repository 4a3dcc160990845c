"""Sparse multivariate polynomials and symbolic determinants of linear pencils.

Polynomials map exponent tuples to nonzero Scalars.  A pencil is a square grid
of degree-<=1 homogeneous polynomials in unknowns t_1..t_m; its determinant is
expanded by memoized cofactors along rows, pruning zero entries.  Large pencils
whose nonzero pattern splits into independent row/column blocks factor into a
signed product of block determinants, which keeps each cofactor expansion
within the size cap.

Witness searches are deterministic: over a field larger than the total degree
a grid with degree+1 values per variable must contain a nonzero point of a
nonzero polynomial, and small fields are enumerated exhaustively, falling back
to extension fields of degree 2 and 3 only to report where a point would live.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import DimensionTooLarge, SearchSpaceTooLarge
from .fields import Field, Scalar, embed_scalar, extend_field

PENCIL_DET_MAX_DIM = 12
SEARCH_BUDGET = 10 ** 7


class MultiPoly:
    __slots__ = ("field", "num_vars", "terms")

    def __init__(self, field: Field, num_vars: int, terms=None):
        self.field = field
        self.num_vars = num_vars
        cleaned = {}
        if terms:
            for exps, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if len(exps) != num_vars:
                    raise ValueError("exponent tuple of wrong length")
                if not coeff.is_zero:
                    cleaned[tuple(exps)] = coeff
        self.terms = cleaned

    @classmethod
    def zero(cls, field: Field, num_vars: int) -> "MultiPoly":
        return cls(field, num_vars)

    @classmethod
    def constant(cls, field: Field, num_vars: int, c: Scalar) -> "MultiPoly":
        return cls(field, num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, field: Field, num_vars: int, i: int, coeff=None) -> "MultiPoly":
        e = [0] * num_vars
        e[i] = 1
        return cls(field, num_vars, {tuple(e): coeff if coeff is not None else field.one()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            s = c if cur is None else cur + c
            if s.is_zero:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.field, self.num_vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.field, self.num_vars,
                         {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, Scalar):
            return MultiPoly(self.field, self.num_vars,
                             {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = out.get(e)
                s = prod if cur is None else cur + prod
                if s.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.field, self.num_vars, out)

    def evaluate(self, point) -> Scalar:
        if len(point) != self.num_vars:
            raise ValueError("point has wrong arity")
        acc = self.field.zero()
        for exps, coeff in self.terms.items():
            term = coeff
            for e, v in zip(exps, point):
                for _ in range(e):
                    term = term * v
            acc = acc + term
        return acc

    def change_field(self, target: Field) -> "MultiPoly":
        return MultiPoly(target, self.num_vars,
                         {e: embed_scalar(c, target) for e, c in self.terms.items()})

    def sorted_terms(self):
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.field == other.field
                and self.num_vars == other.num_vars and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(f"t{i + 1}^{e}" if e > 1 else f"t{i + 1}"
                            for i, e in enumerate(exps) if e)
            if not mono:
                parts.append(repr(coeff))
            elif coeff == self.field.one():
                parts.append(mono)
            else:
                parts.append(f"{coeff!r}*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class GramPencil:
    """A square grid of linear homogeneous polynomials in t_1..t_m."""

    field: Field
    dim: int
    num_vars: int
    entries: tuple

    def __post_init__(self):
        for row in self.entries:
            for p in row:
                if p.total_degree() > 1 or any(sum(e) == 0 for e in p.terms):
                    raise ValueError("pencil entries must be linear homogeneous")

    def evaluate(self, point) -> list:
        return [[p.evaluate(point) for p in row] for row in self.entries]


def pencil_det(pencil: GramPencil) -> MultiPoly:
    """Exact determinant by cofactor expansion, memoized on column sets."""
    d = pencil.dim
    if d > PENCIL_DET_MAX_DIM:
        raise DimensionTooLarge(f"pencil dimension {d} exceeds {PENCIL_DET_MAX_DIM}")
    field, m = pencil.field, pencil.num_vars
    one = MultiPoly.constant(field, m, field.one())
    if d == 0:
        return one
    entries = pencil.entries
    memo: dict = {}

    def minor(cols: frozenset) -> MultiPoly:
        if not cols:
            return one
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = d - len(cols)
        acc = MultiPoly.zero(field, m)
        for pos, c in enumerate(sorted(cols)):
            entry = entries[row][c]
            if entry.is_zero:
                continue
            sub = minor(cols - {c})
            term = entry * sub
            if pos % 2:
                term = -term
            acc = acc + term
        memo[cols] = acc
        return acc

    return minor(frozenset(range(d)))


def _support_components(entries, d: int):
    """Connected components of the nonzero pattern (rows and cols as nodes)."""
    parent = list(range(2 * d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in range(d):
        for j in range(d):
            if not entries[i][j].is_zero:
                union(i, d + j)
    groups: dict = {}
    for i in range(d):
        groups.setdefault(find(i), [[], []])[0].append(i)
    for j in range(d):
        groups.setdefault(find(d + j), [[], []])[1].append(j)
    return [(tuple(rows), tuple(cols)) for rows, cols in groups.values()]


def structured_det(pencil: GramPencil) -> MultiPoly:
    """Exact determinant factored over independent blocks of the support.

    Equal to pencil_det but tolerates large dimensions whenever the nonzero
    pattern decomposes into blocks of size <= the cofactor cap, as Gram
    matrices of degree-homogeneous functionals always do.
    """
    d = pencil.dim
    field, m = pencil.field, pencil.num_vars
    zero = MultiPoly.zero(field, m)
    components = _support_components(pencil.entries, d)
    for rows, cols in components:
        if len(rows) != len(cols):
            return zero
    # base permutation: i-th smallest row of a component pairs with its i-th
    # smallest column; the block determinants then multiply with this sign
    col_of_row = [0] * d
    factors = []
    for rows, cols in components:
        for r, c in zip(rows, cols):
            col_of_row[r] = c
        sub = GramPencil(field, len(rows), m,
                         tuple(tuple(pencil.entries[i][j] for j in cols) for i in rows))
        factors.append(pencil_det(sub))
    inversions = sum(1 for a in range(d) for b in range(a + 1, d)
                     if col_of_row[a] > col_of_row[b])
    det = MultiPoly.constant(field, m, field.one())
    for f in factors:
        if f.is_zero:
            return zero
        det = det * f
    if inversions % 2:
        det = -det
    return det


@dataclass(frozen=True)
class PointResult:
    """Outcome of a nonvanishing-point search."""

    status: str  # "found" | "identically_zero" | "no_point_over_field"
    point: tuple | None = None
    extension_degree: int | None = None
    extension_point: tuple | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def _grid_values(field: Field, count: int):
    if field.char == 0:
        return [field.from_int(k) for k in range(count)]
    return [field.element_at(k) for k in range(min(count, field.size()))]


def _search_grid(poly: MultiPoly, values):
    for point in itertools.product(values, repeat=poly.num_vars):
        if not poly.evaluate(point).is_zero:
            return point
    return None


def nonvanishing_point(poly: MultiPoly, field: Field,
                       max_extension: int = 3, seed: int | None = None) -> PointResult:
    """Deterministically find a point where poly is nonzero over field.

    The polynomial may live over field or over a subfield; coefficients are
    embedded first.  With |field| > total degree the grid bound guarantees the
    walk succeeds; smaller fields are enumerated exhaustively and, failing
    that, degree-2 and degree-3 extensions are probed so the refutation can
    name the least extension holding a witness.
    """
    if poly.field != field:
        poly = poly.change_field(field)
    if poly.is_zero:
        return PointResult("identically_zero")
    m = poly.num_vars
    deg = poly.total_degree()
    if deg == 0:
        point = tuple([field.zero()] * m)
        assert not poly.evaluate(point).is_zero
        return PointResult("found", point=point)
    size = field.size()
    if size is None or size > deg:
        if seed is not None:
            rng = random.Random(seed)
            bound = deg + 1 if size is None else size
            for _ in range(32):
                point = tuple(field.from_int(rng.randrange(bound)) if size is None
                              else field.element_at(rng.randrange(size)) for _ in range(m))
                if not poly.evaluate(point).is_zero:
                    return PointResult("found", point=point)
        point = _search_grid(poly, _grid_values(field, deg + 1))
        assert point is not None, "grid bound violated; polynomial arithmetic is broken"
        return PointResult("found", point=point)
    if size ** m > SEARCH_BUDGET:
        raise SearchSpaceTooLarge(f"{size}^{m} points exceed the exhaustive budget")
    point = _search_grid(poly, list(field.elements()))
    if point is not None:
        return PointResult("found", point=point)
    for r in range(2, max_extension + 1):
        big = extend_field(field, r)
        big_poly = poly.change_field(big)
        if big.size() > big_poly.total_degree():
            ext_point = _search_grid(big_poly, _grid_values(big, deg + 1))
        elif big.size() ** m <= SEARCH_BUDGET:
            ext_point = _search_grid(big_poly, list(big.elements()))
        else:
            ext_point = None
        if ext_point is not None:
            return PointResult("no_point_over_field", extension_degree=r,
                               extension_point=ext_point)
    return PointResult("no_point_over_field")

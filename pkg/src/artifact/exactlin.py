"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts mapping a column index to a nonzero coefficient.
Coefficients are ``int`` whenever they happen to be integral and
``fractions.Fraction`` otherwise; both behave as exact rationals.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Rational = Fraction
SparseVector = Dict[int, "int | Fraction"]


def rat(x) -> "int | Fraction":
    """Normalize a number to an exact rational, preferring ``int``."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return rat(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


def clean(v: dict) -> dict:
    """Drop zero entries in place and return the vector."""
    for c in [c for c, x in v.items() if x == 0]:
        del v[c]
    return v


def axpy(y: dict, a, x: dict) -> dict:
    """y += a*x in place, keeping y free of zeros."""
    for c, xv in x.items():
        t = y.get(c, 0) + a * xv
        if t == 0:
            y.pop(c, None)
        else:
            if isinstance(t, Fraction) and t.denominator == 1:
                t = t.numerator
            y[c] = t
    return y


def scale(v: dict, a) -> dict:
    if a == 0:
        return {}
    out = {}
    for c, x in v.items():
        t = a * x
        if isinstance(t, Fraction) and t.denominator == 1:
            t = t.numerator
        out[c] = t
    return out


class Echelon:
    """Incrementally maintained row-echelon form with unit pivots.

    Rows are keyed by their pivot column.  Each stored row has a 1 in its
    pivot column and is fully reduced against pivots that were present when
    it was inserted; :meth:`rref` performs the final back substitution.
    """

    def __init__(self):
        self.rows: Dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        """Return v reduced modulo the row space (a new dict)."""
        v = dict(v)
        rows = self.rows
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = v.get(c, 0)
            if a == 0:
                continue
            row = rows[c]
            for c2, x in row.items():
                t = v.get(c2, 0) - a * x
                if t == 0:
                    v.pop(c2, None)
                else:
                    if isinstance(t, Fraction) and t.denominator == 1:
                        t = t.numerator
                    v[c2] = t
                    if c2 in rows and c2 not in seen and c2 != c:
                        heapq.heappush(heap, c2)
        return v

    def add(self, v: dict) -> Optional[int]:
        """Insert v; return its new pivot column, or None if dependent."""
        v = self.reduce(v)
        if not v:
            return None
        p = min(v)
        a = v[p]
        if a != 1:
            v = {c: _div(x, a) for c, x in v.items()}
        self.rows[p] = v
        return p

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def rref(self) -> Dict[int, dict]:
        """Fully reduced rows keyed by pivot, computed right to left."""
        out: Dict[int, dict] = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for c in sorted((c for c in row if c != p and c in out)):
                a = row.get(c, 0)
                if a:
                    axpy(row, -a, out[c])
            out[p] = row
        return out


def row_reduce(rows: Sequence[dict]) -> Tuple[List[dict], int, List[int]]:
    """Reduced row-echelon form of ``rows``.

    Returns the nonzero RREF rows sorted by pivot, the rank and the pivot
    columns.  The RREF of a row space is unique, so the output does not
    depend on the order in which rows are eliminated.
    """
    ech = Echelon()
    for r in rows:
        ech.add(r)
    full = ech.rref()
    piv = sorted(full)
    return [full[p] for p in piv], len(piv), piv


def rank(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def subspace_ops(U: Sequence[dict], W: Sequence[dict]) -> Tuple[int, int, int, int]:
    """(dim U, dim W, dim U+W, dim U∩W) for spans of sparse vectors."""
    du = rank(U)
    dw = rank(W)
    ds = rank(list(U) + list(W))
    return du, dw, ds, du + dw - ds


class QuotientSpace:
    """Span of ``ambient_keys`` modulo the span of ``relations``.

    Column i of a relation refers to ``ambient_keys[i]``.  The basis is the
    set of non-pivot keys of the reduced relation matrix, so a key earlier
    in the ambient order is preferentially rewritten in terms of later keys.
    """

    def __init__(self, ambient_keys: Sequence[Hashable], relations: Iterable[dict]):
        self.ambient_keys = list(ambient_keys)
        self.index = {k: i for i, k in enumerate(self.ambient_keys)}
        ech = Echelon()
        nrel = 0
        for r in relations:
            nrel += 1
            ech.add(r)
        self.relation_count = nrel
        self.rref_rows = ech.rref()
        self.basis_columns = [i for i in range(len(self.ambient_keys)) if i not in self.rref_rows]
        self.basis_keys = [self.ambient_keys[i] for i in self.basis_columns]
        self.basis_position = {k: j for j, k in enumerate(self.basis_keys)}
        # pivot column -> expression of that key in basis columns
        self.pivot_map: Dict[int, dict] = {}
        for p, row in self.rref_rows.items():
            self.pivot_map[p] = {c: -x for c, x in row.items() if c != p}

    @property
    def dimension(self) -> int:
        return len(self.basis_keys)

    def __len__(self) -> int:
        return self.dimension

    def normal_form_column(self, i: int) -> dict:
        """Normal form of ambient column i, as {basis column: coeff}."""
        nf = self.pivot_map.get(i)
        if nf is None:
            return {i: 1}
        return nf

    def normal_form(self, v: dict) -> dict:
        """Reduce a vector indexed by ambient columns to basis columns."""
        out: dict = {}
        for i, a in v.items():
            if a:
                axpy(out, a, self.normal_form_column(i))
        return out

    def reduce_keys(self, v: dict) -> dict:
        """Reduce a vector indexed by ambient keys, returning basis keys."""
        col = {}
        for k, a in v.items():
            i = self.index[k]
            col[i] = col.get(i, 0) + a
        nf = self.normal_form(clean(col))
        return {self.ambient_keys[i]: a for i, a in nf.items()}

    def key_normal_form(self, key) -> dict:
        i = self.index[key]
        return {self.ambient_keys[c]: a for c, a in self.normal_form_column(i).items()}


def build_quotient(ambient_keys: Sequence[Hashable], relations: Iterable[dict]) -> QuotientSpace:
    return QuotientSpace(ambient_keys, relations)


class SpanSolver:
    """Express vectors as combinations of labelled generators."""

    def __init__(self):
        self.rows: Dict[int, Tuple[dict, dict]] = {}

    def _reduce(self, v: dict, comb: dict) -> Tuple[dict, dict]:
        v = dict(v)
        comb = dict(comb)
        rows = self.rows
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = v.get(c, 0)
            if not a:
                continue
            row, rc = rows[c]
            axpy(v, -a, row)
            axpy(comb, -a, rc)
            for c2 in row:
                if c2 in rows and c2 not in seen and c2 in v:
                    heapq.heappush(heap, c2)
        return v, comb

    def add(self, v: dict, label) -> bool:
        v, comb = self._reduce(v, {label: 1})
        if not v:
            return False
        p = min(v)
        a = v[p]
        if a != 1:
            v = scale(v, Fraction(1) / a)
            comb = scale(comb, Fraction(1) / a)
        self.rows[p] = (v, comb)
        return True

    def express(self, v: dict) -> Optional[dict]:
        """Labels and coefficients summing to v, or None if v is not in the span."""
        r, comb = self._reduce(v, {})
        if r:
            return None
        return scale(comb, -1)

    @property
    def rank(self) -> int:
        return len(self.rows)

"""Representation theory of symmetric groups and polynomial GL_n-modules.

Permutations are tuples in one-line notation on {0,...,N-1}; the text form
is 1-based cycle notation.  Partitions are :class:`Partition` tuples.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import NonIntegralMultiplicity


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            parts = tuple(sorted(parts, reverse=True))
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def doubled(self) -> "Partition":
        return Partition(2 * p for p in self)

    def odd_parts(self) -> int:
        return sum(p % 2 for p in self)

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(self[i] >= other[i] for i in range(len(other)))

    def __str__(self) -> str:
        if not self:
            return "()"
        out = []
        for p, grp in itertools.groupby(self):
            m = len(list(grp))
            out.append(str(p) if m == 1 else f"{p}^{m}")
        return "(" + ",".join(out) + ")"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def parse_partition(text: str) -> Partition:
    """Parse "(3,1^2)", "3,1,1" or "[3,1,1]"."""
    body = text.strip().strip("()[]")
    parts: List[int] = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "^" in tok:
            p, m = tok.split("^")
            parts.extend([int(p)] * int(m))
        else:
            parts.append(int(tok))
    return Partition(parts)


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(n, m):
        if n == 0:
            yield ()
            return
        for p in range(min(n, m), 0, -1):
            for rest in rec(n - p, p):
                yield (p,) + rest

    for p in rec(n, max_part):
        yield Partition(p)


@lru_cache(maxsize=None)
def partition_list(n: int) -> Tuple[Partition, ...]:
    return tuple(partitions(n))


def specht_dim(lam: Sequence[int]) -> int:
    """Dimension of the Specht module S^lam by the hook length formula."""
    lam = Partition(lam)
    n = lam.size
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def z_factor(mu: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    for p, grp in itertools.groupby(sorted(mu, reverse=True)):
        m = len(list(grp))
        z *= p ** m * math.factorial(m)
    return z


def class_size(mu: Sequence[int]) -> int:
    return math.factorial(sum(mu)) // z_factor(mu)


def _beta(lam: Tuple[int, ...], length: int) -> Tuple[int, ...]:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        t = b - h
        if t < 0 or t in beta:
            continue
        height = sum(1 for c in beta if t < c < b)
        nb = frozenset((beta - {b}) | {t})
        total += (-1) ** height * _mn(nb, rest)
    return total


def irr_character(lam: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi^lam at a permutation of the given cycle type (Murnaghan–Nakayama)."""
    lam = Partition(lam)
    mu = tuple(sorted((int(x) for x in cycle_type if x), reverse=True))
    if lam.size != sum(mu):
        raise ValueError("partition and cycle type have different sizes")
    length = len(lam) or 1
    return _mn(frozenset(_beta(tuple(lam), length)), mu)


@lru_cache(maxsize=None)
def character_table(n: int) -> Dict[Partition, Dict[Partition, int]]:
    return {lam: {mu: irr_character(lam, mu) for mu in partition_list(n)} for lam in partition_list(n)}


class ClassFunction:
    """A class function on S_N, stored densely over cycle types."""

    def __init__(self, N: int, values: Optional[Dict[Sequence[int], object]] = None):
        self.N = N
        vals = {mu: Fraction(0) for mu in partition_list(N)}
        for mu, v in (values or {}).items():
            vals[Partition(mu)] = Fraction(v)
        self.values = vals

    def __call__(self, mu) -> Fraction:
        return self.values[Partition(mu)]

    def degree(self) -> Fraction:
        return self.values[Partition([1] * self.N)] if self.N else self.values[Partition()]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.N, {mu: self.values[mu] + other.values[mu] for mu in self.values})

    def __mul__(self, c) -> "ClassFunction":
        return ClassFunction(self.N, {mu: v * c for mu, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.N == other.N and self.values == other.values

    def inner(self, other: "ClassFunction") -> Fraction:
        s = Fraction(0)
        for mu, v in self.values.items():
            s += Fraction(class_size(mu)) * v * other.values[mu]
        return s / math.factorial(self.N)

    @classmethod
    def irreducible(cls, lam: Sequence[int]) -> "ClassFunction":
        lam = Partition(lam)
        return cls(lam.size, {mu: irr_character(lam, mu) for mu in partition_list(lam.size)})

    @classmethod
    def from_decomposition(cls, N: int, mult: Dict[Sequence[int], int]) -> "ClassFunction":
        out = cls(N)
        for lam, m in mult.items():
            out = out + cls.irreducible(lam) * m
        return out

    def __repr__(self) -> str:
        return f"ClassFunction({self.N}, {{{', '.join(f'{mu}: {v}' for mu, v in self.values.items())}}})"


def decompose_character(chi: ClassFunction) -> Dict[Partition, int]:
    """Multiplicities of irreducibles in chi; raises if chi is not a character."""
    out: Dict[Partition, int] = {}
    fact = math.factorial(chi.N)
    for lam in partition_list(chi.N):
        s = Fraction(0)
        for mu, v in chi.values.items():
            if v:
                s += class_size(mu) * v * irr_character(lam, mu)
        m = s / fact
        if m.denominator != 1 or m < 0:
            raise NonIntegralMultiplicity(f"multiplicity of {lam} is {m}")
        if m:
            out[lam] = int(m)
    return out


# ---------------------------------------------------------------- GL side

def schur_dim(lam: Sequence[int], n: int) -> int:
    """dim of the Schur functor S_lam(K^n), by the Weyl dimension formula."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    l = list(lam) + [0] * (n - len(lam))
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= l[i] - l[j] + j - i
            den *= j - i
    return num // den


def schur_dim_ssyt(lam: Sequence[int], n: int) -> int:
    """dim S_lam(K^n) by counting semistandard tableaux with entries in [n]."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: Dict[Tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            total += rec(idx + 1)
        filling.pop((i, j), None)
        return total

    return rec(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood–Richardson coefficient c^lam_{mu,nu} by LR tableau count.

    Counts semistandard fillings of lam/mu with content nu whose reverse
    reading word (rows top to bottom, each row right to left) is a lattice
    word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not lam.contains(mu):
        return 0
    if not nu:
        return 1
    m = list(mu) + [0] * (len(lam) - len(mu))
    cells = []
    for i, row in enumerate(lam):
        for j in range(row - 1, m[i] - 1, -1):
            cells.append((i, j))
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = len(nu)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((i - 1, j))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            total += rec(idx + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return rec(0)


# ---------------------------------------------------------- permutations

Perm = Tuple[int, ...]


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """The permutation i -> p(q(i))."""
    return tuple(p[i] for i in q)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycle_type(p: Perm) -> Partition:
    seen = [False] * len(p)
    lens = []
    for i in range(len(p)):
        if not seen[i]:
            c = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                c += 1
            lens.append(c)
    return Partition(lens)


def perm_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Permutation of {0..n-1} from 1-based cycles, e.g. [(1,3,2)]."""
    p = list(range(n))
    for cyc in cycles:
        cyc = [c - 1 for c in cyc]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def perm_cycles_str(p: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "e"


def representative(mu: Sequence[int]) -> Perm:
    """A permutation of cycle type mu built from consecutive blocks."""
    p = []
    start = 0
    for part in mu:
        block = list(range(start, start + part))
        p.extend(block[1:] + block[:1])
        start += part
    return tuple(p)


class GroupAlgebraElement:
    """Element of the rational group algebra of S_N.

    The product reads left to right: in ``x * y`` the permutation from x
    acts first, i.e. the basis product is sigma*tau = tau o sigma.
    """

    def __init__(self, N: int, terms: Optional[Dict[Perm, object]] = None):
        self.N = N
        self.terms: Dict[Perm, Fraction] = {}
        for p, c in (terms or {}).items():
            if c:
                self.terms[tuple(p)] = self.terms.get(tuple(p), 0) + c
        self.terms = {p: c for p, c in self.terms.items() if c}

    def __add__(self, other):
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, 0) + c
        return GroupAlgebraElement(self.N, t)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement(self.N, {p: c * other for p, c in self.terms.items()})
        t: Dict[Perm, object] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = perm_compose(q, p)
                t[r] = t.get(r, 0) + a * b
        return GroupAlgebraElement(self.N, t)

    __rmul__ = lambda self, c: self * c

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.N == other.N and self.terms == other.terms

    def coefficient_sum(self):
        return sum(self.terms.values())

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: (cycle_type(kv[0]) != Partition([1] * self.N), kv[0]))
        return " + ".join(f"{c}*{perm_cycles_str(p)}" for p, c in items) or "0"


def canonical_tableau(lam: Sequence[int]) -> List[List[int]]:
    """Row-major filling of lam with 0..N-1."""
    rows = []
    k = 0
    for r in Partition(lam):
        rows.append(list(range(k, k + r)))
        k += r
    return rows


def _subgroup_sum(N: int, blocks: List[List[int]], signed: bool) -> GroupAlgebraElement:
    terms: Dict[Perm, int] = {perm_identity(N): 1}
    for blk in blocks:
        if len(blk) < 2:
            continue
        new: Dict[Perm, int] = {}
        for images in itertools.permutations(blk):
            q = list(range(N))
            for a, b in zip(blk, images):
                q[a] = b
            q = tuple(q)
            s = 1
            if signed and (N - len(cycle_type(q))) % 2:
                s = -1
            for p, c in terms.items():
                r = perm_compose(q, p)
                new[r] = new.get(r, 0) + c * s
        terms = new
    return GroupAlgebraElement(N, terms)


def young_symmetrizer(lam: Sequence[int]) -> GroupAlgebraElement:
    """c_lam = b_lam a_lam for the row-major canonical tableau.

    a_lam sums the row group, b_lam is the signed sum over the column group.
    """
    lam = Partition(lam)
    N = lam.size
    tab = canonical_tableau(lam)
    cols = [[tab[i][j] for i in range(len(tab)) if j < len(tab[i])] for j in range(lam[0])] if lam else []
    a = _subgroup_sum(N, tab, signed=False)
    b = _subgroup_sum(N, cols, signed=True)
    return b * a


def central_idempotent(lam: Sequence[int]) -> GroupAlgebraElement:
    """(dim S^lam / N!) sum_sigma chi^lam(sigma) sigma."""
    lam = Partition(lam)
    N = lam.size
    c = Fraction(specht_dim(lam), math.factorial(N))
    return GroupAlgebraElement(N, {p: c * irr_character(lam, cycle_type(p)) for p in itertools.permutations(range(N))})


# ------------------------------------------------------------- induction

def _poly_mul(a: Dict[Tuple[int, ...], Fraction], b: Dict[Tuple[int, ...], Fraction]):
    out: Dict[Tuple[int, ...], Fraction] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(sorted(ka + kb, reverse=True))
            out[k] = out.get(k, 0) + va * vb
    return out


def _wreath_sum(chi: ClassFunction, a: int, wreath: bool) -> Dict[Tuple[int, ...], Fraction]:
    """Sum of chi^{⊗a} over S_m ≀ S_a (or S_m^a), bucketed by cycle type in S_{ma}.

    For a cycle of length l of the top permutation, the tuples of base
    elements whose cycle product has type rho number (m!)^(l-1)·|C_rho| and
    contribute cycle lengths l·rho with value chi(rho).
    """
    m = chi.N
    mfact = math.factorial(m)

    def cycle_dist(l: int):
        out: Dict[Tuple[int, ...], Fraction] = {}
        for rho in partition_list(m):
            w = Fraction(mfact ** (l - 1) * class_size(rho)) * chi(rho)
            if w:
                k = tuple(sorted((l * r for r in rho), reverse=True))
                out[k] = out.get(k, 0) + w
        return out

    if not wreath:
        tops = [(Partition([1] * a), 1)]
    else:
        tops = [(pi, class_size(pi)) for pi in partition_list(a)]
    total: Dict[Tuple[int, ...], Fraction] = {}
    for pi, cnt in tops:
        acc: Dict[Tuple[int, ...], Fraction] = {(): Fraction(1)}
        for l in pi:
            acc = _poly_mul(acc, cycle_dist(l))
        for k, v in acc.items():
            total[k] = total.get(k, 0) + v * cnt
    return total


def induce_characters(parts: Sequence[Tuple[ClassFunction, int]], wreath: Optional[Sequence[bool]] = None) -> ClassFunction:
    """Character of Ind_{prod S_{m_i}≀S_{a_i}}^{S_N} of the tensor product of chi_i^{⊗a_i}."""
    if wreath is None:
        wreath = [True] * len(parts)
    N = sum(chi.N * a for chi, a in parts)
    acc: Dict[Tuple[int, ...], Fraction] = {(): Fraction(1)}
    order = 1
    for (chi, a), w in zip(parts, wreath):
        acc = _poly_mul(acc, _wreath_sum(chi, a, w))
        order *= math.factorial(chi.N) ** a * (math.factorial(a) if w else 1)
    vals = {}
    for mu in partition_list(N):
        s = acc.get(tuple(mu), 0)
        vals[mu] = Fraction(z_factor(mu)) * s / order
    return ClassFunction(N, vals)

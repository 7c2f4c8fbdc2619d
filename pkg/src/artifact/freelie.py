"""Free groups, the Magnus expansion and free Lie algebras in the Lyndon basis.

A word is stored as a tuple of nonzero ints: ``+i`` is x_i, ``-i`` is x_i^-1.
Noncommutative monomials are tuples of generator indices (1-based).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NotInFiltration, WordTooLong

LETTER_BUDGET = 10 ** 5

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, "int | Fraction"]


def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class FreeWord:
    """A freely reduced element of the free group F_n."""

    __slots__ = ("n", "letters")

    def __init__(self, letters: Iterable[int] = (), n: Optional[int] = None, budget: int = LETTER_BUDGET):
        letters = _reduce(letters)
        if len(letters) > budget:
            raise WordTooLong(f"word of length {len(letters)} exceeds budget {budget}")
        top = max((abs(a) for a in letters), default=0)
        self.n = max(n or 0, top)
        self.letters = letters

    @classmethod
    def gen(cls, i: int, n: Optional[int] = None) -> "FreeWord":
        return cls((i,), n)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "FreeWord":
        return parse_word(text, n)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters, max(self.n, other.n))

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-a for a in reversed(self.letters)), self.n)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(base.letters * abs(k), self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({self})"


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """[a,b] = a b a^-1 b^-1."""
    return a * b * a.inverse() * b.inverse()


_TOKEN = re.compile(r"\s*(x\d+\^-1|x\d+|\[|\]|,|\*|1)")


def parse_word(text: str, n: Optional[int] = None) -> FreeWord:
    """Parse ``word := term ("*" term)*`` with brackets and inverses."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    idx = 0

    def word() -> FreeWord:
        nonlocal idx
        w = term()
        while idx < len(tokens) and tokens[idx] == "*":
            idx += 1
            w = w * term()
        return w

    def term() -> FreeWord:
        nonlocal idx
        if idx >= len(tokens):
            raise ValueError("unexpected end of word")
        t = tokens[idx]
        idx += 1
        if t == "[":
            a = word()
            if idx >= len(tokens) or tokens[idx] != ",":
                raise ValueError("expected ',' in commutator")
            idx += 1
            b = word()
            if idx >= len(tokens) or tokens[idx] != "]":
                raise ValueError("expected ']' in commutator")
            idx += 1
            return commutator(a, b)
        if t == "1":
            return FreeWord()
        if t.endswith("^-1"):
            return FreeWord((-int(t[1:-3]),))
        if t.startswith("x"):
            i = int(t[1:])
            if i < 1:
                raise ValueError("generator indices start at 1")
            return FreeWord((i,))
        raise ValueError(f"unexpected token {t!r}")

    w = word()
    if idx != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    if n is not None:
        if w.n > n:
            raise ValueError(f"word {text!r} uses generators beyond x{n}")
        w.n = n
    return w


# ------------------------------------------------------------- Magnus

class TruncatedSeries:
    """Element of the free associative power series algebra truncated at degree N."""

    def __init__(self, n: int, N: int, coeffs: Optional[Poly] = None):
        self.n = n
        self.N = N
        self.coeffs: Poly = {m: c for m, c in (coeffs or {}).items() if c and len(m) <= N}

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.N, other.N)
        out: Poly = {}
        for ma, a in self.coeffs.items():
            la = len(ma)
            for mb, b in other.coeffs.items():
                if la + len(mb) <= N:
                    m = ma + mb
                    out[m] = out.get(m, 0) + a * b
        return TruncatedSeries(max(self.n, other.n), N, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.N == other.N and self.coeffs == other.coeffs

    def degree_part(self, r: int) -> Poly:
        return {m: c for m, c in self.coeffs.items() if len(m) == r}

    def __repr__(self) -> str:
        return f"TruncatedSeries({format_poly(self.coeffs)})"


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=lambda m: (len(m), m)):
        c = p[m]
        mono = "".join(f"X{i}" for i in m) or "1"
        if mono == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def magnus(w: FreeWord, N: int) -> TruncatedSeries:
    """Magnus expansion x_i -> 1 + X_i, truncated at degree N."""
    cur: Poly = {(): 1}
    for a in w.letters:
        i = abs(a)
        new: Poly = {}
        for m, c in cur.items():
            new[m] = new.get(m, 0) + c
            room = N - len(m)
            if a > 0:
                if room >= 1:
                    mm = m + (i,)
                    new[mm] = new.get(mm, 0) + c
            else:
                sign = -1
                mm = m
                for _ in range(room):
                    mm = mm + (i,)
                    new[mm] = new.get(mm, 0) + sign * c
                    sign = -sign
        cur = {m: c for m, c in new.items() if c}
    return TruncatedSeries(w.n, N, cur)


def _lowest_degree(w: FreeWord, N: int) -> Tuple[int, Poly]:
    """Lowest positive degree <= N with a nonzero Magnus term (N+1 if none)."""
    s = magnus(w, N)
    degs = [len(m) for m in s.coeffs if m]
    low = min(degs) if degs else N + 1
    return low, s.coeffs


class AtLeast(int):
    """Integer lower bound reported when a cutoff is reached; prints as "≥N"."""

    def __str__(self) -> str:
        return f"≥{int(self)}"

    __repr__ = __str__


def lcs_degree(w: FreeWord, N: int) -> int:
    """Largest r <= N with w in Gamma_r, or ``AtLeast(N)`` when w lies in Gamma_N."""
    low, _ = _lowest_degree(w, N)
    if low >= N:
        return AtLeast(N)
    return low


# ---------------------------------------------------------- Lyndon words

def is_lyndon(w: Sequence[int]) -> bool:
    w = tuple(w)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(n: int, r: int) -> Tuple[Monomial, ...]:
    """Lyndon words of length exactly r over 1..n, in lexicographic order (Duval)."""
    out = []
    w = [0]
    while w:
        if len(w) == r:
            out.append(tuple(x + 1 for x in w))
        m = len(w)
        while len(w) < r:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
        if w:
            w[-1] += 1
    return tuple(out)


def lyndon_basis(n: int, r: int) -> List[Monomial]:
    return list(lyndon_words(n, r))


def _mobius(k: int) -> int:
    res = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            res = -res
        p += 1
    if k > 1:
        res = -res
    return res


def witt_dim(n: int, r: int) -> int:
    """Dimension of the degree-r part of the free Lie algebra on n generators."""
    if r < 1:
        return 0
    total = sum(_mobius(d) * n ** (r // d) for d in range(1, r + 1) if r % d == 0)
    return total // r


@lru_cache(maxsize=None)
def standard_factorization(w: Monomial) -> Tuple[Monomial, Monomial]:
    """w = uv with v the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


@lru_cache(maxsize=None)
def bracketing(w: Monomial):
    """Standard bracketing as a nested tuple tree: ints are leaves, pairs are brackets."""
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (bracketing(u), bracketing(v))


def tree_poly(t) -> Poly:
    """Expand a nested bracket tree in the free associative algebra."""
    if isinstance(t, int):
        return {(t,): 1}
    a, b = tree_poly(t[0]), tree_poly(t[1])
    return poly_commutator(a, b)


@lru_cache(maxsize=None)
def _lyndon_poly(w: Monomial) -> Tuple[Tuple[Monomial, int], ...]:
    return tuple(sorted(tree_poly(bracketing(w)).items()))


def lyndon_poly(w: Monomial) -> Poly:
    return dict(_lyndon_poly(w))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, x in a.items():
        for mb, y in b.items():
            m = ma + mb
            out[m] = out.get(m, 0) + x * y
    return {m: c for m, c in out.items() if c}


def poly_add(a: Poly, b: Poly, s=1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + s * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_commutator(a: Poly, b: Poly) -> Poly:
    return poly_add(poly_mul(a, b), poly_mul(b, a), -1)


def lie_coordinates(p: Poly) -> Dict[Monomial, "int | Fraction"]:
    """Coordinates of a homogeneous Lie polynomial in the Lyndon basis.

    Uses triangularity: the expansion of a Lyndon bracket is the word itself
    plus lexicographically larger words.
    """
    rem = {m: c for m, c in p.items() if c}
    out: Dict[Monomial, "int | Fraction"] = {}
    while rem:
        w = min(rem)
        if not is_lyndon(w):
            raise NotInFiltration(f"not a Lie element: leading monomial {w} is not Lyndon")
        c = rem[w]
        out[w] = c
        for m, x in _lyndon_poly(w):
            v = rem.get(m, 0) - c * x
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return out


class LieElement:
    """Homogeneous element of the free Lie algebra Lie_r(n) in Lyndon coordinates."""

    __slots__ = ("n", "degree", "coords")

    def __init__(self, n: int, degree: int, coords: Optional[Dict[Monomial, object]] = None):
        self.n = n
        self.degree = degree
        self.coords = {tuple(w): c for w, c in (coords or {}).items() if c}
        for w in self.coords:
            if len(w) != degree or not is_lyndon(w):
                raise ValueError(f"{w} is not a Lyndon word of length {degree}")

    @classmethod
    def generator(cls, i: int, n: int) -> "LieElement":
        return cls(n, 1, {(i,): 1})

    @classmethod
    def from_poly(cls, p: Poly, n: int, degree: int) -> "LieElement":
        return cls(n, degree, lie_coordinates(p))

    @classmethod
    def from_tree(cls, t, n: int) -> "LieElement":
        p = tree_poly(t)
        deg = _tree_degree(t)
        return cls(n, deg, lie_coordinates(p))

    def to_poly(self) -> Poly:
        out: Poly = {}
        for w, c in self.coords.items():
            for m, x in _lyndon_poly(w):
                out[m] = out.get(m, 0) + c * x
        return {m: c for m, c in out.items() if c}

    def __add__(self, other: "LieElement") -> "LieElement":
        if self.degree != other.degree and self.coords and other.coords:
            raise ValueError("degrees differ")
        c = dict(self.coords)
        for w, x in other.coords.items():
            c[w] = c.get(w, 0) + x
        return LieElement(max(self.n, other.n), self.degree if self.coords else other.degree, c)

    def __neg__(self) -> "LieElement":
        return LieElement(self.n, self.degree, {w: -c for w, c in self.coords.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, c) -> "LieElement":
        return LieElement(self.n, self.degree, {w: x * c for w, x in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.coords == other.coords and (
            self.degree == other.degree or not self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def __repr__(self) -> str:
        if not self.coords:
            return "0"
        return " + ".join(f"{c}*{format_bracket(bracketing(w))}" for w, c in sorted(self.coords.items()))


def _tree_degree(t) -> int:
    return 1 if isinstance(t, int) else _tree_degree(t[0]) + _tree_degree(t[1])


def format_bracket(t) -> str:
    if isinstance(t, int):
        return f"x{t}"
    return f"[{format_bracket(t[0])},{format_bracket(t[1])}]"


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    n = max(a.n, b.n)
    deg = a.degree + b.degree
    if a.is_zero() or b.is_zero():
        return LieElement(n, deg)
    return LieElement(n, deg, lie_coordinates(poly_commutator(a.to_poly(), b.to_poly())))


def lie_class(w: FreeWord, r: int, n: Optional[int] = None) -> LieElement:
    """Class of w in Gamma_r / Gamma_{r+1} = Lie_r(n)."""
    n = max(n or 0, w.n)
    low, coeffs = _lowest_degree(w, r)
    if low < r:
        raise NotInFiltration(f"word lies in Gamma_{low} but not in Gamma_{r}")
    part = {m: c for m, c in coeffs.items() if len(m) == r}
    return LieElement(n, r, lie_coordinates(part))


def group_commutator_word(t) -> FreeWord:
    """Group commutator with the bracketing of a nested tree (ints are generators)."""
    if isinstance(t, int):
        return FreeWord((t,))
    return commutator(group_commutator_word(t[0]), group_commutator_word(t[1]))

"""Endomorphisms of F_n, the Andreadakis filtration and the Johnson homomorphism.

Composition is ``(f∘g)(x) = f(g(x))``. For an endomorphism f and x in F_n,
``[f, x] = f(x) x^-1``.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import IndexOutOfRange, NotInFiltration, WordTooLong
from .freelie import (
    AtLeast,
    FreeWord,
    LETTER_BUDGET,
    LieElement,
    Poly,
    bracketing,
    group_commutator_word,
    is_lyndon,
    lcs_degree,
    lie_class,
    lie_coordinates,
    lyndon_poly,
    parse_word,
    poly_add,
    poly_mul,
)


class Endo:
    """Endomorphism of F_n given by the images of x_1, ..., x_n."""

    __slots__ = ("n", "images")

    def __init__(self, images: Sequence[FreeWord], n: Optional[int] = None):
        n = len(images) if n is None else n
        if len(images) != n:
            raise ValueError(f"expected {n} images, got {len(images)}")
        for w in images:
            if w.n > n:
                raise IndexOutOfRange(f"image {w} uses generators beyond x{n}")
        self.n = n
        self.images: Tuple[FreeWord, ...] = tuple(images)

    @classmethod
    def identity(cls, n: int) -> "Endo":
        return cls([FreeWord((i,), n) for i in range(1, n + 1)], n)

    @classmethod
    def from_strings(cls, words: Sequence[str], n: Optional[int] = None) -> "Endo":
        n = len(words) if n is None else n
        return cls([parse_word(w, n) for w in words], n)

    @classmethod
    def from_json(cls, text: str) -> "Endo":
        data = json.loads(text)
        return cls.from_strings(data["images"], int(data["n"]))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "images": [str(w) for w in self.images]})

    def apply(self, w: FreeWord, budget: int = LETTER_BUDGET) -> FreeWord:
        out: List[int] = []
        for a in w.letters:
            img = self.images[abs(a) - 1].letters
            if a < 0:
                img = tuple(-b for b in reversed(img))
            for b in img:
                if out and out[-1] == -b:
                    out.pop()
                else:
                    out.append(b)
            if len(out) > budget:
                raise WordTooLong(f"image exceeds {budget} letters")
        return FreeWord(out, self.n, budget)

    def __call__(self, w: FreeWord) -> FreeWord:
        return self.apply(w)

    def __eq__(self, other) -> bool:
        return isinstance(other, Endo) and self.n == other.n and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Endo({', '.join(str(w) for w in self.images)})"

    def is_identity(self) -> bool:
        return all(w.letters == (i,) for i, w in enumerate(self.images, 1))

    def abelianization(self) -> List[List[int]]:
        """Integer matrix whose column i is the abelianized image of x_i."""
        m = [[0] * self.n for _ in range(self.n)]
        for i, w in enumerate(self.images):
            for a in w.letters:
                m[abs(a) - 1][i] += 1 if a > 0 else -1
        return m


def compose(f: Endo, g: Endo) -> Endo:
    """f∘g, i.e. x -> f(g(x))."""
    if f.n != g.n:
        raise ValueError("rank mismatch in composition")
    return Endo([f.apply(w) for w in g.images], f.n)


def commutator_with(f: Endo, i: int) -> FreeWord:
    """[f, x_i] = f(x_i) x_i^-1."""
    return f.images[i - 1] * FreeWord((-i,), f.n)


def andreadakis_level(f: Endo, N: int) -> int:
    """Largest r with f in E_r (so [f,x_i] in Gamma_{r+1}); ``AtLeast(N)`` once r reaches N."""
    low = N + 1
    for i in range(1, f.n + 1):
        low = min(low, int(lcs_degree(commutator_with(f, i), N + 1)))
        if low == 1:
            return 0
    level = low - 1
    if level >= N:
        return AtLeast(N)
    return level


def equivalent(f: Endo, g: Endo, N: int) -> bool:
    """[f,x] ≡ [g,x] modulo Gamma_{N+1} for every generator x."""
    for a, b in zip(f.images, g.images):
        if lcs_degree(a * b.inverse(), N + 1) < N + 1:
            return False
    return True


def k_generator(i: int, j: int, k: Optional[int] = None, n: Optional[int] = None) -> Endo:
    """K_{i,j}: x_i -> x_j x_i x_j^-1, or K_{i,j,k}: x_i -> x_i [x_j, x_k]; other generators fixed."""
    idx = [i, j] + ([k] if k is not None else [])
    n = max(idx) if n is None else n
    if len(set(idx)) != len(idx):
        raise IndexOutOfRange(f"indices must be distinct: {idx}")
    if any(a < 1 or a > n for a in idx):
        raise IndexOutOfRange(f"indices {idx} out of range for n={n}")
    images = [FreeWord((a,), n) for a in range(1, n + 1)]
    if k is None:
        images[i - 1] = FreeWord((j, i, -j), n)
    else:
        images[i - 1] = FreeWord((i, j, k, -j, -k), n)
    return Endo(images, n)


class JohnsonValue:
    """Element of H*⊗Lie_{r+1}(n): (root i, Lyndon word of length r+1) -> coefficient."""

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Optional[Dict[Tuple[int, Tuple[int, ...]], object]] = None):
        self.n = n
        self.degree = degree
        self.terms = {}
        for (i, w), c in (terms or {}).items():
            if not c:
                continue
            w = tuple(w)
            if len(w) != degree + 1 or not is_lyndon(w):
                raise ValueError(f"{w} is not a Lyndon word of length {degree + 1}")
            if not 1 <= i <= n or max(w) > n:
                raise IndexOutOfRange(f"term {(i, w)} out of range for n={n}")
            self.terms[(i, w)] = c

    @classmethod
    def from_components(cls, n: int, degree: int, comps: Dict[int, LieElement]) -> "JohnsonValue":
        terms = {}
        for i, a in comps.items():
            for w, c in a.coords.items():
                terms[(i, w)] = c
        return cls(n, degree, terms)

    def component(self, i: int) -> LieElement:
        return LieElement(self.n, self.degree + 1, {w: c for (j, w), c in self.terms.items() if j == i})

    def __add__(self, other: "JohnsonValue") -> "JohnsonValue":
        t = dict(self.terms)
        for key, c in other.terms.items():
            t[key] = t.get(key, 0) + c
        return JohnsonValue(max(self.n, other.n), self.degree, t)

    def __neg__(self) -> "JohnsonValue":
        return JohnsonValue(self.n, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "JohnsonValue") -> "JohnsonValue":
        return self + (-other)

    def __mul__(self, c) -> "JohnsonValue":
        return JohnsonValue(self.n, self.degree, {k: x * c for k, x in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, JohnsonValue):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*v{i}⊗{w}" for (i, w), c in sorted(self.terms.items()))


def johnson_hom(f: Endo, r: int) -> JohnsonValue:
    """τ̃_r(f) = Σ_i v_i ⊗ class of [f, x_i] in Lie_{r+1}(n)."""
    if r < 1:
        raise NotInFiltration("the Johnson homomorphism is defined for r >= 1")
    level = andreadakis_level(f, r)
    if level < r:
        raise NotInFiltration(f"endomorphism has level {level} < {r}")
    comps = {i: lie_class(commutator_with(f, i), r + 1, f.n) for i in range(1, f.n + 1)}
    return JohnsonValue.from_components(f.n, r, comps)


def tau_section(phi: JohnsonValue) -> Endo:
    """ψ with ψ(x_i) = (product of group commutators realising φ(x_i)) · x_i."""
    n = phi.n
    images = []
    for i in range(1, n + 1):
        w = FreeWord((), n)
        for (j, word), c in sorted(phi.terms.items()):
            if j != i:
                continue
            if c != int(c):
                raise ValueError("tau_section needs integral coefficients")
            w = w * group_commutator_word(bracketing(word)) ** int(c)
        images.append(w * FreeWord((i,), n))
    return Endo(images, n)


def sigma_tilde(f: Endo) -> Endo:
    """x_i -> x_i f(x_i)^-1 x_i, an involution that inverts [f, x_i]."""
    return Endo([FreeWord((i,), f.n) * w.inverse() * FreeWord((i,), f.n)
                 for i, w in enumerate(f.images, 1)], f.n)


def right_inverse(f: Endo, r: int, N: int) -> Endo:
    """f^R_N with f∘f^R_N in E_N, built recursively from sigma_tilde."""
    if N < r + 1:
        raise ValueError("need N >= r + 1")
    level = andreadakis_level(f, r)
    if level < r:
        raise NotInFiltration(f"endomorphism has level {level} < {r}")
    g = sigma_tilde(f)
    for _ in range(r + 2, N + 1):
        g = compose(g, sigma_tilde(compose(f, g)))
    return g


def group_commutator(f: Endo, g: Endo, r: int, s: int) -> Endo:
    """f g f^R g^R for f in E_r and g in E_s, accurate modulo E_{r+s+1}."""
    N = r + s + 1
    return compose(compose(compose(f, g), right_inverse(f, r, N)), right_inverse(g, s, N))


# ---------------------------------------------------- derivation algebra

def _apply_derivation(images: Dict[int, Poly], p: Poly) -> Poly:
    """Extend X_j -> images[j] to the tensor algebra by the Leibniz rule."""
    out: Poly = {}
    for m, c in p.items():
        for pos, j in enumerate(m):
            img = images.get(j)
            if not img:
                continue
            term = poly_mul(poly_mul({m[:pos]: c}, img), {m[pos + 1:]: 1})
            out = poly_add(out, term)
    return out


def _derivation_images(a: JohnsonValue) -> Dict[int, Poly]:
    return {i: a.component(i).to_poly() for i in range(1, a.n + 1)}


def derivation_bracket(a: JohnsonValue, b: JohnsonValue) -> JohnsonValue:
    """[D_a, D_b](x_i) = D_a(D_b x_i) − D_b(D_a x_i), in H*⊗Lie."""
    n = max(a.n, b.n)
    deg = a.degree + b.degree
    da, db = _derivation_images(a), _derivation_images(b)
    comps = {}
    for i in range(1, n + 1):
        p = poly_add(_apply_derivation(da, db.get(i, {})), _apply_derivation(db, da.get(i, {})), -1)
        comps[i] = LieElement(n, deg + 1, lie_coordinates(p))
    return JohnsonValue.from_components(n, deg, comps)

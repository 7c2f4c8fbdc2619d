"""Colored diagram spaces B_{d,k}(n), the tree module and the contraction map.

An element of B_{d,k}(n) is stored as {(coloring, D-key): coeff}.  The
coloring is a weakly increasing word in 1..n and the D-key is a basis key of
the coinvariants of D_{d,k} under the Young subgroup permuting legs of equal
color.  Tree elements are stored through their Lyndon coordinates, i.e. as
elements of H*⊗Lie_{r+1}(n).
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import RankMismatch
from .exactlin import QuotientSpace, axpy, clean, rat
from .freelie import (
    LieElement,
    Poly,
    bracketing,
    lie_coordinates,
    lyndon_basis,
    lyndon_poly,
    poly_add,
    tree_poly,
)
from .johnson import Endo, JohnsonValue, johnson_hom
from .opendiag import (
    DiagramSpace,
    Key,
    OpenDiagram,
    build_space,
    canonical,
    leg_slot_map,
    relabel,
)
from .symrep import (
    Partition,
    central_idempotent,
    class_size,
    cycle_type,
    irr_character,
    partition_list,
    schur_dim,
    specht_dim,
)

BKey = Tuple[Tuple[int, ...], Key]
BElement = Dict[BKey, object]

# Vertex of the bracket [A, B] in a tree: slot 0 faces the root, then B, then A
# (counterclockwise, root drawn at the bottom).
OUT, RIGHT, LEFT = 0, 1, 2


def composition(w: Sequence[int]) -> Tuple[int, ...]:
    """Block sizes of a weakly increasing word."""
    out = []
    prev = None
    for a in w:
        if a == prev:
            out[-1] += 1
        else:
            out.append(1)
            prev = a
    return tuple(out)


def _adjacent_in_blocks(comp: Sequence[int]) -> List[int]:
    out = []
    start = 0
    for size in comp:
        out.extend(range(start, start + size - 1))
        start += size
    return out


def _transposition(N: int, i: int, j: int) -> Tuple[int, ...]:
    p = list(range(N))
    p[i], p[j] = j, i
    return tuple(p)


class BSpace:
    """B_{d,k}(n) ≅ V_n^{⊗N} ⊗_{S_N} D_{d,k} with N = 2d-k."""

    def __init__(self, d: int, k: int, n: int, connected_only: bool = False):
        self.d, self.k, self.n = d, k, n
        self.N = 2 * d - k
        self.connected_only = connected_only
        self.valid = d >= 1 and 0 <= k and self.N >= 1 and k <= 2 * d - 1
        self.dspace: Optional[DiagramSpace] = build_space(d, k, connected_only) if self.valid else None
        self._coinv: Dict[Tuple[int, ...], QuotientSpace] = {}
        self._basis: Optional[List[BKey]] = None

    def coinvariants(self, comp: Tuple[int, ...]) -> QuotientSpace:
        q = self._coinv.get(comp)
        if q is None:
            ds = self.dspace
            keys = ds.basis
            index = {b: i for i, b in enumerate(keys)}
            rels = []
            for pos in _adjacent_in_blocks(comp):
                sigma = _transposition(self.N, pos, pos + 1)
                for b in keys:
                    L, k, partner = b
                    img = ds.reduce_partner(relabel(L, k, partner, leg_slot_map(L, k, sigma)))
                    rel = {index[x]: c for x, c in img.items()}
                    axpy(rel, -1, {index[b]: 1})
                    if rel:
                        rels.append(rel)
            q = QuotientSpace(keys, rels)
            self._coinv[comp] = q
        return q

    def colorings(self) -> Iterable[Tuple[int, ...]]:
        return itertools.combinations_with_replacement(range(1, self.n + 1), self.N)

    @property
    def basis(self) -> List[BKey]:
        if self._basis is None:
            out = []
            if self.valid and self.dspace.dimension:
                for w in self.colorings():
                    for key in self.coinvariants(composition(w)).basis_keys:
                        out.append((w, key))
            self._basis = out
        return self._basis

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def weight_dimension(self, w: Sequence[int]) -> int:
        return self.coinvariants(composition(tuple(w))).dimension

    # -------------------------------------------------------------- normal forms

    def add_d_combination(self, out: BElement, w: Tuple[int, ...], dcomb: Dict[Key, object]) -> None:
        """out += the class of (w; dcomb) for a sorted coloring w and a D-combination."""
        q = self.coinvariants(composition(w))
        for key, c in dcomb.items():
            for key2, c2 in q.key_normal_form(key).items():
                t = out.get((w, key2), 0) + c * c2
                if t:
                    out[(w, key2)] = t
                else:
                    out.pop((w, key2), None)

    def add_graph(self, out: BElement, colors: Sequence[int], L: int, k: int, partner: Sequence[int], coeff) -> None:
        """out += coeff * (diagram with leg l colored colors[l])."""
        if not self.valid or not coeff:
            return
        if L != self.N or k != self.k:
            raise ValueError("graph does not belong to this space")
        order = sorted(range(L), key=lambda l: colors[l])
        newpos = [0] * L
        for t, l in enumerate(order):
            newpos[l] = t
        moved = relabel(L, k, partner, newpos + list(range(L, L + 3 * k)))
        w = tuple(sorted(colors))
        dcomb = self.dspace.reduce_partner(moved, coeff)
        if dcomb:
            self.add_d_combination(out, w, dcomb)

    def normal_form(self, u: BElement) -> BElement:
        out: BElement = {}
        for (w, key), c in u.items():
            self.add_graph(out, w, key[0], key[1], key[2], c)
        return out

    def vector(self, u: BElement) -> Dict[int, object]:
        idx = self.basis_index
        return {idx[b]: c for b, c in u.items()}

    @property
    def basis_index(self) -> Dict[BKey, int]:
        if not hasattr(self, "_bindex"):
            self._bindex = {b: i for i, b in enumerate(self.basis)}
        return self._bindex

    def __repr__(self) -> str:
        return f"B_{{{self.d},{self.k}}}({self.n}) (dim {self.dimension})"


@lru_cache(maxsize=None)
def b_space(d: int, k: int, n: int, connected_only: bool = False) -> BSpace:
    return BSpace(d, k, n, connected_only)


def b_element_to_json(u: BElement) -> str:
    items = []
    for (w, key), c in sorted(u.items()):
        c = Fraction(c)
        items.append({"coloring": list(w), "diagram": OpenDiagram.from_key(key).to_dict(),
                      "coeff": f"{c.numerator}/{c.denominator}"})
    return json.dumps(items, sort_keys=True)


def b_element_from_json(text: str, space: BSpace) -> BElement:
    out: BElement = {}
    for item in json.loads(text):
        sign, diag = OpenDiagram.from_dict(item["diagram"])
        if not sign:
            continue
        w = [int(a) for a in item["coloring"]]
        if any(a < 1 or a > space.n for a in w):
            raise RankMismatch(f"coloring {w} uses colors beyond n={space.n}")
        space.add_graph(out, w, diag.legs, diag.trivalent, diag.partner, sign * Fraction(item["coeff"]))
    return out


# ------------------------------------------------------------------ isotypic parts

def _class_sum_matrix(space: DiagramSpace, mu: Partition) -> Dict[Key, Dict[Key, object]]:
    """Columns of the class sum of cycle type mu acting on D."""
    N = space.legs
    cols: Dict[Key, Dict[Key, object]] = {b: {} for b in space.basis}
    for p in itertools.permutations(range(N)):
        if cycle_type(p) != mu:
            continue
        for b in space.basis:
            L, k, partner = b
            img = space.reduce_partner(relabel(L, k, partner, leg_slot_map(L, k, p)))
            axpy(cols[b], 1, img)
    return cols


def _mat_vec(m: Dict[Key, Dict[Key, object]], v: Dict[Key, object]) -> Dict[Key, object]:
    out: Dict[Key, object] = {}
    for b, c in v.items():
        axpy(out, c, m[b])
    return out


def _central_character(lam: Partition, mu: Partition):
    return Fraction(class_size(mu) * irr_character(lam, mu), specht_dim(lam))


_SEPARATORS = None


def _separating_classes(N: int) -> List[Partition]:
    """Cycle types (beyond the identity) ordered by class size."""
    one = Partition([1] * N)
    return sorted((mu for mu in partition_list(N) if mu != one), key=lambda mu: (class_size(mu), mu))


@lru_cache(maxsize=None)
def d_projectors(d: int, k: int, connected_only: bool = False) -> Dict[Partition, Dict[Key, Dict[Key, object]]]:
    """Matrices of the central idempotents e_λ on D_{d,k}, for λ occurring in D_{d,k}.

    Each e_λ is a polynomial in a few class sums (Lagrange interpolation on
    their central characters), which avoids summing over all of S_N.
    """
    from .opendiag import decompose_sn

    space = build_space(d, k, connected_only)
    if space.dimension == 0:
        return {}
    present = sorted(decompose_sn(space))
    mats: Dict[Partition, Dict] = {}
    out = {}
    for lam in present:
        cols = {b: {b: 1} for b in space.basis}
        for mu in present:
            if mu == lam:
                continue
            sep = next(c for c in _separating_classes(space.legs)
                       if _central_character(lam, c) != _central_character(mu, c))
            if sep not in mats:
                mats[sep] = _class_sum_matrix(space, sep)
            a, b = _central_character(lam, sep), _central_character(mu, sep)
            new = {}
            for key, col in cols.items():
                v = _mat_vec(mats[sep], col)
                axpy(v, -b, col)
                new[key] = {x: rat(c / (a - b)) if isinstance(c, Fraction) else rat(Fraction(c) / (a - b))
                            for x, c in v.items()}
            cols = new
        out[lam] = cols
    return out


def isotypic_project(lam: Sequence[int], u: BElement, space: BSpace) -> BElement:
    """Apply the central idempotent of S^λ to the diagram part of u."""
    lam = Partition(lam)
    projs = d_projectors(space.d, space.k, space.connected_only)
    if lam not in projs:
        return {}
    m = projs[lam]
    out: BElement = {}
    for (w, key), c in u.items():
        dcomb = {x: c * y for x, y in m[key].items()}
        space.add_d_combination(out, w, dcomb)
    return out


def isotypic_project_direct(lam: Sequence[int], u: BElement, space: BSpace) -> BElement:
    """Same projection summed over all of S_N; used as an oracle for small N."""
    e = central_idempotent(lam)
    out: BElement = {}
    ds = space.dspace
    for (w, key), c in u.items():
        L, k, partner = key
        dcomb: Dict[Key, object] = {}
        for p, a in e.terms.items():
            axpy(dcomb, a * c, ds.reduce_partner(relabel(L, k, partner, leg_slot_map(L, k, p))))
        space.add_d_combination(out, w, clean(dcomb))
    return out


def gl_decompose(d: int, k: int, n: int, connected_only: bool = False) -> Dict[Partition, int]:
    from .opendiag import decompose_sn

    space = build_space(d, k, connected_only)
    if space.legs < 1:
        return {}
    return {lam: m for lam, m in decompose_sn(space).items() if len(lam) <= n}


def schur_weyl_dimension(d: int, k: int, n: int, connected_only: bool = False) -> int:
    return sum(m * schur_dim(lam, n) for lam, m in gl_decompose(d, k, n, connected_only).items())


# ------------------------------------------------------------------ trees

class TreeElement(JohnsonValue):
    """Element of T_r(n), stored by Lyndon coordinates of its image under Φ^-1."""

    @classmethod
    def from_johnson(cls, jv: JohnsonValue) -> "TreeElement":
        return cls(jv.n, jv.degree, jv.terms)

    def __add__(self, other):
        return TreeElement.from_johnson(JohnsonValue.__add__(self, other))

    def __neg__(self):
        return TreeElement.from_johnson(JohnsonValue.__neg__(self))

    def __mul__(self, c):
        return TreeElement.from_johnson(JohnsonValue.__mul__(self, c))

    __rmul__ = __mul__


def phi(i: int, a: LieElement) -> TreeElement:
    """Φ(v_i ⊗ a): the rooted tree of the bracket a with root colored v_i."""
    return TreeElement(a.n, a.degree - 1, {(i, w): c for w, c in a.coords.items()})


def tree_graph(t) -> Tuple[List[int], Tuple[int, ...]]:
    """Graph of a nested bracket: legs are the root (slot 0) and the leaves in order.

    Returns (leaf colors, partner array).
    """
    leaves: List[int] = []

    def count(node) -> int:
        return 1 if isinstance(node, int) else count(node[0]) + count(node[1])

    m = count(t)
    L = m + 1
    partner: List[int] = [-1] * (L + 3 * (m - 1))
    nv = [0]

    def build(node) -> int:
        if isinstance(node, int):
            leaves.append(node)
            return len(leaves)
        a = build(node[0])
        b = build(node[1])
        base = L + 3 * nv[0]
        nv[0] += 1
        partner[base + LEFT], partner[a] = a, base + LEFT
        partner[base + RIGHT], partner[b] = b, base + RIGHT
        return base + OUT

    top = build(t)
    partner[0], partner[top] = top, 0
    return leaves, tuple(partner)


def read_tree(L: int, k: int, partner: Sequence[int], root: int, colors: Sequence[int]):
    """Read a rooted tree graph as a nested bracket (leaf colors from ``colors``)."""
    def walk(slot: int):
        if slot < L:
            return colors[slot]
        v0 = L + 3 * ((slot - L) // 3)
        j = slot - v0
        right = v0 + (j + RIGHT) % 3
        left = v0 + (j + LEFT) % 3
        return (walk(partner[left]), walk(partner[right]))

    return walk(partner[root])


def tree_terms(t: TreeElement):
    """(coeff, root color, leaf colors, partner) for each Lyndon tree in t."""
    for (i, w), c in sorted(t.terms.items()):
        leaves, partner = tree_graph(bracketing(w))
        yield c, i, leaves, partner


# ---------------------------------------------------------------- grafting

def glue(LA: int, kA: int, pA: Sequence[int], LB: int, kB: int, pB: Sequence[int],
         pairs: Sequence[Tuple[int, int]]) -> Tuple[int, int, Tuple[int, ...], List[Tuple[str, int]]]:
    """Join graph A and graph B by identifying leg a of A with leg b of B for (a, b) in pairs.

    Returns (L, k, partner, leg origins) where the remaining legs of A come
    first (in order), then the remaining legs of B.
    """
    usedA = {a for a, _ in pairs}
    usedB = {b for _, b in pairs}
    glueA = {a: b for a, b in pairs}
    glueB = {b: a for a, b in pairs}
    legsA = [l for l in range(LA) if l not in usedA]
    legsB = [l for l in range(LB) if l not in usedB]
    L = len(legsA) + len(legsB)
    k = kA + kB
    newA: Dict[int, int] = {}
    newB: Dict[int, int] = {}
    for t, l in enumerate(legsA):
        newA[l] = t
    for t, l in enumerate(legsB):
        newB[l] = len(legsA) + t
    for s in range(LA, LA + 3 * kA):
        newA[s] = L + (s - LA)
    for s in range(LB, LB + 3 * kB):
        newB[s] = L + 3 * kA + (s - LB)

    def resolve(side: str, s: int) -> Tuple[str, int]:
        # follow the partner of slot s through glued legs
        for _ in range(2 * (LA + LB) + 2):
            if side == "A":
                p = pA[s]
                if p in glueA:
                    side, s = "B", glueA[p]
                    continue
                return "A", p
            p = pB[s]
            if p in glueB:
                side, s = "A", glueB[p]
                continue
            return "B", p
        raise ValueError("closed loop of glued legs")

    partner = [-1] * (L + 3 * k)
    for side, slots, new in (("A", range(LA + 3 * kA), newA), ("B", range(LB + 3 * kB), newB)):
        for s in slots:
            if s not in new:
                continue
            ps, p = resolve(side, s)
            partner[new[s]] = (newA if ps == "A" else newB)[p]
    origins = [("A", l) for l in legsA] + [("B", l) for l in legsB]
    return L, k, tuple(partner), origins


def contract(u: BElement, t: TreeElement, src: BSpace) -> BElement:
    """c(u ⊗ t) = Σ over injective leaf-to-leg matchings of matching colors, grafting the tree."""
    if t.n != src.n:
        raise RankMismatch(f"tree over n={t.n} but space over n={src.n}")
    r = t.degree
    dst = b_space(src.d, src.k + r, src.n, src.connected_only)
    out: BElement = {}
    if src.N < r + 1 or not dst.valid:
        return out
    terms = list(tree_terms(t))
    for (w, key), cu in u.items():
        L, k, partner = key
        for ct, i, leaves, tpart in terms:
            choices = []
            for y in leaves:
                choices.append([l for l in range(L) if w[l] == y])
            for alpha in itertools.product(*choices):
                if len(set(alpha)) != len(alpha):
                    continue
                pairs = [(a, l + 1) for l, a in enumerate(alpha)]
                L2, k2, p2, origins = glue(L, k, partner, r + 2, r, tpart, pairs)
                colors = [w[l] if side == "A" else i for side, l in origins]
                dst.add_graph(out, colors, L2, k2, p2, cu * ct)
    return out


def gamma_matrix(t: TreeElement, src: BSpace) -> Dict[BKey, BElement]:
    """Columns of γ(t): B_{d,k}(n) -> B_{d,k+r}(n) on the basis of src."""
    return {b: contract({b: 1}, t, src) for b in src.basis}


def apply_gamma(t: TreeElement, u: BElement, src: BSpace) -> BElement:
    return contract(u, t, src)


def bracket_beta(u: BElement, f: Endo, r: int, src: BSpace) -> BElement:
    """Graded bracket action of f in E_r on B: (-1)^r c(u ⊗ Φτ̃_r(f))."""
    t = TreeElement.from_johnson(johnson_hom(f, r))
    out = contract(u, t, src)
    if r % 2:
        out = {b: -c for b, c in out.items()}
    return out


# ------------------------------------------------------------- tree bracket

def _graft_into_leaves(s: TreeElement, t: TreeElement) -> TreeElement:
    """Σ over leaves of t colored x_i: graft s (root v_i) at that leaf."""
    n = max(s.n, t.n)
    acc: Dict[int, Poly] = {}
    for cs, i, sleaves, spart in tree_terms(s):
        for ct, j, tleaves, tpart in tree_terms(t):
            for l, y in enumerate(tleaves):
                if y != i:
                    continue
                # glue t's leaf l+1 to s's root (slot 0)
                L2, k2, p2, origins = glue(len(tleaves) + 1, len(tleaves) - 1, tpart,
                                           len(sleaves) + 1, len(sleaves) - 1, spart, [(l + 1, 0)])
                colors = [tleaves[q - 1] if side == "A" else sleaves[q - 1] if q else 0
                          for side, q in origins]
                root = next(pos for pos, (side, q) in enumerate(origins) if side == "A" and q == 0)
                expr = read_tree(L2, k2, p2, root, colors)
                acc[j] = poly_add(acc.get(j, {}), {m: cs * ct * c for m, c in tree_poly(expr).items()})
    deg = s.degree + t.degree
    terms = {}
    for j, p in acc.items():
        for w, c in lie_coordinates(p).items():
            terms[(j, w)] = c
    return TreeElement(n, deg, terms)


def tree_bracket(s: TreeElement, t: TreeElement) -> TreeElement:
    """[s, t]: graft s into the leaves of t, minus graft t into the leaves of s."""
    if s.n != t.n:
        raise RankMismatch("trees over different n")
    return _graft_into_leaves(s, t) - _graft_into_leaves(t, s)


# ---------------------------------------------------------------- vanishing

def lie_isotypic_spanning(mu: Sequence[int], r: int, n: int) -> List[Dict]:
    """Spanning set of Lie_{r+1}(n)_μ as Lyndon coordinate dicts."""
    mu = Partition(mu)
    e = central_idempotent(mu)
    out = []
    for w in lyndon_basis(n, r + 1):
        p = lyndon_poly(w)
        q: Dict = {}
        for perm, a in e.terms.items():
            for m, c in p.items():
                # place permutation: position t moves to perm[t]
                mm = [0] * len(m)
                for pos, letter in enumerate(m):
                    mm[perm[pos]] = letter
                mm = tuple(mm)
                q[mm] = q.get(mm, 0) + a * c
        q = {m: c for m, c in q.items() if c}
        if q:
            out.append(lie_coordinates(q))
    return out


def vanishing_check(lam: Sequence[int], mu: Sequence[int], d: int, k: int, r: int, n: int) -> bool:
    """True iff c vanishes on B_{d,k}(n)_λ ⊗ (H*⊗Lie_{r+1}(n)_μ)."""
    src = b_space(d, k, n)
    lam = Partition(lam)
    projected = []
    for b in src.basis:
        v = isotypic_project(lam, {b: 1}, src)
        if v:
            projected.append(v)
    if not projected:
        return True
    lies = lie_isotypic_spanning(mu, r, n)
    for coords in lies:
        for i in range(1, n + 1):
            t = TreeElement(n, r, {(i, w): c for w, c in coords.items()})
            for v in projected:
                if contract(v, t, src):
                    return False
    return True

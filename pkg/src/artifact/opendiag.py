"""Open Jacobi diagrams with labeled legs and the spaces D_{d,k}.

A diagram with L legs and k trivalent vertices is a fixed-point-free
involution ``partner`` on slots 0..L+3k-1.  Slot l < L is leg l; slots
L+3v, L+3v+1, L+3v+2 are the three half-edges at vertex v in counterclockwise
cyclic order.  Canonical forms keep leg labels fixed and minimise the
partner array over vertex renumberings, rotations and reflections; a
reflection at one vertex costs a sign.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exactlin import QuotientSpace, axpy, clean
from .symrep import (
    ClassFunction,
    Partition,
    decompose_character,
    partition_list,
    representative,
)

Key = Tuple[int, int, Tuple[int, ...]]  # (legs, trivalent count, canonical partner array)


# ----------------------------------------------------------------- canonical form

def has_tadpole(L: int, partner: Sequence[int]) -> bool:
    for s in range(L, len(partner)):
        p = partner[s]
        if p >= L and p != s and (p - L) // 3 == (s - L) // 3:
            return True
    return False


@lru_cache(maxsize=1 << 20)
def canonical(L: int, k: int, partner: Tuple[int, ...]) -> Tuple[int, Optional[Key]]:
    """Return (sign, key); sign 0 means the diagram vanishes by AS."""
    n = L + 3 * k
    if has_tadpole(L, partner):
        return 0, None
    old2new = [-1] * n
    new2old = [-1] * n
    for s in range(L):
        old2new[s] = s
        new2old[s] = s
    enc: List[int] = []
    best: List = [None, 0]  # best code, version
    parities: set = set()

    def place(p: int, base: int, flip: int) -> None:
        v0 = L + 3 * ((p - L) // 3)
        j = p - v0
        order = (j, (j + 2) % 3, (j + 1) % 3) if flip else (j, (j + 1) % 3, (j + 2) % 3)
        for t, jj in enumerate(order):
            old2new[v0 + jj] = base + t
            new2old[base + t] = v0 + jj

    def unplace(p: int, base: int) -> None:
        v0 = L + 3 * ((p - L) // 3)
        for jj in range(3):
            old2new[v0 + jj] = -1
            new2old[base + jj] = -1

    def rec(t: int, nv: int, parity: int, eq: bool) -> None:
        start = len(enc)
        while t < n:
            p = partner[new2old[t]]
            q = old2new[p]
            fresh = q < 0
            val = L + 3 * nv if fresh else q
            if eq:
                b = best[0][t]
                if val > b:
                    del enc[start:]
                    return
                if val < b:
                    eq = False
            if fresh:
                for flip in (0, 1):
                    place(p, val, flip)
                    enc.append(val)
                    version = best[1]
                    rec(t + 1, nv + 1, parity ^ flip, eq)
                    if best[1] != version:
                        eq = True
                    enc.pop()
                    unplace(p, val)
                del enc[start:]
                return
            enc.append(q)
            t += 1
        if eq:
            parities.add(parity)
        else:
            best[0] = tuple(enc)
            best[1] += 1
            parities.clear()
            parities.add(parity)
        del enc[start:]

    rec(0, 0, 0, False)
    if len(parities) != 1:
        return 0, None
    sign = -1 if parities.pop() else 1
    return sign, (L, k, best[0])


def key_partner(key: Key) -> Tuple[int, ...]:
    return key[2]


def relabel(L: int, k: int, partner: Sequence[int], slot_map: Sequence[int]) -> Tuple[int, ...]:
    """Partner array after moving every slot x to slot_map[x]."""
    out = [0] * len(partner)
    for x, p in enumerate(partner):
        out[slot_map[x]] = slot_map[p]
    return tuple(out)


def components(L: int, k: int, partner: Sequence[int]) -> List[List[int]]:
    """Connected components as sorted lists of nodes (legs 0..L-1, vertices L..L+k-1)."""
    def node(s: int) -> int:
        return s if s < L else L + (s - L) // 3

    parent = list(range(L + k))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s, p in enumerate(partner):
        a, b = find(node(s)), find(node(p))
        if a != b:
            parent[a] = b
    groups: Dict[int, List[int]] = {}
    for x in range(L + k):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def is_connected(L: int, k: int, partner: Sequence[int]) -> bool:
    return len(components(L, k, partner)) == 1


# -------------------------------------------------------------------- enumeration

def _raw_graphs(L: int, k: int) -> Iterable[Tuple[int, ...]]:
    """Partner arrays covering every isomorphism class, with symmetry breaking."""
    n = L + 3 * k
    partner = [-1] * n

    def rec(touched: int):
        s = next((x for x in range(n) if partner[x] < 0), None)
        if s is None:
            yield tuple(partner)
            return
        if s >= L and (s - L) // 3 >= touched:
            return  # the remaining vertices would form a legless component
        vs = (s - L) // 3 if s >= L else -1
        for t in range(s + 1, n):
            if partner[t] >= 0:
                continue
            if t < L:
                pass
            else:
                w = (t - L) // 3
                j = (t - L) % 3
                if w == vs:
                    continue
                if w > touched:
                    break
                if w == touched:
                    if j != 0:
                        continue
                elif j == 2 and partner[t - 1] < 0 and partner[t - 2] >= 0:
                    continue
            partner[s] = t
            partner[t] = s
            nt = touched + 1 if t >= L and (t - L) // 3 == touched else touched
            yield from rec(nt)
            partner[s] = partner[t] = -1

    yield from rec(0)


def _enumerate_keys(L: int, k: int, connected_only: bool) -> List[Key]:
    seen = set()
    for partner in _raw_graphs(L, k):
        if connected_only and not is_connected(L, k, partner):
            continue
        sign, key = canonical(L, k, partner)
        if sign:
            seen.add(key)
    return sorted(seen)


@lru_cache(maxsize=None)
def enumerate_keys(d: int, k: int, connected_only: bool = False, allow_one_leg: bool = False) -> Tuple[Key, ...]:
    """Canonical nonvanishing diagram keys of degree d with k trivalent vertices."""
    top = 2 * d - 1 if allow_one_leg else 2 * d - 2
    if k < 0 or k > top or d < 1:
        return ()
    return tuple(_enumerate_keys(2 * d - k, k, connected_only))


# ------------------------------------------------------------------ diagram type

@dataclass(frozen=True)
class OpenDiagram:
    """A canonical open Jacobi diagram with legs labeled 1..L (slot l carries label l+1)."""

    legs: int
    trivalent: int
    partner: Tuple[int, ...]

    @classmethod
    def from_key(cls, key: Key) -> "OpenDiagram":
        return cls(key[0], key[1], key[2])

    @property
    def key(self) -> Key:
        return (self.legs, self.trivalent, self.partner)

    @property
    def degree(self) -> int:
        return (self.legs + self.trivalent) // 2

    def to_dict(self) -> dict:
        L, k, partner = self.legs, self.trivalent, self.partner

        def node(s: int) -> int:
            return s if s < L else L + (s - L) // 3

        edge_of: Dict[int, int] = {}
        edges = []
        for s, p in enumerate(partner):
            if s < p:
                edge_of[s] = edge_of[p] = len(edges)
                edges.append([node(s), node(p)])
        return {
            "legs": {str(l + 1): l for l in range(L)},
            "edges": edges,
            "cyclic": {str(L + v): [edge_of[L + 3 * v + j] for j in range(3)] for v in range(k)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> Tuple[int, "OpenDiagram"]:
        """Parse a diagram; returns (sign, canonical diagram) with sign 0 for AS-zero input."""
        legs = {int(lbl): int(v) for lbl, v in data["legs"].items()}
        L = len(legs)
        labels = sorted(legs)
        if labels != list(range(1, L + 1)):
            raise ValueError("leg labels must be 1..L")
        cyclic = {int(v): [int(e) for e in es] for v, es in data.get("cyclic", {}).items()}
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
        k = len(cyclic)
        tri = sorted(cyclic)
        tri_index = {v: i for i, v in enumerate(tri)}
        leg_vertex = {v: lbl - 1 for lbl, v in legs.items()}
        ends: Dict[int, List[int]] = {}
        for v, es in cyclic.items():
            if len(es) != 3:
                raise ValueError(f"vertex {v} is not trivalent")
            for j, e in enumerate(es):
                ends.setdefault(e, []).append(L + 3 * tri_index[v] + j)
        for e, (a, b) in enumerate(edges):
            for x in (a, b):
                if x in leg_vertex:
                    ends.setdefault(e, []).append(leg_vertex[x])
        partner = [-1] * (L + 3 * k)
        for e, ss in ends.items():
            if len(ss) != 2:
                raise ValueError(f"edge {e} does not have two ends")
            partner[ss[0]], partner[ss[1]] = ss[1], ss[0]
        if -1 in partner:
            raise ValueError("dangling half-edge")
        sign, key = canonical(L, k, tuple(partner))
        return sign, (cls.from_key(key) if key else None)

    @classmethod
    def from_json(cls, text: str):
        return cls.from_dict(json.loads(text))


def enumerate_diagrams(d: int, k: int, connected_only: bool = False) -> List[OpenDiagram]:
    return [OpenDiagram.from_key(key) for key in enumerate_keys(d, k, connected_only)]


# ------------------------------------------------------------------ relations

def jacobi_terms(L: int, k: int, partner: Sequence[int], s: int) -> List[Tuple[int, ...]]:
    """The three terms of the IHX relation at the internal edge through slot s.

    Writing the vertex at s as (a, b, e) and the one across as (e', c, d), the
    terms place (a,b,c), (b,c,a), (c,a,b) in the positions of a, b, c.
    """
    p = partner[s]
    u0 = L + 3 * ((s - L) // 3)
    v0 = L + 3 * ((p - L) // 3)
    pa = u0 + (s - u0 + 1) % 3
    pb = u0 + (s - u0 + 2) % 3
    pc = v0 + (p - v0 + 1) % 3
    out = [tuple(partner)]
    ident = list(range(len(partner)))
    for cyc in ((pb, pa, pc), (pc, pa, pb)):
        # first cycle: the end at pb moves to pa, pc to pb, pa to pc
        rho = list(ident)
        if cyc == (pb, pa, pc):
            rho[pb], rho[pc], rho[pa] = pa, pb, pc
        else:
            rho[pc], rho[pa], rho[pb] = pa, pb, pc
        out.append(relabel(L, k, partner, rho))
    return out


def internal_edges(L: int, k: int, partner: Sequence[int]) -> List[int]:
    out = []
    for s in range(L, len(partner)):
        p = partner[s]
        if p > s and (p - L) // 3 != (s - L) // 3:
            out.append(s)
    return out


def canonical_combination(L: int, k: int, terms: Iterable[Tuple[int, Tuple[int, ...]]]) -> Dict[Key, int]:
    """Sum of coeff * canonical(partner) over (coeff, partner) pairs."""
    out: Dict[Key, int] = {}
    for c, partner in terms:
        sign, key = canonical(L, k, partner)
        if sign:
            out[key] = out.get(key, 0) + sign * c
    return {key: c for key, c in out.items() if c}


def ihx_relations(keys: Sequence[Key]) -> Iterable[Dict[Key, int]]:
    for L, k, partner in keys:
        for s in internal_edges(L, k, partner):
            rel = canonical_combination(L, k, ((1, t) for t in jacobi_terms(L, k, partner, s)))
            if rel:
                yield rel


# --------------------------------------------------------------------- spaces

class DiagramSpace:
    """D_{d,k} (or its connected part) as a quotient of the span of canonical diagrams."""

    def __init__(self, d: int, k: int, connected_only: bool = False, keys: Optional[Sequence[Key]] = None):
        self.d = d
        self.k = k
        self.connected_only = connected_only
        self.legs = 2 * d - k
        keys = list(keys) if keys is not None else list(enumerate_keys(d, k, connected_only, allow_one_leg=True))
        index = {key: i for i, key in enumerate(keys)}
        rels = []
        for rel in ihx_relations(keys):
            rels.append({index[key]: c for key, c in rel.items()})
        self.quotient = QuotientSpace(keys, rels)

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    @property
    def basis(self) -> List[Key]:
        return self.quotient.basis_keys

    def normal_form(self, v: Dict[Key, object]) -> Dict[Key, object]:
        return self.quotient.reduce_keys(v)

    def key_normal_form(self, key: Key) -> Dict[Key, object]:
        return self.quotient.key_normal_form(key)

    def reduce_partner(self, partner: Tuple[int, ...], coeff=1) -> Dict[Key, object]:
        """Normal form of coeff times an arbitrary (non-canonical) diagram."""
        sign, key = canonical(self.legs, self.k, partner)
        if not sign:
            return {}
        nf = self.quotient.key_normal_form(key)
        return {b: sign * coeff * c for b, c in nf.items()}

    def __repr__(self) -> str:
        tag = "Dc" if self.connected_only else "D"
        return f"{tag}_{{{self.d},{self.k}}} (dim {self.dimension})"


@lru_cache(maxsize=None)
def build_space(d: int, k: int, connected_only: bool = False) -> DiagramSpace:
    return DiagramSpace(d, k, connected_only)


def leg_slot_map(L: int, k: int, sigma: Sequence[int]) -> List[int]:
    return list(sigma) + list(range(L, L + 3 * k))


def perm_action(sigma: Sequence[int], v: Dict[Key, object], space: Optional[DiagramSpace] = None) -> Dict[Key, object]:
    """Relabel legs by sigma (leg l gets label sigma[l]) and renormalize."""
    out: Dict[Key, object] = {}
    for (L, k, partner), c in v.items():
        moved = relabel(L, k, partner, leg_slot_map(L, k, sigma))
        if space is None:
            sign, key = canonical(L, k, moved)
            if sign:
                out[key] = out.get(key, 0) + sign * c
        else:
            axpy(out, 1, space.reduce_partner(moved, c))
    return clean(out)


def character(space: DiagramSpace) -> ClassFunction:
    N = space.legs
    values = {}
    for mu in partition_list(N):
        sigma = representative(mu)
        tr = 0
        for b in space.basis:
            tr += perm_action(sigma, {b: 1}, space).get(b, 0)
        values[mu] = tr
    return ClassFunction(N, values)


def decompose_sn(space: DiagramSpace) -> Dict[Partition, int]:
    if space.legs < 1 or space.dimension == 0:
        return {}
    return decompose_character(character(space))

"""Good-pair decompositions, the connected-component dimension identity, and the graph G_d."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from .colored import b_space, schur_weyl_dimension
from .opendiag import build_space, character
from .symrep import ClassFunction, Partition, induce_characters, partition_list

Triple = Tuple[int, int, int]


def is_good_pair(d: int, k: int) -> bool:
    return d >= 1 and d - 1 <= k <= 2 * d - 2


def good_pairs_up_to(d: int) -> List[Tuple[int, int]]:
    """Good pairs (d', k') with d' ≤ d, in decreasing lexicographic order."""
    return [(a, b) for a in range(d, 0, -1) for b in range(2 * a - 2, a - 2, -1) if is_good_pair(a, b)]


@lru_cache(maxsize=None)
def good_pair_decompositions(d: int, k: int) -> Tuple[Tuple[Triple, ...], ...]:
    """Π(d, k): multisets of good pairs summing to (d, k), as (a_i, d_i, k_i) triples
    strictly decreasing in (d_i, k_i)."""
    if d < 0 or k < 0:
        return ()
    pairs = good_pairs_up_to(d)
    out: List[Tuple[Triple, ...]] = []

    def rec(idx: int, dd: int, kk: int, acc: List[Triple]) -> None:
        if dd == 0 and kk == 0:
            out.append(tuple(acc))
            return
        if idx == len(pairs):
            return
        di, ki = pairs[idx]
        for a in range(min(dd // di, kk // ki if ki else dd // di), 0, -1):
            acc.append((a, di, ki))
            rec(idx + 1, dd - a * di, kk - a * ki, acc)
            acc.pop()
        rec(idx + 1, dd, kk, acc)

    if d == 0:
        return ((),) if k == 0 else ()
    rec(0, d, k, [])
    return tuple(out)


def connected_dims(d: int, k: int, n: int) -> Dict[str, int]:
    """Both sides of dim B_{d,k}(n) = Σ_π Π_i binom(dim B^c_{d_i,k_i}(n) + a_i - 1, a_i)."""
    rhs = 0
    for pi in good_pair_decompositions(d, k):
        term = 1
        for a, di, ki in pi:
            term *= math.comb(schur_weyl_dimension(di, ki, n, True) + a - 1, a)
        rhs += term
    lhs = b_space(d, k, n).dimension if 2 * d - k >= 1 else 0
    return {"lhs": lhs, "rhs": rhs}


def induced_character(d: int, k: int) -> ClassFunction:
    """Σ_π Ind of ⊗ Sym^{a_i}-type wreath powers of the connected characters."""
    N = 2 * d - k
    total = ClassFunction(N, {})
    for pi in good_pair_decompositions(d, k):
        parts = [(character(build_space(di, ki, True)), a) for a, di, ki in pi]
        total = total + induce_characters(parts)
    return total


def th521_check(d: int, k: int, n: int) -> bool:
    """Dimension identity at GL level and character identity at S_N level."""
    if 2 * d - k < 1:
        return not good_pair_decompositions(d, k)
    dims = connected_dims(d, k, n)
    if dims["lhs"] != dims["rhs"]:
        return False
    return character(build_space(d, k)) == induced_character(d, k)


# ----------------------------------------------------------------- G_d

@dataclass
class BipartiteGraph:
    d: int
    left: List[Partition]
    right: List[Partition]
    edges: List[Tuple[Partition, Partition]] = field(default_factory=list)

    def adjacency(self) -> Dict[str, List[str]]:
        adj: Dict[str, List[str]] = {str(v): [] for v in self.left + self.right}
        for a, b in self.edges:
            adj[str(a)].append(str(b))
            adj[str(b)].append(str(a))
        return {v: sorted(ns) for v, ns in adj.items()}

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(("X", v) for v in self.left)
        g.add_nodes_from(("Y", v) for v in self.right)
        g.add_edges_from((("X", a), ("Y", b)) for a, b in self.edges)
        return g


def _is_partition(rows: List[int]) -> bool:
    return all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)) and all(r >= 0 for r in rows)


def box_moves(lam: Partition) -> FrozenSet[Partition]:
    """Remove one box from each of two different rows, then add one box to a third row."""
    rows = list(lam)
    out = set()
    for r1 in range(len(rows)):
        for r2 in range(r1 + 1, len(rows)):
            mid = list(rows)
            mid[r1] -= 1
            mid[r2] -= 1
            if not _is_partition(mid):
                continue
            for r3 in range(len(rows) + 1):
                if r3 in (r1, r2):
                    continue
                new = mid + [0]
                new[r3] += 1
                if _is_partition(new):
                    out.add(Partition(x for x in new if x))
    return frozenset(out)


def build_Gd(d: int) -> BipartiteGraph:
    if d < 2:
        raise ValueError("G_d is defined for d >= 2")
    left = [lam.doubled() for lam in partition_list(d) if tuple(lam) != (d,)]
    right = [mu for mu in partition_list(2 * d - 1) if mu.odd_parts() == 3]
    rset = set(right)
    edges = [(a, b) for a in left for b in sorted(box_moves(a), reverse=True) if b in rset]
    return BipartiteGraph(d, left, right, edges)


def is_connected(g: BipartiteGraph) -> bool:
    nxg = g.to_networkx()
    return nxg.number_of_nodes() > 0 and nx.is_connected(nxg)

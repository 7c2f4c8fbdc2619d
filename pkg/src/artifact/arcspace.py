"""Jacobi diagrams on n arcs: A_d(n), its filtration, the cabling action and P/Q.

An arc diagram is keyed by (composition, D-key): the composition lists how
many legs lie on each arc, and legs are numbered by global position (arc 1
left to right, then arc 2, ...).  The D-key is the canonical graph with legs
labeled by those positions.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .colored import (
    BElement,
    BKey,
    BSpace,
    TreeElement,
    b_space,
    bracket_beta,
    composition,
    d_projectors,
    isotypic_project,
)
from .errors import BudgetExceeded, NotInFiltration, RankMismatch
from .exactlin import Echelon, QuotientSpace, SpanSolver, axpy, clean, rank, subspace_ops
from .freelie import FreeWord
from .johnson import Endo, andreadakis_level, johnson_hom, k_generator
from .opendiag import (
    Key,
    canonical,
    enumerate_keys,
    internal_edges,
    jacobi_terms,
    relabel,
)
from .symrep import Partition, partition_list

ArcKey = Tuple[Tuple[int, ...], Key]
ArcElement = Dict[ArcKey, object]

DEFAULT_BUDGET = 400_000


def compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` ordered parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def arc_of_positions(comp: Sequence[int]) -> List[int]:
    """Arc index (1-based) of each global leg position."""
    out = []
    for i, a in enumerate(comp, 1):
        out.extend([i] * a)
    return out


def arc_canonical(comp: Tuple[int, ...], L: int, k: int, partner: Sequence[int]) -> Tuple[int, Optional[ArcKey]]:
    sign, key = canonical(L, k, tuple(partner))
    if not sign:
        return 0, None
    return sign, (tuple(comp), key)


def _sort_key(key: ArcKey):
    return (key[1][1], key)


def stu_terms(comp: Tuple[int, ...], L: int, k: int, partner: Sequence[int], p: int):
    """T, U, S for adjacent legs p, p+1 on one arc; returns [(coeff, comp, L, k, partner)].

    The relation is T - U - S = 0, where S joins the two legs at a new vertex
    with cyclic order (edge of leg p, edge of leg p+1, new leg).
    """
    out = [(1, comp, L, k, tuple(partner))]
    swap = list(range(L + 3 * k))
    swap[p], swap[p + 1] = p + 1, p
    out.append((-1, comp, L, k, relabel(L, k, partner, swap)))
    if partner[p] == p + 1:
        return out
    L2, k2 = L - 1, k + 1
    m = {}
    for s in range(L):
        if s < p:
            m[s] = s
        elif s > p + 1:
            m[s] = s - 1
    for s in range(L, L + 3 * k):
        m[s] = s - 1
    base = L2 + 3 * k
    new = [-1] * (L2 + 3 * k2)
    for s in range(L + 3 * k):
        if s in m:
            q = partner[s]
            if q == p:
                new[m[s]] = base
            elif q == p + 1:
                new[m[s]] = base + 1
            else:
                new[m[s]] = m[q]
    new[base] = m[partner[p]]
    new[base + 1] = m[partner[p + 1]]
    new[base + 2] = p
    new[p] = base + 2
    arc = arc_of_positions(comp)[p]
    comp2 = tuple(a - 1 if i == arc else a for i, a in enumerate(comp, 1))
    out.append((-1, comp2, L2, k2, tuple(new)))
    return out


class ArcSpace:
    """A_d(n) modulo AS, IHX and STU, with a filtration-compatible basis."""

    def __init__(self, d: int, n: int, budget: int = DEFAULT_BUDGET):
        self.d, self.n = d, n
        keys: List[ArcKey] = []
        for k in range(0, 2 * d):
            L = 2 * d - k
            dkeys = enumerate_keys(d, k, False, allow_one_leg=True)
            ncomp = math.comb(L + n - 1, n - 1)
            if len(keys) + len(dkeys) * ncomp > budget:
                raise BudgetExceeded(f"A_{d}({n}) needs more than {budget} spanning diagrams")
            for comp in compositions(L, n):
                for dk in dkeys:
                    keys.append((comp, dk))
        keys.sort(key=_sort_key)
        self.keys = keys
        index = {key: i for i, key in enumerate(keys)}
        self.index = index
        rels = []
        for comp, (L, k, partner) in keys:
            for s in internal_edges(L, k, partner):
                rel: Dict[int, object] = {}
                for t in jacobi_terms(L, k, partner, s):
                    sign, key = arc_canonical(comp, L, k, t)
                    if sign:
                        axpy(rel, sign, {index[key]: 1})
                if rel:
                    rels.append(rel)
            pos = 0
            for a in comp:
                for p in range(pos, pos + a - 1):
                    rel = {}
                    for c, comp2, L2, k2, part2 in stu_terms(comp, L, k, partner, p):
                        sign, key = arc_canonical(comp2, L2, k2, part2)
                        if sign:
                            axpy(rel, c * sign, {index[key]: 1})
                    if rel:
                        rels.append(rel)
                pos += a
        self.quotient = QuotientSpace(keys, rels)

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    @property
    def basis(self) -> List[ArcKey]:
        return self.quotient.basis_keys

    def filtration_dims(self) -> List[int]:
        """dim A_{d,k}(n) for k = 0, 1, ..., 2d-1."""
        counts = [0] * (2 * self.d + 1)
        for _, key in self.basis:
            counts[key[1]] += 1
        out = []
        acc = 0
        for k in range(2 * self.d, -1, -1):
            acc += counts[k]
            out.append(acc)
        return list(reversed(out))[: 2 * self.d]

    def graded_dims(self) -> List[int]:
        counts = [0] * (2 * self.d)
        for _, key in self.basis:
            counts[key[1]] += 1
        return counts

    def normal_form(self, u: ArcElement) -> ArcElement:
        return self.quotient.reduce_keys(u)

    def add_graph(self, out: ArcElement, comp: Sequence[int], L: int, k: int, partner: Sequence[int], coeff) -> None:
        sign, key = arc_canonical(tuple(comp), L, k, partner)
        if not sign:
            return
        for b, c in self.quotient.key_normal_form(key).items():
            t = out.get(b, 0) + sign * coeff * c
            if t:
                out[b] = t
            else:
                out.pop(b, None)

    def min_trivalent(self, u: ArcElement) -> int:
        """Filtration level of a normal-form element (2d when zero)."""
        return min((key[1][1] for key in u), default=2 * self.d)

    def vector(self, u: ArcElement) -> Dict[int, object]:
        pos = self.quotient.basis_position
        return {pos[b]: c for b, c in u.items()}

    def __repr__(self) -> str:
        return f"A_{self.d}({self.n}) (dim {self.dimension})"


@lru_cache(maxsize=None)
def build_arc_space(d: int, n: int, budget: int = DEFAULT_BUDGET) -> ArcSpace:
    return ArcSpace(d, n, budget)


def arc_element(space: ArcSpace, comp: Sequence[int], L: int, k: int, partner: Sequence[int], coeff=1) -> ArcElement:
    out: ArcElement = {}
    space.add_graph(out, comp, L, k, partner, coeff)
    return out


# ------------------------------------------------------------------- PBW

def pbw(u: ArcElement, space: ArcSpace, k: Optional[int] = None) -> BElement:
    """θ on the class of u in gr^k, where k is the filtration level of u.

    u must be in normal form; legs on arc i are colored v_i.
    """
    u = {b: c for b, c in u.items() if c}
    level = space.min_trivalent(u)
    if k is None:
        k = level
    elif level < k:
        raise NotInFiltration(f"element has terms with {level} < {k} trivalent vertices")
    dst = b_space(space.d, k, space.n)
    out: BElement = {}
    for (comp, (L, kk, partner)), c in u.items():
        if kk == k:
            dst.add_graph(out, arc_of_positions(comp), L, kk, partner, c)
    return out


def pbw_raw(comp: Sequence[int], L: int, k: int, partner: Sequence[int], d: int, n: int, coeff=1) -> BElement:
    """θ of a single diagram read directly, without reducing in A_d(n)."""
    dst = b_space(d, k, n)
    out: BElement = {}
    dst.add_graph(out, arc_of_positions(comp), L, k, partner, coeff)
    return out


def pbw_section(b: BElement, space: ArcSpace) -> ArcElement:
    """Lift to A_{d,k}(n): legs placed on their color's arc in color-sorted order."""
    out: ArcElement = {}
    for (w, (L, k, partner)), c in b.items():
        comp = [0] * space.n
        for a in w:
            comp[a - 1] += 1
        space.add_graph(out, comp, L, k, partner, c)
    return out


# ------------------------------------------------------------- cabling action

def act_endo(words: Sequence[FreeWord], u: ArcElement, space_in, space_out: ArcSpace) -> ArcElement:
    """A_d(f)(u) for f given by the output-arc words in F_m (m = arcs of u).

    ``space_in`` is the source ArcSpace or just m; u may be any combination of
    canonical arc keys.  Legs on arc i are distributed over the occurrences of
    x_i^{±1}; a leg on an inverse letter reverses order and contributes -1.
    """
    m = space_in if isinstance(space_in, int) else space_in.n
    if len(words) != space_out.n or any(w.n > m for w in words):
        raise RankMismatch("words do not match the arc counts")
    occ: Dict[int, List[Tuple[int, int, int]]] = {i: [] for i in range(1, m + 1)}
    for j, w in enumerate(words):
        for t, a in enumerate(w.letters):
            occ[abs(a)].append((j, t, 1 if a > 0 else -1))
    raw: Dict[Tuple, object] = {}
    for (comp, (L, k, partner)), c in u.items():
        arcs = arc_of_positions(comp)
        choices = [occ[arcs[p]] for p in range(L)]
        if any(not ch for ch in choices):
            continue
        tail = list(range(L, L + 3 * k))
        for assign in itertools.product(*choices):
            sign = 1
            slots = []
            for p, (j, t, e) in enumerate(assign):
                if e < 0:
                    sign = -sign
                slots.append(((j, t, e * p), p))
            slots.sort()
            newpos = [0] * L
            for q, (_, p) in enumerate(slots):
                newpos[p] = q
            comp2 = [0] * space_out.n
            for j, _, _ in assign:
                comp2[j] += 1
            key = (tuple(comp2), L, k, relabel(L, k, partner, newpos + tail))
            raw[key] = raw.get(key, 0) + sign * c
    out: ArcElement = {}
    for (comp2, L, k, moved), c in raw.items():
        if c:
            space_out.add_graph(out, comp2, L, k, moved, c)
    return out


def act_by(f: Endo, u: ArcElement, space: ArcSpace) -> ArcElement:
    """Right action u·f of an endomorphism of F_n on A_d(n)."""
    if f.n != space.n:
        raise RankMismatch("endomorphism rank differs from arc count")
    return act_endo(f.images, u, space, space)


def bracket_direct(u: ArcElement, f: Endo, r: int, space: ArcSpace, check: bool = True) -> ArcElement:
    """[u, f] = u·f - u; asserts the filtration jump by r when ``check``."""
    if andreadakis_level(f, r) < r:
        raise NotInFiltration(f"endomorphism not in E_{r}")
    out = act_by(f, u, space)
    axpy(out, -1, u)
    if check and out:
        k = space.min_trivalent(u)
        if space.min_trivalent(out) < k + r:
            raise AssertionError("filtration jump violated")
    return out


def theta_bracket(b: BElement, f: Endo, r: int, space: ArcSpace) -> BElement:
    """θ([ũ, f]) for the lift ũ of b."""
    k = next(iter(b))[1][1] if b else 0
    lift = pbw_section(b, space)
    br = bracket_direct(lift, f, r, space, check=False)
    return pbw(br, space, k + r)


# ------------------------------------------------------------ P/Q seeds
#
# A seed is an element of A_d(2d) with exactly one leg on each arc, stored as
# {matching: coeff} where a matching is a frozenset of arc pairs (1-based).
# Such diagrams are never touched by STU, so seeds live in a free space.

Seed = Dict[frozenset, object]


def chord_power(d: int) -> Seed:
    """c^{⊗d}: chord j joins arcs 2j-1 and 2j."""
    return {frozenset(frozenset((2 * j - 1, 2 * j)) for j in range(1, d + 1)): 1}


def permute_arcs(perm: Sequence[int], seed: Seed) -> Seed:
    """Move arc a to arc perm[a-1] (perm 1-based, one-line)."""
    out: Seed = {}
    for m, c in seed.items():
        m2 = frozenset(frozenset(perm[a - 1] for a in pair) for pair in m)
        out[m2] = out.get(m2, 0) + c
    return clean(out)


def seed_add(a: Seed, b: Seed, s=1) -> Seed:
    out = dict(a)
    axpy(out, s, b)
    return clean(out)


def _matchings(points: Sequence[int]) -> Iterable[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for m in _matchings(rest):
            yield [(a, points[i])] + m


def p_seed(d: int) -> Seed:
    """P = Σ_{σ ∈ S_{2d}} σ·c^{⊗d}; each perfect matching occurs 2^d d! times."""
    mult = 2 ** d * math.factorial(d)
    return {frozenset(frozenset(p) for p in m): mult for m in _matchings(list(range(1, 2 * d + 1)))}


def q_seed(d: int) -> Seed:
    """Q = nested - crossing on arcs 1..4, with chords {5,6}, {7,8}, ... added."""
    if d < 2:
        return {}
    rest = [frozenset((2 * j - 1, 2 * j)) for j in range(3, d + 1)]
    nested = frozenset([frozenset((1, 4)), frozenset((2, 3))] + rest)
    crossing = frozenset([frozenset((1, 3)), frozenset((2, 4))] + rest)
    return {nested: 1, crossing: -1}


def apply_group_algebra(x, seed: Seed) -> Seed:
    """Act by an element of the group algebra of S_{2d} (0-based one-line perms) on arcs."""
    out: Seed = {}
    for p, a in x.terms.items():
        axpy(out, a, permute_arcs([q + 1 for q in p], seed))
    return clean(out)


def q_lambda_seed(lam: Sequence[int]) -> Seed:
    """Q_λ: the Young symmetrizer of 2λ applied to c^{⊗d}."""
    from .symrep import young_symmetrizer

    lam = Partition(lam)
    return apply_group_algebra(young_symmetrizer(lam.doubled()), chord_power(lam.size))


def transposition_tau(d: int, i: int) -> List[int]:
    """The arc permutation τ for σ = (2i, 2i+1) (1-based, one-line)."""
    head = [2 * i - 1, 2 * i + 2, 2 * i + 1, 2 * i]
    rest = [a for a in range(1, 2 * d + 1) if a not in head]
    return head + rest


def check_transposition_identity(d: int) -> Dict[str, bool]:
    """c^{⊗d} - σc^{⊗d} = τQ for every adjacent transposition σ of S_{2d}."""
    c = chord_power(d)
    q = q_seed(d)
    out = {}
    for s in range(1, 2 * d):
        sigma = list(range(1, 2 * d + 1))
        sigma[s - 1], sigma[s] = s + 1, s
        lhs = seed_add(c, permute_arcs(sigma, c), -1)
        if s % 2:
            rhs: Seed = {}
        else:
            rhs = permute_arcs(transposition_tau(d, s // 2), q)
        out[f"({s} {s + 1})"] = lhs == rhs
    return out


def seed_in_arc_permutation_span(x: Seed, y: Seed, d: int) -> bool:
    """Certificate that x lies in Span{σ·y : σ ∈ S_{2d}} (hence in A_d Y(2d))."""
    index: Dict[frozenset, int] = {}

    def vec(s: Seed) -> Dict[int, object]:
        return {index.setdefault(m, len(index)): c for m, c in s.items()}

    ech = Echelon()
    for perm in itertools.permutations(range(1, 2 * d + 1)):
        ech.add(vec(permute_arcs(perm, y)))
    return ech.contains(vec(x))


# -------------------------------------------------------- submodule generation

def _seed_graphs(seed: Seed, d: int) -> List[Tuple[object, Tuple[int, ...]]]:
    """Seed terms as (coeff, partner) with the leg of arc a at position a-1."""
    out = []
    for m, c in seed.items():
        partner = [0] * (2 * d)
        for pair in m:
            a, b = sorted(pair)
            partner[a - 1], partner[b - 1] = b - 1, a - 1
        out.append((c, tuple(partner)))
    return out


def place_seed(seed: Seed, order: Sequence[int], comp: Sequence[int], space: ArcSpace) -> ArcElement:
    """A_d(f)(seed) for the single placement f: arcs listed in ``order`` go, in
    that sequence, onto the output arcs with ``comp`` legs each."""
    newpos = [0] * len(order)
    for q, a in enumerate(order):
        newpos[a - 1] = q
    out: ArcElement = {}
    for c, partner in _seed_graphs(seed, space.d):
        space.add_graph(out, comp, len(order), 0, relabel(len(order), 0, partner, newpos), c)
    return out


def placements(d: int, n: int) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All single placements (arc order, composition) of 2d one-leg arcs onto n arcs.

    Placements on inverse letters only change signs, so they add nothing to spans.
    """
    for comp in compositions(2 * d, n):
        for order in itertools.permutations(range(1, 2 * d + 1)):
            yield order, comp


def generate_submodule(seed: Seed, n: int, space: Optional[ArcSpace] = None) -> List[Dict[int, object]]:
    """Echelon basis (as basis-position vectors) of A_d X(n) for a one-leg-per-arc seed X."""
    if not seed:
        return []
    d = len(next(iter(seed)))
    space = space or build_arc_space(d, n)
    ech = Echelon()
    seen = set()
    for order, comp in placements(d, n):
        v = space.vector(place_seed(seed, order, comp, space))
        sig = frozenset(v.items())
        if sig in seen:
            continue
        seen.add(sig)
        ech.add(v)
    return list(ech.rref().values())


def _word_placement(order: Sequence[int], comp: Sequence[int], m: int) -> List[FreeWord]:
    words = []
    pos = 0
    for a in comp:
        words.append(FreeWord(tuple(order[pos:pos + a]), m))
        pos += a
    return words


def seed_arc_element(seed: Seed, d: int) -> ArcElement:
    """The seed as a raw ArcElement of A_d(2d) (one leg per arc)."""
    out: ArcElement = {}
    comp = (1,) * (2 * d)
    for c, partner in _seed_graphs(seed, d):
        sign, key = arc_canonical(comp, 2 * d, 0, partner)
        if sign:
            out[key] = out.get(key, 0) + sign * c
    return clean(out)


def span_rank(vectors: Iterable[Dict[int, object]]) -> int:
    return rank(list(vectors))


# -------------------------------------------------------------- e_n

class EnIdempotent:
    """e_n on A_d(n): A_d(f)(c^{⊗d}) -> (1/(2d)!) A_d(f)(P)."""

    def __init__(self, d: int, n: int, space: Optional[ArcSpace] = None):
        self.d, self.n = d, n
        self.space = space or build_arc_space(d, n)
        c, p = chord_power(d), p_seed(d)
        scale_p = Fraction(1, math.factorial(2 * d))
        self.solver = SpanSolver()
        self.images: Dict[int, Dict[int, object]] = {}
        self.well_defined = True
        joint = Echelon()
        width = self.space.dimension
        for label, (order, comp) in enumerate(placements(d, n)):
            g = self.space.vector(place_seed(c, order, comp, self.space))
            e = {k: scale_p * x for k, x in self.space.vector(place_seed(p, order, comp, self.space)).items()}
            glued = dict(g)
            glued.update({width + k: x for k, x in e.items()})
            if joint.add(glued) is None:
                continue
            if self.solver.add(g, label):
                self.images[label] = e
            else:
                self.well_defined = False
        self.spans = self.solver.rank == width

    def __call__(self, v: Dict[int, object]) -> Dict[int, object]:
        comb = self.solver.express(v)
        if comb is None:
            raise NotInFiltration("vector is not in the span of the generators")
        out: Dict[int, object] = {}
        for label, a in comb.items():
            axpy(out, a, self.images[label])
        return clean(out)

    def matrix(self) -> List[Dict[int, object]]:
        return [self({i: 1}) for i in range(self.space.dimension)]


@lru_cache(maxsize=None)
def en_idempotent_map(d: int, n: int) -> EnIdempotent:
    return EnIdempotent(d, n)


def en_idempotent(d: int, n: int, u: Dict[int, object]) -> Dict[int, object]:
    """e_n(u) for u given as a basis-position vector of A_d(n)."""
    return en_idempotent_map(d, n)(u)


# ------------------------------------------------------------ direct sum

def _b_isotypic_span(lam: Partition, space: BSpace) -> List[Dict[int, object]]:
    vecs = []
    for b in space.basis:
        v = isotypic_project(lam, {b: 1}, space)
        if v:
            vecs.append(space.vector(v))
    return vecs


def verify_direct_sum(d: int, n: int) -> Dict[str, object]:
    """Direct-sum checks for A_d(n) = A_dP(n) ⊕ A_dQ(n)."""
    space = build_arc_space(d, n)
    P = generate_submodule(p_seed(d), n, space)
    Q = generate_submodule(q_seed(d), n, space)
    C = generate_submodule(chord_power(d), n, space)
    dP, dQ, dsum, dint = subspace_ops(P, Q)
    dst = b_space(d, 0, n)
    pos = {i: b for i, b in enumerate(space.basis)}
    theta = []
    for v in P:
        u = {pos[i]: c for i, c in v.items()}
        theta.append(dst.vector(pbw(u, space, 0)))
    target = _b_isotypic_span(Partition((2 * d,)), dst)
    t_dims = subspace_ops(theta, target)
    report = {
        "d": d, "n": n,
        "dim_A": space.dimension,
        "dim_AP": dP, "dim_AQ": dQ,
        "dim_sum": dsum, "dim_intersection": dint,
        "chords_span": len(C) == space.dimension,
        "theta_P_equals_B_2d": t_dims[0] == t_dims[1] == t_dims[2],
        "dim_B_2d": t_dims[1],
    }
    report["pass"] = (dP + dQ == space.dimension and dint == 0 and report["chords_span"]
                      and report["theta_P_equals_B_2d"])
    return report


# -------------------------------------------------- bracket component maps

def ia_generators(n: int) -> List[Tuple[str, Endo]]:
    """K_{i,j} and K_{i,j,k} (j < k): their τ̃_1 images span gr^1 of IA(n)."""
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j != i:
                out.append((f"K{i},{j}", k_generator(i, j, n=n)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                if i not in (j, k):
                    out.append((f"K{i},{j},{k}", k_generator(i, j, k, n=n)))
    return out


def _weight_block(space: BSpace, weight: Sequence[int]) -> List[BElement]:
    w = tuple(a for i, c in enumerate(weight, 1) for a in [i] * c)
    if not space.valid or len(w) != space.N:
        return []
    return [{(w, key): 1} for key in space.coinvariants(composition(w)).basis_keys]


def highest_weight_vectors(d: int, k: int, n: int, lam: Sequence[int]) -> List[BElement]:
    """A basis of the weight-λ part of B_{d,k}(n)_λ; it generates the isotypic component."""
    lam = Partition(lam)
    if len(lam) > n:
        return []
    space = b_space(d, k, n)
    ech = Echelon()
    index: Dict[BKey, int] = {}
    out = []
    for b in _weight_block(space, lam):
        v = isotypic_project(lam, b, space)
        vec = {index.setdefault(x, len(index)): c for x, c in v.items()}
        if v and ech.add(vec) is not None:
            out.append(v)
    return out


def component_map(d: int, k: int, n: int, lam: Sequence[int], mu: Sequence[int]) -> Optional[Tuple[str, BElement, BElement]]:
    """A witness (generator, u, projected bracket) that B_{d,k}(n)_λ ⊗ gr^1 -> B_{d,k+1}(n)_μ is nonzero."""
    src = b_space(d, k, n)
    dst = b_space(d, k + 1, n)
    if not dst.valid:
        return None
    for u in highest_weight_vectors(d, k, n, lam):
        for name, f in ia_generators(n):
            v = bracket_beta(u, f, 1, src)
            if v:
                w = isotypic_project(mu, v, dst)
                if w:
                    return name, u, w
    return None


def _present(d: int, k: int, n: int) -> List[Partition]:
    from .colored import gl_decompose

    if k > 2 * d - 1 or 2 * d - k < 1:
        return []
    return sorted(gl_decompose(d, k, n), reverse=True)


def component_map_table(d: int, n: int) -> List[Tuple[Partition, int, Partition, int]]:
    """All nonzero restricted bracket maps λ@k -> μ@(k+1) between isotypic components."""
    arrows = []
    for k in range(0, 2 * d - 1):
        for lam in _present(d, k, n):
            for mu in _present(d, k + 1, n):
                if component_map(d, k, n, lam, mu) is not None:
                    arrows.append((lam, k, mu, k + 1))
    return arrows


RHO_MAPS = {
    3: [((4, 2), (3, 1, 1)), ((2, 2, 2), (3, 1, 1)), ((2, 2, 2), (2, 1, 1, 1))],
    4: [((6, 2), (5, 1, 1)), ((4, 4), (3, 3, 1)), ((4, 2, 2), (5, 1, 1)), ((4, 2, 2), (4, 1, 1, 1)),
        ((4, 2, 2), (3, 3, 1)), ((4, 2, 2), (3, 2, 1, 1)), ((2, 2, 2, 2), (3, 2, 1, 1)),
        ((2, 2, 2, 2), (2, 2, 1, 1, 1))],
}


def rho_witness(d: int, index: int, n: int) -> Optional[Dict[str, object]]:
    """Nonvanishing witness for ρ_index: B_{d,0}(n)_λ -> Hom(gr^1, B_{d,1}(n)_μ).

    The source is irreducible, so a nonzero value on one vector proves injectivity.
    The coefficient records how the projected bracket compares to the projected
    image of its own leading basis term.
    """
    lam, mu = RHO_MAPS[d][index - 1]
    hit = component_map(d, 0, n, lam, mu)
    if hit is None:
        return None
    name, u, w = hit
    lead = min(w)
    return {"generator": name, "lambda": Partition(lam), "mu": Partition(mu),
            "source_terms": len(u), "image_terms": len(w), "leading_coefficient": w[lead]}


# --------------------------------------------------------- surjectivity

def _weight_of(w: Sequence[int], n: int) -> Tuple[int, ...]:
    out = [0] * n
    for a in w:
        out[a - 1] += 1
    return tuple(out)


def bracket_surjectivity(d: int, k: int, n: int) -> bool:
    """Full rank of B_{d,k}(n) ⊗ gr^1 -> B_{d,k+1}(n), checked on every dominant weight block.

    The image is a GL-submodule, so it is everything iff it fills each dominant
    weight space; each block only receives sources of complementary weight.
    """
    src = b_space(d, k, n)
    dst = b_space(d, k + 1, n)
    if not dst.valid or not src.valid or dst.dspace.dimension == 0:
        return True
    gens = []
    for name, f in ia_generators(n):
        (i, word), = list(johnson_hom(f, 1).terms)[:1]
        shift = [0] * n
        shift[i - 1] += 1
        for a in word:
            shift[a - 1] -= 1
        gens.append((f, tuple(shift)))
    for lam in partition_list(dst.N):
        if len(lam) > n:
            continue
        omega = tuple(lam) + (0,) * (n - len(lam))
        block = _weight_block(dst, omega)
        if not block:
            continue
        images = Echelon()
        index: Dict[BKey, int] = {}
        for f, shift in gens:
            source = tuple(o - s for o, s in zip(omega, shift))
            if min(source) < 0:
                continue
            for b in _weight_block(src, source):
                v = bracket_beta(b, f, 1, src)
                if v:
                    images.add({index.setdefault(x, len(index)): c for x, c in v.items()})
        if images.rank < len(block):
            return False
    return True

import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.opendiag import (
    OpenDiagram,
    build_space,
    canonical,
    canonical_combination,
    character,
    components,
    decompose_sn,
    enumerate_diagrams,
    enumerate_keys,
    has_tadpole,
    internal_edges,
    jacobi_terms,
    perm_action,
    relabel,
)
from artifact.reference import CONNECTED_SN
from artifact.structure import good_pair_decompositions, induced_character
from artifact.symrep import Partition, perm_compose, specht_dim


def all_involutions(n):
    def rec(rest):
        if not rest:
            yield {}
            return
        a = rest[0]
        for b in rest[1:]:
            for m in rec([x for x in rest[1:] if x != b]):
                m = dict(m)
                m[a], m[b] = b, a
                yield m
    for m in rec(list(range(n))):
        yield tuple(m[i] for i in range(n))


def brute_keys(d, k, connected_only):
    """Oracle: canonicalize every pairing of half-edges."""
    L = 2 * d - k
    out = set()
    for partner in all_involutions(L + 3 * k):
        if has_tadpole(L, partner):
            continue
        comps = components(L, k, partner)
        if any(min(c) >= L for c in comps):
            continue
        if connected_only and len(comps) > 1:
            continue
        sign, key = canonical(L, k, partner)
        if sign:
            out.add(key)
    return out


def test_enumerate_examples():
    assert len(enumerate_diagrams(1, 0)) == 1
    assert enumerate_diagrams(1, 0)[0].partner == (1, 0)
    assert len(enumerate_diagrams(2, 1)) == 1
    assert enumerate_diagrams(1, 1) == []


@pytest.mark.parametrize("d,k", [(1, 0), (2, 0), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (3, 4), (4, 2)])
@pytest.mark.parametrize("connected", [False, True])
def test_enumeration_complete_against_brute_force(d, k, connected):
    assert set(enumerate_keys(d, k, connected, allow_one_leg=True)) == brute_keys(d, k, connected)


def test_build_space_examples():
    assert build_space(3, 2, True).dimension == 2
    assert build_space(3, 2).dimension == 8
    assert build_space(4, 4, True).dimension == 3


def test_dim_d32_from_good_pairs():
    # (3,2) = (3,2) or (2,2)+(1,0): 2 + 4!/(2!·2!) · 1 · 1
    assert build_space(3, 2).dimension == 2 + math.factorial(4) // (2 * 2)


def test_perm_action_examples():
    y = enumerate_keys(2, 1)[0]
    assert perm_action((0, 1, 2), {y: 1}) == {y: 1}
    assert perm_action((1, 0, 2), {y: 1}) == {y: -1}
    assert perm_action((1, 2, 0), {y: 1}) == {y: 1}


@given(st.permutations(range(4)), st.permutations(range(4)), st.integers(0, 7))
def test_perm_action_is_a_group_action(s, t, idx):
    space = build_space(3, 2)
    b = space.basis[idx]
    lhs = perm_action(t, perm_action(s, {b: 1}, space), space)
    rhs = perm_action(perm_compose(t, s), {b: 1}, space)
    assert lhs == rhs


def test_involutions_square_to_identity():
    rng = random.Random(0)
    space = build_space(3, 2)
    for _ in range(100):
        i, j = rng.sample(range(4), 2)
        sigma = list(range(4))
        sigma[i], sigma[j] = j, i
        b = rng.choice(space.basis)
        assert perm_action(sigma, perm_action(sigma, {b: 1}, space), space) == {b: 1}


def test_decompose_examples():
    assert decompose_sn(build_space(2, 1, True)) == {Partition((1, 1, 1)): 1}
    assert decompose_sn(build_space(5, 5, True)) == {Partition((3, 1, 1)): 2}
    dec = decompose_sn(build_space(4, 2))
    assert sum(m * specht_dim(lam) for lam, m in dec.items()) == 85


@pytest.mark.parametrize("d", range(1, 5))
def test_character_matches_induction(d):
    for k in range(0, 2 * d - 1):
        space = build_space(d, k)
        assert character(space) == induced_character(d, k)
        total = sum(m * specht_dim(lam) for lam, m in decompose_sn(space).items())
        assert total == space.dimension


@pytest.mark.parametrize("d", range(1, 5))
def test_singleton_decomposition_means_connected(d):
    for k in range(0, 2 * d - 1):
        if len(good_pair_decompositions(d, k)) == 1 and good_pair_decompositions(d, k)[0] == ((1, d, k),):
            assert build_space(d, k).dimension == build_space(d, k, True).dimension


@pytest.mark.parametrize("d,k", [(3, 3), (3, 4), (4, 4), (4, 5)])
def test_ihx_terms_vanish(d, k):
    space = build_space(d, k)
    for L, kk, partner in enumerate_keys(d, k, allow_one_leg=True):
        for s in internal_edges(L, kk, partner):
            rel = canonical_combination(L, kk, ((1, t) for t in jacobi_terms(L, kk, partner, s)))
            assert space.normal_form(rel) == {}


@pytest.mark.parametrize("d,k", [(2, 1), (3, 2), (4, 4)])
def test_as_sign(d, k):
    for L, kk, partner in enumerate_keys(d, k):
        assert canonical(L, kk, partner) == (1, (L, kk, partner))
        for v in range(kk):
            a, b = L + 3 * v + 1, L + 3 * v + 2
            swap = list(range(len(partner)))
            swap[a], swap[b] = b, a
            once = relabel(L, kk, partner, swap)
            assert canonical(L, kk, once) == (-1, (L, kk, partner))
            assert relabel(L, kk, once, swap) == partner


def test_opendiagram_json_round_trip():
    for key in enumerate_keys(3, 2):
        diag = OpenDiagram.from_key(key)
        sign, back = OpenDiagram.from_json(diag.to_json())
        assert sign == 1 and back == diag


def test_connected_table_for_small_degree():
    for (d, k), exp in CONNECTED_SN.items():
        if d <= 3:
            assert decompose_sn(build_space(d, k, True)) == exp

import itertools
import json
import math

import pytest

from artifact.colored import b_space
from artifact.opendiag import build_space
from artifact.reference import GD_EDGES
from artifact.structure import (
    build_Gd,
    connected_dims,
    good_pair_decompositions,
    induced_character,
    is_connected,
    is_good_pair,
    th521_check,
)
from artifact.symrep import Partition, parse_partition, partition_list


def brute_decompositions(d, k):
    """Oracle: every multiset of good pairs summing to (d, k)."""
    goods = [(a, b) for a in range(1, d + 1) for b in range(0, 2 * a - 1) if a - 1 <= b]
    found = set()

    def rec(dd, kk, start, acc):
        if dd == 0 and kk == 0:
            found.add(tuple(sorted(acc, reverse=True)))
            return
        for i in range(start, len(goods)):
            a, b = goods[i]
            if a <= dd and b <= kk:
                rec(dd - a, kk - b, i, acc + [(a, b)])

    rec(d, k, 0, [])
    out = set()
    for ms in found:
        out.add(tuple((ms.count(p), p[0], p[1]) for p in sorted(set(ms), reverse=True)))
    return out


def bfs_connected(g):
    adj = g.adjacency()
    start = next(iter(adj))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(adj)


def test_good_pair_examples():
    assert set(good_pair_decompositions(4, 2)) == {((1, 3, 2), (1, 1, 0)), ((1, 2, 2), (2, 1, 0)), ((2, 2, 1),)}
    assert good_pair_decompositions(1, 0) == (((1, 1, 0),),)
    assert len(good_pair_decompositions(3, 2)) == 2
    assert is_good_pair(3, 2) and not is_good_pair(1, 1) and not is_good_pair(3, 5)


@pytest.mark.parametrize("d", range(1, 7))
def test_good_pair_decompositions_match_brute_force(d):
    for k in range(0, 2 * d):
        got = good_pair_decompositions(d, k)
        assert len(set(got)) == len(got)
        assert set(got) == brute_decompositions(d, k)
        for pi in got:
            assert sum(a * di for a, di, _ in pi) == d
            assert sum(a * ki for a, _, ki in pi) == k
            assert list(pi) == sorted(pi, key=lambda t: (t[1], t[2]), reverse=True)


def test_th521_examples():
    assert th521_check(3, 2, 3)
    dims = connected_dims(3, 2, 3)
    assert dims["lhs"] == dims["rhs"] == b_space(3, 2, 3).dimension
    assert build_space(4, 2).dimension == 85 == induced_character(4, 2).degree()
    # induced pieces (3,2)+(1,0), (2,2)+2(1,0), 2(2,1): 30 + 45 + 10
    assert math.factorial(6) // (2 * 4 * 2) == 45
    assert th521_check(1, 0, 2)
    assert good_pair_decompositions(1, 0) == (((1, 1, 0),),)


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("n", (2, 3, 4))
def test_th521_all(d, n):
    for k in range(0, 2 * d - 1):
        assert th521_check(d, k, n)


def edge_strings(edges):
    return sorted(f"{a}-{b}" for a, b in edges)


def test_g3():
    g = build_Gd(3)
    assert set(g.left) == {parse_partition("(4,2)"), parse_partition("(2^3)")}
    assert set(g.right) == {parse_partition("(3,1^2)"), parse_partition("(2,1^3)")}
    assert edge_strings(g.edges) == ["(2^3)-(2,1^3)", "(2^3)-(3,1^2)", "(4,2)-(3,1^2)"]


def test_g2_and_g4():
    assert edge_strings(build_Gd(2).edges) == ["(2^2)-(1^3)"]
    g4 = build_Gd(4)
    assert (len(g4.left), len(g4.right)) == (4, 5)
    assert edge_strings(g4.edges) == edge_strings(GD_EDGES[4])


@pytest.mark.parametrize("d", range(2, 13))
def test_gd_properties(d):
    g = build_Gd(d)
    assert is_connected(g) and bfs_connected(g)
    assert len(g.left) == len(partition_list(d)) - 1
    adj = g.adjacency()
    assert all(adj[str(mu)] for mu in g.right)
    assert all(mu.odd_parts() == 3 for mu in g.right)


def test_adjacency_is_json():
    adj = build_Gd(3).adjacency()
    assert json.loads(json.dumps(adj)) == adj
    assert adj["(2^3)"] == ["(2,1^3)", "(3,1^2)"]


def test_gd_requires_d_at_least_2():
    with pytest.raises(ValueError):
        build_Gd(1)

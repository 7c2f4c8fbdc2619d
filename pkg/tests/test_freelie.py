import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.errors import NotInFiltration, WordTooLong
from artifact.freelie import (
    FreeWord,
    LieElement,
    commutator,
    group_commutator_word,
    is_lyndon,
    lcs_degree,
    lie_bracket,
    lie_class,
    lyndon_basis,
    magnus,
    parse_word,
    witt_dim,
)


def series_oracle(letters, N):
    """Magnus expansion by direct truncated products of 1+X and its inverse series."""
    acc = {(): 1}
    for a in letters:
        i = abs(a)
        if a > 0:
            factor = {(): 1, (i,): 1}
        else:
            factor = {(i,) * p: (-1) ** p for p in range(N + 1)}
        new = {}
        for m, c in acc.items():
            for m2, c2 in factor.items():
                if len(m) + len(m2) <= N:
                    new[m + m2] = new.get(m + m2, 0) + c * c2
        acc = {m: c for m, c in new.items() if c}
    return acc


def brute_lyndon_count(n, r):
    count = 0
    for w in itertools.product(range(1, n + 1), repeat=r):
        if all(w < w[k:] + w[:k] for k in range(1, r)):
            count += 1
    return count


letters = st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from([i, -i])), max_size=8)


def word(ls):
    return FreeWord(ls, 3)


def test_magnus_examples():
    assert magnus(FreeWord.gen(1, 1), 2).coeffs == {(): 1, (1,): 1}
    assert magnus(FreeWord((-1,), 1), 3).coeffs == {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1}
    assert magnus(parse_word("[x1,x2]"), 2).coeffs == {(): 1, (1, 2): 1, (2, 1): -1}


def test_lcs_degree_examples():
    assert lcs_degree(parse_word("x1"), 5) == 1
    assert lcs_degree(parse_word("[x1,x2]"), 5) == 2
    assert lcs_degree(parse_word("[[x1,x2],x1]"), 5) == 3
    top = lcs_degree(FreeWord((), 2), 4)
    assert top == 4 and str(top) == "≥4"


def test_lie_class_examples():
    assert lie_class(parse_word("[x1,x2]"), 2).coords == {(1, 2): 1}
    deep = parse_word("[[[x1,x2],x1],x2]")
    assert lie_class(deep, 3).is_zero()
    u, v = parse_word("[x1,x2]"), parse_word("[x2,x3]")
    assert lie_class(u * v, 2) == lie_class(u, 2) + lie_class(v, 2)
    with pytest.raises(NotInFiltration):
        lie_class(parse_word("x1"), 2)


def test_witt_examples():
    assert witt_dim(2, 2) == 1
    assert witt_dim(2, 3) == 2
    assert witt_dim(3, 1) == 3


def test_lie_bracket_examples():
    e = [LieElement.generator(i, 3) for i in (1, 2, 3)]
    assert lie_bracket(e[0], e[0]).is_zero()
    assert lie_bracket(e[0], e[1]).coords == {(1, 2): 1}
    jac = (lie_bracket(lie_bracket(e[0], e[1]), e[2]) + lie_bracket(lie_bracket(e[1], e[2]), e[0])
           + lie_bracket(lie_bracket(e[2], e[0]), e[1]))
    assert jac.is_zero()


def test_parse_word_grammar():
    w = parse_word("x1*[x2,x3]")
    assert w.letters == (1, 2, 3, -2, -3)
    assert parse_word("x1^-1*x1").is_identity()
    assert str(parse_word("x2^-1")) == "x2^-1"
    with pytest.raises(ValueError):
        parse_word("y1")


def test_word_budget():
    with pytest.raises(WordTooLong):
        FreeWord((1,) * 11, 1, budget=10)


@given(letters, letters)
def test_magnus_homomorphism(a, b):
    wa, wb = word(a), word(b)
    assert magnus(wa * wb, 5) == magnus(wa, 5) * magnus(wb, 5)


@given(letters)
def test_magnus_matches_series_oracle(a):
    assert magnus(word(a), 4).coeffs == series_oracle(word(a).letters, 4)


@given(letters)
def test_lcs_degree_of_inverse(a):
    w = word(a)
    assert lcs_degree(w.inverse(), 5) == lcs_degree(w, 5)


def random_tree(draw, depth):
    if depth == 0 or draw(st.booleans()):
        return draw(st.integers(1, 3))
    return (random_tree(draw, depth - 1), random_tree(draw, depth - 1))


@st.composite
def trees(draw):
    return random_tree(draw, 2)


def degree(t):
    return 1 if isinstance(t, int) else degree(t[0]) + degree(t[1])


@given(trees(), trees())
def test_lie_class_of_commutator_is_bracket(s, t):
    p, q = degree(s), degree(t)
    if p + q > 5:
        return
    u, v = group_commutator_word(s), group_commutator_word(t)
    lhs = lie_class(commutator(u, v), p + q, 3)
    rhs = lie_bracket(lie_class(u, p, 3), lie_class(v, q, 3))
    assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 5))
def test_lyndon_count_matches_witt(n):
    for r in range(1, 9):
        basis = lyndon_basis(n, r)
        assert len(basis) == witt_dim(n, r)
        assert all(is_lyndon(w) for w in basis)
        if n ** r <= 5000:
            assert len(basis) == brute_lyndon_count(n, r)

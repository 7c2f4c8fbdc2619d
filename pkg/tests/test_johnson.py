import itertools
import random

import pytest

from artifact.arcspace import ia_generators
from artifact.colored import TreeElement, tree_bracket
from artifact.errors import IndexOutOfRange, NotInFiltration
from artifact.freelie import FreeWord, LieElement, lie_class, parse_word
from artifact.johnson import (
    Endo,
    JohnsonValue,
    andreadakis_level,
    compose,
    derivation_bracket,
    equivalent,
    group_commutator,
    johnson_hom,
    k_generator,
    right_inverse,
    sigma_tilde,
    tau_section,
)
from artifact.suites import random_johnson_value


def endo(*images):
    return Endo.from_strings(list(images))


def test_k_generator_examples():
    assert k_generator(1, 2, n=2) == endo("x2*x1*x2^-1", "x2")
    assert k_generator(2, 3, 1, n=3) == endo("x1", "x2*[x3,x1]", "x3")
    assert k_generator(1, 2, 3, n=3).abelianization() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_k_generator_errors():
    with pytest.raises(IndexOutOfRange):
        k_generator(1, 1, n=2)
    with pytest.raises(IndexOutOfRange):
        k_generator(1, 2, 4, n=3)


def test_andreadakis_level_examples():
    assert str(andreadakis_level(Endo.identity(3), 4)) == "≥4"
    assert andreadakis_level(k_generator(1, 2, 3, n=3), 4) == 1
    psi = tau_section(JohnsonValue(3, 2, {(1, (2, 2, 3)): 1}))
    assert andreadakis_level(psi, 5) >= 2
    not_ia = endo("x1*x1", "x2")
    assert andreadakis_level(not_ia, 3) == 0


def test_johnson_hom_examples():
    assert johnson_hom(k_generator(1, 2, 3, n=3), 1) == JohnsonValue(3, 1, {(1, (2, 3)): 1})
    # v1 ⊗ [x2, x1] = -v1 ⊗ [x1, x2] in Lyndon coordinates
    assert johnson_hom(k_generator(1, 2, n=2), 1) == JohnsonValue(2, 1, {(1, (1, 2)): -1})
    assert johnson_hom(Endo.identity(3), 1).is_zero()
    with pytest.raises(NotInFiltration):
        johnson_hom(k_generator(1, 2, 3, n=3), 2)


def test_tau_section_examples():
    phi = JohnsonValue(3, 1, {(1, (2, 3)): 1})
    f = tau_section(phi)
    assert johnson_hom(f, 1) == phi
    assert equivalent(f, k_generator(1, 2, 3, n=3), 1)
    assert tau_section(JohnsonValue(3, 1)) == Endo.identity(3)
    deep = JohnsonValue(3, 2, {(1, (2, 2, 3)): 1})
    psi = tau_section(deep)
    assert psi.images[0] == parse_word("[x2,[x2,x3]]*x1")
    assert andreadakis_level(psi, 4) == 2
    assert johnson_hom(psi, 2) == deep


def test_sigma_tilde_and_right_inverse_examples():
    k123 = k_generator(1, 2, 3, n=3)
    assert sigma_tilde(sigma_tilde(k123)) == k123
    assert andreadakis_level(compose(k123, right_inverse(k123, 1, 2)), 2) >= 2
    ident = Endo.identity(3)
    assert str(andreadakis_level(compose(ident, right_inverse(ident, 1, 4)), 4)) == "≥4"
    with pytest.raises(ValueError):
        right_inverse(k123, 1, 1)
    with pytest.raises(NotInFiltration):
        right_inverse(endo("x1*x1", "x2"), 1, 3)


def test_endo_json_round_trip():
    f = k_generator(2, 3, 1, n=3)
    assert Endo.from_json(f.to_json()) == f
    assert Endo.from_json('{"n":3,"images":["x1*[x2,x3]","x2","x3"]}') == k_generator(1, 2, 3, n=3)


def random_filtered(rng, n, r):
    if r == 1 and rng.random() < 0.5:
        return rng.choice(ia_generators(n))[1]
    return tau_section(random_johnson_value(rng, n, r))


def test_johnson_hom_is_additive():
    rng = random.Random(0)
    for _ in range(100):
        n, r = rng.randint(2, 3), rng.randint(1, 2)
        f, g = random_filtered(rng, n, r), random_filtered(rng, n, r)
        assert johnson_hom(compose(f, g), r) == johnson_hom(f, r) + johnson_hom(g, r)


def test_sigma_tilde_keeps_level():
    rng = random.Random(1)
    for _ in range(30):
        n, r = rng.randint(2, 3), rng.randint(1, 3)
        f = tau_section(random_johnson_value(rng, n, r))
        st_ = sigma_tilde(f)
        assert andreadakis_level(st_, r + 2) >= andreadakis_level(f, r + 2)
        assert sigma_tilde(st_) == f


def test_commutator_matches_derivation_bracket():
    gens = [f for _, f in ia_generators(3)]
    rng = random.Random(2)
    for f, g in rng.sample(list(itertools.permutations(gens, 2)), 25):
        c = group_commutator(f, g, 1, 1)
        assert andreadakis_level(c, 2) >= 2
        a, b = johnson_hom(f, 1), johnson_hom(g, 1)
        assert johnson_hom(c, 2) == derivation_bracket(a, b)
        assert tree_bracket(TreeElement.from_johnson(a), TreeElement.from_johnson(b)) == derivation_bracket(a, b)


def test_mixed_degree_commutator():
    f = k_generator(1, 2, 3, n=3)
    b = JohnsonValue(3, 2, {(2, (1, 1, 3)): 1})
    c = group_commutator(f, tau_section(b), 1, 2)
    assert andreadakis_level(c, 3) >= 3
    assert johnson_hom(c, 3) == derivation_bracket(johnson_hom(f, 1), b)


def test_derivation_bracket_on_generators_oracle():
    # D_a(x1) = [x2,x3], D_b(x2) = [x1,x3]; [D_a, D_b](x1) = -D_b([x2,x3]) = -[[x1,x3],x3]
    a = JohnsonValue(3, 1, {(1, (2, 3)): 1})
    b = JohnsonValue(3, 1, {(2, (1, 3)): 1})
    x = [None] + [FreeWord.gen(i, 3) for i in (1, 2, 3)]
    from artifact.freelie import commutator
    expected_x1 = -lie_class(commutator(commutator(x[1], x[3]), x[3]), 3, 3)
    expected_x2 = lie_class(commutator(commutator(x[2], x[3]), x[3]), 3, 3)
    br = derivation_bracket(a, b)
    assert br.component(1) == expected_x1
    assert br.component(2) == expected_x2
    assert br.component(3).is_zero()

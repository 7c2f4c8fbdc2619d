"""Published decompositions used as verification targets."""

from __future__ import annotations

from typing import Dict, Tuple

from .symrep import Partition, parse_partition


def _decomp(text: str) -> Dict[Partition, int]:
    """Parse "(4,2)+2(2^2)" into {Partition: multiplicity}."""
    out: Dict[Partition, int] = {}
    for tok in text.split("+"):
        tok = tok.strip()
        if not tok:
            continue
        head, _, rest = tok.partition("(")
        mult = int(head) if head else 1
        lam = parse_partition("(" + rest)
        out[lam] = out.get(lam, 0) + mult
    return out


# S_{2d-k}-decompositions of the connected spaces D^c_{d,k}.
CONNECTED_SN: Dict[Tuple[int, int], Dict[Partition, int]] = {
    (1, 0): _decomp("(2)"),
    (2, 1): _decomp("(1^3)"),
    (2, 2): _decomp("(2)"),
    (3, 2): _decomp("(2^2)"),
    (3, 3): _decomp("(1^3)"),
    (3, 4): _decomp("(2)"),
    (4, 3): _decomp("(3,1^2)"),
    (4, 4): _decomp("(4)+(2^2)"),
    (4, 5): _decomp("(1^3)"),
    (4, 6): _decomp("(2)"),
    (5, 4): _decomp("(4,2)+(2^3)+(3,1^3)"),
    (5, 5): _decomp("2(3,1^2)"),
    (5, 6): _decomp("(4)+2(2^2)"),
    (5, 7): _decomp("2(1^3)"),
    (5, 8): _decomp("2(2)"),
}

# GL-decompositions of B_{d,k} for a vector space of large enough dimension.
FULL_GL: Dict[Tuple[int, int], Dict[Partition, int]] = {
    (3, 0): _decomp("(6)+(4,2)+(2^3)"),
    (3, 1): _decomp("(3,1^2)+(2,1^3)"),
    (3, 2): _decomp("(4)+(3,1)+2(2^2)"),
    (3, 3): _decomp("(1^3)"),
    (3, 4): _decomp("(2)"),
    (4, 0): _decomp("(8)+(6,2)+(4^2)+(4,2^2)+(2^4)"),
    (4, 1): _decomp("(5,1^2)+(4,1^3)+(3^2,1)+(3,2,1^2)+(2^2,1^3)"),
    (4, 2): _decomp("(6)+(5,1)+3(4,2)+2(3,2,1)+3(2^3)+(2,1^4)"),
    (4, 3): _decomp("3(3,1^2)+2(2,1^3)"),
    (4, 4): _decomp("3(4)+(3,1)+3(2^2)"),
    (4, 5): _decomp("(1^3)"),
    (4, 6): _decomp("(2)"),
    (5, 0): _decomp("(10)+(8,2)+(6,4)+(6,2^2)+(4^2,2)+(4,2^3)+(2^5)"),
    (5, 1): _decomp("(7,1^2)+(6,1^3)+(5,3,1)+(5,2,1^2)+(4,3,1^2)+(4,2,1^3)+(3^3)+(3^2,2,1)"
                    "+(3,2^2,1^2)+(2^3,1^3)"),
    (5, 2): _decomp("(8)+(7,1)+3(6,2)+(5,3)+2(5,2,1)+2(4^2)+2(4,3,1)+5(4,2^2)+(4,1^4)"
                    "+(3^2,1^2)+3(3,2^2,1)+(3,2,1^3)+(3,1^5)+3(2^4)+(2^2,1^4)"),
    (5, 3): _decomp("3(5,1^2)+2(4,2,1)+4(4,1^3)+4(3^2,1)+5(3,2,1^2)+(3,1^4)+3(2^2,1^3)"),
    (5, 4): _decomp("3(6)+3(5,1)+8(4,2)+4(3,2,1)+(3,1^3)+6(2^3)+(2^2,1^2)+(2,1^4)+(1^6)"),
    (5, 5): _decomp("5(3,1^2)+3(2,1^3)"),
    (5, 6): _decomp("3(4)+2(3,1)+4(2^2)"),
    (5, 7): _decomp("2(1^3)"),
    (5, 8): _decomp("2(2)"),
}

# Wavy arrows between isotypic components of B_3(4): (λ, k, μ, k+1).
WAVY_ARROWS_D3: Tuple[Tuple[Partition, int, Partition, int], ...] = tuple(
    (parse_partition(a), k, parse_partition(b), k + 1)
    for a, k, b in [
        ("(4,2)", 0, "(3,1^2)"),
        ("(2^3)", 0, "(3,1^2)"),
        ("(2^3)", 0, "(2,1^3)"),
        ("(3,1^2)", 1, "(4)"),
        ("(3,1^2)", 1, "(3,1)"),
        ("(3,1^2)", 1, "(2^2)"),
        ("(2,1^3)", 1, "(3,1)"),
        ("(2,1^3)", 1, "(2^2)"),
        ("(2^2)", 2, "(1^3)"),
        ("(1^3)", 3, "(2)"),
    ]
)

# Smallest n at which each component map ρ_i is injective.
RHO_THRESHOLDS: Dict[int, Tuple[int, ...]] = {
    3: (3, 3, 4),
    4: (3, 3, 3, 4, 3, 4, 4, 5),
}

GD_EDGES: Dict[int, Tuple[Tuple[Partition, Partition], ...]] = {
    2: ((parse_partition("(2^2)"), parse_partition("(1^3)")),),
    3: tuple((parse_partition(a), parse_partition(b)) for a, b in [
        ("(4,2)", "(3,1^2)"), ("(2^3)", "(3,1^2)"), ("(2^3)", "(2,1^3)")]),
    4: tuple((parse_partition(a), parse_partition(b)) for a, b in [
        ("(6,2)", "(5,1^2)"), ("(4^2)", "(3^2,1)"), ("(4,2^2)", "(5,1^2)"), ("(4,2^2)", "(4,1^3)"),
        ("(4,2^2)", "(3^2,1)"), ("(4,2^2)", "(3,2,1^2)"), ("(2^4)", "(3,2,1^2)"), ("(2^4)", "(2^2,1^3)")]),
}

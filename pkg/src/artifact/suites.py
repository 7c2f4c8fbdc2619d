"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of case dicts {id, expected, actual, status, millis}.
"""

from __future__ import annotations

import random
import time
from typing import Callable, Dict, Iterable, List, Optional

from .arcspace import (
    EnIdempotent,
    RHO_MAPS,
    bracket_direct,
    bracket_surjectivity,
    build_arc_space,
    check_transposition_identity,
    component_map_table,
    generate_submodule,
    ia_generators,
    p_seed,
    q_lambda_seed,
    q_seed,
    rho_witness,
    seed_in_arc_permutation_span,
    theta_bracket,
    verify_direct_sum,
)
from .colored import b_space, bracket_beta, gl_decompose
from .errors import BudgetExceeded
from .exactlin import subspace_ops
from .freelie import lyndon_basis
from .johnson import (
    JohnsonValue,
    andreadakis_level,
    compose,
    johnson_hom,
    k_generator,
    right_inverse,
    sigma_tilde,
    tau_section,
)
from .opendiag import build_space, decompose_sn
from .reference import CONNECTED_SN, FULL_GL, GD_EDGES, RHO_THRESHOLDS, WAVY_ARROWS_D3
from .structure import build_Gd, induced_character, is_connected, th521_check
from .symrep import Partition, partition_list

Case = Dict[str, object]


def fmt_decomp(dec: Dict[Partition, int]) -> str:
    if not dec:
        return "0"
    return " + ".join(f"{m}{lam}" if m > 1 else str(lam) for lam, m in sorted(dec.items(), reverse=True))


def run_case(case_id: str, expected, compute: Callable[[], object],
             compare: Optional[Callable[[object, object], bool]] = None) -> Case:
    start = time.perf_counter()
    try:
        actual = compute()
        ok = compare(expected, actual) if compare else actual == expected
        status = "pass" if ok else "fail"
    except BudgetExceeded as exc:
        actual, status = f"budget: {exc}", "skipped-budget"
    millis = int((time.perf_counter() - start) * 1000)
    return {"id": case_id, "expected": expected, "actual": actual, "status": status, "millis": millis}


# --------------------------------------------------------------- tables

def suite_fbn(max_d: int = 4) -> List[Case]:
    cases = []
    for (d, k), exp in sorted(CONNECTED_SN.items()):
        if d <= max_d:
            cases.append(run_case(f"Dc[{d},{k}]", fmt_decomp(exp),
                                  lambda d=d, k=k: fmt_decomp(decompose_sn(build_space(d, k, True)))))
    return cases


def suite_p531(max_d: int = 4) -> List[Case]:
    cases = []
    for (d, k), exp in sorted(FULL_GL.items()):
        if d <= max_d:
            cases.append(run_case(f"B[{d},{k}]", fmt_decomp(exp),
                                  lambda d=d, k=k: fmt_decomp(gl_decompose(d, k, 2 * d))))
    return cases


def expected_b0(d: int) -> Dict[Partition, int]:
    return {lam.doubled(): 1 for lam in partition_list(d)}


def expected_b1(d: int) -> Dict[Partition, int]:
    return {mu: 1 for mu in partition_list(2 * d - 1) if mu.odd_parts() == 3}


def suite_pdecompgen(max_d: int = 6) -> List[Case]:
    cases = []
    for d in range(1, max_d + 1):
        cases.append(run_case(f"B[{d},0]", fmt_decomp(expected_b0(d)),
                              lambda d=d: fmt_decomp(gl_decompose(d, 0, 2 * d))))
        if d >= 2:
            cases.append(run_case(f"B[{d},1]", fmt_decomp(expected_b1(d)),
                                  lambda d=d: fmt_decomp(gl_decompose(d, 1, 2 * d))))
    return cases


def suite_th521(max_d: int = 4, ns: Iterable[int] = (2, 3, 4)) -> List[Case]:
    cases = []
    for d in range(1, max_d + 1):
        for k in range(0, 2 * d - 1):
            for n in ns:
                cases.append(run_case(f"d={d},k={k},n={n}", True, lambda d=d, k=k, n=n: th521_check(d, k, n)))
    cases.append(run_case("dim D[4,2]", {"direct": 85, "induced": 85},
                          lambda: {"direct": build_space(4, 2).dimension,
                                   "induced": int(induced_character(4, 2).degree())}))
    return cases


# ---------------------------------------------------------- brackets

def random_johnson_value(rng: random.Random, n: int, r: int, terms: int = 2) -> JohnsonValue:
    words = lyndon_basis(n, r + 1)
    out: Dict = {}
    for _ in range(terms):
        key = (rng.randint(1, n), rng.choice(words))
        out[key] = out.get(key, 0) + rng.choice([-2, -1, 1, 2])
    return JohnsonValue(n, r, out)


def random_b_element(rng: random.Random, d: int, n: int):
    ks = [k for k in range(0, 2 * d - 1) if b_space(d, k, n).dimension]
    k = rng.choice(ks)
    space = b_space(d, k, n)
    u = {}
    for b in rng.sample(space.basis, min(2, len(space.basis))):
        u[b] = rng.choice([-1, 1, 2])
    return k, space, u


def th91_case(d: int, n: int, r: int, rng: random.Random) -> Dict[str, object]:
    k, src, u = random_b_element(rng, d, n)
    f = tau_section(random_johnson_value(rng, n, r))
    lhs = theta_bracket(u, f, r, build_arc_space(d, n))
    rhs = bracket_beta(u, f, r, src)
    return {"equal": lhs == rhs, "nonzero": bool(rhs)}


def suite_th91(d: int = 2, ns: Iterable[int] = (2, 3), rs: Iterable[int] = (1, 2),
               samples: int = 20, seed: int = 0) -> List[Case]:
    rng = random.Random(seed)
    cases = []
    for n in ns:
        for r in rs:
            for i in range(samples):
                cases.append(run_case(f"d={d},n={n},r={r},#{i}", True,
                                      lambda n=n, r=r: th91_case(d, n, r, rng)["equal"]))
    return cases


def filtration_samples(n: int, r: int, rng: random.Random, count: int = 4):
    """K-generators (r = 1) and tau_section outputs."""
    out = []
    if r == 1:
        out.extend(f for _, f in ia_generators(n))
    for _ in range(count):
        out.append(tau_section(random_johnson_value(rng, n, r, terms=1)))
    return out


def th731_case(d: int, n: int, r: int, rng: random.Random) -> int:
    """Number of (basis diagram, f) pairs violating the filtration jump."""
    space = build_arc_space(d, n)
    bad = 0
    for f in filtration_samples(n, r, rng):
        for b in space.basis:
            try:
                bracket_direct({b: 1}, f, r, space, check=True)
            except AssertionError:
                bad += 1
    return bad


def suite_th731(max_d: int = 2, ns: Iterable[int] = (2, 3), rs: Iterable[int] = (1, 2), seed: int = 0) -> List[Case]:
    rng = random.Random(seed)
    cases = []
    for d in range(1, max_d + 1):
        for n in ns:
            for r in rs:
                cases.append(run_case(f"d={d},n={n},r={r}", 0, lambda d=d, n=n, r=r: th731_case(d, n, r, rng)))
    return cases


def suite_surj(max_d: int = 3, max_n: int = 6) -> List[Case]:
    cases = []
    for d in range(1, max_d + 1):
        for k in range(0, 2 * d - 1):
            for n in range(max(1, 2 * d - k), max_n + 1):
                cases.append(run_case(f"d={d},k={k},n={n}", True,
                                      lambda d=d, k=k, n=n: bracket_surjectivity(d, k, n)))
    return cases


# ------------------------------------------------------------ decomposition

DIRECT_SUM_CASES = ((1, 2), (2, 2), (2, 3), (3, 2))


def en_checks(d: int, n: int) -> Dict[str, bool]:
    e = EnIdempotent(d, n)
    space = e.space
    mat = e.matrix()
    P = generate_submodule(p_seed(d), n, space)
    Q = generate_submodule(q_seed(d), n, space)
    idem = all(e(col) == col for col in mat)
    image = subspace_ops(mat, P)
    p_fixed = all(e(v) == v for v in P)
    q_killed = all(not e(v) for v in Q)
    return {"well_defined": e.well_defined, "spans": e.spans, "idempotent": idem,
            "image_is_P": image[0] == image[1] == image[2], "fixes_P": p_fixed, "kills_Q": q_killed}


def suite_decomp(cases_dn=DIRECT_SUM_CASES, max_identity_d: int = 3) -> List[Case]:
    out = []
    for d, n in cases_dn:
        out.append(run_case(f"direct_sum d={d},n={n}", True, lambda d=d, n=n: verify_direct_sum(d, n)["pass"]))
    for d in range(1, max_identity_d + 1):
        out.append(run_case(f"identity c-σc=τQ d={d}", True, lambda d=d: all(check_transposition_identity(d).values())))
    for d in range(2, max_identity_d + 1):
        for lam in partition_list(d):
            if tuple(lam) == (d,):
                continue
            out.append(run_case(f"Q_{lam} in A_{d}Q({2 * d})", True,
                                lambda lam=lam, d=d: seed_in_arc_permutation_span(q_lambda_seed(lam), q_seed(d), d)))
    out.append(run_case("e_n d=2,n=2", {k: True for k in ("well_defined", "spans", "idempotent", "image_is_P",
                                                         "fixes_P", "kills_Q")}, lambda: en_checks(2, 2)))
    return out


def expected_wavy(n: int):
    if n <= 2:
        return []
    arrows = list(WAVY_ARROWS_D3)
    if n == 3:
        hook = Partition((2, 1, 1, 1))
        arrows = [a for a in arrows if not ((a[0] == hook and a[1] == 1) or (a[2] == hook and a[3] == 1))]
    return sorted(arrows)


def fmt_arrows(arrows) -> List[str]:
    return [f"{a}@{k} ~> {b}@{l}" for a, k, b, l in sorted(arrows)]


def suite_wavy(ns: Iterable[int] = (1, 2, 3, 4), rho_degrees: Iterable[int] = (3, 4)) -> List[Case]:
    out = []
    for n in ns:
        out.append(run_case(f"table d=3,n={n}", fmt_arrows(expected_wavy(n)),
                            lambda n=n: fmt_arrows(component_map_table(3, n))))
    for d in rho_degrees:
        for idx, n in enumerate(RHO_THRESHOLDS[d], 1):
            lam, mu = RHO_MAPS[d][idx - 1]

            def compute(d=d, idx=idx, n=n):
                w = rho_witness(d, idx, n)
                if w is None:
                    return "zero"
                return f"nonzero via {w['generator']}, leading coefficient {w['leading_coefficient']}"

            out.append(run_case(f"rho{idx} d={d},n={n} {Partition(lam)}->{Partition(mu)}", "nonzero", compute,
                                compare=lambda e, a: a.startswith("nonzero")))
    return out


def suite_gd(max_d: int = 12) -> List[Case]:
    out = []
    for d in range(2, max_d + 1):
        out.append(run_case(f"G_{d} connected", True, lambda d=d: is_connected(build_Gd(d))))
    for d, edges in sorted(GD_EDGES.items()):
        exp = sorted(f"{a}-{b}" for a, b in edges)
        out.append(run_case(f"G_{d} edges", exp, lambda d=d: sorted(f"{a}-{b}" for a, b in build_Gd(d).edges)))
    return out


# ---------------------------------------------------------------- johnson

def johnson_checks(seed: int = 0, samples: int = 50) -> Dict[str, bool]:
    rng = random.Random(seed)
    tau_ok = True
    for n in (3, 4):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    if len({i, j, k}) < 3:
                        continue
                    a, b, s = (j, k, 1) if j < k else (k, j, -1)
                    if johnson_hom(k_generator(i, j, k, n=n), 1) != JohnsonValue(n, 1, {(i, (a, b)): s}):
                        tau_ok = False
    round_trip = True
    for _ in range(samples):
        n, r = rng.randint(2, 3), rng.randint(1, 3)
        phi = random_johnson_value(rng, n, r)
        if johnson_hom(tau_section(phi), r) != phi:
            round_trip = False
    inverse_ok = True
    involution_ok = True
    # right-inverse words grow geometrically in N, so N stays small
    checks = [(k_generator(1, 2, 3, n=3), 1, 6), (k_generator(2, 1, n=2), 1, 4)]
    for _ in range(10):
        n, r = rng.randint(2, 3), rng.randint(1, 2)
        checks.append((tau_section(random_johnson_value(rng, n, r, terms=1)), r, r + 2))
    for f, r, top in checks:
        for N in range(r + 1, top + 1):
            if andreadakis_level(compose(f, right_inverse(f, r, N)), N) < N:
                inverse_ok = False
        st = sigma_tilde(f)
        if sigma_tilde(st) != f or johnson_hom(st, r) != -johnson_hom(f, r):
            involution_ok = False
    return {"tau1_K_ijk": tau_ok, "tau_section_round_trip": round_trip,
            "right_inverse_levels": inverse_ok, "sigma_involution": involution_ok}


def suite_johnson(seed: int = 0, samples: int = 50) -> List[Case]:
    results: Dict[str, bool] = {}

    def get(name):
        if not results:
            results.update(johnson_checks(seed, samples))
        return results[name]

    return [run_case(name, True, lambda name=name: get(name))
            for name in ("tau1_K_ijk", "tau_section_round_trip", "right_inverse_levels", "sigma_involution")]


SUITES = {
    "fbn": suite_fbn,
    "p531": suite_p531,
    "pdecompgen": suite_pdecompgen,
    "th521": suite_th521,
    "th91": suite_th91,
    "th731": suite_th731,
    "surj": suite_surj,
    "decomp": suite_decomp,
    "wavy": suite_wavy,
    "gd": suite_gd,
    "johnson": suite_johnson,
}

"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import json
import time
from math import factorial

import pytest

from amsym.am import exactly_three_condition, restriction_constituents
from amsym.blocks import BlockId, irr_block, triangular
from amsym.characters import centralizer_order, degree, mn_value, restrict_to_young
from amsym.cli import main
from amsym.partitions import (
    BetaSet,
    HookShape,
    beta_hook_moves,
    from_beta_set,
    is_core,
    partitions_of,
    remove_cells,
    remove_rim_hook,
    rim_hook_cells,
    rim_hooks,
    to_beta_set,
    wrap_hook,
)
from amsym.verify import SweepConfig, VerificationResult, run

EXPECTED_TABLE = [
    ("[8,1]", "([4],[2])", "(0,0)"),
    ("[4,3,2]", "([3,1],[2])", "(1,0)"),
    ("[4,2,2,1]", "([2,1,1],[2])", "(2,0)"),
    ("[4,1,1,1,1,1]", "([1,1,1,1],[2])", "(3,0)"),
    ("[6,1,1,1]", "([4],[1,1])", "(0,1)"),
    ("[4,3,1,1]", "([3,1],[1,1])", "(1,1)"),
    ("[3,3,2,1]", "([2,1,1],[1,1])", "(2,1)"),
    ("[2,1,1,1,1,1,1,1]", "([1,1,1,1],[1,1])", "(3,1)"),
]


@pytest.fixture
def report(capsys):
    def emit(name: str, ok: bool, elapsed: float, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name} ({elapsed:.2f}s) {detail}".rstrip())

    return emit


def _sweep(name: str, theorem: str, limit: float, report, **cfg) -> VerificationResult:
    start = time.perf_counter()
    res = run(theorem, SweepConfig(**cfg))
    elapsed = time.perf_counter() - start
    detail = f"{res.cases} cases, {len(res.failures)} failures"
    if res.failures:
        detail += "; first: " + json.dumps(res.failures[0])[:300]
    report(name, res.passed and elapsed < limit, elapsed, detail)
    assert res.failures == [], res.failures
    assert elapsed < limit
    return res


def test_c1_example_table(report, capsys):
    start = time.perf_counter()
    code = main(["am-table", "--core", "2,1", "--w", "3", "--format", "tsv"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    rows = [tuple(line.split("\t")[:3]) for line in out.strip().splitlines()[1:]]
    ok = code == 0 and rows == EXPECTED_TABLE and elapsed < 1.0
    report("1 example table B((2,1),3)", ok, elapsed, f"{len(rows)} rows")
    assert rows == EXPECTED_TABLE
    assert elapsed < 1.0


def test_c2_height_zero_count(report):
    _sweep("2 |Irr_0(B)| = 2^(w_1+...+w_t), 4 <= n <= 16", "cor32", 60, report, max_n=16)


def test_c3_star_is_a_constituent(report):
    _sweep("3 chi* occurs in the restriction to N, n <= 12", "t36", 600, report, max_n=12)


def test_c4_algebraic_equals_combinatorial(report):
    _sweep("4 chi** = chi*, n <= 12", "t37", 600, report, max_n=12)


def test_c5_restriction_uniqueness(report):
    _sweep("5 non-principal restriction counts, n <= 12", "t39", 600, report, max_n=12)


def _non_principal_reports(max_weight: int = 6):
    # every non-principal core with n <= 22, i.e. cores (2,1), (3,2,1), (4,3,2,1), and 2w <= 12
    for s in (2, 3, 4):
        for w in range(1, max_weight + 1):
            for lam in irr_block(BlockId(triangular(s), w)):
                yield restriction_constituents(lam, with_star_star=False)


def test_c6a_category_bounds(report):
    start = time.perf_counter()
    reports = list(_non_principal_reports())
    bad = [r.to_json() for r in reports if r.checks["p312"] == "fail"]
    elapsed = time.perf_counter() - start
    report("6a category lower bounds (two / >= three / >= four), 2w <= 12", not bad, elapsed,
           f"{len(reports)} cases, {len(bad)} failures")
    assert bad == []


def test_c6b_exactly_three(report):
    start = time.perf_counter()
    reports = [r for r in _non_principal_reports() if r.checks["c315"] != "na"]
    bad = [
        {"lambda": list(r.lam), "block": str(r.block), "count": r.count,
         "with_multiplicity": sum(r.constituents.values())}
        for r in reports
        if (r.count == 3) != exactly_three_condition(r.lam)
    ]
    elapsed = time.perf_counter() - start
    report("6b count = 3 iff w = 2 and rows or cols^t is (2,2), 2w <= 12", not bad, elapsed,
           f"{len(reports)} cases, {len(bad)} failures {json.dumps(bad)[:400]}")
    assert bad == []


def test_c7a_trivial_in_near_hook(report):
    _sweep("7a phi^(2^k) occurs in (2^k-2,2) on P_(2^k), k = 2,3,4", "l313", 120, report, ks=(2, 3, 4))


def test_c7b_four_linear_constituents(report):
    _sweep("7b at least four linear constituents of (2^k-2,2), k = 3,4", "l314", 120, report, ks=(3, 4))


def test_c8_sylow_linear_constituents(report):
    _sweep("8 linear constituents on a Sylow 2-subgroup, n <= 16", "p39G", 600, report, max_n=16)


def _orthogonality(n_max: int) -> bool:
    for n in range(1, n_max + 1):
        parts = list(partitions_of(n))
        cols = {t: [mn_value(lam, t) for lam in parts] for t in parts}
        for t in parts:
            for u in parts:
                s = sum(a * b for a, b in zip(cols[t], cols[u]))
                if s != (centralizer_order(t) if t == u else 0):
                    return False
        if sum(d * d for d in cols[(1,) * n]) != factorial(n):
            return False
    return True


def _lr_identities(n_max: int) -> bool:
    for n in range(n_max + 1):
        for gamma in partitions_of(n):
            for a in range(n + 1):
                rest = restrict_to_young(gamma, a)
                mirror = restrict_to_young(gamma, n - a)
                if any(mirror.get((nu, mu), 0) != c for (mu, nu), c in rest.items()):
                    return False
                if sum(c * degree(mu) * degree(nu) for (mu, nu), c in rest.items()) != degree(gamma):
                    return False
    return True


def _removal_agrees(n_max: int, e_max: int) -> bool:
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            for e in range(1, e_max + 1):
                beads = to_beta_set(lam, len(lam) + 1)
                by_beta = sorted(
                    (tuple(from_beta_set(BetaSet(sorted((x - e if x == bead else x for x in beads.betas), reverse=True)))), leg)
                    for bead, leg in beta_hook_moves(beads, e)
                )
                by_cells = sorted(
                    (tuple(remove_cells(lam, rim_hook_cells(lam, h))), h.leg) for h in rim_hooks(lam, e)
                )
                if by_beta != by_cells:
                    return False
    return True


def _round_trips(n_max: int, e_max: int) -> bool:
    for e in range(1, e_max + 1):
        for n in range(n_max + 1):
            for base in partitions_of(n):
                if not is_core(base, e):
                    continue
                for leg in range(e):
                    lam = wrap_hook(base, HookShape(e, leg))
                    back = [h for h in rim_hooks(lam, e) if remove_rim_hook(lam, h) == base]
                    if len(back) != 1 or back[0].leg != leg:
                        return False
    return True


def test_c9_property_suites(report):
    start = time.perf_counter()
    checks = {
        "orthogonality n<=9": _orthogonality(9),
        "LR symmetry and degree sums |gamma|<=10": _lr_identities(10),
        "abacus vs diagram removal |lambda|<=15": _removal_agrees(15, 8),
        "wrap/remove round trips |base|<=12": _round_trips(12, 8),
    }
    elapsed = time.perf_counter() - start
    ok = all(checks.values()) and elapsed < 300
    report("9 property suites", ok, elapsed, ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items()))
    assert all(checks.values()), checks
    assert elapsed < 300

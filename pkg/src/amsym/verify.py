"""Exhaustive verification sweeps, one per theorem id."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .am import am_star, restriction_constituents
from .blocks import blocks_of, height_zero, irr_block, is_power_of_two
from .characters import degree
from .partitions import HookShape, Partition, partitions_of
from .sylow2 import DEFAULT_BUDGET, K_MAX, ProductSylow, linear_multiplicities


@dataclass
class SweepConfig:
    max_n: int = 12
    k_max: int = K_MAX
    threads: int = 1
    budget: int = DEFAULT_BUDGET
    ks: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.max_n < 4:
            raise ValueError("max_n must be at least 4")


@dataclass
class VerificationResult:
    theorem: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "notes": self.notes,
        }


def _map(cfg: SweepConfig, fn, items):
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _block_members(cfg: SweepConfig, principal: bool = True):
    out = []
    for n in range(1, cfg.max_n + 1):
        for B in blocks_of(n):
            if B.weight == 0 or (not principal and B.is_principal):
                continue
            if ProductSylow(B.levels).order > cfg.budget:
                continue
            out.extend(irr_block(B))
    return out


def verify_cor32(cfg: SweepConfig) -> VerificationResult:
    res = VerificationResult("cor32")
    for n in range(4, cfg.max_n + 1):
        for B in blocks_of(n):
            res.cases += 1
            got = len(height_zero(B))
            want = 2 ** sum(B.levels)
            if got != want:
                res.failures.append({"block": str(B), "height_zero": got, "expected": want})
    return res


def verify_t35(cfg: SweepConfig) -> VerificationResult:
    res = VerificationResult("t35")
    for n in range(1, cfg.max_n + 1):
        for B in blocks_of(n):
            if B.weight == 0:
                continue
            res.cases += 1
            labels = [am_star(lam) for lam in height_zero(B)]
            if len(set(labels)) != len(labels) or len(labels) != 2 ** sum(B.levels):
                res.failures.append({"block": str(B), "labels": len(set(labels))})
    return res


def _report_sweep(theorem: str, keys: tuple[str, ...], principal: bool):
    def run(cfg: SweepConfig) -> VerificationResult:
        res = VerificationResult(theorem)
        needs_star_star = "t37" in keys

        def one(lam: Partition):
            return restriction_constituents(
                lam, budget=cfg.budget, k_max=cfg.k_max, with_star_star=needs_star_star
            )

        for report in _map(cfg, one, _block_members(cfg, principal)):
            verdicts = [report.checks[k] for k in keys]
            if all(v == "na" for v in verdicts):
                continue
            res.cases += 1
            if "fail" in verdicts:
                res.failures.append(report.to_json())
        return res

    return run


verify_t36 = _report_sweep("t36", ("t36",), principal=True)
verify_t37 = _report_sweep("t37", ("t37",), principal=True)
verify_t39 = _report_sweep("t39", ("t39i", "t39ii"), principal=False)
verify_p312 = _report_sweep("p312", ("p312",), principal=False)
verify_c315 = _report_sweep("c315", ("c315",), principal=False)


def _near_hook_levels(cfg: SweepConfig, default: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(k for k in (cfg.ks or default) if k <= cfg.k_max)


def verify_l313(cfg: SweepConfig) -> VerificationResult:
    """The trivial character of ``P_{2^k}`` occurs in ``(2^k - 2, 2)`` restricted."""
    res = VerificationResult("l313")
    for k in _near_hook_levels(cfg, (2, 3, 4)):
        if k < 2:
            continue
        res.cases += 1
        lam = ((1 << k) - 2, 2)
        mults = linear_multiplicities(lam, k, budget=max(cfg.budget, 1 << 15), k_max=cfg.k_max)
        top = mults[(HookShape(1 << k, 0),)]
        res.notes.append(f"k={k}: multiplicity of the trivial character is {top}")
        if top < 1:
            res.failures.append({"k": k, "lambda": list(lam), "multiplicity": top})
    return res


def verify_l314(cfg: SweepConfig) -> VerificationResult:
    """At least four distinct linear characters in ``(2^k - 2, 2)`` restricted to ``P_{2^k}``."""
    res = VerificationResult("l314")
    for k in _near_hook_levels(cfg, (3, 4)):
        if k < 3:
            continue
        res.cases += 1
        lam = ((1 << k) - 2, 2)
        mults = linear_multiplicities(lam, k, budget=max(cfg.budget, 1 << 15), k_max=cfg.k_max)
        nonzero = {str(s[0]): m for s, m in mults.items() if m}
        with_mult = sum(nonzero.values())
        res.notes.append(
            f"k={k}: {len(nonzero)} distinct linear constituents, {with_mult} with multiplicity: {nonzero}"
        )
        if len(nonzero) < 4:
            res.failures.append(
                {"k": k, "lambda": list(lam), "distinct": len(nonzero),
                 "with_multiplicity": with_mult, "constituents": nonzero}
            )
    return res


def verify_p39g(cfg: SweepConfig) -> VerificationResult:
    """Linear constituents on a Sylow 2-subgroup: always one; exactly one iff degree 1, or odd degree and n a power of 2."""
    res = VerificationResult("p39G")
    for n in range(1, min(cfg.max_n, 1 << cfg.k_max) + 1):
        P = ProductSylow.for_degree(n)
        if P.order > max(cfg.budget, 1 << 15):
            continue

        def one(lam: Partition):
            mults = linear_multiplicities(lam, P, budget=max(cfg.budget, 1 << 15), k_max=cfg.k_max)
            return lam, sum(1 for m in mults.values() if m)

        for lam, count in _map(cfg, one, list(partitions_of(n))):
            res.cases += 1
            d = degree(lam)
            unique_expected = d == 1 or (d % 2 == 1 and is_power_of_two(n))
            ok = count >= 1 and (count == 1) == unique_expected and (d % 2 == 1 or count >= 2)
            if is_power_of_two(n):
                ok = ok and (count == 1) == lam.is_hook()
            if not ok:
                res.failures.append({"lambda": list(lam), "degree": d, "linear_constituents": count})
    return res


VERIFIERS: dict[str, Callable[[SweepConfig], VerificationResult]] = {
    "cor32": verify_cor32,
    "t35": verify_t35,
    "t36": verify_t36,
    "t37": verify_t37,
    "t39": verify_t39,
    "p312": verify_p312,
    "c315": verify_c315,
    "l313": verify_l313,
    "l314": verify_l314,
    "p39G": verify_p39g,
}


def run(theorem: str, cfg: SweepConfig | None = None) -> VerificationResult:
    if theorem not in VERIFIERS:
        raise KeyError(theorem)
    return VERIFIERS[theorem](cfg or SweepConfig())


__all__ = ["SweepConfig", "VERIFIERS", "VerificationResult", "run"]
